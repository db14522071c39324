"""Readers and writers for the DIMACS graph, DIMACS CNF and string-set formats."""

from __future__ import annotations

from .closest_string import StringInstance
from .cnf import CnfFormula
from .errors import InvariantViolation, ParseError
from .graphs import Graph


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def loads_graph(text: str) -> Graph:
    """``p edge <n> <m>`` then ``m`` lines ``e <u> <v>`` with ids 1..n."""
    n = m = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("expected 'p edge <n> <m>'", lineno)
            n, m = _int(parts[2], lineno), _int(parts[3], lineno)
            if n < 0 or m < 0:
                raise ParseError("negative counts", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e <u> <v>'", lineno)
            u, v = _int(parts[1], lineno), _int(parts[2], lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"vertex out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop on vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise ParseError(f"unknown line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Graph.from_edges(edges, range(1, n + 1))


def dumps_graph(g: Graph) -> str:
    n = max(g.vertices, default=0)
    if set(g.vertices) != set(range(1, n + 1)):
        raise ValueError("DIMACS output needs vertices 1..n")
    lines = [f"p edge {n} {len(g.edges)}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def loads_cnf(text: str, max_width: int = None) -> CnfFormula:
    """DIMACS CNF; clauses are zero-terminated and may span lines."""
    nvars = ncl = None
    clauses = []
    cur: list = []
    cur_line = None
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        if parts[0] == "%":
            break
        if parts[0] == "p":
            if nvars is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", lineno)
            nvars, ncl = _int(parts[2], lineno), _int(parts[3], lineno)
            if nvars < 0 or ncl < 0:
                raise ParseError("negative counts", lineno)
            continue
        if nvars is None:
            raise ParseError("clause before problem line", lineno)
        for tok in parts:
            lit = _int(tok, lineno)
            if lit == 0:
                clauses.append((cur, cur_line or lineno))
                cur, cur_line = [], None
                continue
            if abs(lit) > nvars:
                raise ParseError(f"literal {lit} outside 1..{nvars}", lineno)
            if cur_line is None:
                cur_line = lineno
            cur.append(lit)
    if nvars is None:
        raise ParseError("missing problem line")
    if cur:
        raise ParseError("last clause is not terminated by 0", cur_line)
    if len(clauses) != ncl:
        raise ParseError(f"header declares {ncl} clauses, found {len(clauses)}")
    out = []
    for lits, lineno in clauses:
        c = frozenset(lits)
        if any(-lit in c for lit in c):
            raise InvariantViolation(f"line {lineno}: clause contains x and -x")
        if max_width is not None and len(c) > max_width:
            raise InvariantViolation(f"line {lineno}: clause width {len(c)} > {max_width}")
        out.append(c)
    return CnfFormula(frozenset(range(1, nvars + 1)), tuple(out))


def dumps_cnf(phi: CnfFormula) -> str:
    n = max(phi.variables, default=0)
    lines = [f"p cnf {n} {len(phi.clauses)}"]
    for c in phi.clauses:
        lines.append(" ".join(str(lit) for lit in sorted(c, key=lambda x: (abs(x), x))) + " 0")
    return "\n".join(lines) + "\n"


def loads_strings(text: str) -> StringInstance:
    """First line ``<k> <n> <d>``, then ``k`` lines of ``n`` characters over {0,1}."""
    rows = [(i, line.strip()) for i, line in enumerate(text.splitlines(), 1)
            if line.strip() and not line.startswith("c ")]
    if not rows:
        raise ParseError("empty input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 3:
        raise ParseError("expected '<k> <n> <d>'", lineno)
    k, n, d = (_int(p, lineno) for p in parts)
    if k < 1 or n < 1 or d < 0:
        raise ParseError("k and n must be positive, d non-negative", lineno)
    body = rows[1:]
    if len(body) != k:
        raise ParseError(f"header declares {k} strings, found {len(body)}")
    strings = []
    for lineno, s in body:
        if set(s) - {"0", "1"}:
            raise ParseError(f"non-binary string {s!r}", lineno)
        if len(s) != n:
            raise InvariantViolation(f"line {lineno}: string length {len(s)} != {n}")
        strings.append(s)
    return StringInstance(tuple(strings), d)


def dumps_strings(x: StringInstance) -> str:
    lines = [f"{len(x.strings)} {x.n} {x.d}", *x.strings]
    return "\n".join(lines) + "\n"
