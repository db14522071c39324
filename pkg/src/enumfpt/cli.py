"""Command line front end.

    enumfpt <problem> --input FILE -k INT [--mode all|min] [--limit N]
            [--class horn|2cnf] [--stats] [--oracle-check] [--format text|json-lines]

Exit status: 0 on success, 1 when ``--oracle-check`` finds a divergence,
2 on parse or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .core import solution_key
from .errors import EnumFPTError, InstanceTooLarge
from .oracle import brute_force
from .problems import REGISTRY, ProblemEntry
from .timing import DelayReport, timed

EXIT_OK, EXIT_DIVERGENCE, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    problem: str
    input: str
    k: Optional[int] = None
    mode: str = "all"
    limit: Optional[int] = None
    oracle_check: bool = False
    stats: bool = False
    cls: str = "horn"
    format: str = "text"

    def __post_init__(self):
        if self.problem not in REGISTRY:
            raise ValueError(f"unknown problem {self.problem!r}")
        if self.k is not None and self.k < 0:
            raise ValueError("the parameter must be non-negative")
        if self.k is None and REGISTRY[self.problem].needs_k:
            raise ValueError(f"{self.problem} needs -k")
        if self.limit is not None and self.limit < 1:
            raise ValueError("--limit must be at least 1")
        if self.mode not in ("all", "min"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.format not in ("text", "json-lines"):
            raise ValueError(f"unknown format {self.format!r}")


def _sorted_ops(s, entry: ProblemEntry):
    enc = entry.problem.contract.encode_op
    return sorted(s, key=enc)


def format_text(s, entry: ProblemEntry) -> str:
    if not s:
        return "0 {}"
    return f"{len(s)} " + ",".join(entry.format_op(t) for t in _sorted_ops(s, entry))


def format_json(s, entry: ProblemEntry) -> str:
    obj = {"size": len(s), "ops": [entry.op_to_json(t) for t in _sorted_ops(s, entry)]}
    return json.dumps(obj, separators=(",", ":"))


def parse_json(line: str, entry: ProblemEntry) -> frozenset:
    obj = json.loads(line)
    s = frozenset(entry.op_from_json(o) for o in obj["ops"])
    if len(s) != obj["size"]:
        raise ValueError("size field disagrees with the operation list")
    return s


def parse_instance(path: str, problem: str, k: Optional[int] = None, cls: str = "horn"):
    entry = REGISTRY[problem]
    with open(path) as fh:
        text = fh.read()
    return entry.load(text, k, cls)


def run(config: RunConfig, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    entry = REGISTRY[config.problem]
    try:
        x = parse_instance(config.input, config.problem, config.k, config.cls)
    except OSError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except EnumFPTError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE

    contract = entry.problem.contract
    expected = None
    if config.oracle_check:
        try:
            res = brute_force(contract, x)
        except InstanceTooLarge as e:
            print(f"error: {e}", file=err)
            return EXIT_USAGE
        expected = res.all if config.mode == "all" else res.minimal

    if config.mode == "all":
        stream = entry.problem.enumerate_all(x)
    else:
        stream = iter(entry.problem.enumerate_min(x))

    fmt = format_text if config.format == "text" else format_json
    report = DelayReport()
    status = EXIT_OK
    emitted = 0
    prev = None
    for s in timed(stream, report, config.limit):
        key = solution_key(s, contract)
        if prev is not None and key < prev:
            print(f"error: output out of order at solution {emitted + 1}", file=err)
            status = EXIT_DIVERGENCE
        prev = key
        if expected is not None and (emitted >= len(expected) or expected[emitted] != s):
            print(f"divergence at solution {emitted + 1}: got {format_text(s, entry)}, "
                  f"oracle has "
                  f"{format_text(expected[emitted], entry) if emitted < len(expected) else 'nothing'}",
                  file=err)
            out.flush()
            return EXIT_DIVERGENCE
        print(fmt(s, entry), file=out)
        emitted += 1
    if expected is not None and config.limit is None and emitted != len(expected):
        print(f"divergence: emitted {emitted} solutions, oracle has {len(expected)}", file=err)
        status = EXIT_DIVERGENCE

    if config.stats:
        print(f"c solutions {report.count}", file=err)
        print(f"c max_delay {report.max_delay:.6f}", file=err)
        print("c delays " + " ".join(f"{d:.6f}" for d in report.delays), file=err)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="enumfpt",
                                description="Ordered enumeration of parameterized solutions.")
    p.add_argument("problem", choices=sorted(REGISTRY))
    p.add_argument("--input", required=True, help="instance file")
    p.add_argument("-k", type=int, help="parameter (for closest-string: overrides d)")
    p.add_argument("--mode", choices=("all", "min"), default="all")
    p.add_argument("--limit", type=int)
    p.add_argument("--class", dest="cls", choices=("horn", "2cnf"), default="horn")
    p.add_argument("--stats", action="store_true", help="print a delay report to stderr")
    p.add_argument("--oracle-check", action="store_true",
                   help="compare against brute force and fail on the first divergence")
    p.add_argument("--format", choices=("text", "json-lines"), default="text")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        config = RunConfig(args.problem, args.input, args.k, args.mode, args.limit,
                           args.oracle_check, args.stats, args.cls, args.format)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
