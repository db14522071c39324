"""Name-indexed registry of the shipped problems, as used by the command line."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Optional

from . import backdoors, chordal, cluster, minones, triangle
from . import closest_string as cstring
from .cnf import BASE_CLASSES
from .core import Problem
from .graphs import GraphInstance, GraphOp
from .io import loads_cnf, loads_graph, loads_strings


@dataclass(frozen=True)
class ProblemEntry:
    name: str
    problem: Problem
    # (file text, k or None, class name) -> instance
    load: Callable[[str, Optional[int], str], Any]
    op_name: Optional[str] = None   # for integer-valued operations
    needs_k: bool = True

    def op_to_json(self, t) -> dict:
        if isinstance(t, GraphOp):
            return {"op": t.name, "args": list(t.endpoints)}
        return {"op": self.op_name, "args": [t]}

    def op_from_json(self, obj: dict):
        if self.op_name is None:
            return GraphOp.from_name(obj["op"], obj["args"])
        if obj["op"] != self.op_name or len(obj["args"]) != 1:
            raise ValueError(f"not a {self.op_name} operation: {obj!r}")
        return int(obj["args"][0])

    def format_op(self, t) -> str:
        return self.problem.contract.format_op(t)


def _graph_loader(text, k, cls_name):
    return GraphInstance(loads_graph(text), k)


def _strings_loader(text, k, cls_name):
    x = loads_strings(text)
    if k is not None:
        x = cstring.StringInstance(x.strings, k)
    return x


def _backdoor_loader(mode):
    def load(text, k, cls_name):
        return backdoors.BackdoorInstance(loads_cnf(text, max_width=3), k,
                                          BASE_CLASSES[cls_name], mode)
    return load


def _minones_loader(text, k, cls_name):
    return minones.MinOnesInstance(loads_cnf(text), k)


REGISTRY = {
    e.name: e
    for e in (
        ProblemEntry("cluster-editing", cluster.PROBLEM, _graph_loader),
        ProblemEntry("chordal-completion", chordal.PROBLEM, _graph_loader),
        ProblemEntry("triangle-deletion", triangle.PROBLEM, _graph_loader),
        ProblemEntry("closest-string", cstring.PROBLEM, _strings_loader, "flip", needs_k=False),
        ProblemEntry("weak-backdoor", backdoors.WEAK_PROBLEM, _backdoor_loader(backdoors.WEAK), "var"),
        ProblemEntry("strong-backdoor", backdoors.STRONG_PROBLEM, _backdoor_loader(backdoors.STRONG), "var"),
        ProblemEntry("minones", minones.PROBLEM, _minones_loader, "true"),
    )
}
