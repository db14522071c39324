"""Wall-clock delay measurement for enumeration streams."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional


@dataclass
class DelayReport:
    """``delays[0]`` is the precalculation time, ``delays[-1]`` the postcalculation
    time, and ``delays[i]`` the gap between the i-th and (i+1)-st output."""

    delays: List[float] = field(default_factory=list)

    @property
    def count(self) -> int:
        return max(len(self.delays) - 1, 0)

    @property
    def max_delay(self) -> float:
        return max(self.delays, default=0.0)

    def as_dict(self) -> dict:
        return {"solutions": self.count, "max_delay": self.max_delay, "delays": self.delays}


def timed(stream: Iterable, report: DelayReport, limit: Optional[int] = None) -> Iterator:
    """Pass ``stream`` through while recording delays into ``report``.

    Time spent by the consumer between items is not charged to the stream.
    """
    it = iter(stream)
    emitted = 0
    while True:
        if limit is not None and emitted >= limit:
            report.delays.append(0.0)
            return
        t0 = time.perf_counter()
        try:
            item = next(it)
        except StopIteration:
            report.delays.append(time.perf_counter() - t0)
            return
        report.delays.append(time.perf_counter() - t0)
        emitted += 1
        yield item


def measure(stream: Iterable, limit: Optional[int] = None):
    """Drain ``stream`` and return ``(items, DelayReport)``."""
    report = DelayReport()
    items = list(timed(stream, report, limit))
    return items, report
