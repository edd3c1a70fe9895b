"""Distance invariants: BFS rows, total distance, transmission, diameter,
and the per-vertex deletion-delta report.

Distances count hyperedge steps: one step moves between any two vertices
sharing an edge, so every value agrees with ordinary BFS on the
2-section.  BFS runs on the incidence structure directly; the 2-section
is never materialized.

Disconnected totals are reported as ``None``, never as a sentinel
number: the deletion-invariance definition requires finiteness.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .hypergraph import Hypergraph, delete_vertex


@dataclass(frozen=True)
class DistanceRow:
    source: int
    dist: tuple[Optional[int], ...]  # None marks unreachable vertices


@dataclass(frozen=True)
class DeltaRow:
    v: int
    w_minus: Optional[int]  # None when the deletion disconnects
    delta: Optional[int]


@dataclass(frozen=True)
class DeltaReport:
    w: Optional[int]
    rows: tuple[DeltaRow, ...]
    verdict: bool


def distances_from(h: Hypergraph, v: int) -> DistanceRow:
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range [0, {h.n})")
    raw = _kernels.bfs_distances(h, v)
    return DistanceRow(v, tuple(None if d < 0 else int(d) for d in raw))


def wiener(h: Hypergraph) -> Optional[int]:
    """Sum of distances over unordered vertex pairs; None if disconnected."""
    if h.n == 1:
        return 0
    rowsum, _, reach = _kernels.all_sources_stats(h)
    if int(reach.min()) < h.n:
        return None
    return int(rowsum.sum()) // 2


def transmission(h: Hypergraph, v: int) -> Optional[int]:
    """Sum of distances from v to every other vertex; None if some vertex
    is unreachable from v."""
    row = distances_from(h, v)
    if any(d is None for d in row.dist):
        return None
    return sum(row.dist) # type: ignore[arg-type]


def diameter(h: Hypergraph) -> Optional[int]:
    if h.n == 1:
        return 0
    rowsum, ecc, reach = _kernels.all_sources_stats(h)
    if int(reach.min()) < h.n:
        return None
    return int(ecc.max())


def delta_report(h: Hypergraph, jobs: Optional[int] = None) -> DeltaReport:
    """W(H) and, per vertex, W(H \\ v) with its delta.

    The verdict is True iff H is connected, has at least 2 vertices, and
    every deletion stays connected with delta zero.  (A single vertex is
    never accepted, by convention.)
    """
    w = wiener(h)
    if h.n == 1:
        # deleting the sole vertex leaves nothing to measure
        return DeltaReport(w, (DeltaRow(0, None, None),), False)

    def one(v: int) -> DeltaRow:
        wm = wiener(delete_vertex(h, v))
        return DeltaRow(v, wm, None if (w is None or wm is None) else w - wm)

    if jobs and jobs > 1 and h.n > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = tuple(pool.map(one, range(h.n)))
    else:
        rows = tuple(one(v) for v in range(h.n))
    verdict = (
        w is not None
        and h.n >= 2
        and all(r.w_minus is not None and r.delta == 0 for r in rows)
    )
    return DeltaReport(w, rows, verdict)


def is_soltes(h: Hypergraph, jobs: Optional[int] = None) -> bool:
    """True iff the total distance survives every single-vertex deletion."""
    return delta_report(h, jobs=jobs).verdict
