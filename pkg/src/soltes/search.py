"""Exhaustive searches: small-order uniqueness, the size-5 antichain
sweep, and the 3-uniform diameter-1 impossibility check.

All sweeps enumerate deterministic candidate ranges; with jobs > 1 the
ranges run on a thread pool (the compiled kernels release the GIL) and
results merge in range order, so witness lists are stable across thread
counts.  Every witness a kernel reports is re-verified by the plain
delta-report oracle before it enters a report.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .hypergraph import Hypergraph, degrees, incidence_sets, is_isomorphic
from .metrics import is_soltes


@dataclass
class SearchReport:
    domain: str
    examined: int
    witnesses: list[Hypergraph]
    elapsed: float
    stats: dict = field(default_factory=dict)


def default_jobs() -> int:
    env = os.environ.get("SOLTES_JOBS", "").strip()
    if env.isdigit() and int(env) > 0:
        return int(env)
    return 1


def _candidate_edges(n: int, sizes: Optional[Iterable[int]] = None) -> list[int]:
    """Bitmasks of all allowed hyperedges, ordered by size then value."""
    wanted = set(sizes) if sizes is not None else None
    masks = []
    for r in range(2, n + 1):
        if wanted is not None and r not in wanted:
            continue
        for combo in itertools.combinations(range(n), r):
            masks.append(sum(1 << v for v in combo))
    masks.sort(key=lambda m: (bin(m).count("1"), m))
    return masks


def _mask_to_edge(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if (mask >> v) & 1)


def _subset_to_hypergraph(n: int, emasks: list[int], s: int) -> Hypergraph:
    edges = [_mask_to_edge(emasks[j], n) for j in range(len(emasks)) if (s >> j) & 1]
    return Hypergraph(n, tuple(sorted(edges)))


def _sweep_chunked(n, emasks, total, need_diam1, jobs):
    nchunks = max(1, jobs * 8) if jobs > 1 else 1
    step = -(-total // nchunks)
    ranges = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(
                pool.map(
                    lambda r: _kernels.sweep_soltes(n, emasks, r[0], r[1],
                                                    need_diam1),
                    ranges,
                )
            )
    else:
        parts = [
            _kernels.sweep_soltes(n, emasks, lo, hi, need_diam1)
            for lo, hi in ranges
        ]
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return out


def _dedupe(witnesses: list[Hypergraph]) -> list[Hypergraph]:
    kept: list[Hypergraph] = []
    for w in witnesses:
        if not any(is_isomorphic(w, k) for k in kept):
            kept.append(w)
    return kept


def search_by_order(n: int, jobs: Optional[int] = None) -> SearchReport:
    """Every deletion-invariant hypergraph on n labeled vertices, up to
    isomorphism, by full enumeration over all 2^(2^n - n - 1) edge subsets."""
    if not 2 <= n <= 6:
        raise ValueError("full order enumeration supported for 2 <= n <= 6")
    jobs = jobs or default_jobs()
    emasks = _candidate_edges(n)
    total = 1 << len(emasks)
    t0 = time.perf_counter()
    hits = _sweep_chunked(n, emasks, total, False, jobs)
    labeled = [_subset_to_hypergraph(n, emasks, s) for s in hits]
    verified = [h for h in labeled if is_soltes(h)]
    if len(verified) != len(labeled):  # pragma: no cover - kernel/oracle split
        raise RuntimeError("kernel and oracle disagree on a witness")
    witnesses = _dedupe(verified)
    return SearchReport(
        domain=f"all hypergraphs on {n} labeled vertices "
               f"({total} edge subsets)",
        examined=total,
        witnesses=witnesses,
        elapsed=time.perf_counter() - t0,
        stats={"labeled_witnesses": len(labeled), "jobs": jobs},
    )


def brute_force_by_order(n: int) -> list[Hypergraph]:
    """Independent unpruned enumeration (oracle only); cross-checks the
    kernel sweep at small n."""
    if not 2 <= n <= 4:
        raise ValueError("unpruned sweep is only sensible for n <= 4")
    emasks = _candidate_edges(n)
    found = []
    for s in range(1 << len(emasks)):
        h = _subset_to_hypergraph(n, emasks, s)
        if h.edges and is_soltes(h):
            found.append(h)
    return _dedupe(found)


# --------------------------------------------------------------------------
# size-5 antichain sweep
# --------------------------------------------------------------------------

def _antichains_2_3(ground: int = 5):
    """All antichains in the 2- and 3-subsets of [ground], as tuples of
    member subsets (each member a frozenset).  Containment can only pair
    a 2-set with a 3-set, so enumerate 2-set choices first."""
    twos = [frozenset(c) for c in itertools.combinations(range(ground), 2)]
    threes = [frozenset(c) for c in itertools.combinations(range(ground), 3)]
    for bits2 in range(1 << len(twos)):
        chosen2 = [twos[i] for i in range(len(twos)) if (bits2 >> i) & 1]
        allowed3 = [t for t in threes if not any(p < t for p in chosen2)]
        for bits3 in range(1 << len(allowed3)):
            chosen3 = [allowed3[i] for i in range(len(allowed3)) if (bits3 >> i) & 1]
            yield chosen2 + chosen3


def _antichain_candidate(members, ground: int):
    """Dual of an antichain: one vertex per member, edge j = vertices
    whose member contains ground element j.  Returns (n, edge masks) or
    None when some edge would have fewer than 2 vertices."""
    n = len(members)
    masks = [0] * ground
    for i, mem in enumerate(members):
        for j in mem:
            masks[j] |= 1 << i
    for mask in masks:
        if bin(mask).count("1") < 2:
            return None
    return n, masks


def search_size5() -> SearchReport:
    """Every deletion-invariant hypergraph of size 5, via the antichain
    reduction: vertices' incidence sets form an antichain in the 2/3
    subsets of the 5 edges."""
    t0 = time.perf_counter()
    ns: list[int] = []
    rows: list[list[int]] = []
    members_kept = []
    examined = 0
    for members in _antichains_2_3(5):
        examined += 1
        if len(members) < 5:
            continue
        cand = _antichain_candidate(members, 5)
        if cand is None:
            continue
        ns.append(cand[0])
        rows.append(cand[1])
        members_kept.append(members)
    verdicts = _kernels.check_soltes_batch(
        np.array(ns, np.int64), np.array(rows, np.int64)
    )
    labeled = []
    for i in np.nonzero(verdicts)[0]:
        n = ns[i]
        edges = [_mask_to_edge(m, n) for m in rows[i]]
        h = Hypergraph(n, tuple(sorted(edges)))
        if not is_soltes(h):  # pragma: no cover
            raise RuntimeError("kernel and oracle disagree on a witness")
        labeled.append(h)
    witnesses = _dedupe(labeled)
    return SearchReport(
        domain="duals of antichains in the 2/3-subsets of 5 edges",
        examined=examined,
        witnesses=witnesses,
        elapsed=time.perf_counter() - t0,
        stats={"candidates_checked": len(ns), "labeled_witnesses": len(labeled)},
    )


def _soltes_size_m_direct(n: int, m_sizes: Iterable[int],
                          chunk: int = 1 << 16) -> list[Hypergraph]:
    """Direct enumeration of all hypergraphs on n labeled vertices whose
    size is in m_sizes; returns the labeled deletion-invariant ones."""
    emasks = _candidate_edges(n)
    found: list[Hypergraph] = []
    for m in m_sizes:
        combos = itertools.combinations(emasks, m)
        while True:
            block = list(itertools.islice(combos, chunk))
            if not block:
                break
            arr = np.array(block, np.int64)
            verdicts = _kernels.check_soltes_batch(
                np.full(len(block), n, np.int64), arr
            )
            for i in np.nonzero(verdicts)[0]:
                edges = [_mask_to_edge(msk, n) for msk in block[i]]
                found.append(Hypergraph(n, tuple(sorted(edges))))
    return found


def size5_premises_check(n: int) -> dict:
    """Lemma check backing the antichain reduction: every size-5
    deletion-invariant hypergraph on n labeled vertices has min degree
    >= 2, max degree <= 3, and pairwise incomparable incidence sets."""
    hits = _soltes_size_m_direct(n, [5])
    bad = 0
    for h in hits:
        degs = degrees(h)
        inc = [set(s) for s in incidence_sets(h)]
        antichain = not any(
            a < b or b < a for a, b in itertools.combinations(inc, 2)
        )
        if degs.delta_min < 2 or degs.delta_max > 3 or not antichain:
            bad += 1
    return {"order": n, "witnesses": len(hits), "premise_violations": bad,
            "instances": hits}


def size_le4_check(n_max: int = 6) -> int:
    """Direct check that no hypergraph of size <= 4 (order <= n_max) is
    deletion invariant; returns the number found (expected 0)."""
    count = 0
    for n in range(2, n_max + 1):
        count += len(_soltes_size_m_direct(n, [1, 2, 3, 4]))
    return count


def check_3uniform_diam1(n_max: int, jobs: Optional[int] = None) -> SearchReport:
    """Enumerate all 3-uniform diameter-1 hypergraphs up to order n_max
    and report any deletion-invariant witness (none are expected)."""
    if not 5 <= n_max <= 7:
        raise ValueError("supported range is 5 <= n_max <= 7")
    jobs = jobs or default_jobs()
    t0 = time.perf_counter()
    witnesses: list[Hypergraph] = []
    examined = 0
    for n in range(5, n_max + 1):
        emasks = _candidate_edges(n, sizes=[3])
        total = 1 << len(emasks)
        examined += total
        hits = _sweep_chunked(n, emasks, total, True, jobs)
        for s in hits:  # pragma: no cover - the sweep is expected empty
            h = _subset_to_hypergraph(n, emasks, s)
            if is_soltes(h):
                witnesses.append(h)
    return SearchReport(
        domain=f"3-uniform diameter-1 hypergraphs, order 5..{n_max}",
        examined=examined,
        witnesses=_dedupe(witnesses),
        elapsed=time.perf_counter() - t0,
        stats={"jobs": jobs},
    )
