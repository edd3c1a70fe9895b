"""Hypergraph values and structural operations.

A hypergraph is a vertex count ``n`` (vertices are the dense ids
``0..n-1``) together with a tuple of hyperedges, each a strictly
increasing tuple of vertex ids.  All operations here are pure; the
value type is frozen and freely shareable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:  # keep small objects readable in test output
        return f"Hypergraph(n={self.n}, edges={list(map(list, self.edges))})"


def hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Canonical constructor: sorts every edge, dedupes, sorts the edge list.

    Raises ValueError on invariant violations (see :func:`validate`).
    """
    canon = sorted({tuple(sorted(set(e))) for e in edges})
    h = Hypergraph(n, tuple(canon))
    problems = validate(h)
    if problems:
        raise ValueError("invalid hypergraph: " + "; ".join(problems))
    return h


def validate(h: Hypergraph) -> list[str]:
    """Return every invariant violation; an empty list means the value is valid.

    Violations are data, not failures: callers decide whether to raise.
    """
    problems: list[str] = []
    if h.n <= 0:
        problems.append(f"vertex count {h.n} must be positive")
    seen: set[tuple[int, ...]] = set()
    for idx, e in enumerate(h.edges):
        if len(e) < 2:
            problems.append(f"edge {idx} {list(e)}: fewer than 2 vertices")
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            problems.append(f"edge {idx} {list(e)}: ids not strictly increasing")
        for v in e:
            if not 0 <= v < h.n:
                problems.append(f"edge {idx}: id {v} out of range [0, {h.n})")
        if e in seen:
            problems.append(f"edge {idx} {list(e)}: duplicate")
        seen.add(e)
    return problems


def delete_vertex(h: Hypergraph, v: int) -> Hypergraph:
    """Remove v and every hyperedge containing it; ids above v shift down."""
    if not 0 <= v < h.n:
        raise ValueError(f"vertex {v} out of range [0, {h.n})")
    new_edges = []
    for e in h.edges:
        if v in e:
            continue
        new_edges.append(tuple(u - 1 if u > v else u for u in e))
    return Hypergraph(h.n - 1, tuple(sorted(new_edges)))


def incidence_sets(h: Hypergraph) -> list[tuple[int, ...]]:
    """For each vertex, the sorted tuple of indices of edges containing it."""
    inc: list[list[int]] = [[] for _ in range(h.n)]
    for idx, e in enumerate(h.edges):
        for v in e:
            inc[v].append(idx)
    return [tuple(s) for s in inc]


def dual(h: Hypergraph, with_collapse: bool = False):
    """Exchange vertex and edge roles.

    The dual's vertices are the edges of ``h``; each vertex of ``h``
    contributes its incidence set as a hyperedge.  Identical incidence
    sets collapse to a single edge; ``with_collapse=True`` additionally
    returns how many were merged away.

    Requires minimum degree >= 2 (a degree-1 vertex would produce a
    singleton hyperedge).
    """
    inc = incidence_sets(h)
    for v, s in enumerate(inc):
        if len(s) < 2:
            raise ValueError(f"vertex {v} has degree {len(s)} < 2; dual undefined")
    distinct = sorted(set(inc))
    d = Hypergraph(h.m, tuple(distinct))
    if with_collapse:
        return d, h.n - len(distinct)
    return d


def two_section(h: Hypergraph) -> Hypergraph:
    """The underlying graph: all 2-subsets of every hyperedge, deduplicated."""
    pairs = {p for e in h.edges for p in itertools.combinations(e, 2)}
    return Hypergraph(h.n, tuple(sorted(pairs)))


def is_connected(h: Hypergraph) -> bool:
    """True iff every vertex is reachable from vertex 0 through shared edges."""
    if h.n <= 0:
        raise ValueError("connectivity undefined for empty vertex set")
    if h.n == 1:
        return True
    inc = incidence_sets(h)
    seen_v = [False] * h.n
    seen_e = [False] * h.m
    stack = [0]
    seen_v[0] = True
    reached = 1
    while stack:
        u = stack.pop()
        for ei in inc[u]:
            if seen_e[ei]:
                continue
            seen_e[ei] = True
            for w in h.edges[ei]:
                if not seen_v[w]:
                    seen_v[w] = True
                    reached += 1
                    stack.append(w)
    return reached == h.n


@dataclass(frozen=True)
class DegreeSummary:
    deg: tuple[int, ...]
    delta_min: int
    delta_max: int


def degrees(h: Hypergraph) -> DegreeSummary:
    deg = [0] * h.n
    for e in h.edges:
        for v in e:
            deg[v] += 1
    return DegreeSummary(tuple(deg), min(deg), max(deg))


def uniformity(h: Hypergraph) -> Optional[int]:
    """Common edge cardinality, or None when edges differ in size."""
    if not h.edges:
        raise ValueError("uniformity undefined without edges")
    sizes = {len(e) for e in h.edges}
    return sizes.pop() if len(sizes) == 1 else None


def clique(n: int, r: int) -> Hypergraph:
    """All r-subsets of {0..n-1} as hyperedges, in lexicographic order."""
    if not 2 <= r <= n:
        raise ValueError(f"need 2 <= r <= n, got r={r}, n={n}")
    return Hypergraph(n, tuple(itertools.combinations(range(n), r)))


def _vertex_signature(h: Hypergraph) -> list[tuple[int, tuple[int, ...]]]:
    inc = incidence_sets(h)
    return [
        (len(inc[v]), tuple(sorted(len(h.edges[ei]) for ei in inc[v])))
        for v in range(h.n)
    ]


def is_isomorphic(h1: Hypergraph, h2: Hypergraph) -> bool:
    """Backtracking isomorphism test with degree/edge-profile pruning.

    Intended scale: n up to ~20 with modest edge counts.
    """
    if h1.n != h2.n or h1.m != h2.m:
        return False
    if sorted(map(len, h1.edges)) != sorted(map(len, h2.edges)):
        return False
    sig1 = _vertex_signature(h1)
    sig2 = _vertex_signature(h2)
    if sorted(sig1) != sorted(sig2):
        return False

    edge_set2 = set(h2.edges)
    inc1 = incidence_sets(h1)
    # assign the most constrained (rarest signature) vertices first
    rarity = {s: sig1.count(s) for s in set(sig1)}
    order = sorted(range(h1.n), key=lambda v: (rarity[sig1[v]], -len(inc1[v])))
    candidates = {v: [w for w in range(h2.n) if sig2[w] == sig1[v]] for v in order}

    mapping: dict[int, int] = {}
    used: set[int] = set()

    def edges_consistent(v: int) -> bool:
        # every h1 edge fully mapped after assigning v must exist in h2
        for ei in inc1[v]:
            e = h1.edges[ei]
            if all(u in mapping for u in e):
                if tuple(sorted(mapping[u] for u in e)) not in edge_set2:
                    return False
        return True

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in candidates[v]:
            if w in used:
                continue
            mapping[v] = w
            used.add(w)
            if edges_consistent(v) and extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return extend(0)


def random_relabel(h: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Apply a vertex permutation (perm[v] = new id of v) and recanonicalize."""
    if sorted(perm) != list(range(h.n)):
        raise ValueError("not a permutation of the vertex set")
    edges = sorted(tuple(sorted(perm[v] for v in e)) for e in h.edges)
    return Hypergraph(h.n, tuple(edges))


def path_wiener(n: int) -> int:
    """Total distance of the 2-uniform path P_n: C(n+1, 3)."""
    return comb(n + 1, 3)
