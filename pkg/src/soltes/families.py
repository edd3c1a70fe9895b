"""Constructors for every deletion-invariant family and named example,
plus the census dual transforms.

Each constructor whose result is claimed deletion-invariant is verified
by the delta-report oracle in the test suite; the order-n generator and
the multipartite family additionally self-verify, since they involve a
randomized or formulaic realization step.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import comb
from typing import Optional

from . import _fixtures
from .hypergraph import (
    Hypergraph,
    clique,
    degrees,
    delete_vertex,
    dual,
    incidence_sets,
    uniformity,
)
from .metrics import delta_report, diameter, is_soltes


def cycle(n: int) -> Hypergraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Hypergraph(n, tuple(sorted(edges)))


def path(n: int) -> Hypergraph:
    if n < 2:
        raise ValueError("path needs n >= 2")
    return Hypergraph(n, tuple((i, i + 1) for i in range(n - 1)))


def small_example(n: int) -> Hypergraph:
    """The order-5..8 non-uniform examples (orders 6 and 7 are frozen
    figure transcriptions; 5 and 8 have closed-form descriptions)."""
    if n == 5:
        edges = list(cycle(5).edges) + [tuple(range(5))]
        return Hypergraph(5, tuple(sorted(edges)))
    if n == 6:
        return Hypergraph(6, tuple(sorted(_fixtures.FIG_EXAMPLE_6)))
    if n == 7:
        return Hypergraph(7, tuple(sorted(_fixtures.FIG_EXAMPLE_7)))
    if n == 8:
        edges = {tuple(sorted(((i + d) % 8, i))) for i in range(8) for d in (1, 2)}
        hyper = [(0, 2, 4, 6), (1, 3, 5, 7), tuple(range(8))]
        return Hypergraph(8, tuple(sorted(list(edges) + hyper)))
    raise ValueError("small examples exist for n in {5, 6, 7, 8}")


# --------------------------------------------------------------------------
# order-n generator (n >= 9)
# --------------------------------------------------------------------------

def _theorem_plan(n: int):
    """Partition into parts of size 3/4 with per-vertex cross-degree
    quotas and fixed intra-part edges; quota sum is forced even by
    toggling the last size-3 part to its alternate variant."""
    parts: list[list[int]] = []
    idx = 0
    for _ in range(n % 3):  # one size-4 part per leftover vertex
        parts.append(list(range(idx, idx + 4)))
        idx += 4
    while idx < n:
        parts.append(list(range(idx, idx + 3)))
        idx += 3

    quota = [0] * n
    intra: list[tuple[int, int]] = []
    for p in parts:
        if len(p) == 4:
            mf = 0 if n % 3 == 1 else 2  # intra factor degree
            c4 = (2 * (n - 4) - mf) // 3
            for v in p:
                quota[v] = c4
            if mf == 2:  # 4-cycle
                intra += [(p[0], p[1]), (p[1], p[2]), (p[2], p[3]), (p[0], p[3])]
        else:
            if n % 2 == 1:
                c = (n - 3) - (n - 1) // 2
                intra += [(p[0], p[1]), (p[0], p[2]), (p[1], p[2])]
            else:
                c = (n - 3) - (n - 2) // 2
            for v in p:
                quota[v] = c

    if sum(quota) % 2 == 1:
        # alternate variant of the last size-3 part shifts parity by one
        p = parts[-1]
        if n % 2 == 1:
            # triangle -> single edge, third vertex gains one cross edge
            for e in [(p[0], p[2]), (p[1], p[2])]:
                intra.remove(e)
            quota[p[2]] += 1
        else:
            # empty -> path through p[2], whose cross quota drops by one
            intra += [(p[0], p[2]), (p[1], p[2])]
            quota[p[2]] -= 1
    return parts, quota, intra


def _realize_cross(n, part_of, quota, existing, rng, tries=60):
    """Random stub matching of the cross-degree quotas, avoiding
    intra-part pairs and duplicates.  Returns None when every try jams."""
    taken = set(existing)
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(quota[v])]
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        pool = stubs[:]
        ok = True
        while pool:
            a = pool.pop()
            pick = -1
            for i in range(len(pool) - 1, -1, -1):
                b = pool[i]
                pair = (a, b) if a < b else (b, a)
                if b != a and part_of[b] != part_of[a] and pair not in edges \
                        and pair not in taken:
                    pick = i
                    break
            if pick < 0:
                ok = False
                break
            b = pool.pop(pick)
            edges.add((a, b) if a < b else (b, a))
        if ok:
            return sorted(edges)
    return None


def _theorem_circulant_9() -> Hypergraph:
    # difference-{1,3} circulant on Z9, parts = residue classes mod 3
    edges = {tuple(sorted(((i + d) % 9, i))) for i in range(9) for d in (1, 3)}
    hyper = [tuple(sorted(set(range(9)) - {i, i + 3, i + 6})) for i in range(3)]
    hyper.append(tuple(range(9)))
    return Hypergraph(9, tuple(sorted(list(edges) + hyper)))


def theorem_order_n(n: int, seed: Optional[int] = None,
                    attempts: int = 400) -> Hypergraph:
    """A verified deletion-invariant hypergraph of any order n >= 9.

    Builds a graph realizing the part/quota plan, adds the complement
    hyperedge of every part plus the full vertex set, and accepts only
    instances that pass the delta-report oracle with every deletion of
    diameter 2.  Deterministic for fixed (n, seed).
    """
    if n < 9:
        raise ValueError("construction needs n >= 9")
    parts, quota, intra = _theorem_plan(n)
    part_of = {}
    for pi, p in enumerate(parts):
        for v in p:
            part_of[v] = pi
    hyper = [tuple(sorted(set(range(n)) - set(p))) for p in parts]
    hyper.append(tuple(range(n)))

    candidates = []
    if n == 9:
        candidates.append(_theorem_circulant_9())
    rng = random.Random(1_000_003 * (seed or 0) + n)
    failures = 0
    for attempt in range(attempts):
        if attempt < len(candidates):
            h = candidates[attempt]
        else:
            cross = _realize_cross(n, part_of, quota, intra, rng)
            if cross is None:
                failures += 1
                continue
            h = Hypergraph(n, tuple(sorted(set(intra) | set(cross) | set(hyper))))
        rep = delta_report(h)
        if rep.verdict and rep.w == comb(n, 2):
            if all(diameter(delete_vertex(h, v)) == 2 for v in range(n)):
                return h
        failures += 1
    raise RuntimeError(
        f"order-{n} generator exhausted {attempts} attempts "
        f"({failures} rejected); try another seed"
    )


def interval_family(m: int) -> Hypergraph:
    """Cyclic-interval hypergraph: k = C(m,2) consecutive residues per
    edge on n = C(m+1,2) + 1 vertices; diameter 1 since 2k - 1 >= n."""
    if m < 4:
        raise ValueError("interval family needs m >= 4")
    k = comb(m, 2)
    n = comb(m + 1, 2) + 1
    edges = [tuple(sorted((i + j) % n for j in range(k))) for i in range(n)]
    return Hypergraph(n, tuple(sorted(edges)))


def steiner_2_4_13() -> Hypergraph:
    """S(2,4,13) developed from the planar difference set {0,1,3,9} mod 13."""
    base = (0, 1, 3, 9)
    blocks = [tuple(sorted((b + i) % 13 for b in base)) for i in range(13)]
    cover: dict[tuple[int, int], int] = {}
    for blk in blocks:
        for p in itertools.combinations(blk, 2):
            cover[p] = cover.get(p, 0) + 1
    pairs = list(itertools.combinations(range(13), 2))
    if sorted(cover) != pairs or set(cover.values()) != {1}:
        raise RuntimeError("difference-set development failed the design check")
    return Hypergraph(13, tuple(sorted(blocks)))


def hemi_dodecahedron() -> Hypergraph:
    """The six pentagonal faces covering the Petersen graph's edges twice."""
    faces = (
        (0, 1, 2, 3, 4),
        (0, 2, 5, 6, 7),
        (1, 3, 6, 7, 8),
        (2, 4, 7, 8, 9),
        (0, 3, 5, 8, 9),
        (1, 4, 5, 6, 9),
    )
    return Hypergraph(10, tuple(sorted(faces)))


def dual_k5_3() -> Hypergraph:
    """Dual of the 3-uniform clique on 5 vertices: the (10,6,3) design."""
    return dual(clique(5, 3))


def duplicated_dual_k4() -> Hypergraph:
    """Two copies of dual(K4) with corresponding hyperedges merged, plus
    each copy's vertex set as a hyperedge: 12 vertices, 6 edges, 6-uniform."""
    base = dual(clique(4, 2))  # 6 vertices, 4 edges of size 3
    merged = [tuple(sorted(e + tuple(v + 6 for v in e))) for e in base.edges]
    merged += [tuple(range(6)), tuple(range(6, 12))]
    return Hypergraph(12, tuple(sorted(merged)))


def twelve_vertex_6uniform() -> Hypergraph:
    edges = (
        (0, 1, 2, 3, 4, 5),
        (0, 1, 6, 7, 8, 9),
        (2, 3, 6, 7, 10, 11),
        (4, 5, 8, 9, 10, 11),
        (0, 2, 4, 6, 8, 10),
        (1, 3, 5, 7, 9, 11),
    )
    return Hypergraph(12, tuple(sorted(edges)))


def multipartite_hk(k: int) -> Hypergraph:
    """Complete k-partite graph on classes of size 2k+3, minus the
    round-robin Hamilton cycle, plus one hyperedge per class.

    Vertex v belongs to class v mod k, so consecutive ids always sit in
    different classes and the removed cycle (i, i+1 mod n) is a 2-factor
    of cross edges.
    """
    if k < 2:
        raise ValueError("needs k >= 2")
    n = k * (2 * k + 3)
    removed = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if u % k != v % k and (u, v) not in removed
    ]
    classes = [tuple(v for v in range(n) if v % k == c) for c in range(k)]
    h = Hypergraph(n, tuple(sorted(edges + classes)))
    if not is_soltes(h):
        raise RuntimeError(f"multipartite construction failed verification, k={k}")
    return h


def star_dual_of_graph(g: Hypergraph) -> Hypergraph:
    """Dual restricted to graphs: vertices become edge-stars."""
    if g.edges and uniformity(g) != 2:
        raise ValueError("star dual needs a 2-uniform hypergraph")
    return dual(g)


def triangle_dual_of_cubic(g: Hypergraph, stars_only: bool = False) -> Hypergraph:
    """Hyperedges = pairwise-adjacent edge triples of a cubic graph's
    line graph: the 3 edges at each vertex, plus (unless stars_only)
    the 3 edges of every triangle."""
    if not g.edges or uniformity(g) != 2:
        raise ValueError("triangle dual needs a 2-uniform hypergraph")
    degs = degrees(g)
    if degs.delta_min != 3 or degs.delta_max != 3:
        raise ValueError("triangle dual needs a 3-regular graph")
    inc = incidence_sets(g)
    triples = {s for s in inc}
    if not stars_only:
        index = {e: i for i, e in enumerate(g.edges)}
        adj = [set() for _ in range(g.n)]
        for u, v in g.edges:
            adj[u].add(v)
            adj[v].add(u)
        for u in range(g.n):
            for v in adj[u]:
                if v <= u:
                    continue
                for w in adj[u] & adj[v]:
                    if w > v:
                        triples.add(
                            tuple(sorted((index[(u, v)], index[(v, w)],
                                          index[(u, w)])))
                        )
    return Hypergraph(g.m, tuple(sorted(triples)))


# --------------------------------------------------------------------------
# parameterized dispatch (CLI surface)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()
    seed: Optional[int] = None


_ARITY = {
    "small_example": 1,
    "theorem_order_n": 1,
    "interval": 1,
    "steiner_2_4_13": 0,
    "hemi_dodecahedron": 0,
    "dual_k5_3": 0,
    "duplicated_dual_k4": 0,
    "twelve_vertex_6uniform": 0,
    "multipartite_hk": 1,
    "cycle": 1,
    "path": 1,
}


def family_names() -> list[str]:
    return sorted(_ARITY)


def build(spec: FamilySpec) -> Hypergraph:
    name = spec.family.replace("-", "_")
    if name not in _ARITY:
        raise ValueError(f"unknown family {spec.family!r}; "
                         f"choose from {', '.join(family_names())}")
    if len(spec.params) != _ARITY[name]:
        raise ValueError(
            f"family {name} takes {_ARITY[name]} parameter(s), "
            f"got {len(spec.params)}"
        )
    if name == "small_example":
        return small_example(spec.params[0])
    if name == "theorem_order_n":
        return theorem_order_n(spec.params[0], seed=spec.seed)
    if name == "interval":
        return interval_family(spec.params[0])
    if name == "steiner_2_4_13":
        return steiner_2_4_13()
    if name == "hemi_dodecahedron":
        return hemi_dodecahedron()
    if name == "dual_k5_3":
        return dual_k5_3()
    if name == "duplicated_dual_k4":
        return duplicated_dual_k4()
    if name == "twelve_vertex_6uniform":
        return twelve_vertex_6uniform()
    if name == "multipartite_hk":
        return multipartite_hk(spec.params[0])
    if name == "cycle":
        return cycle(spec.params[0])
    return path(spec.params[0])
