"""Hot numeric kernels with two interchangeable backends.

The default backend compiles the scalar loops below with numba's
``@njit``.  Setting the environment variable ``SOLTES_NUMBA=0`` (or
when numba is not importable) selects the pure-numpy fallback, which
vectorizes the same computations over candidate chunks.  Both paths
produce identical results; ``tests/test_kernels.py`` asserts agreement
and ``benchmarks/bench_kernels.py`` compares their throughput.

Small hypergraphs (n <= ~30) are encoded as vertex bitmasks: an edge
is an int whose set bits are its vertices, and ``adj[i]`` is the union
of all edges containing vertex i.  Larger instances use CSR incidence
arrays (vertex -> incident edge ids, edge -> member vertex ids).
"""

from __future__ import annotations

import os

import numpy as np

_flag = os.environ.get("SOLTES_NUMBA", "").strip().lower()
if _flag in ("0", "false", "off", "no"):
    NUMBA_ENABLED = False
else:
    try:
        from numba import njit  # noqa: F401

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover
        NUMBA_ENABLED = False


def backend() -> str:
    return "numba" if NUMBA_ENABLED else "numpy"


# --------------------------------------------------------------------------
# scalar (numba) path
# --------------------------------------------------------------------------

def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def _wiener_masks(adj, n, active):
    # Sum of BFS distances over ordered pairs within `active`, halved.
    # Returns -1 when some vertex of `active` cannot reach the rest.
    total = 0
    for v in range(n):
        if not (active >> v) & 1:
            continue
        reach = 1 << v
        d = 0
        while True:
            nxt = reach
            for i in range(n):
                if (reach >> i) & 1:
                    nxt |= adj[i]
            nxt &= active
            new = nxt & ~reach
            if new == 0:
                break
            d += 1
            total += d * _popcount(new)
            reach = nxt
        if reach != active:
            return -1
    return total // 2


def _is_soltes_masks(edge_masks, m, n, adj, deg, adjd):
    # Early-exit deletion-invariance check on one bitmask candidate.
    full = (1 << n) - 1
    for i in range(n):
        adj[i] = 0
        deg[i] = 0
    for j in range(m):
        e = edge_masks[j]
        for i in range(n):
            if (e >> i) & 1:
                adj[i] |= e
                deg[i] += 1
    for i in range(n):
        if deg[i] < 2:
            return False
    w = _wiener_masks(adj, n, full)
    if w < 0:
        return False
    for v in range(n):
        for i in range(n):
            adjd[i] = 0
        for j in range(m):
            e = edge_masks[j]
            if (e >> v) & 1:
                continue
            for i in range(n):
                if (e >> i) & 1:
                    adjd[i] |= e
        if _wiener_masks(adjd, n, full & ~(1 << v)) != w:
            return False
    return True


def _sweep_soltes(n, emasks, lo, hi, need_diam1, wit, maxw):
    # Sweep edge-subset indices [lo, hi); record every subset whose
    # hypergraph has all deletion deltas zero.  Pruning uses only sound
    # necessary conditions: min degree >= 2 and size >= maxdeg + 2.
    full = (1 << n) - 1
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    adjd = np.zeros(n, np.int64)
    nw = 0
    for s in range(lo, hi):
        for i in range(n):
            adj[i] = 0
            deg[i] = 0
        m = 0
        t = s
        j = 0
        while t:
            if t & 1:
                e = emasks[j]
                m += 1
                for i in range(n):
                    if (e >> i) & 1:
                        adj[i] |= e
                        deg[i] += 1
            t >>= 1
            j += 1
        ok = True
        dmax = 0
        for i in range(n):
            if deg[i] < 2:
                ok = False
                break
            if deg[i] > dmax:
                dmax = deg[i]
        if not ok or m < dmax + 2:
            continue
        if need_diam1:
            for i in range(n):
                if (adj[i] | (1 << i)) != full:
                    ok = False
                    break
            if not ok:
                continue
        w = _wiener_masks(adj, n, full)
        if w < 0:
            continue
        solt = True
        for v in range(n):
            for i in range(n):
                adjd[i] = 0
            t = s
            j = 0
            while t:
                if t & 1:
                    e = emasks[j]
                    if not (e >> v) & 1:
                        for i in range(n):
                            if (e >> i) & 1:
                                adjd[i] |= e
                t >>= 1
                j += 1
            if _wiener_masks(adjd, n, full & ~(1 << v)) != w:
                solt = False
                break
        if solt:
            if nw < maxw:
                wit[nw] = s
            nw += 1
    return nw


def _sweep_bounds(n, emasks, lo, hi, wlow, whigh):
    # Count connected candidates and check wlow <= W <= whigh; track
    # upper-bound equality cases and whether each is a 2-uniform path.
    full = (1 << n) - 1
    adj = np.zeros(n, np.int64)
    deg = np.zeros(n, np.int64)
    connected = 0
    low_viol = 0
    up_viol = 0
    up_eq = 0
    up_eq_nonpath = 0
    for s in range(lo, hi):
        for i in range(n):
            adj[i] = 0
            deg[i] = 0
        m = 0
        two_uniform = True
        t = s
        j = 0
        while t:
            if t & 1:
                e = emasks[j]
                m += 1
                cnt = 0
                for i in range(n):
                    if (e >> i) & 1:
                        adj[i] |= e
                        deg[i] += 1
                        cnt += 1
                if cnt != 2:
                    two_uniform = False
            t >>= 1
            j += 1
        w = _wiener_masks(adj, n, full)
        if w < 0:
            continue
        connected += 1
        if w < wlow:
            low_viol += 1
        if w > whigh:
            up_viol += 1
        if w == whigh:
            up_eq += 1
            is_path = two_uniform and m == n - 1
            if is_path:
                for i in range(n):
                    if deg[i] > 2:
                        is_path = False
                        break
            if not is_path:
                up_eq_nonpath += 1
    return connected, low_viol, up_viol, up_eq, up_eq_nonpath


def _check_batch(ns, masks, mcounts, out):
    kmax = masks.shape[0]
    nmax = 0
    for k in range(kmax):
        if ns[k] > nmax:
            nmax = ns[k]
    adj = np.zeros(nmax, np.int64)
    deg = np.zeros(nmax, np.int64)
    adjd = np.zeros(nmax, np.int64)
    for k in range(kmax):
        out[k] = _is_soltes_masks(masks[k], mcounts[k], ns[k], adj, deg, adjd)


def _bfs_csr(n, vptr, vedges, eptr, everts, src, dist, queue, eseen):
    for i in range(n):
        dist[i] = -1
    for i in range(eseen.shape[0]):
        eseen[i] = False
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for k in range(vptr[u], vptr[u + 1]):
            ei = vedges[k]
            if eseen[ei]:
                continue
            eseen[ei] = True
            for t in range(eptr[ei], eptr[ei + 1]):
                w = everts[t]
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue[tail] = w
                    tail += 1
    return tail


def _all_stats_csr(n, m, vptr, vedges, eptr, everts):
    rowsum = np.zeros(n, np.int64)
    ecc = np.zeros(n, np.int64)
    reach = np.zeros(n, np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    eseen = np.empty(m, np.bool_)
    for src in range(n):
        cnt = _bfs_csr(n, vptr, vedges, eptr, everts, src, dist, queue, eseen)
        s = 0
        mx = 0
        for i in range(n):
            if dist[i] > 0:
                s += dist[i]
                if dist[i] > mx:
                    mx = dist[i]
        rowsum[src] = s
        ecc[src] = mx
        reach[src] = cnt
    return rowsum, ecc, reach


if NUMBA_ENABLED:
    _jit = njit(cache=True, nogil=True)
    _popcount = _jit(_popcount)
    _wiener_masks = _jit(_wiener_masks)
    _is_soltes_masks = _jit(_is_soltes_masks)
    _sweep_soltes_nb = _jit(_sweep_soltes)
    _sweep_bounds_nb = _jit(_sweep_bounds)
    _check_batch_nb = _jit(_check_batch)
    _bfs_csr = _jit(_bfs_csr)
    _bfs_csr_nb = _bfs_csr
    _all_stats_csr_nb = _jit(_all_stats_csr)


# --------------------------------------------------------------------------
# vectorized numpy path
# --------------------------------------------------------------------------

def _wiener_chunk_np(n, adj, active):
    """Row-parallel bitmask Wiener. adj: (C, n) int64, active: (C,) int64.

    Returns per-row totals over unordered pairs, -1 for disconnected rows.
    """
    c = adj.shape[0]
    total = np.zeros(c, np.int64)
    ok = np.ones(c, bool)
    for src in range(n):
        bit = np.int64(1) << src
        rows = (active & bit) != 0
        reach = np.where(rows, bit, np.int64(0))
        d = 0
        while True:
            nxt = reach.copy()
            for i in range(n):
                hit = ((reach >> i) & 1) == 1
                if hit.any():
                    nxt[hit] |= adj[hit, i]
            nxt &= active
            new = nxt & ~reach
            if not new.any():
                break
            d += 1
            total += d * np.bitwise_count(new).astype(np.int64)
            reach = nxt
        ok &= ~rows | (reach == active)
    res = total // 2
    res[~ok] = -1
    return res


def _adj_deg_chunk_np(n, em, has):
    c = has.shape[0]
    adj = np.zeros((c, n), np.int64)
    deg = np.zeros((c, n), np.int64)
    for j in range(em.shape[0]):
        e = em[j]
        sel = has[:, j]
        for i in range(n):
            if (int(e) >> i) & 1:
                adj[sel, i] |= e
                deg[sel, i] += 1
    return adj, deg


def _sweep_soltes_np(n, emasks, lo, hi, need_diam1, chunk=1 << 15):
    em = np.asarray(emasks, np.int64)
    nm = em.shape[0]
    full = np.int64((1 << n) - 1)
    shifts = np.arange(nm, dtype=np.int64)
    witnesses: list[int] = []
    for base in range(lo, hi, chunk):
        s = np.arange(base, min(base + chunk, hi), dtype=np.int64)
        has = ((s[:, None] >> shifts) & 1).astype(bool)
        m = has.sum(axis=1)
        adj, deg = _adj_deg_chunk_np(n, em, has)
        alive = (deg >= 2).all(axis=1) & (m >= deg.max(axis=1) + 2)
        if need_diam1:
            selfbits = np.int64(1) << np.arange(n, dtype=np.int64)
            alive &= ((adj | selfbits) == full).all(axis=1)
        idx = np.nonzero(alive)[0]
        if idx.size == 0:
            continue
        s, has, adj = s[idx], has[idx], adj[idx]
        w = _wiener_chunk_np(n, adj, np.full(len(s), full, np.int64))
        keep = w >= 0
        s, has, w = s[keep], has[keep], w[keep]
        for v in range(n):
            if len(s) == 0:
                break
            surv = has & (((em >> v) & 1) == 0)
            adjd, _ = _adj_deg_chunk_np(n, em, surv)
            wd = _wiener_chunk_np(
                n, adjd, np.full(len(s), full & ~(np.int64(1) << v), np.int64)
            )
            keep = wd == w
            s, has, w = s[keep], has[keep], w[keep]
        witnesses.extend(int(x) for x in s)
    return witnesses


def _sweep_bounds_np(n, emasks, lo, hi, wlow, whigh, chunk=1 << 15):
    em = np.asarray(emasks, np.int64)
    nm = em.shape[0]
    full = np.int64((1 << n) - 1)
    shifts = np.arange(nm, dtype=np.int64)
    sizes = np.bitwise_count(em).astype(np.int64)
    connected = low_viol = up_viol = up_eq = up_eq_nonpath = 0
    for base in range(lo, hi, chunk):
        s = np.arange(base, min(base + chunk, hi), dtype=np.int64)
        has = ((s[:, None] >> shifts) & 1).astype(bool)
        m = has.sum(axis=1)
        adj, deg = _adj_deg_chunk_np(n, em, has)
        w = _wiener_chunk_np(n, adj, np.full(len(s), full, np.int64))
        conn = w >= 0
        connected += int(conn.sum())
        low_viol += int((conn & (w < wlow)).sum())
        up_viol += int((conn & (w > whigh)).sum())
        eq = conn & (w == whigh)
        up_eq += int(eq.sum())
        two_unif = ~(has & (sizes != 2)).any(axis=1)
        is_path = two_unif & (m == n - 1) & (deg <= 2).all(axis=1)
        up_eq_nonpath += int((eq & ~is_path).sum())
    return connected, low_viol, up_viol, up_eq, up_eq_nonpath


def _check_batch_np(ns, masks, mcounts, chunk=1 << 14):
    k = masks.shape[0]
    nmax = int(ns.max()) if k else 0
    out = np.zeros(k, bool)
    for base in range(0, k, chunk):
        sl = slice(base, min(base + chunk, k))
        mk = masks[sl]
        active = (np.int64(1) << ns[sl].astype(np.int64)) - 1
        c = mk.shape[0]
        adj = np.zeros((c, nmax), np.int64)
        deg = np.zeros((c, nmax), np.int64)
        for j in range(mk.shape[1]):
            e = mk[:, j]
            for i in range(nmax):
                hit = ((e >> i) & 1) == 1
                adj[hit, i] |= e[hit]
                deg[:, i] += hit
        invertex = ((active[:, None] >> np.arange(nmax)) & 1) == 1
        alive = ((deg >= 2) | ~invertex).all(axis=1)
        w = _wiener_chunk_np(nmax, adj, active)
        alive &= w >= 0
        idx = np.nonzero(alive)[0]
        mk_a, act_a, w_a = mk[idx], active[idx], w[idx]
        live = np.ones(len(idx), bool)
        for v in range(nmax):
            if not live.any():
                break
            dropped = ((mk_a >> v) & 1) == 1
            mkd = np.where(dropped, np.int64(0), mk_a)
            cc = mk_a.shape[0]
            adjd = np.zeros((cc, nmax), np.int64)
            for j in range(mkd.shape[1]):
                e = mkd[:, j]
                for i in range(nmax):
                    hit = ((e >> i) & 1) == 1
                    adjd[hit, i] |= e[hit]
            wd = _wiener_chunk_np(nmax, adjd, act_a & ~(np.int64(1) << v))
            live &= wd == w_a
        out[np.asarray(idx)[live]] = True
    return out


# --------------------------------------------------------------------------
# public wrappers
# --------------------------------------------------------------------------

_MAX_WITNESSES = 65536


def sweep_soltes(n, emasks, lo, hi, need_diam1=False, force=None):
    """All edge-subset indices in [lo, hi) whose hypergraph is deletion
    invariant (every per-vertex delta zero, all deletions connected)."""
    use = NUMBA_ENABLED if force is None else force == "numba"
    em = np.asarray(emasks, np.int64)
    if use:
        wit = np.empty(_MAX_WITNESSES, np.int64)
        nw = _sweep_soltes_nb(n, em, lo, hi, need_diam1, wit, _MAX_WITNESSES)
        if nw > _MAX_WITNESSES:  # pragma: no cover
            raise RuntimeError("witness buffer overflow")
        return [int(x) for x in wit[:nw]]
    return _sweep_soltes_np(n, em, lo, hi, need_diam1)


def sweep_bounds(n, emasks, lo, hi, wlow, whigh, force=None):
    """Counts for the total-distance bound check over [lo, hi):
    (connected, lower violations, upper violations, upper equalities,
    upper equalities that are not 2-uniform paths)."""
    use = NUMBA_ENABLED if force is None else force == "numba"
    em = np.asarray(emasks, np.int64)
    if use:
        return tuple(int(x) for x in _sweep_bounds_nb(n, em, lo, hi, wlow, whigh))
    return _sweep_bounds_np(n, em, lo, hi, wlow, whigh)


def check_soltes_batch(ns, masks, force=None):
    """Vector of deletion-invariance verdicts for bitmask candidates.

    ns: (K,) vertex counts; masks: (K, mmax) edge bitmasks, zero-padded.
    """
    ns = np.asarray(ns, np.int64)
    masks = np.asarray(masks, np.int64)
    mcounts = (masks != 0).sum(axis=1).astype(np.int64)
    use = NUMBA_ENABLED if force is None else force == "numba"
    if len(ns) == 0:
        return np.zeros(0, bool)
    if use:
        out = np.zeros(len(ns), np.bool_)
        _check_batch_nb(ns, masks, mcounts, out)
        return out
    return _check_batch_np(ns, masks, mcounts)


def csr_arrays(h):
    """CSR incidence arrays (vptr, vedges, eptr, everts) for a Hypergraph."""
    n, edges = h.n, h.edges
    counts = np.zeros(n + 1, np.int64)
    for e in edges:
        for v in e:
            counts[v + 1] += 1
    vptr = np.cumsum(counts)
    vedges = np.empty(int(vptr[-1]), np.int64)
    fill = vptr[:-1].copy()
    eptr = np.zeros(len(edges) + 1, np.int64)
    for ei, e in enumerate(edges):
        eptr[ei + 1] = eptr[ei] + len(e)
        for v in e:
            vedges[fill[v]] = ei
            fill[v] += 1
    everts = np.fromiter(
        (v for e in edges for v in e), np.int64, count=int(eptr[-1])
    )
    return vptr, vedges, eptr, everts


def _bfs_dense_np(inc, src):
    m, n = inc.shape
    dist = np.full(n, -1, np.int64)
    dist[src] = 0
    vis_v = np.zeros(n, bool)
    vis_v[src] = True
    vis_e = np.zeros(m, bool)
    frontier = vis_v.copy()
    d = 0
    while frontier.any():
        new_e = inc[:, frontier].any(axis=1) & ~vis_e
        vis_e |= new_e
        new_v = inc[new_e].any(axis=0) & ~vis_v if new_e.any() else np.zeros(n, bool)
        if not new_v.any():
            break
        d += 1
        dist[new_v] = d
        vis_v |= new_v
        frontier = new_v
    return dist


def _incidence_matrix(h):
    inc = np.zeros((h.m, h.n), bool)
    for ei, e in enumerate(h.edges):
        inc[ei, list(e)] = True
    return inc


def bfs_distances(h, src, force=None):
    """Hop distances from src to every vertex; -1 marks unreachable."""
    use = NUMBA_ENABLED if force is None else force == "numba"
    if use:
        vptr, vedges, eptr, everts = csr_arrays(h)
        dist = np.empty(h.n, np.int64)
        queue = np.empty(h.n, np.int64)
        eseen = np.empty(max(h.m, 1), np.bool_)
        _bfs_csr_nb(h.n, vptr, vedges, eptr, everts, src, dist, queue, eseen)
        return dist
    return _bfs_dense_np(_incidence_matrix(h), src)


def all_sources_stats(h, force=None):
    """Per-source (distance sum, eccentricity, reached count) arrays."""
    use = NUMBA_ENABLED if force is None else force == "numba"
    if use:
        vptr, vedges, eptr, everts = csr_arrays(h)
        return _all_stats_csr_nb(h.n, h.m, vptr, vedges, eptr, everts)
    inc = _incidence_matrix(h)
    rowsum = np.zeros(h.n, np.int64)
    ecc = np.zeros(h.n, np.int64)
    reach = np.zeros(h.n, np.int64)
    for src in range(h.n):
        dist = _bfs_dense_np(inc, src)
        seen = dist >= 0
        rowsum[src] = int(dist[seen].sum())
        ecc[src] = int(dist.max())
        reach[src] = int(seen.sum())
    return rowsum, ecc, reach
