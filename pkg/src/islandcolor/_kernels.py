"""JIT-compiled hot loops: conflict-table maintenance, TabuCol, GPX, DSATUR.

Everything here is deterministic given its seed arguments: randomness comes
from an explicit splitmix64 stream carried in a 1-element uint64 array, so
results are reproducible across runs and across threads. All kernels release
the GIL (`nogil=True`) so worker islands can execute truly in parallel.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_SM_GOLD = np.uint64(0x9E3779B97F4A7C15)
_SM_MUL1 = np.uint64(0xBF58476D1CE4E5B9)
_SM_MUL2 = np.uint64(0x94D049BB133111EB)
_U30 = np.uint64(30)
_U27 = np.uint64(27)
_U31 = np.uint64(31)

# Move-selection flags recorded in the trace.
FLAG_NORMAL = 0
FLAG_ASPIRATION = 1
FLAG_FALLBACK = 2


@njit(cache=True, nogil=True, inline="always")
def _next_u64(state):
    state[0] = state[0] + _SM_GOLD
    z = state[0]
    z = (z ^ (z >> _U30)) * _SM_MUL1
    z = (z ^ (z >> _U27)) * _SM_MUL2
    return z ^ (z >> _U31)


@njit(cache=True, nogil=True, inline="always")
def _next_below(state, n):
    """Uniform int in [0, n). Modulo bias is negligible for n << 2**64."""
    return np.int64(_next_u64(state) % np.uint64(n))


@njit(cache=True, nogil=True)
def new_rng_state(seed):
    state = np.empty(1, dtype=np.uint64)
    state[0] = np.uint64(seed)
    # Warm the stream so consecutive integer seeds decorrelate immediately.
    _next_u64(state)
    _next_u64(state)
    return state


@njit(cache=True, nogil=True)
def build_gamma_kernel(offsets, indices, colors, k):
    """Per-(vertex, color) neighbor counts and the monochromatic edge count."""
    n = colors.shape[0]
    gamma = np.zeros((n, k), dtype=np.int32)
    for v in range(n):
        for idx in range(offsets[v], offsets[v + 1]):
            gamma[v, colors[indices[idx]]] += 1
    total = 0
    for v in range(n):
        total += gamma[v, colors[v]]
    return gamma, total // 2


@njit(cache=True, nogil=True)
def rebuild_gamma_kernel(offsets, indices, colors, gamma):
    """Refill an existing gamma table in place; returns the conflict count."""
    n = colors.shape[0]
    k = gamma.shape[1]
    for v in range(n):
        for c in range(k):
            gamma[v, c] = 0
    for v in range(n):
        for idx in range(offsets[v], offsets[v + 1]):
            gamma[v, colors[indices[idx]]] += 1
    total = 0
    for v in range(n):
        total += gamma[v, colors[v]]
    return total // 2


@njit(cache=True, nogil=True)
def recolor_kernel(offsets, indices, colors, gamma, v, to_color):
    """Recolor one vertex, updating neighbor gamma rows; returns the f delta."""
    old = colors[v]
    delta = gamma[v, to_color] - gamma[v, old]
    for idx in range(offsets[v], offsets[v + 1]):
        u = indices[idx]
        gamma[u, old] -= 1
        gamma[u, to_color] += 1
    colors[v] = to_color
    return delta


@njit(cache=True, nogil=True)
def transfer_kernel(offsets, indices, colors, gamma, conflicts, donor_colors, subset):
    """Copy donor colors onto `subset` vertices; returns the new conflict count."""
    for i in range(subset.shape[0]):
        v = subset[i]
        c = donor_colors[v]
        if c != colors[v]:
            conflicts += recolor_kernel(offsets, indices, colors, gamma, v, c)
    return conflicts


@njit(cache=True, nogil=True)
def tabucol_chunk_kernel(
    offsets,
    indices,
    colors,
    gamma,
    conflicts,
    best_colors,
    best_f,
    tabu_until,
    rng_state,
    start_iter,
    max_iter,
    tenure,
    max_evals,
    rep,
    crit_buf,
    trace,
    trace_len,
):
    """Run TabuCol iterations [start_iter, max_iter) or until f=0 / eval budget.

    Mutates colors/gamma (current search point), best_colors (incumbent),
    tabu_until and rng_state in place, so a caller can chunk a long run and
    poll wall-clock deadlines between chunks without disturbing the search.

    One iteration = select one recoloring move among critical vertices
    (non-tabu or aspirating; least-bad tabu move if nothing is admissible),
    apply it, tabu the reverse (vertex, old color) pair for `tenure`
    iterations. `rep` <= 0 enumerates every critical move; `rep` > 0 samples
    that many candidate moves instead.

    Returns (conflicts, best_f, iters_done_in_chunk, evals, trace_len).
    """
    n = colors.shape[0]
    k = gamma.shape[1]
    trace_cap = trace.shape[0]
    it = start_iter
    evals = 0
    iters_done = 0

    while conflicts > 0 and it < max_iter and evals < max_evals and k > 1:
        best_delta = np.int64(1) << 40
        ch_v = -1
        ch_c = -1
        ch_flag = FLAG_NORMAL
        n_ties = 0
        fb_delta = np.int64(1) << 40
        fb_v = -1
        fb_c = -1
        fb_ties = 0

        if rep <= 0:
            for v in range(n):
                cv = colors[v]
                gv = gamma[v, cv]
                if gv == 0:
                    continue
                for c in range(k):
                    if c == cv:
                        continue
                    d = np.int64(gamma[v, c]) - np.int64(gv)
                    if tabu_until[v, c] > it and conflicts + d >= best_f:
                        # Inadmissible tabu move: least-bad fallback pool.
                        if d < fb_delta:
                            fb_delta = d
                            fb_v = v
                            fb_c = c
                            fb_ties = 1
                        elif d == fb_delta:
                            fb_ties += 1
                            if _next_below(rng_state, fb_ties) == 0:
                                fb_v = v
                                fb_c = c
                        continue
                    flag = FLAG_ASPIRATION if tabu_until[v, c] > it else FLAG_NORMAL
                    if d < best_delta:
                        best_delta = d
                        ch_v = v
                        ch_c = c
                        ch_flag = flag
                        n_ties = 1
                    elif d == best_delta:
                        n_ties += 1
                        if _next_below(rng_state, n_ties) == 0:
                            ch_v = v
                            ch_c = c
                            ch_flag = flag
        else:
            ncrit = 0
            for v in range(n):
                if gamma[v, colors[v]] > 0:
                    crit_buf[ncrit] = v
                    ncrit += 1
            if ncrit == 0:
                break
            for _ in range(rep):
                v = crit_buf[_next_below(rng_state, ncrit)]
                cv = colors[v]
                c = np.int32(_next_below(rng_state, k - 1))
                if c >= cv:
                    c += 1
                d = np.int64(gamma[v, c]) - np.int64(gamma[v, cv])
                if tabu_until[v, c] > it and conflicts + d >= best_f:
                    if d < fb_delta:
                        fb_delta = d
                        fb_v = v
                        fb_c = c
                        fb_ties = 1
                    elif d == fb_delta:
                        fb_ties += 1
                        if _next_below(rng_state, fb_ties) == 0:
                            fb_v = v
                            fb_c = c
                    continue
                flag = FLAG_ASPIRATION if tabu_until[v, c] > it else FLAG_NORMAL
                if d < best_delta:
                    best_delta = d
                    ch_v = v
                    ch_c = c
                    ch_flag = flag
                    n_ties = 1
                elif d == best_delta:
                    n_ties += 1
                    if _next_below(rng_state, n_ties) == 0:
                        ch_v = v
                        ch_c = c
                        ch_flag = flag

        if ch_v < 0:
            if fb_v < 0:
                break  # no moves exist at all (k == 1 guard keeps this unreachable)
            ch_v = fb_v
            ch_c = fb_c
            best_delta = fb_delta
            ch_flag = FLAG_FALLBACK

        old = colors[ch_v]
        for idx in range(offsets[ch_v], offsets[ch_v + 1]):
            u = indices[idx]
            gamma[u, old] -= 1
            gamma[u, ch_c] += 1
        colors[ch_v] = ch_c
        conflicts += best_delta
        tabu_until[ch_v, old] = it + tenure + 1

        if trace_len < trace_cap:
            trace[trace_len, 0] = ch_v
            trace[trace_len, 1] = old
            trace[trace_len, 2] = ch_c
            trace[trace_len, 3] = best_delta
            trace[trace_len, 4] = ch_flag
            trace_len += 1

        it += 1
        iters_done += 1
        evals += 1

        if conflicts < best_f:
            best_f = conflicts
            for v in range(n):
                best_colors[v] = colors[v]

    return conflicts, best_f, iters_done, evals, trace_len


@njit(cache=True, nogil=True)
def gpx_kernel(colors1, colors2, k, seed):
    """Greedy partition crossover: alternate parents, inherit largest class.

    Slot c takes the largest color class still present in the current parent
    (ties to the lower class index); inherited vertices are removed from both
    parents. Vertices left after k slots get uniform random colors.
    """
    n = colors1.shape[0]
    state = new_rng_state(seed)
    child = np.full(n, -1, dtype=np.int32)
    counts = np.zeros(k, dtype=np.int64)
    remaining = n
    for slot in range(k):
        parent = colors1 if slot % 2 == 0 else colors2
        if remaining == 0:
            break
        for c in range(k):
            counts[c] = 0
        for v in range(n):
            if child[v] < 0:
                counts[parent[v]] += 1
        best_c = 0
        for c in range(1, k):
            if counts[c] > counts[best_c]:
                best_c = c
        if counts[best_c] == 0:
            break
        for v in range(n):
            if child[v] < 0 and parent[v] == best_c:
                child[v] = slot
                remaining -= 1
    for v in range(n):
        if child[v] < 0:
            child[v] = np.int32(_next_below(state, k))
    return child


@njit(cache=True, nogil=True)
def dsatur_kernel(offsets, indices, n):
    """DSATUR coloring: max saturation, then max degree, then lowest id."""
    colors = np.full(n, -1, dtype=np.int32)
    sat = np.zeros(n, dtype=np.int32)
    degrees = np.empty(n, dtype=np.int64)
    maxdeg = 0
    for v in range(n):
        degrees[v] = offsets[v + 1] - offsets[v]
        if degrees[v] > maxdeg:
            maxdeg = degrees[v]
    # A vertex never needs a color beyond its degree + 1.
    flags = np.zeros((n, maxdeg + 2), dtype=np.bool_)
    for _ in range(n):
        bv = -1
        bs = np.int32(-1)
        bd = np.int64(-1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            if sat[v] > bs or (sat[v] == bs and degrees[v] > bd):
                bv = v
                bs = sat[v]
                bd = degrees[v]
        c = np.int32(0)
        while flags[bv, c]:
            c += 1
        colors[bv] = c
        for idx in range(offsets[bv], offsets[bv + 1]):
            u = indices[idx]
            if not flags[u, c]:
                flags[u, c] = True
                sat[u] += 1
    return colors
