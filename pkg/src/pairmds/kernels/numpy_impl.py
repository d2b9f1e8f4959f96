"""Pure-numpy kernels with the same contracts as :mod:`.numba_impl`.

Instead of walking one candidate at a time these batch the work: codewords
are generated a chunk of messages at a time, and candidate supports are
row-reduced together as a ``(batch, r, w)`` stack.
"""

from __future__ import annotations

import itertools

import numpy as np

MESSAGE_CHUNK = 1 << 15
SUPPORT_CHUNK = 4096


def batch_pair_weights(C):
    nz = C != 0
    wh = nz.sum(axis=1)
    pw = (nz | np.roll(nz, -1, axis=1)).sum(axis=1)
    return wh.astype(np.int64), pw.astype(np.int64)


def _normalize_rows(C, mul, inv):
    lead = np.argmax(C != 0, axis=1)
    s = inv[C[np.arange(C.shape[0]), lead]]
    return mul[s[:, None], C]


def _best_row(C, primary_keys, mul, inv):
    """Row of C minimizing (primary_keys..., support, normalized entries)."""
    mask = np.ones(C.shape[0], dtype=bool)
    for key in primary_keys:
        sub = key[mask]
        mask &= key == sub.min()
    cand = C[mask]
    norm = _normalize_rows(cand, mul, inv)
    zero = (cand == 0).astype(np.int64)
    order = np.lexsort(tuple(norm[:, ::-1].T) + tuple(zero[:, ::-1].T))
    return norm[order[0]]


def _key_h(cw):
    return (int((cw != 0).sum()), tuple((cw == 0).astype(int)), tuple(cw))


def _key_sp(cw):
    nz = cw != 0
    pw = int((nz | np.roll(nz, -1)).sum())
    return (pw,) + _key_h(cw)


def message_minima(G, add, mul, neg, inv, q):
    k, n = G.shape
    best_h = best_s = None
    count = 0
    for lead in range(k):
        tail = k - 1 - lead
        total = q**tail
        for start in range(0, total, MESSAGE_CHUNK):
            ids = np.arange(start, min(total, start + MESSAGE_CHUNK), dtype=np.int64)
            acc = np.broadcast_to(G[lead], (ids.size, n)).copy()
            rem = ids
            for j in range(k - 1, lead, -1):
                d = rem % q
                rem = rem // q
                acc = add[acc, mul[d[:, None], G[j][None, :]]]
            count += ids.size
            wh, pw = batch_pair_weights(acc)
            ch = _best_row(acc, [wh], mul, inv)
            cs = _best_row(acc, [pw, wh], mul, inv)
            if best_h is None or _key_h(ch) < _key_h(best_h):
                best_h = ch
            if best_s is None or _key_sp(cs) < _key_sp(best_s):
                best_s = cs
    return best_h.astype(np.int64), best_s.astype(np.int64), count


def _reduce_stack(H, supports, add, mul, neg, inv):
    """Batched Gauss-Jordan of the column selections ``H[:, S]`` for every row S."""
    r = H.shape[0]
    B, w = supports.shape
    M = np.ascontiguousarray(np.transpose(H[:, supports], (1, 0, 2)))  # (B, r, w)
    rank = np.zeros(B, dtype=np.int64)
    pivcol = np.full((B, max(r, 1)), -1, dtype=np.int64)
    rows = np.arange(r)
    for c in range(w):
        cand = (M[:, :, c] != 0) & (rows[None, :] >= rank[:, None])
        sel = np.flatnonzero(cand.any(axis=1))
        if sel.size == 0:
            continue
        p = np.argmax(cand[sel], axis=1)
        rr = rank[sel]
        top = M[sel, rr].copy()
        M[sel, rr] = M[sel, p]
        M[sel, p] = top
        piv = M[sel, rr, c]
        M[sel, rr] = mul[inv[piv][:, None], M[sel, rr]]
        sub = M[sel]
        factors = sub[:, :, c].copy()
        factors[np.arange(sel.size), rr] = 0
        prow = sub[np.arange(sel.size), rr]
        M[sel] = add[sub, neg[mul[factors[:, :, None], prow[:, None, :]]]]
        pivcol[sel, rr] = c
        rank[sel] += 1
    return M, rank, pivcol


def _brute_full_support(R, rank, free, add, mul, q):
    t = len(free)
    for tail in itertools.product(range(1, q), repeat=t - 1):
        y = (1,) + tail
        good = True
        for i in range(rank):
            s = 0
            for f, yf in zip(free, y):
                s = add[s, mul[R[i, f], yf]]
            if s == 0:
                good = False
                break
        if good:
            return True
    return False


def realizable(H, supports, add, mul, neg, inv, q, exact=True):
    """Per support: is it the exact support of a codeword (``exact``) or merely dependent?"""
    supports = np.asarray(supports, dtype=np.int64)
    B, w = supports.shape
    if H.shape[0] == 0 or B == 0:
        return np.ones(B, dtype=bool)
    M, rank, pivcol = _reduce_stack(H, supports, add, mul, neg, inv)
    t = w - rank
    if not exact:
        return t > 0
    r = H.shape[0]
    ispiv = np.zeros((B, w), dtype=bool)
    bb, ii = np.nonzero(pivcol >= 0)
    ispiv[bb, pivcol[bb, ii]] = True
    free = ~ispiv
    in_rank = np.arange(r)[None, :] < rank[:, None]
    covered = ((M != 0) & free[:, None, :]).any(axis=2)
    ok = (covered | ~in_rank).all(axis=1) & (t > 0)
    out = ok & ((t == 1) | (w <= q))
    for b in np.flatnonzero(ok & (t >= 2) & (w > q)):
        out[b] = _brute_full_support(M[b], int(rank[b]), np.flatnonzero(free[b]).tolist(), add, mul, q)
    return out


def _combos_with_first(n, w, firsts):
    for f in firsts:
        f = int(f)
        if f > n - w:
            continue
        for rest in itertools.combinations(range(f + 1, n), w - 1):
            yield (f,) + rest


def _batched(it, size):
    while True:
        chunk = list(itertools.islice(it, size))
        if not chunk:
            return
        yield chunk


def first_dependent_support(H, w, firsts, add, mul, neg, inv, q):
    checked = 0
    for chunk in _batched(_combos_with_first(H.shape[1], w, firsts), SUPPORT_CHUNK):
        S = np.array(chunk, dtype=np.int64).reshape(len(chunk), w)
        hit = realizable(H, S, add, mul, neg, inv, q, exact=False)
        pos = np.flatnonzero(hit)
        if pos.size:
            checked += int(pos[0]) + 1
            return True, S[pos[0]].copy(), checked
        checked += len(chunk)
    return False, np.zeros(w, dtype=np.int64), checked


def cyclic_runs(support, n):
    s = set(support)
    return sum(1 for i in support if (i - 1) % n not in s)


def _run_limited(n, w, firsts, limit_of):
    """Lexicographic w-subsets whose cyclic run count stays within ``limit_of()``.

    ``limit_of`` is re-read as the walk proceeds so the caller can tighten it.
    """
    idx = [0] * w

    def rec(level, runs):
        for v in range(idx[level - 1] + 1, n - (w - level) + 1):
            rl = runs + (0 if v == idx[level - 1] + 1 else 1)
            if rl > limit_of() + (1 if idx[0] == 0 else 0):
                if v != idx[level - 1] + 1:
                    return
                continue
            idx[level] = v
            if level == w - 1:
                cyc = rl - (1 if idx[0] == 0 and v == n - 1 and rl > 1 else 0)
                if cyc <= limit_of():
                    yield tuple(idx), cyc
            else:
                yield from rec(level + 1, rl)

    for f in firsts:
        f = int(f)
        if f > n - w:
            continue
        idx[0] = f
        if w == 1:
            if 1 <= limit_of():
                yield (f,), 1
            continue
        yield from rec(1, 1)


def scan_pair_supports(H, w, bound, firsts, add, mul, neg, inv, q):
    n = H.shape[1]
    state = {"best": int(bound), "idx": np.zeros(w, dtype=np.int64)}
    checked = 0
    if w >= n:
        return state["best"], state["idx"], checked
    gen = _run_limited(n, w, firsts, lambda: state["best"] - w - 1)
    for chunk in _batched(gen, SUPPORT_CHUNK):
        chunk = [(s, c) for s, c in chunk if w + c < state["best"]]
        if not chunk:
            continue
        S = np.array([s for s, _ in chunk], dtype=np.int64).reshape(len(chunk), w)
        ok = realizable(H, S, add, mul, neg, inv, q, exact=True)
        checked += len(chunk)
        for (s, c), good in zip(chunk, ok):
            if good and w + c < state["best"]:
                state["best"] = w + c
                state["idx"] = np.array(s, dtype=np.int64)
    return state["best"], state["idx"], checked
