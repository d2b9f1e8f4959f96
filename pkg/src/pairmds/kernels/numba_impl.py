"""Compiled kernels.

All field arithmetic goes through the index tables of a FieldSpec, passed in
as plain int64 arrays so the same code compiles for every field.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_JIT = dict(cache=True, nogil=True)


@njit(**_JIT)
def _weights(cw):
    n = cw.shape[0]
    wh = 0
    pw = 0
    for i in range(n):
        a = cw[i] != 0
        if a:
            wh += 1
        if a or cw[(i + 1) % n] != 0:
            pw += 1
    return wh, pw


@njit(**_JIT)
def _cmp_support_entries(cw, best, mul, inv):
    """Compare (support, normalized entries) of cw against an already normalized best."""
    n = cw.shape[0]
    for j in range(n):
        a = cw[j] != 0
        b = best[j] != 0
        if a != b:
            return -1 if a else 1
    lead = 0
    while cw[lead] == 0:
        lead += 1
    s = inv[cw[lead]]
    for j in range(n):
        v = mul[s, cw[j]]
        if v != best[j]:
            return -1 if v < best[j] else 1
    return 0


@njit(**_JIT)
def _store_normalized(cw, out, mul, inv):
    n = cw.shape[0]
    lead = 0
    while cw[lead] == 0:
        lead += 1
    s = inv[cw[lead]]
    for j in range(n):
        out[j] = mul[s, cw[j]]


@njit(**_JIT)
def message_minima(G, add, mul, neg, inv, q):
    """Enumerate one codeword per projective point of the row space of G.

    Returns ``(best_h, best_sp, count)``: the minimum Hamming-weight codeword,
    the minimum pair-weight codeword (ties broken by Hamming weight, then
    support, then normalized entries) and the number of codewords visited.
    """
    k, n = G.shape
    rowmul = np.empty((k, q, n), dtype=np.int64)
    for j in range(k):
        for a in range(q):
            for c in range(n):
                rowmul[j, a, c] = mul[a, G[j, c]]
    best_h = np.zeros(n, dtype=np.int64)
    best_s = np.zeros(n, dtype=np.int64)
    bh_w = n + 1
    bs_pw = n + 1
    bs_w = n + 1
    cw = np.empty(n, dtype=np.int64)
    digits = np.zeros(k, dtype=np.int64)
    count = 0
    for lead in range(k):
        for c in range(n):
            cw[c] = G[lead, c]
        digits[:] = 0
        while True:
            count += 1
            wh, pw = _weights(cw)
            if wh < bh_w or (wh == bh_w and _cmp_support_entries(cw, best_h, mul, inv) < 0):
                bh_w = wh
                _store_normalized(cw, best_h, mul, inv)
            if pw < bs_pw or (pw == bs_pw and (wh < bs_w or (
                    wh == bs_w and _cmp_support_entries(cw, best_s, mul, inv) < 0))):
                bs_pw = pw
                bs_w = wh
                _store_normalized(cw, best_s, mul, inv)
            pos = k - 1
            while pos > lead:
                old = digits[pos]
                new = old + 1
                if new == q:
                    new = 0
                for c in range(n):
                    cw[c] = add[add[cw[c], neg[rowmul[pos, old, c]]], rowmul[pos, new, c]]
                digits[pos] = new
                if new != 0:
                    break
                pos -= 1
            if pos == lead:
                break
    return best_h, best_s, count


@njit(**_JIT)
def _rref_sub(H, idx, w, M, pivcol, add, mul, neg, inv):
    """Row-reduce the columns ``idx[:w]`` of H into scratch M; return the rank."""
    r = H.shape[0]
    for i in range(r):
        for j in range(w):
            M[i, j] = H[i, idx[j]]
    rank = 0
    for c in range(w):
        if rank == r:
            break
        p = -1
        for i in range(rank, r):
            if M[i, c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != rank:
            for j in range(w):
                tmp = M[p, j]
                M[p, j] = M[rank, j]
                M[rank, j] = tmp
        s = inv[M[rank, c]]
        for j in range(w):
            M[rank, j] = mul[s, M[rank, j]]
        for i in range(r):
            if i != rank and M[i, c] != 0:
                f = M[i, c]
                for j in range(w):
                    M[i, j] = add[M[i, j], neg[mul[f, M[rank, j]]]]
        pivcol[rank] = c
        rank += 1
    return rank


@njit(**_JIT)
def _full_support_kernel(M, rank, pivcol, w, add, mul, q):
    """Does the kernel of the reduced w-column matrix contain a vector with no zero entry?"""
    t = w - rank
    if t == 0:
        return False
    isfree = np.ones(w, dtype=np.bool_)
    for i in range(rank):
        isfree[pivcol[i]] = False
    free = np.empty(t, dtype=np.int64)
    k = 0
    for j in range(w):
        if isfree[j]:
            free[k] = j
            k += 1
    for i in range(rank):
        hit = False
        for f in range(t):
            if M[i, free[f]] != 0:
                hit = True
                break
        if not hit:
            return False
    # fewer than q+1 hyperplanes never cover a space of dimension >= 2
    if t == 1 or w <= q:
        return True
    y = np.ones(t, dtype=np.int64)
    while True:
        ok = True
        for i in range(rank):
            s = 0
            for f in range(t):
                s = add[s, mul[M[i, free[f]], y[f]]]
            if s == 0:
                ok = False
                break
        if ok:
            return True
        pos = t - 1
        while pos > 0:
            y[pos] += 1
            if y[pos] < q:
                break
            y[pos] = 1
            pos -= 1
        if pos == 0:
            return False


@njit(**_JIT)
def first_dependent_support(H, w, firsts, add, mul, neg, inv, q):
    """Lexicographically first w-subset S (first element drawn from ``firsts``) with rank(H_S) < w."""
    r, n = H.shape
    idx = np.empty(w, dtype=np.int64)
    M = np.empty((max(r, 1), w), dtype=np.int64)
    pivcol = np.empty(max(r, 1), dtype=np.int64)
    checked = 0
    for fi in range(firsts.shape[0]):
        idx[0] = firsts[fi]
        if idx[0] > n - w:
            continue
        for j in range(1, w):
            idx[j] = idx[0] + j
        while True:
            checked += 1
            if r == 0 or _rref_sub(H, idx, w, M, pivcol, add, mul, neg, inv) < w:
                return True, idx.copy(), checked
            # next combination with idx[0] fixed
            pos = w - 1
            while pos >= 1 and idx[pos] == n - w + pos:
                pos -= 1
            if pos < 1:
                break
            idx[pos] += 1
            for j in range(pos + 1, w):
                idx[j] = idx[j - 1] + 1
    return False, idx, checked


@njit(**_JIT)
def scan_pair_supports(H, w, bound, firsts, add, mul, neg, inv, q):
    """Search exact codeword supports of size w with pair weight below ``bound``.

    Supports are walked in lexicographic order, restricted to at most
    ``bound - w - 1`` cyclic runs (pair weight = w + runs for w < n).  Returns
    ``(best, support, checked)``; ``best == bound`` means nothing better exists.
    """
    r, n = H.shape
    best = bound
    best_idx = np.empty(w, dtype=np.int64)
    idx = np.empty(w, dtype=np.int64)
    runs = np.empty(w, dtype=np.int64)
    M = np.empty((max(r, 1), w), dtype=np.int64)
    pivcol = np.empty(max(r, 1), dtype=np.int64)
    checked = 0
    if w >= n:
        return best, best_idx, checked
    for fi in range(firsts.shape[0]):
        first = firsts[fi]
        if first > n - w:
            continue
        idx[0] = first
        runs[0] = 1
        level = 1
        if w == 1:
            level = 0
        else:
            idx[1] = first
        while True:
            limit = best - w - 1
            if idx[0] == 0:
                limit += 1
            if level == 0:
                # only reachable for w == 1: a single support per first element
                cyc = 1
                if cyc <= best - w - 1:
                    checked += 1
                    if r == 0 or _full_support_kernel(
                            M, _rref_sub(H, idx, w, M, pivcol, add, mul, neg, inv), pivcol, w, add, mul, q):
                        best = w + cyc
                        best_idx[:] = idx
                break
            idx[level] += 1
            v = idx[level]
            if v > n - (w - level):
                level -= 1
                if level == 0:
                    break
                continue
            rl = runs[level - 1]
            if v != idx[level - 1] + 1:
                rl += 1
            if rl > limit:
                level -= 1
                if level == 0:
                    break
                continue
            runs[level] = rl
            if level == w - 1:
                cyc = rl
                if idx[0] == 0 and v == n - 1 and rl > 1:
                    cyc -= 1
                if w + cyc < best:
                    checked += 1
                    if r == 0:
                        ok = True
                    else:
                        rank = _rref_sub(H, idx, w, M, pivcol, add, mul, neg, inv)
                        ok = _full_support_kernel(M, rank, pivcol, w, add, mul, q)
                    if ok:
                        best = w + cyc
                        best_idx[:] = idx
            else:
                level += 1
                idx[level] = v
    return best, best_idx, checked


@njit(**_JIT)
def realizable(H, supports, add, mul, neg, inv, q, exact=True):
    """Per row of ``supports``: exact support of a codeword (``exact``) or merely dependent."""
    r = H.shape[0]
    B, w = supports.shape
    out = np.zeros(B, dtype=np.bool_)
    M = np.empty((max(r, 1), w), dtype=np.int64)
    pivcol = np.empty(max(r, 1), dtype=np.int64)
    for b in range(B):
        if r == 0:
            out[b] = True
            continue
        rank = _rref_sub(H, supports[b], w, M, pivcol, add, mul, neg, inv)
        if exact:
            out[b] = _full_support_kernel(M, rank, pivcol, w, add, mul, q)
        else:
            out[b] = rank < w
    return out


@njit(**_JIT)
def batch_pair_weights(C):
    """Hamming and pair weights of every row of a codeword batch."""
    B, n = C.shape
    wh = np.zeros(B, dtype=np.int64)
    pw = np.zeros(B, dtype=np.int64)
    for b in range(B):
        for i in range(n):
            a = C[b, i] != 0
            if a:
                wh[b] += 1
            if a or C[b, (i + 1) % n] != 0:
                pw[b] += 1
    return wh, pw
