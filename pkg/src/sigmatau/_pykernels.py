"""Pure-Python twins of the compiled kernels.

Everything here works on plain Python ints, so there is no overflow to worry
about; the compiled versions in _kernels.pyx bail out (OverflowError) when
int64 intermediates could overflow and the dispatcher falls back to these.
"""

from __future__ import annotations


def det_bareiss(rows) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            row = a[i]
            aik = row[k]
            row[k] = 0
            for j in range(k + 1, n):
                # exact division: every Bareiss minor is an integer
                row[j] = (pk * row[j] - aik * rk[j]) // prev
        prev = pk
    return sign * a[n - 1][n - 1]


def derivation_failure(table, d, sig, tau):
    """First basis pair (i, j) violating D(ei*ej) == D(ei)tau(ej) + sig(ei)D(ej).

    table is the n x n x n structure tensor, d/sig/tau are image tables
    (row i = coordinates of the image of basis element i). Returns None when
    the twisted Leibniz law holds on every pair, scanning in row-major order.
    """
    n = len(table)
    zero = [0] * n
    supports = lambda rows: [
        [(s, c) for s, c in enumerate(row) if c] for row in rows
    ]
    d_supp = supports(d)
    s_supp = supports(sig)
    t_supp = supports(tau)
    for i in range(n):
        di_supp = d_supp[i]
        si_supp = s_supp[i]
        for j in range(n):
            lhs = zero[:]
            for s, c in enumerate(table[i][j]):
                if c:
                    row = d[s]
                    lhs = [x + c * y for x, y in zip(lhs, row)]
            rhs = zero[:]
            for s, cs in di_supp:
                ts = table[s]
                for t, ct in t_supp[j]:
                    k = cs * ct
                    rhs = [x + k * y for x, y in zip(rhs, ts[t])]
            for s, cs in si_supp:
                ts = table[s]
                for t, ct in d_supp[j]:
                    k = cs * ct
                    rhs = [x + k * y for x, y in zip(rhs, ts[t])]
            if lhs != rhs:
                return (i, j)
    return None


def min_weight_gf2(masks, start: int, stop: int) -> int | None:
    """Minimum Hamming weight over messages start..stop (Gray-code walk).

    masks[b] is generator row b as a bitmask. Message index m encodes the
    codeword of gray(m) = m ^ (m >> 1); index 0 is the zero word, so callers
    enumerating a whole code pass start=1, stop=2**k - 1. Returns None for an
    empty range.
    """
    if stop < start:
        return None
    g = start ^ (start >> 1)
    word = 0
    b = 0
    while g:
        if g & 1:
            word ^= masks[b]
        g >>= 1
        b += 1
    best = word.bit_count()
    for m in range(start + 1, stop + 1):
        word ^= masks[(m & -m).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
    return best


def weight_counts_gf2(masks, n: int) -> list[int]:
    """Weight histogram (length n+1) over all 2**k codewords, zero included."""
    counts = [0] * (n + 1)
    counts[0] += 1
    word = 0
    for m in range(1, 1 << len(masks)):
        word ^= masks[(m & -m).bit_length() - 1]
        counts[word.bit_count()] += 1
    return counts


def min_weight_modq(rows, q: int) -> int | None:
    """Minimum weight over all nonzero codewords, exhaustive base-q odometer."""
    k = len(rows)
    if k == 0:
        return None
    n = len(rows[0])
    best = None
    cur = [0] * n

    def rec(i: int, nz: bool) -> None:
        nonlocal best
        if i == k:
            if nz:
                w = sum(1 for v in cur if v)
                if best is None or w < best:
                    best = w
            return
        rec(i + 1, nz)
        row = rows[i]
        for _ in range(q - 1):
            for t in range(n):
                cur[t] = (cur[t] + row[t]) % q
            rec(i + 1, True)
        for t in range(n):
            cur[t] = (cur[t] + row[t]) % q

    rec(0, False)
    return best


def weight_counts_modq(rows, q: int, n: int) -> list[int]:
    """Weight histogram (length n+1) over all q**k codewords, zero included."""
    counts = [0] * (n + 1)
    k = len(rows)
    cur = [0] * n

    def rec(i: int) -> None:
        if i == k:
            counts[sum(1 for v in cur if v)] += 1
            return
        rec(i + 1)
        row = rows[i]
        for _ in range(q - 1):
            for t in range(n):
                cur[t] = (cur[t] + row[t]) % q
            rec(i + 1)
        for t in range(n):
            cur[t] = (cur[t] + row[t]) % q

    rec(0)
    return counts
