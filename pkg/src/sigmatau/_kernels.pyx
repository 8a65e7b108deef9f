# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.

Each function raises OverflowError when an int64 intermediate could overflow
(or when the input simply does not fit the fixed-width layout); the backend
dispatcher then falls back to the pure-Python twins in _pykernels, which use
arbitrary-precision ints.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    """
    #define POPCOUNT64(x) __builtin_popcountll(x)
    #define CTZ64(x) __builtin_ctzll(x)
    """
    int POPCOUNT64(unsigned long long x)
    int CTZ64(unsigned long long x)

# products stay below 2**62 as long as factors stay below this
cdef int64_t GUARD = (<int64_t>1) << 31


def det_bareiss_i64(rows):
    """Bareiss determinant over int64; OverflowError if entries may overflow."""
    cdef Py_ssize_t n = len(rows)
    if n == 0:
        return 1
    cdef int64_t *a = <int64_t *> malloc(n * n * sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k, r
    cdef int64_t v, pk, aik, prev
    cdef int sign = 1
    cdef bint found
    try:
        for i in range(n):
            row = rows[i]
            if len(row) != n:
                raise ValueError("square matrix required")
            for j in range(n):
                v = row[j]
                if v >= GUARD or v <= -GUARD:
                    raise OverflowError("entry too large for int64 kernel")
                a[i * n + j] = v
        prev = 1
        for k in range(n - 1):
            if a[k * n + k] == 0:
                found = False
                for r in range(k + 1, n):
                    if a[r * n + k] != 0:
                        for j in range(n):
                            v = a[k * n + j]
                            a[k * n + j] = a[r * n + j]
                            a[r * n + j] = v
                        sign = -sign
                        found = True
                        break
                if not found:
                    return 0
            pk = a[k * n + k]
            for i in range(k + 1, n):
                aik = a[i * n + k]
                a[i * n + k] = 0
                for j in range(k + 1, n):
                    # exact division, so C truncation is safe
                    v = (pk * a[i * n + j] - aik * a[k * n + j]) / prev
                    if v >= GUARD or v <= -GUARD:
                        raise OverflowError("intermediate too large for int64 kernel")
                    a[i * n + j] = v
            prev = pk
        return sign * a[(n - 1) * n + (n - 1)]
    finally:
        free(a)


def derivation_failure_i64(table, d, sig, tau):
    """First basis pair violating the twisted Leibniz law, None when clean.

    Same contract as _pykernels.derivation_failure. Inputs are the n x n x n
    structure tensor and three n x n image tables.
    """
    cdef Py_ssize_t n = len(table)
    if n == 0:
        return None
    # magnitude pre-scan in Python ints, before any casting can wrap
    m_tab = max((abs(v) for row in table for cell in row for v in cell), default=0)
    m_img = 0
    for imgs in (d, sig, tau):
        for cell in imgs:
            for v in cell:
                if abs(v) > m_img:
                    m_img = abs(v)
    if n * n * max(m_tab, 1) * max(m_img, 1) * max(m_img, 1) >= (1 << 62):
        raise OverflowError("values too large for int64 kernel")

    cdef int64_t *tab = <int64_t *> malloc(n * n * n * sizeof(int64_t))
    cdef int64_t *dd = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *ss = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *tt = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *lhs = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *rhs = <int64_t *> malloc(n * sizeof(int64_t))
    if tab == NULL or dd == NULL or ss == NULL or tt == NULL or lhs == NULL or rhs == NULL:
        free(tab); free(dd); free(ss); free(tt); free(lhs); free(rhs)
        raise MemoryError()
    cdef Py_ssize_t i, j, s, t, r
    cdef int64_t c, cs, ct, kk
    try:
        for i in range(n):
            ti = table[i]
            for j in range(n):
                cell = ti[j]
                for r in range(n):
                    tab[(i * n + j) * n + r] = cell[r]
        for i in range(n):
            cd = d[i]
            cs_row = sig[i]
            ct_row = tau[i]
            for r in range(n):
                dd[i * n + r] = cd[r]
                ss[i * n + r] = cs_row[r]
                tt[i * n + r] = ct_row[r]
        for i in range(n):
            for j in range(n):
                for r in range(n):
                    lhs[r] = 0
                    rhs[r] = 0
                for s in range(n):
                    c = tab[(i * n + j) * n + s]
                    if c != 0:
                        for r in range(n):
                            lhs[r] += c * dd[s * n + r]
                for s in range(n):
                    cs = dd[i * n + s]
                    if cs != 0:
                        for t in range(n):
                            ct = tt[j * n + t]
                            if ct != 0:
                                kk = cs * ct
                                for r in range(n):
                                    rhs[r] += kk * tab[(s * n + t) * n + r]
                for s in range(n):
                    cs = ss[i * n + s]
                    if cs != 0:
                        for t in range(n):
                            ct = dd[j * n + t]
                            if ct != 0:
                                kk = cs * ct
                                for r in range(n):
                                    rhs[r] += kk * tab[(s * n + t) * n + r]
                for r in range(n):
                    if lhs[r] != rhs[r]:
                        return (i, j)
        return None
    finally:
        free(tab); free(dd); free(ss); free(tt); free(lhs); free(rhs)


def min_weight_gf2_u64(masks, unsigned long long start, unsigned long long stop):
    """Gray-walk minimum weight over message indices start..stop (see pure twin)."""
    cdef Py_ssize_t k = len(masks)
    if k > 62:
        raise OverflowError("too many generator rows for the u64 walk")
    if stop < start:
        return None
    cdef uint64_t *mk = <uint64_t *> malloc(k * sizeof(uint64_t) if k else sizeof(uint64_t))
    if mk == NULL:
        raise MemoryError()
    cdef Py_ssize_t b
    cdef uint64_t word, g
    cdef unsigned long long m
    cdef int w, best
    try:
        for b in range(k):
            mk[b] = masks[b]
        g = start ^ (start >> 1)
        word = 0
        b = 0
        while g:
            if g & 1:
                word ^= mk[b]
            g >>= 1
            b += 1
        best = POPCOUNT64(word)
        for m in range(start + 1, stop + 1):
            word ^= mk[CTZ64(m)]
            w = POPCOUNT64(word)
            if w < best:
                best = w
        return best
    finally:
        free(mk)
