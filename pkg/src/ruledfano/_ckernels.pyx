# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_pykernels``.

Arithmetic is done in C long long. Inputs are range-checked first so that no
intermediate can overflow; out-of-range inputs raise OverflowError and the
caller falls back to the Python-int kernels.
"""

BACKEND = "cython"

# |coefficient| bounds that keep every intermediate well inside 2**63.
cdef long long MUL_BOUND = 268435456    # 2**28
cdef long long CHI_BOUND = 256


cdef inline bint _big(long long v, long long bound) nogil:
    return v > bound or v < -bound


def ring_mul(a, b, long long c):
    cdef long long a0, a1, a2, a3, a4, a5, b0, b1, b2, b3, b4, b5
    if len(a) != 6 or len(b) != 6:
        raise ValueError("expected 6-vectors")
    for v in a:
        if v > MUL_BOUND or v < -MUL_BOUND:
            raise OverflowError("coefficient outside compiled range")
    for v in b:
        if v > MUL_BOUND or v < -MUL_BOUND:
            raise OverflowError("coefficient outside compiled range")
    if _big(c, 16):
        raise OverflowError("model parameter outside compiled range")
    a0, a1, a2, a3, a4, a5 = a
    b0, b1, b2, b3, b4, b5 = b
    return (
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a2 * b0,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1 + 2 * a1 * b1,
        a0 * b4 + a4 * b0 + a2 * b2 - c * a1 * b1,
        a0 * b5 + a5 * b0 + 2 * (a1 * b3 + a3 * b1)
        + a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
    )


cdef inline long long _pair(long long x, long long y,
                            long long p, long long q) nogil:
    return 2 * x * p + x * q + y * p


cdef inline long long _chi12(long long c, long long r, long long x1,
                             long long y1, long long x2, long long y2,
                             long long z3) nogil:
    cdef long long sq0 = 2 * x1 * x1 + 2 * x1 * y1
    cdef long long sq1 = y1 * y1 - c * x1 * x1
    cdef long long t1 = _pair(x1, y1, 18, -2 - 4 * c)
    cdef long long t2 = 3 * _pair(2, 1, sq0 - 2 * x2, sq1 - 2 * y2)
    cdef long long t3 = 2 * (_pair(x1, y1, sq0, sq1) - 3 * _pair(x1, y1, x2, y2))
    return 12 * r + t1 + t2 + t3 + 6 * z3


cdef inline long long _twisted(long long c, long long r, long long x1,
                               long long y1, long long x2, long long y2,
                               long long z3, long long dx,
                               long long dy) nogil:
    cdef long long cr2 = r * (r - 1) / 2
    cdef long long cr12 = (r - 1) * (r - 2) / 2
    cdef long long cr3 = r * (r - 1) * (r - 2) / 6
    cdef long long e0 = 2 * x1 * dx + x1 * dy + y1 * dx
    cdef long long e1 = y1 * dy - c * x1 * dx
    cdef long long d0 = 2 * dx * dx + 2 * dx * dy
    cdef long long d1 = dy * dy - c * dx * dx
    cdef long long nz3 = (z3 + (r - 2) * _pair(dx, dy, x2, y2)
                          + cr12 * _pair(dx, dy, e0, e1)
                          + cr3 * _pair(dx, dy, d0, d1))
    cdef long long nx2 = x2 + (r - 1) * e0 + cr2 * d0
    cdef long long ny2 = y2 + (r - 1) * e1 + cr2 * d1
    return _chi12(c, r, x1 + r * dx, y1 + r * dy, nx2, ny2, nz3)


cdef _check(values):
    for v in values:
        if v > CHI_BOUND or v < -CHI_BOUND:
            raise OverflowError("input outside compiled range")


def chi12(c, r, x1, y1, x2, y2, z3):
    _check((c, r, x1, y1, x2, y2, z3))
    return _chi12(c, r, x1, y1, x2, y2, z3)


def twisted_chi12(c, r, x1, y1, x2, y2, z3, dx, dy):
    _check((c, r, x1, y1, x2, y2, z3, dx, dy))
    return _twisted(c, r, x1, y1, x2, y2, z3, dx, dy)


def twisted_chi12_grid(c, r, x1, y1, x2, y2, z3, l1lo, l1hi, l2lo, l2hi):
    _check((c, r, x1, y1, x2, y2, z3, l1lo, l1hi, l2lo, l2hi))
    cdef long long cc = c, rr = r, a1 = x1, b1 = y1, a2 = x2, b2 = y2, a3 = z3
    cdef long long dx, dy
    cdef list out = []
    for dx in range(l1lo, l1hi + 1):
        for dy in range(l2lo, l2hi + 1):
            out.append(_twisted(cc, rr, a1, b1, a2, b2, a3, dx, dy))
    return out
