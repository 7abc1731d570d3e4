"""Pure-Python integer kernels for the Chow ring of X_c.

Elements are 6-tuples of integers over the basis (1; xi, f; xi*f, f^2; xi*f^2).
The compiled module ``_ckernels`` exposes the same functions with the same
signatures; ``ruledfano.kernels`` picks one at import time.
"""

BACKEND = "python"


def ring_mul(a, b, c):
    """Product of two integer 6-vectors, reduced with xi^2 = 2 xi f - c f^2, f^3 = 0."""
    a0, a1, a2, a3, a4, a5 = a
    b0, b1, b2, b3, b4, b5 = b
    return (
        a0 * b0,
        a0 * b1 + a1 * b0,
        a0 * b2 + a2 * b0,
        a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1 + 2 * a1 * b1,
        a0 * b4 + a4 * b0 + a2 * b2 - c * a1 * b1,
        a0 * b5 + a5 * b0
        + 2 * (a1 * b3 + a3 * b1)
        + a1 * b4 + a4 * b1
        + a2 * b3 + a3 * b2,
    )


def _pair(x, y, p, q):
    # deg((x xi + y f) * (p xi f + q f^2))
    return 2 * x * p + x * q + y * p


def _chi12(c, r, x1, y1, x2, y2, z3):
    sq0 = 2 * x1 * x1 + 2 * x1 * y1
    sq1 = y1 * y1 - c * x1 * x1
    # c1 * (c1(T)^2 + c2(T)); c1(T)^2 + c2(T) = 18 xi f + (-2 - 4c) f^2
    t1 = _pair(x1, y1, 18, -2 - 4 * c)
    # 3 * (c1^2 - 2 c2) * c1(T),  c1(T) = 2 xi + f
    t2 = 3 * _pair(2, 1, sq0 - 2 * x2, sq1 - 2 * y2)
    # 2 * (c1^3 - 3 c1 c2)
    t3 = 2 * (_pair(x1, y1, sq0, sq1) - 3 * _pair(x1, y1, x2, y2))
    return 12 * r + t1 + t2 + t3 + 6 * z3


def chi12(c, r, x1, y1, x2, y2, z3):
    """Twelve times the Euler characteristic of an integral class.

    The class has rank r, c1 = x1 xi + y1 f, c2 = x2 xi f + y2 f^2 and
    deg c3 = z3.
    """
    return _chi12(c, r, x1, y1, x2, y2, z3)


def _twist(c, r, x1, y1, x2, y2, z3, dx, dy):
    cr2 = r * (r - 1) // 2
    cr12 = (r - 1) * (r - 2) // 2
    cr3 = r * (r - 1) * (r - 2) // 6
    # c1 * D and D^2 in degree 2
    e0 = 2 * x1 * dx + x1 * dy + y1 * dx
    e1 = y1 * dy - c * x1 * dx
    d0 = 2 * dx * dx + 2 * dx * dy
    d1 = dy * dy - c * dx * dx
    nz3 = (
        z3
        + (r - 2) * _pair(dx, dy, x2, y2)
        + cr12 * _pair(dx, dy, e0, e1)
        + cr3 * _pair(dx, dy, d0, d1)
    )
    nx2 = x2 + (r - 1) * e0 + cr2 * d0
    ny2 = y2 + (r - 1) * e1 + cr2 * d1
    return x1 + r * dx, y1 + r * dy, nx2, ny2, nz3


def twist_coords(c, r, x1, y1, x2, y2, z3, dx, dy):
    """Coordinates (x1, y1, x2, y2, z3) of the class twisted by dx*xi + dy*f."""
    return _twist(c, r, x1, y1, x2, y2, z3, dx, dy)


def twisted_chi12(c, r, x1, y1, x2, y2, z3, dx, dy):
    """Twelve times chi of the class twisted by dx*xi + dy*f."""
    tx1, ty1, tx2, ty2, tz3 = _twist(c, r, x1, y1, x2, y2, z3, dx, dy)
    return _chi12(c, r, tx1, ty1, tx2, ty2, tz3)


def twisted_chi12_grid(c, r, x1, y1, x2, y2, z3, l1lo, l1hi, l2lo, l2hi):
    """Row-major list of twisted_chi12 over l1lo..l1hi (outer) x l2lo..l2hi."""
    out = []
    for dx in range(l1lo, l1hi + 1):
        for dy in range(l2lo, l2hi + 1):
            out.append(twisted_chi12(c, r, x1, y1, x2, y2, z3, dx, dy))
    return out
