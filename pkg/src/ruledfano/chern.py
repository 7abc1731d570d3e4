"""Chern classes, Chern character, Todd class and Riemann-Roch on X_c."""

from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .chow import ChowElement, ThreefoldModel, degree, make_model, require_homogeneous
from .errors import ConsistencyError, ParameterError


@dataclass(frozen=True)
class SheafClass:
    """Rank and Chern classes of a coherent sheaf on X_c."""

    model: ThreefoldModel
    rank: int
    c1: ChowElement
    c2: ChowElement
    c3: ChowElement = None

    def __post_init__(self):
        if self.c3 is None:
            object.__setattr__(self, "c3", self.model.zero())
        if self.rank < 0:
            raise ParameterError(f"rank must be non-negative, got {self.rank}")
        for k, ck in ((1, self.c1), (2, self.c2), (3, self.c3)):
            if ck.model != self.model:
                raise ParameterError(f"c{k} lives on X_{ck.c}, not X_{self.model.c}")
            require_homogeneous(ck, k, f"c{k}")

    @property
    def c(self):
        return self.model.c

    def total_chern(self):
        return self.model.one() + self.c1 + self.c2 + self.c3

    def is_integral(self):
        return all(x.is_integral() for x in (self.c1, self.c2, self.c3))

    def coordinates(self):
        """(x1, y1, x2, y2, z3) with c1 = x1 xi + y1 f, c2 = x2 xi f + y2 f^2, deg c3 = z3."""
        return (self.c1.coeffs[1], self.c1.coeffs[2], self.c2.coeffs[3],
                self.c2.coeffs[4], self.c3.coeffs[5])


def sheaf_class(c, rank, c1=(0, 0), c2=(0, 0), c3=0):
    """Build a class on X_c from coordinates (see SheafClass.coordinates)."""
    m = make_model(c)
    return SheafClass(m, rank, m.divisor(*c1), m.curve(*c2), m.point(c3))


def line_bundle(model, a, b):
    """Class of O(a xi + b f)."""
    return SheafClass(model, 1, model.divisor(a, b), model.zero(), model.zero())


def from_total(model, rank, total):
    return SheafClass(model, rank, total.component(1), total.component(2), total.component(3))


def _inverse_total(total):
    # (1 + x)^-1 = 1 - x + x^2 - x^3 for x nilpotent above degree 3
    x = total - total.model.one()
    return total.model.one() - x + x * x - x * x * x


def direct_sum(s, t):
    return from_total(s.model, s.rank + t.rank, s.total_chern() * t.total_chern())


def kernel_class(s, t):
    """Class of the kernel of a surjection s -> t (Whitney quotient c(s)/c(t))."""
    if t.rank > s.rank:
        raise ParameterError("the quotient cannot have larger rank than the source")
    return from_total(s.model, s.rank - t.rank, s.total_chern() * _inverse_total(t.total_chern()))


def twist(s, D):
    """Chern classes of s tensored by the line bundle O(D)."""
    require_homogeneous(D, 1, "twisting divisor")
    if D.model != s.model:
        raise ParameterError(f"cannot twist a class on X_{s.c} by a divisor on X_{D.c}")
    if s.is_integral() and D.is_integral():
        x1, y1, x2, y2, z3 = (int(v) for v in s.coordinates())
        n = kernels.twist_coords(s.c, s.rank, x1, y1, x2, y2, z3, int(D.coeffs[1]), int(D.coeffs[2]))
        m = s.model
        return SheafClass(m, s.rank, m.divisor(n[0], n[1]), m.curve(n[2], n[3]), m.point(n[4]))
    return _twist_generic(s, D)


def _twist_generic(s, D):
    r = s.rank
    c1, c2, c3 = s.c1, s.c2, s.c3
    d2 = D * D
    n1 = c1 + D * r
    n2 = c2 + c1 * D * (r - 1) + d2 * (r * (r - 1) // 2)
    n3 = (c3 + c2 * D * (r - 2) + c1 * d2 * ((r - 1) * (r - 2) // 2)
          + d2 * D * (r * (r - 1) * (r - 2) // 6))
    return SheafClass(s.model, r, n1, n2, n3)


def dual(s):
    return SheafClass(s.model, s.rank, -s.c1, s.c2, -s.c3)


def chern_character(s):
    c1, c2, c3 = s.c1, s.c2, s.c3
    return (s.model.one() * s.rank + c1 + (c1 * c1 - c2 * 2) / 2
            + (c1 * c1 * c1 - c1 * c2 * 3 + c3 * 3) / 6)


def todd_class(model):
    t1, t2 = model.c1_tangent, model.c2_tangent
    return model.one() + t1 / 2 + (t1 * t1 + t2) / 12 + (t1 * t2) / 24


def hrr_chi(s):
    """deg(ch(s) * td(X)) through generic rational Chow arithmetic."""
    return degree(chern_character(s) * todd_class(s.model))


def _from_chi12(n12):
    if n12 % 12:
        raise ConsistencyError(
            f"Euler characteristic {Fraction(n12, 12)} is not an integer; "
            "the Chern data cannot come from a coherent sheaf")
    return n12 // 12


def euler_characteristic(s):
    """Exact chi(s) by Hirzebruch-Riemann-Roch; raises ConsistencyError if non-integral."""
    if s.is_integral():
        x1, y1, x2, y2, z3 = (int(v) for v in s.coordinates())
        return _from_chi12(kernels.chi12(s.c, s.rank, x1, y1, x2, y2, z3))
    value = hrr_chi(s)
    if value.denominator != 1:
        raise ConsistencyError(f"Euler characteristic {value} is not an integer")
    return int(value)


def twisted_chi_grid(s, l1_range, l2_range):
    """{(l1, l2): chi(s(l1 xi + l2 f))} over two inclusive integer ranges."""
    (a, b), (p, q) = l1_range, l2_range
    if not s.is_integral():
        raise ParameterError("twisted_chi_grid needs integral Chern data")
    x1, y1, x2, y2, z3 = (int(v) for v in s.coordinates())
    values = kernels.twisted_chi12_grid(s.c, s.rank, x1, y1, x2, y2, z3, a, b, p, q)
    keys = [(l1, l2) for l1 in range(a, b + 1) for l2 in range(p, q + 1)]
    return {k: _from_chi12(v) for k, v in zip(keys, values)}


def endomorphism_class(s):
    """Chern classes of E (x) E^dual for a rank 2 class E."""
    if s.rank != 2:
        raise ParameterError(f"endomorphism_class needs rank 2, got rank {s.rank}")
    m = s.model
    return SheafClass(m, 4, m.zero(), s.c2 * 4 - s.c1 * s.c1, m.zero())


def orientable_rank2(model, alpha, beta):
    """The rank 2 class with c1 = 2 xi + 3 f, c2 = alpha xi f + beta f^2, c3 = 0."""
    return SheafClass(model, 2, model.divisor(2, 3), model.curve(alpha, beta), model.zero())


@dataclass(frozen=True)
class RRPolynomialInputs:
    alpha: int
    beta: int
    l1: int
    l2: int
    c: int = field(default=0)


def rr_closed_form(inp):
    """Closed-form chi(E(l1 xi + l2 f)) for the orientable rank 2 class E."""
    a, b, x, y, c = inp.alpha, inp.beta, inp.l1, inp.l2, inp.c
    # times 3 to stay in integers
    three = ((4 - c) * x ** 3 + 3 * (2 * x * x * y + x * y * y + (12 - 2 * c) * x * x
                                     + 12 * x * y + 2 * y * y)
             + (143 - 14 * c - 6 * a - 3 * b) * x
             + 3 * ((21 - a) * y - 6 * a - 2 * b + 68 - 4 * c))
    return Fraction(three, 3)
