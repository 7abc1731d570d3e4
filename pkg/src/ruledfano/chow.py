"""Exact Chow ring arithmetic on the ruled Fano threefolds X_c = P(F_c).

A(X_c) is generated by the relative hyperplane class ``xi`` and the pullback
``f`` of a line in the plane, subject to

    xi^2 = 2 xi f - c f^2,    f^3 = 0.

Every element is kept in normal form over the basis

    (1; xi, f; xi*f, f^2; xi*f^2)

with exact rational coefficients, and the degree map sends xi*f^2 to 1.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import kernels
from .errors import HomogeneityError, ModelMismatchError, ParameterError

BASIS = ("1", "xi", "f", "xi*f", "f^2", "xi*f^2")
GRADING = (0, 1, 1, 2, 2, 3)
# basis indices of each graded piece
COMPONENTS = ((0,), (1, 2), (3, 4), (5,))

_ZERO6 = (Fraction(0),) * 6


@dataclass(frozen=True)
class ThreefoldModel:
    """Fixed intersection-theoretic data of X_c."""

    c: int

    def __post_init__(self):
        if not isinstance(self.c, int) or isinstance(self.c, bool) or not 0 <= self.c <= 4:
            raise ParameterError(f"c must be an integer in 0..4, got {self.c!r}")

    @property
    def relation(self):
        """Coefficients (p, q) with xi^2 = p xi f + q f^2."""
        return (2, -self.c)

    @property
    def degree_table(self):
        """(deg xi^3, deg xi^2 f, deg xi f^2, deg f^3)."""
        return (4 - self.c, 2, 1, 0)

    def element(self, *coeffs):
        return ChowElement(self, tuple(Fraction(x) for x in coeffs))

    def zero(self):
        return ChowElement(self, _ZERO6)

    def one(self):
        return self.element(1, 0, 0, 0, 0, 0)

    def divisor(self, a, b):
        """The degree-1 class a*xi + b*f."""
        return self.element(0, a, b, 0, 0, 0)

    def curve(self, a, b):
        """The degree-2 class a*xi*f + b*f^2."""
        return self.element(0, 0, 0, a, b, 0)

    def point(self, a=1):
        return self.element(0, 0, 0, 0, 0, a)

    @property
    def xi(self):
        return self.divisor(1, 0)

    @property
    def f(self):
        return self.divisor(0, 1)

    @property
    def h(self):
        """The polarization xi + f."""
        return self.divisor(1, 1)

    @property
    def canonical(self):
        """K_X = -2 xi - f."""
        return self.divisor(-2, -1)

    @property
    def c1_tangent(self):
        return self.divisor(2, 1)

    @property
    def c2_tangent(self):
        return self.curve(6, -3)


@lru_cache(maxsize=None)
def make_model(c):
    """Return the model of X_c for c in 0..4."""
    return ThreefoldModel(c)


def _as_ints(coeffs):
    """Scale a coefficient tuple to integers; returns (ints, denominator)."""
    den = lcm(*(x.denominator for x in coeffs))
    if den == 1:
        return tuple(x.numerator for x in coeffs), 1
    return tuple(x.numerator * (den // x.denominator) for x in coeffs), den


@dataclass(frozen=True)
class ChowElement:
    model: ThreefoldModel
    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 6:
            raise ValueError("a Chow element has six coefficients")

    @property
    def c(self):
        return self.model.c

    def _check(self, other):
        if not isinstance(other, ChowElement):
            return NotImplemented
        if other.model != self.model:
            raise ModelMismatchError(
                f"elements of X_{self.c} and X_{other.c} cannot be combined")
        return other

    def _scalar(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Fraction(other)
        return None

    def __add__(self, other):
        s = self._scalar(other)
        if s is not None:
            other = self.model.one() * s
        elif self._check(other) is NotImplemented:
            return NotImplemented
        return ChowElement(self.model, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return ChowElement(self.model, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        s = self._scalar(other)
        if s is not None:
            return ChowElement(self.model, tuple(x * s for x in self.coeffs))
        if self._check(other) is NotImplemented:
            return NotImplemented
        a, da = _as_ints(self.coeffs)
        b, db = _as_ints(other.coeffs)
        prod = kernels.ring_mul(a, b, self.c)
        den = da * db
        if den == 1:
            return ChowElement(self.model, tuple(map(Fraction, prod)))
        return ChowElement(self.model, tuple(Fraction(x, den) for x in prod))

    __rmul__ = __mul__

    def __truediv__(self, other):
        s = self._scalar(other)
        if s is None:
            return NotImplemented
        return self * (1 / s)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        return _power(self, n)

    def __bool__(self):
        return any(self.coeffs)

    def degree(self):
        return self.coeffs[5]

    def component(self, k):
        return graded_component(self, k)

    def is_homogeneous(self, k):
        """True if all nonzero coefficients sit in degree k (zero counts)."""
        return all(x == 0 for i, x in enumerate(self.coeffs) if GRADING[i] != k)

    def is_integral(self):
        return all(x.denominator == 1 for x in self.coeffs)

    def __str__(self):
        return format_element(self)


def _power(a, n):
    out = a.model.one()
    base = a
    while n:
        if n & 1:
            out = out * base
        base = base * base
        n >>= 1
    return out


def ring_add(a, b):
    return a + b


def ring_mul(a, b):
    return a * b


def degree(a):
    """Push a class forward to a point: the coefficient of xi*f^2."""
    return a.coeffs[5]


def graded_component(a, k):
    if not isinstance(k, int) or not 0 <= k <= 3:
        raise ParameterError(f"graded degree must be in 0..3, got {k!r}")
    keep = COMPONENTS[k]
    return ChowElement(a.model, tuple(x if i in keep else Fraction(0)
                                      for i, x in enumerate(a.coeffs)))


def require_homogeneous(a, k, what="class"):
    if not a.is_homogeneous(k):
        raise HomogeneityError(f"{what} must be homogeneous of degree {k}, got {a}")
    return a


def format_rational(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_element(a):
    """Render in basis order, e.g. ``2*xi*f - 2*f^2``; zero renders as ``0``."""
    parts = []
    for coeff, name in zip(a.coeffs, BASIS):
        if coeff == 0:
            continue
        mag = abs(coeff)
        if name == "1":
            body = format_rational(mag)
        elif mag == 1:
            body = name
        else:
            body = f"{format_rational(mag)}*{name}"
        sign = "-" if coeff < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"
