"""Invariants of rank 2 orientable h-instantons on X_c and the two explicit families.

An orientable rank 2 class has c1 = 2 xi + 3 f (= 4h + K_X), c2 = alpha xi f + beta f^2
and c3 = 0. Its charge is h^1(E(-h)) = -chi(E(-h)) = 3 alpha + beta + c - 21.
"""

from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .chern import SheafClass, euler_characteristic, kernel_class, orientable_rank2, twist
from .chow import degree, make_model
from .errors import ConsistencyError, ParameterError
from .xcoh import CURVE_M, normal_bundle_sections, restriction_cohomology


@dataclass(frozen=True)
class InstantonClass:
    """Chern data of a rank 2 class together with its instanton bookkeeping.

    ``ext1``/``ext2`` are None when the dimension is not known. ``reasons``
    explains every flag that is False. ``details`` carries family specific
    numbers (family dimension, codimension, the independent counts).
    """

    sheaf: SheafClass
    alpha: Fraction
    beta: Fraction
    charge: int
    ext_gap: Fraction
    ext1: int = None
    ext2: int = None
    orientable: bool = True
    ulrich: bool = False
    alpha_admissible: bool = True
    charge_admissible: bool = True
    valid: bool = True
    reasons: tuple = ()
    details: dict = field(default_factory=dict, compare=False)

    @property
    def c(self):
        return self.sheaf.c

    def as_dict(self):
        out = {
            "c": self.c,
            "alpha": _num(self.alpha),
            "beta": _num(self.beta),
            "charge": self.charge,
            "ext_gap": _num(self.ext_gap),
            "ext1": self.ext1,
            "ext2": self.ext2,
            "orientable": self.orientable,
            "ulrich": self.ulrich,
            "alpha_admissible": self.alpha_admissible,
            "charge_admissible": self.charge_admissible,
            "valid": self.valid,
            "reasons": list(self.reasons),
        }
        out.update(self.details)
        return out


def _num(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def charge_formula(alpha, beta, c):
    return 3 * alpha + beta + c - 21


def ext_gap(s):
    """dim Ext^1(E,E) - dim Ext^2(E,E) = 1/2 (c1^2 - 4 c2) K_X - 3 for a stable rank 2 E."""
    m = s.model
    return degree((s.c1 * s.c1 - s.c2 * 4) * m.canonical) / 2 - 3


def orientability_check(s):
    """True iff c1(s) = (4h + K_X) rank / 2."""
    m = s.model
    target = (m.h * 4 + m.canonical) * Fraction(s.rank, 2)
    if not target.is_integral():
        return False
    return s.c1 == target


def _build(s, ext1=None, ext2=None, reasons=(), valid=True, details=None):
    m = s.model
    alpha, beta = s.c2.coeffs[3], s.c2.coeffs[4]
    charge = -euler_characteristic(twist(s, -m.h))
    orientable = s.rank == 2 and orientability_check(s)
    reasons = list(reasons)
    if not orientable:
        reasons.append("c1 is not 2*xi + 3*f, so the class is not orientable")
    elif not s.c3 and charge != charge_formula(alpha, beta, m.c):
        raise ConsistencyError(f"charge {charge} from Riemann-Roch disagrees with 3a+b+c-21")
    alpha_ok = alpha >= 5
    if not alpha_ok:
        reasons.append(f"alpha = {_num(alpha)} < 5, but chi(E(-2xi-f)) = 5 - alpha must be <= 0")
    charge_ok = charge >= 0
    if not charge_ok:
        reasons.append(f"charge {charge} is negative")
    gap = ext_gap(s)
    if ext1 is not None and ext2 is not None and ext1 - ext2 != gap:
        raise ConsistencyError(f"ext1 - ext2 = {ext1 - ext2} but the Chern data give {gap}")
    return InstantonClass(
        sheaf=s, alpha=alpha, beta=beta, charge=charge, ext_gap=gap, ext1=ext1, ext2=ext2,
        orientable=orientable, ulrich=orientable and charge == 0,
        alpha_admissible=alpha_ok, charge_admissible=charge_ok,
        valid=valid and orientable and alpha_ok and charge_ok,
        reasons=tuple(dict.fromkeys(reasons)), details=details or {})


def instanton_invariants(alpha, beta, c):
    """Invariants of the orientable class with c2 = alpha xi f + beta f^2 on X_c."""
    return _build(orientable_rank2(make_model(c), alpha, beta))


@dataclass(frozen=True)
class SerreFamilyParams:
    m: int
    c: int

    def __post_init__(self):
        if self.m < 1:
            raise ParameterError(f"the number of curves must be >= 1, got {self.m}")
        make_model(self.c)


@dataclass(frozen=True)
class PullbackFamilyParams:
    l: int
    c: int

    def __post_init__(self):
        if self.l < 1:
            raise ParameterError(f"l must be >= 1, got {self.l}")
        make_model(self.c)

    @property
    def dims(self):
        """Dimensions of the two vector spaces in the monad for G."""
        return 2 * self.l + 3, 2 * self.l + 1


def serre_ext_dimension(m):
    """dim Ext^1(I_Z(2xi - f), O_X) for Z a disjoint union of m curves of class xi f.

    Each component contributes h^1(O_M(-2)) = 1.
    """
    if m < 0:
        raise ParameterError(f"m must be >= 0, got {m}")
    model = make_model(0)
    _, _, h1 = restriction_cohomology(model.curve(1, 0), model.divisor(0, -2))
    return m * h1


def serre_family(p):
    """Bundles E = F(2f) with F from m disjoint curves of class xi f (alpha = m + 4, beta = 2)."""
    c, m = p.c, p.m
    model = make_model(c)
    alpha = m + 4
    # F has c1 = 2 xi - f and c2 = [Z] = m xi f
    f_class = SheafClass(model, 2, model.divisor(2, -1), model.curve(m, 0))
    s = twist(f_class, model.f * 2)
    threshold = 3 if c == 0 else 2
    reasons = []
    if m < threshold:
        reasons.append("the construction needs alpha >= 6 when c >= 1 and alpha >= 7 when c = 0")
    h0_n, _ = normal_bundle_sections(CURVE_M)
    family_dim = h0_n * m + serre_ext_dimension(m) - 1
    ext1 = 10 * alpha + 4 * c - 54
    details = {
        "m": m,
        "family_dimension": family_dim,
        "codimension": ext1 - family_dim,
    }
    # the count 6m - 1 needs h^0(I_Z(2 xi)) = 0: m >= 3 when c >= 1, m >= 5 when c = 0
    if m < (5 if c == 0 else 3):
        details["caveat"] = ("family dimension count is only established for alpha >= 7 "
                             "when c >= 1 and alpha >= 9 when c = 0")
    return _build(s, ext1=ext1, ext2=0, reasons=reasons, valid=m >= threshold, details=details)


def _plane_chern_of_g(l):
    """(c1, c2) of G = ker(V_{2l+3} (x) O(l+2) -> V_{2l+1} (x) O(l+3)) on the plane."""
    a, b = 2 * l + 3, 2 * l + 1
    # total Chern classes truncated at H^2
    top = (1, a * (l + 2), comb(a, 2) * (l + 2) ** 2)
    bot = (1, b * (l + 3), comb(b, 2) * (l + 3) ** 2)
    g1 = top[1] - bot[1]
    g2 = top[2] - bot[1] * g1 - bot[2]
    return g1, g2


def pullback_family(p):
    """The bundles pi^* G (x) O(xi) built from the monad presentation of G."""
    l, c = p.l, p.c
    model = make_model(c)
    g1, g2 = _plane_chern_of_g(l)
    if (g1, g2) != (3, l * l + 2 * l + 3):
        raise ConsistencyError(f"c(G) = (1, {g1}, {g2}) for l = {l}")
    pulled = SheafClass(model, 2, model.divisor(0, g1), model.curve(0, g2))
    s = twist(pulled, model.xi)
    a, b = p.dims
    quotient_count = 3 * a * b - (a * a + b * b - 1)
    plane_count = 4 * g2 - g1 * g1 - 3
    ext1 = 4 * l * (l + 2)
    if not quotient_count == plane_count == ext1:
        raise ConsistencyError(
            f"dimension counts disagree: {quotient_count}, {plane_count}, {ext1}")
    details = {"l": l, "quotient_count": quotient_count, "plane_count": plane_count}
    return _build(s, ext1=ext1, ext2=0, details=details)


@dataclass(frozen=True)
class Rank0Data:
    """A rank 0 sheaf T by its support class gamma (so c2(T) = -gamma) and degree chi(T(-h))."""

    gamma: object
    d: int
    c3: object

    def sheaf(self):
        m = self.gamma.model
        return SheafClass(m, 0, m.zero(), -self.gamma, self.c3)


def rank0_data(gamma, d):
    """Rank 0 data with support class gamma and degree d; c3 is solved from chi(T(-h)) = d."""
    if d < 0:
        raise ParameterError(f"the degree of a rank 0 sheaf must be >= 0, got {d}")
    m = gamma.model
    # chi(T(-h)) = c3/2 + deg(gamma (c1(T_X)/2 - h)) for c1(T) = 0, c2(T) = -gamma
    c3 = 2 * d - degree(gamma * (m.c1_tangent - m.h * 2))
    t = Rank0Data(gamma, d, m.point(c3))
    if euler_characteristic(twist(t.sheaf(), -m.h)) != d:
        raise ConsistencyError("rank 0 degree does not match Riemann-Roch")
    return t


def line_rank0(model, t=1):
    """O_L(t h) for a line L of class f^2; its degree is t."""
    return rank0_data(model.curve(0, 1), t)


def elementary_transform(e, t):
    """Kernel of a surjection E -> T: charge rises by the degree of T."""
    if t.d < 0:
        raise ParameterError(f"negative degree {t.d}")
    if t.gamma.model != e.sheaf.model:
        raise ParameterError("E and T live on different threefolds")
    m = e.sheaf.model
    s = kernel_class(e.sheaf, t.sheaf())
    ext1 = ext2 = None
    is_line = t.gamma == m.curve(0, 1) and t.d == 1
    if not t.gamma and t.d == 0:
        ext1, ext2 = e.ext1, e.ext2
    elif is_line and e.ext1 is not None and e.ext2 == 0:
        ext1, ext2 = e.ext1 + 4, 0
    out = _build(s, ext1=ext1, ext2=ext2, valid=e.valid, reasons=e.reasons)
    if out.charge != e.charge + t.d:
        raise ConsistencyError("charge did not rise by the degree of T")
    return out


def transform_along_lines(e, times=1):
    """Apply the O_L(1) transform ``times`` times."""
    for _ in range(times):
        e = elementary_transform(e, line_rank0(e.sheaf.model))
    return e


HoppeRegion = namedtuple("HoppeRegion", "c mu pairing points")


def divisor_pairing(c):
    """Coefficients (p, q) with (a xi + b f) . h^2 = p a + q b."""
    m = make_model(c)
    h2 = m.h * m.h
    return int(degree(m.xi * h2)), int(degree(m.f * h2))


def hoppe_region(c, a_range, b_range):
    """Integer (a, b) in the window with (a xi + b f) . h^2 <= -mu(E), mu(E) = c1(E) . h^2 / 2."""
    (alo, ahi), (blo, bhi) = a_range, b_range
    if alo > ahi or blo > bhi:
        raise ParameterError("empty search window")
    m = make_model(c)
    p, q = divisor_pairing(c)
    mu = degree(m.divisor(2, 3) * m.h * m.h) / 2
    points = sorted((a, b) for a in range(alo, ahi + 1) for b in range(blo, bhi + 1)
                    if p * a + q * b <= -mu)
    return HoppeRegion(c, int(mu), (p, q), points)


EffectivityQuadratic = namedtuple("EffectivityQuadratic", "q2 q1 q0 not_effective")


def _transcribed(c, a, b, variant):
    if variant == 1:
        return ((4 - c) * a + 2 * b + 4, 4 * a + 2 * b + 4, a)
    return ((4 - c) * a + 2 * b + 10 - 2 * c, 4 * a + 2 * b + 10, a + 2)


def effectivity_divisor(c, a, b, variant):
    m = make_model(c)
    if variant == 1:
        return m.divisor(a, b + 2)
    if variant == 2:
        return m.divisor(a + 2, b + 1)
    raise ParameterError(f"variant must be 1 or 2, got {variant!r}")


def effectivity_quadratic(c, a, b, variant=1):
    """Coefficients of k -> deg(D . (k xi + f)^2) and whether the region test rules D out."""
    D = effectivity_divisor(c, a, b, variant)
    m = D.model
    q2 = degree(D * m.xi * m.xi)
    q1 = 2 * degree(D * m.xi * m.f)
    q0 = degree(D * m.f * m.f)
    coeffs = tuple(int(x) for x in (q2, q1, q0))
    if coeffs != _transcribed(c, a, b, variant):
        raise ConsistencyError(f"expansion {coeffs} disagrees with the closed form")
    p, q = divisor_pairing(c)
    hyp = a >= 0 and p * a + q * b <= c - 15
    if variant == 2:
        hyp = hyp and c in (2, 3, 4)
    return EffectivityQuadratic(*coeffs, hyp and coeffs[0] < 0)


def leading_bound(c, variant):
    """Upper bound of the leading coefficient under a >= 0 and the Hoppe inequality."""
    return Fraction(c - 7, 2) if variant == 1 else Fraction(5 - 3 * c, 2)


@dataclass(frozen=True)
class Rank0Constraint:
    eta: int
    theta: int
    c2: object
    c3: int

    def chi(self, a, b):
        """chi(T(a xi + b f)) from the closed formula."""
        return (2 * self.eta + self.theta) * (-2 - a) + self.eta * (-2 - b)

    def chi_hrr(self, a, b):
        m = self.c2.model
        s = SheafClass(m, 0, m.zero(), self.c2, m.point(self.c3))
        return euler_characteristic(twist(s, m.divisor(a, b)))


def rank0_constraint_solver(window=(-10, 10), c=0):
    """Solve 2 eta + theta + 1 >= 0, eta >= 0, 3 eta + theta < 0 over a square window."""
    lo, hi = window
    sols = [(e, t) for e in range(lo, hi + 1) for t in range(lo, hi + 1)
            if 2 * e + t + 1 >= 0 and e >= 0 and 3 * e + t < 0]
    if len(sols) != 1:
        raise ConsistencyError(f"expected a unique solution, found {sols}")
    eta, theta = sols[0]
    m = make_model(c)
    c2 = m.curve(eta, theta)
    # c3 of the quotient E/E' with c1(E) = 2 xi + 3 f
    c3 = degree(-m.divisor(2, 3) * c2)
    return Rank0Constraint(eta, theta, c2, int(c3))


def splitting_degree_on_line(c):
    """c1(E) . f^2 for the orientable class: the degree of E restricted to a line L."""
    m = make_model(c)
    return int(degree(m.divisor(2, 3) * m.f * m.f))
