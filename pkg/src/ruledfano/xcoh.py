"""Line-bundle cohomology on X_c and arithmetic of the curves L and M.

Pushing O(l1 xi + l2 f) down to the plane gives S^l1 F_c (l2) for l1 >= 0,
nothing for l1 = -1, and the dual symmetric power in degree one for l1 <= -2:

    H^i(X, O(l1 xi + l2 f)) = H^(i-1)(P2, (S^k F_c)^dual (l2 - 2)),  k = -l1 - 2,

with (S^k F_c)^dual = S^k F_c (-2k) because det F_c = O(2).
"""

from dataclasses import dataclass

from .chern import euler_characteristic, line_bundle, twist
from .chow import degree, make_model, require_homogeneous
from .p2 import CohomologyTable, sym_power_cohomology

ThreefoldCohomologyTable = CohomologyTable


def line_cohomology_x(c, l1, l2):
    """h^0..h^3 of O(l1 xi + l2 f) on X_c (possibly bounds-only)."""
    make_model(c)
    if l1 >= 0:
        return sym_power_cohomology(c, l1, l2).shifted(pad_back=1)
    if l1 == -1:
        return CohomologyTable.exact_table((0, 0, 0, 0))
    k = -l1 - 2
    return sym_power_cohomology(c, k, l2 - 2 - 2 * k).shifted(pad_front=1)


@dataclass(frozen=True)
class CurveModel:
    """A rational curve class with its Koszul resolution and normal bundle splitting.

    ``koszul`` lists (sign, a, b) for the terms O(a xi + b f) of the resolution
    of O_curve, starting from O_X.
    """

    name: str
    klass: tuple
    koszul: tuple
    normal_splitting: tuple

    def curve_class(self, model):
        return model.curve(*self.klass)

    def degree(self, model):
        """Degree of the curve with respect to h = xi + f."""
        return degree(self.curve_class(model) * model.h)


CURVE_M = CurveModel("M", (1, 0), ((1, 0, 0), (-1, -1, 0), (-1, 0, -1), (1, -1, -1)), (1, 2))
CURVE_L = CurveModel("L", (0, 1), ((1, 0, 0), (-1, 0, -1), (-1, 0, -1), (1, 0, -2)), (0, 0))

CURVES = {"M": CURVE_M, "L": CURVE_L}


def curve_twisted_chi(curve, D):
    """chi(O_curve(D)) as the alternating sum over the Koszul resolution."""
    require_homogeneous(D, 1, "twisting divisor")
    model = D.model
    total = 0
    for sign, a, b in curve.koszul:
        total += sign * euler_characteristic(twist(line_bundle(model, a, b), D))
    return total


def rational_curve_cohomology(d):
    """(h0, h1) of O(d) on P1."""
    return max(d + 1, 0), max(-d - 1, 0)


def restriction_cohomology(curve_class, D):
    """(deg, h0, h1) of O(D) restricted to a rational curve of the given class."""
    require_homogeneous(curve_class, 2, "curve class")
    require_homogeneous(D, 1, "divisor")
    d = degree(curve_class * D)
    if d.denominator != 1:
        raise ValueError(f"restriction degree {d} is not an integer")
    d = int(d)
    return (d,) + rational_curve_cohomology(d)


def normal_bundle_sections(curve):
    """(h0, h1) of the normal bundle from its splitting type."""
    h0 = h1 = 0
    for d in curve.normal_splitting:
        a, b = rational_curve_cohomology(d)
        h0 += a
        h1 += b
    return h0, h1
