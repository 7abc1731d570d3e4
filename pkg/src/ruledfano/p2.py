"""Cohomology of symmetric powers of the Fano bundles F_c on the plane.

Each F_c is presented as a quotient ``0 -> K -> A -> F_c -> 0`` of sums of
line bundles (K = 0 for the split cases), which gives the resolution

    0 -> L^s K (x) S^{m-s} A -> ... -> K (x) S^{m-1} A -> S^m A -> S^m F_c -> 0.

Chasing it with h^1(O(d)) = 0 leaves the ranks of a few maps on H^2 unknown,
so the chase produces a region of candidate tables. The same is done for the
Serre dual twist (S^m F_c)^dual (-3) = S^m F_c(-2m-3) and the two regions are
intersected. A single survivor is exact; otherwise a bounds-only table with
the coordinate-wise range is returned.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .errors import ParameterError, PresentationInconsistencyError


@dataclass(frozen=True)
class CohomologyTable:
    """Cohomology dimensions, either exact or bracketed by lower/upper bounds."""

    lower: tuple
    upper: tuple

    @classmethod
    def exact_table(cls, values):
        values = tuple(int(v) for v in values)
        return cls(values, values)

    @property
    def exact(self):
        return self.lower == self.upper

    @property
    def values(self):
        if not self.exact:
            raise ValueError(f"bounds-only table {self.lower}..{self.upper} has no exact values")
        return self.lower

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.lower)

    def euler(self):
        return sum((-1) ** i * v for i, v in enumerate(self.values))

    def reversed(self):
        return CohomologyTable(self.lower[::-1], self.upper[::-1])

    def shifted(self, pad_front=0, pad_back=0):
        z = (0,)
        return CohomologyTable(z * pad_front + self.lower + z * pad_back,
                               z * pad_front + self.upper + z * pad_back)

    def __str__(self):
        if self.exact:
            return " ".join(f"h{i}={v}" for i, v in enumerate(self.lower))
        return " ".join(f"h{i}={lo}" if lo == hi else f"h{i}=[{lo},{hi}]"
                        for i, (lo, hi) in enumerate(zip(self.lower, self.upper)))


SurfaceCohomologyTable = CohomologyTable


def bott_line(d):
    """h^0, h^1, h^2 of O(d) on the plane."""
    h0 = comb(d + 2, 2) if d >= 0 else 0
    h2 = comb(-d - 1, 2) if d <= -3 else 0
    return CohomologyTable.exact_table((h0, 0, h2))


@dataclass(frozen=True)
class FanoBundleData:
    """F_c as the cokernel of sub -> ambient, both sums of line bundles."""

    c: int
    kind: str
    sub: tuple
    ambient: tuple

    def chern(self):
        """(c1, c2) of F_c computed from the presentation."""
        top = _total_chern(self.ambient)
        bottom = _total_chern(self.sub)
        # divide truncated power series in H (degree <= 2)
        q0 = Fraction(1)
        q1 = top[1] - bottom[1]
        q2 = top[2] - bottom[1] * q1 - bottom[2]
        return int(q1), int(q2)


def _total_chern(degrees):
    e1 = sum(degrees)
    e2 = sum(a * b for a, b in combinations(degrees, 2))
    return (1, Fraction(e1), Fraction(e2))


_FANO = {
    0: FanoBundleData(0, "split", (), (0, 2)),
    1: FanoBundleData(1, "split", (), (1, 1)),
    2: FanoBundleData(2, "line-kernel quotient", (-1,), (1, 0, 0)),
    3: FanoBundleData(3, "rank-2-kernel quotient", (-1, -1), (0, 0, 0, 0)),
    4: FanoBundleData(4, "line-kernel quotient", (-2,), (0, 0, 0)),
}


def fano_bundle(c):
    if c not in _FANO:
        raise ParameterError(f"c must be in 0..4, got {c!r}")
    return _FANO[c]


def _sym(degrees, k):
    if k < 0:
        return Counter()
    return Counter(sum(t) for t in combinations_with_replacement(degrees, k))


def _wedge(degrees, k):
    return Counter(sum(t) for t in combinations(degrees, k))


def resolution(c, m, b):
    """Line-bundle terms [L0, L1, ...] resolving S^m F_c(b); each is a Counter degree -> multiplicity."""
    data = fano_bundle(c)
    terms = []
    for i in range(len(data.sub) + 1):
        term = Counter()
        for dw, nw in _wedge(data.sub, i).items():
            for ds, ns in _sym(data.ambient, m - i).items():
                term[dw + ds + b] += nw * ns
        if term:
            terms.append(term)
    return terms


def _sum_table(term):
    h = [0, 0, 0]
    for d, n in term.items():
        t = bott_line(d).values
        for i in range(3):
            h[i] += n * t[i]
    return tuple(h)


def _project(lo, hi, chi):
    """Exact coordinate ranges of {lo <= h <= hi, h0 - h1 + h2 = chi}; None if empty."""
    (l0, l1, l2), (u0, u1, u2) = lo, hi
    lo = (max(l0, chi + l1 - u2), max(l1, l0 + l2 - chi), max(l2, chi - u0 + l1))
    hi = (min(u0, chi + u1 - l2), min(u1, u0 + u2 - chi), min(u2, chi - l0 + u1))
    if any(a > b for a, b in zip(lo, hi)):
        return None
    return lo, hi


def chase(terms):
    """Candidate region (lo, hi, chi) for the cokernel of a line-bundle resolution.

    The region is every integer table h with lo <= h <= hi and h0 - h1 + h2 = chi.
    For 0 -> K -> R -> S -> 0 with h^1(R) = 0 the long exact sequence gives
    h0(S) = h0(R) + h2(K) - chi(K), h1(S) = h2(K) - t and h2(S) = h2(R) - t,
    where t is the rank of H^2(K) -> H^2(R). Only the range of h2(K) matters,
    and t runs over 0..min(h2(K), h2(R)), which is the constraint h1(S) >= 0.
    """
    tables = [_sum_table(t) for t in terms]
    last = tables[-1]
    lo, hi, chi = last, last, last[0] - last[1] + last[2]
    for r0, r1, r2 in reversed(tables[:-1]):
        assert r1 == 0
        chi_s = r0 + r2 - chi
        h0lo, h0hi = r0 + lo[2] - chi, r0 + hi[2] - chi
        box = _project((h0lo, 0, 0), (h0hi, h0hi + r2 - chi_s, r2), chi_s)
        if box is None:
            raise PresentationInconsistencyError("empty region in resolution chase")
        (lo, hi), chi = box, chi_s
    return lo, hi, chi


def surface_chi(c, m, b):
    """chi(S^m F_c(b)) by Riemann-Roch on the plane from Chern roots."""
    if m < 0:
        raise ParameterError(f"m must be non-negative, got {m}")
    fano_bundle(c)
    # roots y_i = i a1 + (m-i) a2 with a1 + a2 = 2, a1 a2 = c
    s1 = m * (m + 1)
    s2 = (4 - 2 * c) * Fraction(m * (m + 1) * (2 * m + 1), 6) + 2 * c * Fraction(m * (m + 1) * (m - 1), 6)
    rank = m + 1
    ch1 = s1 + rank * b
    ch2 = (s2 + 2 * b * s1 + rank * b * b) / 2
    chi = rank + Fraction(3, 2) * ch1 + ch2
    if chi.denominator != 1:
        raise PresentationInconsistencyError(f"non-integral chi {chi} for S^{m}F_{c}({b})")
    return int(chi)


@lru_cache(maxsize=4096)
def sym_power_cohomology(c, m, b):
    """Table of h^i(S^m F_c (b)) on the plane."""
    if m < 0:
        raise ParameterError(f"m must be non-negative, got {m}")
    chi = surface_chi(c, m, b)
    lo, hi, chi_direct = chase(resolution(c, m, b))
    dual_b = -2 * m - b - 3
    dlo, dhi, chi_dual = chase(resolution(c, m, dual_b))
    if chi_direct != chi or chi_dual != surface_chi(c, m, dual_b):
        raise PresentationInconsistencyError(
            f"resolution of S^{m}F_{c}({b}) disagrees with Riemann-Roch (chi = {chi})")
    # Serre duality: h^i(S^m F(b)) = h^(2-i)(S^m F(-2m-3-b))
    box = _project(tuple(map(max, lo, dlo[::-1])), tuple(map(min, hi, dhi[::-1])), chi)
    if box is None:
        raise PresentationInconsistencyError(
            f"resolution and its Serre dual share no table for S^{m}F_{c}({b})")
    return CohomologyTable(*box)
