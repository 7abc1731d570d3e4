from ruledfano import euler_characteristic, make_model
from ruledfano.chern import line_bundle
from ruledfano.xcoh import (
    CURVE_L, CURVE_M, curve_twisted_chi, line_cohomology_x, normal_bundle_sections,
    rational_curve_cohomology, restriction_cohomology,
)

GRID = range(-6, 7)


def test_lambda1_minus_one_is_acyclic():
    for c in range(5):
        for l2 in range(-20, 21):
            assert line_cohomology_x(c, -1, l2).values == (0, 0, 0, 0)


def test_structure_sheaf_and_canonical():
    for c in range(5):
        assert line_cohomology_x(c, 0, 0).values == (1, 0, 0, 0)
        assert line_cohomology_x(c, -2, -1).values == (0, 0, 0, 1)
        assert line_cohomology_x(c, 1, 0).values == (7 - c, 0, 0, 0)


def test_hrr_and_serre_duality_on_grid():
    for c in range(5):
        m = make_model(c)
        for l1 in GRID:
            for l2 in GRID:
                t = line_cohomology_x(c, l1, l2)
                chi = euler_characteristic(line_bundle(m, l1, l2))
                lo, hi = t.lower, t.upper
                assert lo[0] - hi[1] + lo[2] - hi[3] <= chi <= hi[0] - lo[1] + hi[2] - lo[3]
                if t.exact:
                    assert t.euler() == chi
                d = line_cohomology_x(c, -2 - l1, -1 - l2)
                assert d.lower == lo[::-1] and d.upper == hi[::-1]


def test_exact_outside_c3():
    for c in (0, 1, 2, 4):
        for l1 in GRID:
            for l2 in GRID:
                assert line_cohomology_x(c, l1, l2).exact


def test_curve_classes_and_degrees():
    for c in range(5):
        m = make_model(c)
        assert CURVE_M.degree(m) == 3
        assert CURVE_L.degree(m) == 1
        for t in range(-4, 5):
            assert curve_twisted_chi(CURVE_M, m.h * t) == 3 * t + 1
            assert curve_twisted_chi(CURVE_L, m.h * t) == t + 1


def test_restrictions():
    assert rational_curve_cohomology(3) == (4, 0)
    assert rational_curve_cohomology(-1) == (0, 0)
    assert rational_curve_cohomology(-2) == (0, 1)
    for c in range(5):
        m = make_model(c)
        xf = m.curve(1, 0)
        assert restriction_cohomology(xf, m.divisor(2, -1)) == (3, 4, 0)
        assert restriction_cohomology(xf, m.divisor(0, -1)) == (-1, 0, 0)
        assert restriction_cohomology(xf, m.divisor(0, -2)) == (-2, 0, 1)


def test_normal_bundles():
    assert normal_bundle_sections(CURVE_M) == (5, 0)
    assert normal_bundle_sections(CURVE_L) == (2, 0)
