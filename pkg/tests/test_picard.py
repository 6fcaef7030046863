"""Exact rational divisor-class arithmetic and the slope/verdict pipeline."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from thetachar.picard import (
    DivClass,
    basis_symbols,
    bn_applicable,
    canonical_class,
    general_type_test,
    named_class,
    pullback,
    resolve_space,
    slope_combination,
)

F = Fraction


def mbar(g, **coeffs):
    return DivClass("Mbar", g, coeffs)


def sbar(g, space="Sbar_minus", **coeffs):
    return DivClass(space, g, coeffs)


def test_basis_symbols():
    assert basis_symbols("Mbar", 5) == ("lambda", "delta_0", "delta_1", "delta_2")
    assert basis_symbols("Sbar_minus", 4) == (
        "lambda",
        "alpha_0",
        "beta_0",
        "alpha_1",
        "beta_1",
        "alpha_2",
        "beta_2",
    )
    with pytest.raises(ValueError):
        basis_symbols("Mbar", 1)
    with pytest.raises(ValueError):
        basis_symbols("Elsewhere", 5)


def test_space_aliases():
    assert resolve_space("odd") == "Sbar_minus"
    assert resolve_space("even") == "Sbar_plus"
    assert resolve_space("Sbar_plus") == "Sbar_plus"
    with pytest.raises(ValueError):
        resolve_space("both")


def test_divclass_canonicalization():
    a = mbar(4, delta_0=F(1, 2), **{"lambda": 0})
    assert a.coeffs == (("delta_0", F(1, 2)),)
    assert a.coeff("lambda") == 0
    assert a.coeff("delta_0") == F(1, 2)
    with pytest.raises(ValueError):
        mbar(4, delta_9=1)
    with pytest.raises(ValueError):
        DivClass("Mbar", 4, {"lambda": 0.25})  # floats never sneak in


coeff_st = st.integers(min_value=-12, max_value=12).map(lambda n: F(n, 3))


@given(coeff_st, coeff_st, coeff_st)
def test_divclass_is_a_rational_vector_space(x, y, z):
    a = mbar(6, **{"lambda": x, "delta_0": y})
    b = mbar(6, **{"delta_0": z, "delta_3": x})
    assert (a + b).coeff("delta_0") == y + z
    assert (a - b).coeff("delta_3") == -x
    assert (3 * a).coeff("lambda") == 3 * x == (a * 3).coeff("lambda")
    assert (a + b) - b == a
    assert F(1, 2) * (a + a) == a


def test_divclass_rendering():
    c = sbar(3, **{"lambda": 11, "alpha_0": F(-5, 4), "beta_0": -2})
    assert str(c) == "11*lambda - 5/4*alpha_0 - 2*beta_0"
    assert str(mbar(4)) == "0"
    d = c.to_json_dict()
    assert d["space"] == "Sbar_minus"
    assert d["coeffs"]["alpha_0"] == "-5/4"
    assert d["coeffs"]["alpha_1"] == "0"


def test_pullback_relations():
    g = 9
    assert pullback(mbar(g, delta_0=1)) == sbar(g, alpha_0=1, beta_0=2)
    assert pullback(mbar(g, **{"lambda": 1})) == sbar(g, **{"lambda": 1})
    got = pullback(mbar(g, **{"lambda": 13, "delta_0": -2}))
    assert got == sbar(g, **{"lambda": 13, "alpha_0": -2, "beta_0": -4})
    for i in range(1, g // 2 + 1):
        image = pullback(mbar(g, **{f"delta_{i}": 1}))
        assert image.coeff(f"alpha_{i}") == image.coeff(f"beta_{i}") == 1
    with pytest.raises(ValueError):
        pullback(sbar(g, **{"lambda": 1}))


def test_canonical_classes():
    k = canonical_class(12, "Sbar_minus")
    assert k.coeff("lambda") == 13
    assert k.coeff("alpha_0") == -2
    assert k.coeff("beta_0") == -3
    assert k.coeff("alpha_1") == k.coeff("beta_1") == -3
    assert k.coeff("alpha_2") == -2
    km = canonical_class(12, "Mbar")
    assert km.coeff("delta_1") == -3
    assert km.coeff("delta_2") == -2
    with pytest.raises(ValueError):
        canonical_class(3, "Mbar")


def test_riemann_hurwitz_identity():
    # K on the spin space is the pullback of K downstairs plus the ramification
    for g in range(4, 31):
        for space in ("Sbar_minus", "Sbar_plus"):
            lhs = canonical_class(g, space)
            rhs = pullback(canonical_class(g, "Mbar"), space) + DivClass(
                space, g, {"beta_0": 1}
            )
            assert lhs == rhs


def test_named_classes():
    z3 = named_class(3, "Z_odd")
    assert z3 == sbar(
        3,
        **{"lambda": 11, "alpha_0": F(-5, 4), "beta_0": -2, "alpha_1": -4, "beta_1": -2},
    )
    t8 = named_class(8, "ThetaNull")
    assert t8.coeff("lambda") == F(1, 4)
    assert t8.coeff("alpha_0") == F(-1, 16)
    for i in range(1, 5):
        assert t8.coeff(f"beta_{i}") == F(-1, 2)
        assert t8.coeff(f"alpha_{i}") == 0
    bn23 = named_class(23, "BN_normalized")
    assert bn23.coeff("delta_0") == -4
    assert bn23.coeff("lambda") == 26
    assert bn23.coeff("delta_5") == -5 * 18
    with pytest.raises(ValueError):
        named_class(4, "Mystery")
    with pytest.raises(ValueError):
        named_class(2, "Z_odd")


def test_bn_applicability_flag():
    # usable when g+1 is composite
    assert bn_applicable(23)  # 24 composite
    assert bn_applicable(8)  # 9 composite
    assert not bn_applicable(12)  # 13 prime
    assert not bn_applicable(4)  # 5 prime


def test_slope_combination_closed_forms():
    for g in range(4, 31):
        odd = slope_combination(g, "Sbar_minus")
        assert odd.c_coefficient == F(3 * (3 * g - 10), (g + 1) * (g - 2))
        assert odd.lambda_slope == F(11 * g + 37, g + 1)
        even = slope_combination(g, "Sbar_plus")
        assert even.c_coefficient == F(9, g + 1)
        assert even.lambda_slope == F(11 * g + 29, g + 1)
        for res in (odd, even):
            assert res.c_coefficient > 0
            assert res.combined.coeff("alpha_0") == -2
            assert res.combined.coeff("beta_0") == -3
            assert res.combined.coeff("lambda") == res.lambda_slope


def test_slope_combination_g13_example():
    res = slope_combination(13, "Sbar_minus")
    assert res.lambda_slope == F(90, 7)
    assert res.lambda_slope < 13


def test_slope_result_serialization():
    res = slope_combination(12, "Sbar_minus")
    d = res.to_json_dict()
    assert d["space"] == "Sbar_minus"
    assert d["lambda_slope"] == "13"
    assert d["c_coefficient"] == "3/5"
    assert d["bn_applicable"] is False
    assert isinstance(d["warnings"], list)


def test_general_type_verdicts():
    assert general_type_test(9, "Sbar_plus") == "general_type"
    assert general_type_test(8, "Sbar_plus") == "threshold"
    assert general_type_test(7, "Sbar_plus") == "inconclusive"
    assert general_type_test(12, "Sbar_minus") == "threshold"
    assert general_type_test(13, "Sbar_minus") == "general_type"
    assert general_type_test(11, "Sbar_minus") == "inconclusive"
    for g in range(13, 31):
        assert general_type_test(g, "odd") == "general_type"
    for g in range(9, 31):
        assert general_type_test(g, "even") == "general_type"
    with pytest.raises(ValueError):
        general_type_test(3, "odd")
