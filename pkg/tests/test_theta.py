"""Numerical theta functions with characteristics.

The reference values below were produced by the direct mpmath summation in
oracles.py (40 digits, fixed generous radius) and frozen here; one live
cross-check against that oracle stays in the suite.
"""

import cmath
import math

import numpy as np
import pytest

from oracles import mp_tail, mp_theta
from thetachar.characteristics import Characteristic, all_characteristics
from thetachar.theta import (
    PeriodMatrix,
    ThetaArg,
    Tolerance,
    block_diag,
    jacobi_eigenvalues,
    theta_constant,
    theta_constant_table,
    theta_report,
    theta_with_char,
    truncation_radius,
)

TAU_I = PeriodMatrix([[1j]])
TAU_G1 = PeriodMatrix([[0.25 + 1.1j]])
TAU_G2 = PeriodMatrix([[1.1j, 0.2 + 0.1j], [0.2 + 0.1j, 1.3j]])

# pi^(1/4) / Gamma(3/4), the classical value of theta[0;0](i, 0)
THETA00_I = 1.08643481121330801457531612151
# theta[0;1] and theta[1;0] coincide at tau = i
THETA01_I = 0.913579138156116821407242593401
G1_GENERIC = 0.495604493108855091510631851831 + 0.562066523037489638309688859001j
G2_0110 = 0.840170455448058234531361817547 + 0.0272205510795270998315384857669j
G2_0011 = 0.903988532529950793701694735419 - 0.00135558911962719192353350109846j


def ch(text):
    return Characteristic.from_string(text)


def test_tolerance_validation():
    assert Tolerance().abs_tol == 1e-12
    assert Tolerance.coerce(1e-8).abs_tol == 1e-8
    t = Tolerance(1e-10)
    assert Tolerance.coerce(t) is t
    with pytest.raises(ValueError):
        Tolerance(1e-14)
    with pytest.raises(ValueError):
        Tolerance(1.5)


def test_period_matrix_validation():
    assert TAU_G2.g == 2
    assert TAU_G2.im_lambda_min > 0.9
    with pytest.raises(ValueError):
        PeriodMatrix([[1j, 0.2], [0.2001, 1j]])  # not exactly symmetric
    with pytest.raises(ValueError):
        PeriodMatrix([[0.5 - 1j]])  # Im tau negative definite
    with pytest.raises(ValueError):
        PeriodMatrix([[1j, 0], [0, 1j], [0, 0]])
    with pytest.raises(ValueError):
        PeriodMatrix([[complex("nan")]])


def test_theta_arg_coercion():
    assert ThetaArg.zero(3).z == (0j, 0j, 0j)
    assert ThetaArg.coerce(None, 2).z == (0j, 0j)
    assert ThetaArg.coerce([1, 2j], 2).z == (1 + 0j, 2j)
    with pytest.raises(ValueError):
        ThetaArg.coerce([1, 2, 3], 2)
    with pytest.raises(ValueError):
        ThetaArg(())


def test_jacobi_matches_numpy_on_random_symmetric_matrices():
    rng = np.random.default_rng(12)
    for n in (1, 2, 3, 5, 8):
        for _ in range(5):
            raw = rng.uniform(-2, 2, size=(n, n))
            sym = (raw + raw.T) / 2
            got = jacobi_eigenvalues(sym)
            want = np.linalg.eigvalsh(sym)
            assert np.allclose(got, want, atol=1e-10)


def test_jacobi_handles_exactly_diagonal_input():
    # regression: the off-diagonal mass must be measured directly, not as a
    # difference of two large sums, or diagonal matrices never "converge"
    diag = np.diag([0.5, 1.0, 2.25, 4.0])
    assert jacobi_eigenvalues(diag) == [0.5, 1.0, 2.25, 4.0]
    assert jacobi_eigenvalues(np.eye(6)) == [1.0] * 6


def test_jacobi_rejects_bad_input():
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        jacobi_eigenvalues([[1, 2, 3]])


def test_truncation_radius_grows_as_tolerance_shrinks():
    radii = [
        truncation_radius(TAU_G2, None, Tolerance(t))
        for t in (1e-3, 1e-6, 1e-9, 1e-12)
    ]
    assert radii == sorted(radii)
    assert radii[0] >= 1
    # shifting z off the real locus can only enlarge the box
    assert truncation_radius(TAU_G2, [0.3j, 0.4j], Tolerance(1e-9)) >= radii[2]


def test_truncation_radius_tail_is_honest():
    # the independent mpmath tail estimate at the chosen radius stays below
    # the requested tolerance
    for tol in (1e-6, 1e-10):
        r = truncation_radius(TAU_G2, None, Tolerance(tol))
        tail = mp_tail(TAU_G2.im_lambda_min, 2, 0.0, r)
        assert float(tail) <= tol


def test_truncation_radius_unreachable_tolerance():
    thin = PeriodMatrix([[0.0001j]])
    with pytest.raises(ValueError):
        truncation_radius(thin, None, Tolerance(1e-12))


def test_theta_constant_reference_values_g1():
    assert abs(theta_constant(TAU_I, ch("0;0")) - THETA00_I) < 1e-12
    assert abs(theta_constant(TAU_I, ch("0;1")) - THETA01_I) < 1e-12
    assert abs(theta_constant(TAU_I, ch("1;0")) - THETA01_I) < 1e-12
    assert abs(theta_constant(TAU_I, ch("1;1"))) < 1e-12
    # Jacobi's quartic relation among the three even constants
    t2, t3, t4 = (
        theta_constant(TAU_I, ch("1;0")),
        theta_constant(TAU_I, ch("0;0")),
        theta_constant(TAU_I, ch("0;1")),
    )
    assert abs(t2**4 + t4**4 - t3**4) < 1e-12


def test_theta_reference_values_with_argument():
    got = theta_with_char(TAU_G1, [0.3 - 0.2j], ch("1;0"))
    assert abs(got - G1_GENERIC) < 1e-12
    got2 = theta_with_char(TAU_G2, [0.1 + 0.05j, -0.2j], ch("01;10"))
    assert abs(got2 - G2_0110) < 1e-12
    got3 = theta_constant(TAU_G2, ch("00;11"))
    assert abs(got3 - G2_0011) < 1e-12


def test_live_cross_check_against_mpmath():
    tau = [[0.3 + 1.4j, -0.15 + 0.05j], [-0.15 + 0.05j, 0.1 + 0.9j]]
    z = [0.2 - 0.1j, -0.35 + 0.15j]
    got = theta_with_char(PeriodMatrix(tau), z, ch("10;11"), Tolerance(1e-11))
    want = mp_theta(tau, z, [1, 0], [1, 1], 2, radius=15)
    assert abs(got - complex(want)) < 1e-10


def test_genus_mismatch_rejected():
    with pytest.raises(ValueError):
        theta_constant(TAU_G2, ch("0;0"))
    with pytest.raises(ValueError):
        theta_with_char(TAU_G1, [0.1, 0.2], ch("1;0"))


def test_odd_characteristics_vanish_at_zero():
    for tau in (TAU_I, TAU_G1, TAU_G2):
        for c in all_characteristics(tau.g):
            if c.parity == 1:
                assert abs(theta_constant(tau, c)) < 1e-12


def test_parity_symmetry_in_z():
    z = [0.17 - 0.08j, 0.05 + 0.21j]
    for c in all_characteristics(2):
        plus = theta_with_char(TAU_G2, z, c)
        minus = theta_with_char(TAU_G2, [-w for w in z], c)
        sign = -1 if c.parity else 1
        assert abs(minus - sign * plus) < 1e-11


def test_quasi_periodicity():
    z = [0.1 + 0.2j, -0.3 + 0.1j]
    tau = TAU_G2.tau
    for c in (ch("00;00"), ch("10;01"), ch("11;11")):
        base = theta_with_char(TAU_G2, z, c)
        # integer shift: theta(z + n) = (-1)^(eps.n) theta(z)
        shifted = theta_with_char(TAU_G2, [z[0] + 1, z[1]], c)
        eps0 = c.eps >> 1 & 1
        assert abs(shifted - (-1) ** eps0 * base) < 1e-10
        # lattice shift by tau e_2:
        # theta(z + tau m) = exp(-pi i m.tau.m - 2 pi i m.z) (-1)^(delta.m) theta(z)
        zs = [z[0] + tau[0, 1], z[1] + tau[1, 1]]
        factor = cmath.exp(-1j * math.pi * tau[1, 1] - 2j * math.pi * z[1])
        delta1 = c.delta & 1
        got = theta_with_char(TAU_G2, zs, c)
        want = factor * (-1) ** delta1 * base
        assert abs(got - want) < 1e-9 * max(1.0, abs(want))


def test_report_carries_the_numerics():
    rep = theta_report(TAU_G1, [0.3 - 0.2j], ch("1;0"), Tolerance(1e-10))
    assert abs(complex(rep["re"], rep["im"]) - G1_GENERIC) < 1e-10
    assert rep["radius"] >= 1
    assert 0.0 <= rep["est_error"] <= 1e-10


def test_constant_table_agrees_bitwise_with_single_calls():
    table = theta_constant_table(TAU_G2)
    assert table.shape == (4, 4)
    assert not table.flags.writeable
    for c in all_characteristics(2):
        assert table[c.eps, c.delta] == theta_constant(TAU_G2, c)
    # cached: identical object on repeat call
    assert theta_constant_table(TAU_G2) is table


def test_block_diagonal_theta_factorizes():
    joint = block_diag(TAU_I, TAU_G1)
    assert joint.g == 2
    assert joint.tau[0, 1] == 0
    for c1 in all_characteristics(1):
        for c2 in all_characteristics(1):
            c = Characteristic(
                2, (c1.eps << 1) | c2.eps, (c1.delta << 1) | c2.delta
            )
            prod = theta_constant(TAU_I, c1) * theta_constant(TAU_G1, c2)
            assert abs(theta_constant(joint, c) - prod) < 1e-11
