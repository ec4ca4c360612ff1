import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rainbowgirth.bounds import (
    GammaParams,
    ParameterSet,
    alpha_upper_reference,
    appendix_gamma_ok,
    eq1_lhs,
    eq2_lhs,
    feasible_params,
    gamma_prime,
    gamma_threshold,
)

# root of 1 - 2^(-4 gamma) = gamma, to 15 digits
GAMMA_ROOT = 0.922523266904828


def test_eq1_examples():
    assert eq1_lhs(0.6, 0.95) == pytest.approx(0.95529625, abs=1e-12)
    assert eq1_lhs(0.6, 0.95) > 0.95
    for p in (0.1, 0.5, 0.77):
        assert eq1_lhs(1.0, p) == pytest.approx(2 * p**2 - p**4)


def test_eq1_half_never_exceeds_p():
    grid = [i / 1000 for i in range(1, 1000)]
    gaps = [eq1_lhs(0.5, p) - p for p in grid]
    assert max(gaps) <= 0
    # the gap closes as p -> 1
    assert gaps[-1] > -1e-5


@pytest.mark.parametrize("alpha, p", [(-0.1, 0.5), (1.1, 0.5), (0.6, 0.0), (0.6, 1.0)])
def test_eq1_domain(alpha, p):
    with pytest.raises(ValueError):
        eq1_lhs(alpha, p)


@given(st.floats(0, 1), st.floats(0, 1), st.floats(0.001, 0.999))
def test_eq1_monotone_in_alpha(a, b, p):
    lo, hi = sorted((a, b))
    if hi - lo > 1e-9:
        assert eq1_lhs(lo, p) < eq1_lhs(hi, p)


def check_param_invariants(ps: ParameterSet):
    assert 0.5 <= ps.p < 1
    margin = eq2_lhs(ps.alpha, ps.xi, ps.epsilon, ps.p) - ps.p
    assert margin > 0
    assert 3 * ps.c == pytest.approx(margin, rel=1e-12)
    assert ps.beta == ps.p + ps.c


def test_feasible_alpha_06():
    ps = feasible_params(0.6)
    check_param_invariants(ps)
    assert 0.9 <= ps.p < 1
    assert ps.c > 0 and ps.xi == ps.epsilon


def test_feasible_alpha_051():
    ps = feasible_params(0.51)
    check_param_invariants(ps)


@given(st.floats(0.51, 1.0))
def test_feasible_invariants(alpha):
    ps = feasible_params(alpha)
    assert ps is not None
    check_param_invariants(ps)


def test_feasible_grid_exhausted_near_half():
    # margin ~ (alpha - 1/2) * tau is below what the 2^-20 grids can resolve
    assert feasible_params(0.5001) is None


@pytest.mark.parametrize("alpha", [0.5, 0.3, 1.2])
def test_feasible_rejects(alpha):
    with pytest.raises(ValueError):
        feasible_params(alpha)


def test_feasible_xi_hint():
    ps = feasible_params(0.6, xi_hint=1e-4)
    assert ps.xi == ps.epsilon == 1e-4
    check_param_invariants(ps)
    assert feasible_params(0.6, xi_hint=0.3) is None


def test_heavy_threshold_default():
    ps = feasible_params(0.6)
    assert ps.threshold_for(5000) == 2
    assert ParameterSet.derive(0.6, 0.5, 0.5, 0.95).threshold_for(10**9) == 250
    assert feasible_params(0.6, heavy_threshold=7).threshold_for(5000) == 7


def test_class_floor():
    assert ParameterSet.derive(0.6, 0.01, 0.01, 0.95).class_floor_ok()
    assert not ParameterSet.derive(0.99, 0.01, 0.01, 0.95).class_floor_ok()


def test_gamma_threshold():
    t = gamma_threshold()
    assert t == pytest.approx(GAMMA_ROOT, abs=1e-9)
    assert abs(gamma_prime(t) - t) < 1e-11


def test_gamma_bracket():
    assert gamma_prime(0.9) - 0.9 == pytest.approx(0.0175, abs=5e-4)
    assert gamma_prime(0.9) - 0.9 > 0
    assert gamma_prime(0.93) - 0.93 == pytest.approx(-0.0059, abs=5e-4)
    assert gamma_prime(0.93) - 0.93 < 0


def test_appendix_gamma_ok_examples():
    assert appendix_gamma_ok(0.93)
    assert gamma_prime(0.93) == pytest.approx(0.9241, abs=1e-4)
    assert not appendix_gamma_ok(0.90)
    assert gamma_prime(0.90) == pytest.approx(0.9175, abs=1e-4)
    assert appendix_gamma_ok(1.0)
    assert GammaParams.of(0.93).admissible and not GammaParams.of(0.9).admissible


@pytest.mark.parametrize("gamma", [0.0, -0.5, 1.01])
def test_appendix_gamma_domain(gamma):
    with pytest.raises(ValueError):
        appendix_gamma_ok(gamma)


def test_appendix_ok_iff_above_threshold():
    t = gamma_threshold()
    for i in range(510, 1000):
        g = i / 1000
        assert appendix_gamma_ok(g) == (g > t)


def test_alpha_upper_reference():
    a = alpha_upper_reference()
    assert a == pytest.approx(0.91855865, abs=1e-8)
    assert a**2 == pytest.approx(27 / 32, abs=1e-12)
    assert a == pytest.approx(3 * math.sqrt(6) / 8, abs=1e-12)
    assert gamma_threshold() > a
