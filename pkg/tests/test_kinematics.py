import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import random_subluminal
from h4space.algebra import Event4, Velocity3
from h4space.errors import DegenerateError, DomainError, SuperluminalError
from h4space.kinematics import (
    interval_from_velocity_h4,
    velocity_from_events,
    velocity_modulus_h4,
    velocity_modulus_nonrel,
    w_form,
)
from h4space.metric import interval4_h4_orthonormal

WITNESS = Velocity3(0.1, 0.2, 0.3)
# mpmath: sqrt(1 - sqrt(0.768)), 0.768**0.25
WITNESS_MODULUS = 0.35163035703951133112
WITNESS_FOURTH_ROOT = 0.93613892772828637674


class TestWForm:
    def test_rest(self):
        f = w_form(Velocity3(0, 0, 0))
        assert f.factors == (1, 1, 1, 1) and f.w == 1

    def test_witness(self):
        f = w_form(WITNESS)
        assert f.factors == pytest.approx((1.6, 0.6, 0.8, 1.0), rel=1e-15)
        assert f.w == pytest.approx(0.768, rel=1e-15)

    def test_sign_asymmetry(self):
        assert w_form(Velocity3(-0.1, -0.2, -0.3)).w == pytest.approx(0.672, rel=1e-15)
        assert w_form(Velocity3(-0.1, -0.2, -0.3)).w != pytest.approx(w_form(WITNESS).w)

    @given(*(st.floats(-1, 1),) * 3)
    def test_factors_sum_to_four_and_match_interval(self, a, b, c):
        f = w_form(Velocity3(a, b, c))
        assert sum(f.factors) == pytest.approx(4.0, abs=1e-14)
        assert f.w == pytest.approx(interval4_h4_orthonormal(Event4(1, a, b, c)), abs=1e-13)


class TestModulus:
    @pytest.mark.parametrize("v, m", [((0.6, 0, 0), 0.6), ((0, 0, 0), 0.0), ((0.1, 0.2, 0.3), WITNESS_MODULUS)])
    def test_examples(self, v, m):
        assert velocity_modulus_h4(Velocity3(*v)) == pytest.approx(m, rel=1e-14, abs=0)

    def test_witness_against_oracle(self):
        assert float(oracles.modulus_h4((0.1, 0.2, 0.3))) == pytest.approx(WITNESS_MODULUS, rel=1e-15)

    @given(st.floats(-0.999999, 0.999999), st.sampled_from([0, 1, 2]))
    def test_axis_exact(self, u, axis):
        v = [0.0, 0.0, 0.0]
        v[axis] = u
        assert velocity_modulus_h4(Velocity3(*v)) == abs(u)

    def test_boundary_returns_one(self):
        assert velocity_modulus_h4(Velocity3(0.6, 0.4, 0.0)) == 1.0
        assert velocity_modulus_h4(Velocity3(1.0, 0.0, 0.0)) == 1.0

    def test_superluminal(self):
        with pytest.raises(SuperluminalError):
            velocity_modulus_h4(Velocity3(0.6, 0.5, 0.0))

    def test_bounded_on_random_subluminal(self, rng):
        v = random_subluminal(rng, 100_000)
        m = velocity_modulus_h4(Velocity3(*v))
        assert np.all(m >= 0) and np.all(m < 1)

    def test_bulk_matches_oracle(self, rng):
        v = random_subluminal(rng, 200, margin=1e-3)
        m = velocity_modulus_h4(Velocity3(*v))
        for i in range(200):
            assert m[i] == pytest.approx(float(oracles.modulus_h4(tuple(v[:, i]))), rel=1e-12)

    def test_boundary_limit_monotone(self):
        face = np.array([0.6, 0.5, 0.1])  # 1 - v1 - v2 + v3 = 0 here
        steps = [velocity_modulus_h4(Velocity3(*((1 - 0.5**k) * face))) for k in range(1, 21)]
        assert np.all(np.diff(steps[-10:]) > 0)
        assert steps[-1] > 0.999

    def test_rms_is_second_order(self, rng):
        # v_h4^2 - |v|^2 = -4 v1 v2 v3 + O(e^4), so the squared moduli agree to third order
        eps = np.array([0.1, 0.05, 0.025, 0.0125])
        u = np.array([0.48, 0.6, 0.64])
        diff = [abs(velocity_modulus_h4(Velocity3(*(e * u))) ** 2 - (e * e)) for e in eps]
        assert np.polyfit(np.log(eps), np.log(diff), 1)[0] >= 2.5


class TestIntervalFromVelocity:
    @pytest.mark.parametrize("dt, v, s", [(1, (0, 0, 0), 1), (2, (0.6, 0, 0), 1.6), (1, (0.1, 0.2, 0.3), WITNESS_FOURTH_ROOT)])
    def test_examples(self, dt, v, s):
        assert interval_from_velocity_h4(dt, Velocity3(*v)) == pytest.approx(s, rel=1e-15)

    def test_consistency_chain(self, rng):
        v = random_subluminal(rng, 10_000)
        dt = rng.uniform(0.1, 10, 10_000)
        s = interval_from_velocity_h4(dt, Velocity3(*v))
        m = velocity_modulus_h4(Velocity3(*v))
        expected = dt * np.sqrt(1 - m * m)
        # measured against dt: sqrt(1 - m^2) cannot resolve better than ~1e-16 / (1 - m^2) near the cone
        assert np.max(np.abs(s - expected) / dt) <= 1e-13
        inner = (1 - m * m) > 1e-2
        assert np.max(np.abs(s - expected)[inner] / s[inner]) <= 1e-13

    def test_domain(self):
        with pytest.raises(DomainError):
            interval_from_velocity_h4(1, Velocity3(0.6, 0.5, 0))
        with pytest.raises(DomainError):
            interval_from_velocity_h4(-1, WITNESS)


class TestVelocityFromEvents:
    @pytest.mark.parametrize(
        "e1, e2, v",
        [
            ((0, 0, 0, 0), (1, 0.3, 0, 0), (0.3, 0, 0)),
            ((1, 1, 1, 1), (3, 1.6, 1, 1), (0.3, 0, 0)),
            ((0, 0, 0, 0), (2, 0.2, 0.4, 0.6), (0.1, 0.2, 0.3)),
        ],
    )
    def test_examples(self, e1, e2, v):
        assert velocity_from_events(Event4(*e1), Event4(*e2)) == pytest.approx(v, rel=1e-15)

    def test_degenerate(self):
        with pytest.raises(DegenerateError):
            velocity_from_events(Event4(1, 0, 0, 0), Event4(1, 1, 0, 0))


@pytest.mark.parametrize("v, m", [((0.3, 0, 0), 0.3), ((0.1, 0.2, 0.2), 0.3), ((0.1, 0.2, 0.3), 0.37416573867739416)])
def test_nonrel_modulus(v, m):
    assert velocity_modulus_nonrel(Velocity3(*v)) == pytest.approx(m, rel=1e-15)
