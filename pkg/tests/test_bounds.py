import math
from fractions import Fraction

import pytest

from antichains import (
    antichain_coeff,
    antichain_lower_coeff,
    critical_density,
    first_bound,
    objective_coeff,
    second_bound,
    triangle_cap,
    triangle_lower,
    upper_bound_constant,
)

GAMMA_STAR = (39 + math.sqrt(21)) / 150


class TestCoefficients:
    def test_objective_coeff_values(self):
        assert objective_coeff(4) == Fraction(3, 16)
        assert objective_coeff(5) == Fraction(5, 24)
        assert objective_coeff(3) == Fraction(1, 8)

    def test_even_odd_closed_forms(self):
        for l in range(3, 40):
            if l % 2 == 0:
                assert objective_coeff(l) == Fraction(l * l - 4, 4 * l * l)
            else:
                assert objective_coeff(l) == Fraction(l * l - 5, 4 * l * l - 4)

    def test_antichain_coeff_values(self):
        assert antichain_coeff(4) == Fraction(5, 16)
        assert antichain_coeff(3) == Fraction(3, 8)

    def test_pair_sums_to_half(self):
        for l in range(3, 30):
            assert objective_coeff(l) + antichain_coeff(l) == Fraction(1, 2)

    def test_monotone_to_quarter(self):
        prev = Fraction(0)
        for l in range(3, 101):
            c = objective_coeff(l)
            assert c > prev
            assert c < Fraction(1, 4)
            prev = c
        assert Fraction(1, 4) - objective_coeff(100) < Fraction(1, 1000)

    def test_validation(self):
        with pytest.raises(ValueError):
            objective_coeff(2)


class TestDensityBounds:
    def test_first_bound(self):
        assert first_bound(0.0) == 0.0
        assert first_bound(0.25) == 0.2
        assert abs(first_bound(GAMMA_STAR) - upper_bound_constant()) < 1e-12

    def test_first_bound_domain(self):
        with pytest.raises(ValueError):
            first_bound(0.5)
        with pytest.raises(ValueError):
            first_bound(-0.01)

    def test_triangle_lower_values(self):
        assert triangle_lower(0.25) == 0.0
        assert abs(triangle_lower(1 / 3) - 1 / 27) < 1e-15
        # value at the critical density, computed via the exact identity
        expect = (GAMMA_STAR - second_bound(GAMMA_STAR)) / 3
        assert abs(triangle_lower(GAMMA_STAR) - expect) < 1e-15
        assert abs(triangle_lower(GAMMA_STAR) - 0.0193700336) < 1e-9

    def test_second_bound_values(self):
        assert abs(second_bound(1 / 3) - 2 / 9) < 1e-15
        assert second_bound(0.25) == 0.25
        assert abs(second_bound(GAMMA_STAR) - upper_bound_constant()) < 1e-12

    def test_triangle_bound_identity_grid(self):
        pts = 10**4
        for i in range(pts):
            g = 0.25 + (1 / 3 - 0.25) * i / (pts - 1)
            assert abs(g - 3 * triangle_lower(g) - second_bound(g)) <= 1e-12

    def test_monotonicity_on_grid(self):
        pts = 2000
        prev_f, prev_s = -1.0, 2.0
        for i in range(pts):
            g = 0.25 + (1 / 3 - 0.25) * i / (pts - 1)
            f, s = first_bound(g), second_bound(g)
            assert f > prev_f
            assert s < prev_s or i == 0
            prev_f, prev_s = f, s


class TestConstants:
    def test_critical_density_matches_closed_form(self):
        assert abs(critical_density() - GAMMA_STAR) <= 1e-12

    def test_upper_bound_constant(self):
        c = upper_bound_constant()
        assert 0.2324404 < c < 0.2324410
        assert c < 0.232441
        assert abs(c - 2 * (39 + math.sqrt(21)) / 375) == 0.0

    def test_crossing(self):
        g = critical_density()
        assert abs(first_bound(g) - second_bound(g)) <= 1e-12

    def test_lower_coeff(self):
        lo = antichain_lower_coeff()
        assert abs(lo - 0.2675595) < 1e-6
        assert abs(lo + upper_bound_constant() - 0.5) <= 1e-12
        assert lo < 5 / 16  # conjectured truth dominates the proven bound


class TestTriangleCap:
    def test_values(self):
        assert triangle_cap(10, 5) == 10.0
        assert triangle_cap(5, 0) == 0.0

    def test_small_n_slack_illustration(self):
        # at n=8 the leading term is far below the actual 16 triangles of
        # the explicit construction; the suppressed cubic-order slack is real
        from antichains import l4_graph, triangle_count

        cap = triangle_cap(8, 4)
        assert abs(cap - 16 / 3) < 1e-12
        assert triangle_count(l4_graph(8)) == 16
        assert cap < 16

    def test_validation(self):
        with pytest.raises(ValueError):
            triangle_cap(4, 1)
        with pytest.raises(ValueError):
            triangle_cap(10, -1)
