from fractions import Fraction
from math import comb

import pytest

from genusone import (
    BivariateSeries,
    DomainError,
    coefficient,
    divide,
    expand_named,
    full_count,
    inv_sqrt,
    j_count,
    lift_reduced_to_full,
    narayana,
    partial_x,
    reduced_count,
    solve_D,
    substitute_x,
)
from genusone.series import NAMES, d_from_radical, discriminant, x_partial_x

T = 12


def X(t=T):
    return BivariateSeries.x(t)


def Y(t=T):
    return BivariateSeries.y(t)


def mono(i, j, t=T):
    return BivariateSeries.monomial(i, j, t)


def eq18(n, m, k):
    return comb(n + m, m) * comb(n, k) * comb(n, m + k) // comb(2 * m, m)


class TestRing:
    def test_products(self):
        assert (1 + X()) * (1 - X()) == 1 - X() ** 2
        assert X() * Y() * X() * Y() == mono(2, 2)

    def test_zero_is_neutral(self):
        f = 1 + 3 * mono(2, 1) - mono(5, 4)
        assert f + BivariateSeries.constant(0, T) == f

    def test_truncation_is_the_minimum(self):
        assert (X(5) + X(8)).trunc == 5
        assert (X(5) * X(8)).trunc == 5

    def test_terms_past_truncation_are_dropped(self):
        assert (X(3) ** 4) == BivariateSeries.constant(0, 3)

    def test_equality_with_scalars(self):
        assert BivariateSeries.constant(2, 4) == 2

    def test_coefficient_beyond_truncation(self):
        with pytest.raises(DomainError):
            X(3).coefficient(4, 0)
        assert coefficient(BivariateSeries.constant(0, 5), 3, 2) == 0


class TestDivision:
    def test_geometric_series(self):
        g = divide(BivariateSeries.constant(1, T), 1 - X())
        assert all(g.coefficient(n, 0) == 1 for n in range(T + 1))

    def test_self_division(self):
        f = 1 + 2 * mono(1, 1) - mono(3, 0)
        assert f / f == 1

    def test_rational_coefficients(self):
        g = divide(BivariateSeries.constant(1, 4), 2 - X(4))
        assert g.coefficient(3, 0) == Fraction(1, 16)
        assert not g.is_integral()

    def test_zero_constant_term(self):
        with pytest.raises(DomainError):
            divide(BivariateSeries.constant(1, 4), X(4))

    def test_reduced_partitions_value(self):
        assert expand_named("R0", 8).coefficient(4, 2) == 1


class TestInvSqrt:
    def test_of_one(self):
        assert inv_sqrt(BivariateSeries.constant(1, T)) == 1

    def test_defining_identity(self):
        f = 1 - 2 * X()
        h = inv_sqrt(f)
        assert h * h * f == 1

    def test_bivariate_identity(self):
        f = discriminant(T)
        h = inv_sqrt(f)
        assert h * h * f == 1

    def test_needs_unit_constant(self):
        with pytest.raises(DomainError):
            inv_sqrt(2 - X())

    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    def test_binomial_coefficients_of_powers(self, m):
        s = inv_sqrt(discriminant(T)) ** (2 * m + 1)
        for n in range(m, T + m + 1):
            for k in range(n + 1):
                if n - m <= T:
                    assert s.coefficient(n - m, k) == eq18(n, m, k)

    def test_zeroth_power_is_squared_binomials(self):
        s = inv_sqrt(discriminant(T))
        assert all(s.coefficient(n, k) == comb(n, k) ** 2 for n in range(T + 1) for k in range(n + 1))


class TestDerivative:
    def test_monomials(self):
        assert partial_x(mono(2, 1)) == 2 * mono(1, 1, T - 1)
        assert partial_x(BivariateSeries.constant(7, T)) == 0
        assert partial_x(X()).trunc == T - 1

    def test_j_numbers(self):
        D = solve_D(T)
        s = divide(x_partial_x(D), D)
        assert all(s.coefficient(n, k) == j_count(n, k) for n in range(1, T + 1) for k in range(n + 1))


class TestSubstitution:
    def test_examples(self):
        D = solve_D(T)
        xD = D.shift_x(1).truncate(T)
        assert substitute_x(X(), xD) == xD
        assert substitute_x(X() ** 2, X()) == X() ** 2

    def test_needs_positive_order(self):
        with pytest.raises(DomainError):
            substitute_x(X(), 1 + X())
        with pytest.raises(DomainError):
            substitute_x(X(), Y())

    def test_shift_down(self):
        assert mono(3, 1).shift_x(-2) == mono(1, 1, T - 2)
        with pytest.raises(DomainError):
            (1 + X()).shift_x(-1)


class TestD:
    def test_values(self):
        D = solve_D(T)
        assert D.coefficient(0, 0) == 1
        assert D.coefficient(3, 2) == 3
        assert [D.coefficient(4, k) for k in range(1, 5)] == [1, 6, 6, 1]
        assert coefficient(solve_D(5), 3, 2) == 3

    def test_narayana(self):
        D = solve_D(20)
        assert all(D.coefficient(n, k) == narayana(n, k) for n in range(21) for k in range(n + 1))

    def test_radical_form_agrees(self):
        # constant term 1 and [x y] = 1 fix the branch of the square root
        assert d_from_radical(T) == solve_D(T)
        assert solve_D(T).coefficient(1, 1) == 1

    def test_quadratic_residual(self):
        D = solve_D(25)
        x, xy = X(25), mono(1, 1, 25)
        assert D - 1 - xy * D - x * (D - 1) * D == 0

    def test_derivative_identities(self):
        t = T
        D = solve_D(t + 1)
        Dx = partial_x(D)
        D = D.truncate(t)
        x, y = X(t), Y(t)
        radical = 1 + x - x * y - 2 * x * D
        assert radical * radical == discriminant(t)
        assert Dx * radical == D * (D + y - 1)
        assert (1 + divide(x_partial_x(D), D)) * radical == 1 - x * D


class TestNamed:
    def test_unknown_name(self):
        with pytest.raises(DomainError):
            expand_named("Q7", 4)

    @pytest.mark.parametrize("name", NAMES)
    def test_nonnegative_integers(self, name):
        s = expand_named(name, 16)
        assert s.is_integral()
        assert all(c > 0 for _, _, c in s.items())

    @pytest.mark.parametrize("name", NAMES)
    def test_y_degree_bounded_by_x_degree(self, name):
        assert all(k <= n for n, k, _ in expand_named(name, 16).items())

    def test_reduced_values(self):
        r0 = expand_named("R0", 8)
        assert (r0.coefficient(4, 2), r0.coefficient(6, 2), r0.coefficient(6, 3)) == (1, 15, 4)

    @pytest.mark.parametrize("name,j", [("R0", 0), ("R1", 1), ("R2", 2), ("Rstar", "any")])
    def test_reduced_formulas(self, name, j):
        s = expand_named(name, 25)
        assert all(s.coefficient(n, k) == reduced_count(n, k, j) for n in range(26) for k in range(n + 1))

    @pytest.mark.parametrize("name,j", [("P0", 0), ("P1", 1), ("P2", 2), ("Pstar", "any")])
    def test_full_formulas(self, name, j):
        s = expand_named(name, 25)
        assert all(s.coefficient(n, k) == full_count(n, k, j) for n in range(26) for k in range(n + 1))

    def test_star_is_shifted_p0(self):
        p0, ps = expand_named("P0", 20), expand_named("Pstar", 20)
        assert all(ps.coefficient(n, k) == p0.coefficient(n + 1, k + 1) for n in range(20) for k in range(n + 1))

    def test_dfactor(self):
        t = 15
        D = solve_D(t)
        assert expand_named("Dfactor", t) == 1 + divide(x_partial_x(D), D)

    def test_reduced_forms_cleared_of_denominators(self):
        t = T
        D = solve_D(t)
        xD = D.shift_x(1).truncate(t)
        disc = discriminant(t)
        x, y = X(t), Y(t)
        for name, rhs in (("R0", mono(4, 2, t)), ("R1", mono(3, 1, t) * (1 - x * y - x))):
            lifted = substitute_x(expand_named(name, t), xD)
            assert lifted * disc * disc * (1 - xD) == rhs


@pytest.mark.parametrize("reduced,full", [("R0", "P0"), ("R1", "P1"), ("R2", "P2"), ("Rstar", "Pstar")])
def test_lift(reduced, full):
    assert lift_reduced_to_full(expand_named(reduced, 14)) == expand_named(full, 14)


def test_lift_needs_enough_terms():
    with pytest.raises(DomainError):
        lift_reduced_to_full(expand_named("R0", 5), 8)
