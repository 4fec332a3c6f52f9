# tests/test_witt.py

import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from errors import DimensionError, LocallyFinite, NotHomogeneous, UnsupportedDimension, ZeroElement
from kernel import LaurentPolynomial, add_index, max_norm
from witt import (MINUS, PLUS, DerElement, Window, WittElement, bracket, bracket_der_oracle,
                  centralizer_window, from_der_basis, graded_components, is_locally_finite,
                  leading_term, lf_iterates, newton_polygon_vertices, non_finiteness_probe,
                  normalizer_window, solve_bracket_equation, support, support_norms, to_der_basis,
                  derivation_apply, weight_action, weight_of)
from strategies import dims, homogeneous_elements, witt_elements


def h(n, alpha, j=0, coeff=1):
    return WittElement.term(n, alpha, j, coeff)


def partial(n, beta, i=0, coeff=1):
    return DerElement.term(n, beta, i, coeff)


class TestBracket:

    def test_rank_one_example(self):
        assert bracket(h(1, (-2,)), h(1, (1,))) == h(1, (-1,), 0, 3)

    def test_cartan_acts_by_pairing(self):
        assert bracket(h(2, (0, 0), 0), h(2, (2, 1), 1)) == h(2, (2, 1), 1, 2)

    @pytest.mark.parametrize('n', [1, 2])
    def test_cartan_action_on_every_small_weight(self, n):
        # [H_j, x^alpha H_k] = alpha_j x^alpha H_k for |alpha_i| <= 4
        for alpha in itertools.product(range(-4, 5), repeat=n):
            for j, k in itertools.product(range(n), repeat=2):
                assert bracket(h(n, (0,) * n, j), h(n, alpha, k)) == h(n, alpha, k, alpha[j])

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            bracket(h(1, (1,)), h(2, (1, 0)))

    @settings(max_examples=1000)
    @given(data=st.data())
    def test_self_bracket_vanishes(self, data):
        a = data.draw(witt_elements(data.draw(dims)))
        assert bracket(a, a).is_zero()

    @settings(max_examples=1000)
    @given(data=st.data())
    def test_antisymmetry(self, data):
        n = data.draw(dims)
        a, b = data.draw(witt_elements(n)), data.draw(witt_elements(n))
        assert bracket(a, b) == -bracket(b, a)

    @settings(max_examples=1000)
    @given(data=st.data())
    def test_jacobi_identity(self, data):
        n = data.draw(dims)
        a, b, c = (data.draw(witt_elements(n, max_terms=3)) for _ in range(3))
        total = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        assert total.is_zero()

    @given(data=st.data())
    def test_bracket_respects_the_grading(self, data):
        n = data.draw(dims)
        a, b = data.draw(witt_elements(n)), data.draw(witt_elements(n))
        sums = {add_index(alpha, beta) for alpha in support(a) for beta in support(b)}
        assert support(bracket(a, b)) <= sums


class TestDerivationBasis:

    def test_cartan_generator_is_x_d(self):
        assert to_der_basis(h(1, (0,))) == partial(1, (1,))

    def test_zero(self):
        assert to_der_basis(WittElement.zero(2)) == DerElement.zero(2)

    def test_exponent_shift(self):
        a = h(2, (-1, 0), 0) + h(2, (0, 0), 1)
        assert to_der_basis(a) == partial(2, (0, 0), 0) + partial(2, (0, 1), 1)

    def test_oracle_examples(self):
        assert bracket_der_oracle(partial(1, (-1,)), partial(1, (2,))) == partial(1, (0,), 0, 3)
        assert bracket_der_oracle(partial(2, (0, 1), 0), partial(2, (0, 0), 1)) == partial(2, (0, 0), 0, -1)

    def test_derivations_act_on_laurent_polynomials(self):
        f = LaurentPolynomial.from_mapping(1, {(3,): 1, (0,): 5})
        assert derivation_apply(partial(1, (0,)), f) == LaurentPolynomial.from_mapping(1, {(2,): 3})
        g = LaurentPolynomial.monomial(2, (-2, 1))
        assert derivation_apply(partial(2, (1, 0), 0), g) == LaurentPolynomial.from_mapping(2, {(-2, 1): -2})

    @given(data=st.data())
    def test_round_trip(self, data):
        a = data.draw(witt_elements(data.draw(dims)))
        assert from_der_basis(to_der_basis(a)) == a

    @settings(max_examples=1000)
    @given(data=st.data())
    def test_oracle_agrees_with_bracket(self, data):
        n = data.draw(dims)
        a, b = data.draw(witt_elements(n)), data.draw(witt_elements(n))
        assert from_der_basis(bracket_der_oracle(to_der_basis(a), to_der_basis(b))) == bracket(a, b)


class TestSupportAndHull:

    def test_support(self):
        assert support(WittElement.zero(1)) == set()
        assert support(WittElement.cartan(2, (1, 3))) == {(0, 0)}
        a = h(1, (-1,)) + h(1, (0,), 0, 2) + h(1, (2,))
        assert support(a) == {(-1,), (0,), (2,)}

    def test_hull_in_one_variable(self):
        a = h(1, (-1,)) + h(1, (0,), 0, 2) + h(1, (2,))
        assert newton_polygon_vertices(a) == {(-1,), (2,)}

    def test_hull_single_term(self):
        assert newton_polygon_vertices(h(2, (3, -1), 1)) == {(3, -1)}

    def test_hull_skips_edge_points(self):
        a = h(2, (0, 0)) + h(2, (1, 0)) + h(2, (2, 0)) + h(2, (0, 2))
        assert newton_polygon_vertices(a) == {(0, 0), (2, 0), (0, 2)}

    def test_hull_of_collinear_support(self):
        a = h(2, (0, 0)) + h(2, (1, 1)) + h(2, (2, 2))
        assert newton_polygon_vertices(a) == {(0, 0), (2, 2)}

    def test_hull_unsupported_dimension(self):
        with pytest.raises(UnsupportedDimension):
            newton_polygon_vertices(h(3, (1, 0, 0)))


class TestGradings:

    def test_components_by_degree(self):
        a = h(1, (-1,)) + h(1, (0,)) + h(1, (2,))
        assert graded_components(a, (1,)) == {-1: h(1, (-1,)), 0: h(1, (0,)), 2: h(1, (2,))}

    def test_components_merge_equal_degrees(self):
        a = h(2, (1, 1), 0) + h(2, (0, 0), 1)
        assert graded_components(a, (1, -1)) == {0: a}

    def test_leading_terms(self):
        a = h(1, (-1,)) + h(1, (0,)) + h(1, (2,))
        assert leading_term(a, (1,), PLUS) == h(1, (2,))
        assert leading_term(a, (1,), MINUS) == h(1, (-1,))
        b = h(2, (5, 0), 0) + h(2, (0, 1), 1)
        assert leading_term(b, (0, 1), PLUS) == h(2, (0, 1), 1)

    def test_leading_term_of_zero(self):
        with pytest.raises(ZeroElement):
            leading_term(WittElement.zero(1), (1,))

    def test_weight_of(self):
        assert weight_of(h(2, (3, -1), 1, 5)) == (3, -1)
        with pytest.raises(NotHomogeneous):
            weight_of(h(1, (1,)) + h(1, (2,)))

    @given(data=st.data())
    def test_cartan_action_matches_the_bracket(self, data):
        n = data.draw(dims)
        cartan = WittElement.cartan(n, tuple(data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n))))
        w = data.draw(witt_elements(n))
        assert weight_action(cartan, w) == bracket(cartan, w)

    @settings(max_examples=300)
    @given(data=st.data(), side=st.sampled_from([PLUS, MINUS]))
    def test_leading_terms_bracket_to_the_leading_term(self, data, side):
        n = data.draw(dims)
        a, b = data.draw(witt_elements(n)), data.draw(witt_elements(n))
        assume(not a.is_zero() and not b.is_zero())
        weight = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
        top = bracket(leading_term(a, weight, side), leading_term(b, weight, side))
        if not top.is_zero():
            assert top == leading_term(bracket(a, b), weight, side)

    @given(data=st.data())
    def test_components_sum_to_the_element(self, data):
        n = data.draw(dims)
        a = data.draw(witt_elements(n))
        weight = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=n, max_size=n)))
        total = WittElement.zero(n)
        for piece in graded_components(a, weight).values():
            total = total + piece
        assert total == a


class TestLocalFiniteness:

    def test_cartan_elements(self):
        assert is_locally_finite(WittElement.cartan(2, (1, 3)))
        assert is_locally_finite(WittElement.zero(2))
        assert not is_locally_finite(h(1, (1,)))

    def test_iterates_with_orthogonal_weight(self):
        a, b = h(2, (1, 0), 1), h(2, (0, 1), 1)
        assert lf_iterates(a, b, 3) == [h(2, (1, 1), 1), h(2, (2, 1), 1), h(2, (3, 1), 1)]

    def test_iterates_in_the_cartan_subalgebra(self):
        iterates = lf_iterates(h(2, (0, 0), 0), h(2, (0, 0), 1), 2)
        assert all(x.is_zero() for x in iterates)

    def test_iterates_by_repeated_bracket(self):
        assert lf_iterates(h(1, (1,)), h(1, (2,)), 3) == [
            h(1, (3,)), h(1, (4,), 0, 2), h(1, (5,), 0, 6)]

    def test_iterates_need_a_homogeneous_element(self):
        with pytest.raises(NotHomogeneous):
            lf_iterates(h(1, (1,)) + h(1, (2,)), h(1, (0,)), 2)

    @settings(max_examples=500)
    @given(data=st.data())
    def test_locally_finite_iff_cartan(self, data):
        n = data.draw(dims)
        a = data.draw(witt_elements(n))
        assert is_locally_finite(a) == (support(a) <= {(0,) * n})

    @settings(max_examples=100)
    @given(data=st.data())
    def test_probe_support_grows(self, data):
        a = data.draw(homogeneous_elements(data.draw(dims)))
        norms = support_norms(lf_iterates(a, non_finiteness_probe(a), 10))
        assert None not in norms
        assert all(x < y for x, y in zip(norms, norms[1:]))

    def test_no_witness_for_cartan_elements(self):
        with pytest.raises(LocallyFinite):
            non_finiteness_probe(WittElement.cartan(2, (1, 3)))

    def test_closed_form_for_nonorthogonal_weight(self):
        # ad(x^alpha H')^m (x^{2 alpha} H') = m! (H', alpha)^m x^{(m+2) alpha} H'
        a = WittElement.from_mapping(2, {(1, 2): (1, Fraction(1, 2))})
        probe = non_finiteness_probe(a)
        iterates = lf_iterates(a, probe, 4)
        factorial = 1
        for m, value in enumerate(iterates, start=1):
            factorial *= m
            expected = WittElement.from_mapping(
                2, {(m + 2, 2 * m + 4): (factorial * 2 ** m, factorial * 2 ** m / Fraction(2))})
            assert value == expected
            assert max_norm((m + 2, 2 * m + 4)) == support_norms([value])[0]


class TestWindowSolving:

    def test_rank_one_obstruction_is_solvable_at_the_origin(self):
        b, target = h(1, (1,)), h(1, (-1,), 0, 3)
        solution = solve_bracket_equation(b, target, Window.cube(1, -10, 10))
        assert solution.solvable
        assert bracket(solution.particular, b) == target
        assert support(solution.particular - h(1, (-2,))) <= {(1,)}
        assert solution.nullspace == (h(1, (1,)),)

    @pytest.mark.parametrize('shift', [1, -2, Fraction(1, 2)])
    def test_shifted_obstruction_has_no_solution(self, shift):
        # (x + shift)^2 d = xH + 2 shift H + shift^2 x^-1 H
        b = h(1, (1,)) + h(1, (0,), 0, 2 * shift) + h(1, (-1,), 0, shift ** 2)
        solution = solve_bracket_equation(b, h(1, (-1,), 0, 3), Window.cube(1, -10, 10))
        assert not solution.solvable

    def test_zero_equation_is_solved_by_the_whole_window(self):
        window = Window.cube(2, -1, 1)
        solution = solve_bracket_equation(WittElement.zero(2), WittElement.zero(2), window)
        assert solution.particular.is_zero()
        assert len(solution.nullspace) == 2 * 9

    def test_general_solution(self):
        b, target = h(1, (1,)), h(1, (-1,), 0, 3)
        solution = solve_bracket_equation(b, target, Window.cube(1, -4, 4))
        assert bracket(solution.general([Fraction(5, 2)]), b) == target

    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_cartan_subalgebra_is_self_centralizing(self, n):
        generators = [h(n, (0,) * n, i) for i in range(n)]
        basis = centralizer_window(generators, Window.cube(n, -5, 5))
        assert set(basis) == set(generators)

    def test_centralizer_without_generators(self):
        assert len(centralizer_window([], Window.cube(1, -2, 2))) == 5

    def test_centralizer_of_x_h(self):
        assert centralizer_window([h(1, (1,))], Window.cube(1, -3, 3)) == (h(1, (1,)),)

    def test_normalizer_of_the_cartan_subalgebra(self):
        basis = normalizer_window([h(1, (0,))], Window.cube(1, -3, 3))
        assert basis == (h(1, (0,)),)
