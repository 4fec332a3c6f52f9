# tests/test_autgrp.py

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from autgrp import (Automorphism, apply_to_laurent, apply_to_witt, compose, conjugate_der_oracle,
                    decompose_ring_map, fixator_flags, generator_images, inverse, recover_from_images,
                    ring_images, weight_permutation)
from errors import NotAUnit, NotCartanPreserving, NotDiagonalizable, NotUnimodular
from kernel import IntMatrix, LaurentPolynomial, unimodular_inverse
from witt import WittElement, bracket, from_der_basis, is_locally_finite, support, to_der_basis, weight_of
from strategies import automorphisms, cartan_vectors, dims, homogeneous_elements, witt_elements

SWAP = IntMatrix(((0, 1), (1, 0)))


def inversion(lam):
    return Automorphism(IntMatrix(((-1,),)), (lam,))


def h(n, alpha, j=0, coeff=1):
    return WittElement.term(n, alpha, j, coeff)


class TestGroupLaw:

    def test_compose_example(self):
        assert compose(inversion(2), inversion(3)) == Automorphism.torus((Fraction(3, 2),))

    def test_inverse_example(self):
        sigma = Automorphism(SWAP, (5, 7))
        assert inverse(sigma) == Automorphism(SWAP, (Fraction(1, 7), Fraction(1, 5)))

    def test_rejects_non_unimodular_matrix(self):
        with pytest.raises(NotUnimodular):
            Automorphism(IntMatrix(((2,),)), (1,))

    def test_rejects_zero_scalar(self):
        with pytest.raises(NotAUnit):
            Automorphism.torus((1, 0))

    @settings(max_examples=200)
    @given(data=st.data())
    def test_group_axioms(self, data):
        n = data.draw(dims)
        sigma, tau, rho = (data.draw(automorphisms(n)) for _ in range(3))
        assert compose(sigma, inverse(sigma)).is_identity()
        assert compose(inverse(sigma), sigma).is_identity()
        assert compose(compose(sigma, tau), rho) == compose(sigma, compose(tau, rho))
        assert compose(Automorphism.identity(n), sigma) == sigma


class TestActions:

    def test_apply_to_laurent(self):
        x_cubed = LaurentPolynomial.monomial(1, (3,))
        assert apply_to_laurent(inversion(2), x_cubed) == LaurentPolynomial.monomial(1, (-3,), 8)

    def test_apply_to_witt(self):
        assert apply_to_witt(inversion(2), h(1, (2,))) == h(1, (-2,), 0, -4)

    def test_weight_permutation(self):
        assert weight_permutation(Automorphism(SWAP, (1, 1)), (2, -1)) == (-1, 2)

    def test_ring_images(self):
        x1, x2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
        assert ring_images(Automorphism(SWAP, (5, 7))) == (5 * x2, 7 * x1)

    @settings(max_examples=200)
    @given(data=st.data())
    def test_action_is_a_homomorphism(self, data):
        n = data.draw(dims)
        sigma = data.draw(automorphisms(n))
        a, b = data.draw(witt_elements(n, max_terms=3)), data.draw(witt_elements(n, max_terms=3))
        assert apply_to_witt(sigma, bracket(a, b)) == bracket(apply_to_witt(sigma, a), apply_to_witt(sigma, b))

    @settings(max_examples=200)
    @given(data=st.data())
    def test_action_respects_composition(self, data):
        n = data.draw(dims)
        sigma, tau = data.draw(automorphisms(n)), data.draw(automorphisms(n))
        a = data.draw(witt_elements(n, max_terms=3))
        assert apply_to_witt(compose(sigma, tau), a) == apply_to_witt(sigma, apply_to_witt(tau, a))

    @settings(max_examples=200)
    @given(data=st.data())
    def test_action_matches_conjugation(self, data):
        n = data.draw(dims)
        sigma = data.draw(automorphisms(n))
        a = data.draw(witt_elements(n, max_terms=3))
        assert to_der_basis(apply_to_witt(sigma, a)) == conjugate_der_oracle(sigma, to_der_basis(a))
        assert from_der_basis(conjugate_der_oracle(sigma, to_der_basis(a))) == apply_to_witt(sigma, a)


class TestCartanAction:

    @settings(max_examples=300)
    @given(data=st.data())
    def test_cartan_subalgebra_is_stable(self, data):
        n = data.draw(dims)
        sigma = data.draw(automorphisms(n))
        cartan = WittElement.cartan(n, data.draw(cartan_vectors(n)))
        assert is_locally_finite(apply_to_witt(sigma, cartan))

    @settings(max_examples=300)
    @given(data=st.data())
    def test_cartan_elements_transform_by_the_inverse_matrix(self, data):
        n = data.draw(dims)
        sigma = data.draw(automorphisms(n))
        coeffs = data.draw(cartan_vectors(n))
        a_inv = unimodular_inverse(sigma.matrix).rows
        expected = tuple(sum((coeffs[j] * a_inv[j][k] for j in range(n)), Fraction(0)) for k in range(n))
        assert apply_to_witt(sigma, WittElement.cartan(n, coeffs)) == WittElement.cartan(n, expected)

    @settings(max_examples=300)
    @given(data=st.data())
    def test_homogeneous_weights_are_permuted(self, data):
        n = data.draw(dims)
        sigma = data.draw(automorphisms(n))
        w = data.draw(homogeneous_elements(n, nonzero_weight=False))
        alpha = weight_of(w)
        assert support(apply_to_witt(sigma, w)) == {sigma.matrix.apply(alpha)}
        assert weight_permutation(sigma, alpha) == sigma.matrix.apply(alpha)

    @settings(max_examples=300)
    @given(data=st.data())
    def test_inverse_undoes_apply(self, data):
        n = data.draw(dims)
        sigma = data.draw(automorphisms(n))
        a = data.draw(witt_elements(n))
        assert apply_to_witt(inverse(sigma), apply_to_witt(sigma, a)) == a
        assert apply_to_witt(sigma, apply_to_witt(inverse(sigma), a)) == a


class TestDecomposition:

    def test_swap_map(self):
        x1, x2 = LaurentPolynomial.variable(2, 0), LaurentPolynomial.variable(2, 1)
        assert decompose_ring_map([5 * x2, 7 * x1]) == Automorphism(SWAP, (5, 7))

    def test_shift_is_not_a_unit(self):
        x = LaurentPolynomial.variable(1, 0)
        with pytest.raises(NotAUnit):
            decompose_ring_map([x + LaurentPolynomial.constant(1, 1)])

    def test_square_is_not_unimodular(self):
        with pytest.raises(NotUnimodular):
            decompose_ring_map([LaurentPolynomial.monomial(1, (2,))])

    @given(data=st.data())
    def test_decomposition_inverts_ring_images(self, data):
        sigma = data.draw(automorphisms(data.draw(dims)))
        assert decompose_ring_map(list(ring_images(sigma))) == sigma


class TestRecovery:

    def test_inversion_from_images(self):
        assert recover_from_images([h(1, (0,), 0, -1)], [h(1, (1,), 0, Fraction(-1, 2))]) == inversion(2)

    def test_cartan_image_outside_the_cartan_subalgebra(self):
        with pytest.raises(NotCartanPreserving):
            recover_from_images([h(1, (1,))], [h(1, (-1,))])

    def test_cartan_image_with_bad_determinant(self):
        with pytest.raises(NotUnimodular):
            recover_from_images([h(1, (0,), 0, 2)], [h(1, (-1,))])

    def test_partial_image_mixing_generators(self):
        cartan = [h(2, (0, 0), 0), h(2, (0, 0), 1)]
        partials = [h(2, (-1, 0), 0) + h(2, (-1, 0), 1), h(2, (0, -1), 1)]
        with pytest.raises(NotDiagonalizable):
            recover_from_images(cartan, partials)

    @settings(max_examples=200)
    @given(data=st.data())
    def test_recovery_round_trip(self, data):
        sigma = data.draw(automorphisms(data.draw(dims)))
        cartan, partials = generator_images(sigma)
        assert recover_from_images(list(cartan), list(partials)) == sigma


class TestFixators:

    def test_torus_fixes_the_cartan_subalgebra_only(self):
        flags = fixator_flags(Automorphism.torus((5,)))
        assert (flags.fixes_cartan, flags.fixes_partials) == (True, False)

    def test_inversion_fixes_neither(self):
        flags = fixator_flags(inversion(1))
        assert (flags.fixes_cartan, flags.fixes_partials) == (False, False)

    def test_identity_fixes_both(self):
        flags = fixator_flags(Automorphism.identity(2))
        assert (flags.fixes_cartan, flags.fixes_partials) == (True, True)

    @given(data=st.data())
    def test_fixing_both_means_identity(self, data):
        sigma = data.draw(automorphisms(data.draw(dims)))
        flags = fixator_flags(sigma)
        assert (flags.fixes_cartan and flags.fixes_partials) == sigma.is_identity()
        assert flags.fixes_cartan == sigma.is_torus()
