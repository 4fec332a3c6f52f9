# autgrp.py

"""
Witt Automorphism Toolkit - Automorphism Group File

This file implements the group GL_n(Z) x| (Q*)^n of automorphisms of the
Laurent polynomial algebra L_n, stored canonically as sigma = sigma_A o t_lambda
(x_i -> lambda_i x^{A e_i}), its action on L_n and on W_n, decomposition of
ring maps given by the images of the generators, and the recovery of an
automorphism of W_n from its images on H_1..H_n and d_1..d_n.
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction

from errors import DimensionError, NotAUnit, NotCartanPreserving, NotDiagonalizable, NotUnimodular
from kernel import (IntMatrix, LaurentPolynomial, LinearSystem, check_dimension,
                    scale_index, solve_exact, to_scalar, unimodular_inverse, unit_index,
                    zero_index)
from witt import (DerElement, WittElement, derivation_apply, is_locally_finite, support,
                  weight_of)

logger = logging.getLogger(__name__)


# --- The group element ---
@dataclass(frozen=True)
class Automorphism:
    """
    The automorphism sigma_A o t_lambda of L_n, acting by
    x^alpha -> lambda^alpha x^{A alpha}.

    Attributes:
        matrix (IntMatrix): A, with det(A) = +-1.
        scalars (tuple): lambda_1..lambda_n, all nonzero.
    """
    matrix: IntMatrix
    scalars: tuple

    def __post_init__(self):
        if not isinstance(self.matrix, IntMatrix):
            object.__setattr__(self, 'matrix', IntMatrix(tuple(tuple(row) for row in self.matrix)))
        scalars = tuple(to_scalar(s) for s in self.scalars)
        check_dimension(self.matrix.size, len(scalars))
        det = self.matrix.det()
        if det not in (1, -1):
            raise NotUnimodular(f'det = {det}')
        if not all(scalars):
            raise NotAUnit('every lambda_i must be nonzero')
        object.__setattr__(self, 'scalars', scalars)

    @classmethod
    def identity(cls, n):
        return cls(IntMatrix.identity(n), (1,) * n)

    @classmethod
    def torus(cls, scalars):
        return cls(IntMatrix.identity(len(scalars)), tuple(scalars))

    @classmethod
    def monomial(cls, matrix):
        return cls(matrix, (1,) * matrix.size)

    @property
    def dim(self):
        return self.matrix.size

    def is_identity(self):
        return self == Automorphism.identity(self.dim)

    def is_torus(self):
        return self.matrix.is_identity()

    def scalar_power(self, alpha):
        """lambda^alpha = prod_i lambda_i^alpha_i."""
        check_dimension(self.dim, len(alpha))
        result = Fraction(1)
        for lam, a in zip(self.scalars, alpha):
            result *= lam ** a
        return result


@functools.lru_cache(maxsize=1024)
def _inverse_matrix(matrix):
    return unimodular_inverse(matrix)


# --- Group law ---
def compose(sigma, tau):
    """
    The canonical form of sigma o tau.

    For sigma = (A, lambda) and tau = (B, mu) the result is (AB, nu) with
    nu_i = lambda^{B e_i} mu_i.
    """
    check_dimension(sigma.dim, tau.dim)
    b = tau.matrix
    scalars = tuple(sigma.scalar_power(b.column(i)) * tau.scalars[i] for i in range(tau.dim))
    return Automorphism(sigma.matrix @ b, scalars)


def inverse(sigma):
    """(A, lambda)^-1 = (A^-1, mu) with mu_i = lambda^{-(A^-1) e_i}."""
    a_inv = _inverse_matrix(sigma.matrix)
    scalars = tuple(1 / sigma.scalar_power(a_inv.column(i)) for i in range(sigma.dim))
    return Automorphism(a_inv, scalars)


def weight_permutation(sigma, alpha):
    """The weight alpha -> A alpha by which sigma permutes the weight spaces of W_n."""
    return sigma.matrix.apply(alpha)


# --- Actions ---
def apply_to_laurent(sigma, f):
    """Applies sigma to a Laurent polynomial: x^alpha -> lambda^alpha x^{A alpha}."""
    check_dimension(sigma.dim, f.dim)
    mapping = {}
    for alpha, coeff in f.terms:
        mapping[sigma.matrix.apply(alpha)] = coeff * sigma.scalar_power(alpha)
    return LaurentPolynomial.from_mapping(f.dim, mapping)


def apply_to_witt(sigma, w):
    """
    Applies sigma to an element of W_n by conjugation.

    sigma(x^alpha H_j) = lambda^alpha x^{A alpha} sum_k (A^-1)_{jk} H_k.
    """
    check_dimension(sigma.dim, w.dim)
    a_inv = _inverse_matrix(sigma.matrix)
    mapping = {}
    # Weights move by A and the H-vector by the transpose of A^-1.
    for alpha, vector in w.terms:
        scale = sigma.scalar_power(alpha)
        image = [scale * sum((vector[j] * a_inv.rows[j][k] for j in range(w.dim)), Fraction(0))
                 for k in range(w.dim)]
        mapping[sigma.matrix.apply(alpha)] = image
    return WittElement.from_mapping(w.dim, mapping)


def conjugate_der_oracle(sigma, d):
    """
    sigma o d o sigma^-1 computed from its values on x_1..x_n.

    Independent of `apply_to_witt`; used to cross-check it.
    """
    check_dimension(sigma.dim, d.dim)
    sigma_inv = inverse(sigma)
    mapping = {}
    # A derivation is determined by its values on the generators x_k.
    for k in range(d.dim):
        preimage = apply_to_laurent(sigma_inv, LaurentPolynomial.variable(d.dim, k))
        value = apply_to_laurent(sigma, derivation_apply(d, preimage))
        for beta, coeff in value.terms:
            mapping.setdefault(beta, [Fraction(0)] * d.dim)[k] += coeff
    return DerElement.from_mapping(d.dim, mapping)


def ring_images(sigma):
    """sigma(x_1), ..., sigma(x_n)."""
    return tuple(apply_to_laurent(sigma, LaurentPolynomial.variable(sigma.dim, i))
                 for i in range(sigma.dim))


def generator_images(sigma):
    """
    The images of the generators H_i and d_i under sigma.

    Returns:
        tuple: (H images, d images), each a tuple of WittElements.
    """
    n = sigma.dim
    cartan = tuple(apply_to_witt(sigma, WittElement.term(n, zero_index(n), i)) for i in range(n))
    partials = tuple(apply_to_witt(sigma, WittElement.partial(n, i)) for i in range(n))
    return cartan, partials


# --- Decomposition and recovery ---
def decompose_ring_map(images):
    """
    Reads (A, lambda) off the images x_i -> lambda_i x^{A e_i}.

    Args:
        images (list): One LaurentPolynomial per generator x_i.

    Returns:
        Automorphism: The canonical form of the ring map.

    Raises:
        NotAUnit: If an image is zero or not a single monomial.
        NotUnimodular: If the exponent matrix is not in GL_n(Z).
    """
    n = len(images)
    columns, scalars = [], []
    for image in images:
        if image.dim != n:
            raise DimensionError(f'image in {image.dim} variables for a map of {n} variables')
        alpha, coeff = image.unit_data()
        columns.append(alpha)
        scalars.append(coeff)
    return Automorphism(IntMatrix.from_columns(columns), tuple(scalars))


def cartan_matrix(cartan_images):
    """
    The matrix A_sigma with sigma(H) = A_sigma H, read from the images of H_1..H_n.

    Raises:
        NotCartanPreserving: If some image leaves the Cartan subalgebra.
        NotUnimodular: If A_sigma is not an integer matrix of determinant +-1.
    """
    n = len(cartan_images)
    rows = []
    for i, image in enumerate(cartan_images):
        check_dimension(n, image.dim)
        if not is_locally_finite(image):
            raise NotCartanPreserving(
                f'image of H{i + 1} has support {sorted(support(image))}, not {{0}}')
        # Row i of A_sigma holds the H coefficients of sigma(H_i).
        row = image.coefficients(zero_index(n))
        if any(c.denominator != 1 for c in row):
            raise NotUnimodular(f'image of H{i + 1} has non-integer coefficients')
        rows.append(tuple(int(c) for c in row))
    matrix = IntMatrix(tuple(rows))
    det = matrix.det()
    if det not in (1, -1):
        raise NotUnimodular(f'det(A_sigma) = {det}')
    return matrix


def recover_from_images(cartan_images, partial_images):
    """
    Recovers sigma from sigma(H_1..H_n) and sigma(d_1..d_n).

    The steps: read A_sigma from the Cartan images; set A = A_sigma^-1;
    strip the monomial part with tau = sigma_{A_sigma}, which leaves
    tau(sigma(d_i)) = x^{-e_i} sum_j Lambda_ij H_j; require each row of
    Lambda to be a multiple mu_i e_i (exact solve) and set lambda_i = 1/mu_i;
    finally check that (A, lambda) reproduces all 2n images.

    Raises:
        NotCartanPreserving: If an H image is not in the Cartan subalgebra.
        NotUnimodular: If A_sigma is not in GL_n(Z).
        NotDiagonalizable: If the partial images fit no (A, lambda).
    """
    n = len(cartan_images)
    if len(partial_images) != n:
        raise DimensionError(f'{n} Cartan images but {len(partial_images)} partial images')
    a_sigma = cartan_matrix(cartan_images)
    matrix = unimodular_inverse(a_sigma)
    tau = Automorphism.monomial(a_sigma)
    scalars = []
    for i, image in enumerate(partial_images):
        check_dimension(n, image.dim)
        stripped = apply_to_witt(tau, image)
        expected_weight = scale_index(-1, unit_index(n, i))
        if stripped.is_zero() or len(stripped.terms) != 1 or weight_of(stripped) != expected_weight:
            raise NotDiagonalizable(f'image of d{i + 1} is not of weight -A e_{i + 1}')
        row = stripped.coefficients(expected_weight)
        # Lambda_i = mu_i e_i, one unknown and n equations.
        system = LinearSystem.from_dense([[1 if j == i else 0] for j in range(n)], row, 1)
        solution = solve_exact(system)
        if not solution.consistent or not solution.particular[0]:
            raise NotDiagonalizable(f'image of d{i + 1} mixes H components {list(row)}')
        scalars.append(1 / solution.particular[0])
    sigma = Automorphism(matrix, tuple(scalars))
    # The Cartan images alone do not pin down A; the full check catches inconsistent inputs.
    if generator_images(sigma) != (tuple(cartan_images), tuple(partial_images)):
        raise NotDiagonalizable('recovered automorphism does not reproduce the images')
    logger.debug('recovered A=%s lambda=%s', matrix.rows, sigma.scalars)
    return sigma


# --- Fixators ---
@dataclass(frozen=True)
class FixatorFlags:
    """Whether sigma fixes every H_i, and whether it fixes every d_i."""
    fixes_cartan: bool
    fixes_partials: bool


def fixator_flags(sigma):
    n = sigma.dim
    cartan, partials = generator_images(sigma)
    fixes_cartan = all(image == WittElement.term(n, zero_index(n), i) for i, image in enumerate(cartan))
    fixes_partials = all(image == WittElement.partial(n, i) for i, image in enumerate(partials))
    return FixatorFlags(fixes_cartan, fixes_partials)
