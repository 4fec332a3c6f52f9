# virasoro.py

"""
Witt Automorphism Toolkit - Virasoro Algebra File

This file defines the Virasoro algebra Vir = W_1 + Kc, the central
extension of W_1 by the 2-cocycle delta_{i,-j} (i^3 - i)/12, and the exact
lift solver that extends an automorphism of W_1 to Vir by solving for the
image gamma c of the central element and a correction functional phi.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from errors import DimensionError, NotLiftable, UniquenessViolation
from kernel import LinearSystemBuilder, check_dimension, env_int, solve_exact, to_scalar
from autgrp import Automorphism, apply_to_witt, compose
from witt import WittElement, bracket

logger = logging.getLogger(__name__)

# Half-widths of the degree windows used to solve for and re-verify a lift.
DEFAULT_LIFT_WINDOW = env_int('VIR_LIFT_WINDOW', 6)
DEFAULT_VERIFY_WINDOW = env_int('VIR_VERIFY_WINDOW', 12)


# --- Elements ---
@dataclass(frozen=True)
class VirElement:
    """
    An element w + z c of Vir.

    Attributes:
        w (WittElement): The W_1 part, sum_i c_i x^i H.
        central (Fraction): The coefficient z of the central element c.
    """
    w: WittElement
    central: Fraction = Fraction(0)

    def __post_init__(self):
        if self.w.dim != 1:
            raise DimensionError(f'Virasoro elements live over W_1, got n = {self.w.dim}')
        object.__setattr__(self, 'central', to_scalar(self.central))

    @classmethod
    def basis(cls, i, coeff=1):
        """coeff * x^i H."""
        return cls(WittElement.term(1, (i,), 0, coeff))

    @classmethod
    def central_element(cls, z=1):
        return cls(WittElement.zero(1), z)

    @classmethod
    def zero(cls):
        return cls(WittElement.zero(1))

    def is_zero(self):
        return self.w.is_zero() and not self.central

    def degree_coefficients(self):
        """Yields (i, coefficient of x^i H)."""
        for (i,), j, coeff in self.w.basis_terms():
            yield i, coeff

    def __add__(self, other):
        return VirElement(self.w + other.w, self.central + other.central)

    def __sub__(self, other):
        return VirElement(self.w - other.w, self.central - other.central)

    def __neg__(self):
        return VirElement(-self.w, -self.central)

    def __mul__(self, scalar):
        scalar = to_scalar(scalar)
        return VirElement(scalar * self.w, scalar * self.central)

    __rmul__ = __mul__


def quotient(v):
    """The image of v in Vir / Kc = W_1."""
    return v.w


def vir_basis(window):
    """The basis x^i H (|i| <= window) followed by c."""
    return [VirElement.basis(i) for i in range(-window, window + 1)] + [VirElement.central_element()]


# --- Bracket and cocycle ---
def cocycle(i, j):
    """delta_{i,-j} (i^3 - i) / 12."""
    if i != -j:
        return Fraction(0)
    return Fraction(i ** 3 - i, 12)


def omega(u, v):
    """The cocycle extended bilinearly to a pair of W_1 elements."""
    check_dimension(1, u.dim, v.dim)
    total = Fraction(0)
    for (i,), _, a in u.basis_terms():
        for (j,), _, b in v.basis_terms():
            total += a * b * cocycle(i, j)
    return total


def vir_bracket(a, b):
    """
    [x^i H, x^j H] = (j - i) x^{i+j} H + delta_{i,-j} (i^3 - i)/12 c, with c central.
    """
    return VirElement(bracket(a.w, b.w), omega(a.w, b.w))


def cocycle_identity_holds(a, b, c):
    """omega([a,b], c) + omega([b,c], a) + omega([c,a], b) == 0 for W_1 elements."""
    return omega(bracket(a, b), c) + omega(bracket(b, c), a) + omega(bracket(c, a), b) == 0


# --- Automorphisms of Vir ---
@dataclass(frozen=True)
class VirAutomorphism:
    """
    The map x^i H -> base(x^i H) + phi(i) c, c -> gamma c.

    Attributes:
        base (Automorphism): An automorphism (epsilon, lambda) of L_1.
        gamma (Fraction): The image scalar of c, nonzero.
        phi (tuple): Sorted (i, phi(i)) pairs with phi(i) != 0.
    """
    base: Automorphism
    gamma: Fraction = Fraction(1)
    phi: tuple = ()

    def __post_init__(self):
        if self.base.dim != 1:
            raise DimensionError('Virasoro automorphisms lift automorphisms of W_1')
        gamma = to_scalar(self.gamma)
        if not gamma:
            raise NotLiftable('gamma must be nonzero')
        phi = tuple(sorted((int(i), to_scalar(v)) for i, v in self.phi if v))
        object.__setattr__(self, 'gamma', gamma)
        object.__setattr__(self, 'phi', phi)

    @classmethod
    def identity(cls):
        return cls(Automorphism.identity(1))

    def phi_at(self, i):
        return dict(self.phi).get(i, Fraction(0))

    def apply(self, v):
        image = apply_to_witt(self.base, v.w)
        central = self.gamma * v.central
        for i, coeff in v.degree_coefficients():
            central += coeff * self.phi_at(i)
        return VirElement(image, central)

    def compose(self, other):
        """self o other."""
        epsilon = other.base.matrix.rows[0][0]
        degrees = {i for i, _ in other.phi} | {epsilon * j for j, _ in self.phi}
        phi = []
        for i in sorted(degrees):
            phi.append((i, self.apply(other.apply(VirElement.basis(i))).central))
        return VirAutomorphism(compose(self.base, other.base), self.gamma * other.gamma, tuple(phi))


def preserves_bracket(lift, window):
    """True iff lift([a, b]) == [lift(a), lift(b)] on the basis of the window."""
    basis = vir_basis(window)
    images = [lift.apply(v) for v in basis]
    for a, image_a in zip(basis, images):
        for b, image_b in zip(basis, images):
            if lift.apply(vir_bracket(a, b)) != vir_bracket(image_a, image_b):
                return False
    return True


def lift_w1_automorphism(sigma, window=DEFAULT_LIFT_WINDOW, verify_window=None):
    """
    Extends an automorphism of W_1 to Vir by exact linear algebra.

    Unknowns are gamma and phi(k) for |k| <= window; every basis pair
    (i, j) with |i|, |j|, |i + j| <= window contributes the central part of
    lift([x^i H, x^j H]) = [lift(x^i H), lift(x^j H)].

    Args:
        sigma (Automorphism): An automorphism (epsilon, lambda) of L_1.
        window (int): The degree bound N, at least 3.
        verify_window (int): Degree bound of the re-verification pass
            (default: the larger of 2N and DEFAULT_VERIFY_WINDOW; at least 2N).

    Returns:
        VirAutomorphism: The unique lift.

    Raises:
        NotLiftable: If the constraints have no solution or the solution fails re-verification.
        UniquenessViolation: If the solution has a free parameter.
    """
    if sigma.dim != 1:
        raise DimensionError('only automorphisms of W_1 lift to Vir')
    if window < 3:
        raise ValueError('the lift window must be at least 3')
    if verify_window is None:
        verify_window = max(2 * window, DEFAULT_VERIFY_WINDOW)
    elif verify_window < 2 * window:
        raise ValueError('the verification window must be at least twice the lift window')

    builder = LinearSystemBuilder(['gamma'] + [('phi', k) for k in range(-window, window + 1)])
    for i in range(-window, window + 1):
        for j in range(-window, window + 1):
            if abs(i + j) > window:
                continue
            image = vir_bracket(VirElement(apply_to_witt(sigma, VirElement.basis(i).w)),
                                VirElement(apply_to_witt(sigma, VirElement.basis(j).w)))
            if image.w != apply_to_witt(sigma, bracket(VirElement.basis(i).w, VirElement.basis(j).w)):
                raise NotLiftable('sigma does not preserve the W_1 bracket')
            builder.add((i, j), ('phi', i + j), j - i)
            builder.add((i, j), 'gamma', cocycle(i, j))
            builder.add_rhs((i, j), image.central)

    solution = solve_exact(builder.build())
    if not solution.consistent:
        raise NotLiftable(f'no lift of A={sigma.matrix.rows} lambda={sigma.scalars}')
    if solution.nullspace:
        raise UniquenessViolation(f'{len(solution.nullspace)} free parameters in the lift')

    values = dict(zip(builder.unknowns, solution.particular))
    phi = tuple((k, values[('phi', k)]) for k in range(-window, window + 1))
    lift = VirAutomorphism(sigma, values['gamma'], phi)
    if not preserves_bracket(lift, verify_window):
        raise NotLiftable(f'lift fails re-verification on window {verify_window}')
    logger.debug('lifted A=%s lambda=%s: gamma=%s, phi=%s',
                 sigma.matrix.rows, sigma.scalars, lift.gamma, dict(lift.phi))
    return lift
