# witt.py

"""
Witt Automorphism Toolkit - Witt Algebra File

This file defines elements of the Witt algebra W_n = Der(L_n) in the
H-basis (x^alpha H_j, with H_j = x_j d_j) and in the partial-derivative
basis (x^beta d_i), the Lie bracket in both bases, the Z^n-grading and its
coarsenings by a weight vector, supports and Newton polygons, local
finiteness, and linear solving over finite windows of weights.
"""

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

from sympy.geometry import Point, Polygon, Segment, convex_hull

from errors import LocallyFinite, NotHomogeneous, UnsupportedDimension, ZeroElement
from kernel import (LaurentPolynomial, LinearSystemBuilder, add_index, check_dimension,
                    max_norm, mindex_pairing, row_reduce, scale_index, solve_exact,
                    to_scalar, unit_index, zero_index)

logger = logging.getLogger(__name__)

PLUS = 'plus'
MINUS = 'minus'


# --- Element types ---
@dataclass(frozen=True)
class _WeightedSum:
    """
    A finite sum over weights alpha of x^alpha times a coefficient vector.

    Attributes:
        dim (int): The number of variables n.
        terms (tuple): (alpha, coefficient vector) pairs, sorted by alpha,
                       with no all-zero vector stored.
    """
    dim: int
    terms: tuple = ()

    @classmethod
    def from_mapping(cls, dim, mapping):
        """Builds the canonical sparse form from a dict alpha -> vector."""
        terms = []
        for alpha, vector in mapping.items():
            alpha = tuple(alpha)
            check_dimension(dim, len(alpha), len(vector))
            vector = tuple(to_scalar(c) for c in vector)
            if any(vector):
                terms.append((alpha, vector))
        return cls(dim, tuple(sorted(terms)))

    @classmethod
    def zero(cls, dim):
        return cls(dim, ())

    @classmethod
    def term(cls, dim, alpha, j, coeff=1):
        """The single basis term coeff * x^alpha G_j (0-based j)."""
        vector = [0] * dim
        vector[j] = coeff
        return cls.from_mapping(dim, {tuple(alpha): vector})

    def as_dict(self):
        return dict(self.terms)

    def coefficients(self, alpha):
        return self.as_dict().get(tuple(alpha), (Fraction(0),) * self.dim)

    def basis_terms(self):
        """Yields (alpha, j, coefficient) for every nonzero coefficient."""
        for alpha, vector in self.terms:
            for j, coeff in enumerate(vector):
                if coeff:
                    yield alpha, j, coeff

    def is_zero(self):
        return not self.terms

    def _combine(self, other, sign):
        if type(other) is not type(self):
            return NotImplemented
        check_dimension(self.dim, other.dim)
        result = {alpha: list(vector) for alpha, vector in self.terms}
        for alpha, vector in other.terms:
            current = result.setdefault(alpha, [Fraction(0)] * self.dim)
            for j, coeff in enumerate(vector):
                current[j] += sign * coeff
        return type(self).from_mapping(self.dim, result)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)(self.dim, tuple((a, tuple(-c for c in v)) for a, v in self.terms))

    def __mul__(self, scalar):
        scalar = to_scalar(scalar)
        return type(self).from_mapping(
            self.dim, {a: [scalar * c for c in v] for a, v in self.terms})

    __rmul__ = __mul__


@dataclass(frozen=True)
class WittElement(_WeightedSum):
    """An element sum_alpha sum_j c_{alpha,j} x^alpha H_j of W_n."""

    @classmethod
    def cartan(cls, dim, coeffs):
        """The element sum_j coeffs[j] H_j of the Cartan subalgebra H_n."""
        return cls.from_mapping(dim, {zero_index(dim): coeffs})

    @classmethod
    def partial(cls, dim, i):
        """The partial derivative d_i written in the H-basis, x^{-e_i} H_i."""
        return cls.term(dim, scale_index(-1, unit_index(dim, i)), i)


@dataclass(frozen=True)
class DerElement(_WeightedSum):
    """An element sum_beta sum_i d_{beta,i} x^beta d_i of W_n."""

    @classmethod
    def partial(cls, dim, i):
        return cls.term(dim, zero_index(dim), i)


@dataclass(frozen=True)
class Window:
    """
    An axis-aligned box {alpha : lo_i <= alpha_i <= hi_i} of weights.

    Attributes:
        lo (tuple): Lower bounds, one per coordinate.
        hi (tuple): Upper bounds, one per coordinate.
    """
    lo: tuple
    hi: tuple

    def __post_init__(self):
        check_dimension(len(self.lo), len(self.hi))

    @classmethod
    def cube(cls, dim, lo, hi):
        return cls((lo,) * dim, (hi,) * dim)

    @property
    def dim(self):
        return len(self.lo)

    def points(self):
        ranges = [range(l, h + 1) for l, h in zip(self.lo, self.hi)]
        return [tuple(p) for p in itertools.product(*ranges)]

    def __contains__(self, alpha):
        return all(l <= a <= h for l, a, h in zip(self.lo, alpha, self.hi))


# --- Brackets ---
def bracket(a, b):
    """
    The Lie bracket of W_n in the H-basis.

    Uses [x^alpha U, x^beta V] = x^{alpha+beta}((U, beta) V - (V, alpha) U)
    for U, V in the Cartan subalgebra, extended bilinearly.

    Raises:
        DimensionError: If the elements have different dimensions.
    """
    check_dimension(a.dim, b.dim)
    result = defaultdict(lambda: [Fraction(0)] * a.dim)
    for alpha, u in a.terms:
        for beta, v in b.terms:
            u_beta = mindex_pairing(u, beta)
            v_alpha = mindex_pairing(v, alpha)
            # Both pairings vanish: the pair contributes nothing, not even a zero entry.
            if not u_beta and not v_alpha:
                continue
            target = result[add_index(alpha, beta)]
            for j in range(a.dim):
                target[j] += u_beta * v[j] - v_alpha * u[j]
    return WittElement.from_mapping(a.dim, result)


def to_der_basis(a):
    """Rewrites x^alpha H_j as x^{alpha+e_j} d_j."""
    result = defaultdict(lambda: [Fraction(0)] * a.dim)
    for alpha, j, coeff in a.basis_terms():
        result[add_index(alpha, unit_index(a.dim, j))][j] += coeff
    return DerElement.from_mapping(a.dim, result)


def from_der_basis(d):
    """Rewrites x^beta d_i as x^{beta-e_i} H_i."""
    result = defaultdict(lambda: [Fraction(0)] * d.dim)
    for beta, i, coeff in d.basis_terms():
        result[add_index(beta, scale_index(-1, unit_index(d.dim, i)))][i] += coeff
    return WittElement.from_mapping(d.dim, result)


def bracket_der_oracle(a, b):
    """
    The bracket of W_n computed in the d-basis by the Leibniz rule,
    [f d_i, g d_j] = f (d_i g) d_j - g (d_j f) d_i.

    Independent of `bracket`; used to cross-check it.
    """
    check_dimension(a.dim, b.dim)
    n = a.dim
    result = defaultdict(lambda: [Fraction(0)] * n)
    for beta, i, c in a.basis_terms():
        for gamma, j, d in b.basis_terms():
            weight = add_index(beta, gamma)
            # d_i lowers the i-th exponent of g by one.
            if gamma[i]:
                result[add_index(weight, scale_index(-1, unit_index(n, i)))][j] += c * d * gamma[i]
            if beta[j]:
                result[add_index(weight, scale_index(-1, unit_index(n, j)))][i] -= c * d * beta[j]
    return DerElement.from_mapping(n, result)


def derivation_apply(d, f):
    """Applies a derivation sum f_i d_i to a Laurent polynomial."""
    check_dimension(d.dim, f.dim)
    result = defaultdict(Fraction)
    for beta, i, c in d.basis_terms():
        for gamma, coeff in f.terms:
            if gamma[i]:
                exponent = add_index(add_index(beta, gamma), scale_index(-1, unit_index(d.dim, i)))
                result[exponent] += c * coeff * gamma[i]
    return LaurentPolynomial.from_mapping(d.dim, result)


# --- Gradings ---
def support(a):
    """The set of weights alpha with a nonzero coefficient vector."""
    return frozenset(alpha for alpha, _ in a.terms)


def is_homogeneous(a):
    return len(a.terms) == 1


def weight_of(a):
    """The weight of a homogeneous element."""
    if not is_homogeneous(a):
        raise NotHomogeneous(f'support has {len(a.terms)} points')
    return a.terms[0][0]


def newton_polygon_vertices(a):
    """
    The vertices of the convex hull of the support of a.

    Raises:
        UnsupportedDimension: For n >= 3.
    """
    if a.dim >= 3:
        raise UnsupportedDimension(f'Newton polygon hull is implemented for n <= 2, got n = {a.dim}')
    points = sorted(support(a))
    # In one variable the hull of the support is the interval between its extremes.
    if len(points) <= 1 or a.dim == 1:
        return frozenset({points[0], points[-1]}) if points else frozenset()
    # sympy collapses degenerate hulls to a Point or a Segment.
    hull = convex_hull(*(Point(*p) for p in points))
    if isinstance(hull, Point):
        vertices = [hull]
    elif isinstance(hull, Segment):
        vertices = list(hull.points)
    elif isinstance(hull, Polygon):
        vertices = list(hull.vertices)
    else:
        raise TypeError(f'unexpected hull type {type(hull).__name__}')
    return frozenset(tuple(int(c) for c in v.args) for v in vertices)


def degree(alpha, weight):
    """The (Z, lambda)-degree (lambda, alpha) of a weight."""
    return int(mindex_pairing(weight, alpha))


def graded_components(a, weight):
    """
    Splits a into its (Z, lambda)-homogeneous components.

    Args:
        a (WittElement): The element to split.
        weight (tuple): The integer weight vector lambda.

    Returns:
        dict: degree -> WittElement, in increasing degree; the values sum to a.
    """
    check_dimension(a.dim, len(weight))
    pieces = defaultdict(dict)
    for alpha, vector in a.terms:
        pieces[degree(alpha, weight)][alpha] = vector
    return {deg: WittElement.from_mapping(a.dim, pieces[deg]) for deg in sorted(pieces)}


def leading_term(a, weight, side=PLUS):
    """
    The leading (side='plus') or least (side='minus') term of a.

    Raises:
        ZeroElement: If a is zero.
    """
    if a.is_zero():
        raise ZeroElement('the zero element has no leading term')
    if side not in (PLUS, MINUS):
        raise ValueError(f'side must be {PLUS!r} or {MINUS!r}')
    components = graded_components(a, weight)
    key = max(components) if side == PLUS else min(components)
    return components[key]


# --- Local finiteness ---
def is_locally_finite(a):
    """True iff a lies in the Cartan subalgebra, i.e. support(a) is within {0}."""
    return support(a) <= {zero_index(a.dim)}


def weight_action(h, w):
    """[h, w] for h in the Cartan subalgebra: scales each x^alpha part by (h, alpha)."""
    check_dimension(h.dim, w.dim)
    if not is_locally_finite(h):
        raise ValueError('weight_action needs an element of the Cartan subalgebra')
    h_coeffs = h.coefficients(zero_index(h.dim))
    return WittElement.from_mapping(
        w.dim, {alpha: [mindex_pairing(h_coeffs, alpha) * c for c in v] for alpha, v in w.terms})


def lf_iterates(a, b, m):
    """
    The sequence ad(a)^1(b), ..., ad(a)^m(b), by repeated bracketing.

    Raises:
        NotHomogeneous: If a does not have exactly one support point.
    """
    if not is_homogeneous(a):
        raise NotHomogeneous('lf_iterates needs a homogeneous x^alpha H element')
    if m < 1:
        raise ValueError('m must be at least 1')
    iterates = []
    current = b
    for _ in range(m):
        current = bracket(a, current)
        iterates.append(current)
    return iterates


def non_finiteness_probe(a):
    """
    A probe b whose ad(a)-orbit has unbounded support, for a = x^alpha H'
    with alpha != 0.

    If (H', alpha) != 0 the probe is x^{2 alpha} H'. Otherwise it is
    x^{e_k} H' / (H', e_k) for the first k with (H', e_k) != 0, so that
    the pairing of H' with the probe's weight is 1.
    """
    alpha = weight_of(a)
    if not any(alpha):
        raise LocallyFinite('elements of the Cartan subalgebra are locally finite')
    h_coeffs = a.coefficients(alpha)
    if mindex_pairing(h_coeffs, alpha):
        return WittElement.from_mapping(a.dim, {scale_index(2, alpha): h_coeffs})
    # H' != 0 here, since a is nonzero and homogeneous.
    k = next(i for i, c in enumerate(h_coeffs) if c)
    return WittElement.from_mapping(a.dim, {unit_index(a.dim, k): [c / h_coeffs[k] for c in h_coeffs]})


def support_norms(elements):
    """Max-norm of the support of each element (None for zero)."""
    return [max((max_norm(alpha) for alpha in support(e)), default=None) for e in elements]


# --- Window solving ---
@dataclass(frozen=True)
class BracketSolution:
    """
    Solutions w, supported in a window, of a linear equation in W_n.

    Attributes:
        particular (WittElement | None): One solution, or None if there is none.
        nullspace (tuple): Basis of the homogeneous solutions.
    """
    particular: WittElement = None
    nullspace: tuple = ()

    @property
    def solvable(self):
        return self.particular is not None

    def general(self, params):
        """particular + sum_k params[k] * nullspace[k]."""
        result = self.particular
        for t, basis_element in zip(params, self.nullspace):
            result = result + to_scalar(t) * basis_element
        return result


def _window_basis(window):
    return [(alpha, j) for alpha in window.points() for j in range(window.dim)]


def _vector_to_element(dim, keys, vector):
    mapping = defaultdict(lambda: [Fraction(0)] * dim)
    for (alpha, j), value in zip(keys, vector):
        if value:
            mapping[alpha][j] = value
    return WittElement.from_mapping(dim, mapping)


def _add_image(builder, row_prefix, unknown_key, image):
    for gamma, k, coeff in image.basis_terms():
        builder.add((row_prefix, gamma, k), unknown_key, coeff)


def solve_bracket_equation(b, target, window):
    """
    Solves [w, b] = target for w supported in a finite window.

    Args:
        b (WittElement): The fixed right argument.
        target (WittElement): The required value of the bracket.
        window (Window): The box of weights w may use.

    Returns:
        BracketSolution: A particular solution and nullspace basis, or no solution.
    """
    check_dimension(b.dim, target.dim, window.dim)
    keys = _window_basis(window)
    builder = LinearSystemBuilder(keys)
    for alpha, j in keys:
        _add_image(builder, 0, (alpha, j), bracket(WittElement.term(b.dim, alpha, j), b))
    # One equation per (weight, H_k) coordinate of [w, b].
    for gamma, k, coeff in target.basis_terms():
        builder.add_rhs((0, gamma, k), coeff)
    solution = solve_exact(builder.build())
    if not solution.consistent:
        logger.debug('no solution of [w, b] = target in window %s..%s', window.lo, window.hi)
        return BracketSolution()
    return BracketSolution(
        _vector_to_element(b.dim, keys, solution.particular),
        tuple(_vector_to_element(b.dim, keys, v) for v in solution.nullspace))


def centralizer_window(generators, window):
    """
    Basis of {w supported in window : [w, g] = 0 for every generator g}.
    """
    for g in generators:
        check_dimension(g.dim, window.dim)
    keys = _window_basis(window)
    builder = LinearSystemBuilder(keys)
    for index, g in enumerate(generators):
        for alpha, j in keys:
            _add_image(builder, index, (alpha, j), bracket(WittElement.term(window.dim, alpha, j), g))
    solution = solve_exact(builder.build())
    return tuple(_vector_to_element(window.dim, keys, v) for v in solution.nullspace)


def normalizer_window(generators, window):
    """
    Basis of {w supported in window : [w, g] lies in span(generators) for every g}.
    """
    for g in generators:
        check_dimension(g.dim, window.dim)
    keys = _window_basis(window)
    builder = LinearSystemBuilder(keys)
    for index, g in enumerate(generators):
        for alpha, j in keys:
            _add_image(builder, index, (alpha, j), bracket(WittElement.term(window.dim, alpha, j), g))
        # [w, g] - sum_h t_{g,h} h = 0
        for h_index, h in enumerate(generators):
            _add_image(builder, index, ('t', index, h_index), -h)
    solution = solve_exact(builder.build())
    # Drop the auxiliary t coordinates; distinct solutions may share a w.
    projected = [v[:len(keys)] for v in solution.nullspace]
    reduced, _ = row_reduce(projected, len(keys))
    return tuple(_vector_to_element(window.dim, keys, v) for v in reduced)
