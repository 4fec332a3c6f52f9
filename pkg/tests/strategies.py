# tests/strategies.py

"""Hypothesis strategies for exact scalars, Witt elements and automorphisms."""

from fractions import Fraction

from hypothesis import strategies as st

from autgrp import Automorphism
from kernel import IntMatrix
from witt import WittElement

dims = st.integers(min_value=1, max_value=3)

scalars = st.builds(Fraction, st.integers(min_value=-6, max_value=6), st.integers(min_value=1, max_value=4))
nonzero_scalars = scalars.filter(bool)


@st.composite
def weights(draw, n, bound=5):
    return tuple(draw(st.lists(st.integers(min_value=-bound, max_value=bound), min_size=n, max_size=n)))


@st.composite
def cartan_vectors(draw, n, nonzero=False):
    vector = draw(st.lists(scalars, min_size=n, max_size=n))
    if nonzero and not any(vector):
        vector[draw(st.integers(min_value=0, max_value=n - 1))] = draw(nonzero_scalars)
    return tuple(vector)


@st.composite
def witt_elements(draw, n, max_terms=4, bound=5):
    """Sums of at most max_terms basis terms c x^alpha H_j with alpha in [-bound, bound]^n."""
    mapping = {}
    for _ in range(draw(st.integers(min_value=0, max_value=max_terms))):
        alpha = draw(weights(n, bound))
        j = draw(st.integers(min_value=0, max_value=n - 1))
        mapping.setdefault(alpha, [Fraction(0)] * n)[j] += draw(scalars)
    return WittElement.from_mapping(n, mapping)


@st.composite
def homogeneous_elements(draw, n, bound=3, nonzero_weight=True):
    """x^alpha H' with H' != 0."""
    alpha = draw(weights(n, bound))
    if nonzero_weight and not any(alpha):
        alpha = tuple(1 if k == 0 else 0 for k in range(n))
    return WittElement.from_mapping(n, {alpha: draw(cartan_vectors(n, nonzero=True))})


@st.composite
def unimodular_matrices(draw, n, steps=6):
    """Products of shears, transpositions and sign changes applied to the identity."""
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(draw(st.integers(min_value=0, max_value=steps))):
        i = draw(st.integers(min_value=0, max_value=n - 1))
        move = draw(st.sampled_from(['shear', 'swap', 'negate']))
        if move == 'negate' or n == 1:
            rows[i] = [-x for x in rows[i]]
            continue
        k = draw(st.integers(min_value=0, max_value=n - 1).filter(lambda k: k != i))
        if move == 'swap':
            rows[i], rows[k] = rows[k], rows[i]
        else:
            factor = draw(st.integers(min_value=-2, max_value=2))
            rows[i] = [a + factor * b for a, b in zip(rows[i], rows[k])]
    return IntMatrix(tuple(tuple(row) for row in rows))


@st.composite
def automorphisms(draw, n):
    matrix = draw(unimodular_matrices(n))
    return Automorphism(matrix, tuple(draw(st.lists(nonzero_scalars, min_size=n, max_size=n))))


@st.composite
def w1_automorphisms(draw):
    """(epsilon, lambda) with epsilon = +-1 and small lambda, the automorphisms of W_1."""
    epsilon = draw(st.sampled_from([1, -1]))
    lam = draw(st.builds(Fraction, st.integers(min_value=-3, max_value=3).filter(bool),
                         st.integers(min_value=1, max_value=3)))
    return Automorphism(IntMatrix(((epsilon,),)), (lam,))
