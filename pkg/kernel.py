# kernel.py

"""
Witt Automorphism Toolkit - Kernel File

This file holds the exact arithmetic every other module builds on:
rational scalars, integer multi-indices, integer matrices, sparse Laurent
polynomials and exact Gaussian elimination over the rationals.
Nothing in the toolkit uses floating point.
"""

import logging
import os
import re
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

import sympy

from errors import DimensionError, NotAUnit, NotUnimodular, ParseError

logger = logging.getLogger(__name__)

# An exact rational, always in lowest terms with positive denominator.
Scalar = Fraction
# An integer multi-index alpha in Z^n.
MIndex = tuple

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


# --- Configuration ---
def env_int(name, default):
    """
    Reads an integer setting from the environment.

    A value that is not an integer is logged and replaced by the default.
    """
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning('Ignoring %s=%r: not an integer, using %d', name, raw, default)
        return default


# --- Scalars and multi-indices ---
def to_scalar(value):
    """
    Converts an int, Fraction or "p/q" / "p" literal into an exact Scalar.

    Args:
        value (int | Fraction | str): The value to convert.

    Returns:
        Fraction: The exact rational value.

    Raises:
        ParseError: If a string is not a rational literal.
        TypeError: For floats and other inexact types.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError('booleans are not scalars')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        match = _RATIONAL_RE.match(value)
        if not match:
            raise ParseError(f'not a rational literal: {value!r}', 0)
        denominator = int(match.group(2)) if match.group(2) else 1
        if denominator == 0:
            raise ParseError('zero denominator', value.index('/'))
        return Fraction(int(match.group(1)), denominator)
    raise TypeError(f'inexact or unsupported scalar type: {type(value).__name__}')


def format_scalar(value):
    """Prints a Scalar as "p" or "p/q" (q only when needed)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def check_dimension(*dims):
    """Raises DimensionError unless all given dimensions agree."""
    if len(set(dims)) > 1:
        raise DimensionError(f'dimension mismatch: {sorted(set(dims))}')
    return dims[0] if dims else None


def zero_index(n):
    return (0,) * n


def unit_index(n, i):
    """The standard basis vector e_i of Z^n (0-based i)."""
    return tuple(1 if k == i else 0 for k in range(n))


def add_index(alpha, beta):
    check_dimension(len(alpha), len(beta))
    return tuple(a + b for a, b in zip(alpha, beta))


def scale_index(k, alpha):
    return tuple(k * a for a in alpha)


def mindex_pairing(h_coeffs, alpha):
    """
    Evaluates the pairing (H, alpha) = sum_i lambda_i alpha_i.

    Args:
        h_coeffs (Sequence): Coefficients (lambda_1, ..., lambda_n) of H in H_1..H_n.
        alpha (MIndex): The multi-index.

    Returns:
        Fraction: The exact value of the pairing.

    Raises:
        DimensionError: If the two vectors have different lengths.
    """
    check_dimension(len(h_coeffs), len(alpha))
    return sum((to_scalar(l) * a for l, a in zip(h_coeffs, alpha)), Fraction(0))


def max_norm(alpha):
    return max((abs(a) for a in alpha), default=0)


# --- Integer matrices ---
@dataclass(frozen=True)
class IntMatrix:
    """
    A square matrix of integers, stored row-major.

    Attributes:
        rows (tuple): The rows as tuples of ints.
    """
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        # Every row must have as many entries as there are rows.
        if any(len(row) != len(rows) for row in rows):
            raise DimensionError('integer matrix must be square')
        object.__setattr__(self, 'rows', rows)

    @classmethod
    def identity(cls, n):
        return cls(tuple(unit_index(n, i) for i in range(n)))

    @classmethod
    def from_columns(cls, columns):
        columns = [tuple(c) for c in columns]
        return cls(tuple(zip(*columns)) if columns else ())

    @property
    def size(self):
        return len(self.rows)

    def column(self, j):
        return tuple(row[j] for row in self.rows)

    def transpose(self):
        return IntMatrix(tuple(zip(*self.rows)) if self.rows else ())

    def to_sympy(self):
        return sympy.Matrix(self.size, self.size, [x for row in self.rows for x in row])

    def det(self):
        if self.size == 0:
            return 1
        return int(self.to_sympy().det())

    def is_identity(self):
        return self == IntMatrix.identity(self.size)

    def apply(self, alpha):
        """The exponent map alpha -> A alpha."""
        check_dimension(self.size, len(alpha))
        return tuple(sum(a * x for a, x in zip(row, alpha)) for row in self.rows)

    def __matmul__(self, other):
        check_dimension(self.size, other.size)
        columns = [self.apply(other.column(j)) for j in range(other.size)]
        return IntMatrix.from_columns(columns)

    def __repr__(self):
        return f'IntMatrix({[list(row) for row in self.rows]})'


def unimodular_inverse(matrix):
    """
    Inverts an integer matrix over Z.

    Args:
        matrix (IntMatrix): A square integer matrix.

    Returns:
        IntMatrix: A^-1, with integer entries.

    Raises:
        NotUnimodular: If det(A) is not +1 or -1.
    """
    det = matrix.det()
    if det not in (1, -1):
        raise NotUnimodular(f'det = {det}')
    if matrix.size == 0:
        return matrix
    # For det = +-1 the inverse is det * adj(A), which stays integral.
    adjugate = matrix.to_sympy().adjugate() * det
    return IntMatrix(tuple(tuple(int(adjugate[i, j]) for j in range(matrix.size))
                           for i in range(matrix.size)))


# --- Laurent polynomials ---
@dataclass(frozen=True)
class LaurentPolynomial:
    """
    A finite sum of c_alpha x^alpha in L_n = K[x_1^{+-1}, ..., x_n^{+-1}].

    Attributes:
        dim (int): The number of variables n.
        terms (tuple): Sorted (alpha, coefficient) pairs with nonzero coefficients.
    """
    dim: int
    terms: tuple = ()

    @classmethod
    def from_mapping(cls, dim, mapping):
        terms = []
        for alpha, coeff in mapping.items():
            check_dimension(dim, len(alpha))
            coeff = to_scalar(coeff)
            if coeff:
                terms.append((tuple(alpha), coeff))
        return cls(dim, tuple(sorted(terms)))

    @classmethod
    def monomial(cls, dim, alpha, coeff=1):
        return cls.from_mapping(dim, {tuple(alpha): coeff})

    @classmethod
    def constant(cls, dim, value):
        return cls.monomial(dim, zero_index(dim), value)

    @classmethod
    def variable(cls, dim, i):
        """The generator x_i (0-based i)."""
        return cls.monomial(dim, unit_index(dim, i))

    def as_dict(self):
        return dict(self.terms)

    def support(self):
        return {alpha for alpha, _ in self.terms}

    def coefficient(self, alpha):
        return self.as_dict().get(tuple(alpha), Fraction(0))

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def unit_data(self):
        """
        Splits a unit c x^alpha of L_n into (alpha, c).

        Raises:
            NotAUnit: If the polynomial is zero or has more than one term.
        """
        if not self.is_monomial():
            raise NotAUnit(f'{len(self.terms)} terms; units of L_n are scalar monomials')
        return self.terms[0]

    def _combine(self, other, sign):
        check_dimension(self.dim, other.dim)
        result = defaultdict(Fraction, self.as_dict())
        for alpha, coeff in other.terms:
            result[alpha] += sign * coeff
        return LaurentPolynomial.from_mapping(self.dim, result)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return LaurentPolynomial(self.dim, tuple((a, -c) for a, c in self.terms))

    def __mul__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return LaurentPolynomial.from_mapping(
                self.dim, {a: c * to_scalar(other) for a, c in self.terms})
        check_dimension(self.dim, other.dim)
        result = defaultdict(Fraction)
        for alpha, c in self.terms:
            for beta, d in other.terms:
                result[add_index(alpha, beta)] += c * d
        return LaurentPolynomial.from_mapping(self.dim, result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            # Only units have inverses in L_n.
            alpha, coeff = self.unit_data()
            return LaurentPolynomial.monomial(self.dim, scale_index(exponent, alpha),
                                              coeff ** exponent)
        # Repeated multiplication; exponents here stay small.
        result = LaurentPolynomial.constant(self.dim, 1)
        for _ in range(exponent):
            result = result * self
        return result


# --- Exact linear algebra ---
@dataclass(frozen=True)
class LinearSystem:
    """
    A linear system M x = b over the rationals, stored as sparse rows.

    Attributes:
        num_unknowns (int): The number of columns of M.
        rows (tuple): One tuple of (column, coefficient) pairs per equation.
        rhs (tuple): The right-hand side, one Scalar per equation.
    """
    num_unknowns: int
    rows: tuple = ()
    rhs: tuple = ()

    def __post_init__(self):
        if len(self.rows) != len(self.rhs):
            raise DimensionError('row count and right-hand side length differ')

    @classmethod
    def from_dense(cls, matrix, rhs, num_unknowns=None):
        matrix = [list(row) for row in matrix]
        if num_unknowns is None:
            num_unknowns = len(matrix[0]) if matrix else 0
        for row in matrix:
            check_dimension(num_unknowns, len(row))
        rows = tuple(tuple((j, to_scalar(x)) for j, x in enumerate(row) if x) for row in matrix)
        return cls(num_unknowns, rows, tuple(to_scalar(x) for x in rhs))

    def residual(self, vector):
        """M x - b for a candidate vector x."""
        return tuple(sum((c * vector[j] for j, c in row), Fraction(0)) - b
                     for row, b in zip(self.rows, self.rhs))


class LinearSystemBuilder:
    """Collects equations whose rows and unknowns are addressed by arbitrary keys."""

    def __init__(self, unknowns=()):
        self.unknowns = {}
        self._rows = {}
        self._rhs = defaultdict(Fraction)
        for key in unknowns:
            self.unknown(key)

    def unknown(self, key):
        """Returns the column index of an unknown, registering it on first use."""
        if key not in self.unknowns:
            self.unknowns[key] = len(self.unknowns)
        return self.unknowns[key]

    def add(self, row_key, unknown_key, coeff):
        row = self._rows.setdefault(row_key, defaultdict(Fraction))
        row[self.unknown(unknown_key)] += to_scalar(coeff)

    def add_rhs(self, row_key, value):
        self._rows.setdefault(row_key, defaultdict(Fraction))
        self._rhs[row_key] += to_scalar(value)

    def build(self):
        keys = list(self._rows)
        rows = tuple(tuple(sorted((j, c) for j, c in self._rows[k].items() if c)) for k in keys)
        return LinearSystem(len(self.unknowns), rows, tuple(self._rhs[k] for k in keys))


@dataclass(frozen=True)
class Solution:
    """
    The exact solution set of a LinearSystem.

    Attributes:
        consistent (bool): False when the system has no solution.
        particular (tuple | None): A solution with every free unknown set to 0.
        nullspace (tuple): Basis of the homogeneous solutions, one vector per free unknown.
        pivots (tuple): Pivot columns of the reduced row echelon form.
    """
    consistent: bool
    particular: tuple = None
    nullspace: tuple = ()
    pivots: tuple = ()

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def is_unique(self):
        return self.consistent and not self.nullspace

    def combine(self, params):
        """particular + sum_k params[k] * nullspace[k]."""
        vector = list(self.particular)
        for t, basis_vector in zip(params, self.nullspace):
            for j, x in enumerate(basis_vector):
                vector[j] += to_scalar(t) * x
        return tuple(vector)


def _eliminate(rows, num_cols):
    """
    Incremental sparse Gauss-Jordan elimination.

    Returns (pivot_rows, pivot_rhs, occurs) or None when inconsistent.
    pivot_rows[p] is the fully reduced row with a 1 at column p; occurs[c]
    is the set of pivot columns whose row has a nonzero entry at column c.
    """
    pivot_rows = {}
    pivot_rhs = {}
    occurs = defaultdict(set)
    for row, rhs in rows:
        row = {j: Fraction(c) for j, c in row if c}
        rhs = Fraction(rhs)
        # Clear every existing pivot column from the incoming row.
        for p in [j for j in row if j in pivot_rows]:
            factor = row[p]
            for k, v in pivot_rows[p].items():
                value = row.get(k, 0) - factor * v
                if value:
                    row[k] = value
                else:
                    row.pop(k, None)
            rhs -= factor * pivot_rhs[p]
        # A zero row with a nonzero right-hand side reads 0 = b.
        if not row:
            if rhs:
                return None
            continue
        pivot = min(row)
        scale = 1 / row[pivot]
        row = {k: v * scale for k, v in row.items()}
        rhs *= scale
        # Back-substitute the new pivot into earlier rows so they stay fully reduced.
        for q in occurs.pop(pivot, set()):
            target = pivot_rows[q]
            factor = target.pop(pivot)
            for k, v in row.items():
                if k == pivot:
                    continue
                value = target.get(k, 0) - factor * v
                if value:
                    target[k] = value
                    occurs[k].add(q)
                else:
                    target.pop(k, None)
                    occurs[k].discard(q)
            pivot_rhs[q] -= factor * rhs
        pivot_rows[pivot] = row
        pivot_rhs[pivot] = rhs
        for k in row:
            if k != pivot:
                occurs[k].add(pivot)
    return pivot_rows, pivot_rhs, occurs


def solve_exact(system):
    """
    Solves a LinearSystem exactly.

    The reduced row echelon form is unique, so the pivots are the first
    nonzero columns in column order regardless of the order equations are
    processed in.

    Args:
        system (LinearSystem): The system to solve.

    Returns:
        Solution: Inconsistency flag, particular solution and nullspace basis.
    """
    n = system.num_unknowns
    reduced = _eliminate(zip(system.rows, system.rhs), n)
    if reduced is None:
        logger.debug('system with %d unknowns, %d equations: inconsistent', n, len(system.rows))
        return Solution(consistent=False)
    pivot_rows, pivot_rhs, occurs = reduced
    particular = [Fraction(0)] * n
    for p, value in pivot_rhs.items():
        particular[p] = value
    nullspace = []
    # One nullspace vector per free column: 1 there, minus the pivot rows' entries at the pivots.
    for free in (j for j in range(n) if j not in pivot_rows):
        vector = [Fraction(0)] * n
        vector[free] = Fraction(1)
        for q in occurs.get(free, ()):
            vector[q] = -pivot_rows[q][free]
        nullspace.append(tuple(vector))
    logger.debug('system with %d unknowns, %d equations: rank %d, nullity %d',
                 n, len(system.rows), len(pivot_rows), len(nullspace))
    return Solution(True, tuple(particular), tuple(nullspace), tuple(sorted(pivot_rows)))


def row_reduce(vectors, num_cols):
    """
    Reduced row echelon form of a list of vectors.

    Returns:
        tuple: (rows, pivots), the nonzero reduced rows ordered by pivot column.
    """
    rows = []
    for vector in vectors:
        check_dimension(num_cols, len(vector))
        rows.append((tuple((j, to_scalar(x)) for j, x in enumerate(vector) if x), 0))
    pivot_rows, _, _ = _eliminate(rows, num_cols)
    pivots = tuple(sorted(pivot_rows))
    reduced = tuple(tuple(pivot_rows[p].get(j, Fraction(0)) for j in range(num_cols))
                    for p in pivots)
    return reduced, pivots


def rank(vectors, num_cols):
    return len(row_reduce(vectors, num_cols)[1])


def nullspace(matrix, num_cols):
    """Basis of {x : M x = 0} for a dense matrix given as rows."""
    system = LinearSystem.from_dense(matrix, [0] * len(matrix), num_cols)
    return solve_exact(system).nullspace
