# centralext.py

"""
Witt Automorphism Toolkit - Central Extensions File

This file handles finite-dimensional Lie algebras given by exact structure
constants: validation, centre, derived subalgebra, the quotient by a central
subspace Z together with its 2-cocycle, the kernel group K of shear maps
tau_phi = id + phi, and the exact solver that lifts an automorphism of
W = L/Z to automorphisms of L.

Matrices act on column vectors: M[i][j] is the e_i-coefficient of M(e_j).
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction

from errors import DimensionError, InvalidStructureConstants, NotAutomorphism, NotCentral, ParseError
from kernel import LinearSystemBuilder, nullspace, rank, row_reduce, solve_exact, to_scalar

logger = logging.getLogger(__name__)

UNIQUE = 'unique'
FAMILY = 'family'
NONE = 'none'


# --- Vector and matrix helpers ---
def zero_vector(d):
    return (Fraction(0),) * d


def basis_vector(d, i):
    return tuple(Fraction(1 if k == i else 0) for k in range(d))


def add_vectors(u, v, scale=1):
    return tuple(a + scale * b for a, b in zip(u, v))


def identity_matrix(d):
    return tuple(basis_vector(d, i) for i in range(d))


def to_matrix(rows):
    return tuple(tuple(to_scalar(x) for x in row) for row in rows)


def matrix_column(matrix, j):
    return tuple(row[j] for row in matrix)


def matrix_from_columns(columns, num_rows):
    return tuple(tuple(col[i] for col in columns) for i in range(num_rows))


def apply_matrix(matrix, vector):
    return tuple(sum((a * x for a, x in zip(row, vector)), Fraction(0)) for row in matrix)


def is_invertible(matrix):
    return rank(matrix, len(matrix)) == len(matrix)


# --- Algebras ---
@dataclass(frozen=True)
class FdLieAlgebra:
    """
    A finite-dimensional Lie algebra over Q.

    Attributes:
        dim (int): The dimension d.
        table (tuple): table[i][j] is the coordinate vector of [e_i, e_j].
        labels (tuple): Optional basis labels.
    """
    dim: int
    table: tuple
    labels: tuple = ()

    def __post_init__(self):
        table = tuple(tuple(tuple(to_scalar(c) for c in vector) for vector in row)
                      for row in self.table)
        if len(table) != self.dim or any(len(row) != self.dim for row in table) \
                or any(len(vector) != self.dim for row in table for vector in row):
            raise DimensionError(f'structure constant table is not {self.dim}x{self.dim}x{self.dim}')
        labels = tuple(self.labels) or tuple(f'e{i + 1}' for i in range(self.dim))
        if len(labels) != self.dim:
            raise DimensionError(f'{len(labels)} labels for a {self.dim}-dimensional algebra')
        object.__setattr__(self, 'table', table)
        object.__setattr__(self, 'labels', labels)

    @classmethod
    def from_brackets(cls, dim, entries, labels=(), check=True):
        """
        Builds an algebra from (i, j, {k: c}) entries, 0-based.

        Pairs not listed are zero. [e_j, e_i] = -[e_i, e_j] is filled in
        unless (j, i) is listed explicitly, in which case the listed value is
        kept and left for validation to judge.

        Raises:
            InvalidStructureConstants: On an index out of range, or when check is set
                and antisymmetry or Jacobi fails.
        """
        table = [[zero_vector(dim) for _ in range(dim)] for _ in range(dim)]
        explicit = set()
        for i, j, products in entries:
            if not (0 <= i < dim and 0 <= j < dim) or any(not 0 <= k < dim for k in dict(products)):
                raise InvalidStructureConstants(f'bracket index out of range in entry ({i + 1}, {j + 1})')
            vector = [Fraction(0)] * dim
            for k, c in dict(products).items():
                vector[k] += to_scalar(c)
            table[i][j] = tuple(vector)
            explicit.add((i, j))
            if (j, i) not in explicit:
                table[j][i] = tuple(-c for c in vector)
        algebra = cls(dim, tuple(tuple(row) for row in table), tuple(labels))
        if check:
            report = validate(algebra)
            if not report.valid:
                raise InvalidStructureConstants(str(report))
        return algebra

    @classmethod
    def from_document(cls, document, check=True):
        """
        Loads the file format {"dim": d, "labels": [...], "brackets": [[i, j, [[k, "p/q"], ...]], ...]}
        with 1-based indices.
        """
        try:
            dim = int(document['dim'])
            entries = [(int(i) - 1, int(j) - 1, {int(k) - 1: to_scalar(str(c)) for k, c in products})
                       for i, j, products in document.get('brackets', [])]
            labels = tuple(str(label) for label in document.get('labels', ()))
            if labels and len(labels) != dim:
                raise ValueError(f'{len(labels)} labels for dimension {dim}')
        except (KeyError, TypeError, ValueError, ParseError) as exc:
            raise InvalidStructureConstants(f'malformed algebra document: {exc}') from exc
        return cls.from_brackets(dim, entries, labels, check)

    def to_document(self):
        brackets = []
        for i, j in itertools.combinations(range(self.dim), 2):
            products = [[k + 1, str(c)] for k, c in enumerate(self.table[i][j]) if c]
            if products:
                brackets.append([i + 1, j + 1, products])
        return {'dim': self.dim, 'labels': list(self.labels), 'brackets': brackets}

    def bracket(self, u, v):
        """Bilinear bracket of two coordinate vectors."""
        result = [Fraction(0)] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                if not b:
                    continue
                for k, c in enumerate(self.table[i][j]):
                    result[k] += a * b * c
        return tuple(result)


@dataclass(frozen=True)
class ValidationReport:
    """Result of checking antisymmetry and the Jacobi identity (1-based indices)."""
    valid: bool
    kind: str = None
    indices: tuple = None

    def __str__(self):
        if self.valid:
            return 'valid'
        return f'{self.kind} violation at {self.indices}'


def validate(algebra):
    """Checks antisymmetry and Jacobi exactly, reporting the first violation."""
    d = algebra.dim
    # j starts at i so the diagonal check enforces [e_i, e_i] = 0.
    for i in range(d):
        for j in range(i, d):
            if algebra.table[i][j] != tuple(-c for c in algebra.table[j][i]):
                return ValidationReport(False, 'antisymmetry', (i + 1, j + 1))
    # Given antisymmetry, the Jacobi sum only needs checking on distinct triples.
    for i, j, k in itertools.combinations(range(d), 3):
        e = [basis_vector(d, x) for x in (i, j, k)]
        total = zero_vector(d)
        for a, b, c in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
            total = add_vectors(total, algebra.bracket(e[a], algebra.bracket(e[b], e[c])))
        if any(total):
            return ValidationReport(False, 'jacobi', (i + 1, j + 1, k + 1))
    return ValidationReport(True)


# --- Subspaces ---
@dataclass(frozen=True)
class Subspace:
    """
    A subspace of Q^d in reduced row echelon form.

    Attributes:
        ambient_dim (int): d.
        basis (tuple): The reduced rows.
        pivots (tuple): Their pivot columns.
    """
    ambient_dim: int
    basis: tuple = ()
    pivots: tuple = ()

    @classmethod
    def span(cls, ambient_dim, vectors):
        basis, pivots = row_reduce(list(vectors), ambient_dim)
        return cls(ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim)

    @classmethod
    def whole(cls, ambient_dim):
        return cls.span(ambient_dim, identity_matrix(ambient_dim))

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, vector):
        """Coordinates of a vector of the subspace in the echelon basis."""
        return tuple(vector[p] for p in self.pivots)

    def residue(self, vector):
        """vector minus its echelon projection; zero iff the vector lies in the subspace."""
        result = tuple(vector)
        for row, t in zip(self.basis, self.coordinates(vector)):
            result = add_vectors(result, row, -t)
        return result

    def contains(self, vector):
        return not any(self.residue(vector))

    def is_subspace_of(self, other):
        return all(other.contains(v) for v in self.basis)


def center(algebra):
    """Z(L): the vectors x with [x, e_j] = 0 for every j."""
    d = algebra.dim
    # One equation per (j, k): the e_k coordinate of [x, e_j].
    rows = []
    for j in range(d):
        for k in range(d):
            rows.append([algebra.table[i][j][k] for i in range(d)])
    return Subspace.span(d, nullspace(rows, d))


def derived_subalgebra(algebra):
    """[L, L]: the span of all [e_i, e_j]."""
    d = algebra.dim
    return Subspace.span(d, [algebra.table[i][j] for i, j in itertools.combinations(range(d), 2)])


def is_perfect(algebra):
    return derived_subalgebra(algebra).dim == algebra.dim


def image_of_subspace(matrix, subspace):
    return Subspace.span(subspace.ambient_dim, [apply_matrix(matrix, v) for v in subspace.basis])


# --- Quotients ---
@dataclass(frozen=True)
class Quotient:
    """
    W = L / Z with the section spanned by the non-pivot coordinates of Z.

    Attributes:
        algebra (FdLieAlgebra): W in the basis w_a = e_{section[a]} + Z.
        section (tuple): The L-indices s_a of the section.
        central (Subspace): Z.
        cocycle (tuple): (a, b, Z-coordinates of z(w_a, w_b)) for a < b, nonzero only.
    """
    algebra: FdLieAlgebra
    section: tuple
    central: Subspace
    cocycle: tuple = ()

    def split(self, vector):
        """Writes an L vector as s(w) + z; returns (W coordinates, Z coordinates)."""
        z_coords = self.central.coordinates(vector)
        residue = self.central.residue(vector)
        return tuple(residue[s] for s in self.section), z_coords

    def section_vector(self, w_coords):
        result = [Fraction(0)] * self.central.ambient_dim
        for s, c in zip(self.section, w_coords):
            result[s] += c
        return tuple(result)

    def central_vector(self, z_coords):
        result = zero_vector(self.central.ambient_dim)
        for row, t in zip(self.central.basis, z_coords):
            result = add_vectors(result, row, t)
        return result

    def cocycle_at(self, a, b):
        table = {(x, y): z for x, y, z in self.cocycle}
        if (a, b) in table:
            return table[(a, b)]
        if (b, a) in table:
            return tuple(-t for t in table[(b, a)])
        return zero_vector(self.central.dim)


def _check_central(algebra, subspace):
    if subspace.ambient_dim != algebra.dim:
        raise DimensionError('subspace and algebra have different dimensions')
    if not subspace.is_subspace_of(center(algebra)):
        raise NotCentral('Z is not contained in the centre of L')


def quotient_by_central(algebra, subspace):
    """
    The quotient W = L/Z and the cocycle part z(w_1, w_2) of the bracket.

    Raises:
        NotCentral: If Z is not contained in the centre.
    """
    _check_central(algebra, subspace)
    d = algebra.dim
    # The echelon pivots of Z are eliminated, so the other coordinates give a complement.
    section = tuple(j for j in range(d) if j not in subspace.pivots)
    # split() only needs the section and Z, so the table can be filled in afterwards.
    partial = Quotient(FdLieAlgebra(0, (), ()), section, subspace)
    m = len(section)
    table = [[zero_vector(m) for _ in range(m)] for _ in range(m)]
    cocycle = []
    for a in range(m):
        for b in range(m):
            value = algebra.bracket(basis_vector(d, section[a]), basis_vector(d, section[b]))
            table[a][b], z_coords = partial.split(value)
            if a < b and any(z_coords):
                cocycle.append((a, b, z_coords))
    labels = tuple(algebra.labels[s] for s in section)
    quotient = FdLieAlgebra(m, tuple(tuple(row) for row in table), labels)
    return Quotient(quotient, section, subspace, tuple(cocycle))


@dataclass(frozen=True)
class ExtensionConditions:
    """The hypotheses of the unique-lift theorem for (L, Z)."""
    central: bool
    in_derived: bool
    quotient_perfect: bool

    @property
    def unique_lifts(self):
        return self.central and self.in_derived and self.quotient_perfect


def extension_conditions(algebra, subspace):
    central = subspace.is_subspace_of(center(algebra))
    in_derived = subspace.is_subspace_of(derived_subalgebra(algebra))
    perfect = central and is_perfect(quotient_by_central(algebra, subspace).algebra)
    return ExtensionConditions(central, in_derived, perfect)


# --- The kernel K ---
@dataclass(frozen=True)
class KernelElement:
    """
    A shear tau_phi = id + phi o pi with phi: W -> Z vanishing on [W, W].

    Attributes:
        phi (tuple): phi[a][r], the z_r-coordinate of phi(w_a).
        tau (tuple): The d x d matrix of tau_phi on L.
    """
    phi: tuple
    tau: tuple


def _correction_matrix(quotient, phi, zeta=None):
    """The L-matrix of v -> phi(pi(v)) + zeta(z-part of v)."""
    d = quotient.central.ambient_dim
    columns = []
    for j in range(d):
        w_coords, z_coords = quotient.split(basis_vector(d, j))
        image_z = [Fraction(0)] * quotient.central.dim
        for a, c in enumerate(w_coords):
            for r in range(quotient.central.dim):
                image_z[r] += c * phi[a][r]
        if zeta is not None:
            for r in range(quotient.central.dim):
                image_z[r] += sum((zeta[r][q] * t for q, t in enumerate(z_coords)), Fraction(0))
        columns.append(quotient.central_vector(image_z))
    return matrix_from_columns(columns, d)


def extension_kernel(algebra, subspace):
    """
    A basis of K = {tau_phi : phi in Hom(W, Z), phi([W, W]) = 0}.

    Raises:
        NotCentral: If Z is not contained in the centre.
    """
    quotient = quotient_by_central(algebra, subspace)
    w, r = quotient.algebra, subspace.dim
    builder = LinearSystemBuilder([(a, q) for a in range(w.dim) for q in range(r)])
    # phi([w_a, w_b]) = 0 for every a < b, one equation per Z coordinate.
    for a, b in itertools.combinations(range(w.dim), 2):
        for c, u in enumerate(w.table[a][b]):
            for q in range(r):
                if u:
                    builder.add((a, b, q), (c, q), u)
    solution = solve_exact(builder.build())
    d = algebra.dim
    elements = []
    for vector in solution.nullspace:
        phi = tuple(tuple(vector[a * r + q] for q in range(r)) for a in range(w.dim))
        correction = _correction_matrix(quotient, phi)
        tau = tuple(add_vectors(row, correction[i]) for i, row in enumerate(identity_matrix(d)))
        elements.append(KernelElement(phi, tau))
    return tuple(elements)


# --- Lifting automorphisms ---
def preserves_bracket(algebra, matrix):
    """True iff M[e_i, e_j] = [M e_i, M e_j] for every basis pair."""
    d = algebra.dim
    columns = [matrix_column(matrix, j) for j in range(d)]
    # Both sides are antisymmetric, so pairs i < j suffice.
    for i, j in itertools.combinations(range(d), 2):
        if apply_matrix(matrix, algebra.table[i][j]) != algebra.bracket(columns[i], columns[j]):
            return False
    return True


def project_lift(matrix, quotient):
    """psi: the automorphism a + Z -> M(a) + Z of W induced by a lift M."""
    d = quotient.central.ambient_dim
    columns = [quotient.split(apply_matrix(matrix, basis_vector(d, s)))[0] for s in quotient.section]
    return matrix_from_columns(columns, quotient.algebra.dim)


@dataclass(frozen=True)
class LiftSolution:
    """
    All lifts of an automorphism of W to L.

    Attributes:
        classification (str): 'unique', 'family' or 'none'.
        base (tuple | None): One lifted automorphism as a d x d matrix.
        family (tuple): Difference matrices spanning the other lifts (base + sum t_k D_k).
        conditions (ExtensionConditions): The hypotheses checked for (L, Z).
    """
    classification: str
    base: tuple = None
    family: tuple = ()
    conditions: ExtensionConditions = None

    def member(self, params):
        result = self.base
        for t, difference in zip(params, self.family):
            t = to_scalar(t)
            result = tuple(add_vectors(row, diff_row, t) for row, diff_row in zip(result, difference))
        return result


def _split_unknowns(vector, m, r):
    """Unpacks (phi, zeta) from a solution vector ordered phi first, then zeta."""
    phi = tuple(tuple(vector[a * r + q] for q in range(r)) for a in range(m))
    offset = m * r
    zeta = tuple(tuple(vector[offset + q * r + p] for p in range(r)) for q in range(r))
    return phi, zeta


def _lift_matrix(quotient, images, phi, zeta):
    """The L-matrix of s(w) + z -> s(sigma_W w) + phi(w) + zeta(z)."""
    d = quotient.central.ambient_dim
    correction = _correction_matrix(quotient, phi, zeta)
    columns = []
    for j in range(d):
        w_coords, _ = quotient.split(basis_vector(d, j))
        column = matrix_column(correction, j)
        for a, c in enumerate(w_coords):
            column = add_vectors(column, images[a], c)
        columns.append(column)
    return matrix_from_columns(columns, d)


def _check_automorphism(w, sigma_w):
    if len(sigma_w) != w.dim or any(len(row) != w.dim for row in sigma_w):
        raise DimensionError(f'sigma_W must be {w.dim}x{w.dim}')
    if not is_invertible(sigma_w):
        raise NotAutomorphism('sigma_W is singular')
    if not preserves_bracket(w, sigma_w):
        raise NotAutomorphism('sigma_W does not preserve the bracket of W')


def lift_fd_automorphism(algebra, subspace, sigma_w):
    """
    Solves for every lift of sigma_W: s(w_a) -> s(sigma_W w_a) + phi(w_a), z -> zeta(z).

    Args:
        algebra (FdLieAlgebra): L.
        subspace (Subspace): A central subspace Z.
        sigma_w (tuple): The automorphism of W = L/Z as an m x m matrix.

    Returns:
        LiftSolution: Classified as unique, family or none.

    Raises:
        NotCentral: If Z is not central.
        NotAutomorphism: If sigma_W is not an automorphism of W.
    """
    sigma_w = to_matrix(sigma_w)
    quotient = quotient_by_central(algebra, subspace)
    w, r = quotient.algebra, subspace.dim
    _check_automorphism(w, sigma_w)
    conditions = extension_conditions(algebra, subspace)

    images = [quotient.section_vector(matrix_column(sigma_w, a)) for a in range(w.dim)]
    unknowns = [('phi', a, q) for a in range(w.dim) for q in range(r)] + \
               [('zeta', q, p) for q in range(r) for p in range(r)]
    builder = LinearSystemBuilder(unknowns)
    for a, b in itertools.combinations(range(w.dim), 2):
        _, target = quotient.split(algebra.bracket(images[a], images[b]))
        z_coords = quotient.cocycle_at(a, b)
        for q in range(r):
            for c, u in enumerate(w.table[a][b]):
                if u:
                    builder.add((a, b, q), ('phi', c, q), u)
            for p, t in enumerate(z_coords):
                if t:
                    builder.add((a, b, q), ('zeta', q, p), t)
            builder.add_rhs((a, b, q), target[q])
    solution = solve_exact(builder.build())
    if not solution.consistent:
        logger.debug('no lift: constraints inconsistent')
        return LiftSolution(NONE, conditions=conditions)

    # Prefer the lift that agrees with phi = 0, zeta = id on the free unknowns.
    preferred = [Fraction(1) if key[0] == 'zeta' and key[1] == key[2] else Fraction(0)
                 for key in unknowns]
    free = [j for j in range(len(unknowns)) if j not in solution.pivots]
    params = [preferred[j] for j in free]
    candidates = [params] + [[p + k for p in params] for k in range(1, r + 2)] if free else [params]

    base = None
    for params in candidates:
        vector = solution.combine(params)
        phi, zeta = _split_unknowns(vector, w.dim, r)
        if r == 0 or is_invertible(zeta):
            base = _lift_matrix(quotient, images, phi, zeta)
            break
    if base is None:
        logger.debug('no invertible lift among %d candidates', len(candidates))
        return LiftSolution(NONE, conditions=conditions)

    family = tuple(_correction_matrix(quotient, *_split_unknowns(vector, w.dim, r))
                   for vector in solution.nullspace)
    lift = LiftSolution(UNIQUE if not family else FAMILY, base, family, conditions)
    for k in range(len(family)):
        member = lift.member([1 if i == k else 0 for i in range(len(family))])
        if not preserves_bracket(algebra, member):
            raise NotAutomorphism(f'family direction {k + 1} does not preserve the bracket')
    if not preserves_bracket(algebra, base):
        raise NotAutomorphism('the lifted map does not preserve the bracket')
    logger.debug('lift classification %s, family dimension %d', lift.classification, len(family))
    return lift


# --- Sample algebras ---
SAMPLE_DOCUMENTS = {
    'abelian': {'dim': 3, 'labels': ['a', 'b', 'c'], 'brackets': []},
    'heisenberg': {'dim': 3, 'labels': ['e', 'f', 'z'],
                   'brackets': [[1, 2, [[3, '1']]]]},
    'sl2': {'dim': 3, 'labels': ['e', 'h', 'f'],
            'brackets': [[2, 1, [[1, '2']]], [2, 3, [[3, '-2']]], [1, 3, [[2, '1']]]]},
    'sl2+center': {'dim': 4, 'labels': ['e', 'h', 'f', 'z'],
                   'brackets': [[2, 1, [[1, '2']]], [2, 3, [[3, '-2']]], [1, 3, [[2, '1']]]]},
    'two-dim': {'dim': 2, 'labels': ['e', 'f'], 'brackets': [[1, 2, [[2, '1']]]]},
}


def sample_algebra(name):
    """One of the bundled algebras: abelian, heisenberg, sl2, sl2+center, two-dim."""
    try:
        return FdLieAlgebra.from_document(SAMPLE_DOCUMENTS[name])
    except KeyError:
        raise KeyError(f'unknown sample algebra {name!r}; choose from {sorted(SAMPLE_DOCUMENTS)}') from None
