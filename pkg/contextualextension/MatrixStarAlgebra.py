'''
Module for class MatrixStarAlgebra, a unital *-closed span of d×d complex matrices, and for the
commutative algebras built from it: Gel'fand spectra, context categories and Boolean blocks of
projection lattices
'''

from dataclasses import dataclass, field
import functools
import itertools
import logging

import networkx as nx
import numpy as np
import scipy.linalg

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.Errors import DomainError, InputError, InternalConsistencyError, SizeCapExceededError
from contextualextension.FiniteCategory import poset_category
from contextualextension.ValidationReport import ValidationReport

__all__ = [
    'PAULI_I',
    'PAULI_X',
    'PAULI_Y',
    'PAULI_Z',
    'PAULI_MATRICES',
    'pauli_string',
    'as_square_matrix',
    'is_self_adjoint',
    'is_projection',
    'operator_less_or_equal',
    'commutator_norm',
    'rank_one_projection',
    'MatrixStarAlgebra',
    'Character',
    'ContextCategory',
    'BooleanBlock',
    'generate_algebra',
    'is_commutative',
    'gelfand_spectrum',
    'context_category',
    'context_category_from_groups',
    'boolean_blocks',
    'check_boolean_block'
]

logger = logging.getLogger(__name__)

PAULI_I = np.eye(2, dtype = complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype = complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype = complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype = complex)
PAULI_MATRICES = {'i': PAULI_I, 'x': PAULI_X, 'y': PAULI_Y, 'z': PAULI_Z}

# elements per batch of candidate products
_BATCH_ENTRIES = 1 << 22

def pauli_string(labels):
    '''
    Provides the tensor product of Pauli matrices named by a string such as 'zi' or 'xx'
    '''

    return functools.reduce(np.kron, [PAULI_MATRICES[label] for label in labels.lower()])

def as_square_matrix(matrix, dimension = None):
    '''
    Converts an array-like to a complex square matrix

    Exceptions raised:
        InputError if the matrix is not square or its dimension differs from the requested one
    '''

    matrix = np.asarray(matrix, dtype = complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise InputError(f'matrix of shape {matrix.shape} is not square')
    if dimension is not None and matrix.shape[0] != dimension:
        raise InputError(f'matrix of dimension {matrix.shape[0]} does not match dimension {dimension}')
    return matrix

def is_self_adjoint(matrix, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Provides True iff the operator norm of matrix - matrix† is at most tolerance

    Keyword arguments:
        matrix: np.ndarray -- a square matrix
        tolerance: float -- the allowed deviation

    Return values:
        a bool

    Side effects:
        none

    Exceptions raised:
        none

    Restrictions on when this function can be called:
        matrix must be square
    '''

    return float(np.linalg.norm(matrix - matrix.conj().T, 2)) <= tolerance

def is_projection(matrix, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Provides True iff matrix is self-adjoint and idempotent within tolerance, in operator norm
    '''

    return is_self_adjoint(matrix, tolerance) and float(np.linalg.norm(matrix @ matrix - matrix, 2)) <= tolerance

def operator_less_or_equal(smaller, larger, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Provides True iff larger - smaller is positive semidefinite within tolerance

    Keyword arguments:
        smaller: np.ndarray -- a self-adjoint matrix
        larger: np.ndarray -- a self-adjoint matrix of the same shape
        tolerance: float -- the most negative eigenvalue of larger - smaller that still counts as nonnegative

    Return values:
        a bool

    Side effects:
        none

    Exceptions raised:
        none

    Restrictions on when this function can be called:
        the difference is symmetrized before its eigenvalues are taken, so only the self-adjoint parts are compared
    '''

    difference = larger - smaller
    difference = (difference + difference.conj().T) / 2
    return float(np.min(np.linalg.eigvalsh(difference))) >= -tolerance

def commutator_norm(a, b):
    '''
    Provides the operator norm of ab - ba
    '''

    return float(np.linalg.norm(a @ b - b @ a, 2))

def rank_one_projection(vector):
    '''
    Provides the projection onto the line spanned by a vector

    Keyword arguments:
        vector: array-like -- a nonzero vector, normalized here

    Return values:
        the matrix |v⟩⟨v| with v = vector / ‖vector‖

    Side effects:
        none

    Exceptions raised:
        none

    Restrictions on when this function can be called:
        vector must be nonzero
    '''

    vector = np.asarray(vector, dtype = complex)
    vector = vector / np.linalg.norm(vector)
    return np.outer(vector, vector.conj())

def _rank_threshold(tolerance):
    return max(1e-7, 1e3 * tolerance)

def _orthonormal_rows(vectors, tolerance):
    vectors = np.atleast_2d(np.asarray(vectors, dtype = complex))
    if vectors.shape[0] == 0:
        return vectors
    norms = np.linalg.norm(vectors, axis = 1)
    vectors = vectors[norms > tolerance] / norms[norms > tolerance, None]
    if vectors.shape[0] == 0:
        return vectors
    _, singular_values, right_vectors = np.linalg.svd(vectors, full_matrices = False)
    return right_vectors[singular_values > _rank_threshold(tolerance)]

def _new_orthonormal_rows(rows, candidates, tolerance):
    '''
    Provides orthonormal rows spanning the part of the candidates orthogonal to rows
    '''

    candidates = np.atleast_2d(candidates)
    norms = np.linalg.norm(candidates, axis = 1)
    candidates = candidates[norms > tolerance] / norms[norms > tolerance, None]
    if candidates.shape[0] == 0:
        return candidates
    residuals = candidates - (candidates @ rows.conj().T) @ rows
    residual_norms = np.linalg.norm(residuals, axis = 1)
    residuals = residuals[residual_norms > _rank_threshold(tolerance)]
    if residuals.shape[0] == 0:
        return residuals
    new_rows = _orthonormal_rows(residuals, tolerance)
    # one more pass against rows keeps the union orthonormal to machine precision
    new_rows = new_rows - (new_rows @ rows.conj().T) @ rows
    return _orthonormal_rows(new_rows, tolerance)

class MatrixStarAlgebra:
    '''
    A linear span of d×d complex matrices, stored as an orthonormal basis for the Frobenius inner product.
    An instance is a *-algebra when its span contains the identity and is closed under adjoint and product;
    check_star_closure verifies this.

    Instance variables:
        dim: int -- the ambient matrix dimension d
        tolerance: float -- tolerance of span membership
        name: str -- a display name
        _rows: np.ndarray -- orthonormal rows of shape (dimension, d*d), the row-major flattened basis

    Public methods:
        __init__
        from_rows
        full_matrix_algebra
        dimension
        basis
        identity
        residual_norm
        contains
        contains_algebra
        span_equal
        coordinates
        matrix_from_coordinates
        intersection
        hermitian_basis
        check_star_closure
    '''

    def __init__(self, spanning_matrices, dim = None, tolerance = DEFAULT_CONFIGURATION.tolerance, name = None):
        '''
        Initializes a MatrixStarAlgebra object spanned by the given matrices

        Keyword arguments:
            spanning_matrices: iterable -- d×d matrices; they need not be linearly independent
            dim: int -- the ambient dimension, required when no matrix is given
            tolerance: float -- tolerance of span membership
            name: str -- a display name

        Return values:
            none

        Side effects:
            Orthonormalizes the spanning matrices with a rank-revealing decomposition

        Exceptions raised:
            InputError if a matrix is not square or the dimensions disagree
        '''

        matrices = [as_square_matrix(matrix, dim) for matrix in spanning_matrices]
        if dim is None:
            if not matrices:
                raise InputError('the ambient dimension is required for an empty span')
            dim = matrices[0].shape[0]
        for matrix in matrices:
            if matrix.shape[0] != dim:
                raise InputError(f'matrix of dimension {matrix.shape[0]} does not match dimension {dim}')
        self.dim = dim
        self.tolerance = tolerance
        self.name = name
        if matrices:
            self._rows = _orthonormal_rows(np.array([matrix.reshape(-1) for matrix in matrices]), tolerance)
        else:
            self._rows = np.zeros((0, dim * dim), dtype = complex)
        self._spectrum = None

    @classmethod
    def from_rows(cls, rows, dim, tolerance = DEFAULT_CONFIGURATION.tolerance, name = None):
        '''
        Provides the algebra spanned by given orthonormal rows without orthonormalizing them again

        Keyword arguments:
            rows: array-like -- orthonormal rows of shape (dimension, dim*dim), each a row-major flattened matrix
            dim: int -- the matrix size d
            tolerance: float -- numeric tolerance of later checks
            name: str -- an optional name

        Return values:
            a MatrixStarAlgebra

        Side effects:
            none

        Exceptions raised:
            none

        Restrictions on when this method can be called:
            the rows must already be orthonormal and span a unital *-closed algebra
        '''

        algebra = cls([], dim = dim, tolerance = tolerance, name = name)
        algebra._rows = np.asarray(rows, dtype = complex)
        return algebra

    @classmethod
    def full_matrix_algebra(cls, dim, tolerance = DEFAULT_CONFIGURATION.tolerance, name = None):
        '''
        Provides M_d, spanned by the matrix units
        '''

        return cls.from_rows(np.eye(dim * dim, dtype = complex), dim, tolerance, name = name or f'M{dim}')

    @property
    def dimension(self):
        return self._rows.shape[0]

    @property
    def rows(self):
        return self._rows

    @property
    def basis(self):
        return self._rows.reshape(self.dimension, self.dim, self.dim)

    @property
    def identity(self):
        return np.eye(self.dim, dtype = complex)

    def residual_norm(self, matrix):
        '''
        Provides the Frobenius norm of the part of matrix orthogonal to this span
        '''

        vector = as_square_matrix(matrix, self.dim).reshape(-1)
        residual = vector - (self._rows.conj() @ vector) @ self._rows
        return float(np.linalg.norm(residual))

    def contains(self, matrix):
        return self.residual_norm(matrix) <= self.tolerance * max(1.0, float(np.linalg.norm(matrix)))

    def contains_algebra(self, other):
        if other.dim != self.dim:
            return False
        if other.dimension == 0:
            return True
        residuals = other.rows - (other.rows @ self._rows.conj().T) @ self._rows
        return float(np.max(np.linalg.norm(residuals, axis = 1))) <= self.tolerance

    def span_equal(self, other):
        return self.dimension == other.dimension and self.contains_algebra(other) and other.contains_algebra(self)

    def coordinates(self, matrix):
        '''
        Provides the coordinates of matrix in the orthonormal basis of this span

        Exceptions raised:
            DomainError if matrix lies outside this span
        '''

        if not self.contains(matrix):
            raise DomainError(f'matrix lies outside the span of {self.name or "the algebra"}')
        return self._rows.conj() @ as_square_matrix(matrix, self.dim).reshape(-1)

    def matrix_from_coordinates(self, coordinates):
        return (np.asarray(coordinates) @ self._rows).reshape(self.dim, self.dim)

    def intersection(self, other, name = None):
        '''
        Provides the algebra spanned by the intersection of this span with another one
        '''

        if other.dim != self.dim:
            raise InputError('algebras of different ambient dimensions do not intersect')
        if self.dimension == 0 or other.dimension == 0:
            return MatrixStarAlgebra([], dim = self.dim, tolerance = self.tolerance, name = name)
        stacked = np.hstack([self._rows.T, -other.rows.T])
        kernel = scipy.linalg.null_space(stacked, rcond = _rank_threshold(self.tolerance))
        vectors = (self._rows.T @ kernel[:self.dimension]).T
        return MatrixStarAlgebra.from_rows(_orthonormal_rows(vectors, self.tolerance), self.dim, self.tolerance, name = name)

    def hermitian_basis(self):
        '''
        Provides self-adjoint matrices whose real span contains this algebra's self-adjoint part
        '''

        hermitian = []
        for element in self.basis:
            for candidate in ((element + element.conj().T) / 2, (element - element.conj().T) / 2j):
                if np.linalg.norm(candidate) > self.tolerance:
                    hermitian.append(candidate)
        return hermitian

    def check_star_closure(self):
        '''
        Checks the *-algebra invariants: the identity lies in the span and the span is closed under adjoint and product

        Return values:
            a ValidationReport, empty iff this span is a unital *-algebra
        '''

        report = ValidationReport(f'algebra {self.name}')
        if not self.contains(self.identity):
            report.add('staralg.unital', self.name, 'identity lies outside the span')
        basis = self.basis
        for i, element in enumerate(basis):
            if not self.contains(element.conj().T):
                report.add('staralg.adjoint_closure', f'basis[{i}]', 'adjoint lies outside the span')
            for j, other in enumerate(basis):
                if not self.contains(element @ other):
                    report.add('staralg.product_closure', f'(basis[{i}], basis[{j}])', 'product lies outside the span')
        return report

    def __repr__(self):
        return f'MatrixStarAlgebra(name = {self.name!r}, dim = {self.dim}, dimension = {self.dimension})'

def generate_algebra(generators, dim, configuration = DEFAULT_CONFIGURATION, name = None):
    '''
    Generates the smallest unital *-algebra containing a list of matrices

    The span starts from the identity, the generators and their adjoints; every round multiplies the newly found
    directions on the right by the generating letters and keeps the part outside the current span, until no new
    direction appears. Words in the letters span the generated algebra, so this reaches its closure.

    Keyword arguments:
        generators: iterable -- d×d matrices
        dim: int -- the ambient dimension d
        configuration: Configuration -- supplies tolerance and dimension_cap

    Return values:
        a MatrixStarAlgebra

    Exceptions raised:
        InputError if a generator is not square or not d×d
        SizeCapExceededError if d exceeds configuration.dimension_cap

    Restrictions on when this function can be called:
        none
    '''

    if dim > configuration.dimension_cap:
        raise SizeCapExceededError('matrix dimension', dim, configuration.dimension_cap)
    tolerance = configuration.tolerance
    generators = [as_square_matrix(generator, dim) for generator in generators]
    letters = generators + [generator.conj().T for generator in generators]
    identity = np.eye(dim, dtype = complex)
    rows = _orthonormal_rows(np.array([matrix.reshape(-1) for matrix in [identity] + letters]), tolerance)
    letter_rows = _orthonormal_rows(np.array([matrix.reshape(-1) for matrix in letters]), tolerance) if letters else np.zeros((0, dim * dim), dtype = complex)
    letter_matrices = letter_rows.reshape(-1, dim, dim)
    frontier = rows
    rounds = 0
    while frontier.shape[0] > 0 and rows.shape[0] < dim * dim and letter_matrices.shape[0] > 0:
        rounds += 1
        frontier_matrices = frontier.reshape(-1, dim, dim)
        chunk = max(1, _BATCH_ENTRIES // (letter_matrices.shape[0] * dim * dim))
        found = []
        for start in range(0, frontier_matrices.shape[0], chunk):
            products = np.einsum('aij,bjk->abik', frontier_matrices[start:start + chunk], letter_matrices).reshape(-1, dim * dim)
            new_rows = _new_orthonormal_rows(rows, products, tolerance)
            if new_rows.shape[0] > 0:
                rows = np.vstack([rows, new_rows])
                found.append(new_rows)
        frontier = np.vstack(found) if found else np.zeros((0, dim * dim), dtype = complex)
    logger.debug('generated algebra of dimension %d in %d rounds', rows.shape[0], rounds)
    return MatrixStarAlgebra.from_rows(rows, dim, tolerance, name = name)

def is_commutative(a):
    '''
    Provides True iff all pairwise commutators of the basis of an algebra vanish within its tolerance
    '''

    basis = a.basis
    for i in range(a.dimension):
        products_left = np.einsum('ij,bjk->bik', basis[i], basis[i + 1:])
        products_right = np.einsum('bij,jk->bik', basis[i + 1:], basis[i])
        if products_left.shape[0] and float(np.max(np.linalg.norm(products_left - products_right, axis = (1, 2)))) > a.tolerance:
            return False
    return True

@dataclass(frozen = True, eq = False)
class Character:
    '''
    A point of the Gel'fand spectrum of a commutative algebra: a minimal projection together with the eigenvalue of every basis element on its range.

    Instance variables:
        projection: np.ndarray -- the minimal projection
        values: tuple -- value of the character on each basis element of the algebra
    '''

    projection: np.ndarray
    values: tuple = field(default = ())

    @property
    def rank(self):
        return int(round(float(np.real(np.trace(self.projection)))))

    def evaluate(self, matrix):
        '''
        Provides the eigenvalue of matrix on the range of this character's projection; meaningful for matrices of the algebra
        '''

        return complex(np.trace(self.projection @ matrix) / np.trace(self.projection))

def _cluster_spectral_projections(hermitian, restriction = None):
    '''
    Provides the spectral projections of a self-adjoint matrix, optionally compressed to the range of an isometry
    '''

    if restriction is not None:
        hermitian = restriction.conj().T @ hermitian @ restriction
    eigenvalues, eigenvectors = np.linalg.eigh((hermitian + hermitian.conj().T) / 2)
    if restriction is not None:
        eigenvectors = restriction @ eigenvectors
    gap = 1e-6 * max(1.0, float(np.max(np.abs(eigenvalues))))
    boundaries = [0] + [i + 1 for i in range(len(eigenvalues) - 1) if eigenvalues[i + 1] - eigenvalues[i] > gap] + [len(eigenvalues)]
    return [eigenvectors[:, start:stop] for start, stop in zip(boundaries[:-1], boundaries[1:])]

def _range_isometry(projection):
    eigenvalues, eigenvectors = np.linalg.eigh(projection)
    return eigenvectors[:, eigenvalues > 0.5]

def _character_order(projection):
    return tuple(-np.round(projection.real.ravel(), 8)) + tuple(-np.round(projection.imag.ravel(), 8))

def _minimal_projections_are_valid(v, isometries):
    if len(isometries) != v.dimension:
        return False
    return all(v.contains(isometry @ isometry.conj().T) for isometry in isometries)

def gelfand_spectrum(v, configuration = DEFAULT_CONFIGURATION):
    '''
    Computes the Gel'fand spectrum of a commutative algebra as its minimal projections with eigenvalue functionals

    A random self-adjoint combination of the basis splits the joint eigenspaces; the combination is redrawn when
    its eigenspaces are not the minimal projections of the algebra, and after configuration.diagonalization_retries
    attempts the joint eigenspaces are refined exactly, one basis element at a time. Characters are returned in a
    canonical order that does not depend on the random draws.

    Keyword arguments:
        v: MatrixStarAlgebra -- a commutative algebra
        configuration: Configuration -- supplies seed and diagonalization_retries

    Return values:
        a list of Character objects, one per minimal projection

    Exceptions raised:
        DomainError if the algebra is not commutative
        InternalConsistencyError if the refinement does not produce one projection per dimension

    Restrictions on when this function can be called:
        the algebra must contain the identity
    '''

    if v._spectrum is not None:
        return v._spectrum
    if not is_commutative(v):
        raise DomainError(f'algebra {v.name} is not commutative')
    hermitian_basis = v.hermitian_basis()
    random_number_generator = np.random.default_rng(configuration.seed)
    isometries = None
    for attempt in range(configuration.diagonalization_retries):
        coefficients = random_number_generator.standard_normal(len(hermitian_basis))
        combination = sum((coefficient * element for coefficient, element in zip(coefficients, hermitian_basis)), np.zeros((v.dim, v.dim), dtype = complex))
        candidate = _cluster_spectral_projections(combination)
        if _minimal_projections_are_valid(v, candidate):
            isometries = candidate
            break
        logger.debug('random combination %d left a degenerate eigenspace in %s; retrying', attempt, v.name)
    if isometries is None:
        logger.debug('refining the joint eigenspaces of %s exactly', v.name)
        isometries = [np.eye(v.dim, dtype = complex)]
        for element in hermitian_basis:
            isometries = [piece for isometry in isometries for piece in _cluster_spectral_projections(element, isometry)]
        if not _minimal_projections_are_valid(v, isometries):
            raise InternalConsistencyError(f'joint eigenspaces of {v.name} do not match its dimension {v.dimension}')
    projections = sorted((isometry @ isometry.conj().T for isometry in isometries), key = _character_order)
    spectrum = []
    for projection in projections:
        trace = np.trace(projection)
        values = tuple(complex(np.trace(projection @ element) / trace) for element in v.basis)
        spectrum.append(Character(projection, values))
    v._spectrum = spectrum
    return spectrum

class ContextCategory:
    '''
    A finite family of commutative subalgebras of an ambient algebra ordered by span containment.

    Instance variables:
        ambient: MatrixStarAlgebra -- the ambient algebra
        contexts: tuple -- the commutative MatrixStarAlgebra objects
        labels: tuple -- a unique label per context
        generators: tuple -- per context, the seed observables (or basis) it was generated from
        order: frozenset -- pairs (i, j) with contexts[i] strictly contained in contexts[j]

    Public methods:
        __init__
        index
        context
        is_included
        inclusions
        covering_inclusions
        minimum
        to_fin_category
        check
    '''

    def __init__(self, ambient, contexts, labels, generators):
        self.ambient = ambient
        self.contexts = tuple(contexts)
        self.labels = tuple(labels)
        self.generators = tuple(generators)
        if len(set(self.labels)) != len(self.labels):
            raise InputError('context labels must be unique')
        self.order = frozenset(
            (i, j)
            for i, small in enumerate(self.contexts)
            for j, large in enumerate(self.contexts)
            if i != j and large.contains_algebra(small)
        )

    def __len__(self):
        return len(self.contexts)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f'unknown context {label!r}') from None

    def context(self, label):
        return self.contexts[self.index(label)]

    def is_included(self, i, j):
        return i == j or (i, j) in self.order

    def inclusions(self):
        return sorted(self.order)

    def covering_inclusions(self):
        '''
        Provides the inclusions (i, j) with no context strictly between contexts[i] and contexts[j]
        '''

        return [
            (i, j) for i, j in sorted(self.order)
            if not any((i, k) in self.order and (k, j) in self.order for k in range(len(self.contexts)))
        ]

    @property
    def minimum(self):
        for i in range(len(self.contexts)):
            if all(self.is_included(i, j) for j in range(len(self.contexts))):
                return i
        return None

    def to_fin_category(self):
        '''
        Provides the poset category of the contexts, with one morphism V<=V' per inclusion
        '''

        return poset_category(self.labels, lambda a, b: (self.labels.index(a), self.labels.index(b)) in self.order, name = 'V')

    def check(self):
        '''
        Checks that the contexts are commutative, the order is a partial order and span{I} is a global minimum
        '''

        report = ValidationReport('context category')
        for label, context in zip(self.labels, self.contexts):
            if not is_commutative(context):
                report.add('staralg.context_commutative', label, 'context is not commutative')
            if not self.ambient.contains_algebra(context):
                report.add('staralg.context_in_ambient', label, 'context is not contained in the ambient algebra')
        for i, j in self.order:
            if (j, i) in self.order:
                report.add('staralg.partial_order', f'({self.labels[i]}, {self.labels[j]})', 'two distinct contexts include each other')
            for k in range(len(self.contexts)):
                if (j, k) in self.order and i != k and (i, k) not in self.order:
                    report.add('staralg.partial_order', f'({self.labels[i]}, {self.labels[j]}, {self.labels[k]})', 'inclusion is not transitive')
        minimum = self.minimum
        if minimum is None or self.contexts[minimum].dimension != 1:
            report.add('staralg.scalar_minimum', 'span{I}', 'the scalars are not a global minimum')
        return report

    def __repr__(self):
        return f'ContextCategory(contexts = {list(self.labels)!r})'

def _named_matrices(matrices, prefix):
    if isinstance(matrices, dict):
        return list(matrices.keys()), list(matrices.values())
    matrices = list(matrices)
    return [f'{prefix}{i}' for i in range(len(matrices))], matrices

def _close_under_intersections(contexts, labels, generators, dim, configuration):
    contexts = list(contexts)
    labels = list(labels)
    generators = list(generators)
    scalars = MatrixStarAlgebra([np.eye(dim)], dim = dim, tolerance = configuration.tolerance, name = 'scalars')
    checked = set()
    changed = True
    while changed:
        changed = False
        for i, j in itertools.combinations(range(len(contexts)), 2):
            if (i, j) in checked:
                continue
            checked.add((i, j))
            meet = contexts[i].intersection(contexts[j])
            if meet.dimension <= 1 or any(meet.span_equal(context) for context in contexts):
                continue
            meet.name = f'{labels[i]}&{labels[j]}'
            contexts.append(meet)
            labels.append(meet.name)
            generators.append(list(meet.basis))
            changed = True
    if not any(context.span_equal(scalars) for context in contexts):
        contexts.append(scalars)
        labels.append('scalars')
        generators.append([np.eye(dim, dtype = complex)])
    return contexts, labels, generators

def context_category(ambient, seeds, configuration = DEFAULT_CONFIGURATION):
    '''
    Builds the context category generated by seed observables

    The maximal cliques of the commutation graph of the seeds each generate a maximal context; pairwise intersections
    of contexts are added until no new one appears, and span{I} is always present.

    Keyword arguments:
        ambient: MatrixStarAlgebra -- the ambient algebra
        seeds: list or dict -- self-adjoint matrices of the ambient algebra, optionally keyed by name
        configuration: Configuration -- supplies tolerance, seed and dimension_cap

    Return values:
        a ContextCategory

    Exceptions raised:
        InputError if a seed has the wrong shape
        DomainError if a seed is not self-adjoint or lies outside the ambient span

    Restrictions on when this function can be called:
        none
    '''

    names, matrices = _named_matrices(seeds, 's')
    matrices = [as_square_matrix(matrix, ambient.dim) for matrix in matrices]
    for name, matrix in zip(names, matrices):
        if not is_self_adjoint(matrix, configuration.tolerance):
            raise DomainError(f'seed {name} is not self-adjoint')
        if not ambient.contains(matrix):
            raise DomainError(f'seed {name} lies outside the ambient algebra')
    commutation_graph = nx.Graph()
    commutation_graph.add_nodes_from(range(len(matrices)))
    for i, j in itertools.combinations(range(len(matrices)), 2):
        if commutator_norm(matrices[i], matrices[j]) <= configuration.tolerance:
            commutation_graph.add_edge(i, j)
    cliques = sorted(sorted(clique) for clique in nx.find_cliques(commutation_graph)) if matrices else []
    logger.debug('commutation graph of %d seeds has %d maximal cliques', len(matrices), len(cliques))
    contexts = []
    labels = []
    generators = []
    for clique in cliques:
        label = '+'.join(names[i] for i in clique)
        contexts.append(generate_algebra([matrices[i] for i in clique], ambient.dim, configuration, name = label))
        labels.append(label)
        generators.append([matrices[i] for i in clique])
    contexts, labels, generators = _close_under_intersections(contexts, labels, generators, ambient.dim, configuration)
    return ContextCategory(ambient, contexts, labels, generators)

def context_category_from_groups(ambient, groups, configuration = DEFAULT_CONFIGURATION, labels = None):
    '''
    Builds the context category whose maximal contexts are generated by given groups of commuting matrices, e.g. the projections of one basis of a ray family

    Exceptions raised:
        DomainError if a group does not generate a commutative algebra or lies outside the ambient algebra
    '''

    groups = [[as_square_matrix(matrix, ambient.dim) for matrix in group] for group in groups]
    labels = list(labels) if labels is not None else [f'B{i}' for i in range(len(groups))]
    contexts = []
    for label, group in zip(labels, groups):
        context = generate_algebra(group, ambient.dim, configuration, name = label)
        if not is_commutative(context):
            raise DomainError(f'group {label} does not generate a commutative algebra')
        if not ambient.contains_algebra(context):
            raise DomainError(f'group {label} lies outside the ambient algebra')
        contexts.append(context)
    contexts, labels, generators = _close_under_intersections(contexts, labels, groups, ambient.dim, configuration)
    return ContextCategory(ambient, contexts, labels, generators)

@dataclass(eq = False)
class BooleanBlock:
    '''
    A finite Boolean algebra of pairwise-commuting projections.

    Instance variables:
        generators: tuple -- indices of the input projections that generate the block
        atoms: list -- the nonzero minimal projections of the block
        elements: list -- all sums of subsets of atoms, from 0 to I
    '''

    generators: tuple
    atoms: list
    elements: list

    @property
    def size(self):
        return len(self.elements)

    def contains(self, projection, tolerance = DEFAULT_CONFIGURATION.tolerance):
        return any(float(np.linalg.norm(projection - element, 2)) <= tolerance for element in self.elements)

def boolean_blocks(projections, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the Boolean blocks generated by the maximal pairwise-commuting subsets of a list of projections

    Keyword arguments:
        projections: list -- projection matrices of one dimension
        configuration: Configuration -- supplies tolerance

    Return values:
        a list of BooleanBlock objects, one per maximal clique of the commutation graph

    Exceptions raised:
        DomainError if an input is not idempotent and self-adjoint
        SizeCapExceededError if a block would have more than 2**16 elements
    '''

    projections = [as_square_matrix(projection) for projection in projections]
    for i, projection in enumerate(projections):
        if not is_projection(projection, configuration.tolerance):
            raise DomainError(f'input {i} is not a projection')
    if not projections:
        return []
    dim = projections[0].shape[0]
    identity = np.eye(dim, dtype = complex)
    commutation_graph = nx.Graph()
    commutation_graph.add_nodes_from(range(len(projections)))
    for i, j in itertools.combinations(range(len(projections)), 2):
        if commutator_norm(projections[i], projections[j]) <= configuration.tolerance:
            commutation_graph.add_edge(i, j)
    blocks = []
    for clique in sorted(sorted(clique) for clique in nx.find_cliques(commutation_graph)):
        atoms = []
        for choice in itertools.product((True, False), repeat = len(clique)):
            atom = identity
            for i, keep in zip(clique, choice):
                atom = atom @ (projections[i] if keep else identity - projections[i])
            if float(np.linalg.norm(atom, 2)) > configuration.tolerance:
                atoms.append(atom)
        if len(atoms) > 16:
            raise SizeCapExceededError('Boolean block', 2 ** len(atoms), 2 ** 16)
        elements = [
            sum((atoms[k] for k in range(len(atoms)) if mask >> k & 1), np.zeros((dim, dim), dtype = complex))
            for mask in range(2 ** len(atoms))
        ]
        blocks.append(BooleanBlock(tuple(clique), atoms, elements))
    return blocks

def check_boolean_block(block, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Checks that the elements of a block pairwise commute, are closed under complement and meet, and form a distributive lattice
    '''

    report = ValidationReport(f'Boolean block {block.generators}')
    elements = block.elements
    identity = np.eye(elements[0].shape[0], dtype = complex)
    join = lambda p, q: p + q - p @ q
    for i, p in enumerate(elements):
        if not block.contains(identity - p, tolerance):
            report.add('staralg.block_complement', i, 'complement lies outside the block')
        for j, q in enumerate(elements):
            if commutator_norm(p, q) > tolerance:
                report.add('staralg.block_commutes', (i, j), 'elements do not commute')
            elif not block.contains(p @ q, tolerance):
                report.add('staralg.block_meet', (i, j), 'meet lies outside the block')
    # distributivity over all triples is exhaustive up to 64 elements, over atoms beyond that
    candidates = elements if len(elements) <= 64 else block.atoms
    for p, q, r in itertools.product(candidates, repeat = 3):
        if float(np.linalg.norm(p @ join(q, r) - join(p @ q, p @ r), 2)) > tolerance:
            report.add('staralg.block_distributive', 'triple', 'meet does not distribute over join')
            break
    return report
