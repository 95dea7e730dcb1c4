'''
Module for class TruncatedFock, the bosonic Fock space over the polyhedron space of a finite gauge group truncated
at a total occupation, with smeared field operators, Weyl elements, their relation defects, and the second
quantization and face coarse-graining maps between copy and face counts
'''

from dataclasses import dataclass
import itertools
import logging
import math

import numpy as np
import pandas as pd
import scipy.linalg

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.Errors import DomainError, InputError, SizeCapExceededError
from contextualextension.FiniteCategory import FROM_APEX, Cone, Diagram, FinCategory, LinearMaps, check_cone
from contextualextension.ValidationReport import ValidationReport

__all__ = [
    'PolyhedronSpace',
    'TestFunction',
    'TruncatedFock',
    'FieldOperator',
    'WeylElement',
    'FaceCoarseGraining',
    'inner_product',
    'field_operator',
    'ccr_defect',
    'weyl_element',
    'vacuum_expectation',
    'weyl_relation_defect',
    'weyl_commutator_defect',
    'is_gft_context',
    'check_vacuum_uniqueness',
    'weyl_defect_sweep',
    'second_quantization_cone',
    'face_coarse_grain',
    'check_face_functoriality'
]

logger = logging.getLogger(__name__)

@dataclass(frozen = True)
class PolyhedronSpace:
    '''
    The single-polyhedron Hilbert space L²(Z_m^n) with normalized Haar measure.

    Instance variables:
        group_order: int -- the order m of the cyclic gauge group
        faces: int -- the number n of faces
    '''

    group_order: int = DEFAULT_CONFIGURATION.group_order
    faces: int = DEFAULT_CONFIGURATION.faces

    def __post_init__(self):
        if self.group_order < 1 or self.faces < 1:
            raise InputError('group order and number of faces must be positive')

    @property
    def dimension(self):
        return self.group_order ** self.faces

    @property
    def weight(self):
        return 1.0 / self.dimension

    def elements(self):
        return list(itertools.product(range(self.group_order), repeat = self.faces))

    def index(self, element):
        return int(np.ravel_multi_index(tuple(element), (self.group_order,) * self.faces))

class TestFunction:
    '''
    A complex function on the group tuples of a number of copies of a polyhedron space, stored as one value per tuple.

    Instance variables:
        values: np.ndarray -- copies * D values, copy by copy
        space: PolyhedronSpace -- the polyhedron space of one copy
        copies: int -- the number of copies

    Public methods:
        __init__
        delta
        constant
        padded
        __add__
        __mul__
    '''

    __test__ = False

    def __init__(self, values, space, copies = 1):
        values = np.asarray(values, dtype = complex).reshape(-1)
        if values.shape[0] != copies * space.dimension:
            raise InputError(f'test function has {values.shape[0]} values, expected {copies * space.dimension}')
        self.values = values
        self.space = space
        self.copies = copies

    @classmethod
    def delta(cls, space, element, copy = 0, copies = 1):
        values = np.zeros(copies * space.dimension, dtype = complex)
        values[copy * space.dimension + space.index(element)] = 1
        return cls(values, space, copies)

    @classmethod
    def constant(cls, space, value = 1.0, copies = 1):
        return cls(np.full(copies * space.dimension, value, dtype = complex), space, copies)

    def padded(self, copies):
        '''
        Provides this function on more copies, vanishing on the new ones
        '''

        if copies < self.copies:
            raise DomainError(f'cannot pad {self.copies} copies down to {copies}')
        values = np.zeros(copies * self.space.dimension, dtype = complex)
        values[:self.values.shape[0]] = self.values
        return TestFunction(values, self.space, copies)

    def _check_compatible(self, other):
        if other.space != self.space or other.copies != self.copies:
            raise InputError('test functions live on different spaces')

    def __add__(self, other):
        self._check_compatible(other)
        return TestFunction(self.values + other.values, self.space, self.copies)

    def __mul__(self, scalar):
        return TestFunction(scalar * self.values, self.space, self.copies)

    __rmul__ = __mul__

    def __repr__(self):
        return f'TestFunction(space = {self.space!r}, copies = {self.copies})'

def inner_product(f, f_prime, space = None):
    '''
    Provides (f, f') = (1/m^n) Σ_g f(g) conj(f'(g)), summed over every copy

    Exceptions raised:
        InputError if the functions have different lengths or live on different spaces
    '''

    space = space or f.space
    if f.values.shape != f_prime.values.shape or f.space != space or f_prime.space != space:
        raise InputError('test functions of different dimensions have no inner product')
    return complex(space.weight * np.sum(f.values * np.conj(f_prime.values)))

class TruncatedFock:
    '''
    The bosonic Fock space over a number of copies of a polyhedron space, truncated at total occupation n_max.
    Basis states are multisets of mode indices, ordered by particle number and then lexicographically; the vacuum comes first.

    Instance variables:
        space: PolyhedronSpace -- the single-polyhedron space
        n_max: int -- the occupation cutoff
        copies: int -- the number of polyhedron copies
        modes: int -- copies * D single-particle modes
        basis: list -- the multisets, as sorted tuples of mode indices
        sectors: np.ndarray -- the particle number of each basis state

    Public methods:
        __init__
        dimension
        vacuum
        state_index
        annihilator
        sector_indices
    '''

    def __init__(self, space, n_max = DEFAULT_CONFIGURATION.occupation_cutoff, copies = 1, configuration = DEFAULT_CONFIGURATION):
        '''
        Initializes a TruncatedFock object

        Keyword arguments:
            space: PolyhedronSpace -- the single-polyhedron space
            n_max: int -- the occupation cutoff
            copies: int -- the number of polyhedron copies
            configuration: Configuration -- supplies carrier_cap, the largest number of matrix entries

        Return values:
            none

        Side effects:
            Enumerates the basis

        Exceptions raised:
            InputError if n_max or copies is negative
            SizeCapExceededError if a dense operator would have more than configuration.carrier_cap entries
        '''

        if n_max < 0 or copies < 1:
            raise InputError('the cutoff must be nonnegative and the number of copies positive')
        self.space = space
        self.n_max = n_max
        self.copies = copies
        self.modes = copies * space.dimension
        dimension = sum(math.comb(self.modes + n - 1, n) for n in range(n_max + 1))
        if dimension * dimension > configuration.carrier_cap:
            raise SizeCapExceededError('Fock operator', dimension * dimension, configuration.carrier_cap)
        self.basis = [state for n in range(n_max + 1) for state in itertools.combinations_with_replacement(range(self.modes), n)]
        self._index = {state: i for i, state in enumerate(self.basis)}
        self.sectors = np.array([len(state) for state in self.basis])
        self._annihilators = {}
        logger.debug('truncated Fock space with %d modes and cutoff %d has dimension %d', self.modes, n_max, dimension)

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def vacuum(self):
        vector = np.zeros(self.dimension, dtype = complex)
        vector[0] = 1
        return vector

    def state_index(self, modes):
        return self._index[tuple(sorted(modes))]

    def annihilator(self, mode):
        '''
        Provides the matrix of a_mode: a multiset holding the mode n times goes to the multiset with one fewer, times √n
        '''

        if mode not in self._annihilators:
            matrix = np.zeros((self.dimension, self.dimension), dtype = complex)
            for column, state in enumerate(self.basis):
                occupation = state.count(mode)
                if occupation:
                    remaining = list(state)
                    remaining.remove(mode)
                    matrix[self._index[tuple(remaining)], column] = math.sqrt(occupation)
            self._annihilators[mode] = matrix
        return self._annihilators[mode]

    def sector_indices(self, cap):
        return np.flatnonzero(self.sectors <= cap)

    def __repr__(self):
        return f'TruncatedFock(modes = {self.modes}, n_max = {self.n_max}, dimension = {self.dimension})'

@dataclass(eq = False)
class FieldOperator:
    '''
    The smeared field Ψ(f) on a truncated Fock space.

    Instance variables:
        matrix: np.ndarray -- the dense matrix
        test_function: TestFunction -- the smearing function
    '''

    matrix: np.ndarray
    test_function: TestFunction

    @property
    def adjoint(self):
        return self.matrix.conj().T

@dataclass(eq = False)
class WeylElement:
    '''
    The Weyl element W(f) on a truncated Fock space.

    Instance variables:
        matrix: np.ndarray -- the dense unitary matrix
        test_function: TestFunction -- the defining function
    '''

    matrix: np.ndarray
    test_function: TestFunction

def _check_fock(f, fock):
    if f.space != fock.space or f.copies != fock.copies:
        raise InputError('test function and Fock space have different single-particle spaces')

def field_operator(f, fock):
    '''
    Provides Ψ(f) = Σ_g √w f(g) a_g, w the Haar weight of one group tuple

    With the mode fields φ(g) = a_g/√w the integral Σ_g w f(g) φ(g) gives this operator and [Ψ(f), Ψ(f')†] = (f, f')
    holds exactly below the cutoff.
    '''

    _check_fock(f, fock)
    matrix = np.zeros((fock.dimension, fock.dimension), dtype = complex)
    amplitude = math.sqrt(fock.space.weight)
    for mode in np.flatnonzero(np.abs(f.values) > 0):
        matrix = matrix + amplitude * f.values[mode] * fock.annihilator(int(mode))
    return FieldOperator(matrix, f)

def _compressed_norm(matrix, indices):
    return float(np.linalg.norm(matrix[np.ix_(indices, indices)], 2)) if len(indices) else 0.0

def ccr_defect(f, f_prime, fock, guarded = True):
    '''
    Provides the operator norm of [Ψ(f), Ψ(f')†] - (f, f') Id

    Keyword arguments:
        f, f_prime: TestFunction -- the smearing functions
        fock: TruncatedFock -- the truncated space
        guarded: bool -- compress to sectors N <= n_max - 1, where the truncation does not act; the whole space otherwise

    Exceptions raised:
        DomainError if n_max is 0 and guarded is True
    '''

    if guarded and fock.n_max == 0:
        raise DomainError('a cutoff of 0 leaves no sector to test')
    psi = field_operator(f, fock).matrix
    psi_prime_adjoint = field_operator(f_prime, fock).adjoint
    defect = psi @ psi_prime_adjoint - psi_prime_adjoint @ psi - inner_product(f, f_prime) * np.eye(fock.dimension)
    indices = fock.sector_indices(fock.n_max - 1 if guarded else fock.n_max)
    return _compressed_norm(defect, indices)

def weyl_element(f, fock):
    '''
    Provides W(f) = exp((i/√2)(Ψ(f) + Ψ(f)†)), unitary as the exponential of a skew-adjoint matrix
    '''

    psi = field_operator(f, fock)
    return WeylElement(scipy.linalg.expm(1j / math.sqrt(2) * (psi.matrix + psi.adjoint)), f)

def vacuum_expectation(w):
    '''
    Provides ⟨0|W|0⟩; the vacuum is the first basis state
    '''

    matrix = w.matrix if isinstance(w, WeylElement) else np.asarray(w)
    return complex(matrix[0, 0])

def weyl_relation_defect(f, f_prime, fock, sector_cap):
    '''
    Provides the norm of W(f)W(f') - exp(-(i/2) Im(f, f')) W(f + f') compressed to the sectors N <= sector_cap

    Exceptions raised:
        DomainError if sector_cap is not below the cutoff
    '''

    if not 0 <= sector_cap < fock.n_max:
        raise DomainError(f'sector cap {sector_cap} is not below the cutoff {fock.n_max}')
    phase = np.exp(-0.5j * inner_product(f, f_prime).imag)
    defect = weyl_element(f, fock).matrix @ weyl_element(f_prime, fock).matrix - phase * weyl_element(f + f_prime, fock).matrix
    return _compressed_norm(defect, fock.sector_indices(sector_cap))

def weyl_commutator_defect(f, f_prime, fock, sector_cap):
    '''
    Provides the norm of W(f)W(f') - W(f')W(f) compressed to the sectors N <= sector_cap
    '''

    if not 0 <= sector_cap < fock.n_max:
        raise DomainError(f'sector cap {sector_cap} is not below the cutoff {fock.n_max}')
    w = weyl_element(f, fock).matrix
    w_prime = weyl_element(f_prime, fock).matrix
    return _compressed_norm(w @ w_prime - w_prime @ w, fock.sector_indices(sector_cap))

def is_gft_context(fs, space = None, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Provides True iff Im(f_i, f_j) vanishes for every pair of test functions, so their Weyl elements commute

    Exceptions raised:
        InputError if the list is empty
    '''

    fs = list(fs)
    if not fs:
        raise InputError('a context needs at least one test function')
    return all(abs(inner_product(f, g, space).imag) <= tolerance for f, g in itertools.combinations(fs, 2))

def check_vacuum_uniqueness(fock, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Checks that the common kernel of every annihilator is the vacuum line
    '''

    report = ValidationReport(f'vacuum of {fock!r}')
    stacked = np.vstack([fock.annihilator(mode) for mode in range(fock.modes)])
    kernel = scipy.linalg.null_space(stacked, rcond = max(tolerance, 1e-12))
    if kernel.shape[1] != 1:
        report.add('gft.vacuum_unique', 'kernel', f'common kernel of the annihilators has dimension {kernel.shape[1]}')
    elif abs(abs(kernel[0, 0]) - 1) > max(tolerance, 1e-8):
        report.add('gft.vacuum_unique', 'kernel', 'common kernel of the annihilators is not the vacuum line')
    return report

def weyl_defect_sweep(f, f_prime, cutoffs, sector_cap, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides a DataFrame of Weyl-relation, Weyl-commutator and guarded CCR defects and vacuum expectations for a list of cutoffs

    Return values:
        a DataFrame indexed by n_max
    '''

    rows = []
    for n_max in cutoffs:
        fock = TruncatedFock(f.space, n_max, f.copies, configuration)
        rows.append({
            'n_max': n_max,
            'fock_dimension': fock.dimension,
            'weyl_relation_defect': weyl_relation_defect(f, f_prime, fock, sector_cap),
            'weyl_commutator_defect': weyl_commutator_defect(f, f_prime, fock, sector_cap),
            'ccr_defect': ccr_defect(f, f_prime, fock),
            'vacuum_expectation': vacuum_expectation(weyl_element(f, fock)).real,
            'vacuum_expectation_limit': math.exp(-inner_product(f, f).real / 4)
        })
        logger.debug('cutoff %d: Weyl relation defect %.3g', n_max, rows[-1]['weyl_relation_defect'])
    return pd.DataFrame(rows).set_index('n_max')

def _second_quantized_isometry(source, target):
    '''
    Provides the isometry of Fock spaces induced by the inclusion of the modes of fewer copies into more copies
    '''

    matrix = np.zeros((target.dimension, source.dimension), dtype = complex)
    for column, state in enumerate(source.basis):
        matrix[target.state_index(state), column] = 1
    return matrix

def second_quantization_cone(k, l, context, n_max = 2, padding_sign = 1, configuration = DEFAULT_CONFIGURATION):
    '''
    Builds the cone of a GFT context over the inclusion s_kl: S(⊕^k H) -> S(⊕^l H) of Weyl-generator presentations and checks it

    Weyl algebras are presented by their generating test functions, so a Weyl algebra over c copies has the coordinate
    space of c * D values and s_kl pads test functions with zeros on the new copies. The apex is the span of the context's
    test functions, with legs i_V^k (the functions themselves) and i_V^l (the functions padded directly). The Fock
    realization is checked alongside: J W_k(f) = W_l(s_kl f) J for the isometry J induced on truncated Fock spaces.

    Keyword arguments:
        k, l: int -- copy counts, k <= l
        context: list -- TestFunction objects on k copies with pairwise Im(f, f') = 0
        n_max: int -- the cutoff of the Fock realization
        padding_sign: int -- multiplies s_kl; any value other than 1 corrupts the inclusion
        configuration: Configuration -- supplies tolerance and caps

    Return values:
        the triple (Cone, Diagram, ValidationReport)

    Exceptions raised:
        DomainError if k > l or the test functions do not form a GFT context
    '''

    if k > l:
        raise DomainError(f'no inclusion of {k} copies into {l} copies')
    context = list(context)
    if not is_gft_context(context, tolerance = configuration.tolerance):
        raise DomainError('test functions do not form a GFT context')
    space = context[0].space
    if any(f.copies != k for f in context):
        raise InputError(f'context functions must live on {k} copies')
    small, large = k * space.dimension, l * space.dimension
    inclusion = padding_sign * np.eye(large, small, dtype = complex)
    if k == l:
        index = FinCategory(['S_k'], {('S_k', 'S_k'): ('id_S_k',)}, {('id_S_k', 'id_S_k'): 'id_S_k'}, {'S_k': 'id_S_k'}, name = 'copies')
        diagram = Diagram(index, {'S_k': small}, {}, LinearMaps(configuration.tolerance))
    else:
        index = FinCategory(
            ['S_k', 'S_l'],
            {('S_k', 'S_k'): ('id_S_k',), ('S_l', 'S_l'): ('id_S_l',), ('S_k', 'S_l'): ('s_kl',)},
            {('id_S_k', 'id_S_k'): 'id_S_k', ('id_S_l', 'id_S_l'): 'id_S_l', ('s_kl', 'id_S_k'): 's_kl', ('id_S_l', 's_kl'): 's_kl'},
            {'S_k': 'id_S_k', 'S_l': 'id_S_l'},
            name = 'copies'
        )
        diagram = Diagram(index, {'S_k': small, 'S_l': large}, {'s_kl': inclusion}, LinearMaps(configuration.tolerance))
    legs = {'S_k': np.stack([f.values for f in context], axis = 1)}
    if k != l:
        legs['S_l'] = np.stack([f.padded(l).values for f in context], axis = 1)
    cone = Cone(len(context), legs, FROM_APEX, name = 'GFT context')
    report = check_cone(cone, diagram)
    if k != l:
        source = TruncatedFock(space, n_max, k, configuration)
        target = TruncatedFock(space, n_max, l, configuration)
        isometry = _second_quantized_isometry(source, target)
        for position, f in enumerate(context):
            image = TestFunction(inclusion @ f.values, space, l)
            difference = isometry @ weyl_element(f, source).matrix - weyl_element(image, target).matrix @ isometry
            if float(np.linalg.norm(difference, 2)) > max(configuration.tolerance, 1e-8):
                report.add('gft.fock_realization', f'generator {position}', 'J W_k(f) differs from W_l(s_kl f) J')
    return cone, diagram, report

@dataclass(eq = False)
class FaceCoarseGraining:
    '''
    The isometric extension of group tuples from k to l faces by the identity element.

    Instance variables:
        matrix: np.ndarray -- a 0/1 matrix of shape (m^l, m^k)
        scale: float -- m^(k-l), the factor by which inner products change
    '''

    matrix: np.ndarray
    scale: float

def face_coarse_grain(k, l, group_order = DEFAULT_CONFIGURATION.group_order, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the map C^{m^k} -> C^{m^l} sending the tuple (g_1, ..., g_k) to (g_1, ..., g_k, 0, ..., 0)

    Exceptions raised:
        DomainError if k > l
        SizeCapExceededError if the matrix would have more than configuration.carrier_cap entries
    '''

    if k > l:
        raise DomainError(f'no coarse-graining from {k} faces to {l} faces')
    if group_order ** (k + l) > configuration.carrier_cap:
        raise SizeCapExceededError('face coarse-graining', group_order ** (k + l), configuration.carrier_cap)
    matrix = np.zeros((group_order ** l, group_order ** k))
    for column in range(group_order ** k):
        matrix[column * group_order ** (l - k), column] = 1
    return FaceCoarseGraining(matrix, float(group_order) ** (k - l))

def check_face_functoriality(k, l, p, group_order = DEFAULT_CONFIGURATION.group_order, configuration = DEFAULT_CONFIGURATION):
    '''
    Checks that coarse-graining k -> l -> p equals k -> p and that each map scales inner products by m^(k-l)
    '''

    report = ValidationReport(f'face coarse-graining {k} -> {l} -> {p}')
    first = face_coarse_grain(k, l, group_order, configuration)
    second = face_coarse_grain(l, p, group_order, configuration)
    direct = face_coarse_grain(k, p, group_order, configuration)
    if np.max(np.abs(second.matrix @ first.matrix - direct.matrix)) > configuration.tolerance:
        report.add('gft.face_functoriality', f'({k}, {l}, {p})', 'composite differs from the direct coarse-graining')
    random_number_generator = np.random.default_rng(configuration.seed)
    for source, target, graining in ((k, l, first), (l, p, second), (k, p, direct)):
        space = PolyhedronSpace(group_order, source)
        image_space = PolyhedronSpace(group_order, target)
        f = TestFunction(random_number_generator.standard_normal(space.dimension) + 1j * random_number_generator.standard_normal(space.dimension), space)
        g = TestFunction(random_number_generator.standard_normal(space.dimension) + 1j * random_number_generator.standard_normal(space.dimension), space)
        image = inner_product(TestFunction(graining.matrix @ f.values, image_space), TestFunction(graining.matrix @ g.values, image_space))
        if abs(image - graining.scale * inner_product(f, g)) > max(configuration.tolerance, 1e-8):
            report.add('gft.face_scale', f'({source}, {target})', 'inner products do not scale by m^(k-l)')
    return report
