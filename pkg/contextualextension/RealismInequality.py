'''
Module for class ObservableFamily and the correlation providers used to evaluate the Roy-Singh realism inequality
Σ_p ⟨(Σ_i ±A_i + Σ_j ±B_j)²⟩ >= q, and to search its sign vectors exhaustively
'''

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import itertools
import logging

import numpy as np

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.ContextualExtension import ExtendedState
from contextualextension.Errors import DomainError, InputError, MixedCorrelationError, SizeCapExceededError
from contextualextension.MatrixStarAlgebra import commutator_norm, gelfand_spectrum, generate_algebra, is_self_adjoint

__all__ = [
    'ObservableGroup',
    'ObservableFamily',
    'MeasureProvider',
    'QuantumProvider',
    'SignSearchResult',
    'measure_correlation',
    'roy_singh_lhs',
    'search_signs',
    'joint_spectral_provider'
]

logger = logging.getLogger(__name__)

# rounding slack of the classical bound
CLASSICAL_BOUND_SLACK = 1e-12

@dataclass(frozen = True, eq = False)
class ObservableGroup:
    '''
    One group of a family: the A-observables and B-observables whose signed sum is squared.

    Instance variables:
        a: tuple -- observables, each a ±1-valued carrier function (1-D array) or a self-adjoint involution (2-D array)
        b: tuple -- observables of the same kinds
    '''

    a: tuple
    b: tuple

    @property
    def observables(self):
        return self.a + self.b

class ObservableFamily:
    '''
    A list of observable groups with an odd number of observables in each group.

    Instance variables:
        groups: tuple -- the ObservableGroup objects

    Public methods:
        __init__
        q
        size
        observables
        group_slices
    '''

    def __init__(self, groups, tolerance = DEFAULT_CONFIGURATION.tolerance):
        '''
        Initializes an ObservableFamily object

        Keyword arguments:
            groups: list -- ObservableGroup objects, or dicts with keys a and b
            tolerance: float -- tolerance of the ±1 and involution checks

        Return values:
            none

        Side effects:
            Converts observables to numpy arrays

        Exceptions raised:
            InputError if there is no group or an observable is neither a vector nor a square matrix
            DomainError if a group has an even number of observables, a function takes a value other than ±1
                or a matrix is not a self-adjoint involution
        '''

        converted = []
        for p, group in enumerate(groups):
            if isinstance(group, dict):
                group = ObservableGroup(tuple(group.get('a', ())), tuple(group.get('b', ())))
            a = tuple(self._convert(observable, p, tolerance) for observable in group.a)
            b = tuple(self._convert(observable, p, tolerance) for observable in group.b)
            if (len(a) + len(b)) % 2 == 0:
                raise DomainError(f'group {p} has {len(a) + len(b)} observables; the inequality needs an odd number')
            converted.append(ObservableGroup(a, b))
        if not converted:
            raise InputError('a family needs at least one group')
        self.groups = tuple(converted)

    @staticmethod
    def _convert(observable, p, tolerance):
        observable = np.asarray(observable)
        if observable.ndim == 1:
            observable = observable.astype(float)
            if np.any(np.abs(np.abs(observable) - 1) > tolerance):
                raise DomainError(f'a function of group {p} takes values other than ±1')
            return np.sign(observable)
        if observable.ndim == 2 and observable.shape[0] == observable.shape[1]:
            observable = observable.astype(complex)
            if not is_self_adjoint(observable, tolerance):
                raise DomainError(f'a matrix of group {p} is not self-adjoint')
            if np.linalg.norm(observable @ observable - np.eye(observable.shape[0]), 2) > tolerance:
                raise DomainError(f'a matrix of group {p} does not square to the identity')
            return observable
        raise InputError(f'an observable of group {p} is neither a function nor a square matrix')

    @property
    def q(self):
        '''
        The number of groups, which is the classical bound of the left-hand side
        '''

        return len(self.groups)

    @property
    def size(self):
        '''
        The number of observables over all groups
        '''

        return sum(len(group.observables) for group in self.groups)

    def observables(self):
        '''
        Provides every observable in family order: the a observables, then the b observables, group after group

        Keyword arguments:
            none

        Return values:
            a list of np.ndarray objects

        Side effects:
            none

        Exceptions raised:
            none

        Restrictions on when this method can be called:
            none
        '''

        return [observable for group in self.groups for observable in group.observables]

    def group_slices(self):
        '''
        Provides, per group, the slice of its observables in family order, so that signs[slice] are the signs of the group
        '''

        slices = []
        start = 0
        for group in self.groups:
            slices.append(slice(start, start + len(group.observables)))
            start += len(group.observables)
        return slices

def _weights_of(state):
    return state.weights if isinstance(state, ExtendedState) else np.asarray(state, dtype = float)

def measure_correlation(mu, a, b):
    '''
    Provides Σ_x a(x) b(x) μ(x)

    Exceptions raised:
        DomainError if a or b is not defined on the carrier of mu
    '''

    weights = _weights_of(mu)
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != weights.shape or b.shape != weights.shape:
        raise DomainError(f'functions are not defined on a carrier of {weights.shape[0]} points')
    return float(np.real(np.sum(a * b * weights)))

class MeasureProvider:
    '''
    Correlations of carrier functions under a probability measure. Matrices are refused; commuting matrices go through
    joint_spectral_provider first.

    Instance variables:
        state: ExtendedState or np.ndarray -- the measure
        weights: np.ndarray -- the weight of every carrier point

    Public methods:
        __init__
        correlation
    '''

    def __init__(self, state):
        self.state = state
        self.weights = _weights_of(state)

    def correlation(self, a, b):
        '''
        Provides Σ_x a(x) b(x) μ(x)

        Keyword arguments:
            a: np.ndarray -- a carrier function
            b: np.ndarray -- a carrier function

        Return values:
            the correlation, a float

        Side effects:
            none

        Exceptions raised:
            DomainError if a and b are matrices, or functions on another carrier
            MixedCorrelationError if one is a function and the other a matrix

        Restrictions on when this method can be called:
            none
        '''

        if a.ndim == 1 and b.ndim == 1:
            return measure_correlation(self.weights, a, b)
        if a.ndim == 2 and b.ndim == 2:
            raise DomainError('measure provider correlates carrier functions only; pass commuting matrices through joint_spectral_provider')
        raise MixedCorrelationError('correlation of a carrier function with a matrix is not defined')

class QuantumProvider:
    '''
    Correlations Tr(ρ A B) of matrix observables in a density matrix.

    Instance variables:
        rho: np.ndarray -- the density matrix
    '''

    def __init__(self, rho):
        self.rho = np.asarray(rho, dtype = complex)

    def correlation(self, a, b):
        if a.ndim == 2 and b.ndim == 2:
            return complex(np.trace(self.rho @ a @ b))
        if a.ndim == 1 and b.ndim == 1:
            raise DomainError('quantum provider has no measure to correlate carrier functions in')
        raise MixedCorrelationError('correlation of a carrier function with a matrix is not defined')

def _gram_matrices(family, provider):
    grams = []
    for group in family.groups:
        observables = group.observables
        gram = np.array([[provider.correlation(x, y) for y in observables] for x in observables], dtype = complex)
        grams.append(gram)
    return grams

def roy_singh_lhs(fam, signs, provider):
    '''
    Provides Σ_p ⟨(Σ_i s_i A_i^(p) + Σ_j s_j B_j^(p))²⟩ with the square expanded into pairwise correlations

    Keyword arguments:
        fam: ObservableFamily -- the family
        signs: sequence -- one ±1 per observable, in family order
        provider: MeasureProvider or QuantumProvider -- supplies the correlations

    Return values:
        the left-hand side, to be compared with fam.q

    Exceptions raised:
        InputError if the number of signs differs from the number of observables
        MixedCorrelationError if a group correlates a carrier function with a matrix
    '''

    signs = np.asarray(signs, dtype = float)
    if signs.shape != (fam.size,):
        raise InputError(f'{signs.shape[0] if signs.ndim else 0} signs given for {fam.size} observables')
    total = 0.0
    for gram, group_slice in zip(_gram_matrices(fam, provider), fam.group_slices()):
        s = signs[group_slice]
        total += float(np.real(s @ gram @ s))
    return total

@dataclass(frozen = True)
class SignSearchResult:
    '''
    The minimum of the left-hand side over all sign vectors.

    Instance variables:
        signs: tuple -- the lexicographically first minimizing sign vector
        lhs: float -- the minimum
        q: int -- the classical bound
        margin: float -- lhs - q
        below_classical_bound: bool -- True iff the minimum is below q
    '''

    signs: tuple
    lhs: float
    q: int
    margin: float
    below_classical_bound: bool

    def to_dict(self):
        return {'signs': list(self.signs), 'lhs': self.lhs, 'q': self.q, 'margin': self.margin, 'below_classical_bound': self.below_classical_bound}

def search_signs(fam, provider, configuration = DEFAULT_CONFIGURATION):
    '''
    Minimizes the left-hand side over every sign vector; ties go to the lexicographically first vector with -1 before +1

    Keyword arguments:
        fam: ObservableFamily -- the family
        provider: MeasureProvider or QuantumProvider -- supplies the correlations
        configuration: Configuration -- supplies observable_cap and threads

    Return values:
        a SignSearchResult

    Exceptions raised:
        SizeCapExceededError if the family has more than configuration.observable_cap observables
    '''

    if fam.size > configuration.observable_cap:
        raise SizeCapExceededError('observable family', fam.size, configuration.observable_cap)
    grams = [np.real(gram) for gram in _gram_matrices(fam, provider)]
    slices = fam.group_slices()
    sign_vectors = np.array(list(itertools.product((-1.0, 1.0), repeat = fam.size)))

    def evaluate(block):
        return sum(np.einsum('ki,ij,kj->k', block[:, s], gram, block[:, s]) for gram, s in zip(grams, slices))

    if configuration.threads > 1 and len(sign_vectors) > 1:
        blocks = np.array_split(sign_vectors, configuration.threads)
        with ThreadPoolExecutor(max_workers = configuration.threads) as executor:
            values = np.concatenate(list(executor.map(evaluate, blocks)))
    else:
        values = evaluate(sign_vectors)
    minimum = float(np.min(values))
    best = int(np.flatnonzero(values <= minimum + CLASSICAL_BOUND_SLACK)[0])
    logger.debug('searched %d sign vectors; minimum %.12g at vector %d', len(sign_vectors), minimum, best)
    below = minimum < fam.q - CLASSICAL_BOUND_SLACK
    if below:
        logger.warning('minimum %.12g lies below the classical bound %d', minimum, fam.q)
    return SignSearchResult(tuple(int(s) for s in sign_vectors[best]), minimum, fam.q, minimum - fam.q, below)

def joint_spectral_provider(observables, rho, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the measure of the joint spectral measure of pairwise-commuting matrices in a density matrix, with the matrices as carrier functions

    The carrier is the Gel'fand spectrum of the algebra the matrices generate; a character χ has weight Tr(ρ P_χ) and
    the function of a matrix A takes the value χ(A) at χ.

    Return values:
        the pair (MeasureProvider, list of carrier functions in the order of the matrices)

    Exceptions raised:
        DomainError if two matrices do not commute
    '''

    observables = [np.asarray(observable, dtype = complex) for observable in observables]
    for i, j in itertools.combinations(range(len(observables)), 2):
        if commutator_norm(observables[i], observables[j]) > configuration.tolerance:
            raise DomainError(f'observables {i} and {j} do not commute')
    rho = np.asarray(rho, dtype = complex)
    algebra = generate_algebra(observables, rho.shape[0], configuration, name = 'joint')
    spectrum = gelfand_spectrum(algebra, configuration)
    weights = np.clip(np.array([float(np.real(np.trace(rho @ character.projection))) for character in spectrum]), 0.0, None)
    functions = [np.array([character.evaluate(observable).real for character in spectrum]) for observable in observables]
    return MeasureProvider(weights / weights.sum()), functions
