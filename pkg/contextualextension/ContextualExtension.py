'''
Module for class ExtendedAlgebra, the commutative algebra of functions on the product of the Gel'fand spectra of all
contexts, together with context embeddings, product-measure state extensions and the map back to the ambient algebra
'''

from dataclasses import dataclass, field
import functools
import logging
import math

import numpy as np
import pandas as pd

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.Errors import DomainError, InputError, InternalConsistencyError, SizeCapExceededError
from contextualextension.FiniteCategory import (
    FROM_APEX, FINITE_SETS, Cone, Diagram, FinCategory, LinearMaps, discrete_category, limit_of_diagram, opposite
)
from contextualextension.MatrixStarAlgebra import as_square_matrix, gelfand_spectrum, is_self_adjoint
from contextualextension.ValidationReport import ValidationReport

__all__ = [
    'ProductSpectrum',
    'ExtendedAlgebra',
    'ExtendedState',
    'restriction_table',
    'build_limit_extension',
    'embed',
    'extend_state',
    'evaluate_state',
    'point_valuation',
    'marginalize_state',
    'spectrum_diagram',
    'check_limit_agreement',
    'AmbientProjection',
    'ambient_projection',
    'context_cone',
    'element_table',
    'extension_to_dict'
]

logger = logging.getLogger(__name__)

class ProductSpectrum:
    '''
    The product of the Gel'fand spectra of a list of contexts. A point is a tuple of character indices, one per context.

    Instance variables:
        labels: tuple -- the context labels, in product order
        spectra: tuple -- per context, its list of Character objects
        sizes: tuple -- per context, the number of its characters
        index: pd.MultiIndex -- one row per point, the last context varying fastest
        codes: np.ndarray -- array of shape (number of points, number of contexts) of character indices

    Public methods:
        __init__
        __len__
        position
        point_index
        point
        marginal_codes
        restrict
    '''

    def __init__(self, labels, spectra):
        self.labels = tuple(labels)
        self.spectra = tuple(tuple(spectrum) for spectrum in spectra)
        self.sizes = tuple(len(spectrum) for spectrum in self.spectra)
        self.index = pd.MultiIndex.from_product([range(size) for size in self.sizes], names = list(self.labels))
        self.codes = np.stack(np.unravel_index(np.arange(math.prod(self.sizes)), self.sizes), axis = 1) if self.sizes else np.zeros((1, 0), dtype = int)

    def __len__(self):
        return self.codes.shape[0]

    def position(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f'context {label!r} is not a factor of the product spectrum') from None

    def point_index(self, point):
        '''
        Provides the row of a point given as a tuple of character indices
        '''

        point = tuple(point)
        if len(point) != len(self.sizes) or any(not 0 <= c < size for c, size in zip(point, self.sizes)):
            raise InputError(f'point {point} is not in the product spectrum')
        return int(np.ravel_multi_index(point, self.sizes)) if self.sizes else 0

    def point(self, row):
        return tuple(int(c) for c in self.codes[row])

    def marginal_codes(self, label):
        return self.codes[:, self.position(label)]

    def restrict(self, labels):
        positions = [self.position(label) for label in labels]
        return ProductSpectrum([self.labels[p] for p in positions], [self.spectra[p] for p in positions])

    def __repr__(self):
        return f'ProductSpectrum(labels = {list(self.labels)!r}, sizes = {list(self.sizes)!r})'

class ExtendedAlgebra:
    '''
    The algebra of all complex functions on a product spectrum, with elements stored as dense value vectors.

    Instance variables:
        carrier: ProductSpectrum -- the points
        context_category: ContextCategory -- the contexts it was built from

    Public methods:
        __init__
        size
        unit
        multiply
        add
        adjoint
        context
    '''

    def __init__(self, carrier, context_category):
        self.carrier = carrier
        self.context_category = context_category

    @property
    def size(self):
        return len(self.carrier)

    def unit(self):
        return np.ones(self.size, dtype = complex)

    def _check(self, element):
        element = np.asarray(element, dtype = complex)
        if element.shape != (self.size,):
            raise DomainError(f'element of shape {element.shape} is not defined on a carrier of {self.size} points')
        return element

    def multiply(self, first, second):
        return self._check(first) * self._check(second)

    def add(self, first, second):
        return self._check(first) + self._check(second)

    def adjoint(self, element):
        return np.conj(self._check(element))

    def context(self, label):
        return self.context_category.context(label)

    def __repr__(self):
        return f'ExtendedAlgebra(carrier = {self.carrier!r}, size = {self.size})'

@dataclass(eq = False)
class ExtendedState:
    '''
    A probability measure on the carrier of an extended algebra.

    Instance variables:
        weights: np.ndarray -- nonnegative weight per point, summing to 1
        source: np.ndarray -- the density matrix it extends
        carrier: ProductSpectrum -- the points the weights live on
        marginals: dict -- context label -> marginal weight per character
    '''

    weights: np.ndarray
    source: np.ndarray
    carrier: ProductSpectrum
    marginals: dict = field(default_factory = dict)

def restriction_table(small, large, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Provides the restriction of characters from a larger context to a smaller one

    A character of the larger context restricts to the unique character of the smaller one whose projection
    dominates its own, i.e. P_small P_large = P_large.

    Keyword arguments:
        small: MatrixStarAlgebra -- the smaller context
        large: MatrixStarAlgebra -- the larger context
        tolerance: float -- tolerance of the domination test

    Return values:
        a dict from character index of the larger context to character index of the smaller one

    Exceptions raised:
        InternalConsistencyError if a character of the larger context is dominated by none or by several
    '''

    small_spectrum = gelfand_spectrum(small)
    large_spectrum = gelfand_spectrum(large)
    table = {}
    for j, large_character in enumerate(large_spectrum):
        matches = [
            i for i, small_character in enumerate(small_spectrum)
            if float(np.linalg.norm(small_character.projection @ large_character.projection - large_character.projection, 2)) <= max(tolerance, 1e-8)
        ]
        if len(matches) != 1:
            raise InternalConsistencyError(f'character {j} of {large.name} restricts to {len(matches)} characters of {small.name}')
        table[j] = matches[0]
    return table

def build_limit_extension(cc, configuration = DEFAULT_CONFIGURATION, labels = None):
    '''
    Builds the contextual extension of a context category: all functions on the product of the Gel'fand spectra of its contexts

    Keyword arguments:
        cc: ContextCategory -- the contexts
        configuration: Configuration -- supplies carrier_cap and the spectrum settings
        labels: iterable -- an optional sub-family of context labels; all contexts by default

    Return values:
        an ExtendedAlgebra

    Exceptions raised:
        DomainError if a context is not commutative
        SizeCapExceededError if the product has more than configuration.carrier_cap points

    Restrictions on when this function can be called:
        none
    '''

    labels = list(cc.labels) if labels is None else list(labels)
    spectra = [gelfand_spectrum(cc.context(label), configuration) for label in labels]
    size = math.prod(len(spectrum) for spectrum in spectra)
    logger.debug('product spectrum of %d contexts has %d points (cap %d)', len(labels), size, configuration.carrier_cap)
    if size > configuration.carrier_cap:
        raise SizeCapExceededError('product spectrum', size, configuration.carrier_cap)
    return ExtendedAlgebra(ProductSpectrum(labels, spectra), cc)

def embed(a, v, ext):
    '''
    Embeds a matrix of a context as the function x -> χ(a), χ the component of x at that context

    Exceptions raised:
        DomainError if a lies outside the span of the context
    '''

    context = ext.context(v)
    a = as_square_matrix(a, context.dim)
    if not context.contains(a):
        raise DomainError(f'matrix lies outside the span of context {v}')
    spectrum = ext.carrier.spectra[ext.carrier.position(v)]
    values = np.array([character.evaluate(a) for character in spectrum], dtype = complex)
    return values[ext.carrier.marginal_codes(v)]

def _check_density_matrix(rho, dim, tolerance):
    rho = as_square_matrix(rho, dim)
    if not is_self_adjoint(rho, tolerance):
        raise DomainError('density matrix is not self-adjoint')
    if float(np.min(np.linalg.eigvalsh((rho + rho.conj().T) / 2))) < -tolerance:
        raise DomainError('density matrix is not positive semidefinite')
    if abs(complex(np.trace(rho)) - 1) > tolerance:
        raise DomainError('density matrix does not have trace 1')
    return rho

def extend_state(rho, ext, configuration = DEFAULT_CONFIGURATION):
    '''
    Extends a density matrix to the product measure of its Born-rule marginals on every context

    Keyword arguments:
        rho: array-like -- a density matrix of the ambient algebra
        ext: ExtendedAlgebra -- the extension
        configuration: Configuration -- supplies tolerance

    Return values:
        an ExtendedState whose marginal at context V is χ -> Tr(ρ P_χ)

    Exceptions raised:
        InputError if rho has the wrong shape
        DomainError if rho is not self-adjoint, positive semidefinite and of trace 1
    '''

    rho = _check_density_matrix(rho, ext.context_category.ambient.dim, configuration.tolerance)
    marginals = {}
    for label, spectrum in zip(ext.carrier.labels, ext.carrier.spectra):
        probabilities = np.array([float(np.real(np.trace(rho @ character.projection))) for character in spectrum])
        probabilities = np.clip(probabilities, 0.0, None)
        marginals[label] = probabilities / probabilities.sum()
    weights = functools.reduce(np.multiply.outer, marginals.values(), np.ones(())).reshape(-1)
    return ExtendedState(weights, rho, ext.carrier, marginals)

def evaluate_state(mu, e):
    '''
    Provides Σ_x e(x) μ(x)

    Exceptions raised:
        DomainError if e is not defined on the carrier of mu
    '''

    e = np.asarray(e, dtype = complex)
    if e.shape != mu.weights.shape:
        raise DomainError(f'element of shape {e.shape} is not defined on a carrier of {mu.weights.shape[0]} points')
    return complex(np.dot(e, mu.weights))

def point_valuation(a, v1, v2, x, ext):
    '''
    Provides the values at one point of the embeddings of a matrix through two contexts that both contain it

    Keyword arguments:
        a: array-like -- a matrix in the span of both contexts
        v1, v2: str -- context labels
        x: int or tuple -- a point, as a row of the carrier or a tuple of character indices
        ext: ExtendedAlgebra -- the extension

    Return values:
        the pair (embed(a, v1)(x), embed(a, v2)(x))

    Exceptions raised:
        DomainError if a lies outside either context
    '''

    carrier = ext.carrier
    point = carrier.point(x) if isinstance(x, (int, np.integer)) else tuple(x)
    carrier.point_index(point)
    values = []
    for label in (v1, v2):
        context = ext.context(label)
        matrix = as_square_matrix(a, context.dim)
        if not context.contains(matrix):
            raise DomainError(f'matrix lies outside the span of context {label}')
        position = carrier.position(label)
        values.append(carrier.spectra[position][point[position]].evaluate(matrix))
    return tuple(values)

def marginalize_state(mu, labels):
    '''
    Provides the image of an extended state on the product spectrum of a sub-family of its contexts
    '''

    carrier = mu.carrier
    positions = [carrier.position(label) for label in labels]
    dropped = tuple(p for p in range(len(carrier.labels)) if p not in positions)
    weights = mu.weights.reshape(carrier.sizes).sum(axis = dropped)
    # summing keeps the remaining axes in product order
    order = np.argsort(np.argsort(positions))
    weights = np.transpose(weights, order) if len(positions) > 1 else weights
    restricted = carrier.restrict(labels)
    marginals = {label: mu.marginals[label] for label in labels if label in mu.marginals}
    return ExtendedState(np.asarray(weights).reshape(-1), mu.source, restricted, marginals)

def spectrum_diagram(cc, with_restrictions = False, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the diagram of finite sets V -> Σ(V) over the contexts, either discrete or with the restriction maps Σ(V') -> Σ(V) for V ⊆ V'

    Carriers are the character indices of each context.
    '''

    carriers = {label: tuple(range(len(gelfand_spectrum(cc.context(label), configuration)))) for label in cc.labels}
    if not with_restrictions:
        return Diagram(discrete_category(cc.labels, name = 'V_discrete'), carriers, {}, FINITE_SETS)
    index = opposite(cc.to_fin_category())
    morphisms = {}
    for i, j in cc.inclusions():
        small, large = cc.labels[i], cc.labels[j]
        morphisms[f'{small}<={large}'] = restriction_table(cc.contexts[i], cc.contexts[j], configuration.tolerance)
    return Diagram(index, carriers, morphisms, FINITE_SETS)

def check_limit_agreement(ext, cc, configuration = DEFAULT_CONFIGURATION):
    '''
    Checks the carrier of an extension against limits computed by the finite-category engine

    The limit of the discrete spectrum diagram must be the whole product spectrum; the limit of the diagram with
    restriction maps must be exactly the compatible points of the product.

    Return values:
        a ValidationReport
    '''

    report = ValidationReport('limit agreement')
    if list(ext.carrier.labels) != list(cc.labels):
        report.add('ctxext.limit_agreement', 'labels', 'extension was not built from every context of the category')
        return report
    points = {ext.carrier.point(row) for row in range(len(ext.carrier))}
    discrete = set(limit_of_diagram(spectrum_diagram(cc, False, configuration)).apex)
    if discrete != points:
        report.add('ctxext.limit_agreement', 'discrete', f'limit has {len(discrete)} families, product has {len(points)} points')
    restricted = set(limit_of_diagram(spectrum_diagram(cc, True, configuration)).apex)
    tables = {(i, j): restriction_table(cc.contexts[i], cc.contexts[j], configuration.tolerance) for i, j in cc.inclusions()}
    compatible = {point for point in points if all(table[point[j]] == point[i] for (i, j), table in tables.items())}
    if restricted != compatible:
        report.add('ctxext.limit_agreement', 'restrictions', f'limit has {len(restricted)} families, {len(compatible)} points are compatible')
    return report

class AmbientProjection:
    '''
    The unital linear map φ from the extension onto the ambient algebra with φ(embed(A, V)) = A for every context V.

    Its kernel is K(x) = Σ_V |Σ(V)| P_{x_V} / N - (k - 1) I / N for N points and k contexts.
    The map is linear and not multiplicative.

    Instance variables:
        extension: ExtendedAlgebra -- the extension it is defined on

    Public methods:
        __init__
        apply
        matrix
    '''

    def __init__(self, extension):
        self.extension = extension

    def apply(self, e):
        '''
        Provides φ(e) as a d×d matrix
        '''

        ext = self.extension
        e = ext._check(e)
        carrier = ext.carrier
        dim = ext.context_category.ambient.dim
        size = len(carrier)
        result = -(len(carrier.labels) - 1) * complex(e.sum()) / size * np.eye(dim, dtype = complex)
        for position, spectrum in enumerate(carrier.spectra):
            codes = carrier.codes[:, position]
            sums = np.bincount(codes, weights = e.real, minlength = len(spectrum)) + 1j * np.bincount(codes, weights = e.imag, minlength = len(spectrum))
            for character, total in zip(spectrum, sums):
                result = result + len(spectrum) * total / size * character.projection
        return result

    def matrix(self, configuration = DEFAULT_CONFIGURATION):
        '''
        Provides φ as a matrix of shape (d*d, N) acting on value vectors, d*d rows in row-major order

        Exceptions raised:
            SizeCapExceededError if the matrix would have more than configuration.carrier_cap entries
        '''

        ext = self.extension
        carrier = ext.carrier
        dim = ext.context_category.ambient.dim
        size = len(carrier)
        if size * dim * dim > configuration.carrier_cap:
            raise SizeCapExceededError('ambient projection matrix', size * dim * dim, configuration.carrier_cap)
        columns = np.tile(-(len(carrier.labels) - 1) / size * np.eye(dim, dtype = complex).reshape(-1), (size, 1))
        for position, spectrum in enumerate(carrier.spectra):
            projections = np.array([character.projection.reshape(-1) for character in spectrum])
            columns = columns + len(spectrum) / size * projections[carrier.codes[:, position]]
        return columns.T

def ambient_projection(ext):
    return AmbientProjection(ext)

def context_cone(ext, label, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the cone with apex a context V over the arrow φ: A_ctx -> A, with legs ι_V into the extension and the inclusion i_V into the ambient algebra

    Maps are matrices on coordinates: the context in its orthonormal basis, the extension as value vectors and the
    ambient algebra as row-major flattened matrices. The cone commutes iff φ∘ι_V = i_V.

    Return values:
        the pair (Cone, Diagram) over LinearMaps
    '''

    context = ext.context(label)
    dim = context.dim
    index = FinCategory(
        ['A_ctx', 'A'],
        {('A_ctx', 'A_ctx'): ('id_A_ctx',), ('A', 'A'): ('id_A',), ('A_ctx', 'A'): ('phi',)},
        {('id_A_ctx', 'id_A_ctx'): 'id_A_ctx', ('id_A', 'id_A'): 'id_A', ('phi', 'id_A_ctx'): 'phi', ('id_A', 'phi'): 'phi'},
        {'A_ctx': 'id_A_ctx', 'A': 'id_A'},
        name = 'extension'
    )
    concrete = LinearMaps(max(configuration.tolerance, 1e-8))
    diagram = Diagram(index, {'A_ctx': ext.size, 'A': dim * dim}, {'phi': ambient_projection(ext).matrix(configuration)}, concrete)
    embedding = np.stack([embed(element, label, ext) for element in context.basis], axis = 1)
    inclusion = context.rows.T
    cone = Cone(context.dimension, {'A_ctx': embedding, 'A': inclusion}, FROM_APEX, name = f'context {label}')
    return cone, diagram

def element_table(ext, elements):
    '''
    Provides a DataFrame of element values indexed by the points of the carrier

    Keyword arguments:
        ext: ExtendedAlgebra -- the extension
        elements: dict -- column name -> value vector
    '''

    return pd.DataFrame({name: ext._check(values) for name, values in elements.items()}, index = ext.carrier.index)

def extension_to_dict(ext, state = None, elements = None):
    '''
    Provides a JSON-ready description of an extension: its contexts, points, and optionally a state's weights and element value tables
    '''

    carrier = ext.carrier
    data = {
        'contexts': list(carrier.labels),
        'sizes': list(carrier.sizes),
        'points': [{label: int(c) for label, c in zip(carrier.labels, row)} for row in carrier.codes.tolist()]
    }
    if state is not None:
        data['weights'] = [float(w) for w in state.weights]
        data['marginals'] = {label: [float(p) for p in marginal] for label, marginal in state.marginals.items()}
    if elements:
        data['elements'] = {name: [[float(v.real), float(v.imag)] for v in ext._check(values)] for name, values in elements.items()}
    return data
