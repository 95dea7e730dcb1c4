'''
Module for class LocalNet, a toy net of local algebras on a chain of qubit sites, with the isotony, locality,
translation covariance and embedding checks of a net and of the extension built from its localized contexts
'''

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import functools
import itertools
import logging

import numpy as np

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.ContextualExtension import build_limit_extension, embed
from contextualextension.Errors import DomainError, InputError, SizeCapExceededError
from contextualextension.FiniteCategory import FROM_APEX, Cone, Diagram, FinCategory, LinearMaps, check_cone
from contextualextension.MatrixStarAlgebra import (
    ContextCategory, MatrixStarAlgebra, gelfand_spectrum, generate_algebra, is_commutative, pauli_string
)
from contextualextension.ValidationReport import ValidationReport

__all__ = [
    'Region',
    'LocalizedContext',
    'LocalNet',
    'check_isotony',
    'check_locality',
    'composite_context',
    'translation_automorphism',
    'check_translation_action',
    'check_covariance',
    'inductive_limit',
    'check_lc_square',
    'extension_of_contexts',
    'localized_extended_algebra',
    'check_extended_isotony'
]

logger = logging.getLogger(__name__)

@dataclass(frozen = True, order = True)
class Region:
    '''
    An interval of sites [start, stop] of a chain, both ends included.

    Instance variables:
        start: int -- first site
        stop: int -- last site
    '''

    start: int
    stop: int

    def __post_init__(self):
        if not 0 <= self.start <= self.stop:
            raise InputError(f'region [{self.start}, {self.stop}] is not an interval of sites')

    @property
    def size(self):
        return self.stop - self.start + 1

    def sites(self):
        return range(self.start, self.stop + 1)

    def contains(self, other):
        return self.start <= other.start and other.stop <= self.stop

    def is_disjoint(self, other):
        return self.stop < other.start or other.stop < self.start

    def translate(self, shift, chain_length, cyclic = True):
        '''
        Provides the region shifted by a number of sites, or None when a cyclic shift wraps it around the end of the chain

        Exceptions raised:
            DomainError if the shifted region leaves the chain and cyclic is False
        '''

        start, stop = self.start + shift, self.stop + shift
        if not cyclic:
            if start < 0 or stop >= chain_length:
                raise DomainError(f'region [{self.start}, {self.stop}] shifted by {shift} leaves the chain of {chain_length} sites')
            return Region(start, stop)
        start %= chain_length
        stop = start + self.size - 1
        return Region(start, stop) if stop < chain_length else None

    def __str__(self):
        return f'[{self.start},{self.stop}]'

@dataclass(frozen = True, eq = False)
class LocalizedContext:
    '''
    A commutative algebra together with the region it is localized in.

    Instance variables:
        label: str -- a unique name
        region: Region -- the region
        algebra: MatrixStarAlgebra -- a commutative subalgebra of the local algebra of the region
    '''

    label: str
    region: Region
    algebra: MatrixStarAlgebra

def _pauli_rows(chain_length, region, letters):
    rows = []
    for word in itertools.product(letters, repeat = region.size):
        labels = 'i' * region.start + ''.join(word) + 'i' * (chain_length - region.stop - 1)
        rows.append(pauli_string(labels).reshape(-1))
    return np.array(rows) / np.sqrt(2 ** chain_length)

class LocalNet:
    '''
    An assignment of algebras on (C²)^⊗L to the intervals of a chain of L sites.

    Instance variables:
        chain_length: int -- the number of sites L
        configuration: Configuration -- the tolerance and caps of the net's checks
        _algebras: dict -- Region -> MatrixStarAlgebra

    Public methods:
        __init__
        standard
        diagonal
        from_generators
        dim
        regions
        algebra
        with_algebra
        local_operator
        site_context
    '''

    def __init__(self, chain_length, algebras, configuration = DEFAULT_CONFIGURATION):
        '''
        Initializes a LocalNet object

        Keyword arguments:
            chain_length: int -- the number of sites
            algebras: dict -- Region -> MatrixStarAlgebra, one per interval of the chain
            configuration: Configuration -- supplies tolerance and dimension_cap

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            InputError if the chain is empty or an interval has no algebra, or a region leaves the chain
            SizeCapExceededError if 2**chain_length exceeds configuration.dimension_cap
        '''

        if chain_length < 1:
            raise InputError('a chain needs at least one site')
        if 2 ** chain_length > configuration.dimension_cap:
            raise SizeCapExceededError('chain dimension', 2 ** chain_length, configuration.dimension_cap)
        self.chain_length = chain_length
        self.configuration = configuration
        self._algebras = dict(algebras)
        missing = [str(region) for region in self.regions() if region not in self._algebras]
        if missing:
            raise InputError(f'regions {missing} have no algebra')
        outside = sorted(str(region) for region in self._algebras if region.stop >= chain_length)
        if outside:
            raise InputError(f'regions {outside} leave the chain of {chain_length} sites')

    @classmethod
    def standard(cls, chain_length, configuration = DEFAULT_CONFIGURATION):
        '''
        Provides the net assigning to an interval the full matrix algebra on its sites tensored with the identity elsewhere
        '''

        if 2 ** chain_length > configuration.dimension_cap:
            raise SizeCapExceededError('chain dimension', 2 ** chain_length, configuration.dimension_cap)
        algebras = {
            region: MatrixStarAlgebra.from_rows(_pauli_rows(chain_length, region, 'ixyz'), 2 ** chain_length, configuration.tolerance, name = f'A{region}')
            for region in cls._intervals(chain_length)
        }
        return cls(chain_length, algebras, configuration)

    @classmethod
    def diagonal(cls, chain_length, configuration = DEFAULT_CONFIGURATION):
        '''
        Provides the net assigning to an interval the diagonal matrices that act on its sites only
        '''

        if 2 ** chain_length > configuration.dimension_cap:
            raise SizeCapExceededError('chain dimension', 2 ** chain_length, configuration.dimension_cap)
        algebras = {
            region: MatrixStarAlgebra.from_rows(_pauli_rows(chain_length, region, 'iz'), 2 ** chain_length, configuration.tolerance, name = f'D{region}')
            for region in cls._intervals(chain_length)
        }
        return cls(chain_length, algebras, configuration)

    @classmethod
    def from_generators(cls, chain_length, mapping, configuration = DEFAULT_CONFIGURATION):
        '''
        Provides the standard net with the algebras of some regions replaced by the algebras generated by given matrices

        Keyword arguments:
            mapping: dict -- Region or (start, stop) -> list of 2**L × 2**L matrices
        '''

        net = cls.standard(chain_length, configuration)
        for key, generators in mapping.items():
            region = key if isinstance(key, Region) else Region(*key)
            net = net.with_algebra(region, generate_algebra(generators, net.dim, configuration, name = f'G{region}'))
        return net

    @staticmethod
    def _intervals(chain_length):
        return [Region(start, stop) for start in range(chain_length) for stop in range(start, chain_length)]

    @property
    def dim(self):
        return 2 ** self.chain_length

    def regions(self):
        return self._intervals(self.chain_length)

    def algebra(self, region):
        if region not in self._algebras:
            raise InputError(f'region {region} is not an interval of the chain')
        return self._algebras[region]

    def with_algebra(self, region, algebra):
        algebras = dict(self._algebras)
        algebras[region] = algebra
        return LocalNet(self.chain_length, algebras, self.configuration)

    def local_operator(self, region, matrix):
        '''
        Provides the operator on the chain acting as matrix on the sites of region and as the identity elsewhere
        '''

        matrix = np.asarray(matrix, dtype = complex)
        if matrix.shape != (2 ** region.size, 2 ** region.size):
            raise InputError(f'matrix of shape {matrix.shape} does not act on region {region}')
        return functools.reduce(np.kron, [np.eye(2 ** region.start), matrix, np.eye(2 ** (self.chain_length - region.stop - 1))])

    def site_context(self, site, letter, label = None):
        '''
        Provides the context generated by one Pauli matrix at one site
        '''

        region = Region(site, site)
        algebra = generate_algebra([self.local_operator(region, pauli_string(letter))], self.dim, self.configuration, name = label or f'{letter}{site}')
        return LocalizedContext(label or f'{letter}{site}', region, algebra)

    def __repr__(self):
        return f'LocalNet(chain_length = {self.chain_length})'

def check_isotony(net):
    '''
    Checks that A_V ⊆ A_U whenever the interval V is contained in the interval U
    '''

    report = ValidationReport(f'isotony of {net!r}')
    for small, large in itertools.permutations(net.regions(), 2):
        if large.contains(small) and not net.algebra(large).contains_algebra(net.algebra(small)):
            report.add('locnet.isotony', f'({small}, {large})', f'algebra of {small} is not contained in algebra of {large}')
    return report

def _maximal_commutator(first, second):
    products = np.einsum('aij,bjk->abik', first.basis, second.basis)
    reversed_products = np.einsum('bij,ajk->abik', second.basis, first.basis)
    if products.size == 0:
        return 0.0
    return float(np.max(np.linalg.norm(products - reversed_products, axis = (2, 3))))

def check_locality(net):
    '''
    Checks that the algebras of every pair of disjoint intervals commute; overlapping pairs are not space-like and are skipped
    '''

    report = ValidationReport(f'locality of {net!r}')
    pairs = [(first, second) for first, second in itertools.combinations(net.regions(), 2) if first.is_disjoint(second)]
    compute = lambda pair: _maximal_commutator(net.algebra(pair[0]), net.algebra(pair[1]))
    if net.configuration.threads > 1:
        with ThreadPoolExecutor(max_workers = net.configuration.threads) as executor:
            norms = list(executor.map(compute, pairs))
    else:
        norms = [compute(pair) for pair in pairs]
    logger.debug('checked %d space-like pairs', len(pairs))
    for (first, second), norm in zip(pairs, norms):
        if norm > net.configuration.tolerance:
            report.add('locnet.locality', f'({first}, {second})', f'algebras do not commute (commutator norm {norm:.3g})')
    return report

def composite_context(components, net):
    '''
    Provides the commutative algebra generated by contexts localized in pairwise disjoint regions

    Keyword arguments:
        components: list -- pairs (Region, MatrixStarAlgebra) or LocalizedContext objects
        net: LocalNet -- the net whose local algebras must contain the contexts

    Return values:
        a MatrixStarAlgebra whose dimension is the product of the dimensions of the components

    Exceptions raised:
        DomainError if two regions overlap, a component is not commutative or a component leaves its region's algebra
    '''

    components = [(c.region, c.algebra) if isinstance(c, LocalizedContext) else tuple(c) for c in components]
    for (first, _), (second, _) in itertools.combinations(components, 2):
        if not first.is_disjoint(second):
            raise DomainError(f'regions {first} and {second} are not causally separated')
    generators = []
    for region, algebra in components:
        if not is_commutative(algebra):
            raise DomainError(f'context in region {region} is not commutative')
        if not net.algebra(region).contains_algebra(algebra):
            raise DomainError(f'context lies outside the algebra of region {region}')
        generators.extend(algebra.basis)
    name = '*'.join(str(region) for region, _ in components)
    return generate_algebra(generators, net.dim, net.configuration, name = name)

def translation_automorphism(chain_length, shift):
    '''
    Provides the permutation unitary U moving site s to site s + shift (mod L); α_g(A) = U A U†
    '''

    indices = np.arange(2 ** chain_length)
    bits = (indices[:, None] >> (chain_length - 1 - np.arange(chain_length))) & 1
    shifted_bits = np.zeros_like(bits)
    shifted_bits[:, (np.arange(chain_length) + shift) % chain_length] = bits
    shifted_indices = shifted_bits @ (1 << (chain_length - 1 - np.arange(chain_length)))
    unitary = np.zeros((2 ** chain_length, 2 ** chain_length), dtype = complex)
    unitary[shifted_indices, indices] = 1
    return unitary

def check_translation_action(chain_length, configuration = DEFAULT_CONFIGURATION):
    '''
    Checks that every translation is a *-automorphism of the chain algebra and that g -> α_g is an action of the cyclic group
    '''

    report = ValidationReport(f'translations of a chain of {chain_length} sites')
    unitaries = [translation_automorphism(chain_length, shift) for shift in range(chain_length)]
    identity = np.eye(2 ** chain_length)
    if np.max(np.abs(unitaries[0] - identity)) > configuration.tolerance:
        report.add('locnet.translation_group', 'shift 0', 'the zero shift is not the identity')
    for g, unitary in enumerate(unitaries):
        if np.max(np.abs(unitary @ unitary.conj().T - identity)) > configuration.tolerance:
            report.add('locnet.translation_automorphism', f'shift {g}', 'translation is not unitary')
        for h, other in enumerate(unitaries):
            if np.max(np.abs(unitaries[(g + h) % chain_length] - unitary @ other)) > configuration.tolerance:
                report.add('locnet.translation_group', f'({g}, {h})', 'α_{g+h} differs from α_g∘α_h')
    for site, letter in itertools.product(range(chain_length), 'xyz'):
        labels = ['i'] * chain_length
        labels[site] = letter
        moved = ['i'] * chain_length
        moved[(site + 1) % chain_length] = letter
        image = unitaries[1 % chain_length] @ pauli_string(''.join(labels)) @ unitaries[1 % chain_length].conj().T
        if np.max(np.abs(image - pauli_string(''.join(moved)))) > configuration.tolerance:
            report.add('locnet.translation_automorphism', f'{letter}{site}', 'translation does not move the site operator')
    return report

def _context_category_of(contexts, dim, configuration):
    ambient = MatrixStarAlgebra.full_matrix_algebra(dim, configuration.tolerance)
    return ContextCategory(ambient, [c.algebra for c in contexts], [c.label for c in contexts], [list(c.algebra.basis) for c in contexts])

def extension_of_contexts(net, contexts, configuration = None):
    '''
    Provides the extension built from a family of localized contexts, one carrier factor per context label

    Exceptions raised:
        SizeCapExceededError if the carrier exceeds configuration.carrier_cap
    '''

    configuration = configuration or net.configuration
    return build_limit_extension(_context_category_of(contexts, net.dim, configuration), configuration)

def check_covariance(net, shift, contexts, cyclic = True):
    '''
    Checks that a translation maps every localized context onto a context of the family, and that the induced
    permutation of the product spectrum intertwines the embeddings: α′_g ∘ embed_V = embed_{g(V)} ∘ α_g

    Keyword arguments:
        net: LocalNet -- the net
        shift: int -- the number of sites to translate by
        contexts: list -- LocalizedContext objects
        cyclic: bool -- whether translations wrap around the chain

    Return values:
        a ValidationReport naming every context without a translated counterpart

    Exceptions raised:
        DomainError if cyclic is False and a shifted region leaves the chain
    '''

    configuration = net.configuration
    report = ValidationReport(f'covariance under shift {shift}')
    unitary = translation_automorphism(net.chain_length, shift)
    images = {}
    for context in contexts:
        image_region = context.region.translate(shift, net.chain_length, cyclic)
        image_algebra = MatrixStarAlgebra([unitary @ element @ unitary.conj().T for element in context.algebra.basis], net.dim, configuration.tolerance)
        matches = [
            other for other in contexts
            if other.algebra.span_equal(image_algebra) and (image_region is None or other.region == image_region)
        ]
        if not matches:
            report.add('locnet.covariance', context.label, f'context {context.label} has no translated counterpart in the family')
        else:
            images[context.label] = matches[0]
    if not report.is_valid:
        return report
    ext = extension_of_contexts(net, contexts, configuration)
    carrier = ext.carrier
    # character maps σ_V: Σ(V) -> Σ(g(V)) with P_σ(χ) = U P_χ U†
    character_maps = {}
    for context in contexts:
        image = images[context.label]
        image_spectrum = gelfand_spectrum(image.algebra, configuration)
        mapping = []
        for character in gelfand_spectrum(context.algebra, configuration):
            moved = unitary @ character.projection @ unitary.conj().T
            found = [k for k, other in enumerate(image_spectrum) if np.max(np.abs(other.projection - moved)) <= max(configuration.tolerance, 1e-8)]
            if len(found) != 1:
                report.add('locnet.covariance', context.label, 'translated character is not a character of the image context')
                return report
            mapping.append(found[0])
        character_maps[context.label] = mapping
    image_codes = np.empty_like(carrier.codes)
    for context in contexts:
        image_codes[:, carrier.position(images[context.label].label)] = np.array(character_maps[context.label])[carrier.marginal_codes(context.label)]
    permutation = np.ravel_multi_index(tuple(image_codes.T), carrier.sizes)
    for context in contexts:
        image = images[context.label]
        for b, element in enumerate(context.algebra.basis):
            transported = np.empty(ext.size, dtype = complex)
            transported[permutation] = embed(element, context.label, ext)
            expected = embed(unitary @ element @ unitary.conj().T, image.label, ext)
            if np.max(np.abs(transported - expected)) > max(configuration.tolerance, 1e-8):
                report.add('locnet.extended_covariance', f'{context.label}[{b}]', 'α′_g∘embed differs from embed∘α_g')
    return report

def inductive_limit(net):
    '''
    Provides the algebra generated by every local algebra of the net
    '''

    generators = [element for region in net.regions() for element in net.algebra(region).basis]
    return generate_algebra(generators, net.dim, net.configuration, name = 'A(M)')

def _standalone_embedding(sub, whole):
    '''
    Provides the matrix of A -> I ⊗ A ⊗ I from the matrices on the sites of sub to those on the sites of whole, on row-major entries
    '''

    left = np.eye(2 ** (sub.start - whole.start))
    right = np.eye(2 ** (whole.stop - sub.stop))
    size = 2 ** sub.size
    columns = []
    for unit in np.eye(size * size):
        columns.append(functools.reduce(np.kron, [left, unit.reshape(size, size), right]).reshape(-1))
    return np.array(columns, dtype = complex).T

def _net_realization(net, region):
    '''
    Provides the map from matrices on the sites of region to coordinates of the net's algebra of region
    '''

    algebra = net.algebra(region)
    size = 2 ** region.size
    columns = []
    for unit in np.eye(size * size):
        local = net.local_operator(region, unit.reshape(size, size)).reshape(-1)
        columns.append(algebra.rows.conj() @ local)
    return np.array(columns).T

def check_lc_square(sub, whole, net):
    '''
    Checks the square F(sub) -> F(whole) -> A_whole against F(sub) -> A_sub -> A_whole, where F(U) is the matrix algebra on the sites of U

    The square is checked as a cone with apex F(sub) over the cospan F(whole) -> A_whole <- A_sub of linear maps.

    Exceptions raised:
        DomainError if sub is not contained in whole
    '''

    if not whole.contains(sub):
        raise DomainError(f'region {sub} is not contained in region {whole}')
    sub_algebra = net.algebra(sub)
    whole_algebra = net.algebra(whole)
    index = FinCategory(
        ['F_whole', 'A_sub', 'A_whole'],
        {
            ('F_whole', 'F_whole'): ('id_F_whole',),
            ('A_sub', 'A_sub'): ('id_A_sub',),
            ('A_whole', 'A_whole'): ('id_A_whole',),
            ('F_whole', 'A_whole'): ('realize',),
            ('A_sub', 'A_whole'): ('include',)
        },
        {
            ('id_F_whole', 'id_F_whole'): 'id_F_whole',
            ('id_A_sub', 'id_A_sub'): 'id_A_sub',
            ('id_A_whole', 'id_A_whole'): 'id_A_whole',
            ('realize', 'id_F_whole'): 'realize',
            ('id_A_whole', 'realize'): 'realize',
            ('include', 'id_A_sub'): 'include',
            ('id_A_whole', 'include'): 'include'
        },
        {'F_whole': 'id_F_whole', 'A_sub': 'id_A_sub', 'A_whole': 'id_A_whole'},
        name = 'locally covariant square'
    )
    realize_whole = _net_realization(net, whole)
    include = whole_algebra.rows.conj() @ sub_algebra.rows.T
    diagram = Diagram(
        index,
        {'F_whole': 4 ** whole.size, 'A_sub': sub_algebra.dimension, 'A_whole': whole_algebra.dimension},
        {'realize': realize_whole, 'include': include},
        LinearMaps(max(net.configuration.tolerance, 1e-8))
    )
    embedding = _standalone_embedding(sub, whole)
    legs = {'F_whole': embedding, 'A_sub': _net_realization(net, sub), 'A_whole': realize_whole @ embedding}
    cone = Cone(4 ** sub.size, legs, FROM_APEX, name = f'F{sub}')
    report = check_cone(cone, diagram)
    if not report.is_valid:
        failed = ValidationReport(f'locally covariant square {sub} -> {whole}')
        for violation in report.violations:
            failed.add('locnet.lc_square', f'({sub}, {whole}) {violation.location}', violation.message)
        return failed
    return report

def localized_extended_algebra(region, contexts, ext):
    '''
    Provides a basis of A′_U, the carrier functions that depend only on the contexts localized in region

    The basis is the indicator functions of the joint values of the localized contexts; with no context inside the
    region it is the constant function.

    Keyword arguments:
        region: Region -- the region U
        contexts: list -- LocalizedContext objects whose labels are factors of the carrier
        ext: ExtendedAlgebra -- the extension

    Return values:
        an array of shape (dimension of A′_U, number of carrier points)

    Side effects:
        none

    Exceptions raised:
        InputError if a context label is not a factor of the carrier

    Restrictions on when this function can be called:
        none
    '''

    carrier = ext.carrier
    positions = [carrier.position(c.label) for c in contexts if region.contains(c.region)]
    if not positions:
        return np.ones((1, len(carrier)))
    keys = carrier.codes[:, positions]
    return np.array([np.all(keys == key, axis = 1) for key in np.unique(keys, axis = 0)], dtype = float)

def _outside_span(basis, function, tolerance):
    function = np.asarray(function, dtype = complex)
    if len(basis) == 0:
        return float(np.linalg.norm(function)) > tolerance
    basis = np.asarray(basis, dtype = complex)
    coefficients = np.linalg.lstsq(basis.T, function, rcond = None)[0]
    return float(np.linalg.norm(basis.T @ coefficients - function)) > tolerance

def check_extended_isotony(net, contexts, configuration = None, localized = None):
    '''
    Checks the localized subalgebras A′_U of the extension built from localized contexts

    Every function of A′_U must be constant along the contexts localized outside U, the embedding of every context
    localized in U must lie in A′_U, and A′_V ⊆ A′_U whenever V ⊆ U. Each context must also lie in the net's algebra of
    its region.

    Keyword arguments:
        net: LocalNet -- the net
        contexts: list -- LocalizedContext objects
        configuration: Configuration -- supplies tolerance and carrier_cap; the net's by default
        localized: dict -- Region -> sequence of carrier functions spanning A′_U; regions left out get
            localized_extended_algebra

    Return values:
        a ValidationReport with locnet.context_localization, locnet.extended_localization, locnet.extended_generation
        and locnet.extended_isotony violations

    Side effects:
        none

    Exceptions raised:
        InputError if a localized function is not defined on the carrier
        SizeCapExceededError if the carrier exceeds configuration.carrier_cap

    Restrictions on when this function can be called:
        none
    '''

    configuration = configuration or net.configuration
    tolerance = max(configuration.tolerance, 1e-8)
    report = ValidationReport('isotony of the extension')
    for context in contexts:
        if not net.algebra(context.region).contains_algebra(context.algebra):
            report.add('locnet.context_localization', context.label, f'context leaves the algebra of region {context.region}')
    ext = extension_of_contexts(net, contexts, configuration)
    sizes = ext.carrier.sizes
    localized = dict(localized or {})
    algebras = {}
    for region in net.regions():
        if region in localized:
            given = [np.asarray(f) for f in localized[region]]
            if any(f.shape != (len(ext.carrier),) for f in given):
                raise InputError(f'a function of A′{region} is not defined on a carrier of {len(ext.carrier)} points')
            functions = np.array(given, dtype = complex).reshape(len(given), len(ext.carrier))
        else:
            functions = localized_extended_algebra(region, contexts, ext).astype(complex)
        algebras[region] = functions
        inside = {c.label for c in contexts if region.contains(c.region)}
        outside_axes = tuple(p for p, label in enumerate(ext.carrier.labels) if label not in inside)
        for k, function in enumerate(functions):
            values = function.reshape(sizes)
            anchor = values[tuple(slice(0, 1) if p in outside_axes else slice(None) for p in range(len(sizes)))]
            if outside_axes and float(np.max(np.abs(values - anchor))) > tolerance:
                report.add('locnet.extended_localization', str(region), f'function {k} of A′{region} depends on a context localized outside {region}')
        for context in contexts:
            if not region.contains(context.region):
                continue
            for element in context.algebra.basis:
                if _outside_span(functions, embed(element, context.label, ext), tolerance):
                    report.add('locnet.extended_generation', str(region), f'embedding of {context.label} is missing from A′{region}')
                    break
    for small, large in itertools.permutations(net.regions(), 2):
        if not large.contains(small):
            continue
        for k, function in enumerate(algebras[small]):
            if _outside_span(algebras[large], function, tolerance):
                report.add('locnet.extended_isotony', f'({small}, {large})', f'function {k} of A′{small} is not in A′{large}')
                break
    return report
