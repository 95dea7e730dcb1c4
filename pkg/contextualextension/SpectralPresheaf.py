'''
Module for class SpectralPresheaf, the contravariant functor V -> Σ(V) on a context category, together with its global
sections, the inner and outer daseinisation of projections, interval approximations of operators and finite frames
'''

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
import itertools
import logging

import numpy as np
import pandas as pd

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.ContextualExtension import restriction_table
from contextualextension.Errors import DomainError, InputError, StructuralError
from contextualextension.FiniteCategory import FROM_APEX, FINITE_SETS, Cone, Diagram, FinCategory
from contextualextension.MatrixStarAlgebra import (
    MatrixStarAlgebra, as_square_matrix, context_category_from_groups, gelfand_spectrum, is_projection, is_self_adjoint,
    rank_one_projection
)
from contextualextension.ValidationReport import ValidationReport

__all__ = [
    'SpectralPresheaf',
    'GlobalSection',
    'FiniteFrame',
    'build_spectral_presheaf',
    'check_presheaf_functoriality',
    'global_sections',
    'ray_family_category',
    'has_parity_obstruction',
    'outer_daseinisation',
    'inner_daseinisation',
    'operator_interval',
    'daseinisation_table',
    'coarse_graining_cone',
    'preimage_map',
    'check_frame_hom'
]

logger = logging.getLogger(__name__)

class SpectralPresheaf:
    '''
    The spectral presheaf of a context category.

    Instance variables:
        base: ContextCategory -- the contexts
        fibers: tuple -- per context, its list of Character objects
        restrictions: dict -- (i, j) with contexts[i] ⊆ contexts[j] -> dict from character index of j to character index of i

    Public methods:
        __init__
        restrict
        degree
    '''

    def __init__(self, base, fibers, restrictions):
        self.base = base
        self.fibers = tuple(fibers)
        self.restrictions = dict(restrictions)

    def restrict(self, i, j, character):
        '''
        Provides the restriction to contexts[i] of a character index of contexts[j]
        '''

        if (i, j) not in self.restrictions:
            raise DomainError(f'context {self.base.labels[i]} is not included in context {self.base.labels[j]}')
        return self.restrictions[(i, j)][character]

    def degree(self, i):
        return sum(1 for pair in self.base.order if i in pair)

    def __repr__(self):
        return f'SpectralPresheaf(contexts = {list(self.base.labels)!r}, fibers = {[len(fiber) for fiber in self.fibers]!r})'

@dataclass(frozen = True)
class GlobalSection:
    '''
    A choice of one character per context, compatible with every restriction.

    Instance variables:
        assignment: tuple -- pairs (context label, character index), in context order
    '''

    assignment: tuple

    def as_dict(self):
        return dict(self.assignment)

def build_spectral_presheaf(cc, configuration = DEFAULT_CONFIGURATION):
    '''
    Builds the spectral presheaf of a context category

    Keyword arguments:
        cc: ContextCategory -- the contexts
        configuration: Configuration -- supplies tolerance and the spectrum settings

    Return values:
        a SpectralPresheaf whose restriction along V ⊆ V' sends a character of V' to the character of V whose projection dominates it

    Exceptions raised:
        DomainError if a context is not commutative
        InternalConsistencyError if a restriction is ill-defined
    '''

    fibers = [gelfand_spectrum(context, configuration) for context in cc.contexts]
    restrictions = {}
    for i in range(len(cc.contexts)):
        restrictions[(i, i)] = restriction_table(cc.contexts[i], cc.contexts[i], configuration.tolerance)
    for i, j in cc.inclusions():
        restrictions[(i, j)] = restriction_table(cc.contexts[i], cc.contexts[j], configuration.tolerance)
    logger.debug('spectral presheaf over %d contexts with %d inclusions', len(cc.contexts), len(cc.order))
    return SpectralPresheaf(cc, fibers, restrictions)

def check_presheaf_functoriality(p):
    '''
    Checks that restriction along an identity is the identity and that restrictions compose along every chain V ⊆ V' ⊆ V''
    '''

    report = ValidationReport('spectral presheaf')
    labels = p.base.labels
    for i, fiber in enumerate(p.fibers):
        if any(p.restrict(i, i, x) != x for x in range(len(fiber))):
            report.add('presheaf.identity', labels[i], 'restriction along the identity is not the identity')
    for (i, j), (j2, k) in itertools.product(p.base.inclusions(), repeat = 2):
        if j2 != j:
            continue
        for x in range(len(p.fibers[k])):
            if p.restrict(i, j, p.restrict(j, k, x)) != p.restrict(i, k, x):
                report.add('presheaf.composition', f'({labels[i]}, {labels[j]}, {labels[k]})', f'restrictions of character {x} disagree')
                break
    return report

def _search_order(p):
    return sorted(range(len(p.fibers)), key = lambda i: (-p.degree(i), i))

def _shared_lower_contexts(p):
    '''
    Provides, for each pair of contexts, the contexts included in both; assigning both already constrains those
    '''

    shared = {}
    for i, j in itertools.combinations(range(len(p.fibers)), 2):
        common = [k for k in range(len(p.fibers)) if k != i and k != j and (k, i) in p.base.order and (k, j) in p.base.order]
        if common:
            shared[(i, j)] = common
    return shared

def _backtrack(p, order, prefix, limit):
    position = {context: depth for depth, context in enumerate(order)}
    shared = _shared_lower_contexts(p)
    checks = [[] for _ in order]
    for i, j in p.base.order:
        checks[max(position[i], position[j])].append(('direct', i, j, None))
    for (i, j), common in shared.items():
        if (i, j) in p.base.order or (j, i) in p.base.order:
            continue
        checks[max(position[i], position[j])].append(('shared', i, j, common))
    sections = []
    assignment = {}
    nodes = [0]

    def consistent(depth):
        for kind, i, j, common in checks[depth]:
            if kind == 'direct':
                if p.restrict(i, j, assignment[j]) != assignment[i]:
                    return False
            elif any(p.restrict(k, i, assignment[i]) != p.restrict(k, j, assignment[j]) for k in common):
                return False
        return True

    def extend(depth):
        if limit is not None and len(sections) >= limit:
            return
        if depth == len(order):
            sections.append(GlobalSection(tuple((p.base.labels[i], assignment[i]) for i in range(len(order)))))
            return
        context = order[depth]
        choices = [prefix] if depth == 0 and prefix is not None else range(len(p.fibers[context]))
        for choice in choices:
            nodes[0] += 1
            assignment[context] = choice
            if consistent(depth):
                extend(depth + 1)
            del assignment[context]

    extend(0)
    return sections, nodes[0]

def global_sections(p, limit = None, configuration = DEFAULT_CONFIGURATION):
    '''
    Searches for global sections of a spectral presheaf, i.e. global valuations of its contexts

    Contexts are assigned most-constrained first (by number of inclusions they take part in, ties by context index).
    A partial assignment is pruned as soon as an inclusion between assigned contexts is violated, or two assigned
    contexts restrict differently to a context below both.

    Keyword arguments:
        p: SpectralPresheaf -- the presheaf
        limit: int -- the largest number of sections returned; None for all
        configuration: Configuration -- supplies threads; top-level branches run in parallel when threads > 1

    Return values:
        a list of GlobalSection objects; an empty list certifies a Kochen-Specker obstruction for the contexts

    Exceptions raised:
        none
    '''

    order = _search_order(p)
    if not order:
        return [GlobalSection(())]
    if configuration.threads > 1:
        with ThreadPoolExecutor(max_workers = configuration.threads) as executor:
            results = list(executor.map(lambda choice: _backtrack(p, order, choice, limit), range(len(p.fibers[order[0]]))))
    else:
        results = [_backtrack(p, order, None, limit)]
    sections = [section for found, _ in results for section in found]
    if limit is not None:
        sections = sections[:limit]
    logger.debug('global section search visited %d nodes and found %d sections', sum(nodes for _, nodes in results), len(sections))
    return sections

def ray_family_category(bases, configuration = DEFAULT_CONFIGURATION, labels = None):
    '''
    Builds the context category of a family of orthogonal bases: one maximal context per basis, generated by the projections onto its rays

    Keyword arguments:
        bases: list -- each a list of d vectors, unnormalized
        configuration: Configuration -- supplies tolerance

    Exceptions raised:
        InputError if a basis does not have d vectors of length d
        DomainError if the vectors of a basis are not pairwise orthogonal
    '''

    bases = [[np.asarray(vector, dtype = complex) for vector in basis] for basis in bases]
    if not bases:
        raise InputError('a ray family needs at least one basis')
    dim = len(bases[0][0])
    for b, basis in enumerate(bases):
        if len(basis) != dim or any(vector.shape != (dim,) for vector in basis):
            raise InputError(f'basis {b} does not have {dim} vectors of length {dim}')
        for u, v in itertools.combinations(basis, 2):
            if abs(np.vdot(u, v)) > configuration.tolerance:
                raise DomainError(f'vectors of basis {b} are not orthogonal')
    groups = [[rank_one_projection(vector) for vector in basis] for basis in bases]
    ambient = MatrixStarAlgebra.full_matrix_algebra(dim, configuration.tolerance)
    return context_category_from_groups(ambient, groups, configuration, labels = labels)

def has_parity_obstruction(bases):
    '''
    Provides True iff every ray occurs in an even number of bases while the number of bases is odd, which rules out any valuation
    '''

    counts = {}
    for basis in bases:
        for vector in basis:
            vector = np.asarray(vector, dtype = float)
            pivot = vector[np.flatnonzero(np.abs(vector) > 1e-12)[0]]
            key = tuple(np.round(vector / pivot, 9))
            counts[key] = counts.get(key, 0) + 1
    return len(bases) % 2 == 1 and all(count % 2 == 0 for count in counts.values())

def _check_projection(projection, dim, tolerance):
    projection = as_square_matrix(projection, dim)
    if not is_projection(projection, tolerance):
        raise DomainError('input is not a projection')
    return projection

def outer_daseinisation(projection, v, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the smallest projection of a context above a projection: the sum of the minimal projections q of the context with qP ≠ 0

    Exceptions raised:
        DomainError if the input is not a projection or the context is not commutative
    '''

    projection = _check_projection(projection, v.dim, configuration.tolerance)
    result = np.zeros((v.dim, v.dim), dtype = complex)
    for character in gelfand_spectrum(v, configuration):
        if float(np.linalg.norm(character.projection @ projection, 2)) > max(configuration.tolerance, 1e-8):
            result = result + character.projection
    return result

def inner_daseinisation(projection, v, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the largest projection of a context below a projection: the sum of the minimal projections q of the context with qP = q

    Exceptions raised:
        DomainError if the input is not a projection or the context is not commutative
    '''

    projection = _check_projection(projection, v.dim, configuration.tolerance)
    result = np.zeros((v.dim, v.dim), dtype = complex)
    for character in gelfand_spectrum(v, configuration):
        if float(np.linalg.norm(character.projection @ projection - character.projection, 2)) <= max(configuration.tolerance, 1e-8):
            result = result + character.projection
    return result

def _spectral_steps(a):
    '''
    Provides the distinct eigenvalues λ_1 < ... < λ_r of a self-adjoint matrix and the projections E((-∞, λ_k])
    '''

    eigenvalues, eigenvectors = np.linalg.eigh(a)
    gap = 1e-6 * max(1.0, float(np.max(np.abs(eigenvalues))))
    values = []
    steps = []
    for k in range(len(eigenvalues)):
        if k + 1 == len(eigenvalues) or eigenvalues[k + 1] - eigenvalues[k] > gap:
            values.append(float(eigenvalues[k]))
            columns = eigenvectors[:, :k + 1]
            steps.append(columns @ columns.conj().T)
    return values, steps

def _evaluate_steps(values, step_values):
    # the first step whose projection contains the character carries its value
    for value, step in zip(values, step_values):
        if step > 0.5:
            return value
    return values[-1]

def operator_interval(a, v, chi, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides the interval a character of a context assigns to a self-adjoint operator

    The lower end is the character's value on the inner approximation of the operator, built from the outer
    daseinisation of its spectral steps E((-∞, λ]); the upper end uses the inner daseinisation of the same steps.

    Keyword arguments:
        a: array-like -- a self-adjoint matrix
        v: MatrixStarAlgebra -- a commutative context
        chi: Character or int -- a character of v, or its index in the spectrum
        configuration: Configuration -- supplies tolerance

    Return values:
        the pair (lower, upper), lower <= upper

    Exceptions raised:
        DomainError if the matrix is not self-adjoint
    '''

    a = as_square_matrix(a, v.dim)
    if not is_self_adjoint(a, configuration.tolerance):
        raise DomainError('operator is not self-adjoint')
    if isinstance(chi, (int, np.integer)):
        chi = gelfand_spectrum(v, configuration)[chi]
    values, steps = _spectral_steps((a + a.conj().T) / 2)
    lower = _evaluate_steps(values, [chi.evaluate(outer_daseinisation(step, v, configuration)).real for step in steps])
    upper = _evaluate_steps(values, [chi.evaluate(inner_daseinisation(step, v, configuration)).real for step in steps])
    return lower, upper

def daseinisation_table(a, cc, configuration = DEFAULT_CONFIGURATION):
    '''
    Provides a DataFrame with the interval of a self-adjoint operator at every character of every context
    '''

    rows = []
    for label, context in zip(cc.labels, cc.contexts):
        for index, character in enumerate(gelfand_spectrum(context, configuration)):
            lower, upper = operator_interval(a, context, character, configuration)
            rows.append({'context': label, 'character': index, 'lower': lower, 'upper': upper})
    return pd.DataFrame(rows, columns = ['context', 'character', 'lower', 'upper'])

def coarse_graining_cone(p, v_small, v_large):
    '''
    Provides the cone with apex Σ(V) over the restriction Σ(V') -> Σ(V) for V ⊆ V': an identity leg into Σ(V) and a section of the restriction into Σ(V')

    Return values:
        the pair (Cone, Diagram) over finite sets

    Exceptions raised:
        DomainError if V is not included in V'
    '''

    i = p.base.index(v_small)
    j = p.base.index(v_large)
    if not p.base.is_included(i, j):
        raise DomainError(f'context {v_small} is not included in context {v_large}')
    restriction = p.restrictions[(i, j)]
    index = FinCategory(
        ['small', 'large'],
        {('small', 'small'): ('id_small',), ('large', 'large'): ('id_large',), ('large', 'small'): ('restrict',)},
        {('id_small', 'id_small'): 'id_small', ('id_large', 'id_large'): 'id_large', ('restrict', 'id_large'): 'restrict', ('id_small', 'restrict'): 'restrict'},
        {'small': 'id_small', 'large': 'id_large'},
        name = 'coarse_graining'
    )
    small_carrier = tuple(range(len(p.fibers[i])))
    large_carrier = tuple(range(len(p.fibers[j])))
    diagram = Diagram(index, {'small': small_carrier, 'large': large_carrier}, {'restrict': dict(restriction)}, FINITE_SETS)
    section = {x: min(y for y in large_carrier if restriction[y] == x) for x in small_carrier}
    cone = Cone(small_carrier, {'small': {x: x for x in small_carrier}, 'large': section}, FROM_APEX, name = f'{v_small} coarse-grains {v_large}')
    return cone, diagram

class FiniteFrame:
    '''
    A finite frame of open sets: a family of subsets of a finite set of points closed under unions and intersections, containing the empty set and the whole set.

    Instance variables:
        points: frozenset -- the underlying points
        opens: tuple -- the open sets, as frozensets

    Public methods:
        __init__
        powerset
        from_opens
        top
        bottom
        meet
        join
        check
    '''

    def __init__(self, points, opens):
        self.points = frozenset(points)
        self.opens = tuple(sorted({frozenset(u) for u in opens}, key = lambda u: (len(u), sorted(map(repr, u)))))
        for u in self.opens:
            if not u <= self.points:
                raise StructuralError(f'open set {set(u)} is not a subset of the points')

    @classmethod
    def powerset(cls, n):
        points = range(n)
        opens = [frozenset(subset) for size in range(n + 1) for subset in itertools.combinations(points, size)]
        return cls(points, opens)

    @classmethod
    def from_opens(cls, sets):
        '''
        Provides the frame generated by a family of sets under finite unions and intersections, with the empty set and the union of all sets added
        '''

        opens = {frozenset(u) for u in sets}
        points = frozenset().union(*opens) if opens else frozenset()
        opens |= {frozenset(), points}
        changed = True
        while changed:
            changed = False
            for u, w in itertools.combinations(list(opens), 2):
                for combined in (u | w, u & w):
                    if combined not in opens:
                        opens.add(combined)
                        changed = True
        return cls(points, opens)

    @property
    def top(self):
        return self.points

    @property
    def bottom(self):
        return frozenset()

    def meet(self, u, w):
        return frozenset(u) & frozenset(w)

    def join(self, u, w):
        return frozenset(u) | frozenset(w)

    def check(self):
        report = ValidationReport('finite frame')
        opens = set(self.opens)
        if self.top not in opens or self.bottom not in opens:
            report.add('presheaf.frame_bounds', 'frame', 'top or bottom is missing')
        for u, w in itertools.combinations(self.opens, 2):
            if self.join(u, w) not in opens or self.meet(u, w) not in opens:
                report.add('presheaf.frame_closure', f'({set(u)}, {set(w)})', 'join or meet is not open')
        return report

    def __repr__(self):
        return f'FiniteFrame(points = {len(self.points)}, opens = {len(self.opens)})'

def preimage_map(function, codomain_frame, domain_frame):
    '''
    Provides the frame homomorphism U -> f^{-1}(U) from the frame of the codomain of a function to the frame of its domain
    '''

    return {u: frozenset(x for x in domain_frame.points if function[x] in u) for u in codomain_frame.opens}

def check_frame_hom(f, source, target):
    '''
    Checks that a map between finite frames preserves top, bottom, binary meets and all joins

    Every join of a finite frame is a finite join, so binary joins together with the empty join cover them.

    Keyword arguments:
        f: dict -- open set of source -> open set of target
        source: FiniteFrame -- the source frame
        target: FiniteFrame -- the target frame

    Return values:
        a ValidationReport, empty iff f is a frame homomorphism
    '''

    report = ValidationReport('frame homomorphism')
    target_opens = set(target.opens)
    for u in source.opens:
        if u not in f:
            report.add('presheaf.frame_typing', set(u), 'open set is not mapped')
        elif frozenset(f[u]) not in target_opens:
            report.add('presheaf.frame_typing', set(u), 'image is not an open set of the target')
    if not report.is_valid:
        return report
    if frozenset(f[source.top]) != target.top:
        report.add('presheaf.frame_top', 'top', 'top is not preserved')
    if frozenset(f[source.bottom]) != target.bottom:
        report.add('presheaf.frame_join', 'bottom', 'the empty join is not preserved')
    for u, w in itertools.combinations(source.opens, 2):
        if frozenset(f[source.meet(u, w)]) != target.meet(f[u], f[w]):
            report.add('presheaf.frame_meet', f'({set(u)}, {set(w)})', 'meet is not preserved')
        if frozenset(f[source.join(u, w)]) != target.join(f[u], f[w]):
            report.add('presheaf.frame_join', f'({set(u)}, {set(w)})', 'join is not preserved')
    return report
