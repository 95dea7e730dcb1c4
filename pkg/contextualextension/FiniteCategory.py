'''
Module for class FinCategory, an explicit finite category given by composition tables, and for
the functors, diagrams and cones built on it. Limits of finite-set-valued diagrams are computed
by enumerating compatible families, and their universal property is checked by exhaustive search.
'''

from dataclasses import dataclass, field
import itertools
import logging

import graphviz
import numpy as np

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.Errors import DomainError, SizeCapExceededError, StructuralError
from contextualextension.ValidationReport import ValidationReport

__all__ = [
    'FinCategory',
    'Functor',
    'Diagram',
    'Cone',
    'FiniteSets',
    'LinearMaps',
    'FINITE_SETS',
    'FROM_APEX',
    'TO_APEX',
    'check_category',
    'check_functor',
    'check_diagram',
    'check_cone',
    'compose_functors',
    'identity_functor',
    'opposite',
    'poset_category',
    'discrete_category',
    'limit_of_diagram',
    'enumerate_cones',
    'check_universal_property',
    'category_to_dot',
    'cone_to_dot'
]

logger = logging.getLogger(__name__)

FROM_APEX = 'from_apex'
TO_APEX = 'to_apex'

class FinCategory:
    '''
    An explicit finite category.

    Morphisms are opaque labels that are unique across all hom-sets. Composition is a table
    keyed by (g, f) whose value is the label of g∘f.

    Instance variables:
        name: str -- a display name
        objects: tuple -- object labels
        homs: dict -- (source, target) -> tuple of morphism labels
        composition_table: dict -- (g, f) -> label of g∘f
        identities: dict -- object -> label of its identity morphism

    Public methods:
        __init__
        morphisms
        source
        target
        hom
        compose
        composable_pairs
        non_identity_morphisms
    '''

    def __init__(self, objects, homs, compose, identities, name = 'C'):
        '''
        Initializes a FinCategory object and indexes the source and target of every morphism

        Keyword arguments:
            objects: iterable -- object labels
            homs: dict -- (source, target) -> iterable of morphism labels
            compose: dict -- (g, f) -> label of g∘f
            identities: dict -- object -> identity label
            name: str -- a display name

        Return values:
            none

        Side effects:
            Stores the tables and builds the source and target indices

        Exceptions raised:
            StructuralError if a hom-set mentions an unknown object, a label occurs in two hom-sets, or an identity is missing or outside its endo-hom-set
        '''

        self.name = name
        self.objects = tuple(objects)
        object_set = set(self.objects)
        if len(object_set) != len(self.objects):
            raise StructuralError('object labels must be unique')
        self.homs = {}
        self._endpoints = {}
        for (source, target), labels in homs.items():
            if source not in object_set or target not in object_set:
                raise StructuralError(f'hom-set ({source!r}, {target!r}) mentions an unknown object')
            labels = tuple(labels)
            self.homs[(source, target)] = labels
            for label in labels:
                if label in self._endpoints:
                    raise StructuralError(f'morphism {label!r} occurs in two hom-sets')
                self._endpoints[label] = (source, target)
        self.composition_table = dict(compose)
        self.identities = dict(identities)
        for obj in self.objects:
            if obj not in self.identities:
                raise StructuralError(f'object {obj!r} has no identity morphism')
            if self._endpoints.get(self.identities[obj]) != (obj, obj):
                raise StructuralError(f'identity of {obj!r} is not a morphism {obj!r} -> {obj!r}')

    @property
    def morphisms(self):
        return tuple(self._endpoints)

    def source(self, morphism):
        return self._endpoint(morphism)[0]

    def target(self, morphism):
        return self._endpoint(morphism)[1]

    def _endpoint(self, morphism):
        try:
            return self._endpoints[morphism]
        except KeyError:
            raise StructuralError(f'unknown morphism {morphism!r} in category {self.name}') from None

    def hom(self, source, target):
        return self.homs.get((source, target), ())

    def compose(self, g, f):
        '''
        Provides the label of g∘f

        Exceptions raised:
            StructuralError if f and g are not composable or the table has no entry for the pair
        '''

        if self.target(f) != self.source(g):
            raise StructuralError(f'morphisms ({g!r}, {f!r}) are not composable')
        try:
            return self.composition_table[(g, f)]
        except KeyError:
            raise StructuralError(f'composition table has no entry for the pair ({g!r}, {f!r})') from None

    def composable_pairs(self):
        '''
        Yields every pair (g, f) with target(f) = source(g)
        '''

        for f in self.morphisms:
            for g in self.morphisms:
                if self.target(f) == self.source(g):
                    yield g, f

    def non_identity_morphisms(self):
        identity_labels = set(self.identities.values())
        return tuple(morphism for morphism in self.morphisms if morphism not in identity_labels)

    def __repr__(self):
        return f'FinCategory(name = {self.name!r}, objects = {len(self.objects)}, morphisms = {len(self._endpoints)})'

def _check_composition_table(c):
    for g, f in c.composable_pairs():
        composite = c.compose(g, f)
        if composite not in c._endpoints:
            raise StructuralError(f'composite of the pair ({g!r}, {f!r}) is the unknown morphism {composite!r}')
        if c._endpoints[composite] != (c.source(f), c.target(g)):
            raise StructuralError(f'composite of the pair ({g!r}, {f!r}) points to the wrong hom-set ({c.source(composite)!r}, {c.target(composite)!r})')

def check_category(c):
    '''
    Checks the identity laws and associativity of a finite category exhaustively

    Keyword arguments:
        c: FinCategory -- the category to check

    Return values:
        a ValidationReport listing every violated identity or associativity instance

    Exceptions raised:
        StructuralError naming the pair if a composite is missing from the table or lies in the wrong hom-set

    Restrictions on when this function can be called:
        none
    '''

    _check_composition_table(c)
    report = ValidationReport(f'category {c.name}')
    for f in c.morphisms:
        left_identity = c.identities[c.target(f)]
        right_identity = c.identities[c.source(f)]
        if c.compose(left_identity, f) != f:
            report.add('fincat.identity_law', f'({left_identity}, {f})', 'id∘f differs from f')
        if c.compose(f, right_identity) != f:
            report.add('fincat.identity_law', f'({f}, {right_identity})', 'f∘id differs from f')
    for f in c.morphisms:
        for g in c.morphisms:
            if c.target(f) != c.source(g):
                continue
            g_after_f = c.compose(g, f)
            for h in c.morphisms:
                if c.target(g) != c.source(h):
                    continue
                if c.compose(h, g_after_f) != c.compose(c.compose(h, g), f):
                    report.add('fincat.associativity', f'({h}, {g}, {f})', 'h∘(g∘f) differs from (h∘g)∘f')
    return report

def opposite(c):
    '''
    Provides the opposite category: the same labels with every arrow formally reversed. Reversed arrows are not required to be invertible.
    '''

    reversed_homs = {(target, source): labels for (source, target), labels in c.homs.items()}
    reversed_composition = {}
    for g, f in c.composable_pairs():
        # f: a -> b, g: b -> c in c; in the opposite category f∘g is defined with value g∘f
        reversed_composition[(f, g)] = c.compose(g, f)
    return FinCategory(c.objects, reversed_homs, reversed_composition, c.identities, name = f'{c.name}^op')

def poset_category(elements, less_or_equal, name = 'P'):
    '''
    Provides the category of a finite partially ordered set, with one morphism a<=b whenever less_or_equal(a, b)

    Keyword arguments:
        elements: iterable -- the elements, used as object labels
        less_or_equal: callable -- the order relation
        name: str -- a display name

    Return values:
        a FinCategory whose morphism labels are strings 'a<=b'
    '''

    elements = tuple(elements)
    homs = {}
    for a in elements:
        for b in elements:
            if a == b or less_or_equal(a, b):
                homs[(a, b)] = (f'{a}<={b}',)
    composition = {}
    for (a, b), (f,) in homs.items():
        for (b2, c), (g,) in homs.items():
            if b2 == b:
                composition[(g, f)] = f'{a}<={c}'
    identities = {a: f'{a}<={a}' for a in elements}
    return FinCategory(elements, homs, composition, identities, name = name)

def discrete_category(objects, name = 'D'):
    '''
    Provides the category whose only morphisms are identities
    '''

    objects = tuple(objects)
    return poset_category(objects, lambda a, b: False, name = name)

class Functor:
    '''
    A functor between two finite categories, given by its object and morphism maps.

    Instance variables:
        source: FinCategory
        target: FinCategory
        object_map: dict -- source object -> target object
        morphism_map: dict -- source morphism -> target morphism

    Public methods:
        __init__
        map_object
        map_morphism
    '''

    def __init__(self, source, target, object_map, morphism_map, name = 'F'):
        '''
        Initializes a Functor object

        Keyword arguments:
            source: FinCategory -- the domain category
            target: FinCategory -- the codomain category
            object_map: dict -- source object -> target object
            morphism_map: dict -- source morphism -> target morphism
            name: str -- a name used in messages

        Return values:
            none

        Side effects:
            Copies both maps

        Exceptions raised:
            none

        Restrictions on when this method can be called:
            none; check_functor verifies the maps
        '''

        self.source = source
        self.target = target
        self.object_map = dict(object_map)
        self.morphism_map = dict(morphism_map)
        self.name = name

    def map_object(self, obj):
        '''
        Provides the image of an object of the source category

        Keyword arguments:
            obj: an object of the source category

        Return values:
            the target object

        Side effects:
            none

        Exceptions raised:
            StructuralError if the object map leaves obj out

        Restrictions on when this method can be called:
            none
        '''

        try:
            return self.object_map[obj]
        except KeyError:
            raise StructuralError(f'functor {self.name} does not map the object {obj!r}') from None

    def map_morphism(self, morphism):
        '''
        Provides the image of a morphism of the source category

        Exceptions raised:
            StructuralError if the morphism map leaves morphism out
        '''

        try:
            return self.morphism_map[morphism]
        except KeyError:
            raise StructuralError(f'functor {self.name} does not map the morphism {morphism!r}') from None

    def __repr__(self):
        return f'Functor(name = {self.name!r}, source = {self.source.name!r}, target = {self.target.name!r})'

def identity_functor(c):
    return Functor(c, c, {obj: obj for obj in c.objects}, {morphism: morphism for morphism in c.morphisms}, name = f'id_{c.name}')

def compose_functors(g, f):
    '''
    Provides the composite functor g∘f

    Exceptions raised:
        StructuralError if the target of f is not the source of g or a map is incomplete
    '''

    if f.target is not g.source:
        raise StructuralError(f'functors ({g.name}, {f.name}) are not composable')
    object_map = {obj: g.map_object(f.map_object(obj)) for obj in f.source.objects}
    morphism_map = {morphism: g.map_morphism(f.map_morphism(morphism)) for morphism in f.source.morphisms}
    return Functor(f.source, g.target, object_map, morphism_map, name = f'{g.name}∘{f.name}')

def check_functor(f):
    '''
    Checks that a functor maps every object and morphism, respects sources and targets, and preserves identities and all composites

    Keyword arguments:
        f: Functor -- the functor to check

    Return values:
        a ValidationReport, empty iff the functor laws hold

    Exceptions raised:
        StructuralError if an object or morphism of the source is unmapped, or a composition table is malformed

    Restrictions on when this function can be called:
        source and target should be valid categories
    '''

    _check_composition_table(f.source)
    _check_composition_table(f.target)
    report = ValidationReport(f'functor {f.name}')
    for obj in f.source.objects:
        image = f.map_object(obj)
        if image not in f.target.objects:
            raise StructuralError(f'functor {f.name} maps {obj!r} to the unknown object {image!r}')
        if f.map_morphism(f.source.identities[obj]) != f.target.identities[image]:
            report.add('fincat.functor_identity', obj, f'identity of {obj!r} is not sent to the identity of {image!r}')
    for morphism in f.source.morphisms:
        image = f.map_morphism(morphism)
        expected_endpoints = (f.map_object(f.source.source(morphism)), f.map_object(f.source.target(morphism)))
        if (f.target.source(image), f.target.target(image)) != expected_endpoints:
            report.add('fincat.functor_typing', morphism, f'{morphism!r} is sent outside the hom-set {expected_endpoints!r}')
    if not report.is_valid:
        return report
    for g, h in f.source.composable_pairs():
        image_of_composite = f.map_morphism(f.source.compose(g, h))
        composite_of_images = f.target.compose(f.map_morphism(g), f.map_morphism(h))
        if image_of_composite != composite_of_images:
            report.add('fincat.functor_composition', f'({g}, {h})', 'F(g∘f) differs from F(g)∘F(f)')
    return report

class FiniteSets:
    '''
    The concrete category of finite sets: objects are tuples of hashable elements and morphisms are total maps stored as dicts

    Instance variables:
        name: str -- FinSet

    Public methods:
        compose
        identity
        equal
        validate
    '''

    name = 'FinSet'

    def compose(self, g, f):
        '''
        Provides the map g∘f

        Keyword arguments:
            g: dict -- a map whose source contains the values of f
            f: dict -- a map

        Return values:
            the dict x -> g[f[x]]

        Side effects:
            none

        Exceptions raised:
            KeyError if a value of f is not in the source of g

        Restrictions on when this method can be called:
            none
        '''

        return {x: g[y] for x, y in f.items()}

    def identity(self, carrier):
        '''
        Provides the identity map of a finite set
        '''

        return {x: x for x in carrier}

    def equal(self, f, g):
        return f == g

    def validate(self, mapping, source, target):
        '''
        Provides None if mapping is a total map from source to target, else a description of the defect
        '''

        if set(mapping) != set(source):
            return 'map is not total on its source'
        target_set = set(target)
        if any(value not in target_set for value in mapping.values()):
            return 'map leaves its target'
        return None

FINITE_SETS = FiniteSets()

class LinearMaps:
    '''
    The category of finite-dimensional coordinate spaces: objects are dimensions and morphisms are complex matrices of shape (target, source), compared within a tolerance

    Instance variables:
        tolerance: float -- largest entrywise difference of two equal maps
    '''

    name = 'Vect'

    def __init__(self, tolerance = DEFAULT_CONFIGURATION.tolerance):
        self.tolerance = tolerance

    def compose(self, g, f):
        return np.asarray(g) @ np.asarray(f)

    def identity(self, dimension):
        return np.eye(dimension, dtype = complex)

    def equal(self, f, g):
        f = np.asarray(f)
        g = np.asarray(g)
        return f.shape == g.shape and (f.size == 0 or float(np.max(np.abs(f - g))) <= self.tolerance)

    def validate(self, matrix, source, target):
        if np.asarray(matrix).shape != (target, source):
            return f'matrix of shape {np.asarray(matrix).shape} is not a map {source} -> {target}'
        return None

@dataclass
class Diagram:
    '''
    A functor from a finite index category into a concrete category.

    Instance variables:
        index: FinCategory -- the index category
        objects: dict -- index object -> carrier (a tuple for FINITE_SETS, a dimension for LinearMaps)
        morphisms: dict -- index morphism -> map (a dict for FINITE_SETS, a matrix for LinearMaps); identities may be omitted
        concrete: FiniteSets or LinearMaps -- the concrete category
    '''

    index: FinCategory
    objects: dict
    morphisms: dict = field(default_factory = dict)
    concrete: object = FINITE_SETS

    def carrier(self, obj):
        try:
            return self.objects[obj]
        except KeyError:
            raise StructuralError(f'diagram does not map the object {obj!r}') from None

    def map_morphism(self, morphism):
        if morphism in self.morphisms:
            return self.morphisms[morphism]
        source = self.index.source(morphism)
        if self.index.identities[source] == morphism:
            return self.concrete.identity(self.carrier(source))
        raise StructuralError(f'diagram does not map the morphism {morphism!r}')

@dataclass
class Cone:
    '''
    A cone over a diagram.

    Instance variables:
        apex: the apex carrier (a tuple for FINITE_SETS, a dimension for LinearMaps)
        legs: dict -- index object -> map between the apex and the diagram's value at that object
        variance: str -- FROM_APEX for legs apex -> D(i), TO_APEX for legs D(i) -> apex
        name: str -- a display name
    '''

    apex: object
    legs: dict
    variance: str = FROM_APEX
    name: str = 'cone'

def check_diagram(d):
    '''
    Checks that every map of a diagram is well typed and that the diagram preserves identities and composites

    Keyword arguments:
        d: Diagram -- the diagram to check

    Return values:
        a ValidationReport, empty iff the functor laws hold

    Exceptions raised:
        StructuralError if an object or morphism is unmapped
    '''

    _check_composition_table(d.index)
    report = ValidationReport(f'diagram over {d.index.name}')
    for morphism in d.index.morphisms:
        defect = d.concrete.validate(d.map_morphism(morphism), d.carrier(d.index.source(morphism)), d.carrier(d.index.target(morphism)))
        if defect is not None:
            report.add('fincat.diagram_typing', morphism, defect)
    if not report.is_valid:
        return report
    for obj in d.index.objects:
        if not d.concrete.equal(d.map_morphism(d.index.identities[obj]), d.concrete.identity(d.carrier(obj))):
            report.add('fincat.functor_identity', obj, 'identity is not sent to an identity map')
    for g, f in d.index.composable_pairs():
        composite = d.concrete.compose(d.map_morphism(g), d.map_morphism(f))
        if not d.concrete.equal(d.map_morphism(d.index.compose(g, f)), composite):
            report.add('fincat.functor_composition', f'({g}, {f})', 'D(g∘f) differs from D(g)∘D(f)')
    return report

def check_cone(cone, d):
    '''
    Checks that every triangle of a cone over a diagram arrow commutes

    For a cone with legs from the apex the condition is leg(target(u)) = D(u)∘leg(source(u)) for every index arrow u;
    for legs into the apex it is leg(source(u)) = leg(target(u))∘D(u).

    Keyword arguments:
        cone: Cone -- the cone to check
        d: Diagram -- the diagram it should lie over

    Return values:
        a ValidationReport, empty iff every triangle commutes and every leg is well typed

    Exceptions raised:
        StructuralError if a leg is missing for an index object

    Restrictions on when this function can be called:
        none
    '''

    report = ValidationReport(f'{cone.name} over {d.index.name}')
    for obj in d.index.objects:
        if obj not in cone.legs:
            raise StructuralError(f'{cone.name} has no leg at the index object {obj!r}')
        if cone.variance == FROM_APEX:
            defect = d.concrete.validate(cone.legs[obj], cone.apex, d.carrier(obj))
        else:
            defect = d.concrete.validate(cone.legs[obj], d.carrier(obj), cone.apex)
        if defect is not None:
            report.add('fincat.leg_typing', obj, defect)
    if not report.is_valid:
        return report
    for morphism in d.index.non_identity_morphisms():
        source = d.index.source(morphism)
        target = d.index.target(morphism)
        image = d.map_morphism(morphism)
        if cone.variance == FROM_APEX:
            commutes = d.concrete.equal(d.concrete.compose(image, cone.legs[source]), cone.legs[target])
        else:
            commutes = d.concrete.equal(d.concrete.compose(cone.legs[target], image), cone.legs[source])
        if not commutes:
            report.add('fincat.cone_commutes', morphism, f'triangle over {morphism!r}: {source!r} -> {target!r} does not commute')
    return report

def limit_of_diagram(d):
    '''
    Computes the limit of a diagram of finite sets as the set of compatible families

    A family assigns an element x_i of D(i) to every index object i and is compatible when D(u)(x_source) = x_target for every index arrow u.
    The search assigns objects in index order and prunes on every arrow between assigned objects.

    Keyword arguments:
        d: Diagram -- a diagram into FINITE_SETS

    Return values:
        a Cone whose apex is the tuple of compatible families (each a tuple ordered like d.index.objects) and whose legs are the component projections

    Exceptions raised:
        DomainError if the diagram is not valued in finite sets

    Restrictions on when this function can be called:
        all carriers must be finite
    '''

    if not isinstance(d.concrete, FiniteSets):
        raise DomainError('limits are computed for diagrams of finite sets only')
    objects = d.index.objects
    position = {obj: i for i, obj in enumerate(objects)}
    arrows = [
        (position[d.index.source(u)], position[d.index.target(u)], d.map_morphism(u))
        for u in d.index.non_identity_morphisms()
    ]
    arrows_ready_at = [[] for _ in objects]
    for source, target, mapping in arrows:
        arrows_ready_at[max(source, target)].append((source, target, mapping))
    families = []
    partial = []

    def extend(depth):
        if depth == len(objects):
            families.append(tuple(partial))
            return
        for element in d.carrier(objects[depth]):
            partial.append(element)
            if all(mapping[partial[source]] == partial[target] for source, target, mapping in arrows_ready_at[depth]):
                extend(depth + 1)
            partial.pop()

    extend(0)
    logger.debug('limit over %s has %d compatible families', d.index.name, len(families))
    legs = {obj: {family: family[position[obj]] for family in families} for obj in objects}
    return Cone(tuple(families), legs, FROM_APEX, name = f'lim {d.index.name}')

def enumerate_cones(d, maximum_apex_size, configuration = DEFAULT_CONFIGURATION):
    '''
    Enumerates every cone over a diagram of finite sets whose apex is {0, ..., k-1} with 1 <= k <= maximum_apex_size

    A cone with apex A is the same as a function from A into the compatible families, so the enumeration runs over those functions.

    Exceptions raised:
        SizeCapExceededError if more than configuration.carrier_cap cones would be produced
    '''

    families = limit_of_diagram(d).apex
    position = {obj: i for i, obj in enumerate(d.index.objects)}
    total = sum(len(families) ** size for size in range(1, maximum_apex_size + 1))
    if total > configuration.carrier_cap:
        raise SizeCapExceededError('cone enumeration', total, configuration.carrier_cap)
    cones = []
    for size in range(1, maximum_apex_size + 1):
        apex = tuple(range(size))
        for choice in itertools.product(families, repeat = size):
            legs = {obj: {a: choice[a][position[obj]] for a in apex} for obj in d.index.objects}
            cones.append(Cone(apex, legs, FROM_APEX, name = f'cone{len(cones)}'))
    return cones

def check_universal_property(candidate, d, cones, configuration = DEFAULT_CONFIGURATION):
    '''
    Checks that every listed cone factors through a candidate limit cone by exactly one mediating map

    A mediating map m: apex(cone) -> apex(candidate) must satisfy candidate.legs[i]∘m = cone.legs[i] for every index object i.
    The condition constrains each apex element separately, so the number of mediating maps is the product over apex elements
    of the number of admissible images; this count equals that of an enumeration of all functions between the apexes.

    Keyword arguments:
        candidate: Cone -- the candidate limit cone
        d: Diagram -- a diagram into FINITE_SETS
        cones: list -- cones over d to test against
        configuration: Configuration -- supplies apex_cap

    Return values:
        True iff every listed cone has exactly one mediating map

    Exceptions raised:
        SizeCapExceededError if a listed apex exceeds configuration.apex_cap
        DomainError if the candidate or a listed cone is not a cone over d

    Restrictions on when this function can be called:
        carriers must be finite
    '''

    if not check_cone(candidate, d).is_valid:
        raise DomainError(f'{candidate.name} is not a cone over the diagram')
    for cone in cones:
        if len(cone.apex) > configuration.apex_cap:
            raise SizeCapExceededError(f'apex of {cone.name}', len(cone.apex), configuration.apex_cap)
        if not check_cone(cone, d).is_valid:
            raise DomainError(f'{cone.name} is not a cone over the diagram')
        number_of_mediating_maps = 1
        for a in cone.apex:
            admissible = [
                c for c in candidate.apex
                if all(candidate.legs[obj][c] == cone.legs[obj][a] for obj in d.index.objects)
            ]
            number_of_mediating_maps *= len(admissible)
            if number_of_mediating_maps == 0:
                break
        if number_of_mediating_maps != 1:
            logger.debug('%s has %d mediating maps into %s', cone.name, number_of_mediating_maps, candidate.name)
            return False
    return True

def category_to_dot(c):
    '''
    Provides the DOT source of a finite category; identity morphisms are omitted
    '''

    graph = graphviz.Digraph(name = str(c.name))
    for obj in c.objects:
        graph.node(str(obj))
    for morphism in c.non_identity_morphisms():
        graph.edge(str(c.source(morphism)), str(c.target(morphism)), label = str(morphism))
    return graph.source

def cone_to_dot(cone, d):
    '''
    Provides the DOT source of a cone together with the non-identity arrows of its diagram; legs are dashed
    '''

    graph = graphviz.Digraph(name = str(cone.name))
    apex_node = f'apex:{cone.name}'
    graph.node(apex_node, label = str(cone.name), shape = 'box')
    for obj in d.index.objects:
        graph.node(str(obj))
        if cone.variance == FROM_APEX:
            graph.edge(apex_node, str(obj), style = 'dashed')
        else:
            graph.edge(str(obj), apex_node, style = 'dashed')
    for morphism in d.index.non_identity_morphisms():
        graph.edge(str(d.index.source(morphism)), str(d.index.target(morphism)), label = str(morphism))
    return graph.source
