'''
Module for class TestFinCategory, which tests finite categories, functors, diagrams, cones and limits of finite sets
'''

from contextualextension.Configuration import Configuration
from contextualextension.Errors import DomainError, SizeCapExceededError, StructuralError
from contextualextension.FiniteCategory import *
import numpy as np
import unittest

def make_triangle():
    objects = ['a', 'b', 'c']
    homs = {
        ('a', 'a'): ('id_a',),
        ('b', 'b'): ('id_b',),
        ('c', 'c'): ('id_c',),
        ('a', 'b'): ('f',),
        ('b', 'c'): ('g',),
        ('a', 'c'): ('h',)
    }
    composition = {
        ('id_a', 'id_a'): 'id_a',
        ('id_b', 'id_b'): 'id_b',
        ('id_c', 'id_c'): 'id_c',
        ('f', 'id_a'): 'f',
        ('id_b', 'f'): 'f',
        ('g', 'id_b'): 'g',
        ('id_c', 'g'): 'g',
        ('h', 'id_a'): 'h',
        ('id_c', 'h'): 'h',
        ('g', 'f'): 'h'
    }
    identities = {'a': 'id_a', 'b': 'id_b', 'c': 'id_c'}
    return FinCategory(objects, homs, composition, identities, name = 'triangle')

def make_cospan_diagram():
    index = poset_category(['a', 'b', 'c'], lambda x, y: y == 'c', name = 'cospan')
    objects = {'a': (0, 1), 'b': (0, 1, 2), 'c': (0, 1)}
    morphisms = {'a<=c': {0: 0, 1: 1}, 'b<=c': {0: 0, 1: 1, 2: 1}}
    return Diagram(index, objects, morphisms, FINITE_SETS)

class TestFinCategory(unittest.TestCase):
    '''
    Tests the construction and the exhaustive law checks of a FinCategory object

    Instance variables:
        none

    Public methods:
        test_check_category
        test_corrupted_identity_law
        test_missing_composite
        test_opposite
        test_poset_category
        test_category_to_dot
    '''

    def test_check_category(self):
        '''
        Tests check_category on a valid category

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            Ensures the report of the triangle category has no violations

        Exceptions raised:
            AssertionError if a violation is reported

        Restrictions on when this method can be called:
            none
        '''

        triangle = make_triangle()
        report = check_category(triangle)
        self.assertTrue(report.is_valid)
        self.assertEqual(triangle.compose('g', 'f'), 'h')
        self.assertEqual(len(list(triangle.composable_pairs())), 10)
        self.assertEqual(set(triangle.non_identity_morphisms()), {'f', 'g', 'h'})

    def test_corrupted_identity_law(self):
        '''
        Tests check_category on a composition table that breaks an identity law

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            Ensures the report of a corrupted category names the identity law

        Exceptions raised:
            AssertionError if the corruption goes unreported

        Restrictions on when this method can be called:
            none
        '''

        composition = {('id', 'id'): 'id', ('id', 'e'): 'id', ('e', 'id'): 'e', ('e', 'e'): 'e'}
        corrupted = FinCategory(['a'], {('a', 'a'): ('id', 'e')}, composition, {'a': 'id'}, name = 'corrupted')
        report = check_category(corrupted)
        self.assertFalse(report.is_valid)
        self.assertIn('fincat.identity_law', report.invariants)

    def test_missing_composite(self):
        '''
        Tests that a composition table with a missing entry or a composite in the wrong hom-set is refused

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a StructuralError is not raised

        Restrictions on when this method can be called:
            none
        '''

        triangle = make_triangle()
        del triangle.composition_table[('g', 'f')]
        try:
            check_category(triangle)
            self.fail()
        except StructuralError as e:
            self.assertIn("('g', 'f')", str(e))

        triangle = make_triangle()
        triangle.composition_table[('g', 'f')] = 'f'
        try:
            check_category(triangle)
            self.fail()
        except StructuralError as e:
            pass

        try:
            FinCategory(['a'], {('a', 'b'): ('f',)}, {}, {'a': 'f'})
            self.fail()
        except StructuralError as e:
            pass

    def test_opposite(self):
        '''
        Tests opposite

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the opposite category is not a valid category with reversed hom-sets

        Restrictions on when this method can be called:
            none
        '''

        triangle_op = opposite(make_triangle())
        self.assertTrue(check_category(triangle_op).is_valid)
        self.assertEqual(triangle_op.hom('b', 'a'), ('f',))
        self.assertEqual(triangle_op.hom('a', 'b'), ())
        self.assertEqual(triangle_op.compose('f', 'g'), 'h')

    def test_poset_category(self):
        '''
        Tests poset_category and discrete_category

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the category of a chain has the wrong morphisms

        Restrictions on when this method can be called:
            none
        '''

        chain = poset_category([1, 2, 3], lambda a, b: a <= b)
        self.assertTrue(check_category(chain).is_valid)
        self.assertEqual(len(chain.morphisms), 6)
        self.assertEqual(chain.compose('2<=3', '1<=2'), '1<=3')
        discrete = discrete_category(['x', 'y'])
        self.assertEqual(discrete.non_identity_morphisms(), ())

    def test_category_to_dot(self):
        '''
        Tests category_to_dot

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the DOT source omits an arrow or shows an identity

        Restrictions on when this method can be called:
            none
        '''

        source = category_to_dot(make_triangle())
        self.assertIn('digraph', source)
        self.assertIn('label=f', source)
        self.assertIn('label=h', source)
        self.assertNotIn('id_a', source)

class TestFunctor(unittest.TestCase):
    '''
    Tests the functor checks

    Instance variables:
        none

    Public methods:
        test_identity_functor
        test_corrupted_functor
    '''

    def test_identity_functor(self):
        '''
        Tests identity_functor, compose_functors and check_functor

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the identity functor or its square is reported invalid

        Restrictions on when this method can be called:
            none
        '''

        triangle = make_triangle()
        identity = identity_functor(triangle)
        self.assertTrue(check_functor(identity).is_valid)
        self.assertTrue(check_functor(compose_functors(identity, identity)).is_valid)

    def test_corrupted_functor(self):
        '''
        Tests check_functor on a functor that sends a morphism outside its hom-set

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the mistyped morphism goes unreported

        Restrictions on when this method can be called:
            none
        '''

        triangle = make_triangle()
        morphism_map = {morphism: morphism for morphism in triangle.morphisms}
        morphism_map['f'] = 'h'
        corrupted = Functor(triangle, triangle, {obj: obj for obj in triangle.objects}, morphism_map, name = 'corrupted')
        report = check_functor(corrupted)
        self.assertEqual(report.invariants, ['fincat.functor_typing'])

        del morphism_map['f']
        try:
            check_functor(Functor(triangle, triangle, {obj: obj for obj in triangle.objects}, morphism_map))
            self.fail()
        except StructuralError as e:
            pass

class TestLimit(unittest.TestCase):
    '''
    Tests limits of diagrams of finite sets, cones and the universal property

    Instance variables:
        none

    Public methods:
        test_check_diagram
        test_limit_of_diagram
        test_check_universal_property
        test_enumerate_cones_cap
        test_linear_cone
    '''

    def test_check_diagram(self):
        '''
        Tests check_diagram on a valid and on a mistyped diagram

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a report is wrong

        Restrictions on when this method can be called:
            none
        '''

        d = make_cospan_diagram()
        self.assertTrue(check_diagram(d).is_valid)
        d.morphisms['a<=c'] = {0: 0}
        self.assertIn('fincat.diagram_typing', check_diagram(d).invariants)

    def test_limit_of_diagram(self):
        '''
        Tests limit_of_diagram on a pullback of finite sets

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the compatible families differ from the pullback

        Restrictions on when this method can be called:
            none
        '''

        d = make_cospan_diagram()
        limit = limit_of_diagram(d)
        self.assertEqual(limit.apex, ((0, 0, 0), (1, 1, 1), (1, 2, 1)))
        self.assertEqual(limit.legs['b'][(1, 2, 1)], 2)
        self.assertTrue(check_cone(limit, d).is_valid)
        self.assertIn('apex', cone_to_dot(limit, d))

        try:
            limit_of_diagram(Diagram(d.index, {'a': 1, 'b': 1, 'c': 1}, {}, LinearMaps()))
            self.fail()
        except DomainError as e:
            pass

    def test_check_universal_property(self):
        '''
        Tests check_universal_property on the limit cone and on a candidate with a duplicated apex element

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the limit fails the universal property or the duplicated candidate passes it

        Restrictions on when this method can be called:
            none
        '''

        d = make_cospan_diagram()
        limit = limit_of_diagram(d)
        cones = enumerate_cones(d, 2)
        self.assertEqual(len(cones), 3 + 9)
        self.assertTrue(check_universal_property(limit, d, cones))

        apex = limit.apex + ('duplicate',)
        legs = {obj: dict(leg, duplicate = leg[(0, 0, 0)]) for obj, leg in limit.legs.items()}
        duplicated = Cone(apex, legs, FROM_APEX, name = 'duplicated')
        self.assertTrue(check_cone(duplicated, d).is_valid)
        self.assertFalse(check_universal_property(duplicated, d, cones))

        try:
            check_universal_property(limit, d, enumerate_cones(d, 2), Configuration(apex_cap = 1))
            self.fail()
        except SizeCapExceededError as e:
            self.assertEqual(e.cap, 1)

    def test_enumerate_cones_cap(self):
        '''
        Tests that enumerate_cones refuses an enumeration larger than the carrier cap

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if no SizeCapExceededError is raised

        Restrictions on when this method can be called:
            none
        '''

        try:
            enumerate_cones(make_cospan_diagram(), 3, Configuration(carrier_cap = 10))
            self.fail()
        except SizeCapExceededError as e:
            self.assertEqual(e.size, 3 + 9 + 27)

    def test_linear_cone(self):
        '''
        Tests check_cone on a cone of linear maps and on a corrupted leg

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the commuting cone is rejected or the corrupted cone accepted

        Restrictions on when this method can be called:
            none
        '''

        index = poset_category(['x', 'y'], lambda a, b: (a, b) == ('x', 'y'), name = 'arrow')
        d = Diagram(index, {'x': 2, 'y': 1}, {'x<=y': np.array([[1.0, 1.0]])}, LinearMaps())
        self.assertTrue(check_diagram(d).is_valid)
        cone = Cone(1, {'x': np.array([[1.0], [0.0]]), 'y': np.array([[1.0]])})
        self.assertTrue(check_cone(cone, d).is_valid)
        corrupted = Cone(1, {'x': np.array([[1.0], [0.0]]), 'y': np.array([[2.0]])})
        self.assertEqual(check_cone(corrupted, d).invariants, ['fincat.cone_commutes'])
        mistyped = Cone(1, {'x': np.array([[1.0, 0.0]]), 'y': np.array([[1.0]])})
        self.assertEqual(check_cone(mistyped, d).invariants, ['fincat.leg_typing'])

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
