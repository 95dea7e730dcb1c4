'''
Module for class TestTruncatedFock, which tests truncated Fock spaces over a polyhedron space, their field operators and Weyl elements,
and the second quantization and face coarse-graining maps
'''

from contextualextension.Configuration import Configuration
from contextualextension.Errors import DomainError, InputError, SizeCapExceededError
from contextualextension.FiniteCategory import check_cone
from contextualextension.GroupFieldTheory import *
import math
import numpy as np
import unittest

def make_test_functions(space, seed, scale = 1.0):
    random_number_generator = np.random.default_rng(seed)
    draw = lambda: scale * (random_number_generator.standard_normal(space.dimension) + 1j * random_number_generator.standard_normal(space.dimension))
    return TestFunction(draw(), space), TestFunction(draw(), space)

class TestPolyhedronSpace(unittest.TestCase):
    '''
    Tests polyhedron spaces, test functions and their inner product

    Instance variables:
        none

    Public methods:
        test_polyhedron_space
        test_test_function
    '''

    def test_polyhedron_space(self):
        '''
        Tests the dimension, Haar weight and element indices of a PolyhedronSpace object

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a property of the space is wrong

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace(3, 2)
        self.assertEqual(space.dimension, 9)
        self.assertAlmostEqual(space.weight, 1 / 9)
        self.assertEqual(space.index((1, 2)), 5)
        self.assertEqual(len(space.elements()), 9)
        try:
            PolyhedronSpace(0, 2)
            self.fail()
        except InputError as e:
            pass

    def test_test_function(self):
        '''
        Tests TestFunction and inner_product

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a function or inner product is wrong or an invalid operation is accepted

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace()
        delta = TestFunction.delta(space, (1, 0))
        self.assertAlmostEqual(inner_product(delta, delta), 0.25)
        self.assertAlmostEqual(inner_product(TestFunction.constant(space), TestFunction.constant(space)), 1.0)
        self.assertAlmostEqual(inner_product(delta, 1j * delta), -0.25j)
        padded = delta.padded(2)
        self.assertEqual(padded.values.shape, (8,))
        self.assertAlmostEqual(inner_product(padded, padded), 0.25)
        try:
            TestFunction(np.ones(3), space)
            self.fail()
        except InputError as e:
            pass
        try:
            padded.padded(1)
            self.fail()
        except DomainError as e:
            pass
        try:
            delta + padded
            self.fail()
        except InputError as e:
            pass

class TestTruncatedFock(unittest.TestCase):
    '''
    Tests the basis and annihilators of a TruncatedFock object and the canonical commutation relations

    Instance variables:
        none

    Public methods:
        test_basis
        test_annihilator
        test_carrier_cap
        test_vacuum_uniqueness
        test_ccr
    '''

    def test_basis(self):
        '''
        Tests the basis enumeration of a truncated Fock space

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the dimension, vacuum or sectors are wrong

        Restrictions on when this method can be called:
            none
        '''

        fock = TruncatedFock(PolyhedronSpace(), 2)
        self.assertEqual(fock.modes, 4)
        self.assertEqual(fock.dimension, 1 + 4 + 10)
        self.assertEqual(fock.basis[0], ())
        self.assertEqual(fock.vacuum[0], 1)
        self.assertEqual(list(fock.sector_indices(1)), list(range(5)))
        self.assertEqual(fock.state_index((3, 0)), fock.basis.index((0, 3)))

    def test_annihilator(self):
        '''
        Tests TruncatedFock.annihilator and field_operator

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an annihilator entry is wrong

        Restrictions on when this method can be called:
            none
        '''

        fock = TruncatedFock(PolyhedronSpace(), 2)
        a = fock.annihilator(0)
        self.assertAlmostEqual(a[fock.state_index((0,)), fock.state_index((0, 0))], math.sqrt(2))
        self.assertAlmostEqual(a[fock.state_index(()), fock.state_index((0,))], 1.0)
        self.assertTrue(np.allclose(a @ fock.vacuum, 0))
        self.assertAlmostEqual(a[fock.state_index((1,)), fock.state_index((0, 1))], 1.0)
        psi = field_operator(TestFunction.delta(fock.space, (0, 0)), fock)
        self.assertTrue(np.allclose(psi.matrix, 0.5 * a))
        self.assertTrue(np.allclose(psi.adjoint, 0.5 * a.conj().T))

    def test_carrier_cap(self):
        '''
        Tests that a truncated Fock space whose operators exceed the carrier cap is refused

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
            TruncatedFock(PolyhedronSpace(2, 3), 8)
            self.fail()
        except SizeCapExceededError as e:
            pass
        try:
            TruncatedFock(PolyhedronSpace(), 3, configuration = Configuration(carrier_cap = 100))
            self.fail()
        except SizeCapExceededError as e:
            self.assertEqual(e.size, 35 * 35)

    def test_vacuum_uniqueness(self):
        '''
        Tests check_vacuum_uniqueness

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the common kernel of the annihilators is not the vacuum line

        Restrictions on when this method can be called:
            none
        '''

        self.assertTrue(check_vacuum_uniqueness(TruncatedFock(PolyhedronSpace(), 2)).is_valid)
        self.assertTrue(check_vacuum_uniqueness(TruncatedFock(PolyhedronSpace(3, 1), 3, copies = 2)).is_valid)

    def test_ccr(self):
        '''
        Tests that the guarded commutation defect vanishes below the cutoff and that the unguarded one does not

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a guarded defect exceeds 1e-10 or a cutoff of 0 is accepted

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace()
        for n_max in (1, 2, 3):
            fock = TruncatedFock(space, n_max)
            for seed in range(3):
                f, g = make_test_functions(space, seed)
                self.assertLessEqual(ccr_defect(f, g, fock), 1e-10)
        f, g = make_test_functions(space, 0)
        self.assertGreater(ccr_defect(f, f, TruncatedFock(space, 2), guarded = False), 1e-3)
        try:
            ccr_defect(f, g, TruncatedFock(space, 0))
            self.fail()
        except DomainError as e:
            pass

class TestWeylElement(unittest.TestCase):
    '''
    Tests Weyl elements, their defects and GFT contexts

    Instance variables:
        none

    Public methods:
        test_weyl_element
        test_vacuum_expectation
        test_weyl_defect_sweep
        test_sector_cap
        test_is_gft_context
    '''

    def test_weyl_element(self):
        '''
        Tests that a Weyl element is unitary

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if W(f) is not unitary

        Restrictions on when this method can be called:
            none
        '''

        fock = TruncatedFock(PolyhedronSpace(), 3)
        f, _ = make_test_functions(fock.space, 4)
        w = weyl_element(f, fock).matrix
        self.assertTrue(np.allclose(w @ w.conj().T, np.eye(fock.dimension)))

    def test_vacuum_expectation(self):
        '''
        Tests that the vacuum expectation of a Weyl element approaches exp(-(f, f)/4) as the cutoff grows

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the vacuum expectation is off by more than 1e-6

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace()
        f = TestFunction.constant(space, 0.5)
        fock = TruncatedFock(space, 6)
        self.assertLess(abs(vacuum_expectation(weyl_element(f, fock)) - math.exp(-0.25 / 4)), 1e-6)

    def test_weyl_defect_sweep(self):
        '''
        Tests that the Weyl relation defect strictly decreases at every step of the cutoffs 2, 3, 4, 5

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the table has the wrong shape or the defect does not decrease

        Restrictions on when this method can be called:
            none
        '''

        f, g = make_test_functions(PolyhedronSpace(), 0, 0.3)
        table = weyl_defect_sweep(f, g, [2, 3, 4, 5], 1)
        self.assertEqual(list(table.index), [2, 3, 4, 5])
        self.assertEqual(list(table.columns), ['fock_dimension', 'weyl_relation_defect', 'weyl_commutator_defect', 'ccr_defect', 'vacuum_expectation', 'vacuum_expectation_limit'])
        self.assertTrue(np.all(np.diff(table['weyl_relation_defect'].to_numpy()) < 0))
        self.assertLess(table.loc[5, 'weyl_relation_defect'], 1e-6)
        self.assertTrue((table['ccr_defect'] <= 1e-10).all())
        self.assertLess(abs(table.loc[5, 'vacuum_expectation'] - table.loc[5, 'vacuum_expectation_limit']), abs(table.loc[2, 'vacuum_expectation'] - table.loc[2, 'vacuum_expectation_limit']) + 1e-12)

    def test_sector_cap(self):
        '''
        Tests that a sector cap at or above the cutoff is refused

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if no DomainError is raised

        Restrictions on when this method can be called:
            none
        '''

        fock = TruncatedFock(PolyhedronSpace(), 2)
        f, g = make_test_functions(fock.space, 1)
        for defect in (weyl_relation_defect, weyl_commutator_defect):
            try:
                defect(f, g, fock, 2)
                self.fail()
            except DomainError as e:
                pass

    def test_is_gft_context(self):
        '''
        Tests is_gft_context

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if real functions are rejected or a pair with Im(f, f') != 0 is accepted

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace()
        delta = TestFunction.delta(space, (0, 1))
        self.assertTrue(is_gft_context([delta, TestFunction.constant(space)]))
        self.assertFalse(is_gft_context([delta, 1j * delta]))
        try:
            is_gft_context([])
            self.fail()
        except InputError as e:
            pass

class TestSecondQuantization(unittest.TestCase):
    '''
    Tests second quantization cones and face coarse-graining

    Instance variables:
        none

    Public methods:
        test_second_quantization_cone
        test_corrupted_inclusion
        test_invalid_cones
        test_face_coarse_grain
    '''

    def test_second_quantization_cone(self):
        '''
        Tests that the cone of a GFT context over the inclusion of one copy into two commutes and is realized on Fock spaces

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the cone or its Fock realization fails

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace()
        context = [TestFunction.delta(space, (0, 0)), 0.5 * TestFunction.constant(space)]
        cone, diagram, report = second_quantization_cone(1, 2, context)
        self.assertTrue(report.is_valid)
        self.assertTrue(check_cone(cone, diagram).is_valid)
        self.assertEqual(cone.legs['S_l'].shape, (8, 2))
        cone, diagram, report = second_quantization_cone(1, 1, context)
        self.assertTrue(report.is_valid)

    def test_corrupted_inclusion(self):
        '''
        Tests that a sign-flipped inclusion breaks the cone and its Fock realization

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if either failure goes unreported

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace()
        context = [TestFunction.delta(space, (0, 0)), 0.5 * TestFunction.constant(space)]
        cone, diagram, report = second_quantization_cone(1, 2, context, padding_sign = -1)
        self.assertEqual(report.invariants, ['fincat.cone_commutes', 'gft.fock_realization'])

    def test_invalid_cones(self):
        '''
        Tests that second_quantization_cone refuses a decreasing copy count and a context with Im(f, f') != 0

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a DomainError is not raised

        Restrictions on when this method can be called:
            none
        '''

        space = PolyhedronSpace()
        delta = TestFunction.delta(space, (1, 1))
        for k, l, context in ((2, 1, [delta]), (1, 2, [delta, 1j * delta])):
            try:
                second_quantization_cone(k, l, context)
                self.fail()
            except DomainError as e:
                pass

    def test_face_coarse_grain(self):
        '''
        Tests face_coarse_grain and check_face_functoriality

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a coarse-graining matrix, its scale or the functoriality check is wrong

        Restrictions on when this method can be called:
            none
        '''

        graining = face_coarse_grain(1, 2)
        self.assertTrue(np.array_equal(graining.matrix, np.array([[1, 0], [0, 0], [0, 1], [0, 0]])))
        self.assertAlmostEqual(graining.scale, 0.5)
        self.assertTrue(check_face_functoriality(1, 2, 3).is_valid)
        self.assertTrue(check_face_functoriality(1, 1, 2, group_order = 3).is_valid)
        try:
            face_coarse_grain(2, 1)
            self.fail()
        except DomainError as e:
            pass

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
