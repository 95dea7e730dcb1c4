'''
Module for class TestLocalNet, which tests nets of local algebras on a chain of qubit sites and the extension built from their localized contexts
'''

from contextualextension.Configuration import Configuration
from contextualextension.ContextualExtension import embed
from contextualextension.Errors import DomainError, InputError, SizeCapExceededError
from contextualextension.LocalNet import *
from contextualextension.MatrixStarAlgebra import PAULI_X, PAULI_Z, generate_algebra, pauli_string
import numpy as np
import unittest

class TestRegion(unittest.TestCase):
    '''
    Tests the methods of a Region object

    Instance variables:
        none

    Public methods:
        test_region
        test_translate
    '''

    def test_region(self):
        '''
        Tests Region.__init__, Region.contains and Region.is_disjoint

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a relation between regions is wrong or an empty interval is accepted

        Restrictions on when this method can be called:
            none
        '''

        self.assertTrue(Region(0, 2).contains(Region(1, 2)))
        self.assertFalse(Region(1, 2).contains(Region(0, 2)))
        self.assertTrue(Region(0, 0).is_disjoint(Region(1, 2)))
        self.assertFalse(Region(0, 1).is_disjoint(Region(1, 2)))
        self.assertEqual(str(Region(0, 1)), '[0,1]')
        self.assertEqual(Region(1, 3).size, 3)
        try:
            Region(2, 1)
            self.fail()
        except InputError as e:
            pass

    def test_translate(self):
        '''
        Tests Region.translate with and without wrapping around the chain

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a translated region is wrong

        Restrictions on when this method can be called:
            none
        '''

        self.assertEqual(Region(2, 2).translate(1, 3), Region(0, 0))
        self.assertIsNone(Region(1, 2).translate(1, 3))
        self.assertEqual(Region(0, 1).translate(1, 3, cyclic = False), Region(1, 2))
        try:
            Region(1, 1).translate(1, 2, cyclic = False)
            self.fail()
        except DomainError as e:
            pass

class TestLocalNet(unittest.TestCase):
    '''
    Tests the construction of a LocalNet object and the checks of isotony, locality and locally covariant squares

    Instance variables:
        none

    Public methods:
        test_standard_net
        test_dimension_cap
        test_region_outside_chain
        test_isotony_violation
        test_locality_violation
        test_lc_square_violation
        test_composite_context
        test_inductive_limit
    '''

    def test_standard_net(self):
        '''
        Tests that the standard nets of two and three sites pass every check

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a check reports a violation

        Restrictions on when this method can be called:
            none
        '''

        for chain_length in (2, 3):
            net = LocalNet.standard(chain_length)
            self.assertEqual(len(net.regions()), chain_length * (chain_length + 1) // 2)
            self.assertEqual(net.algebra(Region(0, 0)).dimension, 4)
            self.assertTrue(check_isotony(net).is_valid)
            self.assertTrue(check_locality(net).is_valid)
            for sub in net.regions():
                for whole in net.regions():
                    if whole.contains(sub):
                        self.assertTrue(check_lc_square(sub, whole, net).is_valid)
        diagonal = LocalNet.diagonal(2)
        self.assertEqual(diagonal.algebra(Region(0, 1)).dimension, 4)
        self.assertTrue(check_isotony(diagonal).is_valid)
        self.assertTrue(check_locality(LocalNet.standard(3, Configuration(threads = 2))).is_valid)

    def test_dimension_cap(self):
        '''
        Tests that a chain whose Hilbert space exceeds the dimension cap is refused

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
            LocalNet.standard(5)
            self.fail()
        except SizeCapExceededError as e:
            self.assertEqual(e.size, 32)

    def test_region_outside_chain(self):
        '''
        Tests that an algebra assigned to a region past the end of the chain is refused

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if no InputError is raised

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.standard(2)
        try:
            net.with_algebra(Region(1, 2), net.algebra(Region(0, 1)))
            self.fail()
        except InputError as e:
            pass
        try:
            LocalNet.from_generators(2, {(2, 2): [np.eye(4)]})
            self.fail()
        except InputError as e:
            pass

    def test_isotony_violation(self):
        '''
        Tests that check_isotony reports an interval algebra that misses the algebra of a subinterval

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the violation goes unreported

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.standard(2)
        broken = net.with_algebra(Region(0, 1), generate_algebra([pauli_string('zz')], net.dim))
        self.assertEqual(check_isotony(broken).invariants, ['locnet.isotony'])

    def test_locality_violation(self):
        '''
        Tests that check_locality reports a site algebra that acts on another site

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the violation goes unreported

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.from_generators(2, {(0, 0): [pauli_string('ix')]})
        report = check_locality(net)
        self.assertEqual(report.invariants, ['locnet.locality'])
        self.assertEqual(report.violations[0].location, '([0,0], [1,1])')

    def test_lc_square_violation(self):
        '''
        Tests check_lc_square on a net whose site algebra is smaller than the matrix algebra of the site

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the failing square goes unreported or non-nested regions are accepted

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.from_generators(2, {(0, 0): [pauli_string('zi')]})
        self.assertTrue(check_isotony(net).is_valid)
        report = check_lc_square(Region(0, 0), Region(0, 1), net)
        self.assertEqual(report.invariants, ['locnet.lc_square'])
        try:
            check_lc_square(Region(0, 0), Region(1, 1), net)
            self.fail()
        except DomainError as e:
            pass

    def test_composite_context(self):
        '''
        Tests composite_context on separated and on overlapping regions

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the composite has the wrong dimension or overlapping regions are accepted

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.standard(2)
        composite = composite_context([net.site_context(0, 'z'), net.site_context(1, 'x')], net)
        self.assertEqual(composite.dimension, 4)
        self.assertTrue(composite.contains(pauli_string('zx')))
        try:
            composite_context([(Region(0, 0), generate_algebra([pauli_string('zi')], 4)), (Region(0, 1), generate_algebra([pauli_string('iz')], 4))], net)
            self.fail()
        except DomainError as e:
            self.assertIn('not causally separated', str(e))

    def test_inductive_limit(self):
        '''
        Tests that the algebra generated by the local algebras of a standard net is the full matrix algebra

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the generated algebra has the wrong dimension

        Restrictions on when this method can be called:
            none
        '''

        self.assertEqual(inductive_limit(LocalNet.standard(2)).dimension, 16)
        self.assertEqual(inductive_limit(LocalNet.diagonal(2)).dimension, 4)

class TestTranslations(unittest.TestCase):
    '''
    Tests translations of the chain and the covariance of families of localized contexts

    Instance variables:
        none

    Public methods:
        test_translation_automorphism
        test_covariance
        test_extended_isotony
        test_extended_isotony_violations
    '''

    def test_translation_automorphism(self):
        '''
        Tests translation_automorphism and check_translation_action

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a translation does not move a site operator to the next site

        Restrictions on when this method can be called:
            none
        '''

        unitary = translation_automorphism(3, 1)
        self.assertTrue(np.allclose(unitary @ pauli_string('xii') @ unitary.conj().T, pauli_string('ixi')))
        self.assertTrue(np.allclose(unitary @ pauli_string('iiz') @ unitary.conj().T, pauli_string('zii')))
        for chain_length in (1, 2, 3):
            self.assertTrue(check_translation_action(chain_length).is_valid)

    def test_covariance(self):
        '''
        Tests check_covariance on a translation-invariant family and on a family missing a translated context

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the covariant family is rejected or the orphan context goes unreported

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.standard(2)
        contexts = [net.site_context(site, 'z') for site in range(2)]
        self.assertTrue(check_covariance(net, 1, contexts).is_valid)
        three = LocalNet.standard(3)
        self.assertTrue(check_covariance(three, 1, [three.site_context(site, 'x') for site in range(3)]).is_valid)
        report = check_covariance(net, 1, contexts[:1])
        self.assertEqual(report.invariants, ['locnet.covariance'])
        try:
            check_covariance(net, 1, contexts, cyclic = False)
            self.fail()
        except DomainError as e:
            pass

    def test_extended_isotony(self):
        '''
        Tests check_extended_isotony on correctly localized contexts and on a context placed in the wrong region, and
        localized_extended_algebra on one and two sites

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the localized family is rejected, a basis has the wrong dimension or the misplaced context
            goes unreported

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.standard(2)
        contexts = [net.site_context(0, 'z'), net.site_context(1, 'x')]
        self.assertTrue(check_extended_isotony(net, contexts).is_valid)
        ext = extension_of_contexts(net, contexts)
        self.assertEqual(localized_extended_algebra(Region(0, 0), contexts, ext).shape, (2, ext.size))
        self.assertEqual(localized_extended_algebra(Region(0, 1), contexts, ext).shape, (4, ext.size))
        self.assertTrue(np.allclose(localized_extended_algebra(Region(0, 1), contexts, ext).sum(axis = 0), 1.0))
        misplaced = LocalizedContext('x1_at_0', Region(0, 0), net.site_context(1, 'x').algebra)
        report = check_extended_isotony(net, [contexts[0], misplaced])
        self.assertIn('locnet.context_localization', report.invariants)

    def test_extended_isotony_violations(self):
        '''
        Tests that check_extended_isotony reports a localized algebra holding a function of a context outside its region,
        and a larger region whose algebra misses the algebra of a smaller one

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a corrupted family goes unreported

        Restrictions on when this method can be called:
            none
        '''

        net = LocalNet.standard(2)
        contexts = [net.site_context(0, 'z'), net.site_context(1, 'x')]
        ext = extension_of_contexts(net, contexts)
        x1 = embed(pauli_string('ix'), 'x1', ext)
        first_site = localized_extended_algebra(Region(0, 0), contexts, ext)
        report = check_extended_isotony(net, contexts, localized = {Region(0, 0): np.vstack([first_site, x1])})
        self.assertEqual(report.invariants, ['locnet.extended_localization'])
        self.assertEqual(report.violations[0].location, '[0,0]')
        report = check_extended_isotony(net, contexts, localized = {Region(0, 1): [ext.unit(), x1]})
        self.assertIn('locnet.extended_isotony', report.invariants)
        self.assertIn('locnet.extended_generation', report.invariants)
        self.assertEqual([v.location for v in report.violations if v.invariant == 'locnet.extended_isotony'], ['([0,0], [0,1])'])
        try:
            check_extended_isotony(net, contexts, localized = {Region(0, 0): [np.ones(3)]})
            self.fail()
        except InputError as e:
            pass

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
