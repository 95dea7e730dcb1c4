'''
Module for class TestObservableFamily, which tests observable families, correlation providers and the exhaustive sign search of the realism inequality
'''

from contextualextension.Configuration import Configuration
from contextualextension.ContextualExtension import build_limit_extension, embed, extend_state
from contextualextension.Errors import DomainError, InputError, MixedCorrelationError, SizeCapExceededError
from contextualextension.MatrixStarAlgebra import PAULI_X, PAULI_Y, PAULI_Z, MatrixStarAlgebra, context_category
from contextualextension.RealismInequality import *
import numpy as np
import unittest

GROUND_STATE = np.diag([1.0, 0.0]).astype(complex)

def make_measure_family():
    return ObservableFamily([
        {'a': [[1, -1, 1, -1]], 'b': []},
        {'a': [[1, 1, -1, -1], [1, -1, -1, 1]], 'b': [[-1, 1, 1, -1]]}
    ])

class TestObservableFamily(unittest.TestCase):
    '''
    Tests the construction of an ObservableFamily object

    Instance variables:
        none

    Public methods:
        test_family
        test_invalid_families
    '''

    def test_family(self):
        '''
        Tests ObservableFamily.q, ObservableFamily.size and ObservableFamily.group_slices

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a property of the family is wrong

        Restrictions on when this method can be called:
            none
        '''

        family = make_measure_family()
        self.assertEqual(family.q, 2)
        self.assertEqual(family.size, 4)
        self.assertEqual(family.group_slices(), [slice(0, 1), slice(1, 4)])
        self.assertEqual(len(family.observables()), 4)

    def test_invalid_families(self):
        '''
        Tests that ObservableFamily refuses empty families, even groups, values other than ±1 and matrices that are not self-adjoint involutions

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the expected exception is not raised

        Restrictions on when this method can be called:
            none
        '''

        try:
            ObservableFamily([])
            self.fail()
        except InputError as e:
            pass
        for groups in (
            [{'a': [[1, -1]], 'b': [[1, 1]]}],
            [{'a': [[1, 0.5]]}],
            [{'a': [PAULI_X + PAULI_Z]}],
            [{'a': [np.array([[0, 1], [0, 0]])]}]
        ):
            try:
                ObservableFamily(groups)
                self.fail()
            except DomainError as e:
                pass

class TestCorrelationProviders(unittest.TestCase):
    '''
    Tests MeasureProvider, QuantumProvider and joint_spectral_provider

    Instance variables:
        none

    Public methods:
        test_measure_correlation
        test_mixed_correlation
        test_extended_state_provider
        test_joint_spectral_provider
        test_coplanar_observables
    '''

    def test_measure_correlation(self):
        '''
        Tests measure_correlation and the refusal of functions on another carrier

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a correlation is wrong or a mismatched function is accepted

        Restrictions on when this method can be called:
            none
        '''

        weights = np.array([0.25, 0.25, 0.5])
        self.assertAlmostEqual(measure_correlation(weights, np.array([1, -1, 1]), np.array([1, 1, 1])), 0.5)
        try:
            measure_correlation(weights, np.array([1, -1]), np.array([1, 1]))
            self.fail()
        except DomainError as e:
            pass

    def test_mixed_correlation(self):
        '''
        Tests that a function correlated with a matrix is refused by both providers

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if no MixedCorrelationError is raised

        Restrictions on when this method can be called:
            none
        '''

        function_first = ObservableFamily([{'a': [[1, -1]], 'b': [PAULI_X, PAULI_Z]}])
        matrix_first = ObservableFamily([{'a': [PAULI_X], 'b': [[1, -1], PAULI_Z]}])
        for family, provider in ((function_first, MeasureProvider(np.array([0.5, 0.5]))), (matrix_first, QuantumProvider(GROUND_STATE))):
            try:
                roy_singh_lhs(family, [1, 1, 1], provider)
                self.fail()
            except MixedCorrelationError as e:
                pass
        try:
            QuantumProvider(GROUND_STATE).correlation(np.array([1.0, -1.0]), np.array([1.0, 1.0]))
            self.fail()
        except DomainError as e:
            pass

    def test_extended_state_provider(self):
        '''
        Tests a MeasureProvider built from the extension of a qubit state and its refusal of matrices

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a correlation or the left-hand side is wrong, or a pair of matrices is accepted

        Restrictions on when this method can be called:
            none
        '''

        cc = context_category(MatrixStarAlgebra.full_matrix_algebra(2), {'x': PAULI_X, 'z': PAULI_Z})
        ext = build_limit_extension(cc)
        provider = MeasureProvider(extend_state(GROUND_STATE, ext))
        z = embed(PAULI_Z, 'z', ext).real
        x = embed(PAULI_X, 'x', ext).real
        self.assertAlmostEqual(provider.correlation(z, np.ones(ext.size)), 1.0)
        self.assertAlmostEqual(provider.correlation(x, np.ones(ext.size)), 0.0)
        try:
            provider.correlation(PAULI_Z, PAULI_Z)
            self.fail()
        except DomainError as e:
            pass
        family = ObservableFamily([{'a': [z, x], 'b': [x * z]}])
        self.assertGreaterEqual(search_signs(family, provider).lhs, family.q - 1e-12)

    def test_joint_spectral_provider(self):
        '''
        Tests joint_spectral_provider for σ_z in a diagonal state and its refusal of non-commuting matrices

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the weights or functions are wrong or non-commuting matrices are accepted

        Restrictions on when this method can be called:
            none
        '''

        rho = np.diag([0.25, 0.75]).astype(complex)
        provider, functions = joint_spectral_provider([PAULI_Z], rho)
        self.assertTrue(np.allclose(sorted(provider.weights), [0.25, 0.75]))
        self.assertEqual(sorted(np.round(functions[0]).astype(int)), [-1, 1])
        self.assertAlmostEqual(measure_correlation(provider.weights, functions[0], np.ones(2)), -0.5)
        try:
            joint_spectral_provider([PAULI_X, PAULI_Z], rho)
            self.fail()
        except DomainError as e:
            pass

    def test_coplanar_observables(self):
        '''
        Tests three qubit observables 120° apart in one plane, whose sum vanishes: the quantum provider reaches 0 < q, while
        a measure provider refuses the matrices and joint_spectral_provider refuses them as non-commuting

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the quantum minimum is wrong or a measure provider accepts the matrices

        Restrictions on when this method can be called:
            none
        '''

        angles = 2 * np.pi * np.arange(3) / 3
        a0, a1, a2 = (np.cos(angle) * PAULI_Z + np.sin(angle) * PAULI_X for angle in angles)
        family = ObservableFamily([{'a': [a0, a1], 'b': [a2]}])
        result = search_signs(family, QuantumProvider(GROUND_STATE))
        self.assertAlmostEqual(result.lhs, 0.0)
        self.assertTrue(result.below_classical_bound)
        cc = context_category(MatrixStarAlgebra.full_matrix_algebra(2), {'x': PAULI_X, 'z': PAULI_Z})
        for provider in (MeasureProvider(extend_state(GROUND_STATE, build_limit_extension(cc))), MeasureProvider(np.array([0.5, 0.5]))):
            try:
                search_signs(family, provider)
                self.fail()
            except DomainError as e:
                pass
        try:
            joint_spectral_provider([a0, a1, a2], GROUND_STATE)
            self.fail()
        except DomainError as e:
            pass

class TestSignSearch(unittest.TestCase):
    '''
    Tests roy_singh_lhs and search_signs

    Instance variables:
        none

    Public methods:
        test_measure_family
        test_random_measure_families
        test_anticommuting_family
        test_sign_count
        test_observable_cap
    '''

    def test_measure_family(self):
        '''
        Tests that the minimum over signs reaches but does not cross the classical bound for a family of functions

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the minimum, the minimizing signs or the threaded search is wrong

        Restrictions on when this method can be called:
            none
        '''

        family = make_measure_family()
        provider = MeasureProvider(np.full(4, 0.25))
        result = search_signs(family, provider)
        self.assertAlmostEqual(result.lhs, 2.0)
        self.assertEqual(result.signs, (-1, -1, -1, -1))
        self.assertAlmostEqual(result.margin, 0.0)
        self.assertFalse(result.below_classical_bound)
        self.assertAlmostEqual(roy_singh_lhs(family, [1, 1, 1, -1], provider), 6.0)
        threaded = search_signs(family, provider, Configuration(threads = 3))
        self.assertEqual(threaded.signs, result.signs)
        self.assertAlmostEqual(threaded.lhs, result.lhs)
        self.assertEqual(result.to_dict()['q'], 2)

    def test_random_measure_families(self):
        '''
        Tests that a thousand random measure instances, with up to three odd groups of up to nine ±1 functions in total
        on random weights, never go below the classical bound

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a minimum falls more than 1e-12 below q or is reported below the classical bound

        Restrictions on when this method can be called:
            none
        '''

        random_number_generator = np.random.default_rng(2)
        for trial in range(1000):
            q = int(random_number_generator.integers(1, 4))
            sizes = random_number_generator.choice([1, 3, 5], size = q)
            while sizes.sum() > 9:
                sizes = random_number_generator.choice([1, 3, 5], size = q)
            points = int(random_number_generator.integers(1, 9))
            groups = []
            for size in sizes:
                functions = random_number_generator.choice([-1, 1], size = (size, points)).tolist()
                split = int(random_number_generator.integers(1, size + 1))
                groups.append({'a': functions[:split], 'b': functions[split:]})
            family = ObservableFamily(groups)
            result = search_signs(family, MeasureProvider(random_number_generator.dirichlet(np.ones(points))))
            self.assertEqual(result.q, q)
            self.assertGreaterEqual(result.margin, -1e-12)
            self.assertGreaterEqual(result.lhs, q - 1e-12)
            self.assertFalse(result.below_classical_bound)

    def test_anticommuting_family(self):
        '''
        Tests the group σ_x, σ_y, σ_z in the ground state, where every sign vector gives 3

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the left-hand side or the minimizing signs are wrong

        Restrictions on when this method can be called:
            none
        '''

        family = ObservableFamily([{'a': [PAULI_X, PAULI_Y], 'b': [PAULI_Z]}])
        provider = QuantumProvider(GROUND_STATE)
        self.assertAlmostEqual(roy_singh_lhs(family, [1, -1, 1], provider), 3.0)
        result = search_signs(family, provider)
        self.assertAlmostEqual(result.lhs, 3.0)
        self.assertEqual(result.signs, (-1, -1, -1))
        self.assertFalse(result.below_classical_bound)

    def test_sign_count(self):
        '''
        Tests that roy_singh_lhs refuses a sign vector of the wrong length

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

        try:
            roy_singh_lhs(make_measure_family(), [1, 1], MeasureProvider(np.full(4, 0.25)))
            self.fail()
        except InputError as e:
            pass

    def test_observable_cap(self):
        '''
        Tests that search_signs refuses a family larger than the observable cap

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
            search_signs(make_measure_family(), MeasureProvider(np.full(4, 0.25)), Configuration(observable_cap = 3))
            self.fail()
        except SizeCapExceededError as e:
            self.assertEqual(e.size, 4)

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
