'''
Module for class TestMatrixStarAlgebra, which tests matrix *-algebras, Gel'fand spectra, context categories and Boolean blocks
'''

from contextualextension.Configuration import Configuration
from contextualextension.Errors import DomainError, SizeCapExceededError
from contextualextension.FiniteCategory import check_category
from contextualextension.MatrixStarAlgebra import *
import numpy as np
import unittest

M4_SEEDS = {name: pauli_string(name) for name in ('zi', 'iz', 'zz', 'xi', 'ix', 'xx')}

class TestMatrixStarAlgebra(unittest.TestCase):
    '''
    Tests the span operations and the generation of a MatrixStarAlgebra object

    Instance variables:
        none

    Public methods:
        test_generate_algebra
        test_check_star_closure
        test_coordinates
        test_intersection
        test_dimension_cap
        test_matrix_helpers
    '''

    def test_generate_algebra(self):
        '''
        Tests generate_algebra and is_commutative

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a generated algebra has the wrong dimension or commutativity

        Restrictions on when this method can be called:
            none
        '''

        self.assertEqual(generate_algebra([PAULI_X], 2).dimension, 2)
        self.assertTrue(is_commutative(generate_algebra([PAULI_X], 2)))
        full = generate_algebra([PAULI_X, PAULI_Z], 2)
        self.assertEqual(full.dimension, 4)
        self.assertFalse(is_commutative(full))
        self.assertTrue(full.span_equal(MatrixStarAlgebra.full_matrix_algebra(2)))
        self.assertEqual(generate_algebra([pauli_string('zi'), pauli_string('iz')], 4).dimension, 4)
        self.assertEqual(generate_algebra([pauli_string('zi'), pauli_string('xi')], 4).dimension, 4)
        self.assertEqual(generate_algebra([pauli_string('zi'), pauli_string('xi'), pauli_string('ix')], 4).dimension, 8)
        self.assertEqual(generate_algebra([], 3).dimension, 1)

    def test_check_star_closure(self):
        '''
        Tests check_star_closure on a *-algebra and on spans that are not *-algebras

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a closure defect is missed or invented

        Restrictions on when this method can be called:
            none
        '''

        self.assertTrue(generate_algebra([pauli_string('zx')], 4).check_star_closure().is_valid)
        raising = np.array([[0, 1], [0, 0]], dtype = complex)
        self.assertEqual(MatrixStarAlgebra([PAULI_I, raising]).check_star_closure().invariants, ['staralg.adjoint_closure'])
        self.assertEqual(MatrixStarAlgebra([PAULI_Z]).check_star_closure().invariants, ['staralg.product_closure', 'staralg.unital'])

    def test_coordinates(self):
        '''
        Tests coordinates and matrix_from_coordinates

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a matrix is not recovered from its coordinates or a matrix outside the span is accepted

        Restrictions on when this method can be called:
            none
        '''

        algebra = generate_algebra([PAULI_Z], 2)
        matrix = 2 * PAULI_I - 3 * PAULI_Z
        self.assertTrue(np.allclose(algebra.matrix_from_coordinates(algebra.coordinates(matrix)), matrix))
        self.assertTrue(algebra.contains(np.diag([5.0, -1.0])))
        self.assertFalse(algebra.contains(PAULI_X))
        try:
            algebra.coordinates(PAULI_X)
            self.fail()
        except DomainError as e:
            pass

    def test_intersection(self):
        '''
        Tests intersection and contains_algebra

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an intersection has the wrong span

        Restrictions on when this method can be called:
            none
        '''

        first = generate_algebra([pauli_string('zi'), pauli_string('ix')], 4)
        second = generate_algebra([pauli_string('zi'), pauli_string('iz')], 4)
        meet = first.intersection(second)
        self.assertEqual(meet.dimension, 2)
        self.assertTrue(meet.contains(pauli_string('zi')))
        self.assertTrue(first.contains_algebra(meet))
        self.assertTrue(second.contains_algebra(meet))
        self.assertEqual(generate_algebra([PAULI_X], 2).intersection(generate_algebra([PAULI_Z], 2)).dimension, 1)

    def test_dimension_cap(self):
        '''
        Tests that generate_algebra refuses an ambient dimension above the cap

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
            generate_algebra([np.eye(32)], 32)
            self.fail()
        except SizeCapExceededError as e:
            self.assertEqual(e.cap, 16)
        self.assertEqual(generate_algebra([np.eye(32)], 32, Configuration(dimension_cap = 32)).dimension, 1)

    def test_matrix_helpers(self):
        '''
        Tests pauli_string, is_projection and operator_less_or_equal

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a helper gives a wrong answer

        Restrictions on when this method can be called:
            none
        '''

        self.assertTrue(np.allclose(pauli_string('zi'), np.diag([1, 1, -1, -1])))
        self.assertTrue(is_projection(rank_one_projection([1, 1])))
        self.assertFalse(is_projection(PAULI_X))
        self.assertTrue(operator_less_or_equal(np.diag([1.0, 0.0]), PAULI_I))
        self.assertFalse(operator_less_or_equal(PAULI_I, np.diag([1.0, 0.0])))
        self.assertAlmostEqual(commutator_norm(PAULI_X, PAULI_Z), 2.0)

class TestGelfandSpectrum(unittest.TestCase):
    '''
    Tests gelfand_spectrum

    Instance variables:
        none

    Public methods:
        test_diagonal_algebra
        test_degenerate_algebra
        test_seed_independence
        test_noncommutative_algebra
    '''

    def test_diagonal_algebra(self):
        '''
        Tests the spectrum of the algebra generated by σ_z

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the characters are not the two diagonal projections in canonical order

        Restrictions on when this method can be called:
            none
        '''

        spectrum = gelfand_spectrum(generate_algebra([PAULI_Z], 2))
        self.assertEqual(len(spectrum), 2)
        self.assertTrue(np.allclose(spectrum[0].projection, np.diag([1, 0])))
        self.assertTrue(np.allclose(spectrum[1].projection, np.diag([0, 1])))
        self.assertAlmostEqual(spectrum[0].evaluate(PAULI_Z).real, 1.0)
        self.assertAlmostEqual(spectrum[1].evaluate(PAULI_Z).real, -1.0)
        self.assertEqual(spectrum[0].rank, 1)

    def test_degenerate_algebra(self):
        '''
        Tests the spectrum of an algebra whose minimal projections have rank two

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the spectrum does not consist of two rank-two characters summing to the identity

        Restrictions on when this method can be called:
            none
        '''

        spectrum = gelfand_spectrum(generate_algebra([pauli_string('zz')], 4))
        self.assertEqual([character.rank for character in spectrum], [2, 2])
        self.assertTrue(np.allclose(sum(character.projection for character in spectrum), np.eye(4)))
        self.assertEqual(sorted(round(character.evaluate(pauli_string('zz')).real) for character in spectrum), [-1, 1])

    def test_seed_independence(self):
        '''
        Tests that the canonical order of the characters does not depend on the seed

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if two seeds give different spectra

        Restrictions on when this method can be called:
            none
        '''

        generators = [pauli_string('zi'), pauli_string('iz')]
        first = gelfand_spectrum(generate_algebra(generators, 4), Configuration(seed = 1))
        second = gelfand_spectrum(generate_algebra(generators, 4), Configuration(seed = 7))
        self.assertEqual(len(first), 4)
        for a, b in zip(first, second):
            self.assertTrue(np.allclose(a.projection, b.projection))

    def test_noncommutative_algebra(self):
        '''
        Tests that gelfand_spectrum refuses a noncommutative algebra

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

        try:
            gelfand_spectrum(generate_algebra([PAULI_X, PAULI_Z], 2))
            self.fail()
        except DomainError as e:
            pass

class TestContextCategory(unittest.TestCase):
    '''
    Tests context_category and the checks of a ContextCategory object

    Instance variables:
        none

    Public methods:
        test_qubit_contexts
        test_two_qubit_contexts
        test_invalid_seeds
        test_noncommutative_context
        test_context_groups
    '''

    def test_qubit_contexts(self):
        '''
        Tests the context category generated by σ_x and σ_z

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the contexts or their order are wrong

        Restrictions on when this method can be called:
            none
        '''

        cc = context_category(MatrixStarAlgebra.full_matrix_algebra(2), {'x': PAULI_X, 'z': PAULI_Z})
        self.assertEqual(cc.labels, ('x', 'z', 'scalars'))
        self.assertEqual(cc.inclusions(), [(2, 0), (2, 1)])
        self.assertEqual(cc.minimum, 2)
        self.assertTrue(cc.check().is_valid)
        category = cc.to_fin_category()
        self.assertTrue(check_category(category).is_valid)
        self.assertEqual(category.hom('scalars', 'x'), ('scalars<=x',))

    def test_two_qubit_contexts(self):
        '''
        Tests the context category of six commuting and anticommuting two-qubit Pauli strings

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the context count or the checks are wrong

        Restrictions on when this method can be called:
            none
        '''

        cc = context_category(MatrixStarAlgebra.full_matrix_algebra(4), M4_SEEDS)
        self.assertEqual(len(cc), 12)
        self.assertIn('zi+iz+zz', cc.labels)
        self.assertEqual(cc.context('zi+iz+zz').dimension, 4)
        self.assertTrue(cc.check().is_valid)
        self.assertTrue(all(i == cc.minimum or (cc.minimum, i) in cc.order for i in range(len(cc))))
        self.assertTrue(set(cc.covering_inclusions()) <= set(cc.inclusions()))

    def test_invalid_seeds(self):
        '''
        Tests that seeds that are not self-adjoint or lie outside the ambient algebra are refused

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

        try:
            context_category(MatrixStarAlgebra.full_matrix_algebra(2), [np.array([[0, 1], [0, 0]])])
            self.fail()
        except DomainError as e:
            pass
        try:
            context_category(generate_algebra([PAULI_Z], 2), [PAULI_X])
            self.fail()
        except DomainError as e:
            pass

    def test_noncommutative_context(self):
        '''
        Tests that check reports a context that is not commutative

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the defect goes unreported

        Restrictions on when this method can be called:
            none
        '''

        ambient = MatrixStarAlgebra.full_matrix_algebra(2)
        scalars = MatrixStarAlgebra([PAULI_I])
        cc = ContextCategory(ambient, [generate_algebra([PAULI_X, PAULI_Z], 2), scalars], ['bad', 'scalars'], [[], []])
        self.assertIn('staralg.context_commutative', cc.check().invariants)

    def test_context_groups(self):
        '''
        Tests context_category_from_groups on the projections of two qubit bases and on a group that does not commute

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the contexts are wrong or a noncommutative group is accepted

        Restrictions on when this method can be called:
            none
        '''

        ambient = MatrixStarAlgebra.full_matrix_algebra(2)
        groups = [
            [rank_one_projection([1, 0]), rank_one_projection([0, 1])],
            [rank_one_projection([1, 1]), rank_one_projection([1, -1])]
        ]
        cc = context_category_from_groups(ambient, groups)
        self.assertEqual(cc.labels, ('B0', 'B1', 'scalars'))
        self.assertEqual(cc.context('B1').dimension, 2)
        self.assertTrue(cc.context('B1').contains(PAULI_X))
        self.assertTrue(cc.check().is_valid)
        self.assertEqual(context_category_from_groups(ambient, groups, labels = ['z', 'x']).labels, ('z', 'x', 'scalars'))
        try:
            context_category_from_groups(ambient, [[PAULI_X, PAULI_Z]])
            self.fail()
        except DomainError as e:
            pass

class TestBooleanBlock(unittest.TestCase):
    '''
    Tests boolean_blocks and check_boolean_block

    Instance variables:
        none

    Public methods:
        test_boolean_blocks
        test_non_projection
    '''

    def test_boolean_blocks(self):
        '''
        Tests the blocks of two noncommuting rank-one projections and of two commuting ones

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a block has the wrong size or fails its lattice checks

        Restrictions on when this method can be called:
            none
        '''

        blocks = boolean_blocks([rank_one_projection([1, 0]), rank_one_projection([1, 1])])
        self.assertEqual([block.size for block in blocks], [4, 4])
        for block in blocks:
            self.assertTrue(check_boolean_block(block).is_valid)

        blocks = boolean_blocks([np.diag([1.0, 0.0, 0.0]), np.diag([0.0, 1.0, 0.0])])
        self.assertEqual(len(blocks), 1)
        self.assertEqual(blocks[0].size, 8)
        self.assertTrue(blocks[0].contains(np.diag([1.0, 0.0, 1.0])))
        self.assertTrue(check_boolean_block(blocks[0]).is_valid)

    def test_non_projection(self):
        '''
        Tests that boolean_blocks refuses a matrix that is not a projection

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

        try:
            boolean_blocks([PAULI_X])
            self.fail()
        except DomainError as e:
            pass

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
