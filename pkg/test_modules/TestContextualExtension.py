'''
Module for class TestExtendedAlgebra, which tests the contextual extension of a context category, its states and the map back to the ambient algebra
'''

from contextualextension.Configuration import Configuration
from contextualextension.ContextualExtension import *
from contextualextension.Errors import DomainError, SizeCapExceededError
from contextualextension.FiniteCategory import check_cone, check_diagram, check_universal_property, enumerate_cones, limit_of_diagram
from contextualextension.MatrixStarAlgebra import PAULI_X, PAULI_Z, MatrixStarAlgebra, context_category, pauli_string
import numpy as np
import unittest

def make_qubit_extension():
    cc = context_category(MatrixStarAlgebra.full_matrix_algebra(2), {'x': PAULI_X, 'z': PAULI_Z})
    return cc, build_limit_extension(cc)

def make_two_qubit_category():
    seeds = {name: pauli_string(name) for name in ('zi', 'iz', 'zz', 'xi', 'ix', 'xx')}
    return context_category(MatrixStarAlgebra.full_matrix_algebra(4), seeds)

def make_random_density_matrix(dim, seed):
    random_number_generator = np.random.default_rng(seed)
    g = random_number_generator.standard_normal((dim, dim)) + 1j * random_number_generator.standard_normal((dim, dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)

def make_random_unitary(dim, random_number_generator):
    q, r = np.linalg.qr(random_number_generator.standard_normal((dim, dim)) + 1j * random_number_generator.standard_normal((dim, dim)))
    return q

def make_random_context_category(dim, random_number_generator, shared_column = False):
    '''
    Provides the context category of two commuting seeds diagonal in one random basis and a third seed diagonal in
    another, which keeps the first column of the first basis when shared_column is True
    '''

    first = make_random_unitary(dim, random_number_generator)
    if shared_column:
        rotation = np.eye(dim, dtype = complex)
        rotation[1:, 1:] = make_random_unitary(dim - 1, random_number_generator)
        second = first @ rotation
    else:
        second = make_random_unitary(dim, random_number_generator)
    diagonal = lambda basis: basis @ np.diag(random_number_generator.standard_normal(dim)) @ basis.conj().T
    seeds = {name: (m + m.conj().T) / 2 for name, m in (('a', diagonal(first)), ('b', diagonal(first)), ('c', diagonal(second)))}
    return context_category(MatrixStarAlgebra.full_matrix_algebra(dim), seeds)

class TestExtendedAlgebra(unittest.TestCase):
    '''
    Tests build_limit_extension, embed and the operations of an ExtendedAlgebra object

    Instance variables:
        none

    Public methods:
        test_build_limit_extension
        test_embed
        test_check_limit_agreement
        test_random_limit_agreement
        test_carrier_cap
        test_point_valuation
        test_element_table
    '''

    def test_build_limit_extension(self):
        '''
        Tests the carrier of the extension of the qubit contexts {σ_x}, {σ_z} and the scalars

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the carrier has the wrong labels, sizes or point order

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        self.assertEqual(ext.carrier.labels, ('x', 'z', 'scalars'))
        self.assertEqual(ext.carrier.sizes, (2, 2, 1))
        self.assertEqual(ext.size, 4)
        self.assertEqual(ext.carrier.point(1), (0, 1, 0))
        self.assertEqual(ext.carrier.point_index((1, 0, 0)), 2)
        self.assertEqual(list(ext.carrier.index.names), ['x', 'z', 'scalars'])
        self.assertTrue(np.allclose(ext.multiply(ext.unit(), [1, 2, 3, 4]), [1, 2, 3, 4]))
        self.assertTrue(np.allclose(ext.adjoint([1j, 0, 0, 0]), [-1j, 0, 0, 0]))
        try:
            ext.add(ext.unit(), np.ones(3))
            self.fail()
        except DomainError as e:
            pass

    def test_embed(self):
        '''
        Tests embed

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an embedded matrix has the wrong values or a matrix outside its context is accepted

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        self.assertTrue(np.allclose(embed(PAULI_Z, 'z', ext), [1, -1, 1, -1]))
        self.assertTrue(np.allclose(embed(PAULI_X, 'x', ext), [1, 1, -1, -1]))
        self.assertTrue(np.allclose(embed(np.eye(2), 'scalars', ext), ext.unit()))
        try:
            embed(PAULI_X, 'z', ext)
            self.fail()
        except DomainError as e:
            pass

    def test_check_limit_agreement(self):
        '''
        Tests check_limit_agreement, spectrum_diagram and restriction_table

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the carrier disagrees with the limits of the spectrum diagrams

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        self.assertTrue(check_limit_agreement(ext, cc).is_valid)
        self.assertTrue(check_diagram(spectrum_diagram(cc, True)).is_valid)
        self.assertEqual(restriction_table(cc.context('scalars'), cc.context('z')), {0: 0, 1: 0})
        partial = build_limit_extension(cc, labels = ['x', 'z'])
        self.assertEqual(check_limit_agreement(partial, cc).invariants, ['ctxext.limit_agreement'])

    def test_random_limit_agreement(self):
        '''
        Tests check_limit_agreement on twenty random context families in dimensions two to four, and the universal
        property of the limit of each spectrum diagram with restrictions against every cone with at most three apex points

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a carrier disagrees with a limit or a cone does not factor uniquely through the limit

        Restrictions on when this method can be called:
            none
        '''

        random_number_generator = np.random.default_rng(11)
        for trial in range(20):
            dim = int(random_number_generator.integers(2, 5))
            cc = make_random_context_category(dim, random_number_generator, shared_column = trial % 2 == 1)
            ext = build_limit_extension(cc)
            self.assertTrue(check_limit_agreement(ext, cc).is_valid)
            self.assertEqual(len(limit_of_diagram(spectrum_diagram(cc)).apex), ext.size)
            diagram = spectrum_diagram(cc, True)
            limit = limit_of_diagram(diagram)
            self.assertTrue(check_cone(limit, diagram).is_valid)
            self.assertTrue(check_universal_property(limit, diagram, enumerate_cones(diagram, 3)))

    def test_carrier_cap(self):
        '''
        Tests that build_limit_extension refuses a product spectrum above the carrier cap

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

        cc = make_two_qubit_category()
        try:
            build_limit_extension(cc, Configuration(carrier_cap = 1000))
            self.fail()
        except SizeCapExceededError as e:
            self.assertEqual(e.size, 4 ** 5 * 2 ** 6)

    def test_point_valuation(self):
        '''
        Tests that the embeddings of one observable through two contexts disagree at some points and agree at others

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the two embeddings coincide everywhere or nowhere

        Restrictions on when this method can be called:
            none
        '''

        cc = make_two_qubit_category()
        ext = build_limit_extension(cc, labels = ['zi+iz+zz', 'zi+ix'])
        self.assertEqual(ext.size, 16)
        pairs = {tuple(np.round(np.real(point_valuation(pauli_string('zi'), 'zi+iz+zz', 'zi+ix', row, ext)))) for row in range(ext.size)}
        self.assertEqual(pairs, {(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)})
        first, second = point_valuation(pauli_string('zi'), 'zi+iz+zz', 'zi+ix', (0, 0), ext)
        self.assertAlmostEqual(first, second)
        try:
            point_valuation(pauli_string('iz'), 'zi+iz+zz', 'zi+ix', 0, ext)
            self.fail()
        except DomainError as e:
            pass

    def test_element_table(self):
        '''
        Tests element_table and extension_to_dict

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the exported values are wrong

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        table = element_table(ext, {'z': embed(PAULI_Z, 'z', ext)})
        self.assertEqual(len(table), 4)
        self.assertAlmostEqual(table.loc[(0, 1, 0), 'z'].real, -1.0)
        data = extension_to_dict(ext, elements = {'z': embed(PAULI_Z, 'z', ext)})
        self.assertEqual(data['sizes'], [2, 2, 1])
        self.assertEqual(data['points'][1], {'x': 0, 'z': 1, 'scalars': 0})
        self.assertAlmostEqual(data['elements']['z'][1][0], -1.0)
        self.assertAlmostEqual(data['elements']['z'][1][1], 0.0)

class TestExtendedState(unittest.TestCase):
    '''
    Tests extend_state, evaluate_state and marginalize_state

    Instance variables:
        none

    Public methods:
        test_extend_pure_state
        test_state_consistency
        test_random_state_consistency
        test_invalid_density_matrices
        test_marginalize_state
    '''

    def test_extend_pure_state(self):
        '''
        Tests the extension of |0⟩⟨0| to the qubit contexts

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the weights or marginals are wrong

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        mu = extend_state(np.diag([1.0, 0.0]), ext)
        self.assertTrue(np.allclose(mu.marginals['x'], [0.5, 0.5]))
        self.assertTrue(np.allclose(mu.marginals['z'], [1.0, 0.0]))
        self.assertTrue(np.allclose(mu.weights, [0.5, 0.0, 0.5, 0.0]))
        self.assertAlmostEqual(evaluate_state(mu, embed(PAULI_Z, 'z', ext)), 1.0)
        self.assertAlmostEqual(evaluate_state(mu, embed(PAULI_X, 'x', ext)), 0.0)
        self.assertAlmostEqual(evaluate_state(mu, ext.unit()), 1.0)

    def test_state_consistency(self):
        '''
        Tests that the extended state reproduces Tr(ρA) for every seed of every context of the two-qubit category

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an expectation differs by more than 1e-8

        Restrictions on when this method can be called:
            none
        '''

        cc = make_two_qubit_category()
        ext = build_limit_extension(cc)
        rho = make_random_density_matrix(4, 3)
        mu = extend_state(rho, ext)
        self.assertAlmostEqual(float(np.sum(mu.weights)), 1.0)
        self.assertTrue(np.all(mu.weights >= 0))
        for label, generators in zip(cc.labels, cc.generators):
            for generator in generators:
                expected = complex(np.trace(rho @ generator))
                self.assertLessEqual(abs(evaluate_state(mu, embed(generator, label, ext)) - expected), 1e-8)

    def test_random_state_consistency(self):
        '''
        Tests evaluate_state(extend_state(ρ), embed(A, V)) = Tr(ρA) on a hundred random triples of a density matrix, a
        context of a random family and an element of that context, in dimensions two to four

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an expectation differs by more than 1e-8

        Restrictions on when this method can be called:
            none
        '''

        random_number_generator = np.random.default_rng(5)
        for trial in range(100):
            dim = int(random_number_generator.integers(2, 5))
            cc = make_random_context_category(dim, random_number_generator, shared_column = trial % 2 == 1)
            ext = build_limit_extension(cc)
            rho = make_random_density_matrix(dim, 1000 + trial)
            label = cc.labels[int(random_number_generator.integers(0, len(cc.labels)))]
            basis = cc.context(label).basis
            coefficients = random_number_generator.standard_normal(len(basis)) + 1j * random_number_generator.standard_normal(len(basis))
            a = sum(c * element for c, element in zip(coefficients, basis))
            mu = extend_state(rho, ext)
            self.assertLessEqual(abs(evaluate_state(mu, embed(a, label, ext)) - complex(np.trace(rho @ a))), 1e-8)

    def test_invalid_density_matrices(self):
        '''
        Tests that extend_state refuses matrices that are not density matrices

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

        cc, ext = make_qubit_extension()
        for matrix in (np.eye(2), np.diag([2.0, -1.0]), np.array([[0.5, 0.5], [0.0, 0.5]])):
            try:
                extend_state(matrix, ext)
                self.fail()
            except DomainError as e:
                pass

    def test_marginalize_state(self):
        '''
        Tests marginalize_state with a reordered sub-family of contexts

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the marginal weights are not in the order of the requested labels

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        mu = extend_state(np.diag([1.0, 0.0]), ext)
        marginal = marginalize_state(mu, ['z', 'x'])
        self.assertEqual(marginal.carrier.labels, ('z', 'x'))
        self.assertTrue(np.allclose(marginal.weights, [0.5, 0.5, 0.0, 0.0]))
        self.assertTrue(np.allclose(marginalize_state(mu, ['x']).weights, [0.5, 0.5]))

class TestAmbientProjection(unittest.TestCase):
    '''
    Tests the map from the extension back to the ambient algebra and the context cones built from it

    Instance variables:
        none

    Public methods:
        test_apply
        test_matrix
        test_context_cone
    '''

    def test_apply(self):
        '''
        Tests that the ambient projection inverts every embedding and is not multiplicative

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an embedded matrix is not recovered

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        phi = ambient_projection(ext)
        self.assertTrue(np.allclose(phi.apply(ext.unit()), np.eye(2)))
        self.assertTrue(np.allclose(phi.apply(embed(PAULI_Z, 'z', ext)), PAULI_Z))
        self.assertTrue(np.allclose(phi.apply(embed(2 * np.eye(2) + PAULI_X, 'x', ext)), 2 * np.eye(2) + PAULI_X))
        product = ext.multiply(embed(PAULI_Z, 'z', ext), embed(PAULI_X, 'x', ext))
        self.assertFalse(np.allclose(phi.apply(product), PAULI_Z @ PAULI_X))

    def test_matrix(self):
        '''
        Tests that AmbientProjection.matrix agrees with AmbientProjection.apply

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the two forms of the map differ

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        phi = ambient_projection(ext)
        e = np.array([1.0, -2.0, 0.5j, 3.0])
        self.assertEqual(phi.matrix().shape, (4, 4))
        self.assertTrue(np.allclose((phi.matrix() @ e).reshape(2, 2), phi.apply(e)))
        try:
            phi.matrix(Configuration(carrier_cap = 8))
            self.fail()
        except SizeCapExceededError as e:
            pass

    def test_context_cone(self):
        '''
        Tests context_cone for every context and a cone with a corrupted inclusion leg

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a context cone does not commute or the corrupted cone does

        Restrictions on when this method can be called:
            none
        '''

        cc, ext = make_qubit_extension()
        for label in cc.labels:
            cone, diagram = context_cone(ext, label)
            self.assertTrue(check_diagram(diagram).is_valid)
            self.assertTrue(check_cone(cone, diagram).is_valid)
        cone, diagram = context_cone(ext, 'z')
        cone.legs['A'] = np.zeros_like(cone.legs['A'])
        self.assertEqual(check_cone(cone, diagram).invariants, ['fincat.cone_commutes'])

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
