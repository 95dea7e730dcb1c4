'''
Module for class TestSpectralPresheaf, which tests spectral presheaves, global sections, daseinisation and finite frames
'''

from contextualextension.Configuration import Configuration
from contextualextension.Errors import DomainError, InputError, StructuralError
from contextualextension.FiniteCategory import check_cone, check_diagram
from contextualextension.MatrixStarAlgebra import (
    PAULI_X, PAULI_Z, MatrixStarAlgebra, context_category, generate_algebra, operator_less_or_equal, rank_one_projection
)
from contextualextension.Serialization import load_json, ray_family_from_dict
from contextualextension.SpectralPresheaf import *
import numpy as np
from pathlib import Path
import unittest

SCENARIOS = Path(__file__).resolve().parent.parent / 'scenarios'

def load_bases(file_name):
    return ray_family_from_dict(load_json(SCENARIOS / file_name))[1]

def make_random_unitary(dim, random_number_generator):
    q, r = np.linalg.qr(random_number_generator.standard_normal((dim, dim)) + 1j * random_number_generator.standard_normal((dim, dim)))
    return q

def make_nested_contexts(unitary, blocks):
    '''
    Provides a maximal context diagonal in the columns of unitary and the coarser context that only resolves blocks of columns
    '''

    dim = unitary.shape[0]
    fine = generate_algebra([unitary @ np.diag(np.arange(1.0, dim + 1)) @ unitary.conj().T], dim)
    coarse = generate_algebra([unitary @ np.diag(np.asarray(blocks, dtype = float)) @ unitary.conj().T], dim)
    return fine, coarse

class TestSpectralPresheaf(unittest.TestCase):
    '''
    Tests build_spectral_presheaf, check_presheaf_functoriality and global_sections

    Instance variables:
        none

    Public methods:
        test_kochen_specker_family
        test_qubit_family
        test_threaded_search
        test_corrupted_restriction
        test_invalid_families
        test_coarse_graining_cone
    '''

    def test_kochen_specker_family(self):
        '''
        Tests that the eighteen-ray family of nine bases in dimension four has no global section

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a global section is found or the presheaf is not functorial

        Restrictions on when this method can be called:
            none
        '''

        bases = load_bases('cabello18.json')
        cc = ray_family_category(bases)
        self.assertEqual(cc.labels[:9], tuple(f'B{b}' for b in range(9)))
        self.assertIn('B0&B1', cc.labels)
        self.assertEqual(cc.labels[-1], 'scalars')
        p = build_spectral_presheaf(cc)
        self.assertTrue(check_presheaf_functoriality(p).is_valid)
        self.assertEqual(global_sections(p), [])
        self.assertTrue(has_parity_obstruction(bases))

    def test_qubit_family(self):
        '''
        Tests that two bases of a qubit admit global sections

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the number of sections is wrong

        Restrictions on when this method can be called:
            none
        '''

        bases = load_bases('qubit_bases.json')
        cc = ray_family_category(bases)
        self.assertEqual(cc.labels, ('B0', 'B1', 'scalars'))
        p = build_spectral_presheaf(cc)
        sections = global_sections(p)
        self.assertEqual(len(sections), 4)
        self.assertEqual(sections[0].as_dict(), {'B0': 0, 'B1': 0, 'scalars': 0})
        self.assertEqual(len(global_sections(p, limit = 1)), 1)
        self.assertFalse(has_parity_obstruction(bases))

    def test_threaded_search(self):
        '''
        Tests that a search split over threads finds the same sections

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the threaded and sequential searches disagree

        Restrictions on when this method can be called:
            none
        '''

        p = build_spectral_presheaf(ray_family_category(load_bases('qubit_bases.json')))
        sequential = global_sections(p)
        threaded = global_sections(p, configuration = Configuration(threads = 2))
        self.assertEqual(sorted(section.assignment for section in sequential), sorted(section.assignment for section in threaded))

    def test_corrupted_restriction(self):
        '''
        Tests that check_presheaf_functoriality reports a restriction along an identity that is not the identity

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

        p = build_spectral_presheaf(ray_family_category(load_bases('qubit_bases.json')))
        p.restrictions[(0, 0)] = {0: 1, 1: 0}
        self.assertEqual(check_presheaf_functoriality(p).invariants, ['presheaf.identity'])
        try:
            p.restrict(0, 1, 0)
            self.fail()
        except DomainError as e:
            pass

    def test_invalid_families(self):
        '''
        Tests that ray_family_category refuses an empty family and a basis that is not orthogonal

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
            ray_family_category([])
            self.fail()
        except InputError as e:
            pass
        try:
            ray_family_category([[[1, 0], [1, 1]]])
            self.fail()
        except DomainError as e:
            pass

    def test_coarse_graining_cone(self):
        '''
        Tests coarse_graining_cone

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the cone does not commute or an invalid inclusion is accepted

        Restrictions on when this method can be called:
            none
        '''

        p = build_spectral_presheaf(ray_family_category(load_bases('cabello18.json')))
        cone, diagram = coarse_graining_cone(p, 'B0&B1', 'B0')
        self.assertTrue(check_diagram(diagram).is_valid)
        self.assertTrue(check_cone(cone, diagram).is_valid)
        self.assertEqual(len(cone.apex), 2)
        try:
            coarse_graining_cone(p, 'B0', 'B1')
            self.fail()
        except DomainError as e:
            pass

class TestDaseinisation(unittest.TestCase):
    '''
    Tests inner and outer daseinisation and operator intervals

    Instance variables:
        none

    Public methods:
        test_daseinisation
        test_daseinisation_order
        test_operator_interval
        test_daseinisation_table
    '''

    def test_daseinisation(self):
        '''
        Tests outer_daseinisation and inner_daseinisation in the context of σ_z

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an approximation is wrong or a non-projection is accepted

        Restrictions on when this method can be called:
            none
        '''

        v = generate_algebra([PAULI_Z], 2)
        plus = rank_one_projection([1, 1])
        self.assertTrue(np.allclose(outer_daseinisation(plus, v), np.eye(2)))
        self.assertTrue(np.allclose(inner_daseinisation(plus, v), np.zeros((2, 2))))
        up = np.diag([1.0, 0.0])
        self.assertTrue(np.allclose(outer_daseinisation(up, v), up))
        self.assertTrue(np.allclose(inner_daseinisation(up, v), up))
        try:
            outer_daseinisation(PAULI_X, v)
            self.fail()
        except DomainError as e:
            pass

    def test_daseinisation_order(self):
        '''
        Tests inner ≤ P ≤ outer on random projections, and that a coarser context gives a larger outer and a smaller inner
        daseinisation

        Each projection is the span of some columns S of a random unitary and one vector mixing columns T outside S, so that
        in the context diagonal in those columns the outer daseinisation is the sum over S ∪ T and the inner one the sum
        over S, with T added when it is a single column.

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an order fails by more than 1e-9 or a daseinisation differs from its expected sum

        Restrictions on when this method can be called:
            none
        '''

        random_number_generator = np.random.default_rng(7)
        for trial in range(50):
            dim = int(random_number_generator.integers(2, 5))
            unitary = make_random_unitary(dim, random_number_generator)
            order = random_number_generator.permutation(dim)
            kept = order[:int(random_number_generator.integers(0, dim))]
            rest = order[len(kept):]
            mixed = rest[:int(random_number_generator.integers(1, len(rest) + 1))]
            vector = unitary[:, mixed] @ (random_number_generator.standard_normal(len(mixed)) + 1j * random_number_generator.standard_normal(len(mixed)))
            columns = np.linalg.qr(np.column_stack([unitary[:, kept], vector]))[0]
            projection = columns @ columns.conj().T
            blocks = np.zeros(dim) if trial % 5 == 0 else random_number_generator.integers(0, dim, size = dim)
            fine, coarse = make_nested_contexts(unitary, blocks)
            column_projection = lambda indices: sum((rank_one_projection(unitary[:, i]) for i in indices), np.zeros((dim, dim), dtype = complex))
            outer_fine = outer_daseinisation(projection, fine)
            inner_fine = inner_daseinisation(projection, fine)
            self.assertTrue(np.allclose(outer_fine, column_projection(np.concatenate([kept, mixed]))))
            self.assertTrue(np.allclose(inner_fine, column_projection(np.concatenate([kept, mixed]) if len(mixed) == 1 else kept)))
            outer_coarse = outer_daseinisation(projection, coarse)
            inner_coarse = inner_daseinisation(projection, coarse)
            for smaller, larger in (
                (inner_fine, projection),
                (projection, outer_fine),
                (inner_coarse, projection),
                (projection, outer_coarse),
                (outer_fine, outer_coarse),
                (inner_coarse, inner_fine)
            ):
                self.assertTrue(operator_less_or_equal(smaller, larger, 1e-9))
            if trial % 5 == 0:
                self.assertTrue(np.allclose(outer_coarse, np.eye(dim)))

    def test_operator_interval(self):
        '''
        Tests operator_interval for σ_x and σ_z in the context of σ_z

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an interval is wrong

        Restrictions on when this method can be called:
            none
        '''

        v = generate_algebra([PAULI_Z], 2)
        for chi in (0, 1):
            lower, upper = operator_interval(PAULI_X, v, chi)
            self.assertAlmostEqual(lower, -1.0)
            self.assertAlmostEqual(upper, 1.0)
        self.assertEqual(tuple(round(end) for end in operator_interval(PAULI_Z, v, 0)), (1, 1))
        self.assertEqual(tuple(round(end) for end in operator_interval(PAULI_Z, v, 1)), (-1, -1))
        try:
            operator_interval(np.array([[0, 1], [0, 0]]), v, 0)
            self.fail()
        except DomainError as e:
            pass

    def test_daseinisation_table(self):
        '''
        Tests daseinisation_table over the qubit contexts {σ_x}, {σ_z} and the scalars

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the table has the wrong rows or an interval is reversed

        Restrictions on when this method can be called:
            none
        '''

        cc = context_category(MatrixStarAlgebra.full_matrix_algebra(2), {'x': PAULI_X, 'z': PAULI_Z})
        table = daseinisation_table(PAULI_X, cc)
        self.assertEqual(list(table.columns), ['context', 'character', 'lower', 'upper'])
        self.assertEqual(len(table), 5)
        self.assertTrue((table['lower'] <= table['upper'] + 1e-9).all())
        x_rows = table[table['context'] == 'x']
        self.assertTrue(np.allclose(x_rows['lower'], x_rows['upper']))
        scalar_row = table[table['context'] == 'scalars'].iloc[0]
        self.assertAlmostEqual(scalar_row['lower'], -1.0)
        self.assertAlmostEqual(scalar_row['upper'], 1.0)

class TestFiniteFrame(unittest.TestCase):
    '''
    Tests finite frames and frame homomorphisms

    Instance variables:
        none

    Public methods:
        test_frames
        test_preimage_map
        test_corrupted_frame_hom
    '''

    def test_frames(self):
        '''
        Tests FiniteFrame.powerset and FiniteFrame.from_opens

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a frame has the wrong open sets

        Restrictions on when this method can be called:
            none
        '''

        self.assertEqual(len(FiniteFrame.powerset(3).opens), 8)
        self.assertTrue(FiniteFrame.powerset(3).check().is_valid)
        generated = FiniteFrame.from_opens([{0, 1}, {1, 2}])
        self.assertEqual(set(generated.opens), {frozenset(), frozenset({1}), frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 1, 2})})
        self.assertTrue(generated.check().is_valid)
        self.assertFalse(FiniteFrame({0, 1}, [set(), {0}, {1}]).check().is_valid)
        try:
            FiniteFrame({0}, [{1}])
            self.fail()
        except StructuralError as e:
            pass

    def test_preimage_map(self):
        '''
        Tests that the preimage map of a function is a frame homomorphism

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the preimage map is reported invalid

        Restrictions on when this method can be called:
            none
        '''

        codomain = FiniteFrame.from_opens([{'a'}, {'b'}])
        domain = FiniteFrame.powerset(3)
        f = preimage_map({0: 'a', 1: 'a', 2: 'b'}, codomain, domain)
        self.assertEqual(f[frozenset({'a'})], frozenset({0, 1}))
        self.assertTrue(check_frame_hom(f, codomain, domain).is_valid)

    def test_corrupted_frame_hom(self):
        '''
        Tests check_frame_hom on maps that do not preserve top or that leave the target frame

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a defect goes unreported

        Restrictions on when this method can be called:
            none
        '''

        codomain = FiniteFrame.from_opens([{'a'}, {'b'}])
        domain = FiniteFrame.powerset(3)
        f = preimage_map({0: 'a', 1: 'a', 2: 'b'}, codomain, domain)
        f[frozenset({'a', 'b'})] = frozenset({0, 1})
        self.assertIn('presheaf.frame_top', check_frame_hom(f, codomain, domain).invariants)
        coarse = FiniteFrame({0, 1, 2}, [set(), {0, 1, 2}])
        self.assertEqual(check_frame_hom(preimage_map({0: 'a', 1: 'a', 2: 'b'}, codomain, domain), codomain, coarse).invariants, ['presheaf.frame_typing'])

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
