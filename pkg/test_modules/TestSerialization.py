'''
Module for class TestSerialization, which tests reading and writing the JSON files of the package
'''

from contextualextension.Errors import DomainError, InputError, StructuralError
from contextualextension.FiniteCategory import check_category
from contextualextension.LocalNet import Region
from contextualextension.Serialization import *
import numpy as np
from pathlib import Path
import unittest

SCENARIOS = Path(__file__).resolve().parent.parent / 'scenarios'

class TestSerialization(unittest.TestCase):
    '''
    Tests the readers and writers of the Serialization module

    Instance variables:
        none

    Public methods:
        test_matrices
        test_load_json
        test_algebra_spec
        test_ray_family
        test_category
        test_family
        test_net
    '''

    def test_matrices(self):
        '''
        Tests matrix_to_data and matrix_from_data on complex, real and malformed data

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a matrix is read wrongly or malformed data is accepted

        Restrictions on when this method can be called:
            none
        '''

        y = np.array([[0, -1j], [1j, 0]])
        self.assertEqual(matrix_to_data(y)[0][1], [0.0, -1.0])
        self.assertTrue(np.allclose(matrix_from_data(matrix_to_data(y)), y))
        self.assertTrue(np.allclose(matrix_from_data([[1, 0], [0, -1]]), np.diag([1, -1])))
        for data in ([[1, 0, 0], [0, 1, 0]], [['a', 'b'], ['c', 'd']]):
            try:
                matrix_from_data(data)
                self.fail()
            except InputError as e:
                pass

    def test_load_json(self):
        '''
        Tests load_json on a bundled scenario and on a missing file

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the scenario is read wrongly or a missing file is accepted

        Restrictions on when this method can be called:
            none
        '''

        self.assertEqual(load_json(SCENARIOS / 'qubit_chain.json'), {'chain_length': 2, 'kind': 'standard'})
        try:
            load_json(SCENARIOS / 'no_such_file.json')
            self.fail()
        except InputError as e:
            self.assertIn('cannot read', str(e))
        self.assertEqual(dump_json({'b': np.int64(1), 'a': 1j}), '{\n  "a": [\n    0.0,\n    1.0\n  ],\n  "b": 1\n}')

    def test_algebra_spec(self):
        '''
        Tests algebra_spec_from_dict

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the seeds are read wrongly or a seed of the wrong dimension is accepted

        Restrictions on when this method can be called:
            none
        '''

        dimension, seeds = algebra_spec_from_dict(load_json(SCENARIOS / 'm4.json'))
        self.assertEqual(dimension, 4)
        self.assertEqual(sorted(seeds), ['ix', 'iz', 'xi', 'xx', 'zi', 'zz'])
        try:
            algebra_spec_from_dict({'dimension': 3, 'seeds': {'z': [[1, 0], [0, -1]]}})
            self.fail()
        except InputError as e:
            pass
        try:
            algebra_spec_from_dict({'seeds': {}})
            self.fail()
        except InputError as e:
            pass

    def test_ray_family(self):
        '''
        Tests ray_family_from_dict

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the bases are read wrongly or a short basis is accepted

        Restrictions on when this method can be called:
            none
        '''

        dimension, bases = ray_family_from_dict(load_json(SCENARIOS / 'cabello18.json'))
        self.assertEqual(dimension, 4)
        self.assertEqual(len(bases), 9)
        try:
            ray_family_from_dict({'dimension': 2, 'bases': [[[1, 0]]]})
            self.fail()
        except InputError as e:
            pass

    def test_category(self):
        '''
        Tests category_from_dict and category_to_dict

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the category is read wrongly or inconsistent tables are accepted

        Restrictions on when this method can be called:
            none
        '''

        c = category_from_dict(load_json(SCENARIOS / 'triangle_category.json'))
        self.assertEqual(c.compose('g', 'f'), 'h')
        self.assertTrue(check_category(category_from_dict(category_to_dict(c))).is_valid)
        try:
            category_from_dict({'objects': ['a'], 'morphisms': [], 'identities': {'a': 'id_a'}, 'compositions': []})
            self.fail()
        except StructuralError as e:
            pass

    def test_family(self):
        '''
        Tests family_from_dict on functions and on matrices

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a family is read wrongly or an even group is accepted

        Restrictions on when this method can be called:
            none
        '''

        family = family_from_dict(load_json(SCENARIOS / 'family_measure.json'))
        self.assertEqual((family.q, family.size), (2, 4))
        pauli = family_from_dict(load_json(SCENARIOS / 'family_pauli.json'))
        self.assertEqual(pauli.observables()[1].shape, (2, 2))
        try:
            family_from_dict({'groups': [{'a': [[1, -1], [1, 1]]}]})
            self.fail()
        except DomainError as e:
            pass

    def test_net(self):
        '''
        Tests net_from_dict with replaced generators, an unknown kind, a malformed region key and a region key past the end of the chain

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a net is read wrongly or malformed data is accepted

        Restrictions on when this method can be called:
            none
        '''

        net = net_from_dict({'chain_length': 2, 'generators': {'0,0': [[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]]}})
        self.assertEqual(net.algebra(Region(0, 0)).dimension, 2)
        self.assertEqual(net.algebra(Region(1, 1)).dimension, 4)
        for data in (
            {'chain_length': 2, 'kind': 'twisted'},
            {'chain_length': 2, 'generators': {'0': []}},
            {'chain_length': 2, 'generators': {'1,2': [np.eye(4).tolist()]}}
        ):
            try:
                net_from_dict(data)
                self.fail()
            except InputError as e:
                pass

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
