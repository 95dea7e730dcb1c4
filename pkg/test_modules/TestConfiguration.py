'''
Module for class TestConfiguration, which tests the numeric configuration of a run and the reports that checks return
'''

from contextualextension.Configuration import *
from contextualextension.Errors import InputError
from contextualextension.ValidationReport import *
import os
import unittest
from unittest import mock

class TestConfiguration(unittest.TestCase):
    '''
    Tests the methods of a Configuration object

    Instance variables:
        none

    Public methods:
        test_defaults
        test_invalid_values
        test_from_environment
    '''

    def test_defaults(self):
        '''
        Tests the default caps and Configuration.with_changes

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a default or a replaced field is wrong

        Restrictions on when this method can be called:
            none
        '''

        self.assertEqual(DEFAULT_CONFIGURATION.tolerance, 1e-9)
        self.assertEqual(DEFAULT_CONFIGURATION.carrier_cap, 10 ** 6)
        self.assertEqual(DEFAULT_CONFIGURATION.apex_cap, 4)
        changed = DEFAULT_CONFIGURATION.with_changes(seed = 7)
        self.assertEqual(changed.seed, 7)
        self.assertEqual(DEFAULT_CONFIGURATION.seed, 0)

    def test_invalid_values(self):
        '''
        Tests that a tolerance outside (0, 1e-3] and a cap that is not positive are refused

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

        for changes in ({'tolerance': 0.0}, {'tolerance': 0.01}, {'carrier_cap': 0}, {'threads': -1}):
            try:
                Configuration(**changes)
                self.fail()
            except InputError as e:
                pass
        try:
            DEFAULT_CONFIGURATION.with_changes(apex_cap = 0)
            self.fail()
        except InputError as e:
            pass

    def test_from_environment(self):
        '''
        Tests Configuration.from_environment with and without the thread count variable

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the thread count is read wrongly or a malformed value is accepted

        Restrictions on when this method can be called:
            none
        '''

        with mock.patch.dict(os.environ, {THREADS_ENVIRONMENT_VARIABLE: '3'}):
            self.assertEqual(Configuration.from_environment().threads, 3)
            self.assertEqual(Configuration.from_environment(threads = 2).threads, 2)
        with mock.patch.dict(os.environ, {THREADS_ENVIRONMENT_VARIABLE: 'many'}):
            try:
                Configuration.from_environment()
                self.fail()
            except InputError as e:
                pass
        with mock.patch.dict(os.environ, {}, clear = True):
            self.assertEqual(Configuration.from_environment().threads, 1)

class TestValidationReport(unittest.TestCase):
    '''
    Tests the methods of a ValidationReport object

    Instance variables:
        none

    Public methods:
        test_empty_report
        test_add_and_extend
    '''

    def test_empty_report(self):
        '''
        Tests that a report with no violations is valid

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the empty report is not valid

        Restrictions on when this method can be called:
            none
        '''

        report = ValidationReport('nothing')
        self.assertTrue(report.is_valid)
        self.assertEqual(report.invariants, [])
        self.assertEqual(report.to_dict(), {'subject': 'nothing', 'valid': True, 'violations': []})
        self.assertEqual(list(report.to_data_frame().columns), ['invariant', 'location', 'message'])

    def test_add_and_extend(self):
        '''
        Tests ValidationReport.add, ValidationReport.extend and the views of the violations

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a violation is lost or misreported

        Restrictions on when this method can be called:
            none
        '''

        first = ValidationReport('first').add('fincat.identity_law', ('g', 'f'), 'id∘f differs from f')
        second = ValidationReport('second').add('fincat.associativity', 'h', 'differs').add('fincat.identity_law', 'k', 'differs')
        first.extend(second)
        self.assertFalse(first.is_valid)
        self.assertEqual(len(first.violations), 3)
        self.assertEqual(first.violations[0], Violation('fincat.identity_law', "('g', 'f')", 'id∘f differs from f'))
        self.assertEqual(first.invariants, ['fincat.associativity', 'fincat.identity_law'])
        frame = first.to_data_frame()
        self.assertEqual(len(frame), 3)
        self.assertEqual(frame.loc[1, 'invariant'], 'fincat.associativity')
        self.assertEqual(len(second.violations), 2)

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
