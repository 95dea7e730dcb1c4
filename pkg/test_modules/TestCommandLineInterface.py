'''
Module for class TestRun, which tests the subcommands of the contextualextension command on the bundled scenarios
'''

from contextlib import redirect_stderr, redirect_stdout
from contextualextension.CommandLineInterface import *
from contextualextension.Errors import InputError
import io
import json
import unittest

def run_json(subcommand, **arguments):
    status, text = run(RunConfig(subcommand, arguments))
    return status, json.loads(text)

class TestRun(unittest.TestCase):
    '''
    Tests run on every subcommand

    Instance variables:
        none

    Public methods:
        test_cat_check
        test_limit
        test_state_extend
        test_ks_check
        test_daseinise
        test_net_check
        test_gft
        test_inequality
        test_unusable_input
        test_nmax_cap
        test_formats
    '''

    def test_cat_check(self):
        '''
        Tests cat-check on a category and on tables that break the identity law

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an exit status or report is wrong

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('cat-check', category = 'triangle_category.json')
        self.assertEqual(status, 0)
        self.assertTrue(document['valid'])
        self.assertEqual(document['result'], {'objects': 3, 'morphisms': 6})
        self.assertEqual(document['command'], 'cat-check')
        status, document = run_json('cat-check', category = 'broken_identity_category.json')
        self.assertEqual(status, 1)
        self.assertFalse(document['valid'])
        self.assertEqual([v['invariant'] for v in document['violations']], ['fincat.identity_law'])
        self.assertEqual(document['violations'][0]['location'], '(id_b, f)')

    def test_limit(self):
        '''
        Tests limit on the qubit contexts {σ_x}, {σ_z}

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the carrier or contexts are wrong

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('limit', algebra = 'm2.json', seeds = 'x,z', points = True)
        self.assertEqual(status, 0)
        self.assertEqual(document['result']['contexts'], ['x', 'z', 'scalars'])
        self.assertEqual(document['result']['carrier_size'], 4)
        self.assertIn('extension', document['result'])

    def test_state_extend(self):
        '''
        Tests state-extend on the ground state of a qubit

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an expectation disagrees with Tr(ρA)

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('state-extend', algebra = 'm2.json', seeds = 'x,z', state = 'ground_state.json')
        self.assertEqual(status, 0)
        expectations = document['result']['expectations']
        self.assertAlmostEqual(expectations['z[0]'][0], 1.0)
        self.assertAlmostEqual(expectations['x[0]'][0], 0.0)

    def test_ks_check(self):
        '''
        Tests ks-check on the eighteen-ray family and on two qubit bases

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the number of global sections or the parity obstruction is wrong

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('ks-check', fixture = 'cabello18.json')
        self.assertEqual(status, 0)
        self.assertEqual(document['result']['sections'], 0)
        self.assertEqual(document['result']['bases'], 9)
        self.assertTrue(document['result']['parity_obstruction'])
        status, document = run_json('ks-check', fixture = 'qubit_bases.json', limit = 2)
        self.assertEqual(document['result']['sections'], 2)
        self.assertEqual(len(document['result']['examples']), 2)
        self.assertFalse(document['result']['parity_obstruction'])

    def test_daseinise(self):
        '''
        Tests daseinise for σ_x over the qubit contexts

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the intervals are wrong or an unknown operator is accepted

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('daseinise', algebra = 'm2.json', seeds = 'x,z', operator = 'x')
        self.assertEqual(status, 0)
        self.assertEqual(len(document['result']['intervals']), 5)
        status, document = run_json('daseinise', algebra = 'm2.json', seeds = 'x,z', operator = 'w')
        self.assertEqual(status, 2)

    def test_net_check(self):
        '''
        Tests net-check on the standard chain and on a net read from a file

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a standard net is reported invalid

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('net-check', chain = 3)
        self.assertEqual(status, 0)
        self.assertEqual(document['result'], {'chain_length': 3, 'regions': 6})
        status, document = run_json('net-check', net = 'qubit_chain.json')
        self.assertEqual(status, 0)
        self.assertEqual(document['result']['chain_length'], 2)

    def test_gft(self):
        '''
        Tests gft-ccr and gft-weyl, and the refusal of a cutoff above the cap

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a defect is too large, the sweep has the wrong rows or the cap is not enforced

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('gft-ccr', nmax = 2, pairs = 3)
        self.assertEqual(status, 0)
        self.assertLessEqual(document['result']['max_defect'], 1e-10)
        self.assertEqual(document['result']['fock_dimension'], 15)
        status, document = run_json('gft-weyl', nmax = 4, sweep = True)
        self.assertEqual(status, 0)
        self.assertEqual([row['n_max'] for row in document['result']['table']], [2, 3, 4])
        status, document = run_json('gft-ccr', nmax = 9)
        self.assertEqual(status, 2)
        self.assertIn('error', document)

    def test_inequality(self):
        '''
        Tests inequality with a measure provider and a quantum provider

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a minimum or sign vector is wrong

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('inequality', family = 'family_measure.json')
        self.assertEqual(status, 0)
        self.assertAlmostEqual(document['result']['lhs'], 2.0)
        self.assertEqual(document['result']['q'], 2)
        self.assertFalse(document['result']['below_classical_bound'])
        status, document = run_json('inequality', family = 'family_pauli.json', provider = 'quantum', state = 'ground_state.json')
        self.assertEqual(status, 0)
        self.assertAlmostEqual(document['result']['lhs'], 3.0)
        self.assertEqual(document['result']['provider'], 'quantum')

    def test_unusable_input(self):
        '''
        Tests that a missing file and an unknown subcommand give exit status 2

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an exit status is wrong

        Restrictions on when this method can be called:
            none
        '''

        status, document = run_json('cat-check', category = 'no_such_category.json')
        self.assertEqual(status, 2)
        self.assertFalse(document['valid'])
        status, document = run_json('no-such-subcommand')
        self.assertEqual(status, 2)

    def test_formats(self):
        '''
        Tests the dot and text formats

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if a rendering is wrong or a subcommand without DOT export is accepted

        Restrictions on when this method can be called:
            none
        '''

        status, text = run(RunConfig('export-dot', {'category': 'triangle_category.json'}, output_format = 'dot'))
        self.assertEqual(status, 0)
        self.assertTrue(text.startswith('digraph'))
        self.assertIn('label=g', text)
        status, text = run(RunConfig('cat-check', {'category': 'broken_identity_category.json'}, output_format = 'text'))
        self.assertEqual(status, 1)
        self.assertTrue(text.startswith('cat-check: invalid'))
        self.assertIn('violation fincat.identity_law at (id_b, f)', text)
        status, text = run(RunConfig('state-extend', {'algebra': 'm2.json', 'seeds': 'x,z'}, output_format = 'dot'))
        self.assertEqual(status, 2)

    def test_nmax_cap(self):
        '''
        Tests that a Fock cutoff cap that is not positive is refused like the caps of Configuration

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if the cap is accepted

        Restrictions on when this method can be called:
            none
        '''

        for nmax_cap in (0, -1):
            status, text = run(RunConfig('gft-ccr', {'nmax': 2, 'pairs': 2}, nmax_cap = nmax_cap))
            self.assertEqual(status, 2)
            self.assertIn('nmax_cap must be positive', json.loads(text)['error'])
        try:
            RunConfig('gft-ccr', nmax_cap = 0).configuration()
            self.fail()
        except InputError as e:
            pass

class TestMain(unittest.TestCase):
    '''
    Tests main

    Instance variables:
        none

    Public methods:
        test_main
        test_invalid_arguments
    '''

    def test_main(self):
        '''
        Tests that main parses global options before the subcommand and writes the report to standard output

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            Configures logging

        Exceptions raised:
            AssertionError if the exit status or report is wrong

        Restrictions on when this method can be called:
            none
        '''

        output = io.StringIO()
        with redirect_stdout(output):
            status = main(['--seed', '3', 'gft-ccr', '--nmax', '2', '--pairs', '2'])
        self.assertEqual(status, 0)
        document = json.loads(output.getvalue())
        self.assertEqual(document['seed'], 3)
        self.assertEqual(document['result']['n_max'], 2)

    def test_invalid_arguments(self):
        '''
        Tests that main gives exit status 2 for a missing subcommand, an unknown option, an invalid tolerance and a Fock cutoff cap that is not positive

        Keyword arguments:
            none

        Return values:
            none

        Side effects:
            none

        Exceptions raised:
            AssertionError if an exit status is wrong

        Restrictions on when this method can be called:
            none
        '''

        for argv in ([], ['cat-check'], ['--tolerance', '0.5', 'net-check'], ['--nmax-cap', '0', 'gft-ccr']):
            with redirect_stderr(io.StringIO()), redirect_stdout(io.StringIO()):
                self.assertEqual(main(argv), 2)

if __name__ == "__main__":
    verbose = 2
    unittest.main(verbosity = verbose)
