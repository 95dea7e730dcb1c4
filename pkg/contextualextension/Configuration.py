'''
Module for class Configuration, which holds the numeric caps, tolerance and seed shared by every operation of the package
'''

from dataclasses import dataclass, replace
import logging
import os

from contextualextension.Errors import InputError

__all__ = ['Configuration', 'DEFAULT_CONFIGURATION', 'THREADS_ENVIRONMENT_VARIABLE']

logger = logging.getLogger(__name__)

THREADS_ENVIRONMENT_VARIABLE = 'CONTEXTUALEXTENSION_THREADS'

@dataclass(frozen = True)
class Configuration:
    '''
    Numeric caps, tolerance and seed of a run.

    Instance variables:
        tolerance: float -- operator-norm tolerance of every span, commutation and invariant check
        dimension_cap: int -- largest ambient matrix dimension accepted by generate_algebra
        carrier_cap: int -- largest number of points of a product spectrum
        apex_cap: int -- largest apex size enumerated by check_universal_property
        diagonalization_retries: int -- number of random combinations tried before exact block refinement
        seed: int -- seed of every random number generator
        occupation_cutoff: int -- default N_max of truncated Fock spaces
        group_order: int -- default order m of the cyclic gauge group
        faces: int -- default number n of polyhedron faces
        observable_cap: int -- largest number of observables accepted by search_signs
        threads: int -- number of worker threads of the parallel searches
    '''

    tolerance: float = 1e-9
    dimension_cap: int = 16
    carrier_cap: int = 10 ** 6
    apex_cap: int = 4
    diagonalization_retries: int = 8
    seed: int = 0
    occupation_cutoff: int = 3
    group_order: int = 2
    faces: int = 2
    observable_cap: int = 16
    threads: int = 1

    def __post_init__(self):
        if not (0.0 < self.tolerance <= 1e-3):
            raise InputError('tolerance must lie in (0, 1e-3]')
        for name in ('dimension_cap', 'carrier_cap', 'apex_cap', 'diagonalization_retries', 'occupation_cutoff', 'group_order', 'faces', 'observable_cap', 'threads'):
            if getattr(self, name) <= 0:
                raise InputError(f'{name} must be positive')

    def with_changes(self, **changes):
        '''
        Provides a copy of this configuration with some fields replaced

        Keyword arguments:
            changes: field names and their new values

        Return values:
            a new Configuration

        Exceptions raised:
            InputError if a new value violates a cap or tolerance invariant
        '''

        return replace(self, **changes)

    @classmethod
    def from_environment(cls, **overrides):
        '''
        Builds a configuration whose thread count is read from the environment variable CONTEXTUALEXTENSION_THREADS

        Keyword arguments:
            overrides: field names and values that take precedence over the defaults

        Return values:
            a new Configuration

        Exceptions raised:
            InputError if the environment variable is not a positive integer
        '''

        threads_text = os.environ.get(THREADS_ENVIRONMENT_VARIABLE)
        if threads_text is not None and 'threads' not in overrides:
            try:
                overrides['threads'] = int(threads_text)
            except ValueError:
                raise InputError(f'{THREADS_ENVIRONMENT_VARIABLE} must be an integer') from None
            logger.debug('thread count %d read from %s', overrides['threads'], THREADS_ENVIRONMENT_VARIABLE)
        return cls(**overrides)

DEFAULT_CONFIGURATION = Configuration()
