'''
Module for class ValidationReport, which collects the violated invariants found by a check
'''

from dataclasses import dataclass

import pandas as pd

__all__ = ['Violation', 'ValidationReport']

@dataclass(frozen = True)
class Violation:
    '''
    One violated instance of an invariant.

    Instance variables:
        invariant: str -- module-qualified name of the invariant, e.g. fincat.identity_law
        location: str -- the objects, morphisms or elements at which the invariant fails
        message: str -- a human-readable description
    '''

    invariant: str
    location: str
    message: str

class ValidationReport:
    '''
    Encapsulates the list of violations found while checking one subject. A report with no violations certifies the subject.

    Instance variables:
        subject: str -- what was checked
        _violations: list -- the Violation objects found so far

    Public methods:
        __init__
        add
        extend
        is_valid
        violations
        invariants
        to_data_frame
        to_dict
    '''

    def __init__(self, subject):
        self.subject = subject
        self._violations = []

    def add(self, invariant, location, message):
        '''
        Records one violation

        Keyword arguments:
            invariant: str -- module-qualified invariant name
            location: str -- where the invariant fails
            message: str -- description

        Return values:
            this report, so that calls may be chained

        Side effects:
            Appends a Violation to this report
        '''

        self._violations.append(Violation(invariant, str(location), message))
        return self

    def extend(self, other):
        '''
        Appends every violation of another report to this report
        '''

        self._violations.extend(other.violations)
        return self

    @property
    def is_valid(self):
        '''
        True iff no violation was recorded
        '''

        return len(self._violations) == 0

    @property
    def violations(self):
        '''
        The recorded Violation objects, in the order they were added

        Keyword arguments:
            none

        Return values:
            a tuple of Violation objects

        Side effects:
            none

        Exceptions raised:
            none

        Restrictions on when this method can be called:
            none
        '''

        return tuple(self._violations)

    @property
    def invariants(self):
        '''
        The sorted set of invariant names breached in this report
        '''

        return sorted({violation.invariant for violation in self._violations})

    def to_data_frame(self):
        '''
        Provides the violations of this report as a data frame with columns invariant, location and message, one row per violation
        '''

        return pd.DataFrame(
            [[violation.invariant, violation.location, violation.message] for violation in self._violations],
            columns = ['invariant', 'location', 'message']
        )

    def to_dict(self):
        return {
            'subject': self.subject,
            'valid': self.is_valid,
            'violations': [
                {'invariant': violation.invariant, 'location': violation.location, 'message': violation.message}
                for violation in self._violations
            ]
        }

    def __repr__(self):
        return f'ValidationReport(subject = {self.subject!r}, violations = {len(self._violations)})'
