'''
Module for the exceptions raised by the contextualextension package
'''

__all__ = [
    'ContextualExtensionError',
    'InputError',
    'DomainError',
    'StructuralError',
    'SizeCapExceededError',
    'InternalConsistencyError',
    'MixedCorrelationError'
]

class ContextualExtensionError(Exception):
    '''
    Base class of every exception raised by this package
    '''

class InputError(ContextualExtensionError, ValueError):
    '''
    Raised when an input is malformed, e.g. a matrix that is not square, mismatched dimensions or unreadable JSON
    '''

class DomainError(ContextualExtensionError, ValueError):
    '''
    Raised when an input is well formed but lies outside the mathematical domain of an operation, e.g. a matrix outside the span of a context
    '''

class StructuralError(ContextualExtensionError, ValueError):
    '''
    Raised when the tables of a finite category, functor, diagram or cone are incomplete or point to the wrong hom-set
    '''

class SizeCapExceededError(ContextualExtensionError, RuntimeError):
    '''
    Raised when a computation is refused because its search space or carrier exceeds a configured cap

    Instance variables:
        size: int -- the size that was requested
        cap: int -- the configured cap
    '''

    def __init__(self, what, size, cap):
        super().__init__(f'{what} of size {size} exceeds the configured cap {cap}')
        self.what = what
        self.size = size
        self.cap = cap

class InternalConsistencyError(ContextualExtensionError, AssertionError):
    '''
    Raised when data computed by this package contradicts itself, e.g. a restriction map that is not well defined
    '''

class MixedCorrelationError(DomainError):
    '''
    Raised when a correlation between a carrier function and a matrix observable is requested
    '''
