'''
contextualextension

A Python package constructing contextual extensions of finite-dimensional operator algebras and checking the
categorical, presheaf, local-net, group-field and realism-inequality structures built on them

Exports:
    Configuration
    ValidationReport
    FinCategory
    Functor
    Diagram
    Cone
    MatrixStarAlgebra
    ContextCategory
    ExtendedAlgebra
    ExtendedState
    SpectralPresheaf
    FiniteFrame
    LocalNet
    Region
    TruncatedFock
    TestFunction
    ObservableFamily
    RunConfig
    and the operations of each module
'''

__version__ = "0.1.0"
__author__ = "Tom Lever"
__credits__ = "Tom Lever"

from contextualextension.Errors import *
from contextualextension.Configuration import *
from contextualextension.ValidationReport import *
from contextualextension.FiniteCategory import *
from contextualextension.MatrixStarAlgebra import *
from contextualextension.ContextualExtension import *
from contextualextension.SpectralPresheaf import *
from contextualextension.LocalNet import *
from contextualextension.GroupFieldTheory import *
from contextualextension.RealismInequality import *
from contextualextension.Serialization import *
from contextualextension.CommandLineInterface import *
