'''
Module for reading and writing the JSON files of the package: matrices, algebra specifications, ray families,
categories, observable families and nets
'''

import json
import logging

import numpy as np

from contextualextension.Configuration import DEFAULT_CONFIGURATION
from contextualextension.Errors import InputError
from contextualextension.FiniteCategory import FinCategory
from contextualextension.LocalNet import LocalNet, Region
from contextualextension.MatrixStarAlgebra import generate_algebra
from contextualextension.RealismInequality import ObservableFamily, ObservableGroup

__all__ = [
    'matrix_to_data',
    'matrix_from_data',
    'load_json',
    'dump_json',
    'algebra_spec_from_dict',
    'ray_family_from_dict',
    'category_from_dict',
    'category_to_dict',
    'family_from_dict',
    'net_from_dict'
]

logger = logging.getLogger(__name__)

def matrix_to_data(matrix):
    '''
    Provides a matrix as row-major nested lists of [re, im] pairs
    '''

    matrix = np.asarray(matrix, dtype = complex)
    return [[[float(entry.real), float(entry.imag)] for entry in row] for row in matrix]

def matrix_from_data(data):
    '''
    Reads a matrix written as nested lists of [re, im] pairs or of real numbers

    Exceptions raised:
        InputError if the data is not a square matrix in one of those forms
    '''

    try:
        array = np.asarray(data, dtype = float)
    except (TypeError, ValueError):
        raise InputError('matrix entries must be numbers or [re, im] pairs') from None
    if array.ndim == 3 and array.shape[2] == 2:
        array = array[..., 0] + 1j * array[..., 1]
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise InputError(f'matrix data of shape {array.shape} is not a square matrix')
    return array.astype(complex)

def load_json(path):
    '''
    Reads a JSON file

    Exceptions raised:
        InputError if the file cannot be read or is not valid JSON
    '''

    try:
        with open(path, encoding = 'utf-8') as file:
            return json.load(file)
    except OSError as error:
        raise InputError(f'cannot read {path}: {error.strerror}') from None
    except json.JSONDecodeError as error:
        raise InputError(f'{path} is not valid JSON: {error.msg} at line {error.lineno}') from None

def _default(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f'{type(value).__name__} is not JSON serializable')

def dump_json(data):
    '''
    Provides the JSON text of data with sorted keys, so equal data gives identical text
    '''

    return json.dumps(data, sort_keys = True, indent = 2, default = _default)

def _require(data, key, what):
    if not isinstance(data, dict) or key not in data:
        raise InputError(f'{what} has no field {key!r}')
    return data[key]

def algebra_spec_from_dict(data):
    '''
    Reads {"dimension": d, "seeds": {name: matrix}}

    Return values:
        the pair (dimension, dict of seed name -> matrix)
    '''

    dimension = int(_require(data, 'dimension', 'algebra specification'))
    seeds = {name: matrix_from_data(matrix) for name, matrix in _require(data, 'seeds', 'algebra specification').items()}
    for name, matrix in seeds.items():
        if matrix.shape[0] != dimension:
            raise InputError(f'seed {name} has dimension {matrix.shape[0]}, expected {dimension}')
    return dimension, seeds

def ray_family_from_dict(data):
    '''
    Reads {"dimension": d, "bases": [[vector, ...], ...]}

    Return values:
        the pair (dimension, list of bases, each a list of vectors)
    '''

    dimension = int(_require(data, 'dimension', 'ray family'))
    bases = _require(data, 'bases', 'ray family')
    for b, basis in enumerate(bases):
        if len(basis) != dimension or any(len(vector) != dimension for vector in basis):
            raise InputError(f'basis {b} does not have {dimension} vectors of length {dimension}')
    return dimension, [[[float(x) for x in vector] for vector in basis] for basis in bases]

def category_from_dict(data):
    '''
    Reads {"objects": [...], "morphisms": [{"name", "source", "target"}], "identities": {object: name}, "compositions": [[g, f, g∘f], ...]}

    Exceptions raised:
        InputError if a field is missing
        StructuralError if the tables do not describe a category
    '''

    objects = _require(data, 'objects', 'category')
    homs = {}
    for morphism in _require(data, 'morphisms', 'category'):
        key = (_require(morphism, 'source', 'morphism'), _require(morphism, 'target', 'morphism'))
        homs[key] = homs.get(key, ()) + (_require(morphism, 'name', 'morphism'),)
    composition = {(g, f): gf for g, f, gf in _require(data, 'compositions', 'category')}
    return FinCategory(objects, homs, composition, _require(data, 'identities', 'category'), name = data.get('name', 'C'))

def category_to_dict(c):
    '''
    Writes a finite category as the document category_from_dict reads

    Keyword arguments:
        c: FinCategory -- the category

    Return values:
        a dict with keys name, objects, morphisms, identities and compositions

    Side effects:
        none

    Exceptions raised:
        none

    Restrictions on when this function can be called:
        objects and morphisms must be strings for the result to serialize as JSON
    '''

    return {
        'name': c.name,
        'objects': list(c.objects),
        'morphisms': [{'name': m, 'source': c.source(m), 'target': c.target(m)} for m in c.morphisms],
        'identities': dict(c.identities),
        'compositions': [[g, f, c.compose(g, f)] for g, f in c.composable_pairs()]
    }

def _observable_from_data(data):
    try:
        array = np.asarray(data, dtype = float)
    except (TypeError, ValueError):
        raise InputError('observables must be lists of numbers or matrices') from None
    if array.ndim == 1:
        return array
    return matrix_from_data(data)

def family_from_dict(data, tolerance = DEFAULT_CONFIGURATION.tolerance):
    '''
    Reads {"groups": [{"a": [...], "b": [...]}]} whose observables are ±1 lists or matrices
    '''

    groups = [
        ObservableGroup(
            tuple(_observable_from_data(observable) for observable in group.get('a', [])),
            tuple(_observable_from_data(observable) for observable in group.get('b', []))
        )
        for group in _require(data, 'groups', 'observable family')
    ]
    return ObservableFamily(groups, tolerance)

def net_from_dict(data, configuration = DEFAULT_CONFIGURATION):
    '''
    Reads {"chain_length": L, "kind": "standard" | "diagonal", "generators": {"start,stop": [matrix, ...]}}
    '''

    chain_length = int(_require(data, 'chain_length', 'net specification'))
    kind = data.get('kind', 'standard')
    if kind not in ('standard', 'diagonal'):
        raise InputError(f'unknown net kind {kind!r}')
    net = LocalNet.standard(chain_length, configuration) if kind == 'standard' else LocalNet.diagonal(chain_length, configuration)
    for key, matrices in data.get('generators', {}).items():
        try:
            start, stop = (int(part) for part in key.split(','))
        except ValueError:
            raise InputError(f'region key {key!r} is not of the form start,stop') from None
        region = Region(start, stop)
        if region.stop >= chain_length:
            raise InputError(f'region key {key!r} leaves the chain of {chain_length} sites')
        net = net.with_algebra(region, generate_algebra([matrix_from_data(m) for m in matrices], net.dim, configuration, name = f'G{region}'))
    return net
