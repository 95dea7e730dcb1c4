from pathlib import Path
from contextualextension import load_json, family_from_dict
scenarios = Path(__file__).resolve().parent.parent / 'scenarios'
family = family_from_dict(load_json(scenarios / 'family_measure.json'))
print(family.q)

import numpy as np
from contextualextension import MeasureProvider, search_signs
print(search_signs(family, MeasureProvider(np.full(4, 0.25))))

from contextualextension import PAULI_X, PAULI_Z, ObservableFamily, joint_spectral_provider
rho = np.diag([0.25, 0.75]).astype(complex)
provider, functions = joint_spectral_provider([PAULI_Z], rho)
print(provider.weights)
print(search_signs(ObservableFamily([{'a': functions}]), provider))

from contextualextension import QuantumProvider
pauli = family_from_dict(load_json(scenarios / 'family_pauli.json'))
print(search_signs(pauli, QuantumProvider(np.diag([1.0, 0.0]))).to_dict())
