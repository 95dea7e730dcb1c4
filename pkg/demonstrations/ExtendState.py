import numpy as np
from contextualextension import MatrixStarAlgebra, context_category, pauli_string
seeds = {name: pauli_string(name) for name in ('zi', 'iz', 'zz', 'xi', 'ix', 'xx')}
cc = context_category(MatrixStarAlgebra.full_matrix_algebra(4), seeds)
print(cc.labels)

from contextualextension import build_limit_extension, check_limit_agreement
ext = build_limit_extension(cc, labels = ['zi+iz+zz', 'zi+ix'])
print(ext.size)
print(check_limit_agreement(build_limit_extension(cc), cc).is_valid)

from contextualextension import extend_state, embed, evaluate_state, element_table
rho = np.diag([0.4, 0.3, 0.2, 0.1]).astype(complex)
mu = extend_state(rho, ext)
zz = embed(pauli_string('zz'), 'zi+iz+zz', ext)
print(evaluate_state(mu, zz))
print(np.trace(rho @ pauli_string('zz')))
print(element_table(ext, {'zz': zz, 'ix': embed(pauli_string('ix'), 'zi+ix', ext), 'weight': mu.weights}))

from contextualextension import ambient_projection
print(ambient_projection(ext).apply(zz).round(6))
