import numpy as np
from contextualextension import PolyhedronSpace, TestFunction, TruncatedFock, ccr_defect
space = PolyhedronSpace(group_order = 2, faces = 2)
random_number_generator = np.random.default_rng(0)
f = TestFunction(0.3 * (random_number_generator.standard_normal(space.dimension) + 1j * random_number_generator.standard_normal(space.dimension)), space)
g = TestFunction(0.3 * (random_number_generator.standard_normal(space.dimension) + 1j * random_number_generator.standard_normal(space.dimension)), space)
print(ccr_defect(f, g, TruncatedFock(space, 3)))
print(ccr_defect(f, g, TruncatedFock(space, 3), guarded = False))

from contextualextension import weyl_defect_sweep
print(weyl_defect_sweep(f, g, cutoffs = [2, 3, 4, 5, 6], sector_cap = 1))

from contextualextension import second_quantization_cone
cone, diagram, report = second_quantization_cone(1, 2, [TestFunction.delta(space, (0, 0)), 0.5 * TestFunction.constant(space)])
print(report.is_valid)
cone, diagram, report = second_quantization_cone(1, 2, [TestFunction.delta(space, (0, 0))], padding_sign = -1)
print(report.to_data_frame())
