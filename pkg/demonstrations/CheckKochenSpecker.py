from pathlib import Path
from contextualextension import load_json, ray_family_from_dict
scenarios = Path(__file__).resolve().parent.parent / 'scenarios'
dimension, bases = ray_family_from_dict(load_json(scenarios / 'cabello18.json'))

from contextualextension import ray_family_category, build_spectral_presheaf, check_presheaf_functoriality
cc = ray_family_category(bases)
print(cc.labels)
presheaf = build_spectral_presheaf(cc)
print(check_presheaf_functoriality(presheaf).is_valid)

from contextualextension import global_sections, has_parity_obstruction
print(len(global_sections(presheaf)))
print(has_parity_obstruction(bases))

dimension, bases = ray_family_from_dict(load_json(scenarios / 'qubit_bases.json'))
presheaf = build_spectral_presheaf(ray_family_category(bases))
for section in global_sections(presheaf):
    print(section.as_dict())
