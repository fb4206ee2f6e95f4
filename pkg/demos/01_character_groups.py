"""Build Dirichlet character groups and inspect their structure.

The unit group modulo an odd d splits into cyclic factors, one per odd prime
power dividing d.  Each character is an exponent tuple against fixed
primitive roots; the principal character always carries label 0.
"""

import numpy as np

from qeuler import build_character_group

# A prime modulus: the group mod 5 is cyclic of order 4, generated by 2.
group = build_character_group(5)
print(f"characters mod 5: {len(group)}")
print(f"structure (prime power, generator, order): {group.structure}")
for chi in group:
    row = "  ".join(f"{v.real:+.2f}{v.imag:+.2f}i" for v in chi.values)
    print(f"  chi_{chi.label}: {row}")

# The two characters of full order take +-i at the generator residue 2.
print("\nvalues at residue 2:", [complex(chi(2)) for chi in group])

# Characters extend periodically and vanish off the units.
quad = build_character_group(3)[1]
print("\nquadratic character mod 3 on 0..8:", [complex(quad(m)).real for m in range(9)])

# Orthogonality: non-principal characters sum to zero over a full period.
composite = build_character_group(45)
print(f"\ncharacters mod 45: {len(composite)} (phi(45) = 24)")
sums = [abs(np.sum(chi.values)) for chi in composite.characters[1:]]
print(f"largest non-principal character sum: {max(sums):.2e}")

# Serialization used by the command line: one JSON record per character.
print("\nJSON form of the quadratic character mod 3:")
print(quad.to_json_dict())
