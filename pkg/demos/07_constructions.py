"""Existence constructions: every admissible type is realized.

Torus knots realize all SIFP and SIP types (hence all FPer and Per
types); an alternating family built from stacked tangles realizes all
SNASI and RRef types; bracelets of connect-summands realize the three
composite-only dihedral families.
"""

import math

from knotsym.constructions import (
    BraceletSpec, bracelet_type, realize_parameters, snasi_declared_type,
    snasi_single_component, snasi_tangle_permutations, snasi_strand_cycle,
    torus_symmetry_structure,
)

# Torus knots: reduce the exponents mod n.
for p, q, n in [(2, 5, 5), (2, 3, 4), (3, 4, 12), (3, 4, 2)]:
    print(f"T({p},{q}) as a D{n}-symmetric knot: "
          f"{torus_symmetry_structure(p, q, n)}")

# Conversely, any unit-ideal parameter pair lifts to torus exponents.
print()
for n, a, b in [(5, 2, 0), (4, 1, 2), (7, 3, 5)]:
    p, q = realize_parameters(n, a, b)
    assert math.gcd(p, q) == 1 and p % n == a and q % n == b
    print(f"parameters ({a},{b}) mod {n} realized by T({p},{q})")

# The amphichiral family: a strands are braided through 2n alternating
# tangles; the tangle and its mirror act by explicit involutions, and
# the knot closes into one component exactly when gcd(a, n) = 1.
print()
for a in (3, 5, 7):
    t, m = snasi_tangle_permutations(a)
    print(f"a={a}: tangle acts by {t.cycle_string()}, "
          f"mirror by {m.cycle_string()}, "
          f"pair composes to {snasi_strand_cycle(a).cycle_string()}")

print()
for n, a in [(6, 1), (8, 3), (10, 3), (14, 9)]:
    assert snasi_single_component(n, a)
    print(f"(n={n}, a={a}): closes to a knot of type "
          f"{snasi_declared_type(n, a)}, axis linking {a}")

# Composite knots: bracelets of order-2 symmetric summands.
print()
print("bracelet of reflection-symmetric summands:",
      bracelet_type(BraceletSpec(5, "2R")))
print("alternating bracelet of strongly invertible summands:",
      bracelet_type(BraceletSpec(6, "SI", True)))
print("alternating bracelet of negative-amphichiral summands:",
      bracelet_type(BraceletSpec(6, "SNAc", True)))
