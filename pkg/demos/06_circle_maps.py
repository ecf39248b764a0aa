"""Rotation numbers and explicit conjugators for circle maps.

The knot-side action of a symmetry is a finite group of circle
diffeomorphisms.  Averaging the iterates of a finite-order map gives an
explicit conjugacy to a rigid rotation; including the reflected
iterates handles dihedral groups, straightening the reflection to
x -> -x at the same time.
"""

import numpy as np

from knotsym.circlemaps import (
    CircleMapLift, cyclic_conjugator, dihedral_conjugator, rotation_number,
    semiconjugacy_check,
)


def wobbly_diffeo(seed, strength=0.12):
    """A smooth circle diffeomorphism built from a few Fourier modes."""
    rng = np.random.default_rng(seed)
    ks = np.arange(1, 5)
    amps = strength * rng.uniform(-1, 1, 4) / (2 * np.pi * ks)
    phases = rng.uniform(0, 2 * np.pi, 4)

    def f(x):
        return x + sum(a * np.sin(2 * np.pi * k * x + p)
                       for a, k, p in zip(amps, ks, phases))

    return CircleMapLift.from_function(f, 1)


# Rotation numbers: exact for rigid rotations, conjugation-invariant in
# general, and snapped to a/n for finite-order maps.
phi = wobbly_diffeo(7)
g = phi.after(CircleMapLift.rotation(2 / 7)).after(phi.inverse())
r = rotation_number(g, 2048)
print(f"wobbly order-7 map: rotation number {r.value:.8f} "
      f"+- {r.error_bound:.1e}, snapped to {r.snapped}")

# Averaging the iterates conjugates the map back to the rigid rotation.
g = phi.after(CircleMapLift.rotation(1 / 7)).after(phi.inverse())
h = cyclic_conjugator(g, 7)
dev = h.after(g).after(h.inverse()).max_deviation_from(
    CircleMapLift.rotation(1 / 7))
print(f"cyclic conjugator straightens g to x + 1/7 within {dev:.2e}")

# For a rigid rotation the average is the arithmetic-series shift.
h = cyclic_conjugator(CircleMapLift.rotation(1 / 4), 4)
print(f"conjugator of the rigid 1/4-rotation is x + {h(0.0):.4f} (= 3/8)")

# The dihedral version also straightens a conjugated reflection.
s = phi.after(CircleMapLift.reflection()).after(phi.inverse())
h = dihedral_conjugator(g, s, 7)
dev_s = h.after(s).after(h.inverse()).max_deviation_from(
    CircleMapLift.reflection())
print(f"dihedral conjugator straightens s to -x within {dev_s:.2e}")

# Degree -1 intertwiners negate rotation numbers mod 1.
rep = semiconjugacy_check(CircleMapLift.rotation(1 / 5),
                          CircleMapLift.rotation(-1 / 5),
                          CircleMapLift.reflection())
print(f"reflection intertwines 1/5 with -1/5: {rep.holds} "
      f"(both sides {rep.lhs:.3f} mod 1)")
