"""Detect the symmetry type of an explicit invariant curve.

Given a matrix action and an invariant curve, the detector re-indexes
the rotation generator so it steps the knot by a +1/n turn (tracking a
marked point to its nearest orbit neighbour), finds the invariant axes
from eigenspaces, and reads the type parameters off linking numbers.
"""

from knotsym import detect_type, torus_knot
from knotsym.geometry import (
    detect_report, standard_model, torus_cyclic_action, torus_dihedral_action,
)
from knotsym.symtypes import admissible_types
from knotsym.zmod import cyclic, dihedral

# The (2,5) torus knot under the 5-fold rotation: the axis is the
# zw-coordinate circle and the knot links it twice.
curve = torus_knot(2, 5)
report = detect_report(torus_cyclic_action(2, 5, 5), curve, samples=768)
print("C5 action on T(2,5):", report.type, report.measurements)

# The same knot with the strong inversions included.
print("D5 action on T(2,5):",
      detect_type(torus_dihedral_action(2, 5, 5), curve, samples=768))

# A freely periodic example: restrict the (3,4) structure to C_5; both
# reductions are nonzero so the generator acts by a double rotation.
print("C5 action on T(3,4):",
      detect_type(torus_cyclic_action(3, 4, 5), torus_knot(3, 4),
                  samples=768))

# Every admissible type has a standard model: an action matrix pair and
# an invariant curve the detector sends back to the type.
print()
for group in (cyclic(6), dihedral(4)):
    for t in admissible_types(group):
        action, model_curve = standard_model(t)
        got = detect_type(action, model_curve, samples=768)
        assert got == t
        print(f"standard model of {str(t):<14} detects as {got}")
