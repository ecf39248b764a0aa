"""knotsym: finite cyclic and dihedral knot symmetries in the 3-sphere.

Exact enumeration and classification of symmetry types, numerical
detection via linking numbers, rotation numbers of circle maps, and the
combinatorial existence constructions.
"""

from .zmod import (
    GroupSpec, Mod, SignClass, TurnPair, cyclic, dihedral,
    enumerate_sign_classes, enumerate_turn_pairs, generates_unit_ideal,
    parse_group, sign_class, turn_pair, unit_sign_classes,
)
from .orthrep import (
    GroupElement, Label, RepSum, enumerate_cyclic_o4, enumerate_dihedral_o4,
    evaluate, fixed_dim, invariant_round_circles, is_chiral, rep,
    rep_from_string, rep_to_string, sigma_shift_action, so4_conjugate,
)
from .symtypes import (
    SnappyProfile, SymmetryType, admissible_types, c2_type, classify,
    restrict_cyclic, restrict_dihedral, snappy_decide, type_from_string,
    type_to_string,
)
from .geometry import (
    KnotCurve, MatrixAction, RoundCircle, circle_xy, circle_zw, detect_type,
    fixed_axis, gauss_linking, linking_congruence_probe, torus_action,
    torus_knot,
)
from .circlemaps import (
    CircleMapLift, cyclic_conjugator, dihedral_conjugator, rotation_number,
    semiconjugacy_check,
)
from .constructions import (
    BraceletSpec, Permutation, bracelet_type, realize_parameters,
    snasi_declared_type, snasi_single_component, snasi_tangle_permutations,
    torus_symmetry_structure,
)

__version__ = "0.1.0"
