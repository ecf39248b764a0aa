"""Enumerate the symmetry types of knots for small cyclic and dihedral
groups.

Every finite group acting faithfully on a nontrivial knot in the
3-sphere is cyclic or dihedral, and the possible actions fall into a
short list of named families.  Order-2 symmetries have six types of
their own; larger cyclic groups have three families (Per, FPer, RRef)
and dihedral groups seven (SIFP, SIP, SNAP, SNASI plus three that only
composite knots admit).
"""

from knotsym import admissible_types, cyclic, dihedral


def show(group):
    types = admissible_types(group)
    print(f"\n{group}: {len(types)} admissible types")
    print(f"  {'type':<16} {'prime?':<7} {'good diagram?':<14}")
    for t in types:
        prime = "yes" if t.prime_admissible else "no"
        good = "yes" if t.good_diagram else "no"
        print(f"  {str(t):<16} {prime:<7} {good:<14}")


# The six order-2 types, distinguished by the fixed sets of the
# involution on the sphere and on the knot.
show(cyclic(2))

# For C_6: periodicities Per-(a) for units a up to sign, freely periodic
# types FPer-(a,b) for turn pairs, and rotoreflections RRef-(a) since 6
# is even.
show(cyclic(6))

# For D_6: each cyclic family extends by strong inversions or strong
# negative amphichiralities; DihB, DihD, DihF exist only on composite
# knots, hence prime? = no.
show(dihedral(6))

# Quantification counts grow with n through the unit sign classes and
# turn pairs:
for n in range(3, 13):
    c, d = len(admissible_types(cyclic(n))), len(admissible_types(dihedral(n)))
    print(f"n={n:>2}: {c:>3} cyclic types, {d:>3} dihedral types")
