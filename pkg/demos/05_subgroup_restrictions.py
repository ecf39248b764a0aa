"""Restrict a symmetric knot's action to a subgroup.

A C_n-symmetric knot restricts to every subgroup generated by a power
of the rotation; a D_n-symmetric knot also restricts to dihedral
subgroups picked out by a divisor d and a residue r.  Parameters reduce
mod n/d, freely periodic types can degenerate to periodic ones, and
order-2 results are reported in the order-2 vocabulary.
"""

from knotsym import restrict_cyclic, restrict_dihedral, type_from_string

print("cyclic restrictions of FPer(2,3)/C12:")
t = type_from_string("FPer(2,3)/C12")
for d in (2, 3, 4, 6):
    print(f"  index {d}: -> {restrict_cyclic(t, d)}")

print("\nrotoreflections restrict by the parity of the index:")
t = type_from_string("RRef(1)/C12")
for d in (2, 3, 4, 6):
    print(f"  index {d}: -> {restrict_cyclic(t, d)}")

print("\ndihedral restrictions of SNASI(1)/D12 "
      "(reflection class depends on r):")
t = type_from_string("SNASI(1)/D12")
for d, r in [(2, 0), (2, 1), (3, 0), (4, 1), (6, 0), (12, 0), (12, 1)]:
    print(f"  d={d:>2}, r={r}: -> {restrict_dihedral(t, d, r)}")

print("\nthe composite-only families restrict among themselves:")
t = type_from_string("DihF/D12")
for d, r in [(2, 0), (2, 1), (3, 0), (4, 1)]:
    print(f"  d={d:>2}, r={r}: -> {restrict_dihedral(t, d, r)}")

# Restriction is transitive: restricting in two steps agrees with
# restricting once by the product of the indices.
a = restrict_cyclic(restrict_cyclic(type_from_string("FPer(1,5)/C12"), 2), 3)
b = restrict_cyclic(type_from_string("FPer(1,5)/C12"), 6)
print(f"\ntwo steps {a} == one step {b}: {a == b}")
