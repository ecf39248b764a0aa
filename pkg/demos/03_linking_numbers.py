"""Gauss linking numbers of curves in the 3-sphere.

Linking numbers are the measuring stick of the classification: the
parameter of a periodic symmetry is the linking number of the knot
with the rotation axis.  The integral is evaluated exactly on inscribed
polygons after stereographic projection, so the pre-rounding residual
stays at roundoff once the sampling resolves the curves.
"""

from knotsym import gauss_linking, torus_knot
from knotsym.geometry import circle_xy, circle_zw

# The two coordinate circles form a positive Hopf link.
for samples in (256, 512, 1024):
    r = gauss_linking(circle_xy(), circle_zw(), samples)
    print(f"lk(xy-circle, zw-circle) at {samples:>4} samples: "
          f"{r.value}  (residual {r.residual:.1e})")

# A (p, q) torus knot winds p times around one coordinate circle and q
# times around the other.
print()
for p, q in [(2, 3), (2, 5), (3, 5), (4, 7)]:
    t = torus_knot(p, q)
    a = gauss_linking(t, circle_zw(), 1024)
    b = gauss_linking(t, circle_xy(), 1024)
    print(f"T({p},{q}): lk with zw-circle = {a.value}, "
          f"lk with xy-circle = {b.value}")

# Orientation reversal negates the linking number; swapping the curves
# does not change it.
t = torus_knot(2, 5)
print()
print("lk(T(2,5), axis)          =", gauss_linking(t, circle_zw(), 512).value)
print("lk(T(2,5) reversed, axis) =",
      gauss_linking(t.reversed(), circle_zw(), 512).value)
print("lk(axis, T(2,5))          =", gauss_linking(circle_zw(), t, 512).value)
