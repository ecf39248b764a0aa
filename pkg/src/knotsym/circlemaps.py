"""Lifts of circle diffeomorphisms, rotation numbers, and the explicit
conjugators taking finite cyclic and dihedral groups of circle maps to
rigid rotations and reflections.

A lift is a monotone map f: R -> R with f(x+1) - f(x) = +-1; the sign
is its degree.  Degree +1 lifts are strictly increasing, degree -1
lifts strictly decreasing.  Sampled maps are represented by monotone
cubic interpolation on a uniform grid over one period; compositions
resample to the same grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import (
    ArgumentError, ConventionError, GroupRelationError, OrderError,
)

GRID = 2048


class CircleMapLift:
    """A degree +-1 lift of a circle map, sampled on a uniform grid.

    Stores the values of f at i/N for i = 0..N; evaluation elsewhere
    uses monotone (PCHIP) cubic interpolation, extended by the lift
    relation f(x + 1) = f(x) + degree.
    """

    def __init__(self, values, degree, grid=GRID):
        values = np.asarray(values, dtype=float)
        if degree not in (1, -1):
            raise ArgumentError(f"degree must be +-1, got {degree}")
        if len(values) != grid + 1:
            raise ArgumentError(
                f"need {grid + 1} samples over one closed period, got {len(values)}"
            )
        if abs(values[-1] - values[0] - degree) > 1e-9:
            raise ArgumentError(
                f"f(1) - f(0) = {values[-1] - values[0]:.3g} != degree {degree}"
            )
        steps = np.diff(values)
        if degree == 1 and np.any(steps <= 0):
            raise ArgumentError("degree +1 lifts must be strictly increasing")
        if degree == -1 and np.any(steps >= 0):
            raise ArgumentError("degree -1 lifts must be strictly decreasing")
        self.values = values
        self.degree = degree
        self.grid = grid
        self._interp = PchipInterpolator(np.linspace(0.0, 1.0, grid + 1), values)

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_function(cls, f, degree=None, grid=GRID):
        xs = np.linspace(0.0, 1.0, grid + 1)
        values = np.asarray([float(f(x)) for x in xs])
        if degree is None:
            degree = int(round(values[-1] - values[0]))
        return cls(values, degree, grid)

    @classmethod
    def rotation(cls, c, grid=GRID):
        xs = np.linspace(0.0, 1.0, grid + 1)
        return cls(xs + float(c), 1, grid)

    @classmethod
    def identity(cls, grid=GRID):
        return cls.rotation(0.0, grid)

    @classmethod
    def reflection(cls, grid=GRID):
        """The standard degree -1 lift x -> -x."""
        xs = np.linspace(0.0, 1.0, grid + 1)
        return cls(-xs, -1, grid)

    # -- evaluation ----------------------------------------------------------

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        k = np.floor(x)
        return self._interp(x - k) + self.degree * k

    def sample_grid(self):
        return np.linspace(0.0, 1.0, self.grid + 1)

    # -- algebra --------------------------------------------------------------

    def after(self, other: "CircleMapLift") -> "CircleMapLift":
        """The composition self o other, resampled to the grid."""
        xs = np.linspace(0.0, 1.0, self.grid + 1)
        return CircleMapLift(self(other(xs)), self.degree * other.degree,
                             self.grid)

    def inverse(self) -> "CircleMapLift":
        """The inverse lift, found by monotone bisection to 1e-12."""
        ys = np.linspace(0.0, 1.0, self.grid + 1)
        # |f(x) - degree*x| is periodic, so a uniform bracket exists
        spread = float(np.max(np.abs(
            self.values - self.degree * np.linspace(0, 1, self.grid + 1)
        ))) + 1.0
        lo = self.degree * ys - spread
        hi = self.degree * ys + spread
        increasing = self.degree == 1
        for _ in range(64):
            mid = 0.5 * (lo + hi)
            below = self(mid) < ys if increasing else self(mid) > ys
            lo = np.where(below, mid, lo)
            hi = np.where(below, hi, mid)
        return CircleMapLift(0.5 * (lo + hi), self.degree, self.grid)

    def iterate_point(self, x, k):
        """f^k(x) by pointwise iteration (no resampling error)."""
        x = float(x)
        for _ in range(k):
            x = float(self(x))
        return x

    def power(self, k) -> "CircleMapLift":
        if k < 1:
            raise ArgumentError(f"power must be >= 1, got {k}")
        out = self
        for _ in range(k - 1):
            out = out.after(self)
        return out

    def max_deviation_from(self, other, probes=4096):
        xs = np.linspace(0.0, 1.0, probes)
        return float(np.max(np.abs(self(xs) - other(xs))))

    # -- serialization ---------------------------------------------------------

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(f"circlemap v1 {self.degree} {self.grid}\n")
            for v in self.values[:-1]:
                fh.write(f"{v:.17g}\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            header = fh.readline().split()
            if len(header) != 4 or header[0] != "circlemap" or header[1] != "v1":
                raise ArgumentError(f"bad circle map header in {path}")
            degree, grid = int(header[2]), int(header[3])
            values = np.loadtxt(fh, dtype=float)
        if values.shape != (grid,):
            raise ArgumentError(
                f"expected {grid} sample values in {path}, got {values.shape}"
            )
        closed = np.append(values, values[0] + degree)
        return cls(closed, degree, grid)


# ---------------------------------------------------------------------------
# Rotation numbers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RotationNumber:
    """A rotation-number estimate with its a-priori error bound and,
    when certified, the snapped rational value."""

    value: float
    error_bound: float
    snapped: Fraction | None

    def __float__(self):
        return self.value


def rotation_number(f: CircleMapLift, iterations=1024,
                    max_denominator=64) -> RotationNumber:
    """The rotation number lim (f^k(0))/k of a degree +1 lift.

    The estimate f^k(0)/k carries the standard error bound 1/k.  The
    result snaps to the best rational a/q with q <= max_denominator
    when that fraction lies within both the error bound and the
    certification radius 1/(2 q^2).
    """
    if f.degree != 1:
        raise ArgumentError("rotation numbers require degree +1")
    if iterations < 64:
        raise ArgumentError(f"need at least 64 iterations, got {iterations}")
    value = f.iterate_point(0.0, iterations) / iterations
    bound = 1.0 / iterations
    frac = Fraction(value).limit_denominator(max_denominator)
    radius = 1.0 / (2.0 * max(frac.denominator, 1) ** 2)
    snapped = frac if abs(value - float(frac)) <= min(bound, radius) else None
    return RotationNumber(value, bound, snapped)


@dataclass(frozen=True)
class SemiconjugacyReport:
    holds: bool
    lhs: float  # deg(h) * rtn(f), mod 1
    rhs: float  # rtn(g), mod 1
    relation_defect: float


def semiconjugacy_check(f: CircleMapLift, g: CircleMapLift,
                        h: CircleMapLift, iterations=1024,
                        relation_tol=1e-7) -> SemiconjugacyReport:
    """Verify deg(h) * rtn(f) = rtn(g) mod 1 for maps with h o f = g o h.

    Raises when the intertwining relation itself fails on the sample
    grid (reporting the maximum deviation); the returned report compares
    the two rotation numbers within the combined estimate bounds.
    """
    if f.degree != 1 or g.degree != 1:
        raise ArgumentError("f and g must have degree +1")
    xs = np.linspace(0.0, 1.0, 512)
    lhs_vals = h(f(xs))
    rhs_vals = g(h(xs))
    # lifts of equal circle maps may differ by a constant integer
    offset = round(float(np.mean(lhs_vals - rhs_vals)))
    defect = float(np.max(np.abs(lhs_vals - rhs_vals - offset)))
    if defect > relation_tol:
        raise ArgumentError(
            f"h o f != g o h: maximum deviation {defect:.3g} exceeds "
            f"{relation_tol}"
        )
    rf = rotation_number(f, iterations)
    rg = rotation_number(g, iterations)
    lhs = (h.degree * rf.value) % 1.0
    rhs = rg.value % 1.0
    diff = abs(lhs - rhs)
    diff = min(diff, 1.0 - diff)
    tol = rf.error_bound + rg.error_bound + 10 * relation_tol
    return SemiconjugacyReport(diff <= tol, lhs, rhs, defect)


# ---------------------------------------------------------------------------
# Conjugators
# ---------------------------------------------------------------------------

def _finite_order_offset(g: CircleMapLift, n: int, tol=1e-7):
    """The integer c with g^n = id + c, or raise OrderError."""
    xs = np.linspace(0.0, 1.0, 257)
    gn = xs.copy()
    for _ in range(n):
        gn = g(gn)
    c = round(float(np.mean(gn - xs)))
    defect = float(np.max(np.abs(gn - xs - c)))
    if defect > tol:
        raise OrderError(
            f"g^{n} differs from a translation by {defect:.3g}; the map "
            f"does not have order {n} within {tol}"
        )
    return c


def cyclic_conjugator(g: CircleMapLift, n: int) -> CircleMapLift:
    """The averaged conjugator h = (1/n) sum_i g^i taking an order-n
    map with rotation number 1/n to the rigid rotation x + 1/n.

    h(g(x)) = h(x) + (g^n(x) - x)/n, so h conjugates g to the rigid
    rotation by its rotation number; requiring rtn(g) = 1/n pins the
    result to x + 1/n.
    """
    if g.degree != 1:
        raise ArgumentError("the cyclic conjugator needs a degree +1 map")
    if n < 1:
        raise ArgumentError(f"order must be >= 1, got {n}")
    if n == 1:
        offset = _finite_order_offset(g, 1)
        if offset != 0:
            raise ConventionError(
                f"rtn(g) = {offset} != 0 for an order-1 map"
            )
        return CircleMapLift.identity(g.grid)
    offset = _finite_order_offset(g, n)
    if offset != 1:
        raise ConventionError(
            f"rtn(g) = {offset}/{n}, not 1/{n}; re-generate g so the "
            "preferred generator rotates by +1/n"
        )
    xs = np.linspace(0.0, 1.0, g.grid + 1)
    acc = xs.copy()
    current = xs.copy()
    for _ in range(n - 1):
        current = g(current)
        acc = acc + current
    return CircleMapLift(acc / n, 1, g.grid)


def dihedral_conjugator(g: CircleMapLift, s: CircleMapLift,
                        n: int) -> CircleMapLift:
    """The averaged conjugator for a dihedral group of circle maps.

    h = (1/2n) sum_i (g^i - g^i o s) simultaneously takes g to the
    rigid rotation x + rtn(g) and s to the standard reflection -x.
    Requires deg(s) = -1, s^2 = id and s g = g^-1 s exactly as lifts.
    """
    if g.degree != 1:
        raise ArgumentError("g must have degree +1")
    if s.degree != -1:
        raise ArgumentError("s must have degree -1")
    if n < 1:
        raise ArgumentError(f"order must be >= 1, got {n}")
    xs = np.linspace(0.0, 1.0, 257)
    dev_s2 = float(np.max(np.abs(s(s(xs)) - xs)))
    g_inv = g.inverse()
    dev_braid = float(np.max(np.abs(s(g(xs)) - g_inv(s(xs)))))
    deviations = {"s^2 - id": dev_s2, "s g - g^-1 s": dev_braid}
    if max(deviations.values()) > 1e-7:
        raise GroupRelationError(
            "the pair (g, s) fails the dihedral relations: "
            + ", ".join(f"{k} deviates by {v:.3g}" for k, v in deviations.items()),
            deviations,
        )
    _finite_order_offset(g, n)  # raises OrderError when g^n != id + c
    grid_x = np.linspace(0.0, 1.0, g.grid + 1)
    acc = np.zeros_like(grid_x)
    forward = grid_x.copy()
    backward = s(grid_x)
    for _ in range(n):
        acc = acc + forward - backward
        forward = g(forward)
        backward = g(backward)
    return CircleMapLift(acc / (2 * n), 1, g.grid)
