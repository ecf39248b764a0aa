"""Curves in S^3, matrix actions, Gauss linking numbers, and detection
of symmetry types from explicit invariant curves.

Linking numbers are computed by stereographically projecting both
curves to R^3 from a pole far from each, then evaluating the Gauss
integral of the inscribed polygons exactly via the two-segment
solid-angle formula.  The result is an integer up to floating-point
residue whenever the sampling resolves the curves.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.optimize import minimize_scalar

from .errors import (
    ArgumentError, ClassificationError, InvarianceError, ProximityError,
    ResolutionError, TransversalityError,
)
from . import symtypes
from .orthrep import GroupElement, RepSum, evaluate, rotation2
from .symtypes import SymmetryType, representative_rep
from .zmod import GroupSpec, cyclic, dihedral, sign_class, turn_pair

TWO_PI = 2.0 * math.pi

DEFAULT_SAMPLES = 1024
SAMPLES_ENV = "KSK_SAMPLES"


def default_samples() -> int:
    value = os.environ.get(SAMPLES_ENV)
    if value is None:
        return DEFAULT_SAMPLES
    try:
        n = int(value)
    except ValueError:
        raise ArgumentError(f"{SAMPLES_ENV} must be an integer, got {value!r}")
    if n < 16:
        raise ArgumentError(f"{SAMPLES_ENV} must be >= 16, got {n}")
    return n


# ---------------------------------------------------------------------------
# Curves
# ---------------------------------------------------------------------------

class KnotCurve:
    """A smooth closed curve on S^3, closed-form or sampled.

    Closed-form curves wrap a vectorized map theta -> R^4, normalized
    to the sphere on evaluation; sampled curves interpolate >= 512
    uniform samples with a periodic cubic spline.  Orientation +1
    traverses increasing parameter.
    """

    MIN_SAMPLES = 512

    def __init__(self, func=None, samples=None, orientation=1, *, validate=True):
        if (func is None) == (samples is None):
            raise ArgumentError("provide exactly one of func or samples")
        if orientation not in (1, -1):
            raise ArgumentError(f"orientation must be +-1, got {orientation}")
        self.orientation = orientation
        self._func = func
        self._spline = None
        if samples is not None:
            pts = np.asarray(samples, dtype=float)
            if pts.ndim != 2 or pts.shape[1] != 4:
                raise ArgumentError(f"samples must be (N, 4), got {pts.shape}")
            if len(pts) < self.MIN_SAMPLES:
                raise ArgumentError(
                    f"need at least {self.MIN_SAMPLES} samples, got {len(pts)}"
                )
            theta = np.linspace(0.0, TWO_PI, len(pts) + 1)
            closed = np.vstack([pts, pts[:1]])
            self._spline = CubicSpline(theta, closed, bc_type="periodic")
        if validate:
            self._validate()

    @classmethod
    def from_function(cls, func, orientation=1):
        return cls(func=func, orientation=orientation)

    @classmethod
    def from_samples(cls, samples, orientation=1):
        return cls(samples=samples, orientation=orientation)

    def point(self, theta):
        """Evaluate at parameter values (vectorized), always unit norm."""
        theta = np.asarray(theta, dtype=float) * self.orientation
        if self._func is not None:
            pts = np.asarray(self._func(theta), dtype=float)
        else:
            pts = self._spline(np.mod(theta, TWO_PI))
        pts = np.atleast_2d(pts)
        norms = np.linalg.norm(pts, axis=-1, keepdims=True)
        return pts / norms

    def sample(self, count):
        theta = np.linspace(0.0, TWO_PI, count, endpoint=False)
        return self.point(theta)

    def reversed(self):
        if self._func is not None:
            return KnotCurve(func=self._func, orientation=-self.orientation,
                             validate=False)
        pts = self.sample(max(self.MIN_SAMPLES, 1024))
        return KnotCurve(samples=pts[::-1], validate=False)

    def _validate(self):
        theta = np.linspace(0, TWO_PI, 512, endpoint=False)
        pts = np.atleast_2d(self.point(theta))
        if self._func is not None:
            raw = np.atleast_2d(np.asarray(self._func(theta), dtype=float))
            if np.min(np.linalg.norm(raw, axis=1)) < 1e-6:
                raise ArgumentError("curve passes through the origin")
        if np.max(np.abs(np.linalg.norm(pts, axis=1) - 1.0)) > 1e-9:
            raise ArgumentError("curve is not on the unit sphere")
        if np.linalg.norm(self.point(0.0) - self.point(TWO_PI)) > 1e-9:
            raise ArgumentError("curve is not closed")
        # embedded at sample resolution: non-adjacent samples stay apart
        dist = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
        m = len(pts)
        idx = np.arange(m)
        gap = np.minimum(np.abs(idx[:, None] - idx[None, :]),
                         m - np.abs(idx[:, None] - idx[None, :]))
        if np.min(dist[gap > 1]) <= 1e-12:
            raise ArgumentError("curve is not embedded at sample resolution")

    # -- file format --------------------------------------------------------

    def save(self, path, count=1024):
        pts = self.sample(count)
        with open(path, "w") as fh:
            fh.write(f"knotcurve v1 {count}\n")
            for p in pts:
                fh.write(" ".join(f"{x:.17g}" for x in p) + "\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            header = fh.readline().split()
            if len(header) != 3 or header[0] != "knotcurve" or header[1] != "v1":
                raise ArgumentError(f"bad curve file header in {path}")
            count = int(header[2])
            pts = np.loadtxt(fh, dtype=float)
        pts = np.atleast_2d(pts)
        if pts.shape != (count, 4):
            raise ArgumentError(
                f"expected {count} rows of 4 floats in {path}, got {pts.shape}"
            )
        return cls(samples=pts)


@dataclass(frozen=True)
class RoundCircle:
    """S^3 intersected with a 2-plane through the origin, oriented."""

    u: np.ndarray
    v: np.ndarray
    orientation: int = 1

    def __post_init__(self):
        u = np.asarray(self.u, dtype=float)
        v = np.asarray(self.v, dtype=float)
        if u.shape != (4,) or v.shape != (4,):
            raise ArgumentError("basis vectors must lie in R^4")
        if abs(np.linalg.norm(u) - 1) > 1e-12 or abs(np.linalg.norm(v) - 1) > 1e-12 \
                or abs(float(u @ v)) > 1e-12:
            raise ArgumentError("basis must be orthonormal within 1e-12")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)

    def as_curve(self) -> KnotCurve:
        u, v, s = self.u, self.v, self.orientation

        def fn(theta):
            theta = np.atleast_1d(theta)
            return np.cos(s * theta)[:, None] * u + np.sin(s * theta)[:, None] * v

        return KnotCurve(func=fn, validate=False)

    def reversed(self):
        return RoundCircle(self.u, self.v, -self.orientation)

    def distance_to_points(self, points):
        """Exact distance from each point of S^3 to the circle."""
        pts = np.atleast_2d(points)
        plane = np.column_stack([self.u, self.v])
        proj = np.linalg.norm(pts @ plane, axis=1)
        sq = np.sum(pts * pts, axis=1) + 1.0 - 2.0 * proj
        return np.sqrt(np.maximum(sq, 0.0))


def circle_xy() -> RoundCircle:
    return RoundCircle(np.array([1.0, 0, 0, 0]), np.array([0.0, 1, 0, 0]))


def circle_zw() -> RoundCircle:
    return RoundCircle(np.array([0.0, 0, 1, 0]), np.array([0.0, 0, 0, 1]))


# ---------------------------------------------------------------------------
# Matrix actions
# ---------------------------------------------------------------------------

def _check_orthogonal(m, tol=1e-9):
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ArgumentError(f"matrix must be square, got {m.shape}")
    if np.max(np.abs(m.T @ m - np.eye(m.shape[0]))) > tol:
        raise ArgumentError("matrix is not orthogonal within tolerance")
    return m


class MatrixAction:
    """A faithful action of C_n or D_n on S^3 by explicit matrices."""

    def __init__(self, group: GroupSpec, rho, sigma=None, tol=1e-9):
        self.group = group
        self.rho = _check_orthogonal(rho, tol)
        if self.rho.shape != (4, 4):
            raise ArgumentError("generator matrices must be 4x4")
        if group.is_dihedral:
            if sigma is None:
                raise ArgumentError(f"{group} needs a sigma generator")
            self.sigma = _check_orthogonal(sigma, tol)
            if self.sigma.shape != (4, 4):
                raise ArgumentError("generator matrices must be 4x4")
        else:
            if sigma is not None:
                raise ArgumentError(f"{group} takes no sigma generator")
            self.sigma = None
        self._check_relations(tol)
        self._check_faithful(tol)

    def _check_relations(self, tol):
        n = self.group.n
        eye = np.eye(4)
        if np.max(np.abs(np.linalg.matrix_power(self.rho, n) - eye)) > tol:
            raise ArgumentError(f"rho^{n} != I within {tol}")
        if self.sigma is not None:
            if np.max(np.abs(self.sigma @ self.sigma - eye)) > tol:
                raise ArgumentError(f"sigma^2 != I within {tol}")
            rs = self.rho @ self.sigma
            if np.max(np.abs(rs @ rs - eye)) > tol:
                raise ArgumentError(f"(rho sigma)^2 != I within {tol}")

    def _check_faithful(self, tol):
        for g in self.elements():
            if g.is_identity:
                continue
            if np.max(np.abs(self.matrix(g) - np.eye(4))) <= tol:
                raise ArgumentError(f"action is not faithful: {g!r} acts as I")

    def elements(self):
        refs = (0, 1) if self.group.is_dihedral else (0,)
        return [GroupElement(self.group, i, j)
                for j in refs for i in range(self.group.n)]

    def generator_matrices(self):
        out = [("rho", self.rho)]
        if self.sigma is not None:
            out.append(("sigma", self.sigma))
        return out

    def matrix(self, g: GroupElement) -> np.ndarray:
        if g.group != self.group:
            raise ArgumentError(f"{g!r} is not an element of {self.group}")
        m = np.linalg.matrix_power(self.rho, g.rot)
        if g.ref:
            m = m @ self.sigma
        return m

    @classmethod
    def from_representation(cls, r: RepSum):
        rho = evaluate(r, GroupElement(r.group, 1, 0))
        sigma = None
        if r.group.is_dihedral:
            sigma = evaluate(r, GroupElement(r.group, 0, 1))
        return cls(r.group, rho, sigma)

    # -- file format --------------------------------------------------------

    def save(self, path):
        with open(path, "w") as fh:
            kind = "C" if self.group.is_cyclic else "D"
            fh.write(f"matrixaction v1 {kind} {self.group.n}\n")
            for row in self.rho:
                fh.write(" ".join(f"{x:.17g}" for x in row) + "\n")
            if self.sigma is not None:
                for row in self.sigma:
                    fh.write(" ".join(f"{x:.17g}" for x in row) + "\n")

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            header = fh.readline().split()
            if len(header) != 4 or header[0] != "matrixaction" or header[1] != "v1":
                raise ArgumentError(f"bad action file header in {path}")
            kind, n = header[2], int(header[3])
            rows = np.loadtxt(fh, dtype=float)
        if kind == "C":
            if rows.shape != (4, 4):
                raise ArgumentError("cyclic action file needs 4 matrix rows")
            return cls(cyclic(n), rows)
        if rows.shape != (8, 4):
            raise ArgumentError("dihedral action file needs 8 matrix rows")
        return cls(dihedral(n), rows[:4], rows[4:])


# ---------------------------------------------------------------------------
# Torus knots
# ---------------------------------------------------------------------------

def torus_knot(p: int, q: int) -> KnotCurve:
    """The (p, q) torus knot theta -> (e^{ip theta}, e^{iq theta})/sqrt(2)."""
    if p < 2 or q < 2:
        raise ArgumentError(f"need p, q >= 2, got ({p}, {q})")
    if math.gcd(p, q) != 1:
        raise ArgumentError(
            f"({p}, {q}) is a {math.gcd(p, q)}-component link, not a knot"
        )
    return _torus_curve(p, q)


def _torus_curve(p, q):
    r = 1.0 / math.sqrt(2.0)

    def fn(theta):
        theta = np.atleast_1d(theta)
        return np.stack([
            r * np.cos(p * theta), r * np.sin(p * theta),
            r * np.cos(q * theta), r * np.sin(q * theta),
        ], axis=-1)

    return KnotCurve(func=fn)


def _circle_power(m, k):
    """The orthogonal 2x2 matrix implementing z -> (Mz)^k on the unit
    circle, viewed as complex numbers.

    Rotations raise to matrix powers; a reflection z -> c conj(z)
    becomes the reflection z -> c^k conj(z), which is not a matrix
    power of M when k is even.
    """
    m = np.asarray(m, dtype=float)
    if np.linalg.det(m) > 0:
        return np.linalg.matrix_power(m, k)
    c = complex(m[0, 0], m[1, 0])  # image of 1 under the reflection
    ck = c ** k
    return np.array([[ck.real, ck.imag], [ck.imag, -ck.real]])


def torus_action(p: int, q: int, m) -> np.ndarray:
    """The 4x4 matrix acting factor-wise by the p-th and q-th circle
    powers of M, so that it maps T_{p,q}(s) to T_{p,q}(Ms) for every
    M in O(2)."""
    m = _check_orthogonal(m)
    if m.shape != (2, 2):
        raise ArgumentError(f"m must be 2x2, got {m.shape}")
    out = np.zeros((4, 4))
    out[:2, :2] = _circle_power(m, p)
    out[2:, 2:] = _circle_power(m, q)
    return out


REFLECTION2 = np.array([[-1.0, 0.0], [0.0, 1.0]])


def torus_cyclic_action(p: int, q: int, n: int) -> MatrixAction:
    """The C_n restriction of the torus-knot structure."""
    return MatrixAction(cyclic(n), torus_action(p, q, rotation2(TWO_PI / n)))


def torus_dihedral_action(p: int, q: int, n: int) -> MatrixAction:
    """The D_n restriction of the torus-knot structure."""
    return MatrixAction(
        dihedral(n),
        torus_action(p, q, rotation2(TWO_PI / n)),
        torus_action(p, q, REFLECTION2),
    )


# ---------------------------------------------------------------------------
# Linking numbers
# ---------------------------------------------------------------------------

def _pole_candidates(count=64, seed=20230405):
    rng = np.random.default_rng(seed)
    pts = rng.normal(size=(count, 4))
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    return pts


def _choose_pole(p1, p2):
    """A projection pole maximizing distance to both curves, searched
    over 64 antipodal candidate pairs."""
    candidates = _pole_candidates()
    candidates = np.vstack([candidates, -candidates])
    pts = np.vstack([p1, p2])
    worst = np.max(pts @ candidates.T, axis=0)
    best = int(np.argmin(worst))
    return candidates[best], float(worst[best])


def _stereographic(points, pole):
    pole = np.asarray(pole, dtype=float)
    # orthonormal basis of the pole's complement; the handedness is fixed
    # so the canonically oriented xy/zw coordinate circles link +1
    basis = np.linalg.svd(np.eye(4) - np.outer(pole, pole))[0][:, :3]
    frame = np.column_stack([pole, basis])
    if np.linalg.det(frame) > 0:
        basis = basis[:, [1, 0, 2]]
    denom = 1.0 - points @ pole
    if np.min(np.abs(denom)) < 1e-12:
        raise ProximityError("curve passes through the projection pole")
    return (points @ basis) / denom[:, None]


def _polyline_linking(a, b):
    """Exact Gauss linking number of two closed polylines in R^3.

    Sums the signed solid angles of the quadrilaterals spanned by each
    segment pair; exact for the polygons themselves up to roundoff.
    """
    a1 = a
    a2 = np.roll(a, -1, axis=0)
    total = 0.0
    for i in range(len(b)):
        p = b[i]
        pn = b[(i + 1) % len(b)]
        ra = a1 - p
        rb = a1 - pn
        rc = a2 - pn
        rd = a2 - p
        cross_bc = np.cross(rb, rc)
        triple = np.einsum("ij,ij->i", ra, cross_bc)
        na = np.linalg.norm(ra, axis=1)
        nb = np.linalg.norm(rb, axis=1)
        nc = np.linalg.norm(rc, axis=1)
        nd = np.linalg.norm(rd, axis=1)
        ab = np.einsum("ij,ij->i", ra, rb)
        bc = np.einsum("ij,ij->i", rb, rc)
        cd = np.einsum("ij,ij->i", rc, rd)
        da = np.einsum("ij,ij->i", rd, ra)
        ca = np.einsum("ij,ij->i", rc, ra)
        d1 = na * nb * nc + ab * nc + bc * na + ca * nb
        d2 = na * nd * nc + da * nc + cd * na + ca * nd
        total += np.sum(np.arctan2(triple, d1) + np.arctan2(triple, d2))
    return total / TWO_PI


@dataclass(frozen=True)
class LinkingResult:
    value: int
    residual: float
    samples: int

    def __int__(self):
        return self.value


def gauss_linking(c1, c2, samples=None) -> LinkingResult:
    """Linking number of two disjoint oriented closed curves in S^3.

    Both curves are sampled, projected stereographically from a pole
    far from each, and the polygonal Gauss integral is evaluated
    exactly.  Raises ProximityError when the curves come closer than
    ten sample spacings and ResolutionError when the pre-rounding
    residual reaches 0.05.
    """
    if samples is None:
        samples = default_samples()
    if isinstance(c1, RoundCircle):
        c1 = c1.as_curve()
    if isinstance(c2, RoundCircle):
        c2 = c2.as_curve()
    p1 = c1.sample(samples)
    p2 = c2.sample(samples)
    sep = _min_distance(p1, p2)
    if sep <= 10.0 * _max_step(p1, p2):
        raise ProximityError(
            f"curves are {sep:.3g} apart, below 10 sample spacings; "
            "increase the sample count"
        )
    pole, _ = _choose_pole(p1, p2)
    q1 = _stereographic(p1, pole)
    q2 = _stereographic(p2, pole)
    raw = _polyline_linking(q1, q2)
    value = round(raw)
    residual = abs(raw - value)
    if residual >= 0.05:
        raise ResolutionError(
            f"linking residual {residual:.3g} >= 0.05 at {samples} samples; "
            "increase the sample count"
        )
    return LinkingResult(int(value), residual, samples)


def _min_distance(p1, p2):
    best = np.inf
    chunk = 512
    for i in range(0, len(p1), chunk):
        d = np.linalg.norm(p1[i:i + chunk, None, :] - p2[None, :, :], axis=-1)
        best = min(best, float(d.min()))
    return best


def _max_step(p1, p2):
    s1 = np.max(np.linalg.norm(np.roll(p1, -1, axis=0) - p1, axis=1))
    s2 = np.max(np.linalg.norm(np.roll(p2, -1, axis=0) - p2, axis=1))
    return max(float(s1), float(s2))


# ---------------------------------------------------------------------------
# Fixed sets of isometries
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FixedSet:
    """Fixed locus of an orthogonal matrix on S^3.

    kind is 'none', 'pair', 'circle' or 'sphere'; basis holds an
    orthonormal basis of the +1 eigenspace in its columns.
    """

    kind: str
    basis: np.ndarray

    def circle(self) -> RoundCircle:
        if self.kind != "circle":
            raise ArgumentError(f"fixed set is a {self.kind}, not a circle")
        return RoundCircle(self.basis[:, 0], self.basis[:, 1])

    def points(self):
        if self.kind != "pair":
            raise ArgumentError(f"fixed set is a {self.kind}, not a point pair")
        v = self.basis[:, 0]
        return np.array([v, -v])


def fixed_space(matrix, tol=1e-8) -> FixedSet:
    """Eigenvalue-1 eigenspace of an orthogonal matrix, via SVD."""
    m = np.asarray(matrix, dtype=float)
    u, s, _ = np.linalg.svd(m - np.eye(m.shape[0]))
    dim = int(np.sum(s < tol))
    basis = u[:, m.shape[0] - dim:] if dim else np.zeros((m.shape[0], 0))
    kind = {0: "none", 1: "pair", 2: "circle", 3: "sphere"}.get(dim)
    if kind is None:
        raise ArgumentError("matrix fixes everything; expected a nontrivial element")
    return FixedSet(kind, basis)


def fixed_axis(action: MatrixAction, element: GroupElement) -> FixedSet:
    """Fixed locus of a nontrivial group element of the action."""
    if element.is_identity:
        raise ArgumentError("element must be nontrivial")
    return fixed_space(action.matrix(element))


# ---------------------------------------------------------------------------
# Curve invariance and incidence
# ---------------------------------------------------------------------------

def _refine_curve_distance(curve, fn, coarse=4096):
    """Minimize a smooth point-distance functional along the curve:
    coarse grid scan followed by a bounded local refinement."""
    theta = np.linspace(0.0, TWO_PI, coarse, endpoint=False)
    vals = fn(theta)
    i = int(np.argmin(vals))
    step = TWO_PI / coarse
    res = minimize_scalar(lambda t: float(fn(np.array([t]))[0]),
                          bounds=(theta[i] - step, theta[i] + step),
                          method="bounded", options={"xatol": 1e-13})
    return min(float(vals[i]), float(res.fun))


def _point_to_curve_distance(points, curve, coarse=2048):
    """Distance from each point to the curve (coarse scan plus local
    refinement of the curve parameter)."""
    theta = np.linspace(0.0, TWO_PI, coarse, endpoint=False)
    dense = curve.point(theta)
    out = np.empty(len(points))
    step = TWO_PI / coarse
    for k, p in enumerate(points):
        d2 = np.sum((dense - p) ** 2, axis=1)
        i = int(np.argmin(d2))
        res = minimize_scalar(
            lambda t: float(np.sum((curve.point(t)[0] - p) ** 2)),
            bounds=(theta[i] - step, theta[i] + step),
            method="bounded", options={"xatol": 1e-13})
        out[k] = math.sqrt(max(min(res.fun, float(d2[i])), 0.0))
    return out


def invariance_defect(matrix, curve, probes=256) -> float:
    """One-sided Hausdorff distance from the transformed curve samples
    to the curve."""
    pts = curve.sample(probes) @ np.asarray(matrix, dtype=float).T
    return float(np.max(_point_to_curve_distance(pts, curve)))


def require_invariant(action: MatrixAction, curve: KnotCurve, tol=1e-6):
    for name, m in action.generator_matrices():
        defect = invariance_defect(m, curve)
        if defect > tol:
            raise InvarianceError(
                f"curve moves by {defect:.3g} under {name}; not invariant "
                f"within {tol}"
            )


def _curve_meets_fixed_set(fs: FixedSet, curve: KnotCurve, tol=1e-6) -> bool:
    """Whether the curve passes through the fixed locus."""
    if fs.kind == "none":
        return False
    if fs.kind == "pair":
        v = fs.basis[:, 0]

        def fn(theta):
            pts = curve.point(theta)
            return np.minimum(np.linalg.norm(pts - v, axis=1),
                              np.linalg.norm(pts + v, axis=1))
    elif fs.kind == "circle":
        circ = fs.circle()

        def fn(theta):
            return circ.distance_to_points(curve.point(theta))
    else:  # sphere: distance along the -1 eigen-direction
        normal = np.linalg.svd(fs.basis)[0][:, 3]

        def fn(theta):
            return np.abs(curve.point(theta) @ normal)

    return _refine_curve_distance(curve, fn) < tol


# ---------------------------------------------------------------------------
# Detection of the symmetry type of an invariant curve
# ---------------------------------------------------------------------------

def _knot_action_shift(matrix, curve, probes=48):
    """How a matrix acts on the curve in parameter space.

    Returns ('shift', delta) when A K(theta) = K(theta + delta) or
    ('reflect', c) when A K(theta) = K(c - theta); raises otherwise.
    """
    theta = np.linspace(0.0, TWO_PI, probes, endpoint=False)
    pts = curve.point(theta) @ np.asarray(matrix, dtype=float).T
    coarse_t = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
    dense = curve.point(coarse_t)
    step = TWO_PI / 4096
    params = np.empty(probes)
    for k, p in enumerate(pts):
        i = int(np.argmin(np.sum((dense - p) ** 2, axis=1)))
        res = minimize_scalar(
            lambda t: float(np.sum((curve.point(t)[0] - p) ** 2)),
            bounds=(coarse_t[i] - step, coarse_t[i] + step),
            method="bounded", options={"xatol": 1e-13})
        params[k] = res.x % TWO_PI
    shift = np.mod(params - theta, TWO_PI)
    refl = np.mod(params + theta, TWO_PI)
    if _circ_spread(shift) < 1e-5:
        return "shift", _circ_mean(shift)
    if _circ_spread(refl) < 1e-5:
        return "reflect", _circ_mean(refl)
    raise InvarianceError("matrix does not act on the curve by reparametrization")


def _circ_spread(values):
    return float(1.0 - np.abs(np.mean(np.exp(1j * values))))


def _circ_mean(values):
    return float(np.angle(np.mean(np.exp(1j * values))) % TWO_PI)


@dataclass
class DetectionReport:
    type: SymmetryType
    measurements: dict


def _preferred_generator_power(action, curve):
    """The power i for which rho^i steps the knot by the smallest
    positive parameter shift; by convention that element is the
    preferred generator, acting on the knot by a +1/n turn."""
    n = action.group.n
    best_i, best_delta = None, np.inf
    for i in range(1, n):
        kind, val = _knot_action_shift(
            np.linalg.matrix_power(action.rho, i), curve)
        if kind != "shift":
            raise InvarianceError("a rotation generator reflects the curve")
        delta = val if val > 1e-9 else TWO_PI
        if delta < best_delta:
            best_i, best_delta = i, delta
    if abs(best_delta - TWO_PI / n) > 1e-5:
        raise InvarianceError(
            f"knot action is not free of order {n}: smallest step "
            f"{best_delta:.6f} != 2*pi/{n}"
        )
    return best_i


def _invariant_plane_pair(matrix):
    """Two orthogonal invariant 2-planes of a fixed-point-free rotation.

    The symmetric part (M + M^T)/2 acts as cos(angle) on each rotation
    plane, so its eigenspaces recover the planes; in the isoclinic case
    any vector spans an invariant plane with its image, and the
    orthogonal complement is the second plane.
    """
    m = np.asarray(matrix, dtype=float)
    sym = 0.5 * (m + m.T)
    vals, vecs = np.linalg.eigh(sym)
    if vals[-1] - vals[0] < 1e-9:  # isoclinic: every vector works
        v = np.array([1.0, 0, 0, 0])
        w = m @ v
        w = w - (w @ v) * v
        norm = np.linalg.norm(w)
        if norm < 1e-9:
            # the antipodal map: every plane is invariant
            eye = np.eye(4)
            return eye[:, :2], eye[:, 2:]
        p = np.column_stack([v, w / norm])
        q = np.linalg.svd(np.eye(4) - p @ p.T)[0][:, :2]
        return p, q
    if abs(vals[1] - vals[0]) > 1e-9 or abs(vals[3] - vals[2]) > 1e-9:
        raise ClassificationError("matrix is not a rotation of S^3")
    return vecs[:, :2], vecs[:, 2:]


def _circle_from_plane(basis):
    q = np.linalg.qr(basis)[0]
    return RoundCircle(q[:, 0], q[:, 1])


def _orient_pair_linking_one(x: RoundCircle, y: RoundCircle, samples):
    lk = gauss_linking(x.as_curve(), y.as_curve(), samples)
    if lk.value == 1:
        return x, y
    if lk.value == -1:
        return x, y.reversed()
    raise ClassificationError(
        f"invariant circles link {lk.value}; expected a Hopf pair"
    )


def _c2_label(matrix, curve, tol=1e-6):
    """Order-2 element label from its fixed set and knot incidence."""
    matrix = np.asarray(matrix, dtype=float)
    det = round(float(np.linalg.det(matrix)))
    fs = fixed_space(matrix)
    if fs.kind == "none":
        if det != 1:
            raise ClassificationError("orientation-reversing map without fixed points")
        return symtypes.F2P
    meets = _curve_meets_fixed_set(fs, curve, tol)
    if fs.kind == "pair":
        return symtypes.SNAC if meets else symtypes.SPAC
    if fs.kind == "circle":
        return symtypes.SI if meets else symtypes.TWOP
    # sphere
    if not meets:
        raise ClassificationError(
            "a reflection sphere that misses the knot admits no knot action"
        )
    return symtypes.TWOR


def _axis_disjoint(curve, circle, samples, what):
    sep = float(np.min(circle.distance_to_points(curve.sample(samples))))
    if sep < 1e-4:
        raise TransversalityError(
            f"curve passes within {sep:.2g} of the {what}; perturb the "
            "curve equivariantly and retry"
        )


def _detect_cyclic(action, curve, samples):
    """The three-branch algorithm for an invariant curve of a cyclic
    action: rotoreflection, rotation, or double rotation."""
    n = action.group.n
    i_star = _preferred_generator_power(action, curve)
    rho = np.linalg.matrix_power(action.rho, i_star)
    det = round(float(np.linalg.det(rho)))
    meas = {"preferred_power": i_star}

    if det < 0:
        # rotoreflection: the axis is the circle fixed by rho^2
        fs = fixed_space(np.linalg.matrix_power(rho, 2))
        if fs.kind != "circle":
            raise ClassificationError(
                f"rotoreflection square fixes a {fs.kind}, not a circle"
            )
        axis = fs.circle()
        _axis_disjoint(curve, axis, samples, "rotoreflection axis")
        lk = gauss_linking(curve, axis.as_curve(), samples)
        meas["axis_linking"] = lk.value
        a = sign_class(lk.value, n)
        return SymmetryType(symtypes.RREF, (a.value,), cyclic(n)), meas

    fs = fixed_space(rho)
    if fs.kind == "circle":
        axis = fs.circle()
        _axis_disjoint(curve, axis, samples, "rotation axis")
        lk = gauss_linking(curve, axis.as_curve(), samples)
        meas["axis_linking"] = lk.value
        a = sign_class(lk.value, n)
        return SymmetryType(symtypes.PER, (a.value,), cyclic(n)), meas
    if fs.kind != "none":
        raise ClassificationError(
            f"rotation generator fixes a {fs.kind}; no knot action does"
        )

    # double rotation: two invariant circles oriented to link once
    p, q = _invariant_plane_pair(rho)
    x, y = _orient_pair_linking_one(
        _circle_from_plane(p), _circle_from_plane(q), samples)
    _axis_disjoint(curve, x, samples, "first invariant circle")
    _axis_disjoint(curve, y, samples, "second invariant circle")
    a = gauss_linking(curve, x.as_curve(), samples).value % n
    b = gauss_linking(curve, y.as_curve(), samples).value % n
    meas["axis_linking"] = (a, b)
    if a == 0 or b == 0:
        raise ClassificationError(
            f"double rotation with axis linkings ({a}, {b}) mod {n}"
        )
    t = turn_pair(a, b, n)
    return SymmetryType(symtypes.FPER, t.values, cyclic(n)), meas


def detect_type(action: MatrixAction, curve: KnotCurve, samples=None,
                tol=1e-6) -> SymmetryType:
    return detect_report(action, curve, samples, tol).type


def detect_report(action: MatrixAction, curve: KnotCurve, samples=None,
                  tol=1e-6) -> DetectionReport:
    """Classify an invariant curve of a matrix action by observation.

    Verifies invariance, re-indexes the rotation generator so it steps
    the knot by a +1/n-turn, then measures linking numbers against the
    invariant axes; dihedral actions are dispatched on the labels of
    their two reflection classes first, since the composite-knot rows
    carry no free parameter.
    """
    if samples is None:
        samples = default_samples()
    require_invariant(action, curve, tol)
    n = action.group.n
    group = action.group

    if group.order == 2:
        tau = action.rho if group.is_cyclic else action.sigma
        label = _c2_label(tau, curve)
        return DetectionReport(SymmetryType(label), {"order": 2})

    if group.is_cyclic:
        t, meas = _detect_cyclic(action, curve, samples)
        return DetectionReport(t, meas)

    # dihedral
    i_star = _preferred_generator_power(
        MatrixAction(cyclic(n), action.rho), curve)
    rho = np.linalg.matrix_power(action.rho, i_star)
    sig_label = _c2_label(action.sigma, curve)
    rho_sig_label = _c2_label(rho @ action.sigma, curve)
    labels = frozenset((sig_label, rho_sig_label))
    meas = {"preferred_power": i_star,
            "reflection_labels": (sig_label, rho_sig_label)}

    if n == 2:
        # all parameters are forced at n = 2; the rotation's own order-2
        # label plus the reflection pair identify the table row
        rho_label = _c2_label(rho, curve)
        meas["rotation_label"] = rho_label
        row = {
            (symtypes.F2P, frozenset([symtypes.SI])): (symtypes.SIFP, (1, 1)),
            (symtypes.TWOP, frozenset([symtypes.SI])): (symtypes.SIP, (1,)),
            (symtypes.TWOP, frozenset([symtypes.SNAC])): (symtypes.SNAP, (1,)),
            (symtypes.SPAC, frozenset([symtypes.SI, symtypes.SNAC])):
                (symtypes.SNASI, (1,)),
            (symtypes.TWOP, frozenset([symtypes.TWOR])): (symtypes.DIHB, ()),
            (symtypes.SPAC, frozenset([symtypes.TWOR, symtypes.SI])):
                (symtypes.DIHD, ()),
            (symtypes.F2P, frozenset([symtypes.TWOR, symtypes.SNAC])):
                (symtypes.DIHF, ()),
        }
        hit = row.get((rho_label, labels))
        if hit is None:
            raise ClassificationError(
                f"rotation label {rho_label} with reflections "
                f"{sorted(labels)} matches no order-4 table row"
            )
        name, params = hit
        return DetectionReport(SymmetryType(name, params, dihedral(2)), meas)

    det = round(float(np.linalg.det(rho)))
    rho_fix = fixed_space(rho).kind
    if labels == frozenset([symtypes.TWOR]):
        name, params = symtypes.DIHB, ()
        ok = det == 1 and rho_fix == "circle"
    elif labels == frozenset([symtypes.TWOR, symtypes.SI]):
        name, params = symtypes.DIHD, ()
        ok = det == -1
    elif labels == frozenset([symtypes.TWOR, symtypes.SNAC]):
        name, params = symtypes.DIHF, ()
        ok = det == 1 and rho_fix == "none"
    else:
        cyc_type, cyc_meas = _detect_cyclic(
            MatrixAction(cyclic(n), action.rho), curve, samples)
        meas.update(cyc_meas)
        row = {
            (symtypes.FPER, frozenset([symtypes.SI])): symtypes.SIFP,
            (symtypes.PER, frozenset([symtypes.SI])): symtypes.SIP,
            (symtypes.PER, frozenset([symtypes.SNAC])): symtypes.SNAP,
            (symtypes.RREF, frozenset([symtypes.SI, symtypes.SNAC])):
                symtypes.SNASI,
        }
        name = row.get((cyc_type.name, labels))
        if name is None:
            raise ClassificationError(
                f"rotation type {cyc_type.name} with reflection labels "
                f"{sorted(labels)} matches no dihedral table row"
            )
        params, ok = cyc_type.params, True
    if not ok:
        raise ClassificationError(
            f"reflection labels {sorted(labels)} conflict with the "
            "rotation part's fixed set"
        )
    return DetectionReport(SymmetryType(name, params, dihedral(n)), meas)


# ---------------------------------------------------------------------------
# Linking congruence probe
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CongruenceReport:
    lk_a: int
    lk_b: int
    modulus: int

    @property
    def congruent(self):
        return (self.lk_a - self.lk_b) % self.modulus == 0


def _acts_freely_on(action, curve, tol=1e-6):
    pts = curve.sample(256)
    for g in action.elements():
        if g.is_identity:
            continue
        moved = pts @ action.matrix(g).T
        if np.min(np.linalg.norm(moved - pts, axis=1)) < tol:
            return False
    return True


def linking_congruence_probe(action: MatrixAction, c1: KnotCurve,
                             c2a: KnotCurve, c2b: KnotCurve,
                             samples=None) -> CongruenceReport:
    """Empirical check that two invariant curves equivariantly isotopic
    to each other link a freely-acted invariant curve congruently mod n.

    A falsification probe: it measures both linking numbers and reports
    whether they agree mod n.
    """
    if samples is None:
        samples = default_samples()
    for label, c in (("c1", c1), ("c2a", c2a), ("c2b", c2b)):
        for name, m in action.generator_matrices():
            defect = invariance_defect(m, c)
            if defect > 1e-6:
                raise InvarianceError(
                    f"{label} moves by {defect:.3g} under {name}"
                )
    if not _acts_freely_on(action, c1):
        raise ArgumentError("the action must be free on the first curve")
    lk_a = gauss_linking(c1, c2a, samples).value
    lk_b = gauss_linking(c1, c2b, samples).value
    return CongruenceReport(lk_a, lk_b, action.group.n)


# ---------------------------------------------------------------------------
# Standard invariant models for every type
# ---------------------------------------------------------------------------

def _coprime_lifts(n, a, b, a_min=1, b_min=1):
    """Small positive lifts (p, q) of (a, b) mod n with gcd(p, q) = 1."""
    for p in range(a if a >= a_min else a + n, 64 * n, n):
        for q in range(b if b >= b_min else b + n, 64 * n, n):
            if math.gcd(p, q) == 1:
                return p, q
    raise ArgumentError(f"no coprime lifts of ({a}, {b}) mod {n}")


def _winding_curve(p, slots, c):
    """A curve winding p times in the leading coordinate plane, with
    scalar slot functions amp * cos/sin(freq * (theta - c/2)).

    Each slot is (amplitude, frequency, parity) with parity 'even' or
    'odd' about the reflection-fixed parameter c/2.
    """

    def fn(theta):
        theta = np.atleast_1d(theta)
        u = theta - c / 2.0
        cols = [np.cos(p * theta), np.sin(p * theta)]
        for amp, freq, parity in slots:
            f = np.cos if parity == "even" else np.sin
            cols.append(amp * f(freq * u))
        return np.stack(cols, axis=-1)

    return KnotCurve(func=fn)


def _slot_spec(n, labels, c):
    """Slot functions for the 1-dimensional blocks of a representation:
    the rho-sign fixes the frequency class (multiples of n versus odd
    multiples of n/2); the sigma-sign fixes the parity about c/2."""
    from . import orthrep
    slots = []
    amps = (0.35, 0.22)
    base_used = {}
    for amp, lab in zip(amps, labels):
        rho_sign = -1 if lab.kind in (orthrep.SIGN, orthrep.INV) else 1
        sigma_sign = -1 if lab.kind in (orthrep.SIGMA, orthrep.INV) else 1
        if rho_sign == 1:
            freq = n * (1 + base_used.get("per", 0))
            base_used["per"] = base_used.get("per", 0) + 1
        else:
            freq = n // 2 + n * base_used.get("anti", 0)
            base_used["anti"] = base_used.get("anti", 0) + 1
        parity = "even" if sigma_sign == 1 else "odd"
        slots.append((amp, freq, parity))
    return slots


def standard_model(t: SymmetryType):
    """A standard matrix action and invariant embedded curve realizing
    the type; used by the detection round-trip suite and the demos."""
    name, group = t.name, t.group
    n = group.n

    if name in (symtypes.SNAC, symtypes.SI, symtypes.TWOR):
        parent_name = {symtypes.SNAC: symtypes.SNAP, symtypes.SI: symtypes.SIP,
                       symtypes.TWOR: symtypes.DIHB}[name]
        parent = SymmetryType(parent_name, () if parent_name == symtypes.DIHB
                              else (1,), dihedral(2))
        action, curve = standard_model(parent)
        # the order-2 subgroups generated by sigma (or rho*sigma for the
        # amphichiral case) inherit the curve
        mat = action.sigma if name != symtypes.SNAC else action.rho @ action.sigma
        return MatrixAction(dihedral(1), np.eye(4), mat), curve

    if name == symtypes.F2P:
        return torus_cyclic_action(1, 1, 2), _torus_curve(1, 1)
    if name == symtypes.TWOP:
        return torus_cyclic_action(1, 2, 2), _torus_curve(1, 2)
    if name == symtypes.SPAC:
        def fn(theta):
            theta = np.atleast_1d(theta)
            return np.stack([
                np.cos(theta), np.sin(theta),
                0.35 * np.cos(theta + 0.4),
                0.22 * np.cos(2 * theta + 1.1),
            ], axis=-1)

        rho = np.diag([-1.0, -1.0, -1.0, 1.0])
        return MatrixAction(cyclic(2), rho), KnotCurve(func=fn)

    r = representative_rep(t)

    if name == symtypes.PER or name == symtypes.SIP:
        a = t.params[0]
        p, q = _coprime_lifts(n, a, 0, b_min=2)
        curve = _torus_curve(p, q)
        if name == symtypes.PER:
            return torus_cyclic_action(p, q, n), curve
        return torus_dihedral_action(p, q, n), curve
    if name == symtypes.FPER or name == symtypes.SIFP:
        a, b = t.params
        p, q = _coprime_lifts(n, a, b)
        curve = _torus_curve(p, q)
        if name == symtypes.FPER:
            return torus_cyclic_action(p, q, n), curve
        return torus_dihedral_action(p, q, n), curve

    # remaining families: winding curves with scalar slots.  The lift of
    # the turn parameter must be odd: the two reflection-fixed
    # parameters land on antipodal fixed points exactly when p is odd.
    p = t.params[0] if t.params else 1
    if p % 2 == 0:
        p += n
    c = math.pi / p
    labels = [lab for lab in r.blocks[1:]]
    if name == symtypes.RREF:
        slots = [(0.35, n // 2, "even"), (0.22, n, "even")]
        # no reflection constrains the phases; shift the slots off the
        # symmetric position to keep the model generic
        def fn(theta):
            theta = np.atleast_1d(theta)
            return np.stack([
                np.cos(p * theta), np.sin(p * theta),
                0.35 * np.cos((n // 2) * theta + 0.4),
                0.22 * np.cos(n * theta + 1.1),
            ], axis=-1)

        curve = KnotCurve(func=fn)
        return MatrixAction.from_representation(r), curve

    slots = _slot_spec(n, labels, c)
    curve = _winding_curve(p, slots, c)
    return MatrixAction.from_representation(r), curve
