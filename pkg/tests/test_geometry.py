import math

import numpy as np
import pytest

from knotsym import geometry as geo, symtypes as st
from knotsym.errors import (
    ArgumentError, InvarianceError, ProximityError, TransversalityError,
)
from knotsym.geometry import (
    KnotCurve, MatrixAction, RoundCircle, circle_xy, circle_zw, detect_report,
    detect_type, fixed_axis, gauss_linking, invariance_defect,
    linking_congruence_probe, standard_model, torus_action,
    torus_cyclic_action, torus_dihedral_action, torus_knot,
)
from knotsym.orthrep import GroupElement, rep, rotation2, w_one, \
    w_rot, w_sign
from knotsym.symtypes import admissible_types
from knotsym.zmod import cyclic, dihedral


class TestKnotCurve:
    def test_torus_knot_on_sphere(self):
        t = torus_knot(2, 3)
        pts = t.sample(512)
        assert np.max(np.abs(np.linalg.norm(pts, axis=1) - 1)) < 1e-9

    def test_torus_knot_requires_coprime(self):
        with pytest.raises(ArgumentError):
            torus_knot(2, 4)
        with pytest.raises(ArgumentError):
            torus_knot(1, 3)

    def test_sampled_curve_interpolates(self):
        pts = torus_knot(2, 3).sample(2048)
        sampled = KnotCurve.from_samples(pts)
        theta = np.linspace(0, 2 * math.pi, 333)
        exact = torus_knot(2, 3).point(theta)
        assert np.max(np.linalg.norm(sampled.point(theta) - exact, axis=1)) < 1e-8

    def test_min_sample_count(self):
        with pytest.raises(ArgumentError):
            KnotCurve.from_samples(torus_knot(2, 3).sample(100))

    def test_rejects_nonembedded(self):
        def fn(theta):
            theta = np.atleast_1d(theta)
            return np.stack([np.cos(2 * theta), np.sin(2 * theta),
                             np.zeros_like(theta), np.zeros_like(theta)],
                            axis=-1)

        with pytest.raises(ArgumentError):
            KnotCurve(func=fn)  # doubly covered circle

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "curve.txt"
        torus_knot(2, 5).save(path, count=1024)
        loaded = KnotCurve.load(path)
        theta = np.linspace(0, 2 * math.pi, 200)
        assert np.max(np.linalg.norm(
            loaded.point(theta) - torus_knot(2, 5).point(theta), axis=1)) < 1e-6

    def test_bad_header(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("nonsense 1 2\n")
        with pytest.raises(ArgumentError):
            KnotCurve.load(path)


class TestMatrixAction:
    def test_relations_checked(self):
        with pytest.raises(ArgumentError):
            MatrixAction(cyclic(3), rotation2_block(math.pi))  # order 2, not 3

    def test_faithfulness_checked(self):
        with pytest.raises(ArgumentError):
            MatrixAction(cyclic(4), rotation2_block(math.pi))  # rho^2 = I

    def test_file_round_trip(self, tmp_path):
        action = torus_dihedral_action(2, 5, 5)
        path = tmp_path / "action.txt"
        action.save(path)
        loaded = MatrixAction.load(path)
        assert loaded.group == dihedral(5)
        assert np.allclose(loaded.rho, action.rho, atol=1e-12)
        assert np.allclose(loaded.sigma, action.sigma, atol=1e-12)


def rotation2_block(angle):
    out = np.eye(4)
    out[:2, :2] = rotation2(angle)
    return out


class TestTorusAction:
    @pytest.mark.parametrize("pq", [(2, 3), (2, 5), (3, 4), (4, 7)])
    def test_equivariance_rotations(self, pq):
        p, q = pq
        assert equivariance_residual(p, q, rotation2(2 * math.pi / 7)) < 1e-9

    @pytest.mark.parametrize("pq", [(2, 3), (2, 5), (3, 4)])
    def test_equivariance_reflections(self, pq):
        p, q = pq
        refl = np.array([[-1.0, 0.0], [0.0, 1.0]])
        assert equivariance_residual(p, q, refl) < 1e-9
        assert equivariance_residual(p, q, rotation2(0.7) @ refl) < 1e-9

    def test_identity(self):
        assert np.allclose(torus_action(2, 3, np.eye(2)), np.eye(4))

    def test_rejects_nonorthogonal(self):
        with pytest.raises(ArgumentError):
            torus_action(2, 3, np.array([[1.0, 1.0], [0.0, 1.0]]))


def equivariance_residual(p, q, m, samples=1024):
    curve = torus_knot(p, q)
    a = torus_action(p, q, m)
    theta = np.linspace(0, 2 * math.pi, samples, endpoint=False)
    z = np.exp(1j * theta)
    c = complex(m[0, 0], m[1, 0])
    moved = c * z if np.linalg.det(m) > 0 else c * np.conj(z)
    lhs = curve.point(theta) @ a.T
    rhs = curve.point(np.angle(moved))
    return float(np.max(np.abs(lhs - rhs)))


class TestGaussLinking:
    def test_hopf_pair(self):
        residuals = []
        for samples in (256, 512, 1024):
            result = gauss_linking(circle_xy(), circle_zw(), samples)
            assert result.value == 1
            residuals.append(result.residual)
        for r in residuals:
            assert r < 0.05
        # the polygonal integral is exact, so residuals stay at roundoff
        assert residuals[2] <= residuals[0] + 1e-9

    def test_symmetry_and_antisymmetry(self):
        a, b = torus_knot(2, 3), circle_zw().as_curve()
        lk = gauss_linking(a, b, 512).value
        assert gauss_linking(b, a, 512).value == lk
        assert gauss_linking(a.reversed(), b, 512).value == -lk
        assert gauss_linking(a, b.reversed(), 512).value == -lk

    @pytest.mark.parametrize("pq", [(2, 3), (3, 5), (4, 7)])
    def test_torus_knot_linkings(self, pq):
        p, q = pq
        t = torus_knot(p, q)
        assert gauss_linking(t, circle_zw(), 1024).value == p
        assert gauss_linking(t, circle_xy(), 1024).value == q

    def test_unlinked_small_circles(self):
        c1 = small_circle([0, 0, 1, 0], [1, 0, 0, 0], [0, 0, 0, 1], 0.3)
        c2 = small_circle([0, 0, -1, 0], [1, 0, 0, 0], [0, 0, 0, 1], 0.3)
        assert gauss_linking(c1, c2, 512).value == 0

    def test_proximity_error(self):
        c1 = circle_xy().as_curve()
        near = RoundCircle(
            np.array([1.0, 0, 0, 0]),
            unit([0.0, 0.9999999, 0, 0.00045]),
        ).as_curve()
        with pytest.raises(ProximityError):
            gauss_linking(c1, near, 64)

    def test_samples_env_override(self, monkeypatch):
        monkeypatch.setenv(geo.SAMPLES_ENV, "256")
        assert gauss_linking(circle_xy(), circle_zw()).samples == 256
        monkeypatch.setenv(geo.SAMPLES_ENV, "bogus")
        with pytest.raises(ArgumentError):
            geo.default_samples()


def unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


def small_circle(center, u, v, r):
    center = unit(center)
    u, v = np.asarray(u, float), np.asarray(v, float)

    def fn(theta):
        theta = np.atleast_1d(theta)
        return (math.sqrt(1 - r * r) * center[None, :]
                + r * np.cos(theta)[:, None] * u
                + r * np.sin(theta)[:, None] * v)

    return KnotCurve(func=fn, validate=False)


class TestFixedSets:
    def test_rotation_axis(self):
        action = MatrixAction.from_representation(
            rep(cyclic(5), w_rot(1), w_rot(0)))
        fs = fixed_axis(action, GroupElement(cyclic(5), 1))
        assert fs.kind == "circle"
        circ = fs.circle()
        span = np.abs(np.column_stack([circ.u, circ.v])[:2])
        assert np.max(span) < 1e-9  # the zw-coordinate plane

    def test_double_rotation_has_no_fixed_points(self):
        action = MatrixAction.from_representation(
            rep(cyclic(5), w_rot(1), w_rot(1)))
        assert fixed_axis(action, GroupElement(cyclic(5), 1)).kind == "none"

    def test_rotoreflection_fixed_pair(self):
        action = MatrixAction.from_representation(
            rep(cyclic(4), w_rot(1), w_sign(), w_one()))
        fs = fixed_axis(action, GroupElement(cyclic(4), 1))
        assert fs.kind == "pair"
        pts = fs.points()
        assert np.max(np.abs(np.abs(pts[:, 3]) - 1)) < 1e-9

    def test_identity_rejected(self):
        action = torus_cyclic_action(2, 5, 5)
        with pytest.raises(ArgumentError):
            fixed_axis(action, GroupElement(cyclic(5), 0))


class TestInvariance:
    def test_invariant_curve_defect_small(self):
        action = torus_cyclic_action(2, 5, 5)
        assert invariance_defect(action.rho, torus_knot(2, 5)) < 1e-7

    def test_noninvariant_detected(self):
        action = torus_cyclic_action(2, 5, 5)
        assert invariance_defect(action.rho, torus_knot(2, 3)) > 1e-3
        with pytest.raises(InvarianceError):
            detect_type(action, torus_knot(2, 3))


class TestDetection:
    def test_torus_knot_cyclic_detection(self):
        got = detect_type(torus_cyclic_action(2, 5, 5), torus_knot(2, 5),
                          samples=768)
        assert str(got) == "Per(2)/C5"

    def test_torus_knot_fper_detection(self):
        got = detect_type(torus_cyclic_action(2, 3, 5), torus_knot(2, 3),
                          samples=768)
        assert str(got) == "FPer(2,3)/C5"

    def test_hopf_translate_detection(self):
        # an invariant round circle of a rotation detects as Per(1)
        action = MatrixAction.from_representation(
            rep(cyclic(5), w_rot(1), w_rot(0)))
        circ = RoundCircle(unit([0.9, 0, 0.1, 0.2]), unit_perp(
            [0.9, 0, 0.1, 0.2], [0, 1.0, 0, 0]))
        # that circle is not invariant; use a true invariant one instead
        curve = shifted_hopf_fiber(0.8)
        got = detect_type(action, curve, samples=768)
        assert str(got) == "Per(1)/C5"

    def test_generator_reindexing(self):
        # handing the algorithm rho^2 as the generator must not change
        # the detected type
        base = torus_cyclic_action(2, 5, 5)
        power = MatrixAction(cyclic(5), np.linalg.matrix_power(base.rho, 2))
        got = detect_type(power, torus_knot(2, 5), samples=768)
        assert str(got) == "Per(2)/C5"

    def test_dihedral_torus_detection(self):
        got = detect_type(torus_dihedral_action(2, 5, 5), torus_knot(2, 5),
                          samples=768)
        assert str(got) == "SIP(2)/D5"
        got = detect_type(torus_dihedral_action(3, 4, 12), torus_knot(3, 4),
                          samples=768)
        assert str(got) == "SIFP(3,4)/D12"

    def test_axis_transversality_error(self):
        # the first invariant circle itself is a legal invariant curve of
        # a double rotation, but it touches the measuring axis
        action = MatrixAction.from_representation(
            rep(cyclic(5), w_rot(1), w_rot(2)))
        with pytest.raises(TransversalityError):
            detect_type(action, circle_xy().as_curve(), samples=512)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_standard_models_cyclic(self, n):
        for t in admissible_types(cyclic(n)):
            action, curve = standard_model(t)
            got = detect_type(action, curve, samples=640)
            assert str(got) == str(t)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_standard_models_dihedral(self, n):
        for t in admissible_types(dihedral(n)):
            action, curve = standard_model(t)
            got = detect_type(action, curve, samples=640)
            assert str(got) == str(t)

    def test_measurement_report(self):
        report = detect_report(torus_cyclic_action(2, 5, 5), torus_knot(2, 5),
                               samples=768)
        assert report.type.name == "Per"
        assert abs(report.measurements["axis_linking"]) == 2

    @pytest.mark.parametrize("text", ["RRef(3)/C8", "SNASI(1)/D6",
                                      "FPer(2,3)/C7"])
    def test_detection_survives_file_round_trip(self, text, tmp_path):
        # saving at 2048 samples and re-loading through the spline must
        # not disturb the detected type
        from knotsym.symtypes import type_from_string
        t = type_from_string(text)
        action, curve = standard_model(t)
        path = tmp_path / "curve.txt"
        curve.save(path, count=2048)
        got = detect_type(action, KnotCurve.load(path), samples=640)
        assert got == t


def unit_perp(v, w):
    v, w = unit(v), np.asarray(w, float)
    w = w - (w @ v) * v
    return unit(w)


def shifted_hopf_fiber(radius):
    """An invariant circle of the rotation w[1]+w[0], away from the axis."""
    s = math.sqrt(1 - radius * radius)

    def fn(theta):
        theta = np.atleast_1d(theta)
        return np.stack([
            radius * np.cos(theta), radius * np.sin(theta),
            s * np.ones_like(theta), np.zeros_like(theta),
        ], axis=-1)

    return KnotCurve(func=fn)


class TestCongruenceProbe:
    def test_isoclinic_family_congruence(self):
        # an isoclinic rotation: the coordinate circle and a quaternion
        # translate of it are both invariant; linkings with a free
        # invariant curve agree mod n
        n = 3
        action = MatrixAction.from_representation(
            rep(cyclic(n), w_rot(1), w_rot(1)))
        c1 = circle_xy().as_curve()
        c2a = circle_zw().as_curve()
        t = unit([1.0, 0, 1.0, 0])
        it = unit([0.0, 1.0, 0, 1.0])
        c2b = RoundCircle(t, it).as_curve()
        report = linking_congruence_probe(action, c1, c2a, c2b, samples=512)
        assert report.congruent

    def test_equal_curves_trivially_congruent(self):
        n = 3
        action = MatrixAction.from_representation(
            rep(cyclic(n), w_rot(1), w_rot(1)))
        c1 = circle_xy().as_curve()
        c2 = circle_zw().as_curve()
        report = linking_congruence_probe(action, c1, c2, c2, samples=512)
        assert report.lk_a == report.lk_b
        assert report.congruent

    def test_noninvariant_rejected(self):
        action = MatrixAction.from_representation(
            rep(cyclic(5), w_rot(1), w_rot(2)))
        c1 = circle_xy().as_curve()
        c2a = circle_zw().as_curve()
        generic = RoundCircle(unit([0.6, 0.4, 0.3, 0.1]),
                              unit_perp([0.6, 0.4, 0.3, 0.1], [0, 0, 1, 0.2]))
        with pytest.raises(InvarianceError):
            linking_congruence_probe(action, c1, c2a, generic.as_curve(),
                                     samples=512)
