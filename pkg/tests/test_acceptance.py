"""Acceptance suite: one test per criterion, each printing a pass/fail
line with its runtime.  Run with `pytest tests/test_acceptance.py -v -s`.
"""

import math
import time

import numpy as np
import pytest

from knotsym import orthrep as orep, symtypes as st
from knotsym.circlemaps import (
    CircleMapLift, cyclic_conjugator, dihedral_conjugator, rotation_number,
    semiconjugacy_check,
)
from knotsym.errors import NotAKnotAction
from knotsym.geometry import (
    circle_xy, circle_zw, detect_type, gauss_linking, standard_model,
    torus_knot,
)
from knotsym.orthrep import (
    GroupElement, enumerate_cyclic_o4, enumerate_dihedral_o4, evaluate,
    is_chiral, so4_conjugate,
)
from knotsym.symtypes import SymmetryType, admissible_types, classify
from knotsym.zmod import cyclic, dihedral, enumerate_turn_pairs, \
    unit_sign_classes

from fractions import Fraction


def report(number, label, started, budget):
    elapsed = time.time() - started
    line = f"ACCEPTANCE {number} ({label}): PASS in {elapsed:.2f}s"
    print("\n" + line)
    assert elapsed < budget, f"criterion {number} exceeded {budget}s budget"


# Frozen table data: (name, quantification, parity, prime, good diagram).
C2_ROWS = {
    "F2P": ((-1, -1), True, False),
    "SPAc": ((-1, 0), True, True),
    "2P": ((-1, 1), True, True),
    "SNAc": ((0, 0), True, True),
    "SI": ((0, 1), True, True),
    "2R": ((0, 2), False, True),
}

CYCLIC_ROWS = {
    # name -> (parameter kind, needs even n, prime, good diagram, order-2)
    "FPer": ("pairs", False, True, False, "F2P"),
    "Per": ("units", False, True, True, "2P"),
    "RRef": ("units", True, True, True, "SPAc"),
}

DIHEDRAL_ROWS = {
    # name -> (parameter kind, needs even n, rho, sigma, rho sigma,
    #          prime, good diagram, order-2)
    "SIFP": ("pairs", False, "FPer", "SI", "SI", True, False, "SI"),
    "SIP": ("units", False, "Per", "SI", "SI", True, True, "SI"),
    "SNAP": ("units", False, "Per", "SNAc", "SNAc", True, False, "SNAc"),
    "SNASI": ("units", True, "RRef", "SI", "SNAc", True, False, None),
    "DihB": ("unique", False, "Per", "2R", "2R", False, True, "2R"),
    "DihD": ("unique", True, "RRef", "2R", "SI", False, True, None),
    "DihF": ("unique", True, "FPer", "2R", "SNAc", False, False, None),
}


def test_criterion_1_table_reproduction():
    started = time.time()
    # order 2: exactly six rows with the stated fixed dimensions and flags
    c2 = admissible_types(cyclic(2))
    assert [t.name for t in c2] == list(C2_ROWS)
    for t in c2:
        dims, prime, good = C2_ROWS[t.name]
        assert t.fixed_dims() == dims
        assert t.prime_admissible == prime
        assert t.good_diagram == good

    for n in range(3, 13):
        types = admissible_types(cyclic(n))
        by_name = {}
        for t in types:
            by_name.setdefault(t.name, []).append(t)
        expected_names = {"Per", "FPer"} | ({"RRef"} if n % 2 == 0 else set())
        assert set(by_name) == expected_names
        for name, rows in by_name.items():
            kind, even, prime, good, order2 = CYCLIC_ROWS[name]
            count = len(enumerate_turn_pairs(n)) if kind == "pairs" \
                else len(unit_sign_classes(n))
            assert len(rows) == count, (n, name)
            for t in rows:
                assert t.prime_admissible == prime
                assert t.good_diagram == good
                assert t.order2_name() == order2

    for n in range(2, 13):
        types = admissible_types(dihedral(n))
        by_name = {}
        for t in types:
            by_name.setdefault(t.name, []).append(t)
        expected = {"SIFP", "SIP", "SNAP", "DihB"}
        if n % 2 == 0:
            expected |= {"SNASI", "DihD", "DihF"}
        assert set(by_name) == expected
        for name, rows in by_name.items():
            kind, even, rho, sig, rho_sig, prime, good, order2 = \
                DIHEDRAL_ROWS[name]
            if kind == "pairs":
                assert len(rows) == len(enumerate_turn_pairs(n))
            elif kind == "units":
                assert len(rows) == len(unit_sign_classes(n))
            else:
                assert len(rows) == 1
            for t in rows:
                assert t.rho_action_name() == rho
                assert t.reflection_action_names() == (sig, rho_sig)
                assert t.prime_admissible == prime
                assert t.good_diagram == good
                assert t.order2_name() == order2
    report(1, "table reproduction", started, 1.0)


def test_criterion_2_elimination_correctness():
    started = time.time()
    eliminated = {
        "CycC": "fixed-sphere-meets-knot",
        "DihG": "fixed-sphere-meets-knot",
        "DihH": "fixed-sphere-meets-knot",
        "DihI": "snac-fixed-points-conflict",
        "DihJ": "fixed-set-nesting",
        "DihK": "fixed-set-nesting",
        "DihL": "fixed-set-nesting",
    }
    for n in range(3, 13):
        for r, family in enumerate_cyclic_o4(n):
            if family in eliminated:
                with pytest.raises(NotAKnotAction) as exc:
                    classify(r)
                assert exc.value.family == family
                assert exc.value.rule == eliminated[family]
            else:
                classify(r)  # must not raise
    for n in range(2, 13):
        for r, family in enumerate_dihedral_o4(n):
            if family in eliminated:
                with pytest.raises(NotAKnotAction) as exc:
                    classify(r)
                assert exc.value.family == family
                assert exc.value.rule == eliminated[family]
            elif family in ("DihB", "DihD", "DihF"):
                # admissible exactly when the turn parameter is 1
                a = min(r.blocks[0].a % n, (-r.blocks[0].a) % n)
                if a == 1:
                    classify(r)
                else:
                    with pytest.raises(NotAKnotAction) as exc:
                        classify(r)
                    assert exc.value.rule == "axis-linking-must-be-one"
            else:
                classify(r)
    # the D_2 boundary: the turn-parameter-0 shapes of DihG/DihH/DihI
    # are faithful there and are eliminated by the same obstructions,
    # leaving the seven admissible rows unchanged
    n2 = {fam for _, fam in enumerate_dihedral_o4(2)}
    assert {"DihG", "DihH", "DihI"} <= n2
    print("\nnote: at n=2, DihG/DihH/DihI occur with turn parameter 0, are "
          "faithful, and are rejected by the stated obstructions")
    report(2, "elimination correctness", started, 1.0)


def test_criterion_3_chirality_and_so4_rules():
    started = time.time()
    # symbolic side: every parameter pair, n <= 12, including the
    # non-faithful ones -- both rules are statements about arbitrary
    # rotation pairs
    for n in range(3, 13):
        special = {0, n // 2} if n % 2 == 0 else {0}
        pairs = [(a, b) for a in range(n) for b in range(n)]
        reps = {p: orep.cyclic_pair_rep(n, *p) for p in pairs}
        for (a, b), r in reps.items():
            assert is_chiral(r) == (not ({a, b} & special))
        for (a1, b1), r1 in reps.items():
            for (a2, b2), r2 in reps.items():
                rule = {a1, b1} == {a2, b2} or \
                    {a1, b1} == {(-a2) % n, (-b2) % n}
                assert so4_conjugate(r1, r2) == rule, (n, a1, b1, a2, b2)

    # sampled search over SO(4): no sampled conjugator may link a pair
    # the symbolic rule declares non-conjugate
    rng = np.random.default_rng(6021023)
    gs = rng.normal(size=(10_000, 4, 4))
    qs, _ = np.linalg.qr(gs)
    dets = np.linalg.det(qs)
    qs[dets < 0, :, 0] *= -1.0  # force into SO(4)
    for n in (3, 4, 5):
        reps = [r for r, _ in enumerate_cyclic_o4(n)]
        reps += [orep.mirror_conjugate(r) for r in reps]
        mats = [evaluate(r, GroupElement(cyclic(n), 1)) for r in reps]
        for i, r1 in enumerate(reps):
            for j, r2 in enumerate(reps):
                if so4_conjugate(r1, r2):
                    continue
                conj = np.einsum("kab,bc,kdc->kad", qs, mats[i], qs)
                dist = np.max(np.abs(conj - mats[j][None]), axis=(1, 2))
                assert float(dist.min()) > 1e-3, (r1.text(), r2.text())
    report(3, "chirality and SO(4) conjugacy", started, 60.0)


def test_criterion_4_linking_numerics():
    started = time.time()
    hopf = gauss_linking(circle_xy(), circle_zw(), 1024)
    assert hopf.value == 1 and hopf.residual < 0.05
    for p in range(2, 8):
        for q in range(p + 1, 8):
            if math.gcd(p, q) != 1:
                continue
            t = torus_knot(p, q)
            with_zw = gauss_linking(t, circle_zw(), 1024)
            with_xy = gauss_linking(t, circle_xy(), 1024)
            assert with_zw.value == p and with_zw.residual < 0.05
            assert with_xy.value == q and with_xy.residual < 0.05
    # the worked example: the (2,5) torus knot links its 5-fold axis twice
    assert gauss_linking(torus_knot(2, 5), circle_zw(), 1024).value == 2
    report(4, "linking numerics", started, 30.0)


def test_criterion_5_detection_round_trip():
    started = time.time()
    for n in range(2, 9):
        for t in admissible_types(cyclic(n)):
            action, curve = standard_model(t)
            got = detect_type(action, curve, samples=768)
            assert got == t, f"expected {t}, detected {got}"
    report(5, "detection round trip", started, 120.0)


def test_criterion_6_restriction_tables():
    started = time.time()
    from restriction_oracle import (
        expected_cyclic_restriction, expected_dihedral_restriction,
        C2_OF_CYCLIC, C2_OF_DIHEDRAL,
    )
    for n in range(3, 13):
        for t in admissible_types(cyclic(n)):
            for d in [d for d in range(1, n) if n % d == 0 and n // d >= 2]:
                got = st.restrict_cyclic(t, d)
                name, params = expected_cyclic_restriction(t, n, d)
                m = n // d
                if m == 2:
                    assert got.name == C2_OF_CYCLIC[name]
                else:
                    assert got == SymmetryType(name, params, cyclic(m))
    for n in range(2, 13):
        for t in admissible_types(dihedral(n)):
            if t.is_order2:
                continue
            for d in [d for d in range(1, n + 1) if n % d == 0]:
                for r in range(d):
                    got = st.restrict_dihedral(t, d, r)
                    name, params = expected_dihedral_restriction(t, n, d, r)
                    m = n // d
                    if m == 1:
                        assert got.name == C2_OF_DIHEDRAL[name]
                    else:
                        assert got == SymmetryType(name, params, dihedral(m))
    # transitivity on cyclic restrictions
    for n in range(3, 25):
        for t in admissible_types(cyclic(n)):
            if t.is_order2:
                continue
            for d in [d for d in range(2, n) if n % d == 0]:
                m = n // d
                for e in range(2, m):
                    if m % e != 0 or m // e < 2:
                        continue
                    assert st.restrict_cyclic(st.restrict_cyclic(t, d), e) \
                        == st.restrict_cyclic(t, d * e)
    report(6, "restriction tables", started, 5.0)


def _random_diffeo(rng, strength=0.1, modes=4):
    ks = np.arange(1, modes + 1)
    amps = strength * rng.uniform(-1, 1, modes) / (2 * np.pi * ks)
    phases = rng.uniform(0, 2 * np.pi, modes)

    def f(x):
        return x + sum(a * np.sin(2 * np.pi * k * x + ph)
                       for a, k, ph in zip(amps, ks, phases))

    return CircleMapLift.from_function(f, 1)


def test_criterion_7_appendix_numerics():
    started = time.time()
    rng = np.random.default_rng(7071)

    # 50 randomized smoothly conjugated finite-order reductions
    for case in range(25):
        n = int(rng.integers(2, 9))
        phi = _random_diffeo(rng)
        phi_inv = phi.inverse()
        g = phi.after(CircleMapLift.rotation(1 / n)).after(phi_inv)
        h = cyclic_conjugator(g, n)
        dev = h.after(g).after(h.inverse()).max_deviation_from(
            CircleMapLift.rotation(1 / n))
        assert dev < 1e-6, (case, n, dev)
    for case in range(25):
        n = int(rng.integers(2, 7))
        phi = _random_diffeo(rng)
        phi_inv = phi.inverse()
        g = phi.after(CircleMapLift.rotation(1 / n)).after(phi_inv)
        s = phi.after(CircleMapLift.reflection()).after(phi_inv)
        h = dihedral_conjugator(g, s, n)
        dev_g = h.after(g).after(h.inverse()).max_deviation_from(
            CircleMapLift.rotation(1 / n))
        dev_s = h.after(s).after(h.inverse()).max_deviation_from(
            CircleMapLift.reflection())
        assert dev_g < 1e-6 and dev_s < 1e-6, (case, n, dev_g, dev_s)

    # rotation numbers of conjugated rotations snap exactly, n <= 16
    for n in range(2, 17):
        for a in range(1, n):
            if math.gcd(a, n) != 1:
                continue
            phi = _random_diffeo(rng)
            g = phi.after(CircleMapLift.rotation(a / n)).after(phi.inverse())
            r = rotation_number(g, 4096)
            assert r.snapped == Fraction(a, n), (a, n, r.value)

    # 100 random semiconjugacy checks
    for case in range(100):
        n = int(rng.integers(2, 10))
        a = int(rng.integers(1, n))
        f = CircleMapLift.rotation(a / n)
        h = _random_diffeo(rng)
        if case % 2:
            h = h.after(CircleMapLift.reflection())
        g = h.after(f).after(h.inverse())
        rep = semiconjugacy_check(f, g, h)
        assert rep.holds, (case, n, a, rep)
    report(7, "circle-map numerics", started, 60.0)


def test_criterion_8_snasi_combinatorics():
    started = time.time()
    from knotsym.constructions import snasi_single_component, \
        snasi_strand_cycle
    for n in range(2, 21, 2):
        for a in range(1, n, 2):
            if math.gcd(a, n) == 1:
                assert snasi_single_component(n, a), (n, a)
    assert snasi_strand_cycle(3).cycle_string() == "(1,3,2)"
    report(8, "single-component combinatorics", started, 1.0)


def test_criterion_9_free_vs_amphichiral_exclusion():
    started = time.time()
    for n in range(3, 25):
        assert st.free_amphichiral_violations(cyclic(n)) == []
    for n in range(2, 25):
        assert st.free_amphichiral_violations(dihedral(n)) == []
        # the lone composite-knot exception is DihF, which mixes a free
        # double rotation with reflections; it is excluded from prime
        # knots, matching the exclusion's scope
        mixers = {t.name for t in admissible_types(dihedral(n))
                  if st.mixes_free_and_amphichiral(t)}
        assert mixers == ({"DihF"} if n % 2 == 0 else set())
    report(9, "free/amphichiral exclusion", started, 1.0)
