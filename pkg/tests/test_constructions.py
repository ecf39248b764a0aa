import math

import numpy as np
import pytest

from knotsym import geometry as geo
from knotsym.constructions import (
    BraceletSpec, Permutation, bracelet_type, realize_parameters,
    snasi_axis_linking, snasi_declared_type, snasi_single_component,
    snasi_strand_cycle, snasi_tangle_permutations, torus_symmetry_structure,
)
from knotsym.errors import ArgumentError
from knotsym.symtypes import SymmetryType
from knotsym.zmod import dihedral


class TestPermutation:
    def test_bijectivity_enforced(self):
        with pytest.raises(ArgumentError):
            Permutation([1, 1, 3])

    def test_composition_left_to_right(self):
        a = Permutation([2, 1, 3])
        b = Permutation([1, 3, 2])
        assert a.then(b).images == (3, 1, 2)

    def test_orbits(self):
        p = Permutation([3, 1, 2, 4])
        assert p.orbits() == [(1, 3, 2), (4,)]
        assert not p.is_single_cycle()
        assert Permutation([2, 3, 1]).is_single_cycle()

    def test_power(self):
        p = Permutation([2, 3, 1])
        assert p.power(3).images == (1, 2, 3)


class TestTanglePermutations:
    def test_three_strands(self):
        tprime, mirror = snasi_tangle_permutations(3)
        assert tprime.cycle_string() == "(1,2)"
        assert mirror.cycle_string() == "(2,3)"

    def test_five_strands(self):
        tprime, mirror = snasi_tangle_permutations(5)
        assert tprime.cycle_string() == "(1,4)(2,3)"
        assert mirror.cycle_string() == "(2,5)(3,4)"

    def test_one_strand(self):
        tprime, mirror = snasi_tangle_permutations(1)
        assert tprime.images == (1,)
        assert mirror.images == (1,)

    def test_even_rejected(self):
        with pytest.raises(ArgumentError):
            snasi_tangle_permutations(4)

    @pytest.mark.parametrize("a", [3, 5, 7, 9, 11, 13])
    def test_both_are_involutions(self, a):
        for p in snasi_tangle_permutations(a):
            assert p.then(p).images == Permutation.identity(a).images

    @pytest.mark.parametrize("a", [3, 5, 7, 9, 11, 13, 15])
    def test_composite_is_the_interleaved_cycle(self, a):
        # 1 -> 3 -> 5 ... -> a -> 2 -> 4 ... -> a-1 -> 1
        cycle = snasi_strand_cycle(a)
        expected = list(range(1, a + 1, 2)) + list(range(2, a, 2))
        walk, x = [1], cycle(1)
        while x != 1:
            walk.append(x)
            x = cycle(x)
        assert walk == expected

    def test_composite_at_three(self):
        assert snasi_strand_cycle(3).cycle_string() == "(1,3,2)"


class TestSingleComponent:
    def test_trivial_strand(self):
        assert snasi_single_component(6, 1)

    def test_known_knot_cases(self):
        assert snasi_single_component(8, 3)
        assert snasi_single_component(4, 3)

    @pytest.mark.parametrize("n", range(2, 21, 2))
    def test_full_sweep(self, n):
        for a in range(1, n, 2):
            if math.gcd(a, n) == 1:
                assert snasi_single_component(n, a), (n, a)

    def test_gcd_precondition(self):
        with pytest.raises(ArgumentError):
            snasi_single_component(6, 3)

    def test_parity_preconditions(self):
        with pytest.raises(ArgumentError):
            snasi_single_component(5, 1)
        with pytest.raises(ArgumentError):
            snasi_single_component(8, 2)

    @pytest.mark.parametrize("a", [3, 5, 7, 9, 15])
    def test_cycle_power_criterion(self, a):
        # the strand cycle is an a-cycle; its n-th power is a single
        # a-cycle exactly when gcd(a, n) = 1
        cycle = snasi_strand_cycle(a)
        assert cycle.is_single_cycle()
        for n in range(1, 21):
            assert cycle.power(n).is_single_cycle() == (math.gcd(a, n) == 1)


class TestDeclaredTypes:
    def test_examples(self):
        assert str(snasi_declared_type(6, 1)) == "SNASI(1)/D6"
        assert str(snasi_declared_type(8, 3)) == "SNASI(3)/D8"
        assert str(snasi_declared_type(8, 1)) == "SNASI(1)/D8"

    def test_axis_linking_claim(self):
        assert snasi_axis_linking(8, 3) == 3
        assert snasi_axis_linking(6, 1) == 1


class TestTorusStructures:
    def test_nonzero_reductions(self):
        assert str(torus_symmetry_structure(2, 3, 4)) == \
            str(SymmetryType("SIFP", (2, 3), dihedral(4)))

    def test_vanishing_reduction(self):
        assert str(torus_symmetry_structure(2, 5, 5)) == "SIP(2)/D5"
        assert str(torus_symmetry_structure(3, 4, 2)) == "SIP(1)/D2"

    def test_preconditions(self):
        with pytest.raises(ArgumentError):
            torus_symmetry_structure(2, 4, 3)
        with pytest.raises(ArgumentError):
            torus_symmetry_structure(1, 3, 3)

    @pytest.mark.parametrize("n", range(2, 13))
    def test_symbolic_sweep_against_reduction_formula(self, n):
        for p in range(2, 10):
            for q in range(2, 10):
                if math.gcd(p, q) != 1:
                    continue
                t = torus_symmetry_structure(p, q, n)
                pbar, qbar = p % n, q % n
                if pbar and qbar:
                    assert t == SymmetryType("SIFP", (pbar, qbar), dihedral(n))
                else:
                    assert t == SymmetryType(
                        "SIP", (max(pbar, qbar),), dihedral(n))

    @pytest.mark.parametrize("pq", [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5),
                                    (4, 5), (5, 6), (6, 7)])
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_detection_agrees_with_declared_structure(self, pq, n):
        # cross-module consistency: the declared rotation part matches
        # what the detector measures on the actual curve
        p, q = pq
        declared = torus_symmetry_structure(p, q, n)
        curve = geo.torus_knot(p, q)
        action = geo.torus_cyclic_action(p, q, n)
        detected = geo.detect_type(action, curve, samples=640)
        expected_name = {"SIFP": "FPer", "SIP": "Per"}[declared.name]
        if n == 2:
            expected = {"FPer": "F2P", "Per": "2P"}[expected_name]
            assert detected.name == expected
        else:
            assert detected.name == expected_name
            assert detected.params == declared.params


class TestRealizeParameters:
    def test_examples(self):
        assert realize_parameters(5, 2, 0) == (2, 5)
        p, q = realize_parameters(4, 1, 2)
        assert p % 4 == 1 and q % 4 == 2 and math.gcd(p, q) == 1
        p, q = realize_parameters(3, 1, 1)
        assert p % 3 == 1 and q % 3 == 1 and math.gcd(p, q) == 1

    def test_random_sweep(self):
        rng = np.random.default_rng(2024)
        count = 0
        while count < 200:
            n = int(rng.integers(2, 25))
            a = int(rng.integers(1, n))
            b = int(rng.integers(0, n))
            if math.gcd(a, math.gcd(b, n)) != 1:
                continue
            count += 1
            p, q = realize_parameters(n, a, b)
            assert p >= 2 and q >= 2
            assert p % n == a and q % n == b
            assert math.gcd(p, q) == 1

    def test_preconditions(self):
        with pytest.raises(ArgumentError):
            realize_parameters(6, 0, 1)
        with pytest.raises(ArgumentError):
            realize_parameters(6, 2, 4)


class TestBracelets:
    def test_reflection_base(self):
        assert str(bracelet_type(BraceletSpec(3, "2R"))) == "DihB/D3"

    def test_inversion_base(self):
        assert str(bracelet_type(BraceletSpec(4, "SI", True))) == "DihD/D4"

    def test_amphichiral_base(self):
        assert str(bracelet_type(BraceletSpec(4, "SNAc", True))) == "DihF/D4"

    def test_composite_only(self):
        for spec in [BraceletSpec(3, "2R"), BraceletSpec(4, "SI", True),
                     BraceletSpec(6, "SNAc", True)]:
            assert bracelet_type(spec).prime_admissible is False

    def test_parity_requirement(self):
        with pytest.raises(ArgumentError):
            BraceletSpec(3, "SI", True)
        with pytest.raises(ArgumentError):
            BraceletSpec(5, "SNAc", True)

    def test_alternation_required(self):
        with pytest.raises(ArgumentError):
            bracelet_type(BraceletSpec(4, "SI", False))

    def test_base_names_checked(self):
        with pytest.raises(ArgumentError):
            BraceletSpec(4, "Per", True)
