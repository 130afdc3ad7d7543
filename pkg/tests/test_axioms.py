"""Generic axiom checking: verdicts, witnesses, characteristics, homs."""
import math
import random

import pytest

from hyperalg.axioms import (
    DoubleDistributivityViolation,
    c_characteristic,
    characteristic,
    check_double_distributivity,
    check_hom,
    check_multigroup,
    check_multiring,
    replay,
)
from hyperalg.csets import CArc, CDisk, ComplexElem, set_eq
from hyperalg.finite import (
    FiniteMultistructure,
    make_krasner,
    make_M,
    make_powers_quotient,
    make_sign,
)
from hyperalg.homs import abs_map, log_abs, phase_map, sign_map
from hyperalg.structures import FiniteStructure, get_structure


class TestMultigroup:
    def test_krasner_passes_both_modes(self):
        k = get_structure("K")
        assert check_multigroup(k, "full").passed
        assert check_multigroup(k, "minimal").passed

    def test_broken_negation_fails_with_witness(self):
        # Krasner table with neg redefined: neg(1) = 0
        base = make_krasner()
        broken = FiniteMultistructure(
            elements=base.elements,
            add_table=base.add_table,
            zero_idx=base.zero_idx,
            mul_table=base.mul_table,
            one_idx=base.one_idx,
            neg_map=(0, 0),
            name="K-broken",
        )
        rep = check_multigroup(FiniteStructure(broken), "full")
        assert not rep.passed
        failing = {c.axiom for c in rep.failures()}
        assert failing & {"negation-exists", "negation-unique", "reversal"}
        w = next(c for c in rep.failures() if c.witness is not None)
        assert "1" in w.witness_text

    def test_tc_sampled(self):
        rep = check_multigroup(get_structure("TC"), budget=1500, rng=random.Random(9))
        assert rep.passed, rep.failures()

    def test_minimal_mode_on_continuous_carriers(self):
        for name in ("TC", "TR", "Phi", "tri", "ultra", "trop", "amoeba", "mono", "quat"):
            rep = check_multigroup(
                get_structure(name), "minimal", budget=600, rng=random.Random(11)
            )
            assert rep.passed, (name, rep.failures())

    def test_witness_replay(self):
        base = make_krasner()
        broken = FiniteMultistructure(
            elements=base.elements,
            add_table=base.add_table,
            zero_idx=base.zero_idx,
            neg_map=(0, 0),
            name="K-broken",
        )
        x = FiniteStructure(broken)
        rep = check_multigroup(x, "full")
        for c in rep.failures():
            if c.witness is not None:
                assert replay(x, c) is False


class TestMultiring:
    def test_sign_hyperfield(self):
        rep = check_multiring(get_structure("S"), level="hyperfield")
        assert rep.passed

    def test_triangle_hyperfield_sampled(self):
        rep = check_multiring(get_structure("tri"), level="hyperfield", budget=1200, rng=random.Random(4))
        assert rep.passed, rep.failures()

    def test_M_admits_no_hyperfield_multiplication(self):
        from hyperalg.finite import search_hyperfield_multiplications

        assert search_hyperfield_multiplications(make_M()) == []

    def test_hyperring_distributivity_is_equality(self):
        rep = check_multiring(get_structure("K"), level="hyperring")
        names = {c.axiom for c in rep.checks}
        assert "distributive-equality" in names


class TestDoubleDistributivity:
    def test_tr_doubly_distributive(self):
        rep = check_double_distributivity(get_structure("TR"), budget=600, rng=random.Random(3))
        assert rep.passed

    def test_tr_exhaustive_sign_magnitude_grid(self):
        # every sign/magnitude relation among the four operands
        tr = get_structure("TR")
        rng = random.Random(0)
        grid = [0.0, 1.0, -1.0, 2.0, -2.0]
        for a in grid:
            for b in grid:
                sab = tr.add(a, b)
                for x in grid:
                    for y in grid:
                        sxy = tr.add(x, y)
                        rhs = tr.add_sets(
                            tr.add_sets(tr.add(a * x, a * y), tr.singleton(b * x)),
                            tr.singleton(b * y),
                        )
                        lhs = tr.mul_sets(sab, sxy)
                        assert tr.set_eq(lhs, rhs), (a, b, x, y)

    def test_linear_order_carriers_doubly_distributive(self):
        for name in ("ultra", "trop"):
            rep = check_double_distributivity(
                get_structure(name), budget=400, rng=random.Random(3)
            )
            assert rep.passed, name

    def test_amoeba_fails_like_triangle(self):
        rep = check_double_distributivity(
            get_structure("amoeba"), budget=400, rng=random.Random(3)
        )
        assert not rep.passed

    def test_tc_fails_with_quarter_witness(self):
        tc = get_structure("TC")
        # the canonical witness (1, i, 1, -i): arc against the unit disk
        one = ComplexElem(1, 0)
        i = ComplexElem(1, math.pi / 2)
        mi = ComplexElem(1, 3 * math.pi / 2)
        lhs = tc.mul_sets(tc.add(one, i), tc.add(one, mi))
        rhs = tc.add_sets(
            tc.add_sets(tc.add(one.times(one), one.times(mi)), tc.singleton(i.times(one))),
            tc.singleton(i.times(mi)),
        )
        assert set_eq(lhs, CArc(1, 3 * math.pi / 2, math.pi))
        assert set_eq(rhs, CDisk(1))
        assert tc.subset(lhs, rhs) and not tc.subset(rhs, lhs)
        rep = check_double_distributivity(tc, budget=700, rng=random.Random(5))
        assert not rep.passed

    def test_triangle_witness_values(self):
        tri = get_structure("tri")
        from hyperalg.rsets import rinterval, rset_eq

        lhs = tri.mul_sets(tri.add(2.0, 1.0), tri.add(2.0, 1.0))
        rhs = tri.add_sets(
            tri.add_sets(tri.add(4.0, 2.0), tri.singleton(2.0)), tri.singleton(1.0)
        )
        assert rset_eq(lhs, rinterval(1, 9))
        assert rset_eq(rhs, rinterval(0, 9))
        rep = check_double_distributivity(tri, budget=500, rng=random.Random(5))
        assert not rep.passed

    def test_forward_holds_across_structures(self):
        for name in ("K", "S", "F2", "TC", "TR", "tri", "ultra", "trop", "amoeba", "mono"):
            check_double_distributivity(get_structure(name), budget=250, rng=random.Random(8))
            # no DoubleDistributivityViolation raised

    def test_forward_violation_raises(self):
        # a deliberately wrong structure: multiplication that ignores zero
        base = make_krasner()
        bad = FiniteMultistructure(
            elements=base.elements,
            add_table={(0, 0): frozenset([1]), (0, 1): frozenset([0]),
                       (1, 0): frozenset([0]), (1, 1): frozenset([0])},
            zero_idx=0,
            mul_table=base.mul_table,
            one_idx=base.one_idx,
            neg_map=(1, 0),
            name="bad",
        )
        with pytest.raises(DoubleDistributivityViolation):
            check_double_distributivity(FiniteStructure(bad), budget=50)


class TestCharacteristic:
    def test_krasner(self):
        assert characteristic(get_structure("K")).value == 2
        assert c_characteristic(get_structure("K")).value == 1

    def test_sign_idempotent(self):
        ch = characteristic(get_structure("S"))
        assert ch.value == 0 and ch.stabilized
        assert c_characteristic(get_structure("S")).value == 1

    def test_powers_quotients(self):
        p2 = FiniteStructure(make_powers_quotient(2, 6))
        assert characteristic(p2).value == 2
        assert c_characteristic(p2).value == 2
        p3 = FiniteStructure(make_powers_quotient(3, 6))
        assert characteristic(p3).value == 2
        assert c_characteristic(p3).value == 1

    def test_relation_chr_bounds_cchr(self):
        # chr = p != 0 forces cchr <= p
        for name in ("K", "F2", "tri", "TR", "amoeba"):
            x = get_structure(name)
            ch = characteristic(x, cap=16)
            if ch.value:
                assert c_characteristic(x, cap=16).value <= ch.value

    def test_idempotent_structures(self):
        # a + a = {a} in the complex/real tropical and phase carriers
        for name in ("TC", "TR", "Phi", "S"):
            x = get_structure(name)
            ch = characteristic(x)
            assert (ch.value, ch.stabilized) == (0, True)
            assert c_characteristic(x).value == 1

    def test_linear_order_hyperfields_have_char_two(self):
        # 1 + 1 is the down-set below 1, which contains zero
        for name in ("ultra", "trop"):
            x = get_structure(name)
            assert characteristic(x).value == 2
            assert c_characteristic(x).value == 1


class TestHoms:
    def test_sign_hom(self):
        tr, s = get_structure("TR"), get_structure("S")
        f = lambda v: {1: "1", -1: "-1", 0: "0"}[sign_map(v)]
        rep = check_hom(f, tr, s, budget=250, rng=random.Random(2), name="sign")
        assert rep.is_homomorphism
        assert rep.kernel == ["0"]

    def test_sign_collapse_not_strong(self):
        s, k = get_structure("S"), get_structure("K")
        f = lambda lbl: "0" if lbl == "0" else "1"
        rep = check_hom(f, s, k, name="S->K")
        assert rep.is_homomorphism and not rep.strong and rep.strong_exact
        assert rep.kernel == ["0"]

    def test_phase_hom(self):
        tc, phi = get_structure("TC"), get_structure("Phi")
        rep = check_hom(phase_map, tc, phi, budget=200, rng=random.Random(3), name="phase")
        assert rep.is_homomorphism, rep.witness_text

    def test_abs_hom_into_triangle(self):
        tc, tri = get_structure("TC"), get_structure("tri")
        rep = check_hom(abs_map, tc, tri, budget=200, rng=random.Random(4), name="abs")
        assert rep.is_homomorphism, rep.witness_text

    def test_logabs_hom_into_trop(self):
        tc, trop = get_structure("TC"), get_structure("trop")
        rep = check_hom(log_abs, tc, trop, budget=200, rng=random.Random(5), name="logabs")
        assert rep.is_homomorphism, rep.witness_text

    def test_modulus_into_maxplus_is_not_a_hom(self):
        tc, mp = get_structure("TC"), get_structure("maxplus")
        rep = check_hom(abs_map, tc, mp, budget=300, rng=random.Random(6), name="mod-maxplus")
        assert not rep.is_homomorphism
        a, b = rep.witness
        # the witness is a cancelling pair: |x+(-x)| sweeps [0,|x|], max-plus keeps |x|
        assert a.eq(-b) or abs(a.modulus - b.modulus) < 1e-9

    def test_report_serialization(self):
        s, k = get_structure("S"), get_structure("K")
        rep = check_hom(lambda lbl: "0" if lbl == "0" else "1", s, k, name="S->K")
        lines = rep.to_lines()
        assert any(line.startswith("axiom=strong verdict=fail") for line in lines)
        assert '"homomorphism": true' in rep.to_json()


class TestReportForms:
    def test_axiom_report_lines_and_json(self):
        rep = check_multigroup(get_structure("K"))
        lines = rep.to_lines()
        assert all(line.startswith("axiom=") for line in lines)
        assert '"structure": "K"' in rep.to_json()
