"""Finite constructors, quotients, ideals, and exhaustive verification."""
import itertools

import pytest

from hyperalg.axioms import check_multigroup, check_multiring
from hyperalg.finite import (
    FiniteMultistructure,
    InvalidStructureError,
    all_subgroups,
    cyclic_group,
    dihedral_group,
    direct_product,
    find_isomorphism,
    ideals,
    make_double_coset,
    make_f2,
    make_krasner,
    make_linear_order,
    make_M,
    make_powers_quotient,
    make_q1,
    make_sign,
    make_zmod,
    mul_quotient,
    prime_ideals,
    quaternion_group,
    quotient_by_normal,
    small_groups,
    symmetric3,
)
from hyperalg.structures import FiniteStructure, get_structure


class TestTables:
    def test_krasner_table(self):
        k = make_krasner()
        assert k.add("1", "1") == {"0", "1"}
        assert k.add("0", "1") == {"1"}
        assert k.mul("1", "1") == "1"

    def test_sign_table(self):
        s = make_sign()
        assert s.add("-1", "1") == {"-1", "0", "1"}
        assert s.add("1", "1") == {"1"}
        assert s.mul("-1", "-1") == "1"

    def test_M_table(self):
        m = make_M()
        assert m.add("1", "2") == {"0", "1"}
        assert m.add("1", "1") == {"2"}
        assert m.add("0", "2") == {"2"}

    def test_linear_orders(self):
        q1 = make_linear_order(2, strict=False)
        assert find_isomorphism(q1, _bare(make_q1())) is not None
        f2 = make_linear_order(2, strict=True)
        assert f2.add("1", "1") == {"0"}
        chain = make_linear_order(3, strict=True)
        assert chain.add("2", "2") == {"0", "1"}

    def test_linear_order_invalid(self):
        with pytest.raises(InvalidStructureError):
            make_linear_order(0)

    def test_json_roundtrip(self):
        for make in (make_krasner, make_sign, make_M, lambda: make_linear_order(4)):
            x = make()
            y = FiniteMultistructure.from_json(x.to_json())
            assert y.elements == tuple(str(e) for e in x.elements)
            assert y.add_table == x.add_table
            assert y.mul_table == x.mul_table


def _bare(x: FiniteMultistructure) -> FiniteMultistructure:
    return FiniteMultistructure(x.elements, x.add_table, x.zero_idx, neg_map=x.neg_map)


class TestExhaustiveAxioms:
    def test_named_structures_pass_both_modes(self):
        for name in ("K", "Q1", "S", "F2"):
            x = get_structure(name)
            assert check_multigroup(x, "full").passed, name
            assert check_multigroup(x, "minimal").passed, name

    def test_M_fails_the_reversal_axiom(self):
        """The published three-element table is forced into a reversal
        violation: with 1+1={2} and 1+2={0,1} fixed, associativity forces
        2+2={1,2}, and then 2 in 2+2 while -2=1 is not in 1+1.  Both checker
        modes agree on the failure."""
        x = get_structure("M")
        full = check_multigroup(x, "full")
        minimal = check_multigroup(x, "minimal")
        assert not full.passed and not minimal.passed
        assert {c.axiom for c in full.failures()} == {"reversal"}
        assert {c.axiom for c in minimal.failures()} == {"reversibility"}
        # axioms (1)-(3) do hold: only the mirror law breaks
        passing = {c.axiom for c in full.checks if c.passed}
        assert {"associativity", "neutral", "negation-exists", "negation-unique"} <= passing

    def test_linear_orders_up_to_six(self):
        for n in range(1, 7):
            for strict in (False, True):
                x = FiniteStructure(make_linear_order(n, strict))
                assert check_multigroup(x, "full").passed, (n, strict)
                assert check_multigroup(x, "minimal").passed, (n, strict)

    def test_hyperfield_levels(self):
        assert check_multiring(get_structure("K"), level="hyperfield").passed
        assert check_multiring(get_structure("S"), level="hyperfield").passed
        assert check_multiring(get_structure("F2"), level="hyperfield").passed

    def test_q1_is_the_unique_two_element_multigroup_that_is_not_a_group(self):
        # enumerate every multivalued table on {0, 1} with neutral 0
        cells = [frozenset(s) for s in ({0}, {1}, {0, 1})]
        q1 = _bare(make_q1())
        found = []
        for c00, c01, c10, c11 in itertools.product(cells, repeat=4):
            table = {(0, 0): c00, (0, 1): c01, (1, 0): c10, (1, 1): c11}
            for neg in ((0, 1), (0, 0), (1, 0), (1, 1)):
                try:
                    cand = FiniteMultistructure(
                        elements=("0", "1"),
                        add_table=table,
                        zero_idx=0,
                        neg_map=neg,
                        name="cand",
                    )
                except InvalidStructureError:
                    continue
                if not check_multigroup(FiniteStructure(cand), "full").passed:
                    continue
                univalued = all(len(v) == 1 for v in table.values())
                if not univalued:
                    found.append(table)
        assert found, "Q1 should be found"
        for table in found:
            cand = FiniteMultistructure(("0", "1"), table, 0, name="cand")
            assert find_isomorphism(cand, q1) is not None

    def test_neg_involution_everywhere(self):
        for name in ("K", "Q1", "S", "F2", "M"):
            x = get_structure(name)
            assert x.neg(x.zero) == x.zero
            for a in x.elements():
                assert x.neg(x.neg(a)) == a


class TestGroups:
    def test_small_groups_inventory(self):
        gs = small_groups(8)
        orders = sorted(g.order for g in gs)
        assert orders == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]

    def test_subgroup_counts(self):
        assert len(all_subgroups(symmetric3())) == 6
        assert len(all_subgroups(quaternion_group())) == 6
        assert len(all_subgroups(dihedral_group(4))) == 10

    def test_double_coset_trivial(self):
        g = cyclic_group(1)
        dc = make_double_coset(g, frozenset({0}))
        assert len(dc.elements) == 1

    def test_double_coset_s3(self):
        g = symmetric3()
        h2 = next(s for s in all_subgroups(g) if len(s) == 2)
        dc = make_double_coset(g, h2)
        assert len(dc.elements) == 2
        nt = next(e for e in dc.elements if e != dc.zero)
        assert dc.add(nt, nt) == set(dc.elements)

    def test_double_coset_z4(self):
        dc = make_double_coset(cyclic_group(4), frozenset({0, 2}))
        assert len(dc.elements) == 2
        assert find_isomorphism(dc, make_linear_order(2, strict=True)) is not None

    def test_all_double_cosets_are_multigroups(self):
        for g in small_groups(8):
            for h in all_subgroups(g):
                dc = FiniteStructure(make_double_coset(g, h))
                full = check_multigroup(dc, "full")
                minimal = check_multigroup(dc, "minimal")
                assert full.passed and minimal.passed, (g.name, sorted(h))


class TestQuotients:
    def test_f3_mod_units_is_krasner(self):
        q = mul_quotient(make_zmod(3), ["1", "2"])
        assert find_isomorphism(q, make_krasner()) is not None

    def test_f5_quotient(self):
        q = mul_quotient(make_zmod(5), ["1", "4"])
        assert len(q.elements) == 3
        assert check_multiring(FiniteStructure(q), level="hyperfield").passed

    def test_zero_in_s_collapses(self):
        q = mul_quotient(make_zmod(5), ["0", "1", "2", "3", "4"])
        assert len(q.elements) == 1

    def test_not_closed_rejected(self):
        with pytest.raises(InvalidStructureError):
            mul_quotient(make_zmod(5), ["2"])  # 2*2 = 4 not in S

    def test_quotient_by_full_units_gives_krasner(self):
        # X /m (X minus 0) is Krasner for every finite hyperfield except F2
        for make in (make_krasner, make_sign, lambda: make_zmod(3), lambda: make_zmod(5)):
            x = make()
            units = [e for e in x.elements if e != x.zero]
            q = mul_quotient(x, units)
            assert find_isomorphism(q, make_krasner()) is not None, x.name

    def test_powers_quotient_tables(self):
        p2 = make_powers_quotient(2, 5)
        got = p2.add("2^0", "2^0")
        assert got == {"0", "2^1", "2^2", "2^3", "2^4"}
        p3 = make_powers_quotient(3, 5)
        assert p3.add("3^0", "3^0") == {"0", "3^0", "3^1", "3^2", "3^3", "3^4"}
        with pytest.raises(InvalidStructureError):
            make_powers_quotient(4, 5)

    def test_quotient_by_normal_trivial(self):
        for make in (make_sign, make_M, make_krasner):
            x = make()
            q = quotient_by_normal(x, [x.zero])
            assert find_isomorphism(q, _bare(x)) is not None

    def test_quotient_by_normal_group_case(self):
        z4 = make_zmod(4)
        q = quotient_by_normal(_bare(z4), ["0", "2"])
        assert find_isomorphism(q, make_linear_order(2, strict=True)) is not None

    def test_non_strong_submultigroup_rejected(self):
        # {0, 1} in the sign carrier is not closed: 1 + (-1) covers everything
        with pytest.raises(InvalidStructureError):
            quotient_by_normal(make_sign(), ["0", "1", "-1"][:2])

    def test_strong_factorization_theorem(self):
        # a surjective strong hom: Z/4 -> Z/2, quotient by kernel is the image
        z4 = _bare(make_zmod(4))
        q = quotient_by_normal(z4, ["0", "2"])
        image = make_linear_order(2, strict=True)
        assert find_isomorphism(q, image) is not None

    def test_q2_strongness_counterexample(self):
        # quotient of the sign carrier by {0} is itself, while the collapse
        # onto Krasner has trivial kernel and is not injective, not strong
        s = make_sign()
        q = quotient_by_normal(s, ["0"])
        assert len(q.elements) == 3
        from hyperalg.axioms import check_hom

        rep = check_hom(
            lambda lbl: "0" if lbl == "0" else "1",
            get_structure("S"),
            get_structure("K"),
            name="Q2->Q1",
        )
        assert rep.is_homomorphism and not rep.strong
        assert rep.kernel == ["0"]


class TestIdeals:
    def test_z6_prime_ideals(self):
        entries = prime_ideals(make_zmod(6))
        got = sorted(tuple(sorted(e["ideal"])) for e in entries)
        assert got == [("0", "2", "4"), ("0", "3")]

    def test_hyperfield_has_only_zero_ideal(self):
        # the ideals of a hyperfield are {0} and the whole carrier
        for make in (make_krasner, make_sign):
            x = make()
            got = sorted(ideals(x), key=len)
            assert got == [frozenset({x.zero}), frozenset(x.elements)]
            entries = prime_ideals(x)
            assert len(entries) == 1 and entries[0]["ideal"] == frozenset({x.zero})

    def test_characteristic_map_is_hom(self):
        from hyperalg.axioms import check_hom

        for name in ("S", "K", "zmod:6"):
            x = get_structure(name)
            for entry in prime_ideals(x.table):
                f = lambda e, m=entry["to_K"]: m[e]
                rep = check_hom(f, x, get_structure("K"), name=f"f_I on {name}")
                assert rep.is_homomorphism, (name, entry["ideal"])

    def test_sign_ideal_map_is_collapse(self):
        entries = prime_ideals(make_sign())
        f = entries[0]["to_K"]
        assert f["0"] == "0" and f["1"] == "1" and f["-1"] == "1"

    def test_size_cap(self):
        with pytest.raises(InvalidStructureError):
            ideals(make_zmod(13))


class TestInheritance:
    """Small-substructure inheritance from characteristics."""

    def test_chr0_cchr1_gives_sign(self):
        # {-1, 0, 1} inside the sign carrier is the sign table itself
        s = make_sign()
        for a in ("1", "-1"):
            for b in ("1", "-1"):
                induced = s.add(a, b) & {"0", "1", "-1"}
                assert induced == s.add(a, b)

    def test_chr2_cchr1_gives_krasner(self):
        k = make_krasner()
        assert k.add("1", "1") == {"0", "1"}

    def test_chr2_cchr2_gives_f2(self):
        # in the powers-of-2 quotient, {0, 1} inherits the field F2
        p2 = make_powers_quotient(2, 5)
        sub = {"0", "2^0"}
        induced = p2.add("2^0", "2^0") & sub
        assert induced == {"0"}
        assert p2.add("0", "2^0") & sub == {"2^0"}
