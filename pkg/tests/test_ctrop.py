"""Tropical addition over C, R, the phase circle and the quaternions."""
import itertools
import math
import random

import pytest

from hyperalg.csets import (
    CArc,
    CDisk,
    CPoint,
    CZERO,
    ComplexElem,
    format_cset,
    member,
    parts_of,
    pick,
    set_eq,
    subset,
)
from hyperalg.ctrop import (
    ct_add,
    ct_add_sets,
    ct_mul_sets,
    ct_sum_n,
    phase_add,
    quat_add,
    quat_add_sets,
    rt_add,
    rt_add_sets,
    zero_in_sum,
)
from hyperalg.qsets import QArc, QBall, QPoint, QuatElem, qmember, qset_eq
from hyperalg.rsets import rinterval, rpoint, rset_eq
from hyperalg.tolerance import TWO_PI, Tolerance

PI = math.pi


def cp(m, a):
    return ComplexElem(m, a)


class TestCtAdd:
    def test_dominant(self):
        assert ct_add(cp(2, 0), cp(1, PI / 2)) == CPoint(cp(2, 0))

    def test_quarter_arc(self):
        got = ct_add(cp(1, 0), cp(1, PI / 2))
        assert set_eq(got, CArc(1, 0, PI / 2))

    def test_antipodal_disk(self):
        assert ct_add(cp(1, 0), cp(1, PI)) == CDisk(1)

    def test_zero_neutral(self):
        assert ct_add(cp(1.5, 2.0), CZERO) == CPoint(cp(1.5, 2.0))

    def test_idempotent_point(self):
        assert ct_add(cp(1, 1.0), cp(1, 1.0)) == CPoint(cp(1, 1.0))

    def test_arc_crosses_branch_cut(self):
        got = ct_add(cp(1, TWO_PI - 0.2), cp(1, 0.3))
        assert isinstance(got, CArc)
        assert got.sweep == pytest.approx(0.5)

    def test_negation_unique_on_samples(self, rng):
        for _ in range(100):
            a = cp(math.exp(rng.uniform(-1, 1)), rng.uniform(0, TWO_PI))
            assert member(CZERO, ct_add(a, -a))
            x = cp(a.modulus, rng.uniform(0, TWO_PI))
            if not x.eq(-a):
                assert not member(CZERO, ct_add(a, x))

    def test_maxplus_embedding(self, rng):
        # nonnegative reals add by max inside the complex carrier
        for _ in range(50):
            a, b = rng.uniform(0.1, 5), rng.uniform(0.1, 5)
            if abs(a - b) < 1e-6:
                b = a
            got = ct_add(cp(a, 0), cp(b, 0))
            assert got == CPoint(cp(max(a, b), 0))


class TestAppendixRules:
    """Closed-form component sums from the associativity case analysis."""

    def test_arc_plus_small_point(self):
        arc = CArc(1, 0, PI / 2)
        got = ct_add_sets(arc, CPoint(cp(0.5, 2.5)))
        assert set_eq(got, arc)

    def test_disk_plus_inner_point(self):
        got = ct_add_sets(CDisk(2), CPoint(cp(1.5, 1.0)))
        assert set_eq(got, CDisk(2))

    def test_arc_plus_antipodal_point_fills_disk(self):
        arc = CArc(1, 0, PI / 2)
        c = cp(1, PI + PI / 4)  # -c at pi/4 lies on the arc
        assert set_eq(ct_add_sets(arc, CPoint(c)), CDisk(1))

    def test_arc_plus_point_hull(self):
        arc = CArc(1, 0, PI / 4)
        c = cp(1, PI / 2)
        got = ct_add_sets(arc, CPoint(c))
        assert set_eq(got, CArc(1, 0, PI / 2))

    def test_dominant_point_wins(self):
        got = ct_add_sets(CDisk(1), CPoint(cp(3, 1.0)))
        assert set_eq(got, CPoint(cp(3, 1.0)))

    def test_arc_arc_with_antipodes(self):
        a1 = CArc(1, 0, PI / 2)
        a2 = CArc(1, PI, PI / 2)
        assert set_eq(ct_add_sets(a1, a2), CDisk(1))

    def test_arc_arc_hull(self):
        a1 = CArc(1, 0, 0.3)
        a2 = CArc(1, 1.0, 0.3)
        got = ct_add_sets(a1, a2)
        assert set_eq(got, CArc(1, 0, 1.3))


def _stratified_pairs(rng, n):
    """Component pairs including the measure-zero branches (ties, antipodes)."""
    out = []
    for _ in range(n):
        r = math.exp(rng.uniform(-0.5, 0.5))
        kind = rng.random()
        if kind < 0.4:
            s1 = CArc(r, rng.uniform(0, TWO_PI), rng.uniform(0.1, PI - 0.1))
        elif kind < 0.8:
            s1 = CPoint(cp(r, rng.uniform(0, TWO_PI)))
        else:
            s1 = CDisk(r)
        mode = rng.random()
        if mode < 0.3:  # equal radius, random placement
            s2 = CPoint(cp(r, rng.uniform(0, TWO_PI)))
        elif mode < 0.5 and isinstance(s1, CArc):  # antipodal to a point of the arc
            s2 = CPoint(cp(r, s1.start + rng.uniform(0, s1.sweep) + PI))
        elif mode < 0.6:
            s2 = CArc(r, rng.uniform(0, TWO_PI), rng.uniform(0.1, PI - 0.1))
        elif mode < 0.8:
            s2 = CPoint(cp(math.exp(rng.uniform(-1, 1)), rng.uniform(0, TWO_PI)))
        else:
            s2 = CDisk(r * rng.uniform(0.5, 1.5))
        out.append((s1, s2))
    return out


class TestSetExtensionOracle:
    """The symbolic component rules against a discretized union, with the
    tie/antipodal strata injected explicitly."""

    @staticmethod
    def _dense(s, rng, k):
        pts = []
        for c in parts_of(s):
            if isinstance(c, CPoint):
                pts.append(c.elem)
            elif isinstance(c, CArc):
                pts.extend(cp(c.radius, c.start + c.sweep * t / k) for t in range(k + 1))
            else:
                pts.append(CZERO)
                pts.extend(
                    cp(c.radius * math.sqrt(rng.random()), rng.uniform(0, TWO_PI))
                    for _ in range(2 * k)
                )
                pts.extend(cp(c.radius, rng.uniform(0, TWO_PI)) for _ in range(k))
        return pts

    def test_sound_and_complete(self, rng):
        wide = Tolerance(1e-6)
        for s1, s2 in _stratified_pairs(rng, 120):
            sym = ct_add_sets(s1, s2)
            xs = self._dense(s1, rng, 14)
            ys = self._dense(s2, rng, 14)
            cloud = []
            for x in xs:
                for y in ys:
                    piece = ct_add(x, y)
                    assert subset(piece, sym, wide), (
                        f"unsound: {format_cset(s1)} + {format_cset(s2)} -> "
                        f"{format_cset(sym)} missing {format_cset(piece)}"
                    )
                    cloud.extend(z.as_complex() for z in self._dense(piece, rng, 4))
            # completeness with the tie/antipodal pairs injected on top
            def inject(side_pts, other, flip):
                for u in side_pts[:10]:
                    for frac in (1.0, 0.5):
                        v = cp(u.modulus * frac, u.argument + PI)
                        if member(v, other, wide):
                            pair = (v, u) if flip else (u, v)
                            cloud.extend(
                                z.as_complex()
                                for z in self._dense(ct_add(*pair), rng, 18)
                            )
                    vt = cp(u.modulus, rng.uniform(0, TWO_PI))
                    if member(vt, other, wide):
                        pair = (vt, u) if flip else (u, vt)
                        cloud.extend(
                            z.as_complex() for z in self._dense(ct_add(*pair), rng, 18)
                        )

            inject(ys, s1, flip=True)
            inject(xs, s2, flip=False)
            scale = max(c.radius if not isinstance(c, CPoint) else c.elem.modulus for c in parts_of(sym))
            for probe in pick(sym, rng, 3):
                z0 = probe.as_complex()
                d = min(abs(z0 - w) for w in cloud)
                assert d < 0.45 * max(1.0, scale), (
                    f"incomplete: {format_cset(s1)} + {format_cset(s2)} -> "
                    f"{format_cset(sym)} stray {probe} (dist {d:.3f})"
                )


class TestAssociativityStrata:
    """Set associativity over tuples hitting every case of the analysis."""

    def test_all_cases(self, rng):
        r = 1.0
        cases = []
        for _ in range(150):
            th = lambda: rng.uniform(0, TWO_PI)
            a = cp(r, th())
            variants = [
                (cp(2, th()), cp(1, th()), cp(0.5, th())),  # one dominant
                (cp(2, th()), cp(1, th()), cp(2, th())),  # |a|=|c|>|b|
                (a, cp(r, th()), cp(0.5, th())),  # tie above a small one
                (a, -a, cp(0.5, th())),  # cancelling pair above small
                (a, cp(r, th()), cp(r, th())),  # all equal, generic
                (a, -a, cp(r, th())),  # one cancelling pair
                (a, -a, a),  # chain of cancellations
                (CZERO, CZERO, CZERO),
            ]
            cases.extend(variants)
        for a, b, c in cases:
            lhs = ct_add_sets(ct_add(a, b), CPoint(c))
            rhs = ct_add_sets(CPoint(a), ct_add(b, c))
            assert set_eq(lhs, rhs), (
                f"assoc failed: {a}, {b}, {c}: {format_cset(lhs)} != {format_cset(rhs)}"
            )

    def test_distributivity_samples(self, rng):
        for _ in range(200):
            a = cp(math.exp(rng.uniform(-1, 1)), rng.uniform(0, TWO_PI))
            b = cp(math.exp(rng.uniform(-1, 1)), rng.uniform(0, TWO_PI))
            c = b if rng.random() < 0.3 else (-b if rng.random() < 0.4 else cp(b.modulus, rng.uniform(0, TWO_PI)))
            lhs = ct_mul_sets(CPoint(a), ct_add(b, c))
            rhs = ct_add(a.times(b), a.times(c))
            assert set_eq(lhs, rhs)


class TestSumN:
    def test_disk_from_cancelling_square(self):
        vals = [cp(1, 0), cp(1, PI / 2), cp(1, 3 * PI / 2), cp(1, 0)]
        assert set_eq(ct_sum_n(vals), CDisk(1))

    def test_small_summand_ignored(self):
        vals = [cp(1, 0), cp(1, PI / 2), cp(1e-3, 1.0)]
        assert set_eq(ct_sum_n(vals), CArc(1, 0, PI / 2))

    def test_cube_roots_fill_disk(self):
        vals = [cp(1, 2 * PI * k / 3) for k in range(3)]
        assert set_eq(ct_sum_n(vals), CDisk(1))
        # oracle: iterated binary fold
        acc = CPoint(vals[0])
        for v in vals[1:]:
            acc = ct_add_sets(acc, CPoint(v))
        assert set_eq(acc, CDisk(1))

    def test_zero_in_sum_goldens(self):
        assert not zero_in_sum([cp(1, 0), cp(1, PI / 2)])
        assert zero_in_sum([cp(1, 0), cp(1, PI)])
        assert zero_in_sum([cp(1, 2 * PI * k / 3) for k in range(3)])

    def test_zero_in_sum_matches_membership(self, rng):
        for _ in range(200):
            n = rng.randint(2, 6)
            vals = []
            base = math.exp(rng.uniform(-1, 1))
            for _ in range(n):
                mode = rng.random()
                if mode < 0.5:
                    vals.append(cp(base, rng.uniform(0, TWO_PI)))
                elif mode < 0.65 and vals:
                    vals.append(-vals[-1])
                else:
                    vals.append(cp(math.exp(rng.uniform(-1, 1)), rng.uniform(0, TWO_PI)))
            assert zero_in_sum(vals) == member(CZERO, ct_sum_n(vals))

    def test_order_independence(self, rng):
        for _ in range(40):
            n = rng.randint(3, 5)
            base = 1.0
            vals = [cp(base, rng.uniform(0, TWO_PI)) for _ in range(n - 1)]
            vals.append(-vals[0] if rng.random() < 0.4 else cp(base, rng.uniform(0, TWO_PI)))
            closed = ct_sum_n(vals)
            for perm in itertools.permutations(vals):
                acc = CPoint(perm[0])
                for v in perm[1:]:
                    acc = ct_add_sets(acc, CPoint(v))
                assert set_eq(acc, closed)


class TestUpperSemicontinuitySpotCheck:
    """Small input perturbations keep the sum inside a slightly inflated
    neighborhood of the unperturbed result (sampled reading only; the
    branch jumps all shrink the result, never grow it)."""

    def test_perturbed_sums_stay_inside(self, rng):
        delta = 1e-4
        neighborhood = Tolerance(100 * delta)  # the prescribed open blow-up
        for _ in range(150):
            m = math.exp(rng.uniform(-1, 1))
            a = cp(m, rng.uniform(0, TWO_PI))
            mode = rng.random()
            if mode < 0.35:
                b = cp(m, rng.uniform(0, TWO_PI))
            elif mode < 0.6:
                b = -a
            else:
                b = cp(math.exp(rng.uniform(-1, 1)), rng.uniform(0, TWO_PI))
            base = ct_add(a, b)
            for _ in range(4):
                pa = cp(max(0.0, a.modulus + rng.uniform(-delta, delta)),
                        a.argument + rng.uniform(-delta, delta))
                pb = cp(max(0.0, b.modulus + rng.uniform(-delta, delta)),
                        b.argument + rng.uniform(-delta, delta))
                got = ct_add(pa, pb)
                for z in pick(got, rng, 2):
                    assert member(z, base, neighborhood)


class TestRealTropical:
    def test_table(self):
        assert rset_eq(rt_add(3, -2), rpoint(3))
        assert rset_eq(rt_add(1.5, 1.5), rpoint(1.5))
        assert rset_eq(rt_add(2, -2), rinterval(-2, 2))
        assert rset_eq(rt_add(-1, 2), rpoint(2))

    def test_matches_complex_intersection(self, rng):
        # rt_add must agree with the complex sum intersected with R
        for _ in range(200):
            a = rng.choice([1.0, -1.0]) * math.exp(rng.uniform(-1, 1))
            b = rng.choice([a, -a, rng.choice([1.0, -1.0]) * math.exp(rng.uniform(-1, 1))])
            za = cp(abs(a), 0 if a >= 0 else PI)
            zb = cp(abs(b), 0 if b >= 0 else PI)
            cs = ct_add(za, zb)
            real_parts = []
            for comp in parts_of(cs):
                if isinstance(comp, CPoint):
                    e = comp.elem
                    real_parts.append((e.re, e.re))
                elif isinstance(comp, CDisk):
                    real_parts.append((-comp.radius, comp.radius))
                else:
                    for ang, val in ((0.0, comp.radius), (PI, -comp.radius)):
                        if comp.contains_angle(ang, 1e-9):
                            real_parts.append((val, val))
            from hyperalg.rsets import rset

            assert rset_eq(rt_add(a, b), rset(real_parts))

    def test_set_extension_associativity(self, rng):
        for _ in range(150):
            m = math.exp(rng.uniform(-1, 1))
            pool = [m, -m, 2 * m, -2 * m, 0.0]
            a, b, c = (rng.choice(pool) for _ in range(3))
            lhs = rt_add_sets(rt_add(a, b), rpoint(c))
            rhs = rt_add_sets(rpoint(a), rt_add(b, c))
            assert rset_eq(lhs, rhs)


class TestPhase:
    def test_same_as_complex_on_arcs(self):
        got = phase_add(cp(1, 0), cp(1, PI / 2))
        assert set_eq(got, CArc(1, 0, PI / 2))

    def test_antipodal_gives_circle_and_zero(self):
        got = phase_add(cp(1, 0), cp(1, PI))
        parts = parts_of(got)
        assert any(isinstance(c, CArc) and c.full for c in parts)
        assert any(isinstance(c, CPoint) and c.elem.modulus == 0 for c in parts)

    def test_zero_neutral(self):
        assert phase_add(CZERO, cp(1, 2.0)) == CPoint(cp(1, 2.0))

    def test_non_unit_rejected(self):
        with pytest.raises(ValueError):
            phase_add(cp(2, 0), cp(1, 0))

    def test_sign_table_recovered(self):
        # the three real phases reproduce the sign hyperfield's table
        one, mone = cp(1, 0), cp(1, PI)
        assert set_eq(phase_add(one, one), CPoint(one))
        got = phase_add(one, mone)
        assert member(one, got) and member(mone, got) and member(CZERO, got)


class TestQuaternion:
    I = QuatElem(0, 1, 0, 0)
    J = QuatElem(0, 0, 1, 0)

    def test_arc_case(self):
        got = quat_add(self.I, self.J)
        assert isinstance(got, QArc)
        mid = QuatElem(0, 1 / math.sqrt(2), 1 / math.sqrt(2), 0)
        assert qmember(mid, got)

    def test_cancellation_ball(self):
        q = QuatElem(1, 2, 3, 4)
        got = quat_add(q, -q)
        assert got == QBall(q.norm)

    def test_dominant(self):
        got = quat_add(QuatElem(2, 0, 0, 0), self.I)
        assert got == QPoint(QuatElem(2, 0, 0, 0))

    def test_restriction_to_complex_plane(self, rng):
        # pairs in the (x, y) plane behave exactly like the complex carrier
        for _ in range(150):
            ma, mb = math.exp(rng.uniform(-1, 1)), math.exp(rng.uniform(-1, 1))
            if rng.random() < 0.5:
                mb = ma
            ta, tb = rng.uniform(0, TWO_PI), rng.uniform(0, TWO_PI)
            if rng.random() < 0.3:
                tb = ta + PI
            qa = QuatElem(ma * math.cos(ta), ma * math.sin(ta), 0, 0)
            qb = QuatElem(mb * math.cos(tb), mb * math.sin(tb), 0, 0)
            qres = quat_add(qa, qb)
            cres = ct_add(cp(ma, ta), cp(mb, tb))
            for z in pick(cres, rng, 2):
                qz = QuatElem(z.re, z.im, 0, 0)
                assert qmember(qz, qres, Tolerance(1e-7))

    def test_associativity_strata(self, rng):
        for _ in range(120):
            v = [rng.gauss(0, 1) for _ in range(4)]
            n = math.sqrt(sum(x * x for x in v))
            a = QuatElem(*(x / n for x in v))
            w = [rng.gauss(0, 1) for _ in range(4)]
            nw = math.sqrt(sum(x * x for x in w))
            peer = QuatElem(*(x / nw for x in w))
            pool = [a, -a, peer, -peer, QuatElem(2, 0, 0, 0), QuatElem(0, 0, 0, 0)]
            x, y, z = (rng.choice(pool) for _ in range(3))
            lhs = quat_add_sets(quat_add(x, y), QPoint(z))
            rhs = quat_add_sets(QPoint(x), quat_add(y, z))
            assert qset_eq(lhs, rhs), (x, y, z)
