"""Concrete structure handles and the name registry used by the CLI.

Each class binds one carrier's operations, samplers and text forms to the
uniform Structure interface consumed by the axiom checkers.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction

from . import csets, ctrop, exotic, qsets, realhf, rsets
from .axioms import EmptySumError, Structure
from .csets import CZERO, CONE, ComplexElem
from .finite import FiniteMultistructure
from .qsets import QONE, QZERO, QuatElem
from .tolerance import DEFAULT_TOL, NEG_INF, TWO_PI, Tolerance, fmt_num


class FiniteStructure(Structure):
    """Adapter exposing a FiniteMultistructure through the checker interface."""

    is_finite = True

    def __init__(self, table: FiniteMultistructure, tol: Tolerance = DEFAULT_TOL):
        super().__init__(tol)
        self.table = table
        self.name = table.name or "finite"
        self.has_mul = table.mul_table is not None
        self.has_one = table.one_idx is not None
        self.has_inv = self.has_mul
        self.mul_commutative = True

    @property
    def zero(self):
        return self.table.zero

    @property
    def one(self):
        return self.table.one

    def elements(self) -> list:
        return list(self.table.elements)

    def random_elem(self, rng):
        return rng.choice(self.table.elements)

    def peer(self, a, rng):
        return rng.choice(self.table.elements)

    def add(self, a, b):
        out = self.table.add(a, b)
        if not out:
            raise EmptySumError(f"{self.name}: empty sum at ({a}, {b})")
        return out

    def add_sets(self, s1, s2):
        out = set()
        for a in s1:
            for b in s2:
                out |= self.table.add(a, b)
        return frozenset(out)

    def union_sets(self, s1, s2):
        return frozenset(s1) | frozenset(s2)

    def singleton(self, a):
        return frozenset([a])

    def neg(self, a):
        return self.table.neg(a)

    def mul(self, a, b):
        return self.table.mul(a, b)

    def inv(self, a):
        return self.table.inv(a)

    def scale(self, a, s, side="left"):
        if side == "left":
            return frozenset(self.table.mul(a, x) for x in s)
        return frozenset(self.table.mul(x, a) for x in s)

    def mul_sets(self, s1, s2):
        return frozenset(self.table.mul(a, b) for a in s1 for b in s2)

    def eq(self, a, b):
        return a == b

    def member(self, x, s):
        return x in s

    def set_eq(self, s1, s2):
        return frozenset(s1) == frozenset(s2)

    def subset(self, s1, s2):
        return frozenset(s1) <= frozenset(s2)

    def pick(self, s, rng, count=4):
        return sorted(s)

    def format_elem(self, a):
        return str(a)

    def parse_elem(self, text):
        t = text.strip()
        for e in self.table.elements:
            if str(e) == t:
                return e
        raise ValueError(f"{t!r} is not an element of {self.name}")

    def format_set(self, s):
        ordered = [e for e in self.table.elements if e in s]
        return "{" + ",".join(str(e) for e in ordered) + "}"


class ComplexTropical(Structure):
    """C with dominant-modulus / shortest-arc / disk addition."""

    name = "TC"

    zero = CZERO
    one = CONE

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return CZERO
        m = math.exp(rng.uniform(-1.5, 1.5))
        return ComplexElem(m, rng.uniform(0.0, TWO_PI))

    def peer(self, a, rng):
        if a.modulus == 0.0:
            return CZERO
        return ComplexElem(a.modulus, rng.uniform(0.0, TWO_PI))

    def add(self, a, b):
        return ctrop.ct_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return ctrop.ct_add_sets(s1, s2, self.tol)

    def union_sets(self, s1, s2):
        return csets.union(s1, s2, self.tol)

    def singleton(self, a):
        return csets.CPoint(a)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a.times(b)

    def inv(self, a):
        return a.inv()

    def scale(self, a, s, side="left"):
        return ctrop.cset_scale(s, a, self.tol)

    def mul_sets(self, s1, s2):
        return ctrop.ct_mul_sets(s1, s2, self.tol)

    def eq(self, a, b):
        return a.eq(b, self.tol)

    def member(self, x, s):
        return csets.member(x, s, self.tol)

    def set_eq(self, s1, s2):
        return csets.set_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        return csets.subset(s1, s2, self.tol)

    def pick(self, s, rng, count=4):
        return csets.pick(s, rng, count)

    def format_elem(self, a):
        return csets.format_celem(a)

    def parse_elem(self, text):
        return csets.parse_celem(text)

    def format_set(self, s):
        return csets.format_cset(s)


class PhaseStructure(ComplexTropical):
    """Unit circle plus 0, with the addition clipped from the complex sum."""

    name = "Phi"

    def random_elem(self, rng):
        if rng.random() < 0.08:
            return CZERO
        return ComplexElem(1.0, rng.uniform(0.0, TWO_PI))

    def peer(self, a, rng):
        if a.modulus == 0.0:
            return CZERO
        return ComplexElem(1.0, rng.uniform(0.0, TWO_PI))

    def add(self, a, b):
        return ctrop.phase_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return ctrop.phase_add_sets(s1, s2, self.tol)


class RealTropical(Structure):
    """R with the four-case tropical addition induced from C."""

    name = "TR"
    zero = 0.0
    one = 1.0

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return 0.0
        m = math.exp(rng.uniform(-1.5, 1.5))
        return m if rng.random() < 0.5 else -m

    def peer(self, a, rng):
        return a if rng.random() < 0.5 else -a

    def add(self, a, b):
        return ctrop.rt_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return ctrop.rt_add_sets(s1, s2, self.tol)

    def union_sets(self, s1, s2):
        return rsets.runion(s1, s2, self.tol)

    def singleton(self, a):
        return rsets.rpoint(a)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0.0:
            raise ZeroDivisionError("0 has no inverse")
        return 1.0 / a

    def scale(self, a, s, side="left"):
        return ctrop.rt_mul_sets(rsets.rpoint(a), s, self.tol)

    def mul_sets(self, s1, s2):
        return ctrop.rt_mul_sets(s1, s2, self.tol)

    def eq(self, a, b):
        return self.tol.close(a, b)

    def member(self, x, s):
        return rsets.rmember(x, s, self.tol)

    def set_eq(self, s1, s2):
        return rsets.rset_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        return rsets.rsubset(s1, s2, self.tol)

    def pick(self, s, rng, count=4):
        return rsets.rpick(s, rng, count)

    def format_elem(self, a):
        return fmt_num(a)

    def parse_elem(self, text):
        return float(text)

    def format_set(self, s):
        return rsets.format_rset(s)


class TriangleStructure(RealTropical):
    """Nonnegative reals with the triangle-inequality addition."""

    name = "tri"

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return 0.0
        return math.exp(rng.uniform(-1.5, 1.5))

    def peer(self, a, rng):
        return a

    def add(self, a, b):
        return realhf.tri_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return realhf.tri_add_sets(s1, s2, self.tol)

    def neg(self, a):
        return a

    def scale(self, a, s, side="left"):
        return self.mul_sets(rsets.rpoint(a), s)

    def mul_sets(self, s1, s2):
        out = []
        for lo1, hi1 in s1.intervals:
            for lo2, hi2 in s2.intervals:
                out.append((lo1 * lo2, hi1 * hi2))
        return rsets.rset(out, self.tol)

    def parse_elem(self, text):
        v = float(text)
        if v < 0:
            raise ValueError("carrier is the nonnegative reals")
        return v


class UltraStructure(TriangleStructure):
    """Nonnegative reals with the ultrametric (max / down-set) addition."""

    name = "ultra"

    def add(self, a, b):
        return realhf.ultra_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return realhf.ultra_add_sets(s1, s2, self.tol)


class TropStructure(Structure):
    """R ∪ {-inf} with max/down-set addition; multiplication is +."""

    name = "trop"
    zero = NEG_INF
    one = 0.0

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return NEG_INF
        return rng.uniform(-3.0, 3.0)

    def peer(self, a, rng):
        return a

    def add(self, a, b):
        return realhf.trop_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return realhf.trop_add_sets(s1, s2, self.tol)

    def union_sets(self, s1, s2):
        return rsets.runion(s1, s2, self.tol)

    def singleton(self, a):
        return rsets.rpoint(a)

    def neg(self, a):
        return a

    def mul(self, a, b):
        return realhf.trop_mul(a, b)

    def inv(self, a):
        if a == NEG_INF:
            raise ZeroDivisionError("-inf has no inverse")
        return -a

    def scale(self, a, s, side="left"):
        return self.mul_sets(rsets.rpoint(a), s)

    def mul_sets(self, s1, s2):
        out = []
        for lo1, hi1 in s1.intervals:
            for lo2, hi2 in s2.intervals:
                out.append((realhf.trop_mul(lo1, lo2), realhf.trop_mul(hi1, hi2)))
        return rsets.rset(out, self.tol)

    def eq(self, a, b):
        return a == b or self.tol.close(a, b)

    def member(self, x, s):
        return rsets.rmember(x, s, self.tol)

    def set_eq(self, s1, s2):
        return rsets.rset_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        return rsets.rsubset(s1, s2, self.tol)

    def pick(self, s, rng, count=4):
        return rsets.rpick(s, rng, count)

    def format_elem(self, a):
        return fmt_num(a)

    def parse_elem(self, text):
        return NEG_INF if text.strip() == "-inf" else float(text)

    def format_set(self, s):
        return rsets.format_rset(s)


class AmoebaStructure(TropStructure):
    """R ∪ {-inf} with the triangle addition transported along log."""

    name = "amoeba"

    def add(self, a, b):
        return realhf.amoeba_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return realhf.amoeba_add_sets(s1, s2, self.tol)


class QuaternionTropical(Structure):
    """H with dominant-norm / geodesic-arc / ball addition (a skew carrier)."""

    name = "quat"
    mul_commutative = False
    zero = QZERO
    one = QONE

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return QZERO
        m = math.exp(rng.uniform(-1.0, 1.0))
        v = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = math.sqrt(sum(x * x for x in v)) or 1.0
        return QuatElem(*(x * m / n for x in v))

    def peer(self, a, rng):
        if a.norm == 0.0:
            return QZERO
        v = [rng.gauss(0.0, 1.0) for _ in range(4)]
        n = math.sqrt(sum(x * x for x in v)) or 1.0
        return QuatElem(*(x * a.norm / n for x in v))

    def add(self, a, b):
        return ctrop.quat_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return ctrop.quat_add_sets(s1, s2, self.tol)

    def union_sets(self, s1, s2):
        return qsets.qnormalize([s1, s2], self.tol)

    def singleton(self, a):
        return qsets.QPoint(a)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a.times(b)

    def inv(self, a):
        return a.inv()

    def scale(self, a, s, side="left"):
        return ctrop.quat_scale(s, a, side, self.tol)

    def mul_sets(self, s1, s2):
        return None  # products of arcs are not symbolically representable

    def eq(self, a, b):
        return a.eq(b, self.tol)

    def member(self, x, s):
        return qsets.qmember(x, s, self.tol)

    def set_eq(self, s1, s2):
        return qsets.qset_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        for p in qsets.qpick(s1, random.Random(7), 3):
            if not qsets.qmember(p, s2, self.tol):
                return False
        return True

    def pick(self, s, rng, count=4):
        return qsets.qpick(s, rng, count)

    def format_elem(self, a):
        return qsets.format_qelem(a)

    def parse_elem(self, text):
        return qsets.parse_qelem(text)

    def format_set(self, s):
        return qsets.format_qset(s)


class MonomialStructure(Structure):
    """Monomials coeff*t^exp with dominance by exponent.

    The exponent domain is `real`, `rational`, or `int`.
    """

    def __init__(self, domain: str = "real", tol: Tolerance = DEFAULT_TOL):
        super().__init__(tol)
        if domain not in ("real", "rational", "int"):
            raise ValueError(f"unknown exponent domain {domain!r}")
        self.domain = domain
        self.name = "mono" if domain == "real" else f"mono-{domain}"

    zero = exotic.MZERO
    one = exotic.MONE

    def _rand_exp(self, rng):
        if self.domain == "int":
            return rng.randint(-4, 4)
        if self.domain == "rational":
            return Fraction(rng.randint(-8, 8), rng.randint(1, 4))
        return rng.uniform(-3.0, 3.0)

    def _rand_coeff(self, rng):
        return complex(rng.gauss(0.0, 1.0) or 1.0, rng.gauss(0.0, 1.0))

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return exotic.MZERO
        return exotic.MonomialElem(self._rand_coeff(rng), self._rand_exp(rng))

    def peer(self, a, rng):
        if a.zero:
            return a
        return exotic.MonomialElem(self._rand_coeff(rng), a.exponent)

    def add(self, a, b):
        return exotic.mono_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return exotic.mono_add_sets(s1, s2, self.tol)

    def union_sets(self, s1, s2):
        return exotic.mnormalize([s1, s2], self.tol)

    def singleton(self, a):
        return exotic.MPoint(a)

    def neg(self, a):
        return exotic.mono_neg(a)

    def mul(self, a, b):
        return exotic.mono_mul(a, b)

    def inv(self, a):
        return exotic.mono_inv(a)

    def scale(self, a, s, side="left"):
        return exotic.mono_mul_sets(exotic.MPoint(a), s, self.tol)

    def mul_sets(self, s1, s2):
        return exotic.mono_mul_sets(s1, s2, self.tol)

    def eq(self, a, b):
        return a.eq(b, self.tol)

    def member(self, x, s):
        return exotic.mmember(x, s, self.tol)

    def set_eq(self, s1, s2):
        return exotic.mset_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        for c in exotic.mparts_of(exotic.mnormalize([s1], self.tol)):
            if isinstance(c, exotic.MPoint):
                if not exotic.mmember(c.elem, s2, self.tol):
                    return False
            else:
                ok = any(
                    isinstance(d, exotic.MCone)
                    and float(c.bound) <= float(d.bound) + self.tol.eps
                    for d in exotic.mparts_of(s2)
                )
                if not ok:
                    return False
        return True

    def pick(self, s, rng, count=4):
        pts = []
        for c in exotic.mparts_of(s):
            if isinstance(c, exotic.MPoint):
                pts.append(c.elem)
            else:
                pts.append(exotic.MZERO)
                b = float(c.bound)
                for step in (1, 2, 4):
                    if self.domain == "int":
                        e: object = int(math.floor(b)) - step  # strictly below
                    elif self.domain == "rational":
                        e = Fraction(c.bound) - Fraction(step, 2)
                    else:
                        e = b - 0.5 * step
                    pts.append(exotic.MonomialElem(self._rand_coeff(rng), e))
        return pts

    def format_elem(self, a):
        return exotic.format_monomial(a)

    def parse_elem(self, text):
        return exotic.parse_monomial(text, self.domain)

    def format_set(self, s):
        return exotic.format_mset(s)


class PadicStructure(Structure):
    """Truncated p-adic numbers with dominant-norm tropical addition."""

    def __init__(self, p: int = 5, depth: int = 8, tol: Tolerance = DEFAULT_TOL):
        super().__init__(tol)
        self.p = p
        self.depth = depth
        self.name = f"padic:{p}:{depth}"
        self._zero = exotic.padic_zero(p)
        self._one = exotic.padic_one(p, depth)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return self._zero
        e = rng.randint(-3, 3)
        digits = [rng.randint(1, self.p - 1)] + [
            rng.randint(0, self.p - 1) for _ in range(self.depth - 1)
        ]
        return exotic.PadicElem(self.p, e, tuple(digits))

    def peer(self, a, rng):
        if a.is_zero:
            return a
        digits = [rng.randint(1, self.p - 1)] + [
            rng.randint(0, self.p - 1) for _ in range(self.depth - 1)
        ]
        return exotic.PadicElem(self.p, a.e, tuple(digits))

    def add(self, a, b):
        return exotic.padic_add(a, b, self.tol)

    def add_sets(self, s1, s2):
        return exotic.padic_add_sets(s1, s2, self.tol)

    def union_sets(self, s1, s2):
        return exotic.pnormalize([s1, s2])

    def singleton(self, a):
        return exotic.PPoint(a)

    def neg(self, a):
        return exotic.padic_neg(a)

    def mul(self, a, b):
        return exotic.padic_mul(a, b)

    def inv(self, a):
        return exotic.padic_inv(a)

    def scale(self, a, s, side="left"):
        return exotic.padic_mul_sets(exotic.PPoint(a), s, self.tol)

    def mul_sets(self, s1, s2):
        return exotic.padic_mul_sets(s1, s2, self.tol)

    def eq(self, a, b):
        return a.eq(b)

    def member(self, x, s):
        return exotic.pmember(x, s, self.tol)

    def set_eq(self, s1, s2):
        return exotic.pset_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        for c in exotic.pparts_of(exotic.pnormalize([s1])):
            if isinstance(c, exotic.PPoint):
                if not exotic.pmember(c.elem, s2, self.tol):
                    return False
            else:
                if not any(
                    isinstance(d, exotic.PCone) and d.e <= c.e
                    for d in exotic.pparts_of(s2)
                ):
                    return False
        return True

    def pick(self, s, rng, count=4):
        pts = []
        for c in exotic.pparts_of(s):
            if isinstance(c, exotic.PPoint):
                pts.append(c.elem)
            else:
                pts.append(self._zero)
                for delta in (1, 2):
                    digits = [rng.randint(1, self.p - 1)] + [
                        rng.randint(0, self.p - 1) for _ in range(self.depth - 1)
                    ]
                    pts.append(exotic.PadicElem(self.p, c.e + delta, tuple(digits)))
        return pts

    def format_elem(self, a):
        return exotic.format_padic(a)

    def parse_elem(self, text):
        return exotic.parse_padic(text, self.p, self.depth)

    def format_set(self, s):
        return exotic.format_pset(s)


class ComplexField(Structure):
    """Classical C with singleton sums, as a homomorphism domain."""

    name = "C"
    zero = CZERO
    one = CONE

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return CZERO
        m = math.exp(rng.uniform(-1.5, 1.5))
        return ComplexElem(m, rng.uniform(0.0, TWO_PI))

    def peer(self, a, rng):
        if a.modulus == 0.0:
            return CZERO
        return ComplexElem(a.modulus, rng.uniform(0.0, TWO_PI))

    def add(self, a, b):
        return csets.CPoint(ComplexElem.from_complex(a.as_complex() + b.as_complex()))

    def add_sets(self, s1, s2):
        parts = []
        for c1 in csets.parts_of(s1):
            for c2 in csets.parts_of(s2):
                if not isinstance(c1, csets.CPoint) or not isinstance(c2, csets.CPoint):
                    raise csets.RepresentationClosureError("classical sums are pointwise")
                parts.append(self.add(c1.elem, c2.elem))
        return csets.normalize_parts(parts, self.tol)

    def union_sets(self, s1, s2):
        return csets.union(s1, s2, self.tol)

    def singleton(self, a):
        return csets.CPoint(a)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a.times(b)

    def inv(self, a):
        return a.inv()

    def scale(self, a, s, side="left"):
        return ctrop.cset_scale(s, a, self.tol)

    def eq(self, a, b):
        return a.eq(b, self.tol)

    def member(self, x, s):
        return csets.member(x, s, self.tol)

    def set_eq(self, s1, s2):
        return csets.set_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        return csets.subset(s1, s2, self.tol)

    def pick(self, s, rng, count=4):
        return csets.pick(s, rng, count)

    def format_elem(self, a):
        return csets.format_celem(a)

    def parse_elem(self, text):
        return csets.parse_celem(text)

    def format_set(self, s):
        return csets.format_cset(s)


class RealField(Structure):
    """Classical R with singleton sums, as a homomorphism domain."""

    name = "R"
    zero = 0.0
    one = 1.0

    def random_elem(self, rng):
        if rng.random() < 0.05:
            return 0.0
        m = math.exp(rng.uniform(-1.5, 1.5))
        return m if rng.random() < 0.5 else -m

    def peer(self, a, rng):
        return a if rng.random() < 0.5 else -a

    def add(self, a, b):
        return rsets.rpoint(a + b)

    def add_sets(self, s1, s2):
        out = []
        for lo1, hi1 in s1.intervals:
            for lo2, hi2 in s2.intervals:
                out.append((lo1 + lo2, hi1 + hi2))
        return rsets.rset(out, self.tol)

    def union_sets(self, s1, s2):
        return rsets.runion(s1, s2, self.tol)

    def singleton(self, a):
        return rsets.rpoint(a)

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0.0:
            raise ZeroDivisionError
        return 1.0 / a

    def scale(self, a, s, side="left"):
        return ctrop.rt_mul_sets(rsets.rpoint(a), s, self.tol)

    def mul_sets(self, s1, s2):
        return ctrop.rt_mul_sets(s1, s2, self.tol)

    def eq(self, a, b):
        return self.tol.close(a, b)

    def member(self, x, s):
        return rsets.rmember(x, s, self.tol)

    def set_eq(self, s1, s2):
        return rsets.rset_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        return rsets.rsubset(s1, s2, self.tol)

    def pick(self, s, rng, count=4):
        return rsets.rpick(s, rng, count)

    def format_elem(self, a):
        return fmt_num(a)

    def parse_elem(self, text):
        return float(text)

    def format_set(self, s):
        return rsets.format_rset(s)


class MaxPlusReals(Structure):
    """(R+, max, *): the univalued semifield sitting inside the complex
    tropical carrier.  Used as a homomorphism target; it has no negation."""

    name = "maxplus"
    zero = 0.0
    one = 1.0

    def random_elem(self, rng):
        return math.exp(rng.uniform(-1.5, 1.5))

    def add(self, a, b):
        return rsets.rpoint(max(a, b))

    def add_sets(self, s1, s2):
        out = []
        for lo1, hi1 in s1.intervals:
            for lo2, hi2 in s2.intervals:
                out.append((max(lo1, lo2), max(hi1, hi2)))
        return rsets.rset(out, self.tol)

    def union_sets(self, s1, s2):
        return rsets.runion(s1, s2, self.tol)

    def singleton(self, a):
        return rsets.rpoint(a)

    def neg(self, a):
        raise NotImplementedError("max-plus has no negation")

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0.0:
            raise ZeroDivisionError
        return 1.0 / a

    def eq(self, a, b):
        return self.tol.close(a, b)

    def member(self, x, s):
        return rsets.rmember(x, s, self.tol)

    def set_eq(self, s1, s2):
        return rsets.rset_eq(s1, s2, self.tol)

    def subset(self, s1, s2):
        return rsets.rsubset(s1, s2, self.tol)

    def pick(self, s, rng, count=4):
        return rsets.rpick(s, rng, count)

    def format_elem(self, a):
        return fmt_num(a)

    def parse_elem(self, text):
        return float(text)

    def format_set(self, s):
        return rsets.format_rset(s)


# ---------------------------------------------------------------------------
# registry


def _finite_factories():
    from . import finite

    return {
        "K": finite.make_krasner,
        "Q1": finite.make_q1,
        "S": finite.make_sign,
        "F2": finite.make_f2,
        "M": finite.make_M,
    }


def get_structure(name: str, tol: Tolerance = DEFAULT_TOL) -> Structure:
    """Resolve a registry name: K, S, F2, M, Q1, TC, TR, Phi, tri, ultra,
    trop, amoeba, quat, mono[-int|-rational], maxplus, padic:p:L, finite:file,
    or zmod:n."""
    fin = _finite_factories()
    if name in fin:
        return FiniteStructure(fin[name](), tol)
    simple = {
        "TC": ComplexTropical,
        "TR": RealTropical,
        "Phi": PhaseStructure,
        "tri": TriangleStructure,
        "ultra": UltraStructure,
        "trop": TropStructure,
        "amoeba": AmoebaStructure,
        "quat": QuaternionTropical,
        "maxplus": MaxPlusReals,
        "C": ComplexField,
        "R": RealField,
    }
    if name in simple:
        return simple[name](tol)
    if name == "mono":
        return MonomialStructure("real", tol)
    if name.startswith("mono-"):
        return MonomialStructure(name.split("-", 1)[1], tol)
    if name.startswith("padic:"):
        _, p, depth = name.split(":")
        return PadicStructure(int(p), int(depth), tol)
    if name.startswith("zmod:"):
        from .finite import make_zmod

        return FiniteStructure(make_zmod(int(name.split(":")[1])), tol)
    if name.startswith("finite:"):
        path = name.split(":", 1)[1]
        with open(path, encoding="utf-8") as fh:
            return FiniteStructure(FiniteMultistructure.from_json(fh.read()), tol)
    if name.startswith("powers:"):
        from .finite import make_powers_quotient

        _, p, depth = name.split(":")
        return FiniteStructure(make_powers_quotient(int(p), int(depth)), tol)
    raise ValueError(f"unknown structure {name!r}")


REGISTRY_NAMES = [
    "K",
    "Q1",
    "S",
    "F2",
    "M",
    "TC",
    "TR",
    "Phi",
    "tri",
    "ultra",
    "trop",
    "amoeba",
    "quat",
    "mono",
    "padic:2:8",
    "padic:3:8",
    "padic:5:8",
]
