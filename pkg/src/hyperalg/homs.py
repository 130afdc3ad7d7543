"""Concrete homomorphisms and polynomial machinery.

The sign, phase, modulus and log-modulus maps connect the classical fields to
the tropical carriers.  The leading-term map w sends a complex polynomial (or
a real-exponent sum) with top term a*X^r to (a/|a|)*e^r and is a multiring
homomorphism onto the complex tropical carrier; its additive containment is
only interesting when top terms cancel, so the checker samples that stratum
explicitly.
"""
from __future__ import annotations

import cmath
import math
import random
import re
from dataclasses import dataclass

from .axioms import HomReport, Structure
from .csets import CZERO, ComplexElem, member as cmember
from .ctrop import ct_add
from .tolerance import DEFAULT_TOL, NEG_INF, Tolerance


def sign_map(x: float) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def phase_map(z: ComplexElem) -> ComplexElem:
    if z.modulus == 0.0:
        return CZERO
    return ComplexElem(1.0, z.argument)


def abs_map(z: ComplexElem) -> float:
    return z.modulus


def log_abs(z: ComplexElem) -> float:
    if z.modulus == 0.0:
        return NEG_INF
    return math.log(z.modulus)


# ---------------------------------------------------------------------------
# polynomials over C (natural or real exponents)


@dataclass(frozen=True)
class Polynomial:
    """Finite sum of terms coeff * X^exponent with distinct exponents."""

    terms: tuple[tuple[float, complex], ...]  # sorted by exponent, descending

    @classmethod
    def make(cls, terms: dict[float, complex]) -> "Polynomial":
        kept = {float(e): c for e, c in terms.items() if c != 0}
        return cls(tuple(sorted(kept.items(), reverse=True)))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> float:
        if self.is_zero:
            raise ValueError("zero polynomial has no degree")
        return self.terms[0][0]

    def leading(self) -> tuple[float, complex]:
        return self.terms[0]

    def __add__(self, other: "Polynomial") -> "Polynomial":
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return Polynomial.make(acc)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        acc: dict[float, complex] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial.make(acc)

    def __str__(self) -> str:
        return format_poly(self)


def w_map(p: Polynomial) -> ComplexElem:
    """Leading-term map: a*X^r + (lower)  ->  (a/|a|) * e^r."""
    if p.is_zero:
        return CZERO
    r, a = p.leading()
    return ComplexElem(math.exp(r), cmath.phase(a))


def format_poly(p: Polynomial) -> str:
    if p.is_zero:
        return "0"
    chunks = []
    for e, c in p.terms:
        if c.imag == 0:
            cs = f"{c.real:g}"
        else:
            cs = f"({c.real:g}{'+' if c.imag >= 0 else '-'}{abs(c.imag):g}i)"
        if e == 0:
            chunks.append(cs)
        else:
            es = f"X^{e:g}" if float(e).is_integer() else f"X^{{{e:g}}}"
            es = "X" if e == 1 else es
            chunks.append(f"{cs}{es}" if cs not in ("1",) else es)
    return " + ".join(chunks).replace("+ -", "- ")


_TERM_RE = re.compile(
    r"(?P<coeff>\([^)]*\)|[^X]*?)\s*(?P<var>X(?:\^(?:\{(?P<bexp>[-+0-9.eE/]+)\}|(?P<exp>[-+0-9.]+)))?)?$"
)


def _split_terms(text: str) -> list[str]:
    """Split on top-level +/- signs, keeping groups and `^-` exponents intact."""
    chunks: list[str] = []
    cur = ""
    depth = 0
    prev = ""
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if depth == 0 and ch == "+" and prev != "^":
            if cur.strip():
                chunks.append(cur)
            cur = ""
        elif depth == 0 and ch == "-" and prev != "^" and cur.strip():
            chunks.append(cur)
            cur = "-"
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if cur.strip():
        chunks.append(cur)
    return chunks


def parse_poly(text: str) -> Polynomial:
    """Parse `3X^2 + (1+2i)X - 5` or `2X^{0.5}` (real exponents in braces)."""
    from .csets import parse_celem

    acc: dict[float, complex] = {}
    for chunk in _split_terms(text):
        chunk = chunk.strip()
        if not chunk:
            continue
        m = _TERM_RE.fullmatch(chunk)
        if not m or (not m.group("var") and not m.group("coeff")):
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        cs = (m.group("coeff") or "").replace(" ", "")
        if cs.startswith("(") and cs.endswith(")"):
            cs = cs[1:-1]
        neg = False
        if cs == "-":
            cs, neg = "", True
        if cs in ("", None):
            coeff = complex(1)
        else:
            try:
                coeff = complex(cs.replace("i", "j"))
            except ValueError:
                coeff = parse_celem(cs).as_complex()
        if neg:
            coeff = -coeff
        if m.group("var"):
            exp = 1.0
            if m.group("exp") is not None:
                exp = float(m.group("exp"))
            elif m.group("bexp") is not None:
                bexp = m.group("bexp")
                exp = (
                    float(bexp.split("/")[0]) / float(bexp.split("/")[1])
                    if "/" in bexp
                    else float(bexp)
                )
        else:
            exp = 0.0
        acc[exp] = acc.get(exp, 0) + coeff
    return Polynomial.make(acc)


def _random_poly(rng: random.Random, real_exponents: bool = False) -> Polynomial:
    n_terms = rng.randint(1, 4)
    acc: dict[float, complex] = {}
    for _ in range(n_terms):
        e = round(rng.uniform(0.0, 4.0), 3) if real_exponents else float(rng.randint(0, 4))
        acc[e] = acc.get(e, 0) + complex(rng.gauss(0, 1), rng.gauss(0, 1))
    return Polynomial.make(acc)


def check_w_hom(
    budget: int = 300,
    rng: random.Random | None = None,
    tol: Tolerance = DEFAULT_TOL,
    real_exponents: bool = False,
) -> HomReport:
    """Verify w(p+q) ∈ w(p) ∔ w(q) and w(pq) = w(p)w(q) over three strata:
    generic pairs, equal-degree non-cancelling pairs, and engineered
    leading-term cancellations."""
    rng = rng or random.Random(0)
    rep = HomReport(name="w: C[X] -> TC")
    rep.strong = False  # the additive image is a single point, never the set
    rep.strong_exact = True
    wide = Tolerance(1e-7)  # atan2/exp noise on engineered cancellations

    def one_pair(p: Polynomial, q: Polynomial) -> None:
        rep.pairs_checked += 1
        wp, wq, wpq = w_map(p), w_map(q), w_map(p + q)
        if not cmember(wpq, ct_add(wp, wq, tol), wide):
            rep.additive = False
            if rep.witness is None:
                rep.witness = (p, q)
                rep.witness_text = f"({p}, {q})"
        prod = w_map(p * q)
        expect = wp.times(wq)
        if not prod.eq(expect, wide):
            rep.multiplicative = False
            if rep.witness is None:
                rep.witness = (p, q)
                rep.witness_text = f"({p}, {q})"

    per = max(1, budget // 3)
    for _ in range(per):  # generic
        one_pair(_random_poly(rng, real_exponents), _random_poly(rng, real_exponents))
    for _ in range(per):  # tied top degree, non-cancelling leaders
        p = _random_poly(rng, real_exponents)
        q = _random_poly(rng, real_exponents)
        e, c = p.leading()
        q2 = q + Polynomial.make({e: c * complex(rng.gauss(0, 1) or 1.0, rng.gauss(0, 1))})
        if not q2.is_zero and q2.degree() == e:
            one_pair(p, q2)
    for _ in range(per):  # engineered cancellation of the leading term
        p = _random_poly(rng, real_exponents)
        e, c = p.leading()
        filler = {ee: cc for ee, cc in _random_poly(rng, real_exponents).terms if ee < e}
        filler[e] = -c
        one_pair(p, Polynomial.make(filler))
    rep.kernel = ["0"]
    rep.mul_kernel = ["1"]
    return rep


# ---------------------------------------------------------------------------
# polynomials over an arbitrary structure, with set-valued evaluation


@dataclass(frozen=True)
class HFPolynomial:
    """Multivariate polynomial over a structure's carrier.

    Monomials evaluate univalently (multiplication is single-valued); the
    monomial values are then folded through the set-extended addition in
    stored order.
    """

    structure: Structure
    terms: tuple[tuple[tuple[int, ...], object], ...]  # (exponent vector, coeff)

    def arity(self) -> int:
        return len(self.terms[0][0]) if self.terms else 0


def hf_polynomial(structure: Structure, terms: list) -> HFPolynomial:
    """Build a structure polynomial from (exponents, coeff) pairs; exponent
    vectors must share one arity and repeat at most once."""
    if not terms:
        raise ValueError("polynomial needs at least one term")
    arity = len(terms[0][0])
    seen = set()
    for exps, _ in terms:
        if len(exps) != arity:
            raise ValueError("inconsistent arity across terms")
        if exps in seen:
            raise ValueError(f"duplicate exponent vector {exps}")
        seen.add(exps)
    ordered = tuple(sorted(terms, key=lambda t: t[0], reverse=True))
    return HFPolynomial(structure, ordered)


def hf_poly_eval(p: HFPolynomial, point: tuple) -> object:
    """Evaluate: univalued monomials, then a left fold of set-valued sums."""
    x = p.structure
    if p.terms and len(point) != len(p.terms[0][0]):
        raise ValueError(
            f"point arity {len(point)} != polynomial arity {len(p.terms[0][0])}"
        )
    acc = None
    for exps, coeff in p.terms:
        val = coeff
        for xi, e in zip(point, exps):
            for _ in range(e):
                val = x.mul(val, xi)
        if acc is None:
            acc = x.singleton(val)
        else:
            acc = x.add_sets(acc, x.singleton(val))
    return acc


def zero_set_member(p: HFPolynomial, point: tuple) -> bool:
    x = p.structure
    return x.member(x.zero, hf_poly_eval(p, point))


def parse_hf_poly(structure: Structure, text: str) -> HFPolynomial:
    """Univariate polynomial whose coefficients use the structure's element
    grammar: `2X^3 + 1`, coefficient literals per structure."""
    t = text.replace("-", "+-")
    if t.startswith("+-"):
        t = "-" + t[2:]
    terms: list = []
    for chunk in t.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "X" in chunk:
            cs, _, es = chunk.partition("X")
            cs = cs.strip().rstrip("*").strip()
            exp = 1
            if es.startswith("^"):
                exp = int(es[1:])
            coeff = structure.parse_elem(cs) if cs not in ("", "-") else (
                structure.neg(structure.one) if cs == "-" else structure.one
            )
        else:
            coeff = structure.parse_elem(chunk)
            exp = 0
        terms.append(((exp,), coeff))
    return hf_polynomial(structure, terms)
