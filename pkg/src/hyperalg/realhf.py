"""The four hyperfield additions on nonnegative / extended real carriers.

* triangle:       a ∔ b = [|a-b|, a+b] on R+, usual multiplication
* ultratriangle:  max for distinct arguments, the down-set [0, a] on a tie
* tropical:       ultratriangle transported along log to R ∪ {-inf},
                  multiplication becomes ordinary addition
* amoeba:         triangle transported along log

The log transfers are computed cancellation-safely; -inf stands for log 0 and
all arithmetic involving it is cased explicitly.
"""
from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field

from .rsets import RSet, rinterval, rmember, rpoint, rset
from .tolerance import DEFAULT_TOL, NEG_INF, Tolerance


def _require_nonneg(*vals: float) -> None:
    for v in vals:
        if v < 0.0 or math.isnan(v):
            raise ValueError(f"carrier is the nonnegative reals, got {v}")


def tri_add(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> RSet:
    """Side lengths c completing a (possibly degenerate) triangle with a, b."""
    _require_nonneg(a, b)
    return rinterval(abs(a - b), a + b, tol)


def tri_sum_n(values: list[float], tol: Tolerance = DEFAULT_TOL) -> RSet:
    """Closed form of the iterated triangle sum: the polygon inequality."""
    if not values:
        raise ValueError("empty sum")
    _require_nonneg(*values)
    total = sum(values)
    lo = max(0.0, 2.0 * max(values) - total)
    return rinterval(lo, total, tol)


def tri_add_sets(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> RSet:
    out = []
    for lo1, hi1 in s1.intervals:
        for lo2, hi2 in s2.intervals:
            gap = max(0.0, lo1 - hi2, lo2 - hi1)
            out.append((gap, hi1 + hi2))
    return rset(out, tol)


def ultra_add(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> RSet:
    _require_nonneg(a, b)
    if not tol.close(a, b):
        return rpoint(max(a, b))
    return rinterval(0.0, max(a, b), tol)


def ultra_add_sets(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> RSet:
    out = []
    for lo1, hi1 in s1.intervals:
        for lo2, hi2 in s2.intervals:
            # down-sets and points only; a tie between touching components
            # produces the down-set below the tied value
            if hi2 < lo1 - tol.eps or hi1 < lo2 - tol.eps:
                m = max(hi1, hi2)
                out.append((m, m))
            else:
                out.append((0.0, max(hi1, hi2)))
    return rset(out, tol)


def trop_add(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> RSet:
    """Tropical sum on R ∪ {-inf}: max, or the down-set {x <= a} on a tie."""
    if a == NEG_INF and b == NEG_INF:
        return rpoint(NEG_INF)
    if a == NEG_INF:
        return rpoint(b)
    if b == NEG_INF:
        return rpoint(a)
    if not tol.close(a, b):
        return rpoint(max(a, b))
    return rinterval(NEG_INF, max(a, b), tol)


def trop_mul(a: float, b: float) -> float:
    if a == NEG_INF or b == NEG_INF:
        return NEG_INF
    return a + b


def trop_add_sets(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> RSet:
    out = []
    for lo1, hi1 in s1.intervals:
        for lo2, hi2 in s2.intervals:
            if hi2 < lo1 - tol.eps or hi1 < lo2 - tol.eps:
                m = max(hi1, hi2)
                out.append((m, m))
            else:
                out.append((NEG_INF, max(hi1, hi2)))
    return rset(out, tol)


def _log_exp_diff(a: float, b: float) -> float:
    """log(e^a - e^b) for a > b, computed as a + log(1 - e^(b-a))."""
    return a + math.log(-math.expm1(b - a))


def _log_exp_sum(a: float, b: float) -> float:
    """log(e^a + e^b), safe for -inf arguments."""
    if a == NEG_INF:
        return b
    if b == NEG_INF:
        return a
    m = max(a, b)
    return m + math.log1p(math.exp(-abs(a - b)))


def amoeba_add(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> RSet:
    """Triangle addition in log scale: [log|e^a - e^b|, log(e^a + e^b)]."""
    if a == NEG_INF and b == NEG_INF:
        return rpoint(NEG_INF)
    if a == NEG_INF:
        return rpoint(b)
    if b == NEG_INF:
        return rpoint(a)
    hi = _log_exp_sum(a, b)
    if abs(a - b) <= tol.eps:  # exact-symmetry branch: avoid log of a cancellation
        return rinterval(NEG_INF, hi, tol)
    lo = _log_exp_diff(max(a, b), min(a, b))
    return rinterval(lo, hi, tol)


def amoeba_add_sets(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> RSet:
    out = []
    for lo1, hi1 in s1.intervals:
        for lo2, hi2 in s2.intervals:
            hi = _log_exp_sum(hi1, hi2)
            # gap between the exp-images decides the lower endpoint
            if lo1 > hi2 + tol.eps:
                lo = _log_exp_diff(lo1, hi2)
            elif lo2 > hi1 + tol.eps:
                lo = _log_exp_diff(lo2, hi1)
            else:
                lo = NEG_INF
            out.append((lo, hi))
    return rset(out, tol)


@dataclass
class SeminormReport:
    """Verdicts for a candidate multiplicative seminorm on a sampled ring."""

    kind: str
    triangle_ok: bool = True
    multiplicative_ok: bool = True
    valuation_ok: bool = True
    witness: tuple | None = None
    checked: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.triangle_ok and self.multiplicative_ok and self.valuation_ok


def check_seminorm(
    norm,
    sample: list,
    kind: str = "archimedean",
    add=operator.add,
    mul=operator.mul,
    tol: Tolerance = DEFAULT_TOL,
) -> SeminormReport:
    """Verify |x+y| lands in the triangle (resp. ultratriangle) sum of |x|, |y|
    and that |xy| = |x||y|, over all pairs from `sample`.

    For the non-archimedean kind the log-composed map is also checked as a
    containment into the tropical sum.
    """
    if kind not in ("archimedean", "non-archimedean"):
        raise ValueError(f"unknown seminorm kind {kind!r}")
    rep = SeminormReport(kind=kind)
    for x in sample:
        for y in sample:
            rep.checked += 1
            nx, ny, nxy = norm(x), norm(y), norm(add(x, y))
            target = tri_add(nx, ny, tol) if kind == "archimedean" else ultra_add(nx, ny, tol)
            # comparisons scale with the operands, so widen the tolerance
            wide = Tolerance(max(tol.eps, tol.eps * max(nx, ny, 1.0) * 8))
            if not rmember(nxy, target, wide):
                rep.triangle_ok = False
                rep.witness = rep.witness or (x, y)
            prod = norm(mul(x, y))
            if abs(prod - nx * ny) > wide.eps * max(1.0, nx * ny):
                rep.multiplicative_ok = False
                rep.witness = rep.witness or (x, y)
            if kind == "non-archimedean":
                lx = NEG_INF if nx == 0.0 else math.log(nx)
                ly = NEG_INF if ny == 0.0 else math.log(ny)
                lxy = NEG_INF if nxy == 0.0 else math.log(nxy)
                if not rmember(lxy, trop_add(lx, ly, tol), wide):
                    rep.valuation_ok = False
                    rep.witness = rep.witness or (x, y)
    return rep
