"""Finite unions of closed real intervals (points are degenerate intervals).

Used for every R-like carrier: nonnegative reals, the real line, and the
tropical line R ∪ {-inf} where a down-set {x <= a} is the interval [-inf, a].
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .csets import InvalidSetError
from .tolerance import DEFAULT_TOL, NEG_INF, Tolerance, fmt_num


@dataclass(frozen=True, slots=True)
class RSet:
    """Sorted, pairwise-separated closed intervals (lo, hi); lo may be -inf."""

    intervals: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if not self.intervals:
            raise InvalidSetError("real value set must be nonempty")

    @property
    def lo(self) -> float:
        return self.intervals[0][0]

    @property
    def hi(self) -> float:
        return self.intervals[-1][1]

    def is_point(self) -> bool:
        return len(self.intervals) == 1 and self.intervals[0][0] == self.intervals[0][1]


def rpoint(x: float) -> RSet:
    return RSet(((x, x),))


def rinterval(lo: float, hi: float, tol: Tolerance = DEFAULT_TOL) -> RSet:
    return rset([(lo, hi)], tol)


def rset(pairs: list[tuple[float, float]], tol: Tolerance = DEFAULT_TOL) -> RSet:
    eps = tol.eps
    cleaned = []
    for lo, hi in pairs:
        if math.isnan(lo) or math.isnan(hi):
            raise InvalidSetError("interval endpoint is NaN")
        if lo > hi:
            if lo - hi <= eps:
                lo = hi = 0.5 * (lo + hi)
            else:
                raise InvalidSetError(f"inverted interval [{lo}, {hi}]")
        cleaned.append((lo, hi))
    cleaned.sort()
    merged: list[list[float]] = []
    for lo, hi in cleaned:
        if merged and lo <= merged[-1][1] + eps:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return RSet(tuple((lo, hi) for lo, hi in merged))


def runion(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> RSet:
    return rset(list(s1.intervals) + list(s2.intervals), tol)


def rmember(x: float, s: RSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    for lo, hi in s.intervals:
        if (x >= lo - tol.eps or x == lo) and (x <= hi + tol.eps or x == hi):
            return True
    return False


def _ends_close(a: float, b: float, tol: Tolerance) -> bool:
    if a == b:
        return True
    return abs(a - b) <= tol.eps


def rset_eq(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    a = rset(list(s1.intervals), tol)
    b = rset(list(s2.intervals), tol)
    if len(a.intervals) != len(b.intervals):
        return False
    return all(
        _ends_close(i[0], j[0], tol) and _ends_close(i[1], j[1], tol)
        for i, j in zip(a.intervals, b.intervals)
    )


def rsubset(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    n1 = rset(list(s1.intervals), tol)
    n2 = rset(list(s2.intervals), tol)
    for lo, hi in n1.intervals:
        if not any(
            (lo >= lo2 - tol.eps or lo == lo2) and (hi <= hi2 + tol.eps or hi == hi2)
            for lo2, hi2 in n2.intervals
        ):
            return False
    return True


def rpick(s: RSet, rng, count: int = 4, floor: float = -40.0) -> list[float]:
    """Sample points from each interval; unbounded-below intervals sample down
    to `floor` plus the -inf endpoint itself."""
    pts: list[float] = []
    for lo, hi in s.intervals:
        if lo == NEG_INF:
            pts.append(NEG_INF)
            base = min(hi, 0.0)
            pts.extend([hi, base - 1.0, base - 5.0])
            for _ in range(count):
                pts.append(hi - abs(rng.uniform(0.0, base - floor)))
        else:
            pts.extend([lo, hi, 0.5 * (lo + hi)])
            for _ in range(count):
                pts.append(rng.uniform(lo, hi))
    return pts


def format_rset(s: RSet) -> str:
    out = []
    for lo, hi in s.intervals:
        if lo == hi:
            out.append(f"point {fmt_num(lo)}")
        else:
            out.append(f"interval [{fmt_num(lo)},{fmt_num(hi)}]")
    return " | ".join(out)


def parse_rset(text: str) -> RSet:
    parts: list[tuple[float, float]] = []
    for chunk in text.split("|"):
        tok = chunk.strip()
        if tok.startswith("point "):
            v = float(tok[6:])
            parts.append((v, v))
        elif tok.startswith("interval "):
            body = tok[len("interval ") :].strip()
            if not (body.startswith("[") and body.endswith("]")):
                raise InvalidSetError(f"cannot parse interval {tok!r}")
            lo_s, hi_s = body[1:-1].split(",")
            parts.append((float(lo_s), float(hi_s)))
        else:
            raise InvalidSetError(f"cannot parse real-set chunk {tok!r}")
    return rset(parts)
