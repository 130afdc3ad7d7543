"""Symbolic subsets of the complex plane used as multivalued sums.

Every set that arises from the tropical additions over C is a finite union of
three primitives: a single point, an arc of a circle centred at the origin
(traversed counterclockwise, full circles flagged), and a closed disk centred
at the origin.  Sets are normalized to a canonical component list so equality
and containment can be decided componentwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .tolerance import DEFAULT_TOL, TWO_PI, Tolerance, circ_dist, fmt_num, wrap_angle


class InvalidSetError(ValueError):
    """A value-set component is malformed (e.g. an arc of zero radius)."""


class CarrierMismatchError(TypeError):
    """Operands belong to different carriers."""


class RepresentationClosureError(RuntimeError):
    """A set-extended operation produced a set outside the symbolic vocabulary."""


# ---------------------------------------------------------------------------
# carrier elements


@dataclass(frozen=True, slots=True)
class ComplexElem:
    """A complex number in polar form; zero is canonically 0∠0."""

    modulus: float
    argument: float

    def __post_init__(self) -> None:
        m = float(self.modulus)
        if m < 0.0 or math.isnan(m):
            raise InvalidSetError(f"modulus must be nonnegative, got {m}")
        a = 0.0 if m == 0.0 else wrap_angle(float(self.argument))
        object.__setattr__(self, "modulus", m)
        object.__setattr__(self, "argument", a)

    @classmethod
    def from_xy(cls, x: float, y: float) -> "ComplexElem":
        return cls(math.hypot(x, y), math.atan2(y, x))

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexElem":
        return cls.from_xy(z.real, z.imag)

    @property
    def re(self) -> float:
        return self.modulus * math.cos(self.argument)

    @property
    def im(self) -> float:
        return self.modulus * math.sin(self.argument)

    def as_complex(self) -> complex:
        return complex(self.re, self.im)

    def __neg__(self) -> "ComplexElem":
        return ComplexElem(self.modulus, self.argument + math.pi)

    def times(self, other: "ComplexElem") -> "ComplexElem":
        return ComplexElem(self.modulus * other.modulus, self.argument + other.argument)

    def inv(self) -> "ComplexElem":
        if self.modulus == 0.0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return ComplexElem(1.0 / self.modulus, -self.argument)

    def eq(self, other: "ComplexElem", tol: Tolerance = DEFAULT_TOL) -> bool:
        if not tol.close(self.modulus, other.modulus):
            return False
        if min(self.modulus, other.modulus) <= tol.eps:
            return True
        return tol.angle_close(self.argument, other.argument)


CZERO = ComplexElem(0.0, 0.0)
CONE = ComplexElem(1.0, 0.0)


# ---------------------------------------------------------------------------
# set components


@dataclass(frozen=True, slots=True)
class CPoint:
    elem: ComplexElem


@dataclass(frozen=True, slots=True)
class CArc:
    """Arc of the circle |z| = radius from `start`, counterclockwise by `sweep`.

    Full circles are stored with full=True, start=0 and sweep=2*pi.
    """

    radius: float
    start: float
    sweep: float
    full: bool = False

    def __post_init__(self) -> None:
        r = float(self.radius)
        if not r > 0.0:
            raise InvalidSetError(f"arc of nonpositive radius {r}")
        if self.full:
            object.__setattr__(self, "start", 0.0)
            object.__setattr__(self, "sweep", TWO_PI)
        else:
            sw = float(self.sweep)
            if not 0.0 < sw < TWO_PI:
                raise InvalidSetError(f"arc sweep must lie in (0, 2*pi), got {sw}")
            object.__setattr__(self, "start", wrap_angle(float(self.start)))
        object.__setattr__(self, "radius", r)

    @property
    def end(self) -> float:
        return wrap_angle(self.start + self.sweep)

    def contains_angle(self, theta: float, eps: float) -> bool:
        if self.full:
            return True
        off = wrap_angle(theta - self.start)
        return off <= self.sweep + eps or off >= TWO_PI - eps


@dataclass(frozen=True, slots=True)
class CDisk:
    """Closed disk |z| <= radius centred at the origin."""

    radius: float

    def __post_init__(self) -> None:
        r = float(self.radius)
        if r < 0.0:
            raise InvalidSetError(f"disk of negative radius {r}")
        object.__setattr__(self, "radius", r)


@dataclass(frozen=True, slots=True)
class CUnion:
    parts: tuple

    def __post_init__(self) -> None:
        if len(self.parts) < 2:
            raise InvalidSetError("union must have at least two components")


CSet = CPoint | CArc | CDisk | CUnion


def arc(radius: float, start: float, sweep: float, tol: Tolerance = DEFAULT_TOL) -> CArc | CPoint:
    """Tolerant arc constructor: promotes near-full sweeps, degrades tiny ones."""
    if sweep <= tol.eps:
        return CPoint(ComplexElem(radius, start))
    if sweep >= TWO_PI - tol.eps:
        return CArc(radius, 0.0, TWO_PI, full=True)
    return CArc(radius, start, sweep)


def full_circle(radius: float) -> CArc:
    return CArc(radius, 0.0, TWO_PI, full=True)


def parts_of(s: CSet) -> list:
    return list(s.parts) if isinstance(s, CUnion) else [s]


# ---------------------------------------------------------------------------
# normalization


def _sort_key(c) -> tuple:
    if isinstance(c, CDisk):
        return (0, c.radius, 0.0, 0.0)
    if isinstance(c, CArc):
        return (1, c.radius, 0.0 if c.full else 1.0, c.start)
    return (2, c.elem.modulus, c.elem.argument, 0.0)


def _merge_radius_arcs(radius: float, arcs: list, eps: float) -> list:
    """Merge arcs of one radius circularly; may return a single full circle."""
    if any(a.full for a in arcs):
        return [full_circle(radius)]
    segs = sorted((a.start, a.start + a.sweep) for a in arcs)
    merged: list[list[float]] = []
    for s, e in segs:
        if merged and s <= merged[-1][1] + eps:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    if len(merged) > 1 and merged[-1][1] + eps >= merged[0][0] + TWO_PI:
        # the last segment wraps around onto the first
        merged[0][0] = merged[-1][0] - TWO_PI
        merged[0][1] = max(merged[0][1], merged[-1][1] - TWO_PI)
        merged.pop()
    out = []
    for s, e in merged:
        if e - s >= TWO_PI - eps:
            return [full_circle(radius)]
        out.append(CArc(radius, wrap_angle(s), e - s))
    return out


def normalize_parts(parts: list, tol: Tolerance = DEFAULT_TOL) -> CSet:
    eps = tol.eps
    flat: list = []
    for p in parts:
        flat.extend(parts_of(p))
    if not flat:
        raise InvalidSetError("value set must be nonempty")

    disk_r = -1.0
    for c in flat:
        if isinstance(c, CDisk):
            disk_r = max(disk_r, c.radius)
    points: list[ComplexElem] = []
    arcs: list[CArc] = []
    for c in flat:
        if isinstance(c, CDisk):
            continue
        if isinstance(c, CArc):
            if c.radius > disk_r + eps:
                arcs.append(c)
        else:
            if c.elem.modulus > disk_r + eps:
                points.append(c.elem)

    out: list = []
    if disk_r >= 0.0:
        if disk_r <= eps:
            points.append(CZERO)
        else:
            out.append(CDisk(disk_r))

    # group arcs by radius and merge within each group
    arc_groups: list[list[CArc]] = []
    for a in sorted(arcs, key=lambda a: a.radius):
        if arc_groups and a.radius - arc_groups[-1][0].radius <= eps:
            arc_groups[-1].append(a)
        else:
            arc_groups.append([a])
    merged_arcs: list[CArc] = []
    for group in arc_groups:
        merged_arcs.extend(_merge_radius_arcs(group[0].radius, group, eps))

    # points absorbed by arcs of the same radius, then deduplicated
    kept: list[ComplexElem] = []
    for p in sorted(points, key=lambda e: (e.modulus, e.argument)):
        absorbed = any(
            abs(p.modulus - a.radius) <= eps and a.contains_angle(p.argument, eps)
            for a in merged_arcs
        )
        if absorbed:
            continue
        if kept and p.eq(kept[-1], tol):
            continue
        if any(p.eq(q, tol) for q in kept):
            continue
        kept.append(p)

    out.extend(merged_arcs)
    out.extend(CPoint(p) for p in kept)
    out.sort(key=_sort_key)
    if not out:
        raise InvalidSetError("normalization emptied the value set")
    if len(out) == 1:
        return out[0]
    return CUnion(tuple(out))


def normalize(s: CSet, tol: Tolerance = DEFAULT_TOL) -> CSet:
    return normalize_parts([s], tol)


# ---------------------------------------------------------------------------
# membership / union / equality / containment


def member(x: ComplexElem, s: CSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    if not isinstance(x, ComplexElem):
        raise CarrierMismatchError(f"expected ComplexElem, got {type(x).__name__}")
    for c in parts_of(s):
        if isinstance(c, CPoint):
            if x.eq(c.elem, tol):
                return True
        elif isinstance(c, CDisk):
            if x.modulus <= c.radius + tol.eps:
                return True
        else:
            if abs(x.modulus - c.radius) <= tol.eps and c.contains_angle(x.argument, tol.eps):
                return True
    return False


def union(s1: CSet, s2: CSet, tol: Tolerance = DEFAULT_TOL) -> CSet:
    return normalize_parts(parts_of(s1) + parts_of(s2), tol)


def _comp_eq(c1, c2, tol: Tolerance) -> bool:
    if isinstance(c1, CDisk) and isinstance(c2, CDisk):
        return tol.close(c1.radius, c2.radius)
    if isinstance(c1, CArc) and isinstance(c2, CArc):
        if not tol.close(c1.radius, c2.radius):
            return False
        if c1.full or c2.full:
            return c1.full and c2.full
        return circ_dist(c1.start, c2.start) <= tol.eps and abs(c1.sweep - c2.sweep) <= 2 * tol.eps
    if isinstance(c1, CPoint) and isinstance(c2, CPoint):
        return c1.elem.eq(c2.elem, tol)
    return False


def _match_components(p1: list, p2: list, comp_eq, tol: Tolerance) -> bool:
    if len(p1) != len(p2):
        return False
    remaining = list(p2)
    for c in p1:
        for i, d in enumerate(remaining):
            if comp_eq(c, d, tol):
                del remaining[i]
                break
        else:
            return False
    return True


def set_eq(s1: CSet, s2: CSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    n1 = normalize(s1, tol)
    n2 = normalize(s2, tol)
    return _match_components(parts_of(n1), parts_of(n2), _comp_eq, tol)


def subset(s1: CSet, s2: CSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Containment of normalized symbolic sets, decided componentwise."""
    n1 = normalize(s1, tol)
    n2 = normalize(s2, tol)
    eps = tol.eps
    for c in parts_of(n1):
        ok = False
        for d in parts_of(n2):
            if isinstance(d, CDisk):
                top = (
                    c.radius if isinstance(c, (CDisk, CArc)) else c.elem.modulus
                )
                if top <= d.radius + eps:
                    ok = True
                    break
            elif isinstance(c, CPoint):
                if member(c.elem, d, tol):
                    ok = True
                    break
            elif isinstance(c, CArc) and isinstance(d, CArc):
                if not tol.close(c.radius, d.radius):
                    continue
                if d.full:
                    ok = True
                    break
                if c.full:
                    continue
                off = wrap_angle(c.start - d.start)
                if off >= TWO_PI - eps:  # starts within eps before d
                    off = 0.0
                if d.contains_angle(c.start, eps) and off + c.sweep <= d.sweep + 2 * eps:
                    ok = True
                    break
        if not ok:
            return False
    return True


def pick(s: CSet, rng, count: int = 4) -> list[ComplexElem]:
    """Deterministic-in-rng sample of carrier points from a value set.

    Includes the distinguished points of each component (endpoints, centre)
    so that boundary cases are always exercised.
    """
    pts: list[ComplexElem] = []
    for c in parts_of(s):
        if isinstance(c, CPoint):
            pts.append(c.elem)
        elif isinstance(c, CArc):
            if c.full:
                pts.append(ComplexElem(c.radius, 0.0))
                pts.append(ComplexElem(c.radius, math.pi))
            else:
                pts.append(ComplexElem(c.radius, c.start))
                pts.append(ComplexElem(c.radius, c.start + c.sweep))
                pts.append(ComplexElem(c.radius, c.start + 0.5 * c.sweep))
            for _ in range(count):
                off = rng.uniform(0.0, c.sweep)
                pts.append(ComplexElem(c.radius, c.start + off))
        else:
            pts.append(CZERO)
            pts.append(ComplexElem(c.radius, rng.uniform(0.0, TWO_PI)))
            for _ in range(count):
                pts.append(
                    ComplexElem(c.radius * rng.random(), rng.uniform(0.0, TWO_PI))
                )
    return pts


# ---------------------------------------------------------------------------
# text forms


def format_celem(e: ComplexElem) -> str:
    return f"{fmt_num(e.modulus)}∠{fmt_num(e.argument)}"


def format_cset(s: CSet) -> str:
    out = []
    for c in parts_of(s):
        if isinstance(c, CPoint):
            out.append(f"point {format_celem(c.elem)}")
        elif isinstance(c, CDisk):
            out.append(f"disk r={fmt_num(c.radius)}")
        elif c.full:
            out.append(f"circle r={fmt_num(c.radius)}")
        else:
            out.append(
                f"arc r={fmt_num(c.radius)} from={fmt_num(c.start)} sweep={fmt_num(c.sweep)}"
            )
    return " | ".join(out)


def parse_celem(text: str) -> ComplexElem:
    """Parse `m∠θ`, ASCII `m@θ`, or cartesian `x+yi` forms."""
    t = text.strip()
    for sep in ("∠", "@"):
        if sep in t:
            m_s, a_s = t.split(sep, 1)
            return ComplexElem(float(m_s), float(a_s))
    if t.endswith(("i", "j")) or "i" in t or "j" in t:
        try:
            z = complex(t.replace(" ", "").replace("i", "j"))
            return ComplexElem.from_complex(z)
        except ValueError as exc:
            raise InvalidSetError(f"cannot parse complex literal {text!r}") from exc
    try:
        return ComplexElem.from_complex(complex(float(t), 0.0))
    except ValueError as exc:
        raise InvalidSetError(f"cannot parse complex literal {text!r}") from exc


def parse_cset(text: str) -> CSet:
    parts: list = []
    for chunk in text.split("|"):
        tok = chunk.strip()
        if tok.startswith("point "):
            parts.append(CPoint(parse_celem(tok[6:])))
        elif tok.startswith("disk "):
            parts.append(CDisk(float(tok.split("r=", 1)[1])))
        elif tok.startswith("circle "):
            parts.append(full_circle(float(tok.split("r=", 1)[1])))
        elif tok.startswith("arc "):
            fields = dict(kv.split("=", 1) for kv in tok[4:].split())
            parts.append(CArc(float(fields["r"]), float(fields["from"]), float(fields["sweep"])))
        else:
            raise InvalidSetError(f"cannot parse value-set chunk {tok!r}")
    return normalize_parts(parts)
