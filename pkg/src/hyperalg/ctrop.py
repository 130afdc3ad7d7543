"""Tropical addition over C, R, the phase circle, and the quaternions.

The binary sum of complex numbers is the dominant operand when moduli differ,
the shortest arc between them on their common circle when moduli tie, and the
whole closed disk when the operands cancel.  Set-extended sums are computed by
closed-form component rules, never by discretization, so set equalities can
be certified exactly.
"""
from __future__ import annotations

import math

from .csets import (
    CArc,
    CDisk,
    CPoint,
    CSet,
    CUnion,
    CZERO,
    ComplexElem,
    InvalidSetError,
    RepresentationClosureError,
    arc,
    full_circle,
    normalize,
    normalize_parts,
    parts_of,
)
from .qsets import (
    QArc,
    QBall,
    QCone,
    QPoint,
    QSet,
    QUnion,
    QZERO,
    QuatElem,
    in_cone,
    qnormalize,
    qparts_of,
)
from .rsets import RSet, rinterval, rpoint, rset
from .tolerance import DEFAULT_TOL, TWO_PI, Tolerance, wrap_angle


# ---------------------------------------------------------------------------
# binary sums


def ct_add(a: ComplexElem, b: ComplexElem, tol: Tolerance = DEFAULT_TOL) -> CSet:
    ra, rb = a.modulus, b.modulus
    if abs(ra - rb) > tol.eps:
        return CPoint(a if ra > rb else b)
    if max(ra, rb) <= tol.eps:
        return CPoint(CZERO)
    r = max(ra, rb)
    z = a.as_complex() + b.as_complex()
    if abs(z) < tol.eps * r:  # antipodal cutoff: discontinuous branch
        return CDisk(r)
    delta = wrap_angle(b.argument - a.argument)
    if delta <= tol.eps or delta >= TWO_PI - tol.eps:
        return CPoint(ComplexElem(r, a.argument))
    if delta <= math.pi:
        return CArc(r, a.argument, delta)
    return CArc(r, b.argument, TWO_PI - delta)


def _minor_arc_parts(radius: float, alpha: float, beta: float, tol: Tolerance) -> list:
    """Components of the minor arc between two angles on one circle."""
    delta = wrap_angle(beta - alpha)
    if delta <= tol.eps or delta >= TWO_PI - tol.eps:
        return [CPoint(ComplexElem(radius, alpha))]
    if delta <= math.pi:
        return [CArc(radius, alpha, delta)]
    return [CArc(radius, beta, TWO_PI - delta)]


def _arc_angles(a: CArc) -> tuple[float, float]:
    return a.start, a.start + a.sweep


def _point_point(p: ComplexElem, q: ComplexElem, tol: Tolerance) -> list:
    return parts_of(ct_add(p, q, tol))


def _point_arc(p: ComplexElem, a: CArc, tol: Tolerance) -> list:
    eps = tol.eps
    if p.modulus > a.radius + eps:
        return [CPoint(p)]
    if p.modulus < a.radius - eps:
        return [a]
    r = max(p.modulus, a.radius)
    if a.full:
        return [CDisk(r)]
    if a.contains_angle(wrap_angle(p.argument + math.pi), eps):
        return [CDisk(r)]
    out: list = [a]
    s, e = _arc_angles(a)
    out.extend(_minor_arc_parts(r, s, p.argument, tol))
    out.extend(_minor_arc_parts(r, e, p.argument, tol))
    return out


def _point_disk(p: ComplexElem, d: CDisk, tol: Tolerance) -> list:
    if p.modulus > d.radius + tol.eps:
        return [CPoint(p)]
    return [d]


def _arcs_have_antipodes(a1: CArc, a2: CArc, eps: float) -> bool:
    """Does a2 contain -x for some x in a1 (same radius assumed)?"""
    if a1.full or a2.full:
        return True
    s2 = wrap_angle(a2.start + math.pi)  # a2 rotated by pi
    e2 = s2 + a2.sweep
    # circular interval intersection of [a1.start, +sweep] and [s2, +sweep]
    off = wrap_angle(s2 - a1.start)
    if off <= a1.sweep + eps:
        return True
    off2 = wrap_angle(a1.start - s2)
    return off2 <= a2.sweep + eps


def _arc_arc(a1: CArc, a2: CArc, tol: Tolerance) -> list:
    eps = tol.eps
    if a1.radius > a2.radius + eps:
        return [a1]
    if a2.radius > a1.radius + eps:
        return [a2]
    r = max(a1.radius, a2.radius)
    if _arcs_have_antipodes(a1, a2, eps):
        return [CDisk(r)]
    # no antipodal pair: the union of minor arcs is spanned by the corner
    # connections between endpoints plus the arcs themselves
    out: list = [CArc(r, a1.start, a1.sweep), CArc(r, a2.start, a2.sweep)]
    for ang1 in _arc_angles(a1):
        for ang2 in _arc_angles(a2):
            out.extend(_minor_arc_parts(r, ang1, ang2, tol))
    return out


def _disk_any(d: CDisk, other, tol: Tolerance) -> list:
    eps = tol.eps
    if isinstance(other, CPoint):
        return _point_disk(other.elem, d, tol)
    if isinstance(other, CDisk):
        return [CDisk(max(d.radius, other.radius))]
    if isinstance(other, CArc):
        if other.radius > d.radius + eps:
            return [other]
        return [CDisk(d.radius)]
    raise RepresentationClosureError(f"disk + {type(other).__name__}")


def _ct_add_comps(c1, c2, tol: Tolerance) -> list:
    if isinstance(c1, CDisk):
        return _disk_any(c1, c2, tol)
    if isinstance(c2, CDisk):
        return _disk_any(c2, c1, tol)
    if isinstance(c1, CPoint) and isinstance(c2, CPoint):
        return _point_point(c1.elem, c2.elem, tol)
    if isinstance(c1, CPoint) and isinstance(c2, CArc):
        return _point_arc(c1.elem, c2, tol)
    if isinstance(c1, CArc) and isinstance(c2, CPoint):
        return _point_arc(c2.elem, c1, tol)
    if isinstance(c1, CArc) and isinstance(c2, CArc):
        return _arc_arc(c1, c2, tol)
    raise RepresentationClosureError(
        f"unsupported component pair {type(c1).__name__} + {type(c2).__name__}"
    )


def ct_add_sets(s1: CSet, s2: CSet, tol: Tolerance = DEFAULT_TOL) -> CSet:
    out: list = []
    for c1 in parts_of(normalize(s1, tol)):
        for c2 in parts_of(normalize(s2, tol)):
            out.extend(_ct_add_comps(c1, c2, tol))
    return normalize_parts(out, tol)


# ---------------------------------------------------------------------------
# pointwise multiplication of value sets (rotation/scaling closed forms)


def cset_scale(s: CSet, f: ComplexElem, tol: Tolerance = DEFAULT_TOL) -> CSet:
    if f.modulus == 0.0:
        return CPoint(CZERO)
    out: list = []
    for c in parts_of(s):
        if isinstance(c, CPoint):
            out.append(CPoint(c.elem.times(f)))
        elif isinstance(c, CDisk):
            out.append(CDisk(c.radius * f.modulus))
        elif c.full:
            out.append(full_circle(c.radius * f.modulus))
        else:
            out.append(CArc(c.radius * f.modulus, c.start + f.argument, c.sweep))
    return normalize_parts(out, tol)


def _cmul_comps(c1, c2, tol: Tolerance) -> list:
    if isinstance(c1, CPoint):
        return parts_of(cset_scale(c2, c1.elem, tol))
    if isinstance(c2, CPoint):
        return parts_of(cset_scale(c1, c2.elem, tol))
    if isinstance(c1, CDisk) or isinstance(c2, CDisk):
        r1 = c1.radius
        r2 = c2.radius
        return [CDisk(r1 * r2)]
    # arc times arc: moduli multiply, angle intervals add
    r = c1.radius * c2.radius
    if c1.full or c2.full:
        return [full_circle(r)]
    return [arc(r, c1.start + c2.start, c1.sweep + c2.sweep, tol)]


def ct_mul_sets(s1: CSet, s2: CSet, tol: Tolerance = DEFAULT_TOL) -> CSet:
    out: list = []
    for c1 in parts_of(normalize(s1, tol)):
        for c2 in parts_of(normalize(s2, tol)):
            out.extend(_cmul_comps(c1, c2, tol))
    return normalize_parts(out, tol)


# ---------------------------------------------------------------------------
# n-ary sums and the convex-hull criterion


def zero_in_convex_hull(points: list[ComplexElem], tol: Tolerance = DEFAULT_TOL) -> bool:
    """Is the origin inside the closed convex hull of the given points?

    Decided on the circular gaps between point directions; points within
    tolerance of the origin count as the origin itself.
    """
    scale = max((p.modulus for p in points), default=0.0)
    if scale <= tol.eps:
        return True
    angles = sorted(
        wrap_angle(p.argument) for p in points if p.modulus > tol.eps * scale
    )
    if any(p.modulus <= tol.eps * scale for p in points):
        return True
    if not angles:
        return True
    gaps = [b - a for a, b in zip(angles, angles[1:])]
    gaps.append(angles[0] + TWO_PI - angles[-1])
    return max(gaps) <= math.pi + tol.eps


def zero_in_sum(values: list[ComplexElem], tol: Tolerance = DEFAULT_TOL) -> bool:
    """0 lies in the tropical sum iff it lies in the convex hull of the
    summands of greatest modulus."""
    if not values:
        raise ValueError("empty sum")
    rmax = max(v.modulus for v in values)
    if rmax <= tol.eps:
        return True
    tops = [v for v in values if v.modulus >= rmax - tol.eps]
    return zero_in_convex_hull(tops, tol)


def ct_sum_n(values: list[ComplexElem], tol: Tolerance = DEFAULT_TOL) -> CSet:
    """Closed form of the iterated tropical sum: only maximal-modulus summands
    contribute; the result is a disk exactly when their hull captures 0,
    otherwise the minor arc spanned by the extreme summands (or a point)."""
    if not values:
        raise ValueError("empty sum")
    rmax = max(v.modulus for v in values)
    if rmax <= tol.eps:
        return CPoint(CZERO)
    tops = [v for v in values if v.modulus >= rmax - tol.eps]
    if zero_in_convex_hull(tops, tol):
        return CDisk(rmax)
    # all tops sit in an open half-plane; take the angular hull
    sx = sum(math.cos(v.argument) for v in tops)
    sy = sum(math.sin(v.argument) for v in tops)
    ref = math.atan2(sy, sx)
    offs = []
    for v in tops:
        d = wrap_angle(v.argument - ref)
        if d > math.pi:
            d -= TWO_PI
        offs.append(d)
    lo, hi = min(offs), max(offs)
    if hi - lo <= tol.eps:
        return CPoint(ComplexElem(rmax, ref + lo))
    return CArc(rmax, wrap_angle(ref + lo), hi - lo)


# ---------------------------------------------------------------------------
# real tropical hyperfield


def rt_add(a: float, b: float, tol: Tolerance = DEFAULT_TOL) -> RSet:
    ma, mb = abs(a), abs(b)
    if max(ma, mb) <= tol.eps:
        return rpoint(0.0)
    if abs(ma - mb) > tol.eps:
        return rpoint(a if ma > mb else b)
    m = max(ma, mb)
    if abs(a + b) <= tol.eps * m:
        return rinterval(-m, m, tol)
    return rpoint(a if ma >= mb else b)


def rt_add_sets(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> RSet:
    """Set extension over the real tropical carrier.

    Components are points and symmetric intervals [-m, m]; nothing else can
    arise from rt_add.
    """
    eps = tol.eps
    out: list[tuple[float, float]] = []
    for lo1, hi1 in s1.intervals:
        for lo2, hi2 in s2.intervals:
            p1 = lo1 == hi1
            p2 = lo2 == hi2
            if p1 and p2:
                out.extend(rt_add(lo1, lo2, tol).intervals)
                continue
            if p1 or p2:
                point, (lo, hi) = (lo1, (lo2, hi2)) if p1 else (lo2, (lo1, hi1))
                if abs(lo + hi) > eps * max(abs(lo), abs(hi), 1.0):
                    raise RepresentationClosureError(
                        f"asymmetric interval [{lo},{hi}] in real tropical sum"
                    )
                if abs(point) > hi + eps:
                    out.append((point, point))
                else:
                    out.append((lo, hi))
                continue
            # two symmetric intervals: the larger absorbs the smaller
            m = max(hi1, hi2)
            out.append((-m, m))
    return rset(out, tol)


def rt_mul_sets(s1: RSet, s2: RSet, tol: Tolerance = DEFAULT_TOL) -> RSet:
    out = []
    for lo1, hi1 in s1.intervals:
        for lo2, hi2 in s2.intervals:
            prods = (lo1 * lo2, lo1 * hi2, hi1 * lo2, hi1 * hi2)
            out.append((min(prods), max(prods)))
    return rset(out, tol)


# ---------------------------------------------------------------------------
# phase hyperfield (unit circle plus 0)


def _check_phase_elem(a: ComplexElem, tol: Tolerance) -> None:
    if a.modulus > tol.eps and abs(a.modulus - 1.0) > tol.eps:
        raise ValueError(f"phase carrier holds units and zero, got modulus {a.modulus}")


def _phase_clip(s: CSet, tol: Tolerance) -> CSet:
    """Intersect a complex value set with the unit circle ∪ {0}."""
    out: list = []
    for c in parts_of(s):
        if isinstance(c, CDisk):
            if abs(c.radius - 1.0) <= tol.eps:
                out.extend([full_circle(1.0), CPoint(CZERO)])
            elif c.radius <= tol.eps:
                out.append(CPoint(CZERO))
            else:  # cannot happen for sums of units: radii are 0 or 1
                raise RepresentationClosureError("phase sum left the carrier")
        else:
            out.append(c)
    return normalize_parts(out, tol)


def phase_add(a: ComplexElem, b: ComplexElem, tol: Tolerance = DEFAULT_TOL) -> CSet:
    _check_phase_elem(a, tol)
    _check_phase_elem(b, tol)
    return _phase_clip(ct_add(a, b, tol), tol)


def phase_add_sets(s1: CSet, s2: CSet, tol: Tolerance = DEFAULT_TOL) -> CSet:
    return _phase_clip(ct_add_sets(s1, s2, tol), tol)


# ---------------------------------------------------------------------------
# quaternions


def quat_add(a: QuatElem, b: QuatElem, tol: Tolerance = DEFAULT_TOL) -> QSet:
    na, nb = a.norm, b.norm
    if abs(na - nb) > tol.eps:
        return QPoint(a if na > nb else b)
    if max(na, nb) <= tol.eps:
        return QPoint(QZERO)
    r = max(na, nb)
    s = a.add(b)
    if s.norm < tol.eps * r:
        return QBall(r)
    if a.dist(b) <= tol.eps:
        return QPoint(a)
    return QArc(a, b)


def _q_same_plane(units: list[tuple], extra: tuple, eps: float) -> bool:
    """Does `extra` lie in the linear span of two unit vectors?"""
    u, v = units
    # Gram-Schmidt residual of extra against span(u, v)
    proj_u = sum(extra[i] * u[i] for i in range(4))
    w = tuple(v[i] - sum(v[j] * u[j] for j in range(4)) * u[i] for i in range(4))
    wn = math.sqrt(sum(x * x for x in w))
    if wn < 1e-12:
        w = (0.0, 0.0, 0.0, 0.0)
        proj_w = 0.0
    else:
        w = tuple(x / wn for x in w)
        proj_w = sum(extra[i] * w[i] for i in range(4))
    res = tuple(extra[i] - proj_u * u[i] - proj_w * w[i] for i in range(4))
    return math.sqrt(sum(x * x for x in res)) <= max(eps, 1e-9)


def _qarc_point(a: QArc, p: QuatElem, tol: Tolerance) -> list:
    eps = tol.eps
    r = a.radius
    if p.norm > r + eps:
        return [QPoint(p)]
    if p.norm < r - eps:
        return [a]
    ua, ub, up = a.a.unit(), a.b.unit(), p.unit()
    minus = tuple(-x for x in up)
    if in_cone(minus, [ua, ub], eps):
        return [QBall(r)]
    if _q_same_plane([ua, ub], up, eps):
        # coplanar: reduce to the circle rules on that great circle
        return _qarc_point_coplanar(a, p, r, tol)
    return [QCone((a.a, a.b, QuatElem(*(x * r for x in up))))]


def _qarc_point_coplanar(a: QArc, p: QuatElem, r: float, tol: Tolerance) -> list:
    """Arc + equal-norm point on the same great circle: hull-arc rule."""
    ua, ub, up = a.a.unit(), a.b.unit(), p.unit()
    # planar basis (e1, e2) of span(ua, ub)
    e1 = ua
    w = tuple(ub[i] - sum(ub[j] * e1[j] for j in range(4)) * e1[i] for i in range(4))
    wn = math.sqrt(sum(x * x for x in w))
    if wn < 1e-12:  # degenerate arc (a == b); treat as two points
        return [QPoint(a.a), QPoint(QuatElem(*(x * r for x in up)))]
    e2 = tuple(x / wn for x in w)

    def ang(u: tuple) -> float:
        return math.atan2(
            sum(u[i] * e2[i] for i in range(4)), sum(u[i] * e1[i] for i in range(4))
        )

    th_a, th_b, th_p = ang(ua), ang(ub), ang(up)
    sweep = wrap_angle(th_b - th_a)
    if sweep > math.pi:
        th_a, th_b = th_b, th_a
        sweep = TWO_PI - sweep
    segs = [(th_a, th_a + sweep)]
    for th in (th_a, th_a + sweep):
        d = wrap_angle(th_p - th)
        if d <= tol.eps or d >= TWO_PI - tol.eps:
            continue
        segs.append((th, th + d) if d <= math.pi else (th_p, th_p + TWO_PI - d))
    # circular merge, then map angle intervals back to endpoint pairs
    segs = sorted((wrap_angle(s), wrap_angle(s) + (e - s)) for s, e in segs)
    merged: list[list[float]] = []
    for s, e in segs:
        if merged and s <= merged[-1][1] + tol.eps:
            merged[-1][1] = max(merged[-1][1], e)
        else:
            merged.append([s, e])
    if len(merged) > 1 and merged[-1][1] + tol.eps >= merged[0][0] + TWO_PI:
        merged[0][0] = merged[-1][0] - TWO_PI
        merged[0][1] = max(merged[0][1], merged[-1][1] - TWO_PI)
        merged.pop()

    def at(theta: float) -> QuatElem:
        return QuatElem(
            *(r * (math.cos(theta) * e1[i] + math.sin(theta) * e2[i]) for i in range(4))
        )

    out: list = []
    for s, e in merged:
        sw = e - s
        if sw >= TWO_PI - tol.eps:
            raise RepresentationClosureError("full great circle in quaternion sum")
        if sw <= tol.eps:
            out.append(QPoint(at(s)))
        else:
            out.append(QArc(at(s), at(e)))
    return out


def _qcone_point(c: QCone, p: QuatElem, tol: Tolerance) -> list:
    eps = tol.eps
    r = c.radius
    if p.norm > r + eps:
        return [QPoint(p)]
    if p.norm < r - eps:
        return [c]
    up = p.unit()
    gens = [v.unit() for v in c.vertices]
    minus = tuple(-x for x in up)
    if in_cone(minus, gens, eps):
        return [QBall(r)]
    if in_cone(up, gens, eps):
        return [c]
    return [QCone(c.vertices + (QuatElem(*(x * r for x in up)),))]


def _qball_any(b: QBall, other, tol: Tolerance) -> list:
    if isinstance(other, QPoint):
        if other.elem.norm > b.radius + tol.eps:
            return [QPoint(other.elem)]
        return [b]
    r_other = other.radius
    if r_other > b.radius + tol.eps:
        return [other]
    return [QBall(b.radius)]


def _quat_add_comps(c1, c2, tol: Tolerance) -> list:
    if isinstance(c1, QBall):
        return _qball_any(c1, c2, tol)
    if isinstance(c2, QBall):
        return _qball_any(c2, c1, tol)
    if isinstance(c1, QPoint) and isinstance(c2, QPoint):
        return qparts_of(quat_add(c1.elem, c2.elem, tol))
    if isinstance(c1, QPoint) and isinstance(c2, QArc):
        return _qarc_point(c2, c1.elem, tol)
    if isinstance(c1, QArc) and isinstance(c2, QPoint):
        return _qarc_point(c1, c2.elem, tol)
    if isinstance(c1, QPoint) and isinstance(c2, QCone):
        return _qcone_point(c2, c1.elem, tol)
    if isinstance(c1, QCone) and isinstance(c2, QPoint):
        return _qcone_point(c1, c2.elem, tol)
    raise RepresentationClosureError(
        f"unsupported quaternion pair {type(c1).__name__} + {type(c2).__name__}"
    )


def quat_add_sets(s1: QSet, s2: QSet, tol: Tolerance = DEFAULT_TOL) -> QSet:
    out: list = []
    for c1 in qparts_of(qnormalize([s1], tol)):
        for c2 in qparts_of(qnormalize([s2], tol)):
            out.extend(_quat_add_comps(c1, c2, tol))
    return qnormalize(out, tol)


def quat_scale(s: QSet, f: QuatElem, side: str, tol: Tolerance = DEFAULT_TOL) -> QSet:
    """Pointwise left or right multiplication of a set by a quaternion.

    Multiplication by a fixed quaternion is a similarity of H, so each
    component maps to a component of the same kind.
    """
    if f.norm == 0.0:
        return QPoint(QZERO)

    def mp(q: QuatElem) -> QuatElem:
        return f.times(q) if side == "left" else q.times(f)

    out: list = []
    for c in qparts_of(s):
        if isinstance(c, QPoint):
            out.append(QPoint(mp(c.elem)))
        elif isinstance(c, QBall):
            out.append(QBall(c.radius * f.norm))
        elif isinstance(c, QArc):
            out.append(QArc(mp(c.a), mp(c.b)))
        else:
            out.append(QCone(tuple(mp(v) for v in c.vertices)))
    return qnormalize(out, tol)
