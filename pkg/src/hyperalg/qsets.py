"""Quaternion carrier points and symbolic subsets of H.

The tropical sum of quaternions produces points, minor geodesic arcs on
origin-centred 3-spheres, closed balls, and (one level of set extension
later) geodesic cones: the union of minor arcs from a point to every point
of an arc).  A cone with generator set V is exactly the set of norm-r points
whose direction is a nonnegative combination of the unit generators, which
gives an exact membership test via small linear solves.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .csets import InvalidSetError
from .tolerance import DEFAULT_TOL, Tolerance


@dataclass(frozen=True, slots=True)
class QuatElem:
    x: float
    y: float
    z: float
    t: float

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z + self.t * self.t)

    def coords(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.z, self.t)

    def unit(self) -> tuple[float, float, float, float]:
        n = self.norm
        if n == 0.0:
            raise ZeroDivisionError("zero quaternion has no direction")
        return (self.x / n, self.y / n, self.z / n, self.t / n)

    def __neg__(self) -> "QuatElem":
        return QuatElem(-self.x, -self.y, -self.z, -self.t)

    def add(self, o: "QuatElem") -> "QuatElem":
        return QuatElem(self.x + o.x, self.y + o.y, self.z + o.z, self.t + o.t)

    def times(self, o: "QuatElem") -> "QuatElem":
        a1, b1, c1, d1 = self.coords()
        a2, b2, c2, d2 = o.coords()
        return QuatElem(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def conj(self) -> "QuatElem":
        return QuatElem(self.x, -self.y, -self.z, -self.t)

    def inv(self) -> "QuatElem":
        n2 = self.norm**2
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        c = self.conj()
        return QuatElem(c.x / n2, c.y / n2, c.z / n2, c.t / n2)

    def dist(self, o: "QuatElem") -> float:
        return math.sqrt(
            (self.x - o.x) ** 2 + (self.y - o.y) ** 2 + (self.z - o.z) ** 2 + (self.t - o.t) ** 2
        )

    def eq(self, o: "QuatElem", tol: Tolerance = DEFAULT_TOL) -> bool:
        return self.dist(o) <= tol.eps


QZERO = QuatElem(0.0, 0.0, 0.0, 0.0)
QONE = QuatElem(1.0, 0.0, 0.0, 0.0)


def _dot(u, v) -> float:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]


def _scale(u, f):
    return (u[0] * f, u[1] * f, u[2] * f, u[3] * f)


def _sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2], u[3] - v[3])


def _solve(mat: list[list[float]], rhs: list[float]) -> list[float] | None:
    """Gaussian elimination with partial pivoting; None on (near-)singularity."""
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(a[r][col]))
        if abs(a[piv][col]) < 1e-13:
            return None
        a[col], a[piv] = a[piv], a[col]
        for r in range(n):
            if r != col and a[r][col] != 0.0:
                f = a[r][col] / a[col][col]
                for k in range(col, n + 1):
                    a[r][k] -= f * a[col][k]
    return [a[i][n] / a[i][i] for i in range(n)]


def in_cone(u: tuple, gens: list[tuple], eps: float) -> bool:
    """Is the unit 4-vector `u` a nonnegative combination of the generators?

    By conic Caratheodory it suffices to test linearly independent subsets of
    size <= 4; generator lists stay small (<= 6) in practice.
    """
    for k in (1, 2, 3, 4):
        for sub in itertools.combinations(gens, k):
            gram = [[_dot(a, b) for b in sub] for a in sub]
            rhs = [_dot(a, u) for a in sub]
            coeffs = _solve(gram, rhs)
            if coeffs is None:
                continue
            if any(c < -1e-7 for c in coeffs):
                continue
            recon = (0.0, 0.0, 0.0, 0.0)
            for c, g in zip(coeffs, sub):
                recon = (
                    recon[0] + c * g[0],
                    recon[1] + c * g[1],
                    recon[2] + c * g[2],
                    recon[3] + c * g[3],
                )
            if math.sqrt(_dot(_sub(u, recon), _sub(u, recon))) <= max(eps, 1e-9):
                return True
    return False


def slerp(u: tuple, v: tuple, t: float) -> tuple:
    """Point at fraction t along the minor great-circle arc between units u, v."""
    d = max(-1.0, min(1.0, _dot(u, v)))
    omega = math.acos(d)
    if omega < 1e-12:
        return u
    s = math.sin(omega)
    a = math.sin((1.0 - t) * omega) / s
    b = math.sin(t * omega) / s
    return tuple(a * u[i] + b * v[i] for i in range(4))


# ---------------------------------------------------------------------------
# set components


@dataclass(frozen=True, slots=True)
class QPoint:
    elem: QuatElem


@dataclass(frozen=True, slots=True)
class QArc:
    """Minor geodesic arc between two non-antipodal points of equal norm."""

    a: QuatElem
    b: QuatElem

    def __post_init__(self) -> None:
        if self.a.norm == 0.0 or self.b.norm == 0.0:
            raise InvalidSetError("geodesic arc endpoints must be nonzero")
        if self.b.coords() < self.a.coords():
            first, second = self.b, self.a
            object.__setattr__(self, "a", first)
            object.__setattr__(self, "b", second)

    @property
    def radius(self) -> float:
        return 0.5 * (self.a.norm + self.b.norm)


@dataclass(frozen=True, slots=True)
class QBall:
    radius: float

    def __post_init__(self) -> None:
        if self.radius < 0.0:
            raise InvalidSetError("ball of negative radius")


@dataclass(frozen=True, slots=True)
class QCone:
    """Norm-r points whose direction lies in the nonnegative span of vertices."""

    vertices: tuple[QuatElem, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise InvalidSetError("cone needs at least three vertices")
        object.__setattr__(
            self, "vertices", tuple(sorted(self.vertices, key=lambda q: q.coords()))
        )

    @property
    def radius(self) -> float:
        return sum(v.norm for v in self.vertices) / len(self.vertices)


@dataclass(frozen=True, slots=True)
class QUnion:
    parts: tuple


QSet = QPoint | QArc | QBall | QCone | QUnion


def qparts_of(s: QSet) -> list:
    return list(s.parts) if isinstance(s, QUnion) else [s]


def _comp_radius(c) -> float:
    if isinstance(c, QPoint):
        return c.elem.norm
    if isinstance(c, (QArc, QCone)):
        return c.radius
    return c.radius


def qmember(x: QuatElem, s: QSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    for c in qparts_of(s):
        if isinstance(c, QPoint):
            if x.eq(c.elem, tol):
                return True
        elif isinstance(c, QBall):
            if x.norm <= c.radius + tol.eps:
                return True
        elif isinstance(c, QArc):
            if abs(x.norm - c.radius) <= tol.eps and x.norm > 0.0:
                if in_cone(x.unit(), [c.a.unit(), c.b.unit()], tol.eps):
                    return True
        else:
            if abs(x.norm - c.radius) <= tol.eps and x.norm > 0.0:
                if in_cone(x.unit(), [v.unit() for v in c.vertices], tol.eps):
                    return True
    return False


def qnormalize(parts: list, tol: Tolerance = DEFAULT_TOL) -> QSet:
    flat: list = []
    for p in parts:
        flat.extend(qparts_of(p))
    if not flat:
        raise InvalidSetError("quaternion value set must be nonempty")
    ball_r = -1.0
    for c in flat:
        if isinstance(c, QBall):
            ball_r = max(ball_r, c.radius)
    out: list = []
    if ball_r >= 0.0:
        if ball_r <= tol.eps:
            flat.append(QPoint(QZERO))
        else:
            out.append(QBall(ball_r))
    rest = [
        c
        for c in flat
        if not isinstance(c, QBall) and _comp_radius(c) > ball_r + tol.eps
    ]
    # absorb points lying on arcs/cones, then dedup
    arcs = [c for c in rest if isinstance(c, (QArc, QCone))]
    points = [c.elem for c in rest if isinstance(c, QPoint)]
    kept_pts: list[QuatElem] = []
    for p in sorted(points, key=lambda e: e.coords()):
        if any(qmember(p, a, tol) for a in arcs):
            continue
        if any(p.eq(q, tol) for q in kept_pts):
            continue
        kept_pts.append(p)
    kept_arcs: list = []
    for a in arcs:
        if not any(_qcomp_eq(a, b, tol) for b in kept_arcs):
            kept_arcs.append(a)
    out.extend(sorted(kept_arcs, key=_qsort_key))
    out.extend(QPoint(p) for p in kept_pts)
    if not out:
        raise InvalidSetError("normalization emptied the quaternion set")
    if len(out) == 1:
        return out[0]
    return QUnion(tuple(out))


def _qsort_key(c) -> tuple:
    if isinstance(c, QArc):
        return (0, c.a.coords(), c.b.coords())
    return (1, tuple(v.coords() for v in c.vertices), ())


def _qcomp_eq(c1, c2, tol: Tolerance) -> bool:
    if isinstance(c1, QPoint) and isinstance(c2, QPoint):
        return c1.elem.eq(c2.elem, tol)
    if isinstance(c1, QBall) and isinstance(c2, QBall):
        return tol.close(c1.radius, c2.radius)
    if isinstance(c1, QArc) and isinstance(c2, QArc):
        return (c1.a.eq(c2.a, tol) and c1.b.eq(c2.b, tol)) or (
            c1.a.eq(c2.b, tol) and c1.b.eq(c2.a, tol)
        )
    if isinstance(c1, QCone) and isinstance(c2, QCone):
        if len(c1.vertices) != len(c2.vertices):
            return False
        rem = list(c2.vertices)
        for v in c1.vertices:
            for i, w in enumerate(rem):
                if v.eq(w, tol):
                    del rem[i]
                    break
            else:
                return False
        return True
    return False


def qset_eq(s1: QSet, s2: QSet, tol: Tolerance = DEFAULT_TOL) -> bool:
    n1 = qnormalize([s1], tol)
    n2 = qnormalize([s2], tol)
    p1, p2 = qparts_of(n1), qparts_of(n2)
    if len(p1) != len(p2):
        return False
    rem = list(p2)
    for c in p1:
        for i, d in enumerate(rem):
            if _qcomp_eq(c, d, tol):
                del rem[i]
                break
        else:
            return False
    return True


def qpick(s: QSet, rng, count: int = 4) -> list[QuatElem]:
    pts: list[QuatElem] = []

    def _rand_unit() -> tuple:
        while True:
            v = tuple(rng.gauss(0.0, 1.0) for _ in range(4))
            n = math.sqrt(_dot(v, v))
            if n > 1e-6:
                return _scale(v, 1.0 / n)

    for c in qparts_of(s):
        if isinstance(c, QPoint):
            pts.append(c.elem)
        elif isinstance(c, QArc):
            r = c.radius
            ua, ub = c.a.unit(), c.b.unit()
            for t in (0.0, 1.0, 0.5):
                pts.append(QuatElem(*_scale(slerp(ua, ub, t), r)))
            for _ in range(count):
                pts.append(QuatElem(*_scale(slerp(ua, ub, rng.random()), r)))
        elif isinstance(c, QBall):
            pts.append(QZERO)
            pts.append(QuatElem(*_scale(_rand_unit(), c.radius)))
            for _ in range(count):
                pts.append(QuatElem(*_scale(_rand_unit(), c.radius * rng.random())))
        else:
            r = c.radius
            units = [v.unit() for v in c.vertices]
            for u in units:
                pts.append(QuatElem(*_scale(u, r)))
            for _ in range(count + 2):
                ws = [rng.random() for _ in units]
                mix = (0.0, 0.0, 0.0, 0.0)
                for w, u in zip(ws, units):
                    mix = tuple(mix[i] + w * u[i] for i in range(4))
                n = math.sqrt(_dot(mix, mix))
                if n > 1e-9:
                    pts.append(QuatElem(*_scale(mix, r / n)))
    return pts


def format_qelem(q: QuatElem) -> str:
    from .tolerance import fmt_num

    return ",".join(fmt_num(v) for v in q.coords())


def parse_qelem(text: str) -> QuatElem:
    vals = [float(v) for v in text.split(",")]
    if len(vals) != 4:
        raise InvalidSetError(f"quaternion literal needs 4 components: {text!r}")
    return QuatElem(*vals)


def format_qset(s: QSet) -> str:
    from .tolerance import fmt_num

    out = []
    for c in qparts_of(s):
        if isinstance(c, QPoint):
            out.append(f"point {format_qelem(c.elem)}")
        elif isinstance(c, QBall):
            out.append(f"ball r={fmt_num(c.radius)}")
        elif isinstance(c, QArc):
            out.append(f"garc {format_qelem(c.a)} to {format_qelem(c.b)}")
        else:
            verts = " ".join(format_qelem(v) for v in c.vertices)
            out.append(f"gcone {verts}")
    return " | ".join(out)
