"""Finite multigroups and hyperfields: explicit tables, quotients, ideals.

Everything here is exhaustively checkable.  Elements are hashable labels;
tables are kept by index internally and exposed by label.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field


class InvalidStructureError(ValueError):
    pass


@dataclass
class FiniteMultistructure:
    """Explicit carrier with a set-valued addition table.

    mul_table is None for bare multigroups; neg is derived or supplied.
    """

    elements: tuple
    add_table: dict  # (i, j) -> frozenset of indices
    zero_idx: int
    mul_table: dict | None = None  # (i, j) -> index
    one_idx: int | None = None
    neg_map: tuple | None = None
    commutative_add: bool = True
    name: str = ""
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise InvalidStructureError("duplicate element labels")
        n = len(self.elements)
        for i in range(n):
            for j in range(n):
                cell = self.add_table.get((i, j))
                if not cell:
                    raise InvalidStructureError(f"add table empty or missing at {(i, j)}")
        if self.neg_map is None:
            self.neg_map = self._derive_neg()

    def _derive_neg(self) -> tuple:
        n = len(self.elements)
        neg = []
        for i in range(n):
            cands = [j for j in range(n) if self.zero_idx in self.add_table[(i, j)]]
            if len(cands) != 1:
                raise InvalidStructureError(
                    f"element {self.elements[i]!r} has {len(cands)} additive inverses"
                )
            neg.append(cands[0])
        return tuple(neg)

    # label-level operations
    def idx(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InvalidStructureError(f"unknown element {label!r}") from None

    def add(self, a, b) -> frozenset:
        cell = self.add_table[(self.idx(a), self.idx(b))]
        return frozenset(self.elements[k] for k in cell)

    def mul(self, a, b):
        if self.mul_table is None:
            raise InvalidStructureError(f"{self.name or 'structure'} has no multiplication")
        return self.elements[self.mul_table[(self.idx(a), self.idx(b))]]

    def neg(self, a):
        return self.elements[self.neg_map[self.idx(a)]]

    @property
    def zero(self):
        return self.elements[self.zero_idx]

    @property
    def one(self):
        if self.one_idx is None:
            raise InvalidStructureError(f"{self.name or 'structure'} has no unity")
        return self.elements[self.one_idx]

    def inv(self, a):
        if self.mul_table is None or self.one_idx is None:
            raise InvalidStructureError("no multiplicative structure")
        i = self.idx(a)
        for j in range(len(self.elements)):
            if self.mul_table[(i, j)] == self.one_idx and self.mul_table[(j, i)] == self.one_idx:
                return self.elements[j]
        raise ZeroDivisionError(f"{a!r} has no multiplicative inverse")

    def to_json(self) -> str:
        data = {
            "elements": [str(e) for e in self.elements],
            "add": {
                f"{i},{j}": sorted(cell)
                for (i, j), cell in sorted(self.add_table.items())
            },
            "zero": self.zero_idx,
        }
        if self.mul_table is not None:
            data["mul"] = {f"{i},{j}": k for (i, j), k in sorted(self.mul_table.items())}
        if self.one_idx is not None:
            data["one"] = self.one_idx
        if self.name:
            data["name"] = self.name
        return json.dumps(data, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "FiniteMultistructure":
        data = json.loads(text)
        elements = tuple(data["elements"])
        add_table = {}
        for key, cell in data["add"].items():
            i, j = (int(v) for v in key.split(","))
            add_table[(i, j)] = frozenset(cell)
        mul_table = None
        if "mul" in data:
            mul_table = {}
            for key, k in data["mul"].items():
                i, j = (int(v) for v in key.split(","))
                mul_table[(i, j)] = int(k)
        return cls(
            elements=elements,
            add_table=add_table,
            zero_idx=int(data["zero"]),
            mul_table=mul_table,
            one_idx=int(data["one"]) if "one" in data else None,
            name=data.get("name", ""),
        )


def _table(n: int, fn) -> dict:
    return {(i, j): frozenset(fn(i, j)) for i in range(n) for j in range(n)}


# ---------------------------------------------------------------------------
# named constructors


def make_krasner() -> FiniteMultistructure:
    """K = {0, 1} with 1+1 = {0, 1} and trivial multiplication."""

    def add(i, j):
        if i == 0:
            return {j}
        if j == 0:
            return {i}
        return {0, 1}

    return FiniteMultistructure(
        elements=("0", "1"),
        add_table=_table(2, add),
        zero_idx=0,
        mul_table={(i, j): (1 if i == 1 and j == 1 else 0) for i in range(2) for j in range(2)},
        one_idx=1,
        name="K",
    )


def make_sign() -> FiniteMultistructure:
    """S = {-1, 0, 1}: idempotent, with (-1) + 1 = {-1, 0, 1}."""
    els = ("0", "1", "-1")

    def add(i, j):
        if i == 0:
            return {j}
        if j == 0:
            return {i}
        if i == j:
            return {i}
        return {0, 1, 2}

    mul = {}
    vals = {0: 0, 1: 1, 2: -1}
    rev = {0: 0, 1: 1, -1: 2}
    for i in range(3):
        for j in range(3):
            mul[(i, j)] = rev[vals[i] * vals[j]]
    return FiniteMultistructure(
        elements=els, add_table=_table(3, add), zero_idx=0, mul_table=mul, one_idx=1, name="S"
    )


def make_M() -> FiniteMultistructure:
    """Three-element multigroup M: 1+1 = 2, 1+2 = {0,1}, 2+2 = {1,2}."""
    cells = {
        (0, 0): {0},
        (0, 1): {1},
        (0, 2): {2},
        (1, 0): {1},
        (2, 0): {2},
        (1, 1): {2},
        (1, 2): {0, 1},
        (2, 1): {0, 1},
        (2, 2): {1, 2},
    }
    return FiniteMultistructure(
        elements=("0", "1", "2"),
        add_table={k: frozenset(v) for k, v in cells.items()},
        zero_idx=0,
        name="M",
    )


def make_linear_order(n: int, strict: bool = False) -> FiniteMultistructure:
    """Multigroup on the chain 0 < 1 < ... < n-1 with max/down-set addition."""
    if n < 1:
        raise InvalidStructureError("chain length must be >= 1")

    def add(i, j):
        if i != j:
            return {max(i, j)}
        if strict:
            return {k for k in range(i)} if i != 0 else {0}
        return {k for k in range(i + 1)}

    return FiniteMultistructure(
        elements=tuple(str(k) for k in range(n)),
        add_table=_table(n, add),
        zero_idx=0,
        neg_map=tuple(range(n)),
        name=f"chain{n}{'-strict' if strict else ''}",
    )


def make_f2() -> FiniteMultistructure:
    """The field F2 presented with singleton sums."""
    s = make_linear_order(2, strict=True)
    return FiniteMultistructure(
        elements=("0", "1"),
        add_table=s.add_table,
        zero_idx=0,
        mul_table={(i, j): (1 if i == 1 and j == 1 else 0) for i in range(2) for j in range(2)},
        one_idx=1,
        name="F2",
    )


def make_q1() -> FiniteMultistructure:
    q = make_krasner()
    q.name = "Q1"
    return q


def make_zmod(n: int) -> FiniteMultistructure:
    """The ring Z/n viewed as a multiring with singleton sums."""
    if n < 1:
        raise InvalidStructureError("modulus must be >= 1")
    return FiniteMultistructure(
        elements=tuple(str(k) for k in range(n)),
        add_table=_table(n, lambda i, j: {(i + j) % n}),
        zero_idx=0,
        mul_table={(i, j): (i * j) % n for i in range(n) for j in range(n)},
        one_idx=1 % n if n > 1 else 0,
        name=f"Z{n}",
    )


# ---------------------------------------------------------------------------
# groups and double cosets


@dataclass(frozen=True)
class Group:
    name: str
    elements: tuple
    table: dict  # (i, j) -> k

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[(i, j)]

    def identity(self) -> int:
        for e in range(self.order):
            if all(self.mul(e, x) == x and self.mul(x, e) == x for x in range(self.order)):
                return e
        raise InvalidStructureError("group has no identity")

    def inverse(self, i: int) -> int:
        e = self.identity()
        for j in range(self.order):
            if self.mul(i, j) == e:
                return j
        raise InvalidStructureError("group element has no inverse")


def cyclic_group(n: int) -> Group:
    return Group(
        f"Z{n}",
        tuple(range(n)),
        {(i, j): (i + j) % n for i in range(n) for j in range(n)},
    )


def direct_product(g: Group, h: Group) -> Group:
    pairs = list(itertools.product(range(g.order), range(h.order)))
    idx = {p: k for k, p in enumerate(pairs)}
    table = {}
    for a, (i1, j1) in enumerate(pairs):
        for b, (i2, j2) in enumerate(pairs):
            table[(a, b)] = idx[(g.mul(i1, i2), h.mul(j1, j2))]
    return Group(f"{g.name}x{h.name}", tuple(pairs), table)


def dihedral_group(n: int) -> Group:
    """D_n of order 2n: elements (rotation, flip)."""
    els = [(r, f) for f in (0, 1) for r in range(n)]
    idx = {e: k for k, e in enumerate(els)}
    table = {}
    for a, (r1, f1) in enumerate(els):
        for b, (r2, f2) in enumerate(els):
            if f1 == 0:
                prod = ((r1 + r2) % n, f2)
            else:
                prod = ((r1 - r2) % n, 1 - f2)
            table[(a, b)] = idx[prod]
    return Group(f"D{n}", tuple(els), table)


def quaternion_group() -> Group:
    """Q8 as signed units {±1, ±i, ±j, ±k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}

    def split(x):
        return (-1, x[1:]) if x.startswith("-") else (1, x)

    mul_sym = {
        ("1", x): (1, x) for x in ("1", "i", "j", "k")
    }
    mul_sym.update({(x, "1"): (1, x) for x in ("i", "j", "k")})
    mul_sym.update(
        {
            ("i", "i"): (-1, "1"),
            ("j", "j"): (-1, "1"),
            ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"),
            ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"),
            ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"),
            ("i", "k"): (-1, "j"),
        }
    )
    idx = {nm: k for k, nm in enumerate(names)}
    table = {}
    for a, x in enumerate(names):
        for b, y in enumerate(names):
            sx, bx = split(x)
            sy, by = split(y)
            s, bz = mul_sym[(bx, by)]
            sign = sx * sy * s
            table[(a, b)] = idx[bz if sign == 1 else "-" + bz]
    return Group("Q8", tuple(names), table)


def symmetric3() -> Group:
    g = dihedral_group(3)
    return Group("S3", g.elements, g.table)


def small_groups(max_order: int = 8) -> list[Group]:
    """All groups of order <= max_order up to isomorphism (max_order <= 8)."""
    if max_order > 8:
        raise InvalidStructureError("small group table only covers order <= 8")
    groups = [cyclic_group(n) for n in range(1, max_order + 1)]
    extras = []
    if max_order >= 4:
        extras.append(direct_product(cyclic_group(2), cyclic_group(2)))
    if max_order >= 6:
        extras.append(symmetric3())
    if max_order >= 8:
        extras.append(direct_product(cyclic_group(2), cyclic_group(4)))
        extras.append(
            direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)))
        )
        extras.append(dihedral_group(4))
        extras.append(quaternion_group())
    return groups + extras


def all_subgroups(g: Group) -> list[frozenset]:
    """Every subgroup, found by closing each subset seed (order <= 8)."""
    e = g.identity()
    found = {frozenset([e])}
    for seed_size in (1, 2, 3):
        for seed in itertools.combinations(range(g.order), seed_size):
            cur = set(seed) | {e}
            while True:
                nxt = set(cur)
                for a in cur:
                    nxt.add(g.inverse(a))
                    for b in cur:
                        nxt.add(g.mul(a, b))
                if nxt == cur:
                    break
                cur = nxt
            found.add(frozenset(cur))
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def make_double_coset(g: Group, subgroup: frozenset) -> FiniteMultistructure:
    """Multigroup of double cosets HgH with (HaH)(HbH) = {HahbH : h in H}."""
    e = g.identity()
    hs = sorted(subgroup)
    if e not in subgroup:
        raise InvalidStructureError("subgroup must contain the identity")
    for a in hs:
        if g.inverse(a) not in subgroup:
            raise InvalidStructureError("subgroup not closed under inverses")
        for b in hs:
            if g.mul(a, b) not in subgroup:
                raise InvalidStructureError("subgroup not closed under product")

    def coset(x: int) -> frozenset:
        return frozenset(g.mul(g.mul(h1, x), h2) for h1 in hs for h2 in hs)

    cosets: list[frozenset] = []
    coset_of = {}
    for x in range(g.order):
        c = coset(x)
        if c not in cosets:
            cosets.append(c)
        coset_of[x] = cosets.index(c)
    reps = [min(c) for c in cosets]
    n = len(cosets)
    add_table = {}
    for i in range(n):
        for j in range(n):
            a, b = reps[i], reps[j]
            add_table[(i, j)] = frozenset(coset_of[g.mul(g.mul(a, h), b)] for h in hs)
    labels = tuple("{" + ",".join(str(x) for x in sorted(c)) + "}" for c in cosets)
    neg = tuple(coset_of[g.inverse(reps[i])] for i in range(n))
    return FiniteMultistructure(
        elements=labels,
        add_table=add_table,
        zero_idx=coset_of[e],
        neg_map=neg,
        commutative_add=False,
        name=f"{g.name}//H{len(hs)}",
    )


# ---------------------------------------------------------------------------
# quotients


def mul_quotient(x: FiniteMultistructure, s_labels) -> FiniteMultistructure:
    """Multiplicative factorization X/S: a ~ b iff s*a = t*b for s, t in S."""
    if x.mul_table is None:
        raise InvalidStructureError("multiplicative quotient needs a multiplication")
    s_idx = {x.idx(lbl) for lbl in s_labels}
    if not s_idx:
        raise InvalidStructureError("S must be nonempty")
    for i in s_idx:
        for j in s_idx:
            if x.mul_table[(i, j)] not in s_idx:
                raise InvalidStructureError("S not multiplicatively closed")
    n = len(x.elements)
    if x.zero_idx in s_idx:
        zero = x.elements[x.zero_idx]
        return FiniteMultistructure(
            elements=(f"[{zero}]",),
            add_table={(0, 0): frozenset([0])},
            zero_idx=0,
            mul_table={(0, 0): 0},
            one_idx=0,
            name=f"{x.name}/mS",
        )
    # union-find over the relation  s*a == t*b
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def join(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    prod = {}
    for a in range(n):
        prod[a] = {x.mul_table[(s, a)] for s in s_idx}
    for a in range(n):
        for b in range(a + 1, n):
            if prod[a] & prod[b]:
                join(a, b)
    roots = sorted({find(i) for i in range(n)})
    class_of = {i: roots.index(find(i)) for i in range(n)}
    members: list[list[int]] = [[] for _ in roots]
    for i in range(n):
        members[class_of[i]].append(i)
    m = len(roots)
    add_table = {}
    for ci in range(m):
        for cj in range(m):
            out = set()
            for a in members[ci]:
                for b in members[cj]:
                    out.update(class_of[k] for k in x.add_table[(a, b)])
            add_table[(ci, cj)] = frozenset(out)
    mul_table = {}
    for ci in range(m):
        for cj in range(m):
            results = {
                class_of[x.mul_table[(a, b)]] for a in members[ci] for b in members[cj]
            }
            if len(results) != 1:
                raise InvalidStructureError("quotient multiplication not well defined")
            mul_table[(ci, cj)] = results.pop()
    labels = tuple(
        "[" + ",".join(str(x.elements[i]) for i in sorted(mem)) + "]" for mem in members
    )
    one_idx = class_of[x.one_idx] if x.one_idx is not None else None
    return FiniteMultistructure(
        elements=labels,
        add_table=add_table,
        zero_idx=class_of[x.zero_idx],
        mul_table=mul_table,
        one_idx=one_idx,
        name=f"{x.name}/mS",
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def make_powers_quotient(p: int, depth: int) -> FiniteMultistructure:
    """Z factored by the multiplicatively closed set of non-multiples of p,
    truncated to `depth` powers with an absorbing bottom class.

    Classes are 0 and p^0 .. p^(depth-1); dominance is by divisibility, so
    the order is reversed: higher powers sit lower.  For p = 2 the tie branch
    is strict (the complement classes cancel); for odd p it is non-strict.
    """
    if not _is_prime(p):
        raise InvalidStructureError(f"{p} is not prime")
    if depth < 2:
        raise InvalidStructureError("depth must be >= 2")
    labels = ("0",) + tuple(f"{p}^{k}" for k in range(depth))
    n = depth + 1
    bottom = depth  # index of p^(depth-1), the absorbing class

    def below(i: int, strict: bool) -> set:
        # indexes deeper than power-index i in the reversed order, plus 0
        out = {0} | set(range(i + 1, n))
        if not strict:
            out.add(i)
        if i == bottom:
            out.add(bottom)  # absorbed deeper powers keep the bottom class
        return out

    # dominance: smaller power index = larger norm wins
    def add(i, j):
        if i == 0:
            return {j}
        if j == 0:
            return {i}
        if i != j:
            return {min(i, j)}
        return below(i, strict=(p == 2))

    mul_table = {}
    for i in range(n):
        for j in range(n):
            if i == 0 or j == 0:
                mul_table[(i, j)] = 0
            else:
                mul_table[(i, j)] = min((i - 1) + (j - 1), depth - 1) + 1
    return FiniteMultistructure(
        elements=labels,
        add_table=_table(n, add),
        zero_idx=0,
        mul_table=mul_table,
        one_idx=1,
        neg_map=tuple(range(n)),
        name=f"powers{p}",
    )


def quotient_by_normal(x: FiniteMultistructure, y_labels) -> FiniteMultistructure:
    """Quotient by a strong normal submultigroup; the projection is strong."""
    y = {x.idx(lbl) for lbl in y_labels}
    n = len(x.elements)
    if x.zero_idx not in y:
        raise InvalidStructureError("submultigroup must contain zero")
    for i in y:
        if x.neg_map[i] not in y:
            raise InvalidStructureError("submultigroup not closed under negation")
        for j in y:
            if not x.add_table[(i, j)] <= y:
                raise InvalidStructureError(
                    f"not a strong submultigroup: {x.elements[i]}+{x.elements[j]} leaves Y"
                )
    # normality as two-sided coset agreement: a + Y == Y + a for every a.
    # (The conjugation form (-a)+Y+a inflates in a multigroup: already in the
    # sign carrier (-1)+0+1 covers everything, which would reject Y = {0}
    # while kernels are supposed to be normal.)
    for a in range(n):
        left = set()
        right = set()
        for i in y:
            left.update(x.add_table[(a, i)])
            right.update(x.add_table[(i, a)])
        if left != right:
            raise InvalidStructureError(
                f"submultigroup not normal at {x.elements[a]!r}"
            )

    def orbit(a: int) -> frozenset:
        out = set()
        for i in y:
            out.update(x.add_table[(a, i)])
        return frozenset(out)

    classes: list[frozenset] = []
    class_of = {}
    for a in range(n):
        o = orbit(a)
        if o not in classes:
            classes.append(o)
        class_of[a] = classes.index(o)
    m = len(classes)
    add_table = {}
    for ci in range(m):
        for cj in range(m):
            out = set()
            for a in classes[ci]:
                for b in classes[cj]:
                    out.update(class_of[k] for k in x.add_table[(a, b)])
            add_table[(ci, cj)] = frozenset(out)
    labels = tuple(
        "[" + ",".join(str(x.elements[i]) for i in sorted(c)) + "]" for c in classes
    )
    return FiniteMultistructure(
        elements=labels,
        add_table=add_table,
        zero_idx=class_of[x.zero_idx],
        name=f"{x.name}/Y",
    )


# ---------------------------------------------------------------------------
# ideals and isomorphisms


def ideals(x: FiniteMultistructure, max_size: int = 12) -> list[frozenset]:
    """All ideals (as label sets) of a commutative multiring, brute force."""
    if x.mul_table is None:
        raise InvalidStructureError("ideals need a multiplication")
    n = len(x.elements)
    if n > max_size:
        raise InvalidStructureError(f"carrier too large for enumeration ({n} > {max_size})")
    rest = [i for i in range(n) if i != x.zero_idx]
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            cand = frozenset((x.zero_idx,) + extra)
            ok = True
            for a in cand:
                for b in cand:
                    if not x.add_table[(a, b)] <= cand:
                        ok = False
                        break
                if not ok:
                    break
                for c in range(n):
                    if x.mul_table[(c, a)] not in cand:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(frozenset(x.elements[i] for i in cand))
    return out


def prime_ideals(x: FiniteMultistructure, max_size: int = 12) -> list[dict]:
    """Prime ideals with their characteristic-function maps onto K.

    Each entry holds the ideal's labels and the map `to_K` sending members to
    "0" and everything else to "1".
    """
    out = []
    n = len(x.elements)
    for members in ideals(x, max_size):
        idx = {x.idx(lbl) for lbl in members}
        if x.one_idx in idx:
            continue
        prime = True
        for a in range(n):
            for b in range(n):
                if x.mul_table[(a, b)] in idx and a not in idx and b not in idx:
                    prime = False
                    break
            if not prime:
                break
        if prime:
            to_k = {e: ("0" if e in members else "1") for e in x.elements}
            out.append({"ideal": members, "to_K": to_k})
    return out


def find_isomorphism(a: FiniteMultistructure, b: FiniteMultistructure) -> dict | None:
    """Backtracking search for a structure isomorphism (labels map a -> b)."""
    n = len(a.elements)
    if n != len(b.elements):
        return None
    has_mul = a.mul_table is not None and b.mul_table is not None
    if (a.mul_table is None) != (b.mul_table is None):
        return None

    perm: list[int | None] = [None] * n

    def consistent(i: int, j: int) -> bool:
        if i == a.zero_idx and j != b.zero_idx:
            return False
        if j == b.zero_idx and i != a.zero_idx:
            return False
        if has_mul and a.one_idx is not None and b.one_idx is not None:
            if (i == a.one_idx) != (j == b.one_idx):
                return False
        for k, pk in enumerate(perm):
            if pk is None:
                continue
            img = {perm[t] for t in a.add_table[(i, k)]}
            if None not in img and frozenset(img) != b.add_table[(j, pk)]:
                return False
            img = {perm[t] for t in a.add_table[(k, i)]}
            if None not in img and frozenset(img) != b.add_table[(pk, j)]:
                return False
            if has_mul:
                if perm[a.mul_table[(i, k)]] is not None and perm[a.mul_table[(i, k)]] != b.mul_table[(j, pk)]:
                    return False
                if perm[a.mul_table[(k, i)]] is not None and perm[a.mul_table[(k, i)]] != b.mul_table[(pk, j)]:
                    return False
        return True

    used = [False] * n

    def backtrack(i: int) -> bool:
        if i == n:
            # full verification of both tables under the bijection
            for p in range(n):
                for q in range(n):
                    if frozenset(perm[t] for t in a.add_table[(p, q)]) != b.add_table[
                        (perm[p], perm[q])
                    ]:
                        return False
                    if has_mul and perm[a.mul_table[(p, q)]] != b.mul_table[(perm[p], perm[q])]:
                        return False
            return True
        for j in range(n):
            if used[j] or not consistent(i, j):
                continue
            perm[i] = j
            used[j] = True
            if backtrack(i + 1):
                return True
            perm[i] = None
            used[j] = False
        return False

    if backtrack(0):
        return {a.elements[i]: b.elements[perm[i]] for i in range(n)}
    return None


def search_hyperfield_multiplications(x: FiniteMultistructure) -> list[dict]:
    """Try every univalued multiplication table on x's carrier and return the
    ones that make it a hyperfield (empty list when none exist)."""
    from .axioms import check_multiring
    from .structures import FiniteStructure

    n = len(x.elements)
    nonzero = [i for i in range(n) if i != x.zero_idx]
    winners = []
    for values in itertools.product(range(n), repeat=len(nonzero) ** 2):
        mul_table = {}
        for i in range(n):
            mul_table[(i, x.zero_idx)] = x.zero_idx
            mul_table[(x.zero_idx, i)] = x.zero_idx
        it = iter(values)
        for i in nonzero:
            for j in nonzero:
                mul_table[(i, j)] = next(it)
        # a unity must exist among the nonzero elements
        one = None
        for e in nonzero:
            if all(mul_table[(e, i)] == i and mul_table[(i, e)] == i for i in range(n)):
                one = e
                break
        if one is None:
            continue
        cand = FiniteMultistructure(
            elements=x.elements,
            add_table=x.add_table,
            zero_idx=x.zero_idx,
            mul_table=mul_table,
            one_idx=one,
            neg_map=x.neg_map,
            name=f"{x.name}+mul",
        )
        rep = check_multiring(FiniteStructure(cand), level="hyperfield")
        if rep.passed:
            winners.append(mul_table)
    return winners
