"""Generic axiom checking over any structure handle.

A Structure bundles a carrier (finite element list or continuous sampler)
with a set-valued addition, univalued multiplication, negation and the set
machinery (membership, equality, containment, sampling).  The checkers verify
multigroup / multiring / hyperring / hyperfield axioms either exhaustively
(finite carriers) or over stratified sampled tuples (continuous carriers),
and every failing verdict carries a witness that replays to the same failure.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field

from .tolerance import DEFAULT_TOL, Tolerance


class EmptySumError(ValueError):
    """A multivalued addition produced an empty value set."""


class DoubleDistributivityViolation(RuntimeError):
    """The guaranteed half of double distributivity failed: a structural bug."""


# ---------------------------------------------------------------------------
# structure handle


class Structure:
    """Uniform interface over finite and continuous hyperfield-like carriers.

    Subclasses fill in the carrier-specific operations; the axiom checkers
    only ever talk to this interface.
    """

    name = "structure"
    is_finite = False
    has_mul = True
    has_one = True
    has_inv = True
    mul_commutative = True

    def __init__(self, tol: Tolerance = DEFAULT_TOL):
        self.tol = tol

    # carrier
    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def elements(self) -> list:
        raise NotImplementedError(f"{self.name} has no finite element list")

    def random_elem(self, rng: random.Random):
        raise NotImplementedError

    def peer(self, a, rng: random.Random):
        """An element tied with `a` for the dominance order of the addition."""
        return a

    # operations
    def add(self, a, b):
        raise NotImplementedError

    def add_sets(self, s1, s2):
        raise NotImplementedError

    def union_sets(self, s1, s2):
        raise NotImplementedError

    def singleton(self, a):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def scale(self, a, s, side: str = "left"):
        """Pointwise multiplication of the set `s` by the element `a`."""
        raise NotImplementedError

    def mul_sets(self, s1, s2):
        """Pointwise product of two sets, or None when not representable."""
        return None

    # predicates
    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def member(self, x, s) -> bool:
        raise NotImplementedError

    def set_eq(self, s1, s2) -> bool:
        raise NotImplementedError

    def subset(self, s1, s2) -> bool:
        raise NotImplementedError

    def pick(self, s, rng: random.Random, count: int = 4) -> list:
        raise NotImplementedError

    # text forms
    def format_elem(self, a) -> str:
        return str(a)

    def parse_elem(self, text: str):
        raise NotImplementedError

    def format_set(self, s) -> str:
        return str(s)

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Check:
    axiom: str
    passed: bool
    witness: tuple | None = None
    witness_text: str = ""
    detail: str = ""


@dataclass
class AxiomReport:
    structure: str
    checks: list[Check] = field(default_factory=list)
    tuples_checked: int = 0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, axiom: str, passed: bool, witness=None, witness_text="", detail=""):
        self.checks.append(Check(axiom, passed, witness, witness_text, detail))

    def merge(self, other: "AxiomReport") -> None:
        self.checks.extend(other.checks)
        self.tuples_checked += other.tuples_checked

    def to_lines(self) -> list[str]:
        out = []
        for c in self.checks:
            line = f"axiom={c.axiom} verdict={'pass' if c.passed else 'fail'}"
            if not c.passed:
                line += f" witness={c.witness_text}"
            out.append(line)
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "structure": self.structure,
                "passed": self.passed,
                "tuples": self.tuples_checked,
                "checks": [
                    {
                        "axiom": c.axiom,
                        "verdict": "pass" if c.passed else "fail",
                        "witness": c.witness_text or None,
                        "detail": c.detail or None,
                    }
                    for c in self.checks
                ],
            },
            indent=2,
        )


@dataclass
class HomReport:
    name: str
    zero_preserved: bool = True
    one_preserved: bool = True
    additive: bool = True
    multiplicative: bool = True
    strong: bool = True
    strong_exact: bool = True  # False when strongness was only sampled
    kernel: list = field(default_factory=list)
    mul_kernel: list = field(default_factory=list)
    witness: tuple | None = None
    witness_text: str = ""
    pairs_checked: int = 0

    @property
    def is_homomorphism(self) -> bool:
        return self.zero_preserved and self.additive and self.multiplicative

    def to_lines(self) -> list[str]:
        rows = [
            ("zero-preserved", self.zero_preserved),
            ("one-preserved", self.one_preserved),
            ("additive-containment", self.additive),
            ("multiplicative", self.multiplicative),
            ("strong", self.strong),
        ]
        out = [f"axiom={n} verdict={'pass' if v else 'fail'}" for n, v in rows]
        if self.witness_text:
            out.append(f"witness={self.witness_text}")
        out.append(f"kernel={{{','.join(self.kernel)}}}")
        out.append(f"mul-kernel={{{','.join(self.mul_kernel)}}}")
        return out

    def to_json(self) -> str:
        return json.dumps(
            {
                "hom": self.name,
                "homomorphism": self.is_homomorphism,
                "zero_preserved": self.zero_preserved,
                "one_preserved": self.one_preserved,
                "additive": self.additive,
                "multiplicative": self.multiplicative,
                "strong": self.strong,
                "strong_exact": self.strong_exact,
                "kernel": self.kernel,
                "mul_kernel": self.mul_kernel,
                "witness": self.witness_text or None,
                "pairs": self.pairs_checked,
            },
            indent=2,
        )


# ---------------------------------------------------------------------------
# stratified tuple generation

# first letter draws fresh/zero/one; later letters may reference the first
# element (dup/peer/neg) or the previous one, which steers tuples into every
# dominance/tie/cancellation branch of the target addition
_FIRST = "RZO"
_REST = "RDPNZOEWM"


def _emit(letter: str, X: Structure, first, prev, rng: random.Random):
    if letter == "R":
        return X.random_elem(rng)
    if letter == "D":
        return first
    if letter == "P":
        return X.peer(first, rng)
    if letter == "N":
        return X.neg(first)
    if letter == "Z":
        return X.zero
    if letter == "O":
        return X.one if X.has_one else X.zero
    if letter == "E":
        return prev
    if letter == "W":
        return X.peer(prev, rng)
    if letter == "M":
        return X.neg(prev)
    raise ValueError(letter)


def stratified_tuples(X: Structure, rng: random.Random, arity: int, count: int):
    """Yield `count` element tuples cycling through all letter patterns."""
    patterns = [
        f + "".join(rest)
        for f in _FIRST
        for rest in itertools.product(_REST, repeat=arity - 1)
    ]
    emitted = 0
    while emitted < count:
        for pat in patterns:
            if emitted >= count:
                return
            first = _emit(pat[0], X, None, None, rng)
            tup = [first]
            for letter in pat[1:]:
                tup.append(_emit(letter, X, first, tup[-1], rng))
            yield tuple(tup)
            emitted += 1


def _tuples(X: Structure, rng: random.Random, arity: int, budget: int):
    if X.is_finite:
        els = X.elements()
        return itertools.product(els, repeat=arity)
    return stratified_tuples(X, rng, arity, budget)


def _wtext(X: Structure, tup) -> str:
    return "(" + ", ".join(X.format_elem(t) for t in tup) + ")"


# ---------------------------------------------------------------------------
# axiom predicates (witnesses replay through these)


def axiom_associative(X: Structure, tup) -> bool:
    a, b, c = tup
    lhs = X.add_sets(X.add(a, b), X.singleton(c))
    rhs = X.add_sets(X.singleton(a), X.add(b, c))
    return X.set_eq(lhs, rhs)


def axiom_weak_associative(X: Structure, tup) -> bool:
    a, b, c = tup
    lhs = X.add_sets(X.add(a, b), X.singleton(c))
    rhs = X.add_sets(X.singleton(a), X.add(b, c))
    return X.subset(lhs, rhs)


def axiom_neutral(X: Structure, tup) -> bool:
    (a,) = tup
    sa = X.singleton(a)
    return X.set_eq(X.add(X.zero, a), sa) and X.set_eq(X.add(a, X.zero), sa)


def axiom_right_neutral(X: Structure, tup) -> bool:
    (a,) = tup
    return X.set_eq(X.add(a, X.zero), X.singleton(a))


def axiom_negation_exists(X: Structure, tup) -> bool:
    (a,) = tup
    return X.member(X.zero, X.add(a, X.neg(a))) and X.member(X.zero, X.add(X.neg(a), a))


def axiom_negation_unique(X: Structure, tup) -> bool:
    a, x = tup
    if X.eq(x, X.neg(a)):
        return True
    return not X.member(X.zero, X.add(a, x)) and not X.member(X.zero, X.add(x, a))


def axiom_reversal(X: Structure, tup) -> bool:
    """c in a+b  iff  -c in (-b)+(-a), tested at the carrier point c."""
    a, b, c = tup
    inside = X.member(c, X.add(a, b))
    mirrored = X.member(X.neg(c), X.add(X.neg(b), X.neg(a)))
    return inside == mirrored


def axiom_reversibility(X: Structure, tup) -> bool:
    a, b, c = tup
    if not X.member(c, X.add(a, b)):
        return True
    return X.member(a, X.add(c, X.neg(b))) and X.member(b, X.add(X.neg(a), c))


def axiom_neg_zero(X: Structure, tup) -> bool:
    return X.eq(X.neg(X.zero), X.zero)


def axiom_neg_involution(X: Structure, tup) -> bool:
    (a,) = tup
    return X.eq(X.neg(X.neg(a)), a)


def axiom_add_commutative(X: Structure, tup) -> bool:
    a, b = tup
    return X.set_eq(X.add(a, b), X.add(b, a))


def axiom_mul_associative(X: Structure, tup) -> bool:
    a, b, c = tup
    return X.eq(X.mul(X.mul(a, b), c), X.mul(a, X.mul(b, c)))


def axiom_mul_unit(X: Structure, tup) -> bool:
    (a,) = tup
    return X.eq(X.mul(X.one, a), a) and X.eq(X.mul(a, X.one), a)


def axiom_zero_mul(X: Structure, tup) -> bool:
    (a,) = tup
    return X.is_zero(X.mul(X.zero, a)) and X.is_zero(X.mul(a, X.zero))


def axiom_distributive_sub(X: Structure, tup) -> bool:
    a, b, c = tup
    rhs = X.add(X.mul(a, b), X.mul(a, c))
    if not X.subset(X.scale(a, X.add(b, c), "left"), rhs):
        return False
    rhs_r = X.add(X.mul(b, a), X.mul(c, a))
    return X.subset(X.scale(a, X.add(b, c), "right"), rhs_r)


def axiom_distributive_eq(X: Structure, tup) -> bool:
    a, b, c = tup
    if not X.set_eq(X.scale(a, X.add(b, c), "left"), X.add(X.mul(a, b), X.mul(a, c))):
        return False
    return X.set_eq(X.scale(a, X.add(b, c), "right"), X.add(X.mul(b, a), X.mul(c, a)))


def axiom_mul_commutative(X: Structure, tup) -> bool:
    a, b = tup
    return X.eq(X.mul(a, b), X.mul(b, a))


def axiom_units_group(X: Structure, tup) -> bool:
    (a,) = tup
    if X.is_zero(a):
        return True
    try:
        ai = X.inv(a)
    except (ZeroDivisionError, ValueError, NotImplementedError):
        return False
    return X.eq(X.mul(a, ai), X.one) and X.eq(X.mul(ai, a), X.one)


def axiom_no_zero_divisors(X: Structure, tup) -> bool:
    a, b = tup
    if X.is_zero(a) or X.is_zero(b):
        return True
    return not X.is_zero(X.mul(a, b))


PREDICATES = {
    "associativity": axiom_associative,
    "weak-associativity": axiom_weak_associative,
    "neutral": axiom_neutral,
    "right-neutral": axiom_right_neutral,
    "negation-exists": axiom_negation_exists,
    "negation-unique": axiom_negation_unique,
    "reversal": axiom_reversal,
    "reversibility": axiom_reversibility,
    "neg-zero": axiom_neg_zero,
    "neg-involution": axiom_neg_involution,
    "add-commutative": axiom_add_commutative,
    "mul-associative": axiom_mul_associative,
    "mul-unit": axiom_mul_unit,
    "zero-mul": axiom_zero_mul,
    "distributive-inclusion": axiom_distributive_sub,
    "distributive-equality": axiom_distributive_eq,
    "mul-commutative": axiom_mul_commutative,
    "units-group": axiom_units_group,
    "no-zero-divisors": axiom_no_zero_divisors,
}


def replay(X: Structure, check: Check) -> bool:
    """Re-run a failed check's predicate on its stored witness."""
    if check.witness is None:
        raise ValueError(f"check {check.axiom} has no witness")
    return PREDICATES[check.axiom](X, check.witness)


# ---------------------------------------------------------------------------
# checkers


def _run_axiom(
    report: AxiomReport,
    X: Structure,
    axiom: str,
    arity: int,
    budget: int,
    rng: random.Random,
) -> None:
    pred = PREDICATES[axiom]
    count = 0
    try:
        for tup in _tuples(X, rng, arity, budget):
            count += 1
            if not pred(X, tup):
                report.add(axiom, False, tup, _wtext(X, tup))
                report.tuples_checked += count
                return
    except EmptySumError as exc:
        report.add(axiom, False, None, str(exc), detail="empty-sum violation")
        report.tuples_checked += count
        return
    report.add(axiom, True)
    report.tuples_checked += count


def _split_budget(budget: int, weights: dict[str, int]) -> dict[str, int]:
    total = sum(weights.values())
    return {k: max(8, budget * w // total) for k, w in weights.items()}


def check_multigroup(
    X: Structure,
    mode: str = "full",
    budget: int = 2000,
    rng: random.Random | None = None,
) -> AxiomReport:
    """Verify the multigroup axioms for (carrier, add, neg, zero).

    `full` checks associativity, two-sided neutrality, existence/uniqueness of
    negation and the reversal law; `minimal` checks the reduced axiom set
    (weak associativity, right neutrality, reversibility).
    """
    if mode not in ("full", "minimal"):
        raise ValueError(f"unknown mode {mode!r}")
    rng = rng or random.Random(0)
    rep = AxiomReport(structure=X.name)
    if mode == "full":
        shares = _split_budget(
            budget,
            {
                "associativity": 4,
                "neutral": 1,
                "negation-exists": 1,
                "negation-unique": 2,
                "reversal": 2,
                "neg-zero": 1,
                "neg-involution": 1,
            },
        )
        _run_axiom(rep, X, "associativity", 3, shares["associativity"], rng)
        _run_axiom(rep, X, "neutral", 1, shares["neutral"], rng)
        _run_axiom(rep, X, "negation-exists", 1, shares["negation-exists"], rng)
        _run_axiom(rep, X, "negation-unique", 2, shares["negation-unique"], rng)
        _run_reversal(rep, X, shares["reversal"], rng)
        _run_axiom(rep, X, "neg-zero", 1, 1, rng)
        _run_axiom(rep, X, "neg-involution", 1, shares["neg-involution"], rng)
    else:
        shares = _split_budget(
            budget, {"weak-associativity": 4, "right-neutral": 1, "reversibility": 3}
        )
        _run_axiom(rep, X, "weak-associativity", 3, shares["weak-associativity"], rng)
        _run_axiom(rep, X, "right-neutral", 1, shares["right-neutral"], rng)
        _run_reversibility(rep, X, shares["reversibility"], rng)
    return rep


def _run_reversal(rep: AxiomReport, X: Structure, budget: int, rng: random.Random) -> None:
    count = 0
    if X.is_finite:
        for a, b, c in itertools.product(X.elements(), repeat=3):
            count += 1
            if not axiom_reversal(X, (a, b, c)):
                rep.add("reversal", False, (a, b, c), _wtext(X, (a, b, c)))
                rep.tuples_checked += count
                return
    else:
        for a, b in stratified_tuples(X, rng, 2, budget):
            for c in X.pick(X.add(a, b), rng, 2) + [X.random_elem(rng)]:
                count += 1
                if not axiom_reversal(X, (a, b, c)):
                    rep.add("reversal", False, (a, b, c), _wtext(X, (a, b, c)))
                    rep.tuples_checked += count
                    return
    rep.add("reversal", True)
    rep.tuples_checked += count


def _run_reversibility(rep: AxiomReport, X: Structure, budget: int, rng: random.Random) -> None:
    count = 0
    if X.is_finite:
        for a, b, c in itertools.product(X.elements(), repeat=3):
            count += 1
            if not axiom_reversibility(X, (a, b, c)):
                rep.add("reversibility", False, (a, b, c), _wtext(X, (a, b, c)))
                rep.tuples_checked += count
                return
    else:
        for a, b in stratified_tuples(X, rng, 2, budget):
            for c in X.pick(X.add(a, b), rng, 2):
                count += 1
                if not axiom_reversibility(X, (a, b, c)):
                    rep.add("reversibility", False, (a, b, c), _wtext(X, (a, b, c)))
                    rep.tuples_checked += count
                    return
    rep.add("reversibility", True)
    rep.tuples_checked += count


def check_multiring(
    X: Structure,
    level: str = "multiring",
    budget: int = 2000,
    rng: random.Random | None = None,
) -> AxiomReport:
    """Check multiring axioms, upgrading distributivity to equality at the
    hyperring level and adding the multiplicative-group laws at hyperfield
    level."""
    if level not in ("multiring", "hyperring", "hyperfield"):
        raise ValueError(f"unknown level {level!r}")
    rng = rng or random.Random(0)
    rep = check_multigroup(X, "full", budget // 2, rng)
    rep.structure = X.name
    _run_axiom(rep, X, "add-commutative", 2, budget // 4, rng)
    _run_axiom(rep, X, "mul-associative", 3, budget // 8, rng)
    _run_axiom(rep, X, "mul-unit", 1, budget // 8, rng)
    _run_axiom(rep, X, "zero-mul", 1, budget // 8, rng)
    dist = "distributive-equality" if level != "multiring" else "distributive-inclusion"
    _run_axiom(rep, X, dist, 3, budget // 4, rng)
    if level == "hyperfield":
        _run_axiom(rep, X, "mul-commutative", 2, budget // 8, rng)
        _run_axiom(rep, X, "units-group", 1, budget // 8, rng)
        _run_axiom(rep, X, "no-zero-divisors", 2, budget // 8, rng)
    return rep


def check_double_distributivity(
    X: Structure,
    budget: int = 2000,
    rng: random.Random | None = None,
) -> AxiomReport:
    """(a+b)(x+y) against ax+ay+bx+by.

    The forward containment must hold in any multiring; a violation raises
    DoubleDistributivityViolation.  The reverse containment is reported with
    a witness when it fails.
    """
    rng = rng or random.Random(0)
    rep = AxiomReport(structure=X.name)
    reverse_witness = None
    count = 0
    for a, b, x, y in _tuples(X, rng, 4, budget):
        count += 1
        sab = X.add(a, b)
        sxy = X.add(x, y)
        rhs = X.add_sets(
            X.add_sets(X.add(X.mul(a, x), X.mul(a, y)), X.singleton(X.mul(b, x))),
            X.singleton(X.mul(b, y)),
        )
        for u in X.pick(sab, rng, 2):
            for v in X.pick(sxy, rng, 2):
                if not X.member(X.mul(u, v), rhs):
                    raise DoubleDistributivityViolation(
                        f"{X.name}: ({X.format_elem(a)}+{X.format_elem(b)})"
                        f"({X.format_elem(x)}+{X.format_elem(y)}) "
                        f"not inside the expanded sum at "
                        f"{X.format_elem(X.mul(u, v))}"
                    )
        if reverse_witness is None:
            lhs = X.mul_sets(sab, sxy)
            if lhs is not None:
                if not X.subset(rhs, lhs):
                    reverse_witness = (a, b, x, y)
            else:
                for w in X.pick(rhs, rng, 2):
                    if not _member_via_factorization(X, w, sab, sxy, rng):
                        reverse_witness = (a, b, x, y)
                        break
    rep.tuples_checked = count
    rep.add("half-double-distributivity", True)
    if reverse_witness is None:
        rep.add("double-distributivity", True)
    else:
        rep.add(
            "double-distributivity",
            False,
            reverse_witness,
            _wtext(X, reverse_witness),
            detail="reverse inclusion failed",
        )
    return rep


def _member_via_factorization(X: Structure, w, sab, sxy, rng: random.Random) -> bool:
    """Sampled membership of w in the pointwise product sab*sxy when the
    product has no symbolic form: w = u*v iff inv(u)*w lands in sxy."""
    for u in X.pick(sab, rng, 6):
        if X.is_zero(u):
            if X.is_zero(w):
                return True
            continue
        try:
            ui = X.inv(u)
        except (ZeroDivisionError, NotImplementedError, ValueError):
            continue
        if X.member(X.mul(ui, w), sxy):
            return True
    return False


@dataclass(frozen=True)
class CharResult:
    """Characteristic value; value 0 is exact when the fold stabilized."""

    value: int
    stabilized: bool

    def __int__(self) -> int:
        return self.value


def characteristic(X: Structure, cap: int = 64) -> CharResult:
    """Smallest n <= cap with 0 in the n-fold sum of 1."""
    if cap < 2:
        raise ValueError("cap must be at least 2")
    s = X.singleton(X.one)
    for n in range(1, cap + 1):
        if X.member(X.zero, s):
            return CharResult(n, False)
        nxt = X.add_sets(s, X.singleton(X.one))
        if X.set_eq(nxt, s):
            return CharResult(0, True)
        s = nxt
    return CharResult(0, False)


def c_characteristic(X: Structure, cap: int = 64) -> CharResult:
    """Smallest n <= cap such that the (n+1)-fold sum of 1 contains 1."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    s = X.singleton(X.one)
    for n in range(1, cap + 1):
        nxt = X.add_sets(s, X.singleton(X.one))
        if X.member(X.one, nxt):
            return CharResult(n, False)
        if X.set_eq(nxt, s):
            return CharResult(0, True)
        s = nxt
    return CharResult(0, False)


def check_hom(
    f,
    X: Structure,
    Y: Structure,
    budget: int = 500,
    rng: random.Random | None = None,
    name: str = "f",
) -> HomReport:
    """Verify f as a multiring homomorphism X -> Y on the checked domain.

    Additive containment is tested pointwise: every sampled c in a+b must map
    into f(a) + f(b).  Strongness is exact for finite domains and sampled
    otherwise.
    """
    rng = rng or random.Random(0)
    rep = HomReport(name=name)
    rep.zero_preserved = Y.eq(f(X.zero), Y.zero)
    if X.has_one and Y.has_one:
        rep.one_preserved = Y.eq(f(X.one), Y.one)
    if X.is_finite:
        pairs = list(itertools.product(X.elements(), repeat=2))
        domain = X.elements()
    else:
        pairs = list(stratified_tuples(X, rng, 2, budget))
        seen = []
        for a, b in pairs[: budget // 2]:
            seen.extend([a, b])
        domain = seen
    for a, b in pairs:
        rep.pairs_checked += 1
        img = Y.add(f(a), f(b))
        mapped = []
        for c in X.pick(X.add(a, b), rng, 3):
            fc = f(c)
            mapped.append(fc)
            if not Y.member(fc, img):
                rep.additive = False
                if rep.witness is None:
                    rep.witness = (a, b)
                    rep.witness_text = _wtext(X, (a, b))
        if X.has_mul and Y.has_mul:
            if not Y.eq(f(X.mul(a, b)), Y.mul(f(a), f(b))):
                rep.multiplicative = False
                if rep.witness is None:
                    rep.witness = (a, b)
                    rep.witness_text = _wtext(X, (a, b))
        if rep.strong:
            if X.is_finite:
                img_parts = None
                for fc in mapped:
                    s = Y.singleton(fc)
                    img_parts = s if img_parts is None else Y.union_sets(img_parts, s)
                if img_parts is None or not Y.set_eq(img_parts, img):
                    rep.strong = False
            else:
                rep.strong_exact = False
                for d in Y.pick(img, rng, 3):
                    if not any(Y.eq(d, fc) for fc in mapped):
                        rep.strong = False
                        break
    kernel_seen: list = []
    mul_kernel_seen: list = []
    for a in domain:
        fa = f(a)
        if Y.eq(fa, Y.zero) and not any(X.eq(a, k) for k in kernel_seen):
            kernel_seen.append(a)
        if Y.has_one and Y.eq(fa, Y.one) and not any(X.eq(a, k) for k in mul_kernel_seen):
            mul_kernel_seen.append(a)
    rep.kernel = [X.format_elem(a) for a in kernel_seen[:16]]
    rep.mul_kernel = [X.format_elem(a) for a in mul_kernel_seen[:16]]
    return rep
