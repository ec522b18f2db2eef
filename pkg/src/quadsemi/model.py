"""Core model: alphabets, words, quadratic relations and presentations.

Generators are the integers ``1..n`` with their natural order; generator
``i`` renders as ``x<i>``.  A degree-2 monomial ``x_a x_b`` is stored as the
pair ``(a, b)``, ``a`` being the left factor.  Words of one fixed degree are
compared in the right-to-left lexicographic order throughout: positions are
scanned from the last letter backwards, so later letters dominate.

A presentation is a duplicate-free collection of quadratic semigroup
relations, each either a zero monomial (``x_a x_b = 0``) or an equality of
two distinct monomials (``x_a x_b = x_c x_d``).  Relations are canonicalised
on construction: the two sides of an equality are oriented so that the left
side is the larger monomial in the pair order, and the relation list is
sorted, so presentations with the same content compare and hash equal.

No coefficient field ever appears.  Every question answered here (spans,
dimensions, nilpotency) only depends on which monomial classes are nonzero,
which is a purely combinatorial matter.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

Pair = tuple[int, int]
Word = tuple[int, ...]


def pair_key(p: Pair) -> tuple[int, int]:
    """Right-to-left order key for a degree-2 monomial."""
    return (p[1], p[0])


def rtl_key(word: Word) -> tuple[int, ...]:
    """Sort key realising the right-to-left lexicographic order."""
    return tuple(reversed(word))


def rtl_lex_cmp(u: Word, v: Word) -> int:
    """Compare two words of equal degree right-to-left; returns -1, 0 or 1.

    ``u`` precedes ``v`` when, at the last position where they differ,
    ``u`` carries the smaller letter.  Words of different degrees are not
    comparable and raise ``ValueError``.
    """
    if len(u) != len(v):
        raise ValueError(
            f"words of degree {len(u)} and {len(v)} are not comparable"
        )
    for a, b in zip(reversed(u), reversed(v)):
        if a != b:
            return -1 if a < b else 1
    return 0


def pair_str(p: Pair) -> str:
    return f"x{p[0]}*x{p[1]}"


def monomial_str(word: Word) -> str:
    return "*".join(f"x{c}" for c in word)


class IdealMode(Enum):
    """Which ideal a computation runs against.

    FULL uses every relation.  WITHOUT_TOP drops the one mandatory zero
    monomial ``x_n x_1`` and keeps everything else; minimality and the
    tame/singular split are defined against this reduced ideal.
    """

    FULL = "full"
    WITHOUT_TOP = "without_top"


def _check_pair(p, label: str) -> None:
    if (
        not isinstance(p, tuple)
        or len(p) != 2
        or not all(isinstance(c, int) and c >= 1 for c in p)
    ):
        raise ValueError(f"{label} must be a pair of positive generator indices, got {p!r}")


@dataclass(frozen=True)
class Relation:
    """One quadratic relation: ``left = 0`` or ``left = right``.

    Binomial relations are stored with the larger side (in the pair order)
    on the left, so rewriting left to right always decreases a word.
    """

    left: Pair
    right: Pair | None = None

    def __post_init__(self):
        _check_pair(self.left, "left monomial")
        if self.right is not None:
            _check_pair(self.right, "right monomial")
            if self.right == self.left:
                raise ValueError(f"binomial relation needs two distinct monomials, got {pair_str(self.left)} twice")
            if pair_key(self.left) < pair_key(self.right):
                left, right = self.right, self.left
                object.__setattr__(self, "left", left)
                object.__setattr__(self, "right", right)

    @classmethod
    def zero(cls, a: int, b: int) -> "Relation":
        return cls((a, b))

    @classmethod
    def equal(cls, ab: Pair, cd: Pair) -> "Relation":
        return cls(tuple(ab), tuple(cd))

    @property
    def is_zero(self) -> bool:
        return self.right is None

    @property
    def support(self) -> frozenset:
        if self.right is None:
            return frozenset((self.left,))
        return frozenset((self.left, self.right))

    def max_letter(self) -> int:
        letters = [*self.left, *(self.right or ())]
        return max(letters)

    def sort_key(self):
        if self.right is None:
            return (pair_key(self.left), 0, ())
        return (pair_key(self.left), 1, pair_key(self.right))

    def __str__(self) -> str:
        rhs = "0" if self.right is None else pair_str(self.right)
        return f"{pair_str(self.left)} = {rhs}"


@dataclass(frozen=True)
class Alphabet:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"alphabet needs at least one generator, got n={self.n!r}")

    def letters(self) -> range:
        return range(1, self.n + 1)

    @property
    def top(self) -> int:
        return self.n


@dataclass(frozen=True)
class Presentation:
    """An alphabet together with a canonically sorted relation tuple."""

    alphabet: Alphabet
    relations: tuple

    def __post_init__(self):
        rels = tuple(sorted(self.relations, key=Relation.sort_key))
        for i in range(1, len(rels)):
            if rels[i] == rels[i - 1]:
                raise ValueError(f"duplicate relation {rels[i]}")
        n = self.alphabet.n
        for rel in rels:
            if rel.max_letter() > n:
                raise ValueError(f"relation {rel} uses a generator beyond x{n}")
        object.__setattr__(self, "relations", rels)

    @property
    def n(self) -> int:
        return self.alphabet.n

    @cached_property
    def support_union(self) -> frozenset:
        return frozenset(q for rel in self.relations for q in rel.support)

    def zero_relations(self) -> tuple:
        return tuple(r for r in self.relations if r.is_zero)

    def binomial_relations(self) -> tuple:
        return tuple(r for r in self.relations if not r.is_zero)

    @cached_property
    def qhs_report(self) -> "QhsReport":
        return validate_qhs(self)

    @property
    def is_qhs(self) -> bool:
        return self.qhs_report.valid

    def __str__(self) -> str:
        body = ", ".join(str(r) for r in self.relations) or "no relations"
        return f"<n={self.n} | {body}>"


def presentation(n: int, relations) -> Presentation:
    return Presentation(Alphabet(n), tuple(relations))


class ViolationKind(Enum):
    DISJOINTNESS_VIOLATED = "disjointness_violated"
    COVERAGE_GAP = "coverage_gap"
    BAD_RELATION_SHAPE = "bad_relation_shape"
    MISSING_TOP_MONOMIAL = "missing_top_monomial"


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    detail: str
    pair: Pair | None = None


@dataclass(frozen=True)
class QhsReport:
    valid: bool
    violations: tuple


def lower_pairs(n: int) -> set:
    """All pairs (a, b) with a >= b; the supports of a QHS partition these."""
    return {(a, b) for a in range(1, n + 1) for b in range(1, a + 1)}


def _equal_shape_ok(left: Pair, right: Pair) -> bool:
    a, b = left
    c, d = right
    return (a >= b > c >= d) or (a > b == c > d)


def validate_qhs(p: Presentation) -> QhsReport:
    """Check the partition axioms defining a QHS.

    Valid means: supports are pairwise disjoint, together they cover every
    pair x_a x_b with a >= b exactly, zero monomials are non-ascending, and
    every binomial matches one of the two admissible shapes
    (a >= b > c >= d, or a > b = c > d).  The mandatory top monomial
    x_n x_1 = 0 is a consequence of the axioms; its absence is reported
    under its own violation kind as well.
    """
    n = p.alphabet.n
    violations = []

    seen: set = set()
    flagged: set = set()
    for rel in p.relations:
        for q in rel.support:
            if q in seen and q not in flagged:
                violations.append(Violation(
                    ViolationKind.DISJOINTNESS_VIOLATED,
                    f"monomial {pair_str(q)} occurs in more than one support",
                    q,
                ))
                flagged.add(q)
            seen.add(q)

    for q in sorted(lower_pairs(n) - seen, key=pair_key):
        violations.append(Violation(
            ViolationKind.COVERAGE_GAP,
            f"no support covers {pair_str(q)}",
            q,
        ))

    for rel in p.relations:
        if rel.is_zero:
            a, b = rel.left
            if a < b:
                violations.append(Violation(
                    ViolationKind.BAD_RELATION_SHAPE,
                    f"zero monomial {pair_str(rel.left)} has ascending letters",
                    rel.left,
                ))
        elif not _equal_shape_ok(rel.left, rel.right):
            violations.append(Violation(
                ViolationKind.BAD_RELATION_SHAPE,
                f"relation {rel} matches neither admissible shape",
                rel.left,
            ))

    top = (n, 1)
    if not any(rel.is_zero and rel.left == top for rel in p.relations):
        violations.append(Violation(
            ViolationKind.MISSING_TOP_MONOMIAL,
            f"mandatory zero monomial {pair_str(top)} is absent",
            top,
        ))

    return QhsReport(not violations, tuple(violations))


def strip_top(p: Presentation) -> Presentation:
    """Remove the mandatory zero monomial x_n x_1, leaving the reduced set."""
    top = Relation.zero(p.alphabet.n, 1)
    if top not in p.relations:
        raise ValueError(f"presentation has no zero relation {pair_str(top.left)} to remove")
    return Presentation(p.alphabet, tuple(r for r in p.relations if r != top))


def delta(n: int) -> int:
    """Minimal size of a QHS on n ordered generators.

    Piecewise quadratic in j = (n - 1) // 4 and equal to
    floor((n*n + n) / 4) + 1 for every n >= 1.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"generator count must be a positive integer, got {n!r}")
    j, r = divmod(n - 1, 4)
    if r == 0:
        return 4 * j * j + 3 * j + 1
    if r == 1:
        return 4 * j * j + 5 * j + 2
    if r == 2:
        return 4 * j * j + 7 * j + 4
    return 4 * j * j + 9 * j + 6


def qhs_cardinality_bounds(n: int) -> tuple[int, int]:
    """Inclusive (min, max) relation counts any QHS on n generators can have."""
    return (delta(n), n * (n + 1) // 2)


def is_pure(c: int, p: Presentation) -> bool:
    """True when generator c never ends a binomial of shape a > b = c > d.

    Purity is only defined for valid QHS presentations; anything else is a
    usage error.
    """
    if not 1 <= c <= p.alphabet.n:
        raise ValueError(f"generator {c} outside alphabet 1..{p.alphabet.n}")
    if not p.is_qhs:
        raise ValueError("purity is defined for valid QHS presentations only")
    for rel in p.relations:
        if rel.right is not None and rel.left[1] == rel.right[0] and rel.right[1] == c:
            return False
    return True


def to_json_dict(p: Presentation) -> dict:
    rels = []
    for rel in p.relations:
        if rel.is_zero:
            rels.append({"zero": list(rel.left)})
        else:
            rels.append({"equal": [list(rel.left), list(rel.right)]})
    return {"n": p.n, "relations": rels}


def from_json_dict(data: dict) -> Presentation:
    if not isinstance(data, dict):
        raise ValueError("presentation JSON must be an object")
    try:
        n = data["n"]
    except KeyError:
        raise ValueError("presentation JSON lacks the generator count 'n'") from None
    entries = data.get("relations", [])
    if not isinstance(entries, list):
        raise ValueError("'relations' must be a list")
    rels = []
    for idx, entry in enumerate(entries):
        if not isinstance(entry, dict) or len(entry) != 1:
            raise ValueError(f"relations entry {idx}: expected one 'zero' or 'equal' key")
        if "zero" in entry:
            q = entry["zero"]
            if not (isinstance(q, list) and len(q) == 2):
                raise ValueError(f"relations entry {idx}: 'zero' needs a pair")
            rels.append(Relation.zero(q[0], q[1]))
        elif "equal" in entry:
            q = entry["equal"]
            if not (isinstance(q, list) and len(q) == 2):
                raise ValueError(f"relations entry {idx}: 'equal' needs two pairs")
            rels.append(Relation.equal(tuple(q[0]), tuple(q[1])))
        else:
            raise ValueError(f"relations entry {idx}: unknown relation kind")
    return presentation(n, rels)


def canonical_json(p: Presentation) -> str:
    return json.dumps(to_json_dict(p), sort_keys=True, separators=(",", ":"))


def presentation_hash(p: Presentation) -> str:
    """Stable 16-hex content id over the canonical serialisation."""
    return hashlib.sha256(canonical_json(p).encode("ascii")).hexdigest()[:16]
