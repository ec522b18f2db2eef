"""Explicit QHS families: small bases, the 4-generator extension, towers.

The extension step wraps a QHS on m generators into one on m + 4: inner
letters shift up by two, two new letters appear below them and two above,
the inner top-product relation is dropped, and a fixed pattern of equality
relations ties the new letters to the old ones.  Iterating the step over a
small base gives, for every n, a QHS whose relation count meets the known
minimum delta(n), and these are the presentations the nilpotency search
runs on.
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import DEFAULT_LIMITS, EngineLimits, iter_class
from .model import (
    IdealMode,
    Presentation,
    Relation,
    Word,
    delta,
    presentation,
    strip_top,
    validate_qhs,
)

_BASE_RELATIONS = {
    1: [
        ("zero", (1, 1)),
    ],
    2: [
        ("equal", (2, 2), (1, 1)),
        ("zero", (2, 1)),
    ],
    3: [
        ("equal", (3, 3), (2, 1)),
        ("equal", (3, 2), (1, 1)),
        ("zero", (2, 2)),
        ("zero", (3, 1)),
    ],
    4: [
        ("equal", (4, 4), (3, 1)),
        ("equal", (4, 3), (2, 1)),
        ("equal", (4, 2), (1, 1)),
        ("equal", (3, 3), (2, 2)),
        ("zero", (3, 2)),
        ("zero", (4, 1)),
    ],
}


def base_qhs(n: int) -> Presentation:
    """Hand-built minimum-size QHS for n = 1..4, the towers' ground floors."""
    if n not in _BASE_RELATIONS:
        raise ValueError("base presentations exist for 1 <= n <= 4 only")
    rels = []
    for item in _BASE_RELATIONS[n]:
        if item[0] == "zero":
            rels.append(Relation.zero(*item[1]))
        else:
            rels.append(Relation.equal(item[1], item[2]))
    return presentation(n, rels)


def extend(inner: Presentation) -> Presentation:
    """QHS on m + 4 generators wrapping a valid QHS on m generators.

    Inner letter i becomes i + 2; letters 1, 2 and n - 1, n are new.  The
    inner top zero x_m*x_1 = 0 is dropped rather than relabeled, and the
    new letters are wired in by three equality families plus the fresh top
    zero x_n*x_1 = 0.  The result is again a valid QHS and adds
    2(m + 4) - 3 relations net.
    """
    report = validate_qhs(inner)
    if not report.valid:
        raise ValueError("extension requires a valid QHS inner presentation")
    m = inner.alphabet.n
    n = m + 4
    stripped = strip_top(inner)
    rels = []
    for r in stripped.relations:
        a, b = r.left
        if r.right is None:
            rels.append(Relation.zero(a + 2, b + 2))
        else:
            c, d = r.right
            rels.append(Relation.equal((a + 2, b + 2), (c + 2, d + 2)))
    for j in range(2, n - 1):
        rels.append(Relation.equal((n, j), (j, 1)))
    for j in range(2, n - 2):
        rels.append(Relation.equal((n - 1, j + 1), (j, 2)))
    rels.append(Relation.equal((n, n), (n - 1, 1)))
    rels.append(Relation.equal((n, n - 1), (n - 2, 2)))
    rels.append(Relation.equal((n - 1, n - 1), (n - 2, 3)))
    rels.append(Relation.equal((n - 1, 2), (1, 1)))
    rels.append(Relation.zero(n, 1))
    return presentation(n, rels)


@dataclass(frozen=True)
class TowerSpec:
    """How to reach n generators: a base size and a number of extensions."""

    n: int
    base_size: int
    extensions: int


def tower_spec(n: int) -> TowerSpec:
    if n < 1:
        raise ValueError("n must be at least 1")
    j = (n - 1) // 4
    return TowerSpec(n, n - 4 * j, j)


def build_regular_qhs(n: int) -> Presentation:
    """Tower presentation on n generators with exactly delta(n) relations."""
    spec = tower_spec(n)
    p = base_qhs(spec.base_size)
    for _ in range(spec.extensions):
        p = extend(p)
    assert len(p.relations) == delta(n)
    return p


def witness_power(n: int) -> int:
    """Power q such that the class of x1^q reaches the top letter x_n.

    Defined for the tower presentations with n >= 5; the even and odd
    cases differ by how the last extension's letters interleave.
    """
    if n < 5:
        raise ValueError("witness powers are defined for n >= 5")
    if n % 2:
        return (5 * n - 9) // 2
    return (5 * n - 8) // 2


def power_witness(p: Presentation, q: int | None = None,
                  limits: EngineLimits = DEFAULT_LIMITS) -> Word | None:
    """Member of the reduced-ideal class of x1^q ending in the top letter.

    Scans the swap closure in discovery order and stops at the first such
    member, because at moderate n the full class is far larger than the
    distance to a witness.  Returns None when the closure is exhausted
    without one.  The default power is witness_power(n).
    """
    n = p.alphabet.n
    if q is None:
        q = witness_power(n)
    if q < 1:
        raise ValueError("the power must be at least 1")
    for member in iter_class((1,) * q, p, IdealMode.WITHOUT_TOP, limits):
        if member[-1] == n:
            return member
    return None


def wisliceny_count(n: int) -> int:
    """Relation count of the classical pure construction on n generators.

    Evaluates to (n^2 + 2n) / 4 rounded up, the proven minimum for QHS
    presentations all of whose generators are pure.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if n % 2 == 0:
        return (n * n + 2 * n) // 4
    return (n * n + 2 * n + 1) // 4
