"""Coset engine: word classes modulo quadratic semigroup relations.

Everything happens inside one degree.  Relations are homogeneous of degree
2, so replacing an adjacent two-letter factor by the other side of a
binomial relation (a "swap") preserves length.  The class of a word is its
closure under swaps in both directions, and a class is zero exactly when
some member carries a zero monomial as an adjacent factor.  Every nonzero
class contains a unique member that is least in the right-to-left order,
its minimal monomial.

Internally letters are bytes (letter i is the byte i) and words are byte
strings: slicing, substring tests and the reversed-word order key ``w[::-1]``
all run at C speed.  Class walks are depth-first; the visiting order does
not affect any result because the full closure is always taken.

Minimality is decided by walking the whole class, never by greedy directed
reduction.  The directed rewriting system terminates but nothing guarantees
confluence, so a greedy normal form could land above the true minimum.  Two
shortcuts remain sound without confluence: a word containing the left side
of an equality rewrites to a strictly smaller equivalent word and is never
minimal, and a word containing a zero pair is zero.

Resource caps never silently change an answer.  Hitting max_class_size
raises ResourceExhausted, and callers report that outcome as inconclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache

from .model import (
    IdealMode,
    Presentation,
    Word,
    monomial_str,
    validate_qhs,
)

ENGINE_VERSION = "1.0.0"


@dataclass(frozen=True)
class EngineLimits:
    """Resource guards; generous defaults, overridable per call."""

    max_class_size: int = 5_000_000
    max_degree: int = 64

    def __post_init__(self):
        if self.max_class_size < 1 or self.max_degree < 1:
            raise ValueError("engine limits must be positive")


DEFAULT_LIMITS = EngineLimits()


class ResourceExhausted(RuntimeError):
    """A class walk outgrew max_class_size; the question stays open."""

    def __init__(self, message: str, word: Word | None = None):
        super().__init__(message)
        self.word = word


class Classification(Enum):
    TAME = "tame"
    SINGULAR = "singular"
    NON_MINIMAL = "non_minimal"
    ZERO = "zero"


@dataclass(frozen=True)
class CosetClass:
    """Outcome of one class walk: zero, or the members plus their minimum."""

    degree: int
    members: frozenset | None
    minimal: Word | None
    parents: dict | None = field(default=None, compare=False, repr=False)

    @property
    def is_zero(self) -> bool:
        return self.members is None


@dataclass(frozen=True)
class MinimalBasis:
    """All minimal monomials of one degree, rtl-ascending.

    ``singular`` is the subset classified singular; it is only meaningful
    when the basis was computed in WITHOUT_TOP mode and is empty otherwise.
    """

    degree: int
    minimals: tuple
    singular: tuple


@dataclass(frozen=True)
class RegularityResult:
    """First singular-free degree, or how far the search got.

    status is 'regular' (degree = first degree with no singular words,
    nilpotency_bound = degree + 1), 'irregular_up_to' (singular words
    survived through the degree cap) or 'inconclusive' (a resource cap cut
    the walk; degree is the last fully decided one).
    """

    status: str
    degree: int
    nilpotency_bound: int | None = None
    detail: str = ""

    @property
    def is_regular(self) -> bool:
        return self.status == "regular"


class _Rules:
    """Presentation compiled to byte tables for one ideal mode."""

    __slots__ = ("n", "maxbyte", "swap", "zeros", "skip_pairs")

    def __init__(self, n, maxbyte, swap, zeros, skip_pairs):
        self.n = n
        self.maxbyte = maxbyte
        self.swap = swap
        self.zeros = zeros
        self.skip_pairs = skip_pairs


@lru_cache(maxsize=256)
def _rules(p: Presentation, mode: IdealMode) -> _Rules:
    n = p.alphabet.n
    if n > 255:
        raise ValueError("the coset engine supports at most 255 generators")
    zero_pairs = [r.left for r in p.relations if r.is_zero]
    if mode is IdealMode.WITHOUT_TOP:
        top = (n, 1)
        if top not in zero_pairs:
            raise ValueError(
                f"WITHOUT_TOP drops the zero monomial x{n}*x1 but the presentation lacks it"
            )
        zero_pairs.remove(top)
    swap: dict = {}
    redex = set()
    for rel in p.relations:
        if rel.is_zero:
            continue
        left = bytes(rel.left)
        right = bytes(rel.right)
        swap.setdefault(left, []).append(right)
        swap.setdefault(right, []).append(left)
        redex.add(left)
    swap = {k: tuple(v) for k, v in swap.items()}
    zeros = tuple(sorted(bytes(q) for q in zero_pairs))
    skip = frozenset(zeros) | redex
    return _Rules(n, n, swap, zeros, skip)


def _encode_word(word, p: Presentation) -> bytes:
    if len(word) == 0:
        raise ValueError("the empty word has no coset class")
    n = p.alphabet.n
    for x in word:
        if not isinstance(x, int) or not 1 <= x <= n:
            raise ValueError(f"letter {x!r} outside alphabet 1..{n}")
    return bytes(word)


def _rev(b: bytes) -> bytes:
    return b[::-1]


def _exhausted(w: bytes, cap: int) -> ResourceExhausted:
    return ResourceExhausted(
        f"coset class of {monomial_str(tuple(w))} exceeded {cap} members",
        word=tuple(w),
    )


def _full_class(w: bytes, rules: _Rules, cap: int, want_parents: bool = False):
    """Complete closure of w under swaps; stops early only on a zero hit.

    Returns (zero, seen, parents).  On a zero hit, seen is the part walked
    so far; every word in it belongs to the (zero) class.
    """
    zeros = rules.zeros
    swap = rules.swap
    seen = {w}
    stack = [w]
    parents: dict | None = {} if want_parents else None
    while stack:
        v = stack.pop()
        for z in zeros:
            if z in v:
                return True, seen, parents
        for i in range(len(v) - 1):
            reps = swap.get(v[i:i + 2])
            if reps is None:
                continue
            head = v[:i]
            tail = v[i + 2:]
            for r in reps:
                nb = head + r + tail
                if nb not in seen:
                    if len(seen) >= cap:
                        raise _exhausted(w, cap)
                    seen.add(nb)
                    stack.append(nb)
                    if parents is not None:
                        parents[nb] = (v, i)
    return False, seen, parents


def _top_suffix_witness(v: bytes, w: bytes, m: int, maxbyte: int) -> bool:
    """True when v carries the top letter at a position after which v and w agree."""
    if maxbyte not in v:
        return False
    s = 0
    while s < m and v[m - 1 - s] == w[m - 1 - s]:
        s += 1
    start = m - s - 1
    if start < 0:
        start = 0
    return maxbyte in v[start:]


_ZERO_MARK = b""

# Per-degree budget of words whose class verdicts are memoized beyond the
# candidates themselves.  Within the budget whole classes are cached and
# sibling candidates settle by lookup; past it only candidate words are
# cached and the rest settle through the in-walk order comparison, which
# is slower but needs no extra memory.
_MEMO_WORD_BUDGET = 2_000_000


def _cache_class(known: dict, seen: set, mark: bytes, cand_set: frozenset,
                 memo_room: int) -> int:
    """Record one walked class's verdict; returns the remaining budget."""
    if len(seen) <= memo_room:
        for v in seen:
            known[v] = mark
        return memo_room - len(seen)
    for v in seen:
        if v in cand_set:
            known[v] = mark
    return memo_room


def _probe(w: bytes, rules: _Rules, cap: int, known: dict | None,
           want_tame: bool, stop_on_tame: bool):
    """Classify w by walking its class with early exits.

    Returns (status, tame, seen) with status one of:

      'zero'          the class is zero; seen words all belong to it
      'nonminimal'    some member precedes w (the class may also be zero,
                      which callers treat the same way: w is not kept)
      'not_singular'  stop_on_tame only: a tame witness appeared first
      'minimal'       the class was exhausted, w is its minimum, seen is
                      the complete class and tame is exact

    ``known`` carries verdicts from earlier walks of the same degree: the
    empty-bytes mark for members of zero classes, or the class minimum for
    fully enumerated classes.  Touching a known word settles w at once.
    """
    zeros = rules.zeros
    swap = rules.swap
    maxbyte = rules.maxbyte
    for z in zeros:
        if z in w:
            return "zero", False, {w}
    wrev = w[::-1]
    m = len(w)
    tame = False
    if want_tame and _top_suffix_witness(w, w, m, maxbyte):
        if stop_on_tame:
            return "not_singular", True, None
        tame = True
    seen = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        for i in range(len(v) - 1):
            reps = swap.get(v[i:i + 2])
            if reps is None:
                continue
            head = v[:i]
            tail = v[i + 2:]
            for r in reps:
                nb = head + r + tail
                if nb in seen:
                    continue
                if known is not None:
                    kn = known.get(nb)
                    if kn is not None:
                        if kn:
                            return "nonminimal", False, None
                        seen.add(nb)
                        return "zero", False, seen
                hit_zero = False
                for z in zeros:
                    if z in nb:
                        hit_zero = True
                        break
                if hit_zero:
                    seen.add(nb)
                    return "zero", False, seen
                if nb[::-1] < wrev:
                    return "nonminimal", False, None
                if want_tame and not tame and _top_suffix_witness(nb, w, m, maxbyte):
                    if stop_on_tame:
                        return "not_singular", True, None
                    tame = True
                if len(seen) >= cap:
                    raise _exhausted(w, cap)
                seen.add(nb)
                stack.append(nb)
    return "minimal", tame, seen


def coset_class(word, p: Presentation, mode: IdealMode = IdealMode.FULL,
                limits: EngineLimits = DEFAULT_LIMITS,
                track_parents: bool = False) -> CosetClass:
    """Full swap closure of a word, with the zero verdict folded in.

    With track_parents the discovery tree is recorded: parents[child] is
    (parent, position) where child arose from parent by one swap at the
    given position.
    """
    w = _encode_word(word, p)
    rules = _rules(p, mode)
    zero, seen, parents = _full_class(w, rules, limits.max_class_size, track_parents)
    pmap = None
    if parents is not None:
        pmap = {tuple(k): (tuple(v), i) for k, (v, i) in parents.items()}
    if zero:
        return CosetClass(len(w), None, None, pmap)
    members = frozenset(map(tuple, seen))
    minimal = tuple(min(seen, key=_rev))
    return CosetClass(len(w), members, minimal, pmap)


def minimal_monomial(word, p: Presentation, mode: IdealMode = IdealMode.FULL,
                     limits: EngineLimits = DEFAULT_LIMITS) -> Word | None:
    """Least member of the word's class, or None when the class is zero."""
    cls = coset_class(word, p, mode, limits)
    return cls.minimal


def iter_class(word, p: Presentation, mode: IdealMode = IdealMode.FULL,
               limits: EngineLimits = DEFAULT_LIMITS):
    """Stream the swap closure of a word in discovery order, root first.

    Yields plain members without the zero verdict or the minimum, so an
    existence scan (does any member look like this?) can stop early
    instead of materializing a class that may be millions of words.
    Raises ResourceExhausted past the class-size cap.
    """
    w = _encode_word(word, p)
    rules = _rules(p, mode)
    cap = limits.max_class_size
    swap = rules.swap
    seen = {w}
    stack = [w]
    while stack:
        v = stack.pop()
        yield tuple(v)
        for i in range(len(v) - 1):
            reps = swap.get(v[i:i + 2])
            if reps is None:
                continue
            head = v[:i]
            tail = v[i + 2:]
            for r in reps:
                nb = head + r + tail
                if nb not in seen:
                    if len(seen) >= cap:
                        raise _exhausted(w, cap)
                    seen.add(nb)
                    stack.append(nb)


def classify(word, p: Presentation, mode: IdealMode = IdealMode.WITHOUT_TOP,
             limits: EngineLimits = DEFAULT_LIMITS) -> Classification:
    """Exact classification of a word against the reduced ideal.

    Zero beats everything, then non-minimality; a minimal word is tame when
    some class member shows the top letter at a position after which it
    agrees with the word, else singular.  Only WITHOUT_TOP mode is allowed:
    the tame/singular split is defined against the reduced ideal.
    """
    if mode is not IdealMode.WITHOUT_TOP:
        raise ValueError("classification is defined against the reduced ideal (WITHOUT_TOP)")
    cls = coset_class(word, p, mode, limits)
    w = tuple(word)
    if cls.is_zero:
        return Classification.ZERO
    if cls.minimal != w:
        return Classification.NON_MINIMAL
    rules = _rules(p, mode)
    wb = bytes(w)
    m = len(wb)
    for member in cls.members:
        if _top_suffix_witness(bytes(member), wb, m, rules.maxbyte):
            return Classification.TAME
    return Classification.SINGULAR


def initial_basis(p: Presentation, mode: IdealMode = IdealMode.FULL) -> MinimalBasis:
    """Degree-1 basis: every letter; a letter is tame exactly when it is x_n."""
    rules = _rules(p, mode)
    n = rules.n
    minimals = tuple((x,) for x in range(1, n + 1))
    singular = tuple((x,) for x in range(1, n)) if mode is IdealMode.WITHOUT_TOP else ()
    return MinimalBasis(1, minimals, singular)


def next_minimal_basis(basis: MinimalBasis, p: Presentation,
                       mode: IdealMode = IdealMode.FULL,
                       limits: EngineLimits = DEFAULT_LIMITS) -> MinimalBasis:
    """Minimal monomials one degree up from a complete minimal basis.

    Candidates are the one-letter extensions of the given minimals; a word
    is kept exactly when it is the minimum of its own nonzero class.  The
    prefix of a minimal word is minimal, so the candidate set is complete.
    Candidates are walked in ascending order, and once a class has been
    enumerated every other candidate inside it is settled by table lookup.
    """
    rules = _rules(p, mode)
    cap = limits.max_class_size
    want_tame = mode is IdealMode.WITHOUT_TOP
    letters = [bytes([x]) for x in range(1, rules.n + 1)]
    cands = [bytes(u) + x for u in basis.minimals for x in letters]
    cands.sort(key=_rev)
    cand_set = frozenset(cands)
    known: dict = {}
    memo_room = _MEMO_WORD_BUDGET
    keep = []
    sing = []
    skip_pairs = rules.skip_pairs
    for c in cands:
        if c[-2:] in skip_pairs:
            continue
        if c in known:
            continue
        status, tame, seen = _probe(c, rules, cap, known, want_tame, False)
        if status == "zero":
            memo_room = _cache_class(known, seen, _ZERO_MARK, cand_set, memo_room)
        elif status == "minimal":
            keep.append(c)
            if want_tame and not tame:
                sing.append(c)
            memo_room = _cache_class(known, seen, c, cand_set, memo_room)
    return MinimalBasis(
        basis.degree + 1,
        tuple(map(tuple, keep)),
        tuple(map(tuple, sing)),
    )


def iter_singular_sets(p: Presentation, limits: EngineLimits = DEFAULT_LIMITS):
    """Yield (degree, singular words) degree by degree against the reduced ideal.

    Factors of singular words are singular, so degree k+1 candidates are
    the extensions u + x of degree-k singular words whose length-k suffix
    is singular too, and the iteration may stop at the first empty degree:
    every later degree is empty as well.  Runs until the set empties or
    limits.max_degree is reached.  Requires a valid QHS.
    """
    report = validate_qhs(p)
    if not report.valid:
        raise ValueError("singular sets are defined for valid QHS presentations only")
    rules = _rules(p, IdealMode.WITHOUT_TOP)
    n = rules.n
    cap = limits.max_class_size
    letters = [bytes([x]) for x in range(1, n + 1)]
    sing = [bytes([x]) for x in range(1, n)]
    yield 1, tuple(map(tuple, sing))
    degree = 1
    skip_pairs = rules.skip_pairs
    while sing and degree < limits.max_degree:
        degree += 1
        prev = set(sing)
        cands = sorted(
            {u + x for u in sing for x in letters if u[1:] + x in prev},
            key=_rev,
        )
        cand_set = frozenset(cands)
        known: dict = {}
        memo_room = _MEMO_WORD_BUDGET
        nxt = []
        for c in cands:
            if c[-2:] in skip_pairs:
                continue
            if c in known:
                continue
            status, tame, seen = _probe(c, rules, cap, known, True, True)
            if status == "zero":
                memo_room = _cache_class(known, seen, _ZERO_MARK, cand_set, memo_room)
            elif status == "minimal":
                nxt.append(c)
                memo_room = _cache_class(known, seen, c, cand_set, memo_room)
        sing = nxt
        yield degree, tuple(map(tuple, sing))


def singular_monomials(p: Presentation, m: int,
                       limits: EngineLimits = DEFAULT_LIMITS) -> tuple:
    """Singular words of degree m, rtl-ascending."""
    if m < 1:
        raise ValueError("degree must be at least 1")
    lim = limits if limits.max_degree >= m else replace(limits, max_degree=m)
    for degree, words in iter_singular_sets(p, lim):
        if degree == m:
            return words
        if not words:
            break
    return ()


def regularity_degree(p: Presentation,
                      limits: EngineLimits = DEFAULT_LIMITS) -> RegularityResult:
    """Search for the first degree with no singular words.

    Finding one at degree m settles everything: the algebra of the full
    presentation is nilpotent of index at most m + 1.
    """
    last = 0
    try:
        for degree, words in iter_singular_sets(p, limits):
            last = degree
            if not words:
                return RegularityResult("regular", degree, degree + 1)
        return RegularityResult("irregular_up_to", limits.max_degree)
    except ResourceExhausted as exc:
        return RegularityResult("inconclusive", last, None, str(exc))


def basis_to_json(basis: MinimalBasis, truncated: bool = False) -> dict:
    return {
        "degree": basis.degree,
        "minimals": [list(w) for w in basis.minimals],
        "singular": [list(w) for w in basis.singular],
        "truncated": truncated,
    }
