"""Reference implementations used as test oracles.

Everything here recomputes results from the definitions with no shared
code or data structures with the package: words are plain tuples, order
comparison walks positions explicitly, and class partitions come from
union-find over all n^m words.  Slow on purpose; keep n and degrees tiny.
"""

from __future__ import annotations

from itertools import product


def rtl_less(u, v) -> bool:
    """u < v by comparing positions from the last one backwards."""
    assert len(u) == len(v)
    for j in range(len(u) - 1, -1, -1):
        if u[j] != v[j]:
            return u[j] < v[j]
    return False


def rtl_sorted(words):
    out = list(words)
    # insertion sort against rtl_less, to avoid borrowing any key trick
    for i in range(1, len(out)):
        w = out[i]
        j = i - 1
        while j >= 0 and rtl_less(w, out[j]):
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = w
    return out


def relation_tables(p, without_top: bool):
    """(swap pairs, zero pairs) as plain tuples from a package Presentation."""
    swaps = []
    zeros = []
    top = (p.alphabet.n, 1)
    for rel in p.relations:
        if rel.right is None:
            if without_top and rel.left == top:
                continue
            zeros.append(tuple(rel.left))
        else:
            swaps.append((tuple(rel.left), tuple(rel.right)))
    return swaps, zeros


def neighbors(w, swaps):
    for i in range(len(w) - 1):
        pair = w[i:i + 2]
        for left, right in swaps:
            if pair == left:
                yield w[:i] + right + w[i + 2:]
            if pair == right:
                yield w[:i] + left + w[i + 2:]


def has_zero_factor(w, zeros) -> bool:
    return any(w[i:i + 2] in zeros for i in range(len(w) - 1))


class Partition:
    """All n^m words grouped into swap-closure classes, zero flags included."""

    def __init__(self, n: int, m: int, p, without_top: bool):
        swaps, zeros = relation_tables(p, without_top)
        zeros = set(zeros)
        words = list(product(range(1, n + 1), repeat=m))
        parent = {w: w for w in words}

        def find(w):
            while parent[w] != w:
                parent[w] = parent[parent[w]]
                w = parent[w]
            return w

        for w in words:
            for nb in neighbors(w, swaps):
                ra, rb = find(w), find(nb)
                if ra != rb:
                    parent[ra] = rb

        groups: dict = {}
        for w in words:
            groups.setdefault(find(w), []).append(w)
        self.n = n
        self.m = m
        self.classes = [rtl_sorted(g) for g in groups.values()]
        self.zero_roots = set()
        by_word = {}
        for idx, cls in enumerate(self.classes):
            for w in cls:
                by_word[w] = idx
        for w in words:
            if has_zero_factor(w, zeros):
                self.zero_roots.add(by_word[w])
        self.by_word = by_word

    def class_of(self, w):
        return self.classes[self.by_word[w]]

    def is_zero(self, w) -> bool:
        return self.by_word[w] in self.zero_roots

    def minimal_of(self, w):
        if self.is_zero(w):
            return None
        return self.class_of(w)[0]

    def nonzero_minimals(self):
        return rtl_sorted(
            cls[0]
            for idx, cls in enumerate(self.classes)
            if idx not in self.zero_roots
        )

    def is_tame(self, w) -> bool:
        """Some member shows letter n at a position, matching w after it."""
        for v in self.class_of(w):
            for j in range(self.m):
                if v[j] == self.n and v[j + 1:] == w[j + 1:]:
                    return True
        return False

    def singular_words(self):
        out = []
        for idx, cls in enumerate(self.classes):
            if idx in self.zero_roots:
                continue
            w = cls[0]
            if not self.is_tame(w):
                out.append(w)
        return rtl_sorted(out)
