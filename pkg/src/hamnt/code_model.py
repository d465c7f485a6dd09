"""Codes as finite vertex subsets of a Hamming graph.

A Code stores its words sorted and deduplicated and is immutable; the
derived quantities (minimum distance, neighbour set) are cached on first
use.  Codes are stored extensionally even when they happen to be linear:
linearity is detected, never declared.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable

from .errors import CodeFormatError, SchemeMismatchError
from .hamming_core import (HammingScheme, Vertex, distance, neighbours,
                           vertex_from_text, vertex_to_text)
from .wreath_group import (DEFAULT_GROUP_CAP, Automorphism, GeneratorSet,
                           enumerate_full_group, translation)


class Code:
    """A deduplicated, lexicographically sorted set of vertices of one scheme."""

    def __init__(self, scheme: HammingScheme, words: Iterable[Vertex]):
        ws = sorted(set(words))
        for w in ws:
            if w.scheme != scheme:
                raise SchemeMismatchError(f"word {w} does not belong to {scheme}")
        self.scheme = scheme
        self.words = tuple(ws)
        self._word_set = frozenset(ws)

    @classmethod
    def from_entries(cls, scheme: HammingScheme, rows: Iterable[Iterable[int]]) -> "Code":
        return cls(scheme, (scheme.vertex(row) for row in rows))

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, v: Vertex):
        return v in self._word_set

    def __eq__(self, other):
        return (isinstance(other, Code) and self.scheme == other.scheme
                and self.words == other.words)

    def __hash__(self):
        return hash((self.scheme, self.words))

    def __repr__(self):
        return f"Code({self.scheme}, {{{', '.join(vertex_to_text(w) for w in self.words)}}})"

    @cached_property
    def min_distance(self) -> float:
        """Minimum pairwise distance; math.inf when fewer than two words."""
        if len(self.words) <= 1:
            return math.inf
        return min(distance(u, v) for u, v in itertools.combinations(self.words, 2))

    @cached_property
    def neighbour_set(self) -> tuple[Vertex, ...]:
        """All non-codewords adjacent to at least one codeword, sorted."""
        out = set()
        for w in self.words:
            out.update(neighbours(w))
        out -= self._word_set
        return tuple(sorted(out))

    def image(self, x: Automorphism) -> "Code":
        """The code {apply(x, w) : w in C}."""
        if x.scheme != self.scheme:
            raise SchemeMismatchError("automorphism from a different scheme")
        return Code(self.scheme, (x.apply(w) for w in self.words))


@dataclass(frozen=True)
class EquivalenceWitness:
    """An automorphism certifying image(C, y) = C' for a code pair."""

    y: Automorphism


def shell(alpha: Vertex, radius: int) -> tuple[Vertex, ...]:
    """All vertices at distance exactly radius from alpha, sorted.

    Size is C(m, radius) * (q-1)^radius.
    """
    scheme = alpha.scheme
    if not 0 <= radius <= scheme.m:
        raise ValueError(f"radius {radius} outside 0..{scheme.m}")
    others = [[c for c in range(scheme.q) if c != e] for e in alpha.entries]
    out = []
    for positions in itertools.combinations(range(scheme.m), radius):
        for values in itertools.product(*(others[i] for i in positions)):
            entries = list(alpha.entries)
            for i, c in zip(positions, values):
                entries[i] = c
            out.append(Vertex(scheme, tuple(entries)))
    return tuple(sorted(out))


def stabilizes_set(vertices: Iterable[Vertex], x: Automorphism) -> bool:
    """True iff x maps the vertex set onto itself."""
    vs = set(vertices)
    for v in vs:
        if v.scheme != x.scheme:
            raise SchemeMismatchError("set member from a different scheme")
    return {x.apply(v) for v in vs} == vs


def is_code_automorphism(code: Code, x: Automorphism) -> bool:
    """True iff x fixes the code setwise (x belongs to Aut(C))."""
    if x.scheme != code.scheme:
        raise SchemeMismatchError("automorphism from a different scheme")
    return all(x.apply(w) in code for w in code.words)


def is_linear_binary(code: Code) -> bool:
    """True iff q=2, the zero vertex is a codeword and C is closed under +."""
    if code.scheme.q != 2 or len(code) == 0:
        return False
    if code.scheme.zero() not in code:
        return False
    for u, v in itertools.combinations_with_replacement(code.words, 2):
        s = Vertex(code.scheme, tuple(a ^ b for a, b in zip(u.entries, v.entries)))
        if s not in code:
            return False
    return True


def translation_subgroup(code: Code) -> GeneratorSet:
    """Translations by a generating subset of a binary linear code.

    Greedy basis extraction over the sorted words; the closure of the
    result has order exactly |C|.
    """
    if not is_linear_binary(code):
        raise ValueError("translation_subgroup needs a binary linear code")
    span = {code.scheme.zero().entries}
    gens: list[Automorphism] = []
    for w in code.words:
        if w.entries in span:
            continue
        gens.append(translation(w))
        for s in list(span):
            span.add(tuple(a ^ b for a, b in zip(s, w.entries)))
    return GeneratorSet(code.scheme, tuple(gens))


def find_equivalence(code: Code, other: Code,
                     group_cap: int = DEFAULT_GROUP_CAP) -> EquivalenceWitness | None:
    """First automorphism (canonical order) mapping code onto other, if any."""
    if code.scheme != other.scheme:
        raise SchemeMismatchError("codes from different schemes")
    if len(code) != len(other):
        return None
    for y in enumerate_full_group(code.scheme, group_cap):
        if code.image(y) == other:
            return EquivalenceWitness(y)
    return None


# -- shared code file format ------------------------------------------------
#
# line 1: "m q"; one vertex per later line in the shared text form; lines
# starting with '#' and blank lines are ignored.  Writers emit sorted order.

def parse_code_text(text: str) -> Code:
    scheme = None
    words = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if scheme is None:
            parts = line.split()
            if len(parts) != 2:
                raise CodeFormatError(f"line {lineno}: header must be 'm q', got {line!r}")
            try:
                m, q = int(parts[0]), int(parts[1])
                scheme = HammingScheme(m, q)
            except ValueError as exc:
                raise CodeFormatError(f"line {lineno}: bad header {line!r}: {exc}") from None
            continue
        try:
            words.append(vertex_from_text(scheme, line))
        except CodeFormatError as exc:
            raise CodeFormatError(f"line {lineno}: {exc}") from None
    if scheme is None:
        raise CodeFormatError("empty code file: missing 'm q' header")
    return Code(scheme, words)


def code_to_text(code: Code) -> str:
    lines = [f"{code.scheme.m} {code.scheme.q}"]
    lines.extend(vertex_to_text(w) for w in code.words)
    return "\n".join(lines) + "\n"


def read_code_file(path) -> Code:
    return parse_code_text(Path(path).read_text())


def write_code_file(code: Code, path) -> None:
    Path(path).write_text(code_to_text(code))
