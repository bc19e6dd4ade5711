"""Finite permutations of {0..n-1} acting on the right.

A permutation is stored as its image tuple, so ``p[x]`` is the image of the
point ``x``.  Products follow the exponent convention: ``x^(p*q) = (x^p)^q``,
i.e. ``p * q`` applies ``p`` first and then ``q``.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "CycleParseError",
    "compose",
    "from_cycles",
    "element_order",
    "support",
    "identity",
]


class CycleParseError(ValueError):
    """Malformed cycle notation; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple(map(q.__getitem__, p))


def _inv(p: Sequence[int]) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class Permutation(tuple):
    """Immutable bijection of ``range(degree)`` given by its images."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(x) for x in images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation degree must be positive")
        seen = [False] * n
        for x in images:
            if not 0 <= x < n or seen[x]:
                raise ValueError(f"images {images!r} do not form a bijection")
            seen[x] = True
        return tuple.__new__(cls, images)

    @classmethod
    def _trusted(cls, images: tuple) -> Permutation:
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls._trusted(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, text: str) -> Permutation:
        return from_cycles(n, text)

    @property
    def degree(self) -> int:
        return len(self)

    @property
    def images(self) -> tuple:
        return tuple(self)

    def __mul__(self, other):
        if not isinstance(other, tuple):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError(f"degree mismatch: {len(self)} vs {len(other)}")
        return Permutation._trusted(_mul(self, other))

    __rmul__ = None  # tuple * int repetition is never wanted

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        result = tuple(range(len(self)))
        base = tuple(self)
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation._trusted(result)

    def inverse(self) -> Permutation:
        return Permutation._trusted(_inv(self))

    def conjugate(self, g: Sequence[int]) -> Permutation:
        """Return ``g^-1 * self * g``."""
        return Permutation._trusted(_mul(_mul(_inv(g), self), tuple(g)))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self))

    def support(self) -> frozenset:
        return frozenset(i for i, x in enumerate(self) if i != x)

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its least point, sorted by that point."""
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start] or self[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            x = self[start]
            while x != start:
                seen[x] = True
                cyc.append(x)
                x = self[x]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        """Sorted cycle lengths including fixed points."""
        lengths = [len(c) for c in self.cycles()]
        fixed = len(self) - sum(lengths)
        return tuple(sorted(lengths + [1] * fixed))

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def to_cycles(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)

    def __str__(self) -> str:
        return self.to_cycles()

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({len(self)}, {self.to_cycles()!r})"


def identity(n: int) -> Permutation:
    return Permutation.identity(n)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The product applying ``p`` first, then ``q``."""
    return Permutation(p) * Permutation(q)


_TOKEN = re.compile(r"\s*(?:(\()|(\))|(\d+)|(,)|(\S))")


def from_cycles(n: int, text: str) -> Permutation:
    """Parse cycle notation such as ``"(0 1)(2 3)"`` into a permutation of degree ``n``.

    Points inside a cycle may be separated by spaces or commas.  ``"()"`` and
    the empty string denote the identity.
    """
    if n <= 0:
        raise ValueError("degree must be positive")
    images = list(range(n))
    used = set()
    current = None
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1):
            if current is not None:
                raise CycleParseError("nested '('", start)
            current = []
        elif m.group(2):
            if current is None:
                raise CycleParseError("unmatched ')'", start)
            for a, b in zip(current, current[1:] + current[:1]):
                images[a] = b
            current = None
        elif m.group(3):
            if current is None:
                raise CycleParseError("point outside a cycle", start)
            x = int(m.group(3))
            if x >= n:
                raise CycleParseError(f"point {x} out of range for degree {n}", start)
            if x in used:
                raise CycleParseError(f"point {x} repeated", start)
            used.add(x)
            current.append(x)
        elif m.group(4):
            if current is None:
                raise CycleParseError("stray ','", start)
        else:
            raise CycleParseError(f"unexpected character {m.group(5)!r}", start)
        pos = m.end()
    if current is not None:
        raise CycleParseError("unterminated cycle", len(text))
    return Permutation._trusted(tuple(images))


def element_order(p: Permutation) -> int:
    return Permutation(p).order()


def support(p: Permutation) -> frozenset:
    return Permutation(p).support()
