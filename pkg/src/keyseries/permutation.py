"""Permutations of {1..n} in one-line notation.

Simple transpositions act by *left* multiplication: ``s_i * w`` swaps the
values i and i+1 wherever they sit in the one-line word.  Two permutations
that differ only by trailing fixed points compare equal, so S_n sits inside
S_{n+1} transparently; ``n`` remembers the rank an object was built with.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

__all__ = [
    "Permutation",
    "all_permutations",
    "parse_permutation",
]


def _trim_fixed_tail(values: tuple[int, ...]) -> tuple[int, ...]:
    k = len(values)
    while k and values[k - 1] == k:
        k -= 1
    return values[:k]


class Permutation:
    """An element of S_n, stored in one-line notation (1-based values)."""

    __slots__ = ("values", "core", "_inv", "_hash")

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        if sorted(vals) != list(range(1, len(vals) + 1)):
            raise ValueError(f"not a one-line word on 1..{len(vals)}: {vals!r}")
        self.values = vals
        self.core = _trim_fixed_tail(vals)
        self._inv: tuple[int, ...] | None = None
        self._hash: int | None = None

    # -- basic structure ---------------------------------------------------

    @property
    def n(self) -> int:
        """Ambient rank: the n this object was constructed in."""
        return len(self.values)

    def __call__(self, j: int) -> int:
        """w(j), with w(j) = j beyond the ambient rank."""
        if j < 1:
            raise IndexError(f"positions are 1-based, got {j}")
        return self.values[j - 1] if j <= len(self.values) else j

    def position(self, v: int) -> int:
        """w^{-1}(v), with fixed points beyond the ambient rank."""
        if v < 1:
            raise IndexError(f"values are 1-based, got {v}")
        inv = self._inv
        if inv is None:
            inv = [0] * len(self.values)
            for p, val in enumerate(self.values, start=1):
                inv[val - 1] = p
            inv = self._inv = tuple(inv)
        return inv[v - 1] if v <= len(inv) else v

    def inverse(self) -> "Permutation":
        if not self.values:
            return Permutation(())
        self.position(1)  # force the inverse table
        return Permutation(self._inv)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (self*other)(j) = self(other(j))."""
        m = max(self.n, other.n)
        return Permutation(tuple(self(other(j)) for j in range(1, m + 1)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.core == other.core

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(self.core)
        return h

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()!r})"

    def one_line(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.values) or "1"
        return ",".join(str(v) for v in self.values)

    # -- Coxeter structure -------------------------------------------------

    def length(self) -> int:
        """Number of inversions (Coxeter length)."""
        core = self.core
        return sum(
            1
            for a in range(len(core))
            for b in range(a + 1, len(core))
            if core[a] > core[b]
        )

    def is_identity(self) -> bool:
        return not self.core

    def is_ascent(self, i: int) -> bool:
        """True iff l(s_i w) = l(w) + 1, i.e. iff i sits before i+1 in w.

        Valid for 1 <= i < n; letters beyond the one-line word are rejected
        to keep callers honest about the rank they sweep.
        """
        if not 1 <= i < self.n:
            raise IndexError(f"letter {i} out of range for rank {self.n}")
        return self.position(i) < self.position(i + 1)

    def left_mul_s(self, i: int) -> "Permutation":
        """s_i * w: swap the values i and i+1.  i = n extends the rank by 1."""
        if not 1 <= i <= self.n:
            raise IndexError(f"letter {i} out of range for rank {self.n}")
        vals = self.values if i < self.n else self.values + (self.n + 1,)
        swapped = tuple(
            i + 1 if v == i else i if v == i + 1 else v for v in vals
        )
        return Permutation(swapped)

    def left_descents(self) -> tuple[int, ...]:
        core = self.core
        return tuple(
            i for i in range(1, len(core)) if self.position(i) > self.position(i + 1)
        )

    def reduced_word(self) -> tuple[int, ...]:
        """Canonical reduced word: repeatedly peel the smallest left descent.

        Returns (i_1, ..., i_r) with w = s_{i_1} s_{i_2} ... s_{i_r}.
        """
        return self._greedy_word(smallest=True)

    def reduced_word_alt(self) -> tuple[int, ...]:
        """Greedy largest-descent reduced word.

        Differs from :meth:`reduced_word` exactly when w has more than one
        reduced word (a unique greedy choice at every step forces uniqueness).
        """
        return self._greedy_word(smallest=False)

    def _greedy_word(self, smallest: bool) -> tuple[int, ...]:
        word: list[int] = []
        w = self
        while w.core:
            descents = w.left_descents()
            i = descents[0] if smallest else descents[-1]
            word.append(i)
            w = w.left_mul_s(i)
        return tuple(word)

    @classmethod
    def identity(cls, n: int = 1) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def from_word(cls, word: Iterable[int], n: int | None = None) -> "Permutation":
        """Compose s_{i_1} ... s_{i_r} (rightmost letter applied first)."""
        letters = tuple(word)
        m = max(letters, default=0) + 1
        w = cls.identity(max(n or 1, m, 1))
        for i in reversed(letters):
            w = w.left_mul_s(i)
        return w

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        """w_0 in S_n."""
        return cls(range(n, 0, -1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    if n < 1:
        raise ValueError(f"rank must be >= 1, got {n}")
    for vals in itertools.permutations(range(1, n + 1)):
        yield Permutation(vals)


def parse_permutation(text: str) -> Permutation:
    """Parse '42531' (single digits) or '4,2,5,3,1'."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation")
    if "," in text:
        vals = [int(part) for part in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        vals = [int(ch) for ch in text]
    return Permutation(vals)
