"""Strictly increasing sequences bounded entrywise by sorted permutation prefixes.

For a permutation w and a length l, the bound is the sorted tuple of the first
l one-line values of w, and ``enum_A(w, l)`` lists every strictly increasing
l-tuple that is entrywise at most that bound.  Everything here depends on w
only through that bound, which is what the cache keys on.

Levels l beyond the one-line word are allowed (values behave as fixed points),
because ascent-step bookkeeping needs them even for the identity.
"""

from __future__ import annotations

from .permutation import Permutation

__all__ = [
    "AscSeq",
    "w_upper",
    "enum_A",
    "enum_A_set",
    "split_A",
    "si_image",
    "replace",
    "moved_levels",
    "parse_seq",
    "format_seq",
]

# A strictly increasing tuple of positive integers.
AscSeq = tuple[int, ...]

_A_CACHE: dict[tuple[int, ...], tuple[AscSeq, ...]] = {}
_A_SET_CACHE: dict[tuple[int, ...], frozenset[AscSeq]] = {}


def w_upper(w: Permutation, l: int) -> tuple[int, ...]:
    """The sorted first l one-line values of w (fixed points beyond rank n)."""
    if l < 1:
        raise ValueError(f"level must be >= 1, got {l}")
    n = w.n
    prefix = w.values[:l] + tuple(range(n + 1, l + 1))
    return tuple(sorted(prefix))


def enum_A(w: Permutation, l: int) -> tuple[AscSeq, ...]:
    """All strictly increasing l-tuples entrywise bounded by ``w_upper(w, l)``.

    Lexicographically sorted.  The identity bound (1..l) gives the singleton.
    """
    bound = w_upper(w, l)
    cached = _A_CACHE.get(bound)
    if cached is not None:
        return cached
    out: list[AscSeq] = []
    seq = [0] * l

    def extend(j: int, lo: int) -> None:
        if j == l:
            out.append(tuple(seq))
            return
        for v in range(lo, bound[j] + 1):
            seq[j] = v
            extend(j + 1, v + 1)

    extend(0, 1)
    result = tuple(out)
    _A_CACHE[bound] = result
    return result


def enum_A_set(w: Permutation, l: int) -> frozenset[AscSeq]:
    bound = w_upper(w, l)
    cached = _A_SET_CACHE.get(bound)
    if cached is None:
        cached = frozenset(enum_A(w, l))
        _A_SET_CACHE[bound] = cached
    return cached


def si_image(i: int, alpha: AscSeq) -> AscSeq:
    """The transposition i <-> i+1 applied to the underlying set, re-sorted."""
    if i < 1:
        raise IndexError(f"letter must be >= 1, got {i}")
    has_i = i in alpha
    has_next = i + 1 in alpha
    if has_i == has_next:
        return alpha
    if has_i:
        return tuple(sorted(i + 1 if v == i else v for v in alpha))
    return tuple(sorted(i if v == i + 1 else v for v in alpha))


def split_A(w: Permutation, l: int, i: int) -> tuple[tuple[AscSeq, ...], tuple[AscSeq, ...]]:
    """Split the level-l sequences into (fixed, moved) under the letter i.

    A sequence is *moved* when its i <-> i+1 image leaves the level set.  The
    moved part is non-empty exactly when i is an ascent of w and the level l
    lies in ``moved_levels(w, i)``.
    """
    if i < 1:
        raise IndexError(f"letter must be >= 1, got {i}")
    seqs = enum_A(w, l)
    members = enum_A_set(w, l)
    fixed: list[AscSeq] = []
    moved: list[AscSeq] = []
    for alpha in seqs:
        (fixed if si_image(i, alpha) in members else moved).append(alpha)
    return tuple(fixed), tuple(moved)


def moved_levels(w: Permutation, i: int) -> range:
    """Levels l whose moved part under the letter i can be non-empty.

    Empty unless i sits before i+1 in w; otherwise the half-open interval
    from the position of i to the position of i+1.
    """
    if i < 1:
        raise IndexError(f"letter must be >= 1, got {i}")
    lo, hi = w.position(i), w.position(i + 1)
    return range(lo, hi) if lo < hi else range(0)


def replace(alpha: AscSeq, j: int, r: int) -> AscSeq:
    """Overwrite the j-th entry (1-based) with a value not already present."""
    if not 1 <= j <= len(alpha):
        raise IndexError(f"entry index {j} out of range for length {len(alpha)}")
    if r in alpha:
        raise ValueError(f"replacement value {r} already present in {alpha}")
    if r < 1:
        raise ValueError(f"entries must be positive, got {r}")
    return tuple(sorted(alpha[: j - 1] + (r,) + alpha[j:]))


def parse_seq(text: str) -> AscSeq:
    """Parse '245' (single digits) or '2,4,5'; must be strictly increasing."""
    text = text.strip()
    if not text:
        raise ValueError("empty sequence")
    if "," in text:
        vals = tuple(int(part) for part in text.split(","))
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse sequence {text!r}")
        vals = tuple(int(ch) for ch in text)
    if any(a >= b for a, b in zip(vals, vals[1:])) or (vals and vals[0] < 1):
        raise ValueError(f"not strictly increasing positive entries: {vals}")
    return vals


def format_seq(alpha: AscSeq) -> str:
    if alpha and alpha[-1] > 9:
        return ",".join(str(v) for v in alpha)
    return "".join(str(v) for v in alpha)
