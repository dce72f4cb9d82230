"""Multiset sums of bounded increasing sequences and their presentation sets.

A sum eta of a length-l and a length-k bounded sequence is a multiset with
multiplicities at most 2, written as a sorted tuple with repeats, e.g.
(1, 1, 2, 3, 4).  ``enum_Btilde`` lists all such sums; an eta lies in the
distinguished subset B when it has at least two essentially distinct
presentations (unordered when k = l).  The cheap membership criterion
|eta_2| < k - [k = l] is used everywhere fast paths matter and is verified
against direct double enumeration by the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bseq import AscSeq, enum_A, enum_A_set, w_upper
from .permutation import Permutation

__all__ = [
    "EtaMultiSet",
    "PresentationSet",
    "ExtremalPresentation",
    "sum_seqs",
    "eta_parts",
    "eta_minus",
    "enum_Btilde",
    "enum_B",
    "is_in_B",
    "restricted_A",
    "restricted_max",
    "extremal_presentation",
    "presentations",
    "presentations_direct",
    "enum_C",
    "enum_Ctilde",
    "parse_multiset",
    "format_multiset",
]

# Sorted tuple with repeats; multiplicity of each value at most 2 in the
# two-summand world, at most 3 in the three-summand world.
EtaMultiSet = tuple[int, ...]


def sum_seqs(*seqs: AscSeq) -> EtaMultiSet:
    """Multiset union of strictly increasing sequences, as a sorted tuple."""
    merged: list[int] = []
    for s in seqs:
        merged.extend(s)
    merged.sort()
    return tuple(merged)


def eta_parts(eta: EtaMultiSet) -> tuple[AscSeq, AscSeq]:
    """(eta_1, eta_2): the simple part and the doubled part.

    Raises if any value has multiplicity above 2.
    """
    ones: list[int] = []
    twos: list[int] = []
    for v, grp in itertools.groupby(eta):
        m = len(list(grp))
        if m == 1:
            ones.append(v)
        elif m == 2:
            twos.append(v)
        else:
            raise ValueError(f"multiplicity {m} > 2 for value {v} in {eta}")
    return tuple(ones), tuple(twos)


def eta_minus(eta: EtaMultiSet, alpha: AscSeq) -> EtaMultiSet:
    """Remove one copy of each entry of alpha from eta."""
    rest = list(eta)
    for v in alpha:
        try:
            rest.remove(v)
        except ValueError:
            raise ValueError(f"{alpha} is not contained in {eta}") from None
    return tuple(rest)


def _contains(eta: EtaMultiSet, sub: EtaMultiSet) -> bool:
    it = iter(eta)
    return all(any(v == u for u in it) for v in sub)


_BTILDE_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...]], tuple[EtaMultiSet, ...]] = {}


def enum_Btilde(w: Permutation, k: int, l: int) -> tuple[EtaMultiSet, ...]:
    """All sums alpha + beta with alpha of level l and beta of level k, sorted."""
    if not 1 <= k <= l:
        raise ValueError(f"need 1 <= k <= l, got k={k}, l={l}")
    key = (w_upper(w, k), w_upper(w, l))
    cached = _BTILDE_CACHE.get(key)
    if cached is not None:
        return cached
    sums = {
        sum_seqs(alpha, beta)
        for alpha in enum_A(w, l)
        for beta in enum_A(w, k)
    }
    result = tuple(sorted(sums))
    _BTILDE_CACHE[key] = result
    return result


def is_in_B(w: Permutation, k: int, l: int, eta: EtaMultiSet, direct: bool = False) -> bool:
    """Membership of eta in B_{k,l}(w).

    The default route combines sum membership with the doubled-part size
    criterion |eta_2| < k - [k = l]; ``direct=True`` counts essentially
    distinct presentations instead (the oracle route).
    """
    if len(eta) != k + l:
        raise ValueError(f"size mismatch: |eta| = {len(eta)} != k + l = {k + l}")
    if direct:
        return len(presentations_direct(w, k, l, eta).pairs) >= 2
    _, eta2 = eta_parts(eta)
    if len(eta2) >= k - (1 if k == l else 0):
        return False
    return len(presentations(w, k, l, eta).pairs) >= 1


def enum_B(w: Permutation, k: int, l: int) -> tuple[EtaMultiSet, ...]:
    """The members of ``enum_Btilde`` with at least two essentially distinct
    presentations, via the cheap criterion."""
    delta = 1 if k == l else 0
    out = []
    for eta in enum_Btilde(w, k, l):
        _, eta2 = eta_parts(eta)
        if len(eta2) < k - delta:
            out.append(eta)
    return tuple(out)


def restricted_A(w: Permutation, m: int, eta: EtaMultiSet) -> tuple[AscSeq, ...]:
    """Level-m sequences squeezed between the doubled part and the support."""
    _, eta2 = eta_parts(eta)
    support = frozenset(eta)
    need = frozenset(eta2)
    return tuple(
        alpha
        for alpha in enum_A(w, m)
        if need <= set(alpha) <= support
    )


def restricted_max(w: Permutation, m: int, eta: EtaMultiSet) -> AscSeq | None:
    """The entrywise maximum of ``restricted_A``; None when the set is empty.

    A unique maximum always exists when the set is non-empty; this is checked
    and a violation raises (it would falsify an upstream structural fact).
    """
    cands = restricted_A(w, m, eta)
    if not cands:
        return None
    best = max(cands)
    for alpha in cands:
        if any(a > b for a, b in zip(alpha, best)):
            raise AssertionError(
                f"no entrywise maximum among {cands} (lex max {best} fails)"
            )
    return best


@dataclass(frozen=True)
class ExtremalPresentation:
    """The four extremal summands of eta at levels (k, l).

    ``alpha_max`` is the largest level-l candidate, ``beta_min`` its multiset
    complement in eta; ``beta_max`` the largest level-k candidate, ``alpha_min``
    its complement.  ``in_Btilde`` records whether the complements are
    themselves bounded sequences, which happens for both or neither.
    """

    eta: EtaMultiSet
    k: int
    l: int
    alpha_max: AscSeq
    beta_min: AscSeq
    beta_max: AscSeq
    alpha_min: AscSeq
    in_Btilde: bool


def extremal_presentation(
    w: Permutation, k: int, l: int, eta: EtaMultiSet
) -> ExtremalPresentation | None:
    """Extremal summand data for eta, or None when either restricted set is empty."""
    if len(eta) != k + l:
        raise ValueError(f"size mismatch: |eta| = {len(eta)} != k + l = {k + l}")
    alpha_max = restricted_max(w, l, eta)
    beta_max = restricted_max(w, k, eta)
    if alpha_max is None or beta_max is None:
        return None
    beta_min = eta_minus(eta, alpha_max)
    alpha_min = eta_minus(eta, beta_max)
    beta_min_ok = beta_min in enum_A_set(w, k)
    alpha_min_ok = alpha_min in enum_A_set(w, l)
    if beta_min_ok != alpha_min_ok:
        raise AssertionError(
            f"complement membership disagrees for {eta}: "
            f"beta_min {beta_min} vs alpha_min {alpha_min}"
        )
    return ExtremalPresentation(
        eta=eta,
        k=k,
        l=l,
        alpha_max=alpha_max,
        beta_min=beta_min,
        beta_max=beta_max,
        alpha_min=alpha_min,
        in_Btilde=beta_min_ok,
    )


@dataclass(frozen=True)
class PresentationSet:
    """All presentations of eta as a level-l plus a level-k sequence.

    Pairs are (alpha, beta) with alpha at level l; for k = l each unordered
    presentation is stored once, larger component first.
    """

    eta: EtaMultiSet
    k: int
    l: int
    pairs: tuple[tuple[AscSeq, AscSeq], ...]

    @property
    def count(self) -> int:
        return len(self.pairs)


def _canonical_pairs(
    k: int, l: int, raw: set[tuple[AscSeq, AscSeq]]
) -> tuple[tuple[AscSeq, AscSeq], ...]:
    if k == l:
        raw = {(max(a, b), min(a, b)) for a, b in raw}
    return tuple(sorted(raw))


def presentations(w: Permutation, k: int, l: int, eta: EtaMultiSet) -> PresentationSet:
    """Presentation set via the extremal interval.

    Every candidate beta with the doubled part inside it, support inside eta,
    and beta_min <= beta <= beta_max entrywise is a valid summand; this is the
    fast route, cross-checked against ``presentations_direct`` by the tests.
    """
    ext = extremal_presentation(w, k, l, eta)
    if ext is None or not ext.in_Btilde:
        return PresentationSet(eta=eta, k=k, l=l, pairs=())
    eta1, eta2 = eta_parts(eta)
    lo, hi = ext.beta_min, ext.beta_max
    raw: set[tuple[AscSeq, AscSeq]] = set()
    for extra in itertools.combinations(eta1, k - len(eta2)):
        beta = tuple(sorted(eta2 + extra))
        if all(a <= b <= c for a, b, c in zip(lo, beta, hi)):
            raw.add((eta_minus(eta, beta), beta))
    return PresentationSet(eta=eta, k=k, l=l, pairs=_canonical_pairs(k, l, raw))


def presentations_direct(
    w: Permutation, k: int, l: int, eta: EtaMultiSet
) -> PresentationSet:
    """Presentation set by scanning all summand pairs (the oracle route)."""
    if len(eta) != k + l:
        raise ValueError(f"size mismatch: |eta| = {len(eta)} != k + l = {k + l}")
    betas = enum_A_set(w, k)
    raw: set[tuple[AscSeq, AscSeq]] = set()
    for alpha in enum_A(w, l):
        if not _contains(eta, alpha):
            continue
        beta = eta_minus(eta, alpha)
        if any(a >= b for a, b in zip(beta, beta[1:])):
            continue
        if beta in betas:
            raw.add((alpha, beta))
    return PresentationSet(eta=eta, k=k, l=l, pairs=_canonical_pairs(k, l, raw))


def enum_Ctilde(w: Permutation, p: int, k: int, l: int) -> tuple[EtaMultiSet, ...]:
    """All triple sums at levels (p, k, l), sorted."""
    if not 1 <= p <= k <= l:
        raise ValueError(f"need 1 <= p <= k <= l, got {(p, k, l)}")
    sums = {
        sum_seqs(alpha, beta, gamma)
        for alpha in enum_A(w, l)
        for beta in enum_A(w, k)
        for gamma in enum_A(w, p)
    }
    return tuple(sorted(sums))


def enum_C(w: Permutation, p: int, k: int, l: int) -> tuple[EtaMultiSet, ...]:
    """Triple sums each of whose three partial sums lands in the matching B.

    The three requirements may be witnessed by different presentations of the
    same tau; flags accumulate over all triples.
    """
    if not 1 <= p <= k <= l:
        raise ValueError(f"need 1 <= p <= k <= l, got {(p, k, l)}")
    b_kl = frozenset(enum_B(w, k, l))
    b_pl = frozenset(enum_B(w, p, l))
    b_pk = frozenset(enum_B(w, p, k))
    flags: dict[EtaMultiSet, list[bool]] = {}
    for alpha in enum_A(w, l):
        for beta in enum_A(w, k):
            ab = sum_seqs(alpha, beta)
            ab_in = ab in b_kl
            for gamma in enum_A(w, p):
                tau = sum_seqs(ab, gamma)
                f = flags.get(tau)
                if f is None:
                    f = flags[tau] = [False, False, False]
                if ab_in:
                    f[0] = True
                if not f[1] and sum_seqs(alpha, gamma) in b_pl:
                    f[1] = True
                if not f[2] and sum_seqs(beta, gamma) in b_pk:
                    f[2] = True
    return tuple(sorted(tau for tau, f in flags.items() if all(f)))


def parse_multiset(text: str) -> EtaMultiSet:
    """Parse '11234' (single digits) or '1,1,2,3,4'; re-sorts."""
    text = text.strip()
    if not text:
        raise ValueError("empty multiset")
    if "," in text:
        vals = [int(part) for part in text.split(",")]
    else:
        if not text.isdigit():
            raise ValueError(f"cannot parse multiset {text!r}")
        vals = [int(ch) for ch in text]
    if any(v < 1 for v in vals):
        raise ValueError(f"entries must be positive: {vals}")
    return tuple(sorted(vals))


def format_multiset(eta: EtaMultiSet) -> str:
    if eta and eta[-1] > 9:
        return ",".join(str(v) for v in eta)
    return "".join(str(v) for v in eta)
