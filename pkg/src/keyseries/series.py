"""Key and Lascoux polynomials, block generating series, and their closed form.

For a permutation w and a partition lam with at most n parts, the key
polynomial is pi_w applied to the dominant monomial x^lam.  Summing over all
such lam with t-weight T_1^{h_1}...T_n^{h_n} (h_l the column multiplicities,
i.e. h_l = lam_l - lam_{l+1}) gives a series in the block variables whose
closed form is a single numerator polynomial P_w over the product of
(1 - x^alpha T_l) for alpha ranging over the bounded ascending sequences of w.

P_w is computed by exact induction on weak order: if i is a left ascent of w
then P_{s_i w} = pi_i(P_w * N_{w,i}) with N_{w,i} the product of
(1 - x^{s_i alpha} T_l) over the sequences alpha moved by s_i.  Truncating
every product past a total T-degree bound commutes with the induction, which
keeps sweeps over whole symmetric groups cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .bseq import enum_A, moved_levels, si_image, split_A
from .permutation import Permutation, all_permutations
from .poly import (
    Monomial,
    SparsePoly,
    pi,
    pi_xi,
    series_inverse_product,
    x_exps,
)

__all__ = [
    "is_partition",
    "partitions",
    "t_exps",
    "key_polynomial",
    "lascoux_polynomial",
    "key_by_composition",
    "composition_shape",
    "numerator_P",
    "numerator_P_along",
    "n_factor_product",
    "denominator_factors",
    "series_Kw_direct",
    "FormCheck",
    "verify_form",
    "suite_formofkw",
    "check_piiKw",
    "check_propgen",
    "lascoux_linear_part",
    "suite_pxiw1",
    "clear_caches",
]


# -- partitions and compositions ---------------------------------------------


def is_partition(lam: tuple[int, ...]) -> bool:
    return all(a >= b for a, b in zip(lam, lam[1:])) and all(a >= 0 for a in lam)


def _trim_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam}")
    k = len(lam)
    while k and lam[k - 1] == 0:
        k -= 1
    return lam[:k]


def partitions(max_first: int, max_parts: int) -> Iterator[tuple[int, ...]]:
    """All partitions with first part <= max_first and at most max_parts parts."""
    if max_parts < 0:
        raise ValueError("max_parts must be >= 0")

    def gen(bound: int, parts: int) -> Iterator[tuple[int, ...]]:
        yield ()
        if not parts:
            return
        for first in range(1, bound + 1):
            for rest in gen(first, parts - 1):
                yield (first,) + rest

    yield from gen(max_first, max_parts)


def t_exps(lam: tuple[int, ...]) -> tuple[int, ...]:
    """T-exponents of t^lam: the multiplicity of each column height in lam."""
    lam = _trim_partition(lam)
    if not lam:
        return ()
    out = [0] * len(lam)
    padded = lam + (0,)
    for l in range(1, len(lam) + 1):
        out[l - 1] = padded[l - 1] - padded[l]
    return tuple(out)


def composition_shape(nu: tuple[int, ...]) -> tuple[tuple[int, ...], Permutation]:
    """Sorting data of a composition: the partition and the stable w with w.lam = nu.

    w sends sorted position i to the position in nu holding the i-th largest
    entry, breaking ties left to right; this w has minimal length among all
    permutations rearranging the partition into nu.
    """
    if any(a < 0 for a in nu):
        raise ValueError(f"composition entries must be >= 0: {nu}")
    order = sorted(range(len(nu)), key=lambda j: (-nu[j], j))
    lam = tuple(nu[j] for j in order)
    values = tuple(j + 1 for j in order)
    return lam, Permutation(values)


# -- key and Lascoux polynomials ---------------------------------------------

_KEY_CACHE: dict[tuple[tuple[int, ...], tuple[int, ...], bool], SparsePoly] = {}


def key_polynomial(lam: tuple[int, ...], w: Permutation) -> SparsePoly:
    """pi_w applied to x^lam, for a partition lam."""
    return _key_poly(_trim_partition(lam), w, False)


def lascoux_polynomial(lam: tuple[int, ...], w: Permutation) -> SparsePoly:
    """The xi-deformed analogue; its xi^0 slice is the key polynomial."""
    return _key_poly(_trim_partition(lam), w, True)


def _key_poly(lam: tuple[int, ...], w: Permutation, xi_mode: bool) -> SparsePoly:
    key = (lam, w.core, xi_mode)
    hit = _KEY_CACHE.get(key)
    if hit is not None:
        return hit
    descents = w.left_descents()
    if not descents:
        out = SparsePoly.term(x=lam)
    else:
        i = descents[0]
        sub = _key_poly(lam, w.left_mul_s(i), xi_mode)
        out = pi_xi(i, sub) if xi_mode else pi(i, sub)
    _KEY_CACHE[key] = out
    return out


def key_by_composition(nu: tuple[int, ...], xi_mode: bool = False) -> SparsePoly:
    """Key (or Lascoux) polynomial indexed by an arbitrary composition."""
    lam, w = composition_shape(tuple(nu))
    return _key_poly(_trim_partition(lam), w, xi_mode)


# -- numerator polynomials ----------------------------------------------------

_P_CACHE: dict[tuple[tuple[int, ...], bool, int | None], SparsePoly] = {}


def n_factor_product(
    w: Permutation, i: int, tmax: int | None = None
) -> SparsePoly:
    """Product of (1 - x^{s_i alpha} T_l) over sequences moved at an ascent i."""
    if not w.is_ascent(i):
        raise ValueError(f"{i} is not an ascent of {w.one_line()}")
    out = SparsePoly.one()
    for l in moved_levels(w, i):
        tvec = (0,) * (l - 1) + (1,)
        for alpha in split_A(w, l, i)[1]:
            factor = 1 - SparsePoly.term(x=x_exps(si_image(i, alpha)), t=tvec)
            out = out.mul_trunc(factor, tmax)
    return out


def numerator_P(
    w: Permutation, xi_mode: bool = False, tmax: int | None = None
) -> SparsePoly:
    key = (w.core, xi_mode, tmax)
    hit = _P_CACHE.get(key)
    if hit is not None:
        return hit
    descents = w.left_descents()
    if not descents:
        out = SparsePoly.one()
    else:
        i = descents[0]
        v = w.left_mul_s(i)
        prior = numerator_P(v, xi_mode, tmax)
        staged = prior.mul_trunc(n_factor_product(v, i, tmax), tmax)
        out = pi_xi(i, staged) if xi_mode else pi(i, staged)
    assert out.t_slice(0) == SparsePoly.one(), w.one_line()
    if not xi_mode and (tmax is None or tmax >= 1):
        assert not out.t_slice(1), w.one_line()
    _P_CACHE[key] = out
    return out


def numerator_P_along(
    word: Iterable[int], xi_mode: bool = False, tmax: int | None = None
) -> SparsePoly:
    """Run the induction along an explicit reduced word (rightmost letter first).

    Unlike :func:`numerator_P` this takes no shortcut through the cache, so it
    exercises word-independence.  Raises ValueError if the word is not reduced.
    """
    word = tuple(word)
    if any(i < 1 for i in word):
        raise ValueError(f"word letters must be >= 1: {word}")
    v = Permutation.identity(max(word, default=0) + 1)
    out = SparsePoly.one()
    for i in reversed(word):
        if not v.is_ascent(i):
            raise ValueError(f"word {word} is not reduced at letter {i}")
        staged = out.mul_trunc(n_factor_product(v, i, tmax), tmax)
        out = pi_xi(i, staged) if xi_mode else pi(i, staged)
        v = v.left_mul_s(i)
    return out


# -- series and closed form ----------------------------------------------------


def denominator_factors(w: Permutation, n: int) -> list[SparsePoly]:
    """The monomials x^alpha T_l over all levels l <= n and alpha in A_l(w)."""
    if n < 1:
        raise ValueError(f"block count must be >= 1, got {n}")
    out = []
    for l in range(1, n + 1):
        tvec = (0,) * (l - 1) + (1,)
        for alpha in enum_A(w, l):
            out.append(SparsePoly.term(x=x_exps(alpha), t=tvec))
    return out


def series_Kw_direct(
    w: Permutation, n: int, D: int, xi_mode: bool = False
) -> SparsePoly:
    """Sum of key (or Lascoux) polynomials times t^lam, over lam with at most
    n parts and first part at most D.  The first part equals the T-degree of
    t^lam, so this is the series truncated past total T-degree D."""
    if n < 1:
        raise ValueError(f"block count must be >= 1, got {n}")
    total = SparsePoly.zero()
    for lam in partitions(D, n):
        poly = _key_poly(lam, w, xi_mode)
        total = total + poly * SparsePoly.term(t=t_exps(lam))
    return total


@dataclass(frozen=True)
class FormCheck:
    w: str
    n: int
    D: int
    xi_mode: bool
    ok: bool
    detail: str = ""


def verify_form(
    w: Permutation,
    n: int | None = None,
    D: int = 4,
    xi_mode: bool = False,
    words: Iterable[Iterable[int]] | None = None,
) -> FormCheck:
    """Compare the truncated series against P_w over the denominator product.

    With ``words`` given, P_w is recomputed along each word and all results
    must agree before the comparison runs.
    """
    if n is None:
        n = max(w.n, 1)
    p = numerator_P(w, xi_mode=xi_mode, tmax=D)
    if words is not None:
        for word in words:
            along = numerator_P_along(word, xi_mode=xi_mode, tmax=D)
            if along != p:
                return FormCheck(
                    w.one_line(), n, D, xi_mode, False,
                    f"numerator differs along word {tuple(word)}",
                )
    closed = p.mul_trunc(series_inverse_product(denominator_factors(w, n), D), D)
    direct = series_Kw_direct(w, n, D, xi_mode=xi_mode)
    if closed == direct:
        return FormCheck(w.one_line(), n, D, xi_mode, True)
    delta = (closed - direct).sorted_terms()
    return FormCheck(
        w.one_line(), n, D, xi_mode, False,
        f"first mismatch at {delta[0][0]}",
    )


def suite_formofkw(
    group_n: int,
    D: int,
    xi_mode: bool = False,
    two_words: bool = False,
) -> list[FormCheck]:
    """Run verify_form over the whole symmetric group on group_n letters."""
    out = []
    for w in all_permutations(group_n):
        words = None
        if two_words:
            first = w.reduced_word()
            second = w.reduced_word_alt()
            words = [first] if first == second else [first, second]
        out.append(verify_form(w, n=group_n, D=D, xi_mode=xi_mode, words=words))
    return out


# -- operator identities on truncated series -----------------------------------


def check_piiKw(group_n: int, D: int, xi_mode: bool = False) -> list[FormCheck]:
    """pi_i maps the series of w to the series of s_i w at ascents and fixes it
    at descents; checked for every w and i on the truncated series."""
    series = {
        w.core: series_Kw_direct(w, group_n, D, xi_mode)
        for w in all_permutations(group_n)
    }
    op = pi_xi if xi_mode else pi
    out = []
    for w in all_permutations(group_n):
        for i in range(1, group_n):
            target = w.left_mul_s(i) if w.is_ascent(i) else w
            got = op(i, series[w.core])
            ok = got == series[target.core]
            out.append(
                FormCheck(
                    w.one_line(), group_n, D, xi_mode, ok,
                    "" if ok else f"pi_{i} image is not the series of {target.one_line()}",
                )
            )
    return out


def check_propgen(group_n: int, D: int) -> list[FormCheck]:
    """Group-algebra form of the previous identity.

    Writing the family f[v] = series of v*w0, applying pi_i to every component
    must equal multiplication by (eps_{s_i} + 1) in the algebra with relations
    eps_{s_i} eps_v = eps_{s_i v} when the length goes up and -eps_v when it
    goes down.
    """
    w0 = Permutation.longest(group_n)
    fam = {
        v.core: series_Kw_direct(v * w0, group_n, D) for v in all_permutations(group_n)
    }
    out = []
    for i in range(1, group_n):
        mult: dict[tuple[int, ...], SparsePoly] = {
            core: SparsePoly.zero() for core in fam
        }
        for v in all_permutations(group_n):
            sv = v.left_mul_s(i)
            if sv.length() > v.length():
                mult[sv.core] = mult[sv.core] + fam[v.core]
            else:
                mult[v.core] = mult[v.core] - fam[v.core]
            mult[v.core] = mult[v.core] + fam[v.core]
        applied = {core: pi(i, f) for core, f in fam.items()}
        ok = applied == mult
        out.append(
            FormCheck(
                f"s_{i}", group_n, D, False, ok,
                "" if ok else "componentwise pi disagrees with algebra action",
            )
        )
    return out


# -- the xi-linear slice of the numerator ---------------------------------------


def lascoux_linear_part(w: Permutation, method: str = "closed") -> SparsePoly:
    """The coefficient of xi in the deformed numerator, a T-linear polynomial.

    method="closed": for each level l, a candidate set alpha of size l+1
    contributes (c - 1) xi x^alpha T_l where c counts the members j of alpha
    with alpha minus j still a bounded ascending sequence at level l.
    method="induction": slice of the inductive numerator truncated at T-degree 1.
    """
    if method == "induction":
        p = numerator_P(w, xi_mode=True, tmax=1)
        return p.t_slice(1).xi_slice(1)
    if method != "closed":
        raise ValueError(f"unknown method {method!r}")
    total: dict[Monomial, int] = {}
    for l in range(1, max(len(w.core), 1)):
        seqs = enum_A(w, l)
        if len(seqs) <= 1:
            continue
        seq_set = set(seqs)
        tvec = (0,) * (l - 1) + (1,)
        candidates = set()
        for a in seqs:
            sa = set(a)
            for b in seqs:
                if len(sa.union(b)) == l + 1:
                    candidates.add(tuple(sorted(sa.union(b))))
        for alpha in candidates:
            count = sum(
                1
                for j in alpha
                if tuple(v for v in alpha if v != j) in seq_set
            )
            if count > 1:
                key = (x_exps(alpha), tvec, 1)
                total[key] = total.get(key, 0) + (count - 1)
    return SparsePoly(total, _trusted=True)


def suite_pxiw1(group_n: int) -> list[FormCheck]:
    out = []
    for w in all_permutations(group_n):
        ok = lascoux_linear_part(w, "closed") == lascoux_linear_part(w, "induction")
        out.append(
            FormCheck(
                w.one_line(), group_n, 1, True, ok,
                "" if ok else "closed xi-linear slice disagrees with induction",
            )
        )
    return out


def clear_caches() -> None:
    _KEY_CACHE.clear()
    _P_CACHE.clear()
