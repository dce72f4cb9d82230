"""Multiplicities of the numerator polynomials and their structure theory.

The T-quadratic part of P_w is a sum of -m_eta x^eta T_k T_l with m_eta >= 1
exactly on the multiset sums admitting two essentially distinct presentations;
the T-cubic part enters with + sign.  This module extracts those
multiplicities, evaluates the closed formulas for the small slices (one unit
of freedom, two units with k < l, two units with k = l), verifies the transfer
rules along weak-order covers, and runs the conjecture scans (presentation
poset invariance and monotonicity, multiplicity growth under s_i, cubic
support, lower bounds).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .bseq import enum_A
from .multisets import (
    enum_B,
    enum_Btilde,
    enum_C,
    eta_parts,
    presentations,
)
from .parallel import ordered_map
from .permutation import Permutation, all_permutations
from .poly import SparsePoly, t_pair, x_exps, x_multiset
from .series import n_factor_product, numerator_P

__all__ = [
    "levels_from_t",
    "t_from_levels",
    "multiplicity2",
    "multiplicity3",
    "quadratic_multiplicities",
    "cubic_multiplicities",
    "N_quadratic",
    "decompose_quadratic",
    "ScanOutcome",
    "check_quadratic_support",
    "check_diff1",
    "check_diff2",
    "check_lketa23",
    "check_lowbdr2",
    "check_multsiw",
    "PresentationPoset",
    "presentation_poset",
    "scan_poset",
    "scan_siinc",
    "scan_formpw3",
    "scan_formpw2bound",
    "SCANS",
    "CHECKS",
]


def levels_from_t(t: tuple[int, ...]) -> tuple[int, ...]:
    """T-exponent tuple to a sorted tuple of levels with multiplicity."""
    out: list[int] = []
    for l, e in enumerate(t, start=1):
        out.extend([l] * e)
    return tuple(out)


def t_from_levels(levels: tuple[int, ...]) -> tuple[int, ...]:
    vec = [0] * max(levels)
    for l in levels:
        vec[l - 1] += 1
    return tuple(vec)


# -- multiplicity extraction ---------------------------------------------------


def quadratic_multiplicities(w: Permutation) -> dict[tuple, int]:
    """All nonzero m with keys (k, l, eta), from the T-quadratic slice of P_w.

    The slice carries a global minus sign, so the stored values are positive
    whenever the structure theory says they should be.
    """
    out: dict[tuple, int] = {}
    for (x, t, _), c in numerator_P(w, tmax=2).t_slice(2).terms.items():
        k, l = levels_from_t(t)
        out[(k, l, x_multiset(x))] = -c
    return out


def cubic_multiplicities(w: Permutation) -> dict[tuple, int]:
    """All nonzero m with keys (p, k, l, tau), from the T-cubic slice of P_w."""
    out: dict[tuple, int] = {}
    for (x, t, _), c in numerator_P(w, tmax=3).t_slice(3).terms.items():
        p, k, l = levels_from_t(t)
        out[(p, k, l, x_multiset(x))] = c
    return out


def multiplicity2(w: Permutation, k: int, l: int, eta: tuple[int, ...]) -> int:
    if not 1 <= k <= l:
        raise ValueError(f"need 1 <= k <= l, got {(k, l)}")
    coeff = numerator_P(w, tmax=2).coefficient(x=x_exps(tuple(eta)), t=t_pair(k, l))
    return -coeff


def multiplicity3(
    w: Permutation, p: int, k: int, l: int, tau: tuple[int, ...]
) -> int:
    if not 1 <= p <= k <= l:
        raise ValueError(f"need 1 <= p <= k <= l, got {(p, k, l)}")
    tvec = [0] * l
    for lev in (p, k, l):
        tvec[lev - 1] += 1
    return numerator_P(w, tmax=3).coefficient(x=x_exps(tuple(tau)), t=tuple(tvec))


def _n_slice_unsigned(w: Permutation, i: int, d: int, tmax: int) -> SparsePoly:
    sliced = n_factor_product(w, i, tmax=tmax).t_slice(d)
    return sliced if d % 2 == 0 else -sliced


def N_quadratic(w: Permutation, i: int) -> SparsePoly:
    """The T-quadratic slice of the cover factor product, with positive sign.

    Every term is divisible by x_{i+1}^2 and free of x_i: each moved sequence
    contains i and not i+1, so its s_i image contains i+1 and not i.
    """
    out = _n_slice_unsigned(w, i, 2, 2)
    for (x, _, _), _ in out.terms.items():
        assert (x[i] if i < len(x) else 0) == 2, (w.one_line(), i, x)
        assert (x[i - 1] if i - 1 < len(x) else 0) == 0, (w.one_line(), i, x)
    return out


# -- pair-degree decomposition ---------------------------------------------------


def _pair_component(f: SparsePoly, i: int, a: int, b: int) -> SparsePoly:
    """Terms of f with exact degrees (a, b) in (x_i, x_{i+1}), degrees removed."""
    ia, ib = i - 1, i
    out = {}
    for (x, t, xi), c in f.terms.items():
        xa = x[ia] if ia < len(x) else 0
        xb = x[ib] if ib < len(x) else 0
        if (xa, xb) != (a, b):
            continue
        base = list(x) + [0] * (ib + 1 - len(x))
        base[ia] = 0
        base[ib] = 0
        k = len(base)
        while k and base[k - 1] == 0:
            k -= 1
        out[(tuple(base[:k]), t, xi)] = c
    return SparsePoly(out, _trusted=True)


def _pair_basis(i: int, a: int, b: int) -> SparsePoly:
    """Basis element for the decomposition: pure x_i^a x_{i+1}^b when a >= b,
    x_i^a x_{i+1}^a times the complete homogeneous part of degree b - a when
    a < b; exactly the pi_i images of the pure monomials."""
    if a >= b:
        vec = [0] * (i + 1)
        vec[i - 1], vec[i] = a, b
        return SparsePoly.term(x=tuple(vec))
    total = SparsePoly.zero()
    for u in range(b - a + 1):
        vec = [0] * (i + 1)
        vec[i - 1], vec[i] = a + u, b - u
        total = total + SparsePoly.term(x=tuple(vec))
    return total


def decompose_quadratic(f: SparsePoly, i: int) -> dict[tuple[int, int], SparsePoly]:
    """Write f (pair degrees at most 2) over the nine-element pair basis.

    Returns components free of x_i and x_{i+1}; the expansion over
    _pair_basis reconstructs f, which is asserted.
    """
    c = {(a, b): _pair_component(f, i, a, b) for a in range(3) for b in range(3)}
    comp = {
        (0, 0): c[(0, 0)],
        (0, 1): c[(0, 1)],
        (0, 2): c[(0, 2)],
        (1, 2): c[(1, 2)],
        (1, 0): c[(1, 0)] - c[(0, 1)],
        (2, 0): c[(2, 0)] - c[(0, 2)],
        (1, 1): c[(1, 1)] - c[(0, 2)],
        (2, 1): c[(2, 1)] - c[(1, 2)],
        (2, 2): c[(2, 2)],
    }
    rebuilt = SparsePoly.zero()
    for (a, b), part in comp.items():
        rebuilt = rebuilt + part * _pair_basis(i, a, b)
    assert rebuilt == f, "pair degrees above 2 cannot be decomposed here"
    return comp


# -- multiset bookkeeping for the transfer rules ----------------------------------


def _pair_counts(eta: tuple[int, ...], i: int) -> tuple[int, int]:
    return eta.count(i), eta.count(i + 1)


def _rebalance(eta: tuple[int, ...], i: int, a: int, b: int) -> tuple[int, ...]:
    rest = [v for v in eta if v != i and v != i + 1]
    return tuple(sorted(rest + [i] * a + [i + 1] * b))


@dataclass
class ScanOutcome:
    name: str
    n: int
    counterexamples: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merged(self, other: "ScanOutcome") -> "ScanOutcome":
        stats = dict(self.stats)
        for key, val in other.stats.items():
            stats[key] = stats.get(key, 0) + val if isinstance(val, int) else val
        return ScanOutcome(
            self.name, max(self.n, other.n),
            self.counterexamples + other.counterexamples, stats,
        )


def _fmt_eta(eta: tuple[int, ...]) -> str:
    return "".join(map(str, eta)) if all(v <= 9 for v in eta) else ",".join(map(str, eta))


# -- closed formulas for the small slices ------------------------------------------


def check_quadratic_support(n: int) -> ScanOutcome:
    """The quadratic support is exactly the two-presentation sets, positively."""
    out = ScanOutcome("quadratic_support", n)
    checked = 0
    for w in all_permutations(n):
        quad = quadratic_multiplicities(w)
        expected: set[tuple] = set()
        for k in range(1, n + 1):
            for l in range(k, n + 1):
                for eta in enum_B(w, k, l):
                    expected.add((k, l, eta))
        for key, m in quad.items():
            checked += 1
            if key not in expected or m < 1:
                out.counterexamples.append(
                    {"w": w.one_line(), "key": key, "m": m,
                     "reason": "negative or outside the two-presentation sets"}
                )
        for key in expected:
            if quad.get(key, 0) < 1:
                out.counterexamples.append(
                    {"w": w.one_line(), "key": key, "m": quad.get(key, 0),
                     "reason": "vanishes on a two-presentation multiset"}
                )
    out.stats["terms"] = checked
    return out


def _r_value(k: int, l: int, eta: tuple[int, ...]) -> int:
    _, eta2 = eta_parts(eta)
    return k - (1 if k == l else 0) - len(eta2)


def check_diff1(n: int) -> ScanOutcome:
    """Slices with one unit of freedom carry multiplicity exactly 1."""
    out = ScanOutcome("diff1", n)
    checked = 0
    for w in all_permutations(n):
        quad = quadratic_multiplicities(w)
        for k in range(1, n + 1):
            for l in range(k, n + 1):
                for eta in enum_Btilde(w, k, l):
                    if _r_value(k, l, eta) != 1:
                        continue
                    checked += 1
                    expect = 1 if eta in enum_B(w, k, l) else 0
                    got = quad.get((k, l, eta), 0)
                    if got != expect:
                        out.counterexamples.append(
                            {"w": w.one_line(), "k": k, "l": l,
                             "eta": _fmt_eta(eta), "m": got, "expected": expect}
                        )
    out.stats["multisets"] = checked
    return out


def _gamma_positions(eta: tuple[int, ...], beta: tuple[int, ...]) -> tuple[int, ...]:
    """1-based positions within sorted eta1 of the eta1-part of beta."""
    eta1, eta2 = eta_parts(eta)
    rest = list(eta2)
    part = []
    for v in beta:
        if v in rest:
            rest.remove(v)
        else:
            part.append(v)
    return tuple(sorted(eta1.index(v) + 1 for v in part))


def check_diff2(n: int) -> ScanOutcome:
    """Two units of freedom at k < l: the position formula for m."""
    out = ScanOutcome("diff2", n)
    checked = 0
    for w in all_permutations(n):
        quad = quadratic_multiplicities(w)
        for k in range(1, n + 1):
            for l in range(k + 1, n + 1):
                for eta in enum_B(w, k, l):
                    if _r_value(k, l, eta) != 2:
                        continue
                    checked += 1
                    ps = presentations(w, k, l, eta)
                    betas = sorted(beta for _, beta in ps.pairs)
                    a, b = _gamma_positions(eta, betas[0])
                    cc, d = _gamma_positions(eta, betas[-1])
                    eps = 1 if b > cc else 0
                    expect = d - a + 1 - eps * (b - cc)
                    got = quad.get((k, l, eta), 0)
                    hi = l - k + 4
                    if got != expect or not 3 <= got <= hi:
                        out.counterexamples.append(
                            {"w": w.one_line(), "k": k, "l": l,
                             "eta": _fmt_eta(eta), "m": got, "expected": expect,
                             "range": [3, hi]}
                        )
    out.stats["multisets"] = checked
    return out


_LKETA_PATTERNS = {
    (frozenset({1, 3, 5}), frozenset({2, 4, 6})): 3,
    (frozenset({1, 3, 4}), frozenset({2, 5, 6})): 4,
    (frozenset({1, 2, 5}), frozenset({3, 4, 6})): 4,
    (frozenset({1, 2, 4}), frozenset({3, 5, 6})): 5,
    (frozenset({1, 2, 3}), frozenset({4, 5, 6})): 5,
}


def check_lketa23(n: int) -> ScanOutcome:
    """Two units of freedom at k = l: five position patterns, m in [3, 5]."""
    out = ScanOutcome("lketa23", n)
    checked = 0
    witnessed: dict[str, int] = {}
    for w in all_permutations(n):
        quad = quadratic_multiplicities(w)
        for k in range(3, n + 1):
            for eta in enum_B(w, k, k):
                eta1, eta2 = eta_parts(eta)
                if len(eta2) != k - 3:
                    continue
                checked += 1
                ps = presentations(w, k, k, eta)
                sides = sorted({side for pair in ps.pairs for side in pair})
                lo = _gamma_positions(eta, sides[0])
                hi = _gamma_positions(eta, sides[-1])
                got = quad.get((k, k, eta), 0)
                pattern = _LKETA_PATTERNS.get((frozenset(lo), frozenset(hi)))
                a, b, cpos = lo
                d, e, f = hi
                eps = 1 if b > d else 0
                delta = 1 if cpos > e else 0
                unified = f - a - eps * (b - d) - delta * (cpos - e)
                if pattern is None or got != pattern or got != unified or not 3 <= got <= 5:
                    out.counterexamples.append(
                        {"w": w.one_line(), "k": k, "eta": _fmt_eta(eta),
                         "m": got, "pattern": pattern, "unified": unified,
                         "positions": [list(lo), list(hi)]}
                    )
                else:
                    tag = "pattern_{}_{}".format(
                        "".join(map(str, lo)), "".join(map(str, hi))
                    )
                    witnessed[tag] = witnessed.get(tag, 0) + 1
    out.stats["multisets"] = checked
    for tag in sorted(witnessed):
        out.stats[tag] = witnessed[tag]
    return out


def check_lowbdr2(n: int) -> ScanOutcome:
    """On every two-presentation multiset, m is at least 2^r - 1."""
    out = ScanOutcome("lowbdr2", n)
    checked = 0
    for w in all_permutations(n):
        quad = quadratic_multiplicities(w)
        for k in range(1, n + 1):
            for l in range(k, n + 1):
                for eta in enum_B(w, k, l):
                    checked += 1
                    r = _r_value(k, l, eta)
                    got = quad.get((k, l, eta), 0)
                    if got < 2**r - 1:
                        out.counterexamples.append(
                            {"w": w.one_line(), "k": k, "l": l,
                             "eta": _fmt_eta(eta), "m": got, "bound": 2**r - 1}
                        )
    out.stats["multisets"] = checked
    return out


# -- transfer rules along weak-order covers -----------------------------------------


def _key_closure_quadratic(i: int, *dicts: dict) -> set[tuple]:
    keys: set[tuple] = set()
    for src in dicts:
        for (k, l, eta) in src:
            a, b = _pair_counts(eta, i)
            for a2 in range(min(a + b, 2) + 1):
                b2 = a + b - a2
                if b2 <= 2:
                    keys.add((k, l, _rebalance(eta, i, a2, b2)))
    return keys


def check_multsiw(n: int, cubic: bool = True) -> ScanOutcome:
    """Multiplicities of s_i w from those of w across every cover in weak order."""
    out = ScanOutcome("multsiw", n)
    pairs = 0
    for w in all_permutations(n):
        quad_w = quadratic_multiplicities(w)
        cub_w = cubic_multiplicities(w) if cubic else {}
        p2 = -numerator_P(w, tmax=2).t_slice(2)
        for i in range(1, n):
            if not w.is_ascent(i):
                continue
            pairs += 1
            sw = w.left_mul_s(i)
            quad_sw = quadratic_multiplicities(sw)
            nfac = n_factor_product(w, i, tmax=3 if cubic else 2)
            n2 = {}
            for (x, t, _), c in nfac.t_slice(2).terms.items():
                k, l = levels_from_t(t)
                n2[(k, l, x_multiset(x))] = c
            for key in _key_closure_quadratic(i, quad_w, quad_sw, n2):
                k, l, eta = key
                a, b = _pair_counts(eta, i)
                got = quad_sw.get(key, 0)
                if (a, b) == (1, 1):
                    expect = (
                        quad_w.get(key, 0)
                        + quad_w.get((k, l, _rebalance(eta, i, 2, 0)), 0)
                        - quad_w.get((k, l, _rebalance(eta, i, 0, 2)), 0)
                        + n2.get((k, l, _rebalance(eta, i, 0, 2)), 0)
                    )
                else:
                    hi, lo = max(a, b), min(a, b)
                    expect = quad_w.get((k, l, _rebalance(eta, i, hi, lo)), 0)
                if got != expect:
                    out.counterexamples.append(
                        {"w": w.one_line(), "i": i, "grade": 2, "key": key,
                         "m": got, "expected": expect}
                    )
            if not cubic:
                continue
            cub_sw = cubic_multiplicities(sw)
            n1 = -nfac.t_slice(1)
            n3 = -nfac.t_slice(3)
            comp = decompose_quadratic(p2, i)
            xi_var = SparsePoly.x_var(i)
            xip1 = SparsePoly.x_var(i + 1)
            corr11 = xi_var * comp[(1, 0)] * n1
            corr22 = xi_var * xi_var * xip1 * comp[(2, 1)] * n1
            corr21 = xi_var * xi_var * comp[(2, 0)] * n1
            keys3: set[tuple] = set()
            for src in (cub_w, cub_sw):
                for (p, k, l, tau) in src:
                    a, b = _pair_counts(tau, i)
                    for a2 in range(min(a + b, 3) + 1):
                        b2 = a + b - a2
                        if b2 <= 3:
                            keys3.add((p, k, l, _rebalance(tau, i, a2, b2)))
            for (p, k, l, tau) in keys3:
                tvec = [0] * l
                for lev in (p, k, l):
                    tvec[lev - 1] += 1
                tvec = tuple(tvec)
                a, b = _pair_counts(tau, i)
                var = lambda a2, b2: (p, k, l, _rebalance(tau, i, a2, b2))
                got = cub_sw.get((p, k, l, tau), 0)
                if (a, b) == (1, 1):
                    expect = (
                        cub_w.get((p, k, l, tau), 0)
                        + cub_w.get(var(2, 0), 0)
                        - cub_w.get(var(0, 2), 0)
                        + corr11.coefficient(x=x_exps(tau), t=tvec)
                    )
                elif (a, b) == (2, 2):
                    expect = (
                        cub_w.get((p, k, l, tau), 0)
                        + cub_w.get(var(3, 1), 0)
                        - cub_w.get(var(1, 3), 0)
                        + corr22.coefficient(x=x_exps(tau), t=tvec)
                    )
                elif {a, b} == {1, 2}:
                    expect = (
                        cub_w.get(var(2, 1), 0)
                        + cub_w.get(var(3, 0), 0)
                        - cub_w.get(var(0, 3), 0)
                        + corr21.coefficient(x=x_exps(_rebalance(tau, i, 2, 1)), t=tvec)
                        + n3.coefficient(x=x_exps(_rebalance(tau, i, 0, 3)), t=tvec)
                    )
                else:
                    expect = cub_w.get(var(max(a, b), min(a, b)), 0)
                if got != expect:
                    out.counterexamples.append(
                        {"w": w.one_line(), "i": i, "grade": 3,
                         "key": (p, k, l, tau), "m": got, "expected": expect}
                    )
    out.stats["covers"] = pairs
    return out


# -- presentation posets --------------------------------------------------------


@dataclass(frozen=True)
class PresentationPoset:
    """Presentations of a multiset sum ordered entrywise on the low side.

    For k < l the elements are the short sequences; for k = l each unordered
    pair is represented by the member containing the least entry of eta1 (for
    a doubled multiset the single self-paired member).
    """

    eta: tuple[int, ...]
    k: int
    l: int
    elements: tuple[tuple[int, ...], ...]
    leq: tuple[tuple[bool, ...], ...]

    def canonical(self) -> tuple[tuple[bool, ...], ...]:
        return _canonical_order_matrix(self.leq)


def presentation_poset(
    w: Permutation, k: int, l: int, eta: tuple[int, ...]
) -> PresentationPoset:
    ps = presentations(w, k, l, tuple(eta))
    if k < l:
        elems = sorted(beta for _, beta in ps.pairs)
    else:
        eta1, _ = eta_parts(tuple(eta))
        if eta1:
            anchor = eta1[0]
            elems = sorted(
                next(side for side in pair if anchor in side) for pair in ps.pairs
            )
        else:
            elems = sorted({side for pair in ps.pairs for side in pair})
    leq = tuple(
        tuple(all(x <= y for x, y in zip(e1, e2)) for e2 in elems) for e1 in elems
    )
    return PresentationPoset(tuple(eta), k, l, tuple(elems), leq)


def _canonical_order_matrix(
    leq: tuple[tuple[bool, ...], ...]
) -> tuple[tuple[bool, ...], ...]:
    """Lexicographically least relabeling of the order matrix, after color
    refinement cuts the search to permutations within invariant classes."""
    size = len(leq)
    colors: list = [
        (sum(leq[i]), sum(leq[j][i] for j in range(size))) for i in range(size)
    ]
    for _ in range(size):
        nxt = [
            (
                colors[i],
                tuple(sorted(colors[j] for j in range(size) if leq[i][j])),
                tuple(sorted(colors[j] for j in range(size) if leq[j][i])),
            )
            for i in range(size)
        ]
        if len(set(nxt)) == len(set(colors)):
            break
        colors = nxt
    order = sorted(range(size), key=lambda i: (repr(colors[i]), i))
    groups: list[list[int]] = []
    for idx in order:
        if groups and repr(colors[groups[-1][0]]) == repr(colors[idx]):
            groups[-1].append(idx)
        else:
            groups.append([idx])
    best = None
    for arrangement in itertools.product(
        *(itertools.permutations(g) for g in groups)
    ):
        perm = [i for grp in arrangement for i in grp]
        mat = tuple(tuple(leq[perm[i]][perm[j]] for j in range(size)) for i in range(size))
        if best is None or mat < best:
            best = mat
    assert best is not None
    return best


def _order_embeds(
    small: tuple[tuple[bool, ...], ...], big: tuple[tuple[bool, ...], ...]
) -> bool:
    """Injective map preserving comparability and incomparability both ways."""
    ns, nb = len(small), len(big)
    if ns > nb:
        return False
    assigned: list[int] = []
    used = [False] * nb

    def backtrack(idx: int) -> bool:
        if idx == ns:
            return True
        for cand in range(nb):
            if used[cand]:
                continue
            ok = True
            for prev in range(idx):
                img = assigned[prev]
                if (
                    small[idx][prev] != big[cand][img]
                    or small[prev][idx] != big[img][cand]
                ):
                    ok = False
                    break
            if ok:
                used[cand] = True
                assigned.append(cand)
                if backtrack(idx + 1):
                    return True
                assigned.pop()
                used[cand] = False
        return False

    return backtrack(0)


def scan_poset(n: int, threads: int = 1) -> ScanOutcome:
    """m is an invariant of the presentation poset and grows under embeddings."""
    out = ScanOutcome("poset", n)
    buckets: dict[tuple, tuple[int, dict]] = {}

    def one(w: Permutation) -> list[tuple[tuple, int, dict]]:
        quad = quadratic_multiplicities(w)
        rows = []
        for k in range(1, n + 1):
            for l in range(k, n + 1):
                for eta in enum_B(w, k, l):
                    m = quad.get((k, l, eta), 0)
                    canon = presentation_poset(w, k, l, eta).canonical()
                    witness = {"w": w.one_line(), "k": k, "l": l,
                               "eta": _fmt_eta(eta), "m": m}
                    rows.append((canon, m, witness))
        return rows

    for rows in ordered_map(one, all_permutations(n), threads):
        for canon, m, witness in rows:
            if canon not in buckets:
                buckets[canon] = (m, witness)
            elif buckets[canon][0] != m:
                out.counterexamples.append(
                    {"reason": "same poset, different m",
                     "first": buckets[canon][1], "second": witness}
                )
    mats = list(buckets)
    for pa, pb in itertools.permutations(mats, 2):
        if len(pa) <= len(pb) and _order_embeds(pa, pb):
            if buckets[pa][0] > buckets[pb][0]:
                out.counterexamples.append(
                    {"reason": "embedding with larger m on the smaller poset",
                     "small": buckets[pa][1], "large": buckets[pb][1]}
                )
    out.stats["posets"] = len(buckets)
    return out


def scan_siinc(n: int, threads: int = 1) -> ScanOutcome:
    """At an ascent i, swapping i for i+1 inside eta cannot lower m."""
    out = ScanOutcome("siinc", n)

    def one(w: Permutation) -> tuple[list[dict], int]:
        quad = quadratic_multiplicities(w)
        ces: list[dict] = []
        checked = 0
        for i in range(1, n):
            if not w.is_ascent(i):
                continue
            for (k, l, eta), m in quad.items():
                if _pair_counts(eta, i) not in ((0, 1), (0, 2), (1, 2)):
                    continue
                checked += 1
                a, b = _pair_counts(eta, i)
                other = quad.get((k, l, _rebalance(eta, i, b, a)), 0)
                if m > other:
                    ces.append(
                        {"w": w.one_line(), "i": i, "k": k, "l": l,
                         "eta": _fmt_eta(eta), "m": m, "swapped_m": other}
                    )
        return ces, checked

    total = 0
    for ces, checked in ordered_map(one, all_permutations(n), threads):
        out.counterexamples.extend(ces)
        total += checked
    out.stats["comparisons"] = total
    return out


def scan_formpw3(n: int, threads: int = 1) -> ScanOutcome:
    """Cubic terms live on the triple-presentation sets and are positive.

    Two claims, recorded separately: "support" (every cubic term sits in the
    matching C set) and "positivity" (every C element carries multiplicity
    at least 1).
    """
    out = ScanOutcome("formpw3", n)

    def one(w: Permutation) -> tuple[list[dict], int, int]:
        cubic = cubic_multiplicities(w)
        strata = {key[:3] for key in cubic}
        strata.update(itertools.combinations_with_replacement(range(1, n + 1), 3))
        ces: list[dict] = []
        checked = 0
        c_elements = 0
        for p, k, l in sorted(strata):
            cset = frozenset(enum_C(w, p, k, l))
            c_elements += len(cset)
            for tau in sorted(cset):
                checked += 1
                m = cubic.get((p, k, l, tau), 0)
                if m < 1:
                    ces.append(
                        {"claim": "positivity", "w": w.one_line(),
                         "levels": (p, k, l), "tau": _fmt_eta(tau), "m": m}
                    )
            for (pp, kk, ll, tau), m in cubic.items():
                if (pp, kk, ll) != (p, k, l):
                    continue
                checked += 1
                if tau not in cset:
                    ces.append(
                        {"claim": "support", "w": w.one_line(),
                         "levels": (p, k, l), "tau": _fmt_eta(tau), "m": m}
                    )
        return ces, checked, c_elements

    terms = 0
    c_total = 0
    for ces, checked, c_elements in ordered_map(one, all_permutations(n), threads):
        out.counterexamples.extend(ces)
        terms += checked
        c_total += c_elements
    out.stats["terms"] = terms
    out.stats["c_elements"] = c_total
    return out


def scan_formpw2bound(n: int, threads: int = 1) -> ScanOutcome:
    """Lower bound 2^r - 1 on the quadratic slice plus cover monotonicity."""
    out = ScanOutcome("formpw2bound", n)

    def one(w: Permutation) -> tuple[list[dict], int]:
        quad_w = quadratic_multiplicities(w)
        ces: list[dict] = []
        checked = 0
        for k in range(1, n + 1):
            for l in range(k, n + 1):
                for eta in enum_B(w, k, l):
                    checked += 1
                    r = _r_value(k, l, eta)
                    got = quad_w.get((k, l, eta), 0)
                    if got < 2**r - 1:
                        ces.append(
                            {"w": w.one_line(), "k": k, "l": l,
                             "eta": _fmt_eta(eta), "m": got, "bound": 2**r - 1}
                        )
        for i in range(1, n):
            if not w.is_ascent(i):
                continue
            quad_sw = quadratic_multiplicities(w.left_mul_s(i))
            for key, m in quad_w.items():
                if quad_sw.get(key, 0) < m:
                    ces.append(
                        {"w": w.one_line(), "i": i, "key": key,
                         "m": m, "cover_m": quad_sw.get(key, 0)}
                    )
        return ces, checked

    multisets = 0
    for ces, checked in ordered_map(one, all_permutations(n), threads):
        out.counterexamples.extend(ces)
        multisets += checked
    out.stats["multisets"] = multisets
    return out


CHECKS = {
    "quadratic_support": check_quadratic_support,
    "diff1": check_diff1,
    "diff2": check_diff2,
    "lketa23": check_lketa23,
    "lowbdr2": check_lowbdr2,
    "multsiw": check_multsiw,
}

SCANS = {
    "poset": scan_poset,
    "siinc": scan_siinc,
    "formpw3": scan_formpw3,
    "formpw2bound": scan_formpw2bound,
}
