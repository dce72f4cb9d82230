"""Sparse exact-integer polynomials in x_1, x_2, ..., block variables T_1, T_2, ...,
and a single deformation variable xi.

The T_l are atomic generators (a block T_l stands for the product t_1...t_l of
underlying torus variables, but is never expanded).  Monomial keys are triples
``(x, t, xi)`` of trimmed exponent tuples plus the xi exponent; coefficients
are Python ints, so arithmetic is exact at any size.

The isobaric operators act on the x variables only:

    divided_difference(i, f) = (f - s_i f) / (x_i - x_{i+1})
    pi(i, f)                 = divided_difference(i, x_i * f)
    pi_xi(i, f)              = pi(i, (1 + xi * x_{i+1}) * f)

all implemented by grouping terms over their (x_i, x_{i+1})-free part and
expanding the closed one-pair formulas, so no rational division ever happens.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

__all__ = [
    "Monomial",
    "SparsePoly",
    "divided_difference",
    "pi",
    "pi_xi",
    "pi_word",
    "series_inverse_product",
    "x_exps",
    "x_multiset",
    "t_pair",
]

# (x exponents, T exponents, xi exponent); exponent tuples are 1-based by
# position (index 0 holds x_1 / T_1) and carry no trailing zeros.
Monomial = tuple[tuple[int, ...], tuple[int, ...], int]

_ONE_KEY: Monomial = ((), (), 0)


def _trim(t: tuple[int, ...]) -> tuple[int, ...]:
    k = len(t)
    while k and t[k - 1] == 0:
        k -= 1
    return t[:k]


def _tadd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def x_exps(eta: tuple[int, ...]) -> tuple[int, ...]:
    """Exponent tuple of the x-monomial indexed by a multiset such as (1,1,3)."""
    if not eta:
        return ()
    vec = [0] * max(eta)
    for v in eta:
        vec[v - 1] += 1
    return tuple(vec)


def x_multiset(x: tuple[int, ...]) -> tuple[int, ...]:
    """Inverse of :func:`x_exps`: sorted tuple with repeats."""
    out: list[int] = []
    for idx, e in enumerate(x, start=1):
        out.extend([idx] * e)
    return tuple(out)


def t_pair(k: int, l: int) -> tuple[int, ...]:
    """Exponent tuple of T_k * T_l (k = l gives a square)."""
    vec = [0] * max(k, l)
    vec[k - 1] += 1
    vec[l - 1] += 1
    return tuple(vec)


class SparsePoly:
    """Immutable-by-convention sparse polynomial with int coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None, _trusted: bool = False):
        if terms is None:
            self.terms: dict[Monomial, int] = {}
        elif _trusted:
            self.terms = dict(terms)
        else:
            clean: dict[Monomial, int] = {}
            for (x, t, xi), c in terms.items():
                if c:
                    clean[(_trim(tuple(x)), _trim(tuple(t)), xi)] = c
            self.terms = clean

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls) -> "SparsePoly":
        return cls()

    @classmethod
    def one(cls) -> "SparsePoly":
        return cls({_ONE_KEY: 1}, _trusted=True)

    @classmethod
    def term(
        cls,
        coeff: int = 1,
        x: tuple[int, ...] = (),
        t: tuple[int, ...] = (),
        xi: int = 0,
    ) -> "SparsePoly":
        if not coeff:
            return cls()
        return cls({(_trim(tuple(x)), _trim(tuple(t)), xi): coeff}, _trusted=True)

    @classmethod
    def x_var(cls, i: int) -> "SparsePoly":
        return cls.term(x=(0,) * (i - 1) + (1,))

    @classmethod
    def t_block(cls, l: int) -> "SparsePoly":
        return cls.term(t=(0,) * (l - 1) + (1,))

    @classmethod
    def xi_var(cls) -> "SparsePoly":
        return cls.term(xi=1)

    @classmethod
    def x_monomial(cls, eta: tuple[int, ...], coeff: int = 1) -> "SparsePoly":
        """x^eta for a multiset eta given as a sorted tuple with repeats."""
        return cls.term(coeff=coeff, x=x_exps(eta))

    # -- ring structure -------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = SparsePoly.term(coeff=other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):  # pragma: no cover - polynomials are not dict keys
        raise TypeError("SparsePoly is unhashable")

    def __add__(self, other: "SparsePoly | int") -> "SparsePoly":
        if isinstance(other, int):
            other = SparsePoly.term(coeff=other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SparsePoly(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other: "SparsePoly | int") -> "SparsePoly":
        if isinstance(other, int):
            other = SparsePoly.term(coeff=other)
        return self + (-other)

    def __rsub__(self, other: int) -> "SparsePoly":
        return SparsePoly.term(coeff=other) - self

    def __mul__(self, other: "SparsePoly | int") -> "SparsePoly":
        if isinstance(other, int):
            if not other:
                return SparsePoly()
            return SparsePoly(
                {k: c * other for k, c in self.terms.items()}, _trusted=True
            )
        return self.mul_trunc(other, None)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "SparsePoly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = SparsePoly.one()
        for _ in range(e):
            out = out * self
        return out

    def mul_trunc(self, other: "SparsePoly", tmax: int | None) -> "SparsePoly":
        """Product, discarding terms of total T-degree above tmax (None: exact)."""
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, int] = {}
        bitems = [(k, c, sum(k[1])) for k, c in b.items()]
        if tmax is not None:
            bitems.sort(key=lambda kc: kc[2])
        for (ax, at, axi), ac in a.items():
            atd = sum(at)
            for (bx, bt, bxi), bc, btd in bitems:
                if tmax is not None and atd + btd > tmax:
                    break
                k = (_tadd(ax, bx), _tadd(at, bt), axi + bxi)
                s = out.get(k, 0) + ac * bc
                if s:
                    out[k] = s
                else:
                    del out[k]
        return SparsePoly(out, _trusted=True)

    # -- degree slices ----------------------------------------------------

    def t_degree(self) -> int:
        """Largest total T-degree among terms (0 for the zero polynomial)."""
        return max((sum(t) for (_, t, _) in self.terms), default=0)

    def t_slice(self, d: int) -> "SparsePoly":
        return SparsePoly(
            {k: c for k, c in self.terms.items() if sum(k[1]) == d}, _trusted=True
        )

    def t_truncate(self, tmax: int | None) -> "SparsePoly":
        if tmax is None:
            return self
        return SparsePoly(
            {k: c for k, c in self.terms.items() if sum(k[1]) <= tmax}, _trusted=True
        )

    def xi_slice(self, d: int) -> "SparsePoly":
        return SparsePoly(
            {k: c for k, c in self.terms.items() if k[2] == d}, _trusted=True
        )

    def coefficient(
        self,
        x: tuple[int, ...] = (),
        t: tuple[int, ...] = (),
        xi: int = 0,
    ) -> int:
        return self.terms.get((_trim(tuple(x)), _trim(tuple(t)), xi), 0)

    def t_coefficient(self, t: tuple[int, ...]) -> "SparsePoly":
        """The polynomial in x and xi multiplying an exact T-monomial."""
        tt = _trim(tuple(t))
        return SparsePoly(
            {
                (x, (), xi): c
                for (x, tk, xi), c in self.terms.items()
                if tk == tt
            },
            _trusted=True,
        )

    def swap_x(self, i: int) -> "SparsePoly":
        """The transposition of x_i and x_{i+1} applied to every term."""
        ia, ib = i - 1, i
        out: dict[Monomial, int] = {}
        for (x, t, xi), c in self.terms.items():
            a = x[ia] if ia < len(x) else 0
            b = x[ib] if ib < len(x) else 0
            if a == b:
                out[(x, t, xi)] = c
                continue
            base = list(x) + [0] * (ib + 1 - len(x))
            base[ia], base[ib] = b, a
            out[(_trim(tuple(base)), t, xi)] = c
        return SparsePoly(out, _trusted=True)

    # -- presentation -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Graded order, dominance-descending within a degree (x1 before x2)."""
        return sorted(
            self.terms.items(),
            key=lambda kc: (
                kc[0][2],
                sum(kc[0][1]),
                tuple(-e for e in kc[0][1]),
                sum(kc[0][0]),
                tuple(-e for e in kc[0][0]),
            ),
        )

    def __repr__(self) -> str:
        return f"SparsePoly({self.to_text()})"

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for (x, t, xi), c in self.sorted_terms():
            factors = [
                f"x{i}" if e == 1 else f"x{i}^{e}"
                for i, e in enumerate(x, start=1)
                if e
            ]
            factors += [
                f"T{l}" if e == 1 else f"T{l}^{e}"
                for l, e in enumerate(t, start=1)
                if e
            ]
            if xi:
                factors.append("xi" if xi == 1 else f"xi^{xi}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def to_json_obj(self) -> dict:
        terms = []
        for (x, t, xi), c in self.sorted_terms():
            terms.append(
                {
                    "coeff": c,
                    "x": {str(i): e for i, e in enumerate(x, start=1) if e},
                    "T": {str(l): e for l, e in enumerate(t, start=1) if e},
                    "xi": xi,
                }
            )
        return {"terms": terms}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SparsePoly":
        out: dict[Monomial, int] = {}
        for term in obj["terms"]:
            xd = {int(i): int(e) for i, e in term.get("x", {}).items()}
            td = {int(l): int(e) for l, e in term.get("T", {}).items()}
            x = tuple(xd.get(i, 0) for i in range(1, max(xd, default=0) + 1))
            t = tuple(td.get(l, 0) for l in range(1, max(td, default=0) + 1))
            k = (_trim(x), _trim(t), int(term.get("xi", 0)))
            c = out.get(k, 0) + int(term["coeff"])
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return cls(out, _trusted=True)

    _FACTOR_RE = re.compile(r"^(x|T)(\d+)(?:\^(\d+))?$|^(xi)(?:\^(\d+))?$|^(\d+)$")

    @classmethod
    def parse(cls, text: str) -> "SparsePoly":
        """Parse the canonical text form, e.g. ``1 - x1*x2*x3*T1*T2``."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls.zero()
        s = s.replace("-", "+-")
        out: dict[Monomial, int] = {}
        for chunk in s.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            sign = 1
            if chunk.startswith("-"):
                sign = -1
                chunk = chunk[1:].strip()
            if not chunk:
                raise ValueError(f"dangling sign in {text!r}")
            coeff = sign
            xd: dict[int, int] = {}
            td: dict[int, int] = {}
            xi = 0
            for factor in chunk.split("*"):
                m = cls._FACTOR_RE.match(factor.strip())
                if not m:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                if m.group(6) is not None:
                    coeff *= int(m.group(6))
                elif m.group(4) is not None:
                    xi += int(m.group(5) or 1)
                else:
                    d = xd if m.group(1) == "x" else td
                    idx = int(m.group(2))
                    if idx < 1:
                        raise ValueError(f"variable index must be >= 1 in {factor!r}")
                    d[idx] = d.get(idx, 0) + int(m.group(3) or 1)
            x = _trim(tuple(xd.get(i, 0) for i in range(1, max(xd, default=0) + 1)))
            t = _trim(tuple(td.get(l, 0) for l in range(1, max(td, default=0) + 1)))
            k = (x, t, xi)
            c = out.get(k, 0) + coeff
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return cls(out, _trusted=True)


# -- isobaric operators -----------------------------------------------------


@lru_cache(maxsize=None)
def _dd_pair(a: int, b: int) -> tuple[tuple[int, int, int], ...]:
    """divided_difference on x_i^a x_{i+1}^b as (exp_i, exp_{i+1}, sign) triples."""
    if a > b:
        return tuple((b + u, a - 1 - u, 1) for u in range(a - b))
    if b > a:
        return tuple((a + u, b - 1 - u, -1) for u in range(b - a))
    return ()


@lru_cache(maxsize=None)
def _pi_pair(a: int, b: int) -> tuple[tuple[int, int, int], ...]:
    """pi on x_i^a x_{i+1}^b as (exp_i, exp_{i+1}, sign) triples."""
    if a >= b:
        return tuple((b + u, a - u, 1) for u in range(a - b + 1))
    if b == a + 1:
        return ()
    return tuple((a + 1 + u, b - 1 - u, -1) for u in range(b - a - 1))


def _apply_pair_table(f: SparsePoly, i: int, table) -> SparsePoly:
    ia, ib = i - 1, i
    groups: dict[Monomial, dict[tuple[int, int], int]] = {}
    for (x, t, xi), c in f.terms.items():
        a = x[ia] if ia < len(x) else 0
        b = x[ib] if ib < len(x) else 0
        if a or b:
            base = list(x) + [0] * (ib + 1 - len(x))
            base[ia] = 0
            base[ib] = 0
            key = (_trim(tuple(base)), t, xi)
        else:
            key = (x, t, xi)
        bucket = groups.setdefault(key, {})
        bucket[(a, b)] = bucket.get((a, b), 0) + c
    out: dict[Monomial, int] = {}
    for (bx, t, xi), bucket in groups.items():
        padded = list(bx) + [0] * (ib + 1 - len(bx))
        for (a, b), c in bucket.items():
            for ea, eb, sign in table(a, b):
                if ea or eb:
                    padded[ia] = ea
                    padded[ib] = eb
                    key = (_trim(tuple(padded)), t, xi)
                    padded[ia] = 0
                    padded[ib] = 0
                else:
                    key = (bx, t, xi)
                s = out.get(key, 0) + sign * c
                if s:
                    out[key] = s
                else:
                    del out[key]
    return SparsePoly(out, _trusted=True)


def divided_difference(i: int, f: SparsePoly) -> SparsePoly:
    """(f - s_i f) / (x_i - x_{i+1}), computed without any division."""
    if i < 1:
        raise IndexError(f"operator index must be >= 1, got {i}")
    return _apply_pair_table(f, i, _dd_pair)


def pi(i: int, f: SparsePoly) -> SparsePoly:
    """The idempotent isobaric operator: divided_difference(i, x_i * f)."""
    if i < 1:
        raise IndexError(f"operator index must be >= 1, got {i}")
    return _apply_pair_table(f, i, _pi_pair)


def pi_xi(i: int, f: SparsePoly) -> SparsePoly:
    """The xi-deformed operator: pi(i, (1 + xi x_{i+1}) f)."""
    if i < 1:
        raise IndexError(f"operator index must be >= 1, got {i}")
    extra = SparsePoly(
        {
            (_tadd(x, (0,) * (i) + (1,)), t, xi + 1): c
            for (x, t, xi), c in f.terms.items()
        },
        _trusted=True,
    )
    return pi(i, f + extra)


def pi_word(word: Iterable[int], f: SparsePoly, xi_mode: bool = False) -> SparsePoly:
    """Compose operators along a word, rightmost letter applied first."""
    op = pi_xi if xi_mode else pi
    for i in reversed(tuple(word)):
        f = op(i, f)
    return f


# -- truncated geometric products -------------------------------------------


def series_inverse_product(
    factors: Iterable[SparsePoly | Monomial], D: int
) -> SparsePoly:
    """prod over factors m of 1/(1 - m), truncated past total T-degree D.

    Every factor must be a single monomial of T-degree >= 1 (otherwise the
    truncation would not determine the expansion).
    """
    if D < 0:
        raise ValueError(f"truncation degree must be >= 0, got {D}")
    result = SparsePoly.one()
    for fac in factors:
        if isinstance(fac, SparsePoly):
            if len(fac.terms) != 1:
                raise ValueError(f"factor is not a monomial: {fac!r}")
            ((key, coeff),) = fac.terms.items()
        else:
            key, coeff = (_trim(tuple(fac[0])), _trim(tuple(fac[1])), 0), 1
        td = sum(key[1])
        if td < 1:
            raise ValueError(f"factor monomial has no T part: {key}")
        geom: dict[Monomial, int] = {_ONE_KEY: 1}
        gx, gt, gxi = (), (), 0
        gc = 1
        for _ in range(D // td):
            gx, gt, gxi, gc = _tadd(gx, key[0]), _tadd(gt, key[1]), gxi + key[2], gc * coeff
            geom[(gx, gt, gxi)] = gc
        result = result.mul_trunc(SparsePoly(geom, _trusted=True), D)
    return result


def _selftest() -> None:  # pragma: no cover - convenience for interactive use
    x1, x2 = SparsePoly.x_var(1), SparsePoly.x_var(2)
    assert pi(1, x2 * x2) == -(x1 * x2)
    assert divided_difference(1, x1) == SparsePoly.one()


if __name__ == "__main__":  # pragma: no cover
    _selftest()
