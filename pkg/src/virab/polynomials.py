"""Sparse exact polynomials over the Gaussian rationals.

Two shapes cover everything downstream:

* :class:`UniPoly`: polynomials in the single variable t (the W0 weight
  variable), stored as ``{exponent: Scalar}``.
* :class:`BiPoly`: polynomials in s and t (the L0 and W0 weight variables),
  stored as ``{(s_exp, t_exp): Scalar}``.

Zero coefficients are never stored, so equality is plain dict equality.
Instances are immutable by convention: every operation returns a fresh
object and nothing ever mutates ``terms`` after construction.  The degree
of the zero polynomial is the sentinel ``NEG_INF``.

The canonical text form ("2*s^2*t - 1/2", graded-lex with s before t,
descending) lives in :func:`format_unipoly` / :func:`format_bipoly`;
parsers are in :mod:`virab.grammar`.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Mapping

from .scalars import MINUS_ONE, ONE, ZERO, Scalar, format_scalar, intpow

NEG_INF = float("-inf")


class UniPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        self.terms: dict[int, Scalar] = (
            {k: c for k, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def _raw(cls, terms: dict[int, Scalar]) -> UniPoly:
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> UniPoly:
        return cls._raw({})

    @classmethod
    def const(cls, c: Scalar) -> UniPoly:
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, k: int, c: Scalar = ONE) -> UniPoly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls._raw({k: c} if c else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int | float:
        return max(self.terms) if self.terms else NEG_INF

    def coeff(self, k: int) -> Scalar:
        return self.terms.get(k, ZERO)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: UniPoly) -> UniPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                v = prev + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return UniPoly._raw(out)

    def __sub__(self, other: UniPoly) -> UniPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = -c
            else:
                v = prev - c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return UniPoly._raw(out)

    def __neg__(self) -> UniPoly:
        return UniPoly._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: UniPoly) -> UniPoly:
        if not (self.terms and other.terms):
            return UniPoly._raw({})
        acc: dict[int, Scalar] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                prev = acc.get(k)
                acc[k] = c1 * c2 if prev is None else prev + c1 * c2
        return UniPoly._raw({k: c for k, c in acc.items() if c})

    def scale(self, c: Scalar) -> UniPoly:
        if not c:
            return UniPoly._raw({})
        return UniPoly._raw({k: v * c for k, v in self.terms.items()})

    def scale_int(self, n: int) -> UniPoly:
        if n == 0:
            return UniPoly._raw({})
        return UniPoly._raw({k: v.mul_int(n) for k, v in self.terms.items()})

    def deriv(self) -> UniPoly:
        return UniPoly._raw(
            {k - 1: c.mul_int(k) for k, c in self.terms.items() if k}
        )

    def eval(self, x: Scalar) -> Scalar:
        out = ZERO
        for k, c in self.terms.items():
            out = out + c * intpow(x, k)
        return out

    def embed(self) -> BiPoly:
        """This polynomial viewed in (s, t), with no s dependence."""
        return BiPoly._raw({(0, k): c for k, c in self.terms.items()})

    def __str__(self) -> str:
        return format_unipoly(self)

    def __repr__(self) -> str:
        return f"UniPoly({format_unipoly(self)!r})"


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Scalar] | None = None):
        self.terms: dict[tuple[int, int], Scalar] = (
            {k: c for k, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def _raw(cls, terms: dict[tuple[int, int], Scalar]) -> BiPoly:
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def zero(cls) -> BiPoly:
        return cls._raw({})

    @classmethod
    def const(cls, c: Scalar) -> BiPoly:
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def one(cls) -> BiPoly:
        return cls._raw({(0, 0): ONE})

    @classmethod
    def monomial(cls, i: int, j: int, c: Scalar = ONE) -> BiPoly:
        if i < 0 or j < 0:
            raise ValueError("negative exponent")
        return cls._raw({(i, j): c} if c else {})

    @classmethod
    def s_var(cls) -> BiPoly:
        return cls._raw({(1, 0): ONE})

    @classmethod
    def t_var(cls) -> BiPoly:
        return cls._raw({(0, 1): ONE})

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def deg_s(self) -> int | float:
        return max(i for i, _ in self.terms) if self.terms else NEG_INF

    @property
    def deg_t(self) -> int | float:
        return max(j for _, j in self.terms) if self.terms else NEG_INF

    @property
    def total_degree(self) -> int | float:
        return max(i + j for i, j in self.terms) if self.terms else NEG_INF

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c
            else:
                v = prev + c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return BiPoly._raw(out)

    def __sub__(self, other: BiPoly) -> BiPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            if prev is None:
                out[k] = -c
            else:
                v = prev - c
                if v:
                    out[k] = v
                else:
                    del out[k]
        return BiPoly._raw(out)

    def __neg__(self) -> BiPoly:
        return BiPoly._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other: BiPoly) -> BiPoly:
        if not (self.terms and other.terms):
            return BiPoly._raw({})
        acc: dict[tuple[int, int], Scalar] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                prev = acc.get(k)
                acc[k] = c1 * c2 if prev is None else prev + c1 * c2
        return BiPoly._raw({k: c for k, c in acc.items() if c})

    def scale(self, c: Scalar) -> BiPoly:
        if not c:
            return BiPoly._raw({})
        return BiPoly._raw({k: v * c for k, v in self.terms.items()})

    def partial_t(self) -> BiPoly:
        return BiPoly._raw(
            {(i, j - 1): c.mul_int(j) for (i, j), c in self.terms.items() if j}
        )

    def shift_s(self, c: Scalar) -> BiPoly:
        """Substitute s -> s - c (exact binomial expansion)."""
        if not c or not self.terms:
            return self
        neg = -c
        max_i = max(i for i, _ in self.terms)
        pows = [ONE]
        for _ in range(max_i):
            pows.append(pows[-1] * neg)
        out: dict[tuple[int, int], Scalar] = {}
        for (i, j), coef in self.terms.items():
            for p in range(i + 1):
                w = coef * pows[i - p]
                if p < i:
                    w = w.mul_int(comb(i, p))
                key = (p, j)
                prev = out.get(key)
                out[key] = w if prev is None else prev + w
        return BiPoly._raw({k: v for k, v in out.items() if v})

    def coeff_s_power(self, i: int) -> UniPoly:
        """The coefficient of s^i, as a polynomial in t."""
        return UniPoly._raw(
            {j: c for (p, j), c in self.terms.items() if p == i}
        )

    def coeff(self, i: int, j: int) -> Scalar:
        return self.terms.get((i, j), ZERO)

    def constant(self) -> Scalar:
        return self.terms.get((0, 0), ZERO)

    def subs_s(self, x: Scalar) -> UniPoly:
        """Substitute s = x, leaving a polynomial in t."""
        out: dict[int, Scalar] = {}
        for (i, j), c in self.terms.items():
            v = c * intpow(x, i)
            prev = out.get(j)
            out[j] = v if prev is None else prev + v
        return UniPoly._raw({k: v for k, v in out.items() if v})

    def subs_t(self, x: Scalar) -> UniPoly:
        """Substitute t = x, leaving a polynomial in s."""
        out: dict[int, Scalar] = {}
        for (i, j), c in self.terms.items():
            v = c * intpow(x, j)
            prev = out.get(i)
            out[i] = v if prev is None else prev + v
        return UniPoly._raw({k: v for k, v in out.items() if v})

    def to_unipoly_t(self) -> UniPoly:
        """Reinterpret as a polynomial in t; raises if s occurs."""
        if any(i for i, _ in self.terms):
            raise ValueError("polynomial depends on s")
        return UniPoly._raw({j: c for (_, j), c in self.terms.items()})

    def monomials(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms)

    def __str__(self) -> str:
        return format_bipoly(self)

    def __repr__(self) -> str:
        return f"BiPoly({format_bipoly(self)!r})"


def divided_difference(k: int, alpha: Scalar) -> UniPoly:
    """The exact quotient (t^k - alpha^k) / (t - alpha).

    Equals sum_{j=0}^{k-1} alpha^j * t^(k-1-j); zero when k == 0.
    """
    if k < 0:
        raise ValueError("negative exponent")
    out: dict[int, Scalar] = {}
    p = ONE
    for j in range(k):
        if p:
            out[k - 1 - j] = p
        p = p * alpha
    return UniPoly._raw(out)


# --- canonical text form ------------------------------------------------

def _monomial_text(parts: list[tuple[str, int]]) -> str:
    bits = []
    for name, e in parts:
        if e == 0:
            continue
        bits.append(name if e == 1 else f"{name}^{e}")
    return "*".join(bits)


def _term_text(c: Scalar, monom: str) -> tuple[str, str]:
    """Split a term into (sign, body) for joining with ' + ' / ' - '."""
    sign = "+"
    if c.is_negative_like:
        sign = "-"
        c = -c
    if not monom:
        body = f"({format_scalar(c)})" if c.is_mixed else format_scalar(c)
    elif c == ONE:
        body = monom
    else:
        cs = format_scalar(c)
        body = f"({cs})*{monom}" if c.is_mixed else f"{cs}*{monom}"
    return sign, body


def _join_terms(terms: list[tuple[str, str]]) -> str:
    if not terms:
        return "0"
    first_sign, first_body = terms[0]
    out = [first_body if first_sign == "+" else f"-{first_body}"]
    for sign, body in terms[1:]:
        out.append(f" {sign} {body}")
    return "".join(out)


def format_unipoly(p: UniPoly) -> str:
    keys = sorted(p.terms, reverse=True)
    return _join_terms(
        [_term_text(p.terms[k], _monomial_text([("t", k)])) for k in keys]
    )


def format_bipoly(p: BiPoly) -> str:
    # graded lex, s before t, descending
    keys = sorted(p.terms, key=lambda ij: (ij[0] + ij[1], ij[0]), reverse=True)
    return _join_terms(
        [
            _term_text(p.terms[(i, j)], _monomial_text([("s", i), ("t", j)]))
            for i, j in keys
        ]
    )
