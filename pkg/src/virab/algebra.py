"""The Lie algebras W(a,b) and their central extensions Vir(a,b).

W(a,b) has basis {L_n, W_n : n in Z} with

    [L_m, L_n] = (n - m) L_{m+n}
    [L_m, W_n] = (a + n + b*m) W_{m+n}
    [W_m, W_n] = 0.

Four parameter points admit extra central directions beyond the Virasoro
cocycle on the L side; :func:`classify_case` maps (a, b) to the right
bracket table.  Central generators are written C_1, C_2, ... with the
index set depending on the case:

    case        (a, b)      central generators
    vir00       (0, 0)      C1, C2, C3
    vir0m1      (0, -1)     C1, C2
    vir120      (1/2, 0)    C1, C3
    vir01       (0, 1)      C1, C2, C4
    vir-gen     other       C1
    w           any         (none)

All brackets are exact; :func:`verify_algebra` sweeps antisymmetry and the
Jacobi identity over a finite index window and returns a Report.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from time import perf_counter
from typing import NamedTuple

from .report import Report
from .scalars import MINUS_ONE, ONE, ZERO, HALF, Scalar, format_scalar


class Case(str, Enum):
    W_ONLY = "w"
    VIR_00 = "vir00"
    VIR_0_MINUS_1 = "vir0m1"
    VIR_HALF_0 = "vir120"
    VIR_GENERIC = "vir-gen"
    VIR_01 = "vir01"


CENTRAL_INDICES: dict[Case, tuple[int, ...]] = {
    Case.W_ONLY: (),
    Case.VIR_00: (1, 2, 3),
    Case.VIR_0_MINUS_1: (1, 2),
    Case.VIR_HALF_0: (1, 3),
    Case.VIR_GENERIC: (1,),
    Case.VIR_01: (1, 2, 4),
}

_SPECIAL: dict[tuple[Scalar, Scalar], Case] = {
    (ZERO, ZERO): Case.VIR_00,
    (ZERO, MINUS_ONE): Case.VIR_0_MINUS_1,
    (HALF, ZERO): Case.VIR_HALF_0,
    (ZERO, ONE): Case.VIR_01,
}


@dataclass(frozen=True)
class AlgebraParams:
    a: Scalar
    b: Scalar
    case: Case

    def __post_init__(self):
        if self.case is Case.W_ONLY:
            return
        expected = _SPECIAL.get((self.a, self.b), Case.VIR_GENERIC)
        if self.case is not expected:
            raise ValueError(
                f"case {self.case.value} does not match (a, b) = "
                f"({format_scalar(self.a)}, {format_scalar(self.b)})"
            )

    @property
    def central_indices(self) -> tuple[int, ...]:
        return CENTRAL_INDICES[self.case]


def classify_case(a: Scalar, b: Scalar, want_extension: bool = True) -> AlgebraParams:
    """Pick the bracket table for (a, b): one of the four special points,
    the generic one-cocycle case, or the extension-free algebra."""
    if not want_extension:
        return AlgebraParams(a, b, Case.W_ONLY)
    return AlgebraParams(a, b, _SPECIAL.get((a, b), Case.VIR_GENERIC))


class BasisSymbol(NamedTuple):
    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}:{self.index}"


def L(n: int) -> BasisSymbol:
    return BasisSymbol("L", n)


def W(n: int) -> BasisSymbol:
    return BasisSymbol("W", n)


def C(i: int) -> BasisSymbol:
    return BasisSymbol("C", i)


class AlgElement:
    """A finite linear combination of basis symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[BasisSymbol, Scalar] = (
            {k: c for k, c in terms.items() if c} if terms else {}
        )

    @classmethod
    def _raw(cls, terms: dict[BasisSymbol, Scalar]) -> AlgElement:
        e = object.__new__(cls)
        e.terms = terms
        return e

    @classmethod
    def zero(cls) -> AlgElement:
        return cls._raw({})

    @classmethod
    def single(cls, sym: BasisSymbol, coeff: Scalar = ONE) -> AlgElement:
        return cls._raw({sym: coeff} if coeff else {})

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: AlgElement) -> AlgElement:
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
        return AlgElement._raw(out)

    def __sub__(self, other: AlgElement) -> AlgElement:
        return self + (-other)

    def __neg__(self) -> AlgElement:
        return AlgElement._raw({k: -c for k, c in self.terms.items()})

    def scale(self, c: Scalar) -> AlgElement:
        if not c:
            return AlgElement._raw({})
        return AlgElement._raw({k: v * c for k, v in self.terms.items()})

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgElement({format_element(self)!r})"


_KIND_ORDER = {"L": 0, "W": 1, "C": 2}


def format_element(e: AlgElement) -> str:
    """Canonical text: kinds in order L, W, C, indices ascending."""
    from .polynomials import _join_terms, _term_text  # shared term renderer

    keys = sorted(e.terms, key=lambda s: (_KIND_ORDER[s.kind], s.index))
    return _join_terms([_term_text(e.terms[k], str(k)) for k in keys])


def _check_symbol(sym: BasisSymbol, p: AlgebraParams) -> None:
    if sym.kind == "C":
        if sym.index not in CENTRAL_INDICES[p.case]:
            raise ValueError(
                f"central index {sym.index} is not available in case {p.case.value}"
            )
    elif sym.kind not in ("L", "W"):
        raise ValueError(f"unknown symbol kind {sym.kind!r}")


def _ll(n: int, m: int, p: AlgebraParams) -> AlgElement:
    out: dict[BasisSymbol, Scalar] = {}
    if m != n:
        out[BasisSymbol("L", m + n)] = Scalar.from_int(m - n)
    if p.case is not Case.W_ONLY and m + n == 0:
        c = n * n * n - n
        if c:
            out[BasisSymbol("C", 1)] = Scalar(Fraction(c, 12))
    return AlgElement._raw(out)


def _lw(n: int, m: int, p: AlgebraParams) -> AlgElement:
    # n is the L index, m the W index
    case = p.case
    out: dict[BasisSymbol, Scalar] = {}
    if case is Case.VIR_00:
        cw = Scalar.from_int(m)
        if m + n == 0 and n * n + n:
            out[BasisSymbol("C", 2)] = Scalar.from_int(n * n + n)
    elif case is Case.VIR_0_MINUS_1:
        cw = Scalar.from_int(m - n)
        if m + n == 0:
            c = n * n * n - n
            if c:
                out[BasisSymbol("C", 2)] = Scalar(Fraction(c, 12))
    elif case is Case.VIR_HALF_0:
        cw = Scalar(Fraction(2 * m + 1, 2))
    elif case is Case.VIR_01:
        cw = Scalar.from_int(m + n)
        if m + n == 0:
            if n:
                out[BasisSymbol("C", 2)] = Scalar.from_int(n)
            out[BasisSymbol("C", 4)] = ONE
    else:
        cw = p.a.add_int(m) + p.b.mul_int(n)
    if cw:
        out[BasisSymbol("W", m + n)] = cw
    return AlgElement._raw(out)


def _ww(n: int, m: int, p: AlgebraParams) -> AlgElement:
    case = p.case
    if case is Case.VIR_00:
        if m + n == 0 and n:
            return AlgElement._raw({BasisSymbol("C", 3): Scalar.from_int(n)})
    elif case is Case.VIR_HALF_0:
        if m + n == -1:
            return AlgElement._raw({BasisSymbol("C", 3): Scalar.from_int(2 * n + 1)})
    return AlgElement._raw({})


def bracket(x: BasisSymbol, y: BasisSymbol, p: AlgebraParams) -> AlgElement:
    """[x, y] in the chosen bracket table."""
    _check_symbol(x, p)
    _check_symbol(y, p)
    kx, ky = x.kind, y.kind
    if kx == "C" or ky == "C":
        return AlgElement._raw({})
    if kx == "L":
        if ky == "L":
            return _ll(x.index, y.index, p)
        return _lw(x.index, y.index, p)
    if ky == "L":
        return -_lw(y.index, x.index, p)
    return _ww(x.index, y.index, p)


def bracket_sym_elem(x: BasisSymbol, e: AlgElement, p: AlgebraParams) -> AlgElement:
    out: dict[BasisSymbol, Scalar] = {}
    for sym, c in e.terms.items():
        for sym2, c2 in bracket(x, sym, p).terms.items():
            v = c * c2
            prev = out.get(sym2)
            if prev is None:
                out[sym2] = v
            else:
                v = prev + v
                if v:
                    out[sym2] = v
                else:
                    del out[sym2]
    return AlgElement._raw(out)


def bracket_lin(x: AlgElement, y: AlgElement, p: AlgebraParams) -> AlgElement:
    """Bilinear extension of the bracket to arbitrary elements."""
    out = AlgElement._raw({})
    for sym, c in x.terms.items():
        out = out + bracket_sym_elem(sym, y, p).scale(c)
    return out


def verify_algebra(p: AlgebraParams, window: int = 5) -> Report:
    """Check antisymmetry on all symbol pairs and Jacobi on all symbol
    triples with generator indices in [-window, window], central symbols
    included.  Exact; any nonzero residue is reported with its witness."""
    t0 = perf_counter()
    syms = [BasisSymbol("L", n) for n in range(-window, window + 1)]
    syms += [BasisSymbol("W", n) for n in range(-window, window + 1)]
    syms += [BasisSymbol("C", i) for i in CENTRAL_INDICES[p.case]]

    report = Report(
        suite="verify-algebra",
        params={
            "case": p.case.value,
            "a": format_scalar(p.a),
            "b": format_scalar(p.b),
            "window": str(window),
        },
    )
    checks = 0
    for ix, x in enumerate(syms):
        for y in syms[ix:]:
            checks += 1
            res = bracket(x, y, p) + bracket(y, x, p)
            if res:
                report.fail("antisymmetry", (str(x), str(y)), format_element(res))
    for x in syms:
        for y in syms:
            for z in syms:
                checks += 1
                res = (
                    bracket_sym_elem(x, bracket(y, z, p), p)
                    + bracket_sym_elem(y, bracket(z, x, p), p)
                    + bracket_sym_elem(z, bracket(x, y, p), p)
                )
                if res:
                    report.fail(
                        "jacobi", (str(x), str(y), str(z)), format_element(res)
                    )
    report.checks = checks
    report.elapsed = perf_counter() - t0
    return report
