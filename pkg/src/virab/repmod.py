"""Rank-one free-on-L0 modules over Vir(a,b) on the polynomial space C[s, t].

Two families act on BiPoly values (s tracks the L0 weight, t the W0 weight):

* ``phi``: parameters (lambda != 0, alpha, h) with h a finite coefficient
  sequence.  Writing w_m(t) for the twist factor

      w_m = t - [b == -1] * m * alpha - [b == 1] * (1 - [m == 0]) * alpha,

  the action is

      L_m . f = lambda^m * (s + h_m(t)) * f(s - m, t)
                + b * m * lambda^m * w_m(t) * d/dt f(s - m, t)
      W_m . f = lambda^m * w_m(t) * f(s - m, t)
      C_i . f = 0,

  where h_m = sum_k h[k] * q(m, k) and q is the generating family from
  :func:`q_poly`.

* ``theta``: only over (a, b) = (0, 1); parameters (lambda != 0, r):

      L_m . f = lambda^m * (s + r_m(t)) * f(s - m, t)
      W_m . f = [m == 0] * t * f
      C_i . f = 0,

  with r_m = sum_k r[k] * m * t^k (the alpha = 0 coefficient space).

Both are W(a,b)-modules too: drop the central symbols via extension=False.
:func:`verify_module` replays every bracket relation against the action on
a monomial window, exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from time import perf_counter

from .algebra import (
    AlgebraParams,
    AlgElement,
    BasisSymbol,
    Case,
    bracket,
    classify_case,
)
from .polynomials import BiPoly, UniPoly, divided_difference, format_bipoly
from .report import Report
from .scalars import (
    MINUS_ONE,
    ONE,
    ZERO,
    Scalar,
    format_scalar,
    intpow,
    parse_scalar,
)


class Family(str, Enum):
    PHI = "phi"
    THETA = "theta"


def q_poly(n: int, k: int, alpha: Scalar, b: Scalar) -> UniPoly:
    """The degree-k generating polynomial for the index-n coefficient h_n.

    q(n, k) = n*t^k, corrected by a divided-difference multiple of alpha
    when b is -1 (factor n*(n-1)) or +1 (factor n).  Its leading t^k
    coefficient is always n, which is what makes coefficient extraction
    triangular.
    """
    if k < 0:
        raise ValueError("negative degree")
    out = UniPoly.monomial(k, Scalar.from_int(n)) if n else UniPoly.zero()
    if alpha and k:
        if b == MINUS_ONE:
            factor = n * (n - 1)
        elif b == ONE:
            factor = n
        else:
            factor = 0
        if factor:
            out = out - divided_difference(k, alpha).scale(
                alpha.mul_int(factor)
            )
    return out


@dataclass(frozen=True)
class HSeq:
    """A finite coefficient sequence in the (b, alpha) sequence space."""

    b: Scalar
    alpha: Scalar
    coeffs: tuple[Scalar, ...] = ()


def h_of_n(seq: HSeq, n: int) -> UniPoly:
    """h_n = sum_k seq.coeffs[k] * q(n, k); always zero at n = 0."""
    out = UniPoly.zero()
    for k, c in enumerate(seq.coeffs):
        if c:
            out = out + q_poly(n, k, seq.alpha, seq.b).scale(c)
    return out


class ModuleSpec:
    """Full parameter set for one module, with cached per-index pieces.

    Treat instances as immutable; the caches only memoize pure functions
    of the parameters.
    """

    __slots__ = ("family", "algebra", "lam", "alpha", "seq",
                 "_h", "_wmul", "_lmul", "_lpow")

    def __init__(
        self,
        family: Family,
        b: Scalar,
        lam: Scalar,
        alpha: Scalar = ZERO,
        coeffs: tuple[Scalar, ...] = (),
        extension: bool = True,
    ):
        if not lam:
            raise ValueError("lambda must be nonzero")
        if family is Family.THETA:
            if b != ONE:
                raise ValueError("theta modules exist only over (a, b) = (0, 1)")
            if alpha:
                raise ValueError("theta modules have no alpha parameter")
            seq = HSeq(ONE, ZERO, tuple(coeffs))
        else:
            seq = HSeq(b, alpha, tuple(coeffs))
        self.family = family
        self.algebra = classify_case(ZERO, b, extension)
        self.lam = lam
        self.alpha = alpha
        self.seq = seq
        self._h: dict[int, UniPoly] = {}
        self._wmul: dict[int, BiPoly] = {}
        self._lmul: dict[int, BiPoly] = {}
        self._lpow: dict[int, Scalar] = {0: ONE, 1: lam}

    @property
    def b(self) -> Scalar:
        return self.algebra.b

    @property
    def extension(self) -> bool:
        return self.algebra.case is not Case.W_ONLY

    @classmethod
    def phi(cls, b, lam, alpha=ZERO, coeffs=(), extension=True) -> ModuleSpec:
        return cls(Family.PHI, b, lam, alpha, tuple(coeffs), extension)

    @classmethod
    def theta(cls, lam, coeffs=(), extension=True) -> ModuleSpec:
        return cls(Family.THETA, ONE, lam, ZERO, tuple(coeffs), extension)

    def h(self, m: int) -> UniPoly:
        out = self._h.get(m)
        if out is None:
            out = h_of_n(self.seq, m)
            self._h[m] = out
        return out

    def lam_pow(self, m: int) -> Scalar:
        out = self._lpow.get(m)
        if out is None:
            out = intpow(self.lam, m)
            self._lpow[m] = out
        return out

    def w_mult(self, m: int) -> BiPoly:
        """The twist factor w_m(t), embedded in (s, t)."""
        out = self._wmul.get(m)
        if out is None:
            b = self.seq.b
            shift = ZERO
            if b == MINUS_ONE:
                shift = self.alpha.mul_int(m)
            elif b == ONE and m != 0:
                shift = self.alpha
            out = BiPoly({(0, 1): ONE, (0, 0): -shift})
            self._wmul[m] = out
        return out

    def l_mult(self, m: int) -> BiPoly:
        """The multiplier s + h_m(t), embedded in (s, t)."""
        out = self._lmul.get(m)
        if out is None:
            out = BiPoly.s_var() + self.h(m).embed()
            self._lmul[m] = out
        return out

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "a": "0",
            "b": format_scalar(self.b),
            "lambda": format_scalar(self.lam),
            "alpha": format_scalar(self.alpha),
            "coeffs": [format_scalar(c) for c in self.seq.coeffs],
            "extension": self.extension,
        }

    @classmethod
    def from_dict(cls, doc: dict) -> ModuleSpec:
        required = {"family", "a", "b", "lambda", "alpha", "coeffs", "extension"}
        missing = required - doc.keys()
        if missing:
            raise ValueError(f"missing spec fields: {sorted(missing)}")
        unknown = doc.keys() - required
        if unknown:
            raise ValueError(f"unknown spec fields: {sorted(unknown)}")
        family = Family(doc["family"])
        a = _scalar_field(doc, "a")
        if a:
            raise ValueError("modules of this shape require a = 0")
        b = _scalar_field(doc, "b")
        lam = _scalar_field(doc, "lambda")
        alpha = _scalar_field(doc, "alpha")
        coeffs = tuple(
            parse_scalar(c) if isinstance(c, str) else Scalar(c)
            for c in doc["coeffs"]
        )
        if not isinstance(doc["extension"], bool):
            raise ValueError("extension must be a boolean")
        return cls(family, b, lam, alpha, coeffs, doc["extension"])


def _scalar_field(doc: dict, key: str) -> Scalar:
    v = doc[key]
    if isinstance(v, str):
        return parse_scalar(v)
    if isinstance(v, int):
        return Scalar.from_int(v)
    raise ValueError(f"field {key!r} must be a scalar string")


def act_L(spec: ModuleSpec, m: int, f: BiPoly) -> BiPoly:
    shifted = f.shift_s(Scalar.from_int(m))
    out = spec.l_mult(m) * shifted
    if spec.family is Family.PHI:
        bm = spec.b.mul_int(m)
        if bm:
            out = out + (spec.w_mult(m) * shifted.partial_t()).scale(bm)
    return out.scale(spec.lam_pow(m))


def act_W(spec: ModuleSpec, m: int, f: BiPoly) -> BiPoly:
    if spec.family is Family.THETA:
        if m != 0:
            return BiPoly.zero()
        return BiPoly.t_var() * f
    shifted = f.shift_s(Scalar.from_int(m))
    return (spec.w_mult(m) * shifted).scale(spec.lam_pow(m))


def act_C(spec: ModuleSpec, i: int, f: BiPoly) -> BiPoly:
    if i not in spec.algebra.central_indices:
        raise ValueError(
            f"central index {i} is not available in case {spec.algebra.case.value}"
        )
    return BiPoly.zero()


def act_sym(spec: ModuleSpec, sym: BasisSymbol, f: BiPoly) -> BiPoly:
    if sym.kind == "L":
        return act_L(spec, sym.index, f)
    if sym.kind == "W":
        return act_W(spec, sym.index, f)
    if sym.kind == "C":
        return act_C(spec, sym.index, f)
    raise ValueError(f"unknown symbol kind {sym.kind!r}")


def act_element(spec: ModuleSpec, e: AlgElement, f: BiPoly) -> BiPoly:
    out = BiPoly.zero()
    for sym, c in e.terms.items():
        out = out + act_sym(spec, sym, f).scale(c)
    return out


def apply_enveloping(spec: ModuleSpec, u: BiPoly, f: BiPoly) -> BiPoly:
    """Act by u(L0, W0): each monomial s^i t^j becomes L0^i W0^j (they
    commute here since a = 0)."""
    out = BiPoly.zero()
    for (i, j), c in u.terms.items():
        g = f
        for _ in range(j):
            g = act_W(spec, 0, g)
        for _ in range(i):
            g = act_L(spec, 0, g)
        out = out + g.scale(c)
    return out


@dataclass(frozen=True)
class GenericFamily:
    """Window of action data over W(a,b): per index m, the W-multiplier
    a_m (a polynomial in W0 alone) and the L-multiplier g_m (in L0, W0).

    The actions it induces on u(L0, W0) are

        L_m . u = u(L0 - m, W0) * g_m + (a + b*m) * d/dW0 u(L0 - m, W0) * a_m
        W_m . u = u(L0 - a - m, W0) * a_m.
    """

    a: Scalar
    b: Scalar
    window: int
    a_m: dict[int, UniPoly] = field(compare=False)
    g_m: dict[int, BiPoly] = field(compare=False)

    def __post_init__(self):
        for m in range(-self.window, self.window + 1):
            if m not in self.a_m or m not in self.g_m:
                raise ValueError(f"missing data for index {m}")
        if self.a_m[0] != UniPoly.monomial(1):
            raise ValueError("a_0 must equal W0")
        if self.g_m[0] != BiPoly.s_var():
            raise ValueError("g_0 must equal L0")

    @classmethod
    def from_spec(cls, spec: ModuleSpec, window: int) -> GenericFamily:
        """The canonical data realized by a module: a_m and g_m are just
        W_m . 1 and L_m . 1."""
        one = BiPoly.one()
        a_m = {}
        g_m = {}
        for m in range(-window, window + 1):
            a_m[m] = act_W(spec, m, one).to_unipoly_t()
            g_m[m] = act_L(spec, m, one)
        return cls(ZERO, spec.b, window, a_m, g_m)


def _require_window(fam: GenericFamily, m: int) -> None:
    if abs(m) > fam.window:
        raise ValueError(f"index {m} outside family window {fam.window}")


def generic_act_L(fam: GenericFamily, m: int, u: BiPoly) -> BiPoly:
    _require_window(fam, m)
    shifted = u.shift_s(Scalar.from_int(m))
    out = shifted * fam.g_m[m]
    c = fam.a + fam.b.mul_int(m)
    if c:
        out = out + (shifted.partial_t() * fam.a_m[m].embed()).scale(c)
    return out


def generic_act_W(fam: GenericFamily, m: int, u: BiPoly) -> BiPoly:
    _require_window(fam, m)
    return u.shift_s(fam.a.add_int(m)) * fam.a_m[m].embed()


def _monomial_window(degree: int) -> list[BiPoly]:
    out = []
    for d in range(degree + 1):
        for i in range(d + 1):
            out.append(BiPoly.monomial(i, d - i))
    return out


def verify_module(
    target: ModuleSpec | GenericFamily, window: int = 4, degree: int = 4
) -> Report:
    """Replay [x, y] . f = x . (y . f) - y . (x . f) for every ordered pair
    of basis symbols with indices in [-window, window] (central symbols
    included when available) and every monomial f with total degree at most
    ``degree``.  Exact equality; failures carry the witness triple."""
    if isinstance(target, GenericFamily):
        return _verify_generic(target, window, degree)
    return _verify_spec(target, window, degree)


def _verify_spec(spec: ModuleSpec, window: int, degree: int) -> Report:
    t0 = perf_counter()
    syms = [BasisSymbol("L", n) for n in range(-window, window + 1)]
    syms += [BasisSymbol("W", n) for n in range(-window, window + 1)]
    syms += [BasisSymbol("C", i) for i in spec.algebra.central_indices]
    monos = _monomial_window(degree)

    img_cache: dict[tuple[BasisSymbol, int], BiPoly] = {}

    def img(sym: BasisSymbol, fi: int) -> BiPoly:
        key = (sym, fi)
        out = img_cache.get(key)
        if out is None:
            out = act_sym(spec, sym, monos[fi])
            img_cache[key] = out
        return out

    act2: dict[tuple[BasisSymbol, BasisSymbol, int], BiPoly] = {}

    def img2(x: BasisSymbol, y: BasisSymbol, fi: int) -> BiPoly:
        key = (x, y, fi)
        out = act2.get(key)
        if out is None:
            out = act_sym(spec, x, img(y, fi))
            act2[key] = out
        return out

    params = {k: str(v) for k, v in spec.to_dict().items()}
    params.update(window=str(window), degree=str(degree))
    report = Report(suite="verify-module", params=params)
    checks = 0
    nf = len(monos)
    for x in syms:
        for y in syms:
            br = bracket(x, y, spec.algebra)
            for fi in range(nf):
                checks += 1
                res = img2(x, y, fi) - img2(y, x, fi)
                for sym, c in br.terms.items():
                    res = res - img(sym, fi).scale(c)
                if res:
                    report.fail(
                        "module-axiom",
                        (str(x), str(y), format_bipoly(monos[fi])),
                        format_bipoly(res),
                    )
    report.checks = checks
    report.elapsed = perf_counter() - t0
    return report


def _verify_generic(fam: GenericFamily, window: int, degree: int) -> Report:
    if window > fam.window:
        raise ValueError("sweep window exceeds family window")
    t0 = perf_counter()
    p = classify_case(fam.a, fam.b, want_extension=False)
    syms = [BasisSymbol("L", n) for n in range(-window, window + 1)]
    syms += [BasisSymbol("W", n) for n in range(-window, window + 1)]
    monos = _monomial_window(degree)

    def act(sym: BasisSymbol, u: BiPoly) -> BiPoly:
        if sym.kind == "L":
            return generic_act_L(fam, sym.index, u)
        return generic_act_W(fam, sym.index, u)

    report = Report(
        suite="verify-module",
        params={
            "target": "generic-family",
            "a": format_scalar(fam.a),
            "b": format_scalar(fam.b),
            "family_window": str(fam.window),
            "window": str(window),
            "degree": str(degree),
        },
    )
    checks = 0
    for x in syms:
        for y in syms:
            if abs(x.index + y.index) > window:
                continue  # bracket falls outside the data window
            br = bracket(x, y, p)
            for f in monos:
                checks += 1
                res = act(x, act(y, f)) - act(y, act(x, f))
                for sym, c in br.terms.items():
                    res = res - act(sym, f).scale(c)
                if res:
                    report.fail(
                        "module-axiom",
                        (str(x), str(y), format_bipoly(f)),
                        format_bipoly(res),
                    )
    report.checks = checks
    report.elapsed = perf_counter() - t0
    return report
