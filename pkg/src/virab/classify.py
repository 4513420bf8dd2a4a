"""Finite-window classification of free-on-L0 action data.

Given a window of candidate action data (or just the four generator seeds
W_{+-1} . 1 and L_{+-1} . 1), decide whether it extends to one of the two
module families and recover the canonical parameters, or produce an
:class:`InfeasibilityCertificate` naming a violated constraint with a
nonzero residue at explicit witness indices.  Everything is exact, so the
answer is a proof either way, within the window.

The constraint identifiers used by certificates and failure entries:

    W-commutation      [W_m, W_n] . 1 = 0 (forces a_m to lie in C[W0])
    lw-compat          [L_m, W_n] . 1 replayed on the data (kills a != 0)
    ll-compat          [L_m, L_n] . 1 replayed on the data
    w-linear-A/B       the scalar recursions for a_m = A_m*t + B_m
    scale-branch       rejection of the spurious root of b*k^2 - k - (b-1)
    degenerate-weight  a vanishing W-seed forces b = 1
    W-degenerate       with b = 1, one vanishing W-seed forces the other
    h-cocycle          the shifted-derivation identity for F_m = d_m/lambda^m
    leading-coeff      coefficient peeling: level-k residues must scale as n
    deg-g/deg-a        degree bounds (g affine in L0, a affine in W0)
    a-in-W0/b-scalar   shape preconditions for the displayed identities
    b-power            b_m must be lambda^m
"""

from __future__ import annotations

from dataclasses import dataclass, field
from time import perf_counter

from .polynomials import BiPoly, UniPoly, format_bipoly, format_unipoly
from .repmod import Family, GenericFamily, ModuleSpec, act_L, act_W, q_poly
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


@dataclass(frozen=True)
class CanonicalParams:
    """Normalized module parameters: trailing zero coefficients are trimmed
    (they never change any h_n)."""

    family: Family
    lam: Scalar
    alpha: Scalar
    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        coeffs = self.coeffs
        while coeffs and not coeffs[-1]:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "lambda": format_scalar(self.lam),
            "alpha": format_scalar(self.alpha),
            "coeffs": [format_scalar(c) for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, doc: dict) -> CanonicalParams:
        return cls(
            family=Family(doc["family"]),
            lam=parse_scalar(doc["lambda"]),
            alpha=parse_scalar(doc["alpha"]),
            coeffs=tuple(parse_scalar(c) for c in doc["coeffs"]),
        )


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """A violated constraint with a witness: the residue is a nonzero
    polynomial re-evaluable from the input data."""

    constraint: str
    indices: tuple[int, ...]
    residue: BiPoly

    def __post_init__(self):
        if self.residue.is_zero:
            raise ValueError("certificate residue must be nonzero")

    @property
    def residue_text(self) -> str:
        return format_bipoly(self.residue)

    def to_dict(self) -> dict:
        return {
            "infeasible": {
                "constraint": self.constraint,
                "witness": {
                    "indices": list(self.indices),
                    "residue": self.residue_text,
                },
            }
        }


@dataclass(frozen=True)
class CandidateFamily:
    """Window of claimed action data, as loose as the checks allow: a_m may
    depend on L0 here (check_W_commutation is what rules that out)."""

    a: Scalar
    b: Scalar
    window: int
    a_m: dict[int, BiPoly] = field(compare=False)
    g_m: dict[int, BiPoly] = field(compare=False)

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be at least 1")
        for m in range(-self.window, self.window + 1):
            if m not in self.a_m or m not in self.g_m:
                raise ValueError(f"missing data for index {m}")
        if self.a_m[0] != BiPoly.t_var():
            raise ValueError("a_0 must equal W0")
        if self.g_m[0] != BiPoly.s_var():
            raise ValueError("g_0 must equal L0")

    @classmethod
    def from_spec(cls, spec: ModuleSpec, window: int) -> CandidateFamily:
        one = BiPoly.one()
        a_m = {}
        g_m = {}
        for m in range(-window, window + 1):
            a_m[m] = act_W(spec, m, one)
            g_m[m] = act_L(spec, m, one)
        return cls(ZERO, spec.b, window, a_m, g_m)

    @classmethod
    def from_generic(cls, fam: GenericFamily) -> CandidateFamily:
        return cls(
            fam.a,
            fam.b,
            fam.window,
            {m: p.embed() for m, p in fam.a_m.items()},
            dict(fam.g_m),
        )


def _commutation_residue(
    fam_a: Scalar, m: int, n: int, am: BiPoly, an: BiPoly
) -> BiPoly:
    # [W_m, W_n] . 1 = a_n(L0 - a - m, W0) a_m - a_m(L0 - a - n, W0) a_n
    return an.shift_s(fam_a.add_int(m)) * am - am.shift_s(fam_a.add_int(n)) * an


def check_W_commutation(fam: CandidateFamily) -> Report:
    """[W_m, W_n] must act by zero; any L0 dependence inside a_m shows up
    here as a nonzero commutator residue."""
    t0 = perf_counter()
    report = Report(
        suite="check-W-commutation",
        params={
            "a": format_scalar(fam.a),
            "b": format_scalar(fam.b),
            "window": str(fam.window),
        },
    )
    checks = 0
    for m in range(-fam.window, fam.window + 1):
        for n in range(m + 1, fam.window + 1):
            checks += 1
            res = _commutation_residue(fam.a, m, n, fam.a_m[m], fam.a_m[n])
            if res:
                report.fail("W-commutation", (m, n), format_bipoly(res))
    report.checks = checks
    report.elapsed = perf_counter() - t0
    return report


def _twist_poly(b: Scalar, alpha: Scalar, n: int) -> UniPoly:
    shift = ZERO
    if b == MINUS_ONE:
        shift = alpha.mul_int(n)
    elif b == ONE and n != 0:
        shift = alpha
    return UniPoly({1: ONE, 0: -shift})


def check_constraints(fam: CandidateFamily) -> Report:
    """Evaluate the displayed window identities on the candidate data.

    Shape preconditions first (g_m affine in L0 with constant L0
    coefficient, a_m in C[W0] and affine); then the [L,W] and [L,L]
    replays, the scalar recursions for the a_m coefficients, and the
    cocycle identity for the normalized g_m tails.  Later passes are
    skipped when the shapes they presuppose are violated, so every
    reported failure is a sound statement about the data.
    """
    t0 = perf_counter()
    N = fam.window
    a, b = fam.a, fam.b
    report = Report(
        suite="check-constraints",
        params={
            "a": format_scalar(a),
            "b": format_scalar(b),
            "window": str(N),
        },
    )
    checks = 0
    window = range(-N, N + 1)

    shapes_ok = True
    a_uni: dict[int, UniPoly] = {}
    b_m: dict[int, Scalar] = {}
    d_m: dict[int, UniPoly] = {}
    for m in window:
        checks += 1
        gm = fam.g_m[m]
        excess = BiPoly(
            {(i, j): c for (i, j), c in gm.terms.items() if i > 1}
        )
        if excess:
            report.fail("deg-g", (m,), format_bipoly(excess))
            shapes_ok = False
            continue
        lead = gm.coeff_s_power(1)
        if lead.degree > 0:
            report.fail("b-scalar", (m,), format_unipoly(lead))
            shapes_ok = False
            continue
        b_m[m] = lead.coeff(0)
        d_m[m] = gm.coeff_s_power(0)
    for m in window:
        checks += 1
        am = fam.a_m[m]
        if am.deg_s > 0:
            sdep = BiPoly(
                {(i, j): c for (i, j), c in am.terms.items() if i > 0}
            )
            report.fail("a-in-W0", (m,), format_bipoly(sdep))
            shapes_ok = False
            continue
        a_uni[m] = am.to_unipoly_t()
    if not shapes_ok:
        report.checks = checks
        report.elapsed = perf_counter() - t0
        return report

    # [L_m, W_n] . 1: (a + n + b*m) a_{m+n} = a_n (g_m - g_m(L0-a-n)) + (a + b*m) a_n' a_m
    for m in window:
        gm = fam.g_m[m]
        for n in window:
            if abs(m + n) > N:
                continue
            checks += 1
            coeff = a.add_int(n) + b.mul_int(m)
            lhs = fam.a_m[m + n].scale(coeff)
            rhs = fam.a_m[n] * (gm - gm.shift_s(a.add_int(n)))
            rhs = rhs + (fam.a_m[n].partial_t() * fam.a_m[m]).scale(
                a + b.mul_int(m)
            )
            res = lhs - rhs
            if res:
                report.fail("lw-compat", (m, n), format_bipoly(res))

    # b_m must be the geometric sequence lambda^m
    lam = b_m[1]
    if not lam:
        report.fail("b-power", (1, -1), format_scalar(ONE - b_m[1] * b_m[-1]))
        report.checks = checks + 1
        report.elapsed = perf_counter() - t0
        return report
    for m in window:
        checks += 1
        res = b_m[m] - intpow(lam, m)
        if res:
            report.fail("b-power", (m,), format_scalar(res))

    # [L_m, L_n] . 1 with b_m constant:
    # (n-m)(b_{m+n} L0 + d_{m+n}) =
    #   (n-m) b_m b_n L0 + n b_m d_n - m b_n d_m - n b d_m' a_n + m b d_n' a_m
    s_var = BiPoly.s_var()
    for m in window:
        for n in window:
            if n <= m or abs(m + n) > N:
                continue
            checks += 1
            lhs = (
                s_var.scale(b_m[m + n]) + d_m[m + n].embed()
            ).scale(Scalar.from_int(n - m))
            rhs = s_var.scale((b_m[m] * b_m[n]).mul_int(n - m))
            rhs = rhs + (
                d_m[n].scale(b_m[m].mul_int(n))
                - d_m[m].scale(b_m[n].mul_int(m))
            ).embed()
            rhs = rhs - (d_m[m].deriv() * a_uni[n]).scale(b.mul_int(n)).embed()
            rhs = rhs + (d_m[n].deriv() * a_uni[m]).scale(b.mul_int(m)).embed()
            res = lhs - rhs
            if res:
                report.fail("ll-compat", (m, n), format_bipoly(res))

    # a_m = A_m t + B_m: degree bound, then the scalar recursions
    linear_ok = True
    for m in window:
        checks += 1
        if a_uni[m].degree > 1:
            tail = UniPoly({k: c for k, c in a_uni[m].terms.items() if k > 1})
            report.fail("deg-a", (m,), format_unipoly(tail))
            linear_ok = False
    if linear_ok:
        A = {m: a_uni[m].coeff(1) for m in window}
        B = {m: a_uni[m].coeff(0) for m in window}
        for m in window:
            for n in window:
                if abs(m + n) > N:
                    continue
                lam_m = intpow(lam, m)
                checks += 2
                res = (
                    (a.add_int(n) + b.mul_int(m)) * A[m + n]
                    - A[n].mul_int(n) * lam_m
                    - b.mul_int(m) * A[n] * A[m]
                )
                if res:
                    report.fail("w-linear-A", (m, n), format_scalar(res))
                res = (
                    (a.add_int(n) + b.mul_int(m)) * B[m + n]
                    - B[n].mul_int(n) * lam_m
                    - b.mul_int(m) * A[n] * B[m]
                )
                if res:
                    report.fail("w-linear-B", (m, n), format_scalar(res))

        # cocycle identity for F_m = lambda^(-m) d_m:
        # (n-m) F_{m+n} = n F_n - m F_m - n b F_m' w_n + m b F_n' w_m
        alpha = -(B[1] / lam)
        F = {m: d_m[m].scale(intpow(lam, -m)) for m in window}
        for m in window:
            for n in window:
                if n <= m or abs(m + n) > N:
                    continue
                checks += 1
                lhs = F[m + n].scale_int(n - m)
                rhs = F[n].scale_int(n) - F[m].scale_int(m)
                rhs = rhs - (F[m].deriv() * _twist_poly(b, alpha, n)).scale(
                    b.mul_int(n)
                )
                rhs = rhs + (F[n].deriv() * _twist_poly(b, alpha, m)).scale(
                    b.mul_int(m)
                )
                res = lhs - rhs
                if res:
                    report.fail("h-cocycle", (m, n), format_unipoly(res))

    report.checks = checks
    report.elapsed = perf_counter() - t0
    return report


def extract_h_coeffs(
    F: dict[int, UniPoly], alpha: Scalar, b: Scalar
) -> tuple[Scalar, ...] | InfeasibilityCertificate:
    """Peel a coefficient sequence out of normalized tails F_n.

    Works top degree down: the t^k coefficient of F_n must equal n times
    that of F_1 (the generating polynomials have leading coefficient n), so
    the level-k coefficient is read off F_1 and the full generating
    polynomial is subtracted from every F_n.  Any residue breaking the
    n-proportionality yields a leading-coeff certificate.
    """
    if 0 in F and F[0]:
        raise ValueError("F_0 must be zero")
    if 1 not in F:
        raise ValueError("F_1 is required")
    work = {n: p for n, p in F.items()}
    top = max((p.degree for p in work.values() if p), default=None)
    if top is None:
        return ()
    coeffs = [ZERO] * (int(top) + 1)
    for k in range(int(top), 0, -1):
        f1 = work[1].coeff(k)
        for n in sorted(work):
            actual = work[n].coeff(k)
            res = actual - f1.mul_int(n)
            if res:
                return InfeasibilityCertificate(
                    "leading-coeff", (n, k), UniPoly.monomial(k, res).embed()
                )
        coeffs[k] = f1
        if f1:
            work = {
                n: p - q_poly(n, k, alpha, b).scale(f1)
                for n, p in work.items()
            }
    f1 = work[1].coeff(0)
    for n in sorted(work):
        res = work[n] - UniPoly.const(f1.mul_int(n))
        if res:
            return InfeasibilityCertificate(
                "leading-coeff", (n, 0), res.embed()
            )
    coeffs[0] = f1
    return tuple(coeffs)


def _as_w_poly(p: BiPoly | UniPoly) -> UniPoly | None:
    if isinstance(p, UniPoly):
        return p
    if p.deg_s > 0:
        return None
    return p.to_unipoly_t()


def _propagate_seq(
    lam: Scalar,
    b: Scalar,
    window: int,
    x0: Scalar,
    x1: Scalar,
    xm1: Scalar,
) -> dict[int, Scalar]:
    """Extend {X_0, X_1, X_-1} to |m| <= window using the two recursion
    instances (n = 1 upward, n = -1 downward), switching sides whenever the
    primary instance's coefficient vanishes; by then the A-coefficients are
    known to be lambda^(+-1), so the alternate side is always solvable."""
    lam_inv = intpow(lam, -1)
    X = {0: x0, 1: x1, -1: xm1}
    for j in range(2, window + 1):
        c = ONE + b.mul_int(j - 1)
        if c:
            # (1 + b(j-1)) X_j = X_1 lam^(j-1) + b(j-1) A_1 X_{j-1}
            X[j] = (
                x1 * intpow(lam, j - 1) + b.mul_int(j - 1) * lam * X[j - 1]
            ) / c
        else:
            # (-1 + bj) X_{j-1} = -X_{-1} lam^j + bj A_{-1} X_j
            cc = b.mul_int(j) * lam_inv
            X[j] = ((b.mul_int(j) - ONE) * X[j - 1] + xm1 * intpow(lam, j)) / cc
    for j in range(-2, -window - 1, -1):
        c = b.mul_int(j + 1) - ONE
        if c:
            # (-1 + b(j+1)) X_j = -X_{-1} lam^(j+1) + b(j+1) A_{-1} X_{j+1}
            X[j] = (
                -xm1 * intpow(lam, j + 1)
                + b.mul_int(j + 1) * lam_inv * X[j + 1]
            ) / c
        else:
            # (1 + bj) X_{j+1} = X_1 lam^j + bj A_1 X_j
            cc = b.mul_int(j) * lam
            X[j] = ((ONE + b.mul_int(j)) * X[j + 1] - x1 * intpow(lam, j)) / cc
    return X


def _instance_certificate(
    b: Scalar,
    window: int,
    lam: Scalar,
    A: dict[int, Scalar],
    X: dict[int, Scalar],
    constraint: str,
) -> InfeasibilityCertificate | None:
    """Check every n = +-1 instance of the scalar recursion on the window."""
    for n in (1, -1):
        for m in range(-window, window + 1):
            if abs(m + n) > window:
                continue
            res = (
                (Scalar.from_int(n) + b.mul_int(m)) * X[m + n]
                - X[n].mul_int(n) * intpow(lam, m)
                - b.mul_int(m) * A[n] * X[m]
            )
            if res:
                return InfeasibilityCertificate(
                    constraint, (m, n), BiPoly.const(res)
                )
    return None


def solve_from_generators(
    b: Scalar,
    window: int,
    a_pos: BiPoly | UniPoly,
    a_neg: BiPoly | UniPoly,
    g_pos: BiPoly,
    g_neg: BiPoly,
    a: Scalar = ZERO,
) -> CanonicalParams | InfeasibilityCertificate:
    """Recover canonical module parameters from the four generator seeds
    (W_{+-1} . 1 and L_{+-1} . 1), or certify that no module has them.

    The stages mirror the structural facts the checks are built on: a must
    vanish; a_m must avoid L0; g_m must be affine in L0 with geometric
    leading coefficients lambda^m; the W-multipliers are affine with
    leading coefficients forced onto the k = 1 branch of
    b*k^2 - k - (b-1) = 0 (the other root is rejected with an explicit
    residue); the constant parts yield alpha; the normalized g-tails yield
    the coefficient sequence by peeling.
    """
    t_var = BiPoly.t_var()

    # a = 0 is forced by [L_0, W_n] . 1 replayed at n = 0 (or a seed index)
    if a:
        da = a_pos.partial_t() if isinstance(a_pos, BiPoly) else a_pos.deriv().embed()
        res = (da * t_var).scale(-a)
        if res:
            return InfeasibilityCertificate("lw-compat", (0, 1), res)
        return InfeasibilityCertificate(
            "lw-compat", (0, 0), t_var.scale(-a)
        )

    w_pos = _as_w_poly(a_pos)
    w_neg = _as_w_poly(a_neg)
    if w_pos is None or w_neg is None:
        ap = a_pos if isinstance(a_pos, BiPoly) else a_pos.embed()
        an = a_neg if isinstance(a_neg, BiPoly) else a_neg.embed()
        res = _commutation_residue(ZERO, 1, -1, ap, an)
        return InfeasibilityCertificate("W-commutation", (1, -1), res)

    # g seeds: affine in L0, constant leading coefficient, b_1 b_{-1} = 1
    for idx, g in ((1, g_pos), (-1, g_neg)):
        excess = BiPoly({(i, j): c for (i, j), c in g.terms.items() if i > 1})
        if excess:
            return InfeasibilityCertificate("deg-g", (idx,), excess)
        lead = g.coeff_s_power(1)
        if lead.degree > 0:
            return InfeasibilityCertificate(
                "b-scalar", (idx,), UniPoly(
                    {k: c for k, c in lead.terms.items() if k > 0}
                ).embed(),
            )
    lam = g_pos.coeff(1, 0)
    b_neg = g_neg.coeff(1, 0)
    if lam * b_neg != ONE:
        return InfeasibilityCertificate(
            "b-power", (1, -1), BiPoly.const(ONE - lam * b_neg)
        )
    lam_inv = b_neg

    # degenerate branch: vanishing W-seeds
    if not w_pos or not w_neg:
        if not (w_pos or w_neg):
            if b != ONE:
                return InfeasibilityCertificate(
                    "degenerate-weight", (-1, 1), t_var.scale(ONE - b)
                )
            d1 = g_pos.coeff_s_power(0).scale(lam_inv)
            dm1 = g_neg.coeff_s_power(0).scale(lam)
            coeffs = extract_h_coeffs(
                {-1: dm1, 0: UniPoly.zero(), 1: d1}, ZERO, ONE
            )
            if isinstance(coeffs, InfeasibilityCertificate):
                return coeffs
            return CanonicalParams(Family.THETA, lam, ZERO, coeffs)
        if b != ONE:
            if not w_pos:
                return InfeasibilityCertificate(
                    "degenerate-weight", (-1, 1), t_var.scale(ONE - b)
                )
            return InfeasibilityCertificate(
                "degenerate-weight", (1, -1), t_var.scale(b - ONE)
            )
        if not w_pos:
            return InfeasibilityCertificate(
                "W-degenerate", (-2, 1), (-w_neg).embed()
            )
        return InfeasibilityCertificate(
            "W-degenerate", (2, -1), w_pos.embed()
        )

    # W-multipliers must be affine: a_m = A_m t + B_m
    for idx, w in ((1, w_pos), (-1, w_neg)):
        if w.degree > 1:
            tail = UniPoly({k: c for k, c in w.terms.items() if k > 1})
            return InfeasibilityCertificate("deg-a", (idx,), tail.embed())
    A1, B1 = w_pos.coeff(1), w_pos.coeff(0)
    Am1, Bm1 = w_neg.coeff(1), w_neg.coeff(0)

    # vanishing leading coefficients collapse to the degenerate branch,
    # which contradicts the nonzero constant parts
    if not A1 or not Am1:
        if b != ONE:
            res = ONE - b if not A1 else b - ONE
            idx = (1, -1) if not A1 else (-1, 1)
            return InfeasibilityCertificate(
                "w-linear-A", idx, BiPoly.const(res)
            )
        if not A1 and Am1:
            return InfeasibilityCertificate(
                "w-linear-A", (1, -2), BiPoly.const(-Am1)
            )
        if not Am1 and A1:
            return InfeasibilityCertificate(
                "w-linear-A", (-1, 2), BiPoly.const(A1)
            )
        # both leading coefficients vanish: B_1 lambda^{-1} = 0 is forced
        return InfeasibilityCertificate(
            "w-linear-B", (1, -1), BiPoly.const(B1 * lam_inv)
        )

    # the two crossed instances pin A_1 A_{-1} against lambda
    res = (b - ONE) - Am1 * (b * A1 - lam)
    if res:
        return InfeasibilityCertificate("w-linear-A", (-1, 1), BiPoly.const(res))
    res = (ONE - b) - A1 * (lam_inv - b * Am1)
    if res:
        return InfeasibilityCertificate("w-linear-A", (1, -1), BiPoly.const(res))

    # both roots of b*k^2 - k - (b-1) = 0 reach here; only k = 1 survives
    k = A1 * lam_inv
    if k != ONE:
        if b == MINUS_ONE:
            res = A1 * lam + b * A1 * A1
            return InfeasibilityCertificate(
                "scale-branch", (1, 1), BiPoly.const(res)
            )
        A2 = (A1 * lam + b * A1 * A1) / (ONE + b)
        res = (b.mul_int(2) - ONE) * A1 + Am1 * lam * lam - b.mul_int(2) * Am1 * A2
        return InfeasibilityCertificate(
            "scale-branch", (-1, 2), BiPoly.const(res)
        )

    # window propagation and consistency of the scalar recursions
    A = _propagate_seq(lam, b, window, ONE, A1, Am1)
    cert = _instance_certificate(b, window, lam, A, A, "w-linear-A")
    if cert:
        return cert
    B = _propagate_seq(lam, b, window, ZERO, B1, Bm1)
    cert = _instance_certificate(b, window, lam, A, B, "w-linear-B")
    if cert:
        return cert

    alpha = -(B1 * lam_inv)

    # normalized g-tails carry the coefficient sequence
    d1 = g_pos.coeff_s_power(0).scale(lam_inv)
    dm1 = g_neg.coeff_s_power(0).scale(lam)
    coeffs = extract_h_coeffs({-1: dm1, 0: UniPoly.zero(), 1: d1}, alpha, b)
    if isinstance(coeffs, InfeasibilityCertificate):
        return coeffs
    return CanonicalParams(Family.PHI, lam, alpha, coeffs)


def solve_candidate(
    fam: CandidateFamily,
) -> CanonicalParams | InfeasibilityCertificate:
    """Solve from a candidate window's generator seeds."""
    return solve_from_generators(
        fam.b,
        fam.window,
        fam.a_m[1],
        fam.a_m[-1],
        fam.g_m[1],
        fam.g_m[-1],
        fam.a,
    )


def isom_decide(p: CanonicalParams, q: CanonicalParams, b: Scalar) -> bool:
    """Are the two parameter sets isomorphic as modules over the algebra at
    this b?  For b in {1, -1} every parameter is an invariant; otherwise
    alpha is not (it can be normalized away), so only lambda and the
    coefficient sequence decide."""
    if p.family is not q.family:
        raise ValueError("cannot compare parameters across families")
    if p.family is Family.THETA:
        return p.lam == q.lam and p.coeffs == q.coeffs
    if b == ONE or b == MINUS_ONE:
        return p.lam == q.lam and p.alpha == q.alpha and p.coeffs == q.coeffs
    return p.lam == q.lam and p.coeffs == q.coeffs
