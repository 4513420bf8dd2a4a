import pytest

from conftest import sc, sci
from virab.algebra import C, L, W
from virab.polynomials import BiPoly, UniPoly
from virab.repmod import (
    Family,
    GenericFamily,
    ModuleSpec,
    act_C,
    act_L,
    act_W,
    act_element,
    act_sym,
    apply_enveloping,
    generic_act_L,
    generic_act_W,
    h_of_n,
    q_poly,
    verify_module,
)
from virab.scalars import I, MINUS_ONE, ONE, ZERO


S = BiPoly.s_var()
T = BiPoly.t_var()


def test_q_poly_plain_cases():
    # away from b = +-1 there is no correction term
    assert q_poly(3, 2, sc(5), sc(0)) == UniPoly({2: sc(3)})
    assert q_poly(-2, 0, sc(5), sc(7)) == UniPoly({0: sc(-2)})


def test_q_poly_corrections():
    # b = 1: n t^k - n alpha dd(k, alpha)
    assert q_poly(3, 1, sc(2), sc(1)) == UniPoly({1: sc(3), 0: sc(-6)})
    # b = -1: n t^k - n (n-1) alpha dd(k, alpha)
    assert q_poly(3, 1, sc(2), sc(-1)) == UniPoly({1: sc(3), 0: sc(-12)})
    assert q_poly(0, 4, sc(2), sc(1)).is_zero
    assert q_poly(1, 2, sc(1), sc(-1)) == UniPoly({2: ONE})


def test_h_sequence_has_leading_n():
    spec = ModuleSpec.phi(b=sc(1), lam=sc(2), alpha=sc(1), coeffs=(ONE, ZERO, sc(2)))
    for n in range(-4, 5):
        h = spec.h(n)
        expected = q_poly(n, 0, sc(1), sc(1)) + q_poly(n, 2, sc(1), sc(1)).scale(sc(2))
        assert h == expected
    assert spec.h(0).is_zero


def test_h_of_n_free_function():
    from virab.repmod import HSeq

    seq = HSeq(b=sc(5), alpha=sc(0), coeffs=(sc(1), sc(-2)))
    assert h_of_n(seq, 3) == UniPoly({0: sc(3), 1: sc(-6)})
    assert h_of_n(seq, 0).is_zero


def test_spec_validation():
    with pytest.raises(ValueError):
        ModuleSpec.phi(b=sc(0), lam=ZERO, alpha=ZERO, coeffs=())
    with pytest.raises(ValueError):
        ModuleSpec(Family.THETA, b=sc(0), lam=sc(2), coeffs=())
    with pytest.raises(ValueError):
        ModuleSpec(Family.THETA, b=sc(1), lam=sc(2), alpha=ONE, coeffs=())


def test_act_L_known_values():
    # b = 0, lambda = 2, alpha = 0, h = (): L_1 . s = 2 s (s - 1)
    spec = ModuleSpec.phi(b=sc(0), lam=sc(2), alpha=ZERO, coeffs=())
    assert act_L(spec, 1, S) == BiPoly({(2, 0): sc(2), (1, 0): sc(-2)})
    # b = 1, lambda = 1, alpha = 1, h = (): L_1 . t = s t + t - 1
    spec = ModuleSpec.phi(b=sc(1), lam=sc(1), alpha=sc(1), coeffs=())
    assert act_L(spec, 1, T) == BiPoly({(1, 1): ONE, (0, 1): ONE, (0, 0): MINUS_ONE})


def test_act_W_twists():
    # b = -1: w_m = t - m alpha
    spec = ModuleSpec.phi(b=MINUS_ONE, lam=sc(1), alpha=sc(1), coeffs=())
    assert act_W(spec, 2, BiPoly.one()) == BiPoly({(0, 1): ONE, (0, 0): sc(-2)})
    # b = 1: w_m = t - alpha for m != 0, w_0 = t
    spec = ModuleSpec.phi(b=ONE, lam=sc(1), alpha=sc(3), coeffs=())
    assert act_W(spec, 2, BiPoly.one()) == BiPoly({(0, 1): ONE, (0, 0): sc(-3)})
    assert act_W(spec, 0, BiPoly.one()) == T
    # other b: w_m = t always
    spec = ModuleSpec.phi(b=sc(5), lam=sc(1), alpha=ZERO, coeffs=())
    assert act_W(spec, 7, BiPoly.one()) == T


def test_act_W_shifts_s():
    spec = ModuleSpec.phi(b=sc(0), lam=sc(2), alpha=ZERO, coeffs=())
    # W_1 . s = 2 (s - 1) t
    assert act_W(spec, 1, S) == BiPoly({(1, 1): sc(2), (0, 1): sc(-2)})


def test_act_centrals_vanish():
    spec = ModuleSpec.phi(b=sc(0), lam=sc(2), alpha=ZERO, coeffs=(ONE,))
    f = S * T + BiPoly.one()
    for idx in (1, 2, 3):
        assert act_C(spec, idx, f).is_zero
    assert act_sym(spec, C(2), f).is_zero
    with pytest.raises(ValueError):
        act_C(spec, 9, f)


def test_act_centrals_rejected_without_extension():
    spec = ModuleSpec.phi(b=sc(0), lam=sc(2), alpha=ZERO, coeffs=(), extension=False)
    with pytest.raises(ValueError):
        act_C(spec, 1, BiPoly.one())


def test_theta_action():
    spec = ModuleSpec.theta(lam=sc(2), coeffs=(ONE, ONE))
    # W_m kills everything except m = 0, which multiplies by t
    assert act_W(spec, 1, S).is_zero
    assert act_W(spec, 0, S) == S * T
    # L_m . f = lambda^m (s + r_m) f(s - m)
    got = act_L(spec, 1, BiPoly.one())
    r1 = spec.h(1)
    assert got == (S + r1.embed()).scale(sc(2))


def test_act_element_linearity():
    spec = ModuleSpec.phi(b=sc(2), lam=sc(3), alpha=ZERO, coeffs=(ONE,))
    f = S + T
    e = {L(1): sc(2), W(-1): MINUS_ONE}
    from virab.algebra import AlgElement

    got = act_element(spec, AlgElement(e), f)
    want = act_L(spec, 1, f).scale(sc(2)) - act_W(spec, -1, f)
    assert got == want


def test_apply_enveloping_is_freeness_on_generator():
    spec = ModuleSpec.phi(b=sc(1), lam=sc(2), alpha=sc(1), coeffs=(ZERO, ONE))
    u = BiPoly({(2, 1): sc(3), (0, 0): sc(-1), (1, 0): I})
    assert apply_enveloping(spec, u, BiPoly.one()) == u


def test_generic_family_matches_module_action():
    spec = ModuleSpec.phi(b=sc("1/2"), lam=sci(0, 1), alpha=sc(2), coeffs=(ONE,))
    fam = GenericFamily.from_spec(spec, window=3)
    for m in range(-3, 4):
        for f in (BiPoly.one(), S, T, S * T, S * S):
            assert generic_act_L(fam, m, f) == act_L(spec, m, f)
            assert generic_act_W(fam, m, f) == act_W(spec, m, f)


def test_generic_family_validation():
    spec = ModuleSpec.phi(b=sc(0), lam=sc(2), alpha=ZERO, coeffs=())
    fam = GenericFamily.from_spec(spec, window=2)
    with pytest.raises(ValueError):
        generic_act_L(fam, 3, S)  # outside the stored window


def test_verify_module_passes():
    spec = ModuleSpec.phi(b=sc(2), lam=sc(-1), alpha=sc(1), coeffs=(ONE, MINUS_ONE))
    report = verify_module(spec, window=2, degree=2)
    assert report.passed
    assert report.checks > 0


def test_verify_module_catches_wrong_action():
    spec = ModuleSpec.phi(b=sc(0), lam=sc(2), alpha=ZERO, coeffs=())
    fam = GenericFamily.from_spec(spec, window=2)
    bad = dict(fam.g_m)
    bad[1] = bad[1] + BiPoly.one()  # corrupt one structure polynomial
    broken = GenericFamily(a=fam.a, b=fam.b, window=fam.window, a_m=fam.a_m, g_m=bad)
    report = verify_module(broken, window=2, degree=2)
    assert not report.passed
    assert report.failures
    first = report.failures[0]
    assert first.constraint == "module-axiom"


def test_spec_serialization_round_trip():
    spec = ModuleSpec.phi(b=sc("1/2"), lam=sci(2, -1), alpha=sc(3), coeffs=(ONE, ZERO))
    doc = spec.to_dict()
    again = ModuleSpec.from_dict(doc)
    assert again.to_dict() == doc
    theta = ModuleSpec.theta(lam=sc(-2), coeffs=(sc(5),))
    assert ModuleSpec.from_dict(theta.to_dict()).to_dict() == theta.to_dict()


def test_spec_from_dict_validation():
    base = ModuleSpec.phi(b=sc(0), lam=sc(2), alpha=ZERO, coeffs=()).to_dict()
    for corrupt in (
        {**base, "a": "1"},
        {**base, "family": "psi"},
        {**base, "lambda": "0"},
        {**base, "extension": "yes"},
        {k: v for k, v in base.items() if k != "coeffs"},
        {**base, "extra": 1},
    ):
        with pytest.raises(ValueError):
            ModuleSpec.from_dict(corrupt)
