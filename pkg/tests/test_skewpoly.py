import itertools
import random

import pytest

from wedderburn import (
    BezoutChainError,
    DegenerateTraceError,
    FiniteField,
    SkewPoly,
    bezout_eval,
    centralizer_basis,
    evaluate,
    llcm_linear,
    llcm_set,
    miura_check,
    norm_N,
    operator_apply,
    parse_poly,
    pindep_test,
    product_formula,
    pseudo_linear_apply,
    right_divmod,
    symmetric_functions,
    viete_check,
)
from wedderburn.skewpoly import miura_exponents


def lin(R, a):
    return SkewPoly.linear(R, a)


def monic_polys(R, deg):
    for coeffs in itertools.product(R.elements(), repeat=deg):
        yield SkewPoly(R, list(coeffs) + [R.one])


def rand_poly(R, rng, maxdeg=4):
    return SkewPoly(R, [R.random(rng) for _ in range(rng.randint(0, maxdeg + 1))])


# --- arithmetic -------------------------------------------------------------

def test_smul_examples(f4, qx_ddx):
    assert lin(f4, 1) * lin(f4, 1) == parse_poly(f4, "t^2 + 1")
    x = qx_ddx("x")
    t = SkewPoly.t(qx_ddx)
    assert t * x == SkewPoly(qx_ddx, [1, x])
    f = parse_poly(f4, "t^2 + (w)*t + 1")
    assert f * 1 == f and 1 * f == f


def test_zero_polynomial_degree(f4):
    zero = SkewPoly(f4)
    assert zero.degree < 0 and zero.degree < -10 ** 9
    assert not zero.coeffs
    assert SkewPoly(f4, [1, 0, 0]).coeffs == (f4.one,)


def test_multiplication_is_associative(f8_sd, rng):
    for _ in range(100):
        f, g, k = (rand_poly(f8_sd, rng, 3) for _ in range(3))
        assert (f * g) * k == f * (g * k)
        assert f * (g + k) == f * g + f * k


def test_degree_is_additive_over_division_rings(h_inner, rng):
    for _ in range(50):
        f, g = rand_poly(h_inner, rng, 3), rand_poly(h_inner, rng, 3)
        if f and g:
            assert (f * g).degree == f.degree + g.degree


def test_right_divmod_examples(f4):
    f = parse_poly(f4, "t^2 + 1")
    q, r = right_divmod(f, lin(f4, "w"))
    assert not r and q * lin(f4, "w") == f
    assert right_divmod(f, f) == (SkewPoly(f4, [1]), SkewPoly(f4))
    g = parse_poly(f4, "t^3")
    assert right_divmod(f, g) == (SkewPoly(f4), f)
    with pytest.raises(ZeroDivisionError):
        right_divmod(f, SkewPoly(f4))


def test_right_divmod_identity(f8_sd, h_inner, qx_ddx, rng):
    for R in (f8_sd, h_inner, qx_ddx):
        for _ in range(60):
            f, g = rand_poly(R, rng), rand_poly(R, rng, 3)
            if not g:
                continue
            q, r = right_divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree


def test_norm_examples(f4, h, rng):
    w = f4("w")
    assert norm_N(w, 2) == f4.one
    assert norm_N(w, 0) == f4.one
    for _ in range(20):
        a = h.random(rng)
        assert all(norm_N(a, i) == a ** i for i in range(5))


# --- evaluation ---------------------------------------------------------------

def test_eval_examples(f4, h):
    assert not evaluate(parse_poly(f4, "t^2 + 1"), f4("w"))
    assert not evaluate(parse_poly(h, "t^2 + 1"), h("i"))
    assert evaluate(SkewPoly(f4, [f4("w")]), f4.one) == f4("w")


@pytest.mark.parametrize("ctx", ["f8_sd", "h_inner", "qx_ddx", "f4"])
def test_eval_is_remainder(ctx, request, rng):
    R = request.getfixturevalue(ctx)
    for _ in range(500 if R.is_finite else 150):
        f, a = rand_poly(R, rng), R.random(rng)
        r = right_divmod(f, lin(R, a))[1]
        assert evaluate(f, a) == (r[0] if r else R.zero)


@pytest.mark.parametrize("ctx", ["f8_sd", "h_inner", "qx_ddx"])
def test_product_formula(ctx, request, rng):
    R = request.getfixturevalue(ctx)
    for _ in range(200):
        f, g, a = rand_poly(R, rng, 3), rand_poly(R, rng, 3), R.random(rng)
        assert product_formula(f, g, a) == evaluate(f * g, a)


def test_product_formula_branches(f4):
    g = parse_poly(f4, "t^2 + 1")
    f = parse_poly(f4, "t + (w)")
    assert not product_formula(f, g, f4.one)
    a = f4("w")
    g2 = lin(f4, 0)
    assert product_formula(SkewPoly(f4, [1]), g2, a) == evaluate(g2, a)


# --- llcm -------------------------------------------------------------------

def brute_llcm_degree(R, points, maxdeg):
    for d in range(1, maxdeg + 1):
        for f in monic_polys(R, d):
            if all(not evaluate(f, x) for x in points):
                return d, f
    return None


def test_llcm_one_omega(f4):
    trace = llcm_set([f4.one, f4("w")])
    assert trace.polynomial == parse_poly(f4, "t^2 + 1")
    assert trace.exponents == [f4.one, f4.one]
    assert trace.values[1] == f4("w + 1")
    # every monic quadratic killing 1 and w
    hits = [f for f in monic_polys(f4, 2) if not evaluate(f, f4.one) and not evaluate(f, f4("w"))]
    assert hits == [trace.polynomial]


def test_llcm_trivial_cases(f4):
    a = f4("w")
    assert llcm_set([a]).polynomial == lin(f4, a)
    tr = llcm_set([a, a])
    assert tr.polynomial == lin(f4, a) and tr.degenerate == [False, True]
    assert not tr.is_independent


def test_llcm_linear(h, f4):
    assert llcm_linear(lin(h, "i"), h("j")) == parse_poly(h, "t^2 + 1")
    f = parse_poly(f4, "t^2 + 1")
    assert llcm_linear(f, f4.one) == f
    with pytest.raises(ValueError):
        llcm_linear(SkewPoly(h, [1, 2]), h("i"))


def test_two_point_llcm_symmetric_route(h, rng):
    for _ in range(30):
        x1, x2 = h.random(rng), h.random(rng)
        if x1 == x2:
            continue
        lhs = llcm_linear(lin(h, x1), x2)
        assert lhs == lin(h, x2.conj(x2 - x1)) * lin(h, x1)
        assert lhs == lin(h, x1.conj(x1 - x2)) * lin(h, x2)


def test_llcm_minimality_f4_f8(f4, f8):
    for R in (f4, f8):
        els = R.elements()
        for size in (1, 2, 3):
            for pts in itertools.combinations(els, size):
                tr = llcm_set(list(pts))
                p = tr.polynomial
                for x in pts:
                    assert not right_divmod(p, lin(R, x))[1]
                if R is f4 or size < 3:
                    deg, best = brute_llcm_degree(R, pts, p.degree)
                    assert deg == p.degree and best == p


def test_llcm_order_independence(f8_sd):
    els = f8_sd.elements()
    for pts in itertools.combinations(els, 3):
        p = llcm_set(list(pts)).polynomial
        for perm in itertools.permutations(pts):
            assert llcm_set(list(perm)).polynomial == p


# --- symmetric functions ------------------------------------------------------

def test_lambda_two_points(f8_sd, h_inner, rng):
    for R in (f8_sd, h_inner):
        for _ in range(40):
            x1, x2 = R.random(rng), R.random(rng)
            if x1 == x2:
                continue
            tr = llcm_set([x1, x2])
            if not tr.is_independent:
                continue
            lam = symmetric_functions(tr)
            y = x1.conj(x1 - x2)
            assert lam[2][1] == y + x2.S()
            assert lam[2][2] == y * x2 - x2.D()


def test_lambda_top_is_product_classically(h, rng):
    for _ in range(20):
        pts = [h.random(rng) for _ in range(3)]
        tr = llcm_set(pts)
        if not tr.is_independent:
            continue
        lam = symmetric_functions(tr)
        ys = tr.ys()
        assert lam[3][3] == ys[2] * ys[1] * ys[0]
        assert all(row[0] == h.one for row in lam.table)


def test_symmetric_functions_reject_degenerate(f4):
    with pytest.raises(DegenerateTraceError):
        symmetric_functions(llcm_set([f4.one, f4.one]))


def test_viete(f8_sd, h_inner, rng):
    els = f8_sd.elements()
    for pts in itertools.combinations(els, 3):
        tr = llcm_set(list(pts))
        if tr.is_independent:
            assert viete_check(tr)
    tr = llcm_set([h_inner("i")])
    assert viete_check(tr)
    assert symmetric_functions(tr).poly(1) == lin(h_inner, tr.exponents[0])


# --- Bezout and Miura ---------------------------------------------------------

def test_bezout_one_point(h, rng):
    for _ in range(10):
        x, z = h.random(rng), h.random(rng)
        val, factors = bezout_eval(llcm_set([x]), z)
        assert factors == [z - x] and val == z - x


def test_bezout_f16_fixture():
    F = FiniteField.builtin("f16").with_twist(S=("frobenius", 1))
    omega = F("w") ** 5
    assert omega ** 3 == F.one and omega != F.one
    tr = llcm_set([F.one, omega])
    assert tr.polynomial == parse_poly(F, "t^2 + 1")
    checked = 0
    for z in F.elements():
        if z ** 3 == F.one or not z:
            continue
        val, factors = bezout_eval(tr, z)
        assert val == evaluate(tr.polynomial, z) == z ** 3 + 1
        assert val == factors[1] * factors[0]
        checked += 1
    assert checked == 12


def test_bezout_reports_broken_step(f4):
    tr = llcm_set([f4.one, f4("w")])
    with pytest.raises(BezoutChainError) as err:
        bezout_eval(tr, f4.one)
    assert err.value.step == 1


def test_bezout_quaternions(h, rng):
    tr = llcm_set([h("i"), h("j")])
    for _ in range(100):
        z = h.random(rng)
        val, factors = bezout_eval(tr, z)
        assert val == evaluate(tr.polynomial, z) == factors[1] * factors[0]


def test_pseudo_linear_examples(qx_ddx, f4):
    assert pseudo_linear_apply(qx_ddx.zero, qx_ddx("x^2")) == qx_ddx("2*x")
    assert pseudo_linear_apply(f4.one, f4("w")) == f4("w") ** 2
    a = f4("w")
    assert pseudo_linear_apply(a, f4.one) == a


def test_operator_apply(f8_sd, h_inner, rng):
    for R in (f8_sd, h_inner):
        for _ in range(150):
            f, a, x = rand_poly(R, rng, 3), R.random(rng), R.random(rng)
            got = operator_apply(f, a, x)
            if x:
                assert got == evaluate(f, a.conj(x)) * x
            else:
                assert not got
    a = f8_sd("w")
    for x in f8_sd.span(centralizer_basis(a)):
        assert not operator_apply(lin(f8_sd, a), a, x)


def test_miura_f4(f4):
    a = f4.one
    us = [f4.one, f4("w")]
    tr = llcm_set([a.conj(u) for u in us])
    assert miura_check(tr, a, us)
    pn = tr.polynomial
    assert all(not operator_apply(pn, a, x) for x in f4.elements())


def test_miura_one_point(f8_sd):
    a = f8_sd("w")
    for u in f8_sd.nonzero_elements():
        tr = llcm_set([a.conj(u)])
        assert miura_check(tr, a, [u])
        assert not operator_apply(lin(f8_sd, a.conj(u)), a, u)


def test_miura_quaternions(h):
    a = h("i")
    us = [h.one, h("1 + j")]
    tr = llcm_set([a.conj(u) for u in us])
    assert miura_check(tr, a, us, samples=100, rng=random.Random(5))
    ws = miura_exponents(tr, a, us)
    assert [a.conj(w) for w in ws] == tr.ys()


def test_miura_rejects_foreign_points(f4):
    with pytest.raises(ValueError):
        miura_check(llcm_set([f4("w")]), f4.one, [f4.one])


# --- P-independence -----------------------------------------------------------

def test_pindep_examples(f4):
    res = pindep_test([f4.one, f4("w")])
    assert res.independent
    assert res.U[0, 0] == res.U[0, 1] == f4.one
    assert res.U[1, 1] == f4("w") ** 2
    dep = pindep_test([f4("w"), f4("w")])
    assert not dep.independent and not dep.U[1, 1]


def test_pindep_matches_degree(f4, f8):
    for R in (f4, f8):
        for size in (1, 2, 3):
            for pts in itertools.product(R.elements(), repeat=size):
                res = pindep_test(list(pts))
                tr = llcm_set(list(pts))
                assert res.independent == (tr.polynomial.degree == size)
                if res.independent:
                    assert SkewPoly.from_linear_factors(R, res.factors) == tr.polynomial


def test_dependence_axioms_f4(f4):
    """P-dependence as a closure: reflexive, monotone, transitive, exchange."""
    els = f4.elements()

    def closure(S):
        if not S:
            return set()
        p = llcm_set(list(S)).polynomial
        return {x for x in els if not evaluate(p, x)}

    subsets = [set(c) for k in range(4) for c in itertools.combinations(els, k)]
    for S in subsets:
        cl = closure(S)
        assert S <= cl
        assert closure(cl) == cl
        for T in subsets:
            if S <= T:
                assert cl <= closure(T)
        for x in els:
            for y in els:
                if y in closure(S | {x}) and y not in cl:
                    assert x in closure(S | {y})
