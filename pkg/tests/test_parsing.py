import pytest

from wedderburn import FiniteField, MatrixRing, ParseError, RationalField, SkewPoly, parse_poly


def test_element_grammar(f4, h, qx_ddx):
    assert f4("w^2 + 1") == f4("w")
    assert h("1 + 2i - j/2 + 3k") == h("1 + 2*i - 1/2*j + 3*k")
    assert qx_ddx("(x^2 + 1)/(x - 1)") * qx_ddx("x - 1") == qx_ddx("x^2 + 1")
    assert h("i^-1") == h("-i")
    M = MatrixRing(RationalField(), 2)
    assert M("[[1, 1/2], [0, -3]]").value[0][1] == RationalField()("1/2").value


def test_polynomial_grammar(f4):
    f = parse_poly(f4, "t^2 + (w)*t + (1)")
    assert f.degree == 2
    assert f[1] == f4("w")
    assert parse_poly(f4, "t*(w)") == SkewPoly(f4, [0, f4("w").S()])
    assert parse_poly(f4, "(w)*t") == SkewPoly(f4, [0, f4("w")])


def test_print_parse_polynomial(f8_sd, h, rng):
    for ring in (f8_sd, h):
        for _ in range(50):
            f = SkewPoly(ring, [ring.random(rng) for _ in range(rng.randint(0, 4))])
            assert parse_poly(ring, str(f)) == f


@pytest.mark.parametrize("text", ["w +", "(w", "w ^ x", "q", "w $ 1", "[[1]]"])
def test_parse_errors_have_positions(text):
    F = FiniteField.builtin("f4")
    with pytest.raises(ParseError) as err:
        F(text)
    assert err.value.pos >= 0


def test_division_by_zero_is_a_parse_error():
    with pytest.raises(ParseError):
        RationalField()("1/0")


def test_division_by_nonconstant_polynomial(f4):
    with pytest.raises(ParseError):
        parse_poly(f4, "1/t")
