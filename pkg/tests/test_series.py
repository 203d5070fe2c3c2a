from fractions import Fraction

import pytest

from puncthilb.series import (
    Affine,
    HorizonError,
    SeriesParseError,
    TruncatedSeries,
    format_series,
    parse_series,
    parse_series_list,
)


def S(text, n=20):
    return parse_series(text, n)


def test_parse_and_format_roundtrip():
    for text in ["t^4 + 3/2 t^5", "1 - t", "-2 t", "t^3", "0"]:
        if text == "0":
            assert format_series(TruncatedSeries.zero(10)) == "0"
            continue
        assert format_series(S(text)) == text


def test_parse_parameters():
    f = S("t^4 + l*t^5")
    assert f[5] == Affine.var("l")
    assert f.variables == {"l"}
    assert format_series(f) == "t^4 + (l)*t^5"
    g = f.substitute({"l": Fraction(2)})
    assert g.is_numeric() and g[5] == 2


@pytest.mark.parametrize("bad", ["", "t^", "t^4 +", "t^4 t^", "2 (t)", "a*b*t", "t^1/2"])
def test_parse_errors(bad):
    with pytest.raises(SeriesParseError):
        parse_series(bad, 10)


def test_parse_list():
    assert [format_series(f) for f in parse_series_list("t^3, t^4+t^5", 12)] == ["t^3", "t^4 + t^5"]


def test_product_horizon():
    f = TruncatedSeries({2: 1, 3: 1}, 10)
    g = TruncatedSeries({1: 1}, 6)
    h = f * g
    # min(10 + 1, 6 + 2)
    assert h.trunc == 8
    assert h.coeffs == {3: 1, 4: 1}


def test_valuation_and_leading_term():
    f = S("3 t^2 + t^5")
    assert f.valuation == 2
    assert f.leading_term() == (2, 3)
    z = TruncatedSeries.zero(5)
    assert z.valuation == float("inf")
    with pytest.raises(HorizonError):
        z.leading_term()


def test_coefficient_beyond_horizon():
    with pytest.raises(HorizonError):
        S("t", 4)[4]
    with pytest.raises(HorizonError):
        TruncatedSeries({}, 0)


def test_symbolic_products_refused():
    f = S("l*t")
    with pytest.raises(TypeError):
        f * f
    assert (f * S("t^2"))[3] == Affine.var("l")


def test_pow_and_binomial():
    f = S("1 + t", 12) ** 4
    assert [f[k] for k in range(6)] == [1, 4, 6, 4, 1, 0]


def test_equality_respects_horizon():
    assert S("t", 5) != S("t", 6)
    assert S("t + t^7", 5) == S("t", 5)
    assert S("t + t^7", 9).agrees_with(S("t", 9), below=7)


def test_affine_algebra():
    x, y = Affine.var("x"), Affine.var("y")
    form = 2 * x - y + 3
    assert str(form) == "2*x - y + 3"
    assert form.substitute({"x": Fraction(1), "y": Fraction(5)}) == 0
    assert (form / 2).coeffs == {"x": 1, "y": Fraction(-1, 2)}
    with pytest.raises(TypeError):
        x * y
