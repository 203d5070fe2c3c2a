from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from puncthilb.cells import cell_dimension, cell_windows
from puncthilb.semigroup import plane_branch
from puncthilb.semimodule import delta_normalize, enumerate_mod_r, generated, minimal_generators
from puncthilb.series import TruncatedSeries, format_series, parse_series

pairs = st.tuples(st.integers(2, 6), st.integers(3, 11)).filter(lambda t: t[0] < t[1] and gcd(*t) == 1)
coeff_maps = st.dictionaries(st.integers(0, 15), st.fractions(-50, 50, max_denominator=5),
                             max_size=6)


@given(pairs)
def test_gorenstein(pq):
    g = plane_branch(*pq)
    assert g.conductor == 2 * g.delta == (pq[0] - 1) * (pq[1] - 1)
    # symmetry: n is a gap iff c - 1 - n is in Gamma
    assert all((n in g) != ((g.conductor - 1 - n) in g) for n in range(g.conductor))


@settings(max_examples=40, deadline=None)
@given(pairs, st.integers(0, 12))
def test_cells_are_codim_r_and_dims_bounded(pq, r):
    g = plane_branch(*pq)
    for m in enumerate_mod_r(g, r):
        assert m.codim(g) == r
        d = cell_dimension(g, m)
        assert 0 <= d <= r
        assert all(len(w) <= g.q for w in cell_windows(g, m))


@settings(max_examples=40, deadline=None)
@given(pairs, st.integers(0, 10))
def test_generated_roundtrip(pq, r):
    g = plane_branch(*pq)
    for m in enumerate_mod_r(g, r):
        assert generated(g, minimal_generators(m)) == m
        normal = delta_normalize(g, m, r)
        assert normal.alphas == m.alphas
        assert normal.shift == m.shift - r


@given(coeff_maps, coeff_maps)
def test_series_ring_laws(a, b):
    f, g = TruncatedSeries(a, 16), TruncatedSeries(b, 16)
    assert f + g == g + f
    assert (f - g) + g == f
    assert f * g == g * f


@given(coeff_maps)
def test_format_parse_roundtrip(a):
    f = TruncatedSeries(a, 16)
    assert parse_series(format_series(f), 16) == f
