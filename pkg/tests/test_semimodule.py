import pytest

from puncthilb.semigroup import plane_branch
from puncthilb.semimodule import (
    InvalidBasisError,
    OracleBoundError,
    all_normalized,
    as_element_set,
    catalan_count,
    delta_normalize,
    enumerate_mod_r,
    from_alphas,
    generated,
    minimal_generators,
    oracle_bound,
    oracle_enumerate_mod_r,
)

E6 = plane_branch(3, 4)


def test_p_basis_and_membership():
    lam = from_alphas(E6, (0, 0, 2))
    assert lam.p_basis == (0, 4, 2)
    assert lam.gaps == [1]
    assert lam.gap_count == 1
    assert lam.contains(5) and not lam.contains(1)


@pytest.mark.parametrize("alphas", [(0, 0), (1, 1, 1), (0, 2, 1), (0, 0, 4), (0, 2, 3)])
def test_invalid_alphas(alphas):
    with pytest.raises(InvalidBasisError):
        from_alphas(E6, alphas)


def test_generated_from_set():
    m = generated(E6, [4, 6, 7])
    assert m.shift == 4
    assert m.alphas == (0, 0, 2)
    assert m.basis == (4, 8, 6)
    assert m.is_inside(E6)
    assert m.codim(E6) == 2
    assert minimal_generators(m) == [4, 6]


def test_codim_outside_raises():
    m = generated(E6, [1])
    assert not m.is_inside(E6)
    with pytest.raises(ValueError):
        m.codim(E6)


def test_delta_normalization_of_counterexample():
    normal = delta_normalize(E6, generated(E6, [4, 6, 7]), 2)
    assert normal == generated(E6, [2, 4, 5])
    assert minimal_generators(normal) == [2, 4]


def test_delta_normalization_rejects_wrong_r():
    with pytest.raises(ValueError):
        delta_normalize(E6, generated(E6, [4, 6, 7]), 3)


@pytest.mark.parametrize("p,q", [(2, 3), (3, 4), (3, 5), (4, 5), (2, 7)])
def test_normalized_count_is_catalan(p, q):
    assert len(all_normalized(plane_branch(p, q))) == catalan_count(p, q)


def test_catalan_values():
    assert catalan_count(3, 4) == 5
    assert catalan_count(3, 5) == 7
    assert catalan_count(2, 9) == 5


def test_e6_inventory_small_r():
    assert [m.alphas for m in enumerate_mod_r(E6, 0)] == [(0, 0, 0)]
    assert len(enumerate_mod_r(E6, 1)) == 1
    assert sorted(m.basis for m in enumerate_mod_r(E6, 2)) == [(3, 7, 8), (4, 8, 6)]


def test_every_cell_has_codim_r():
    for r in range(9):
        for m in enumerate_mod_r(E6, r):
            assert m.codim(E6) == r


def test_oracle_matches_small():
    g = plane_branch(3, 5)
    for r in range(8):
        bound = oracle_bound(g, r)
        ours = sorted((as_element_set(m, bound) for m in enumerate_mod_r(g, r)), key=sorted)
        assert ours == oracle_enumerate_mod_r(g, r)


def test_oracle_bound_error():
    with pytest.raises(OracleBoundError):
        oracle_enumerate_mod_r(plane_branch(5, 6), 30)


def test_negative_r():
    with pytest.raises(ValueError):
        enumerate_mod_r(E6, -1)
