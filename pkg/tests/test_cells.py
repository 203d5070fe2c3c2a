from collections import Counter

import pytest

from dimension_oracle import ideal_dimensions
from puncthilb.acceptance import E6_COH, E6_EULER, E6_HOM, E8_EULER
from puncthilb.cells import (
    cell_dimension,
    cell_dimension_stable,
    cell_windows,
    poincare_string,
    stabilization_check,
    topology_report,
)
from puncthilb.semigroup import plane_branch
from puncthilb.semimodule import enumerate_mod_r, generated

E6 = plane_branch(3, 4)
E8 = plane_branch(3, 5)


def test_e6_r6_inventory():
    rep = topology_report(E6, 6)
    assert sorted(c.dim for c in rep.cells) == [0, 1, 2, 2, 3]
    assert rep.betti_hom == (1, 1, 2, 1)
    assert rep.betti_coh == (1, 2, 1, 1)
    assert rep.euler == 5
    assert rep.dim_hilb == 3
    assert rep.poincare == "1 + T^2 + 2*T^4 + T^6"


@pytest.mark.parametrize("r", range(7))
def test_e6_rows(r):
    rep = topology_report(E6, r)
    assert rep.euler == E6_EULER[r]
    assert rep.betti_hom == E6_HOM[r]
    assert rep.betti_coh == E6_COH[r]


def test_e8_euler_row():
    assert tuple(topology_report(E8, r).euler for r in range(9)) == E8_EULER


def test_e8_r6_row_as_computed():
    # the two 2-dimensional cells at r = 6 have alphas (0,0,3) and (0,0,2)
    rep = topology_report(E8, 6)
    assert rep.betti_hom == (1, 1, 2, 2)
    assert rep.betti_coh == (2, 2, 1, 1)
    two = sorted(c.semimodule.alphas for c in rep.cells if c.dim == 2)
    assert two == [(0, 0, 2), (0, 0, 3)]


@pytest.mark.parametrize("p,q,r", [(3, 4, r) for r in range(8)] + [(3, 5, r) for r in range(9)])
def test_dimension_matches_ideal_computation(p, q, r):
    gamma = plane_branch(p, q)
    assert [cell_dimension(gamma, m) for m in enumerate_mod_r(gamma, r)] == ideal_dimensions(gamma, r)


def test_counterexample_cell_is_a_point():
    m = generated(E6, [4, 6, 7])
    assert cell_dimension(E6, m) == 0
    assert cell_windows(E6, m) == [[], [], []]


def test_lower_index_variant_differs():
    rep = topology_report(E6, 4, lower_index=1)
    assert rep.euler == 4
    assert rep.betti_hom != E6_HOM[4]


def test_stable_formula_on_stable_range():
    c = E6.conductor
    for r in range(c, c + 4):
        for m in enumerate_mod_r(E6, r):
            assert cell_dimension(E6, m) == cell_dimension_stable(m.lam)


@pytest.mark.parametrize("p,q", [(2, 3), (3, 4), (3, 5), (2, 7)])
def test_stabilization(p, q):
    gamma = plane_branch(p, q)
    ok, dims = stabilization_check(gamma, gamma.conductor + 3)
    assert ok
    assert len(dims) == 4


def test_stabilization_needs_stable_range():
    with pytest.raises(ValueError):
        stabilization_check(E6, 3)


@pytest.mark.parametrize("l", range(1, 5))
def test_a2l_betti_all_one(l):
    gamma = plane_branch(2, 2 * l + 1)
    for r in range(2 * l + 5):
        rep = topology_report(gamma, r)
        assert rep.euler == (r // 2 + 1 if r <= 2 * l - 1 else l + 1)
        assert set(rep.betti_hom) == {1}


def test_cohomology_is_reflected_homology():
    for r in range(10):
        rep = topology_report(E8, r)
        dims = [c.dim for c in rep.cells]
        assert Counter(c.codim for c in rep.cells) == Counter(rep.dim_hilb - d for d in dims)


def test_poincare_string():
    assert poincare_string((1,)) == "1"
    assert poincare_string((2, 0, 3)) == "2 + 3*T^4"
