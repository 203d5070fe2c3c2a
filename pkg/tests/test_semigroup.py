import pytest

from puncthilb.semigroup import (
    SemigroupError,
    make_semigroup,
    plane_branch,
    reachable_upto,
    two_generator_member,
)


def test_e6_semigroup():
    g = plane_branch(3, 4)
    assert g.gaps == [1, 2, 5]
    assert g.delta == 3
    assert g.conductor == 6
    assert 7 in g and 5 not in g


def test_e8_semigroup():
    g = plane_branch(3, 5)
    assert g.gaps == [1, 2, 4, 7]
    assert g.conductor == 8


@pytest.mark.parametrize("l", range(1, 7))
def test_a2l_semigroup(l):
    g = plane_branch(2, 2 * l + 1)
    assert g.delta == l
    assert g.conductor == 2 * l


def test_closed_form_membership_matches_table():
    for p, q in [(2, 3), (3, 7), (4, 9), (5, 8)]:
        table = reachable_upto((p, q), 120)
        assert [two_generator_member(p, q, n) for n in range(120)] == table


def test_redundant_generators_are_dropped():
    g = make_semigroup([6, 4, 9, 8])
    assert g.generators == (4, 6, 9)
    assert not g.is_plane_branch


def test_three_generators_membership():
    g = make_semigroup([4, 6, 7])
    assert g.gaps == [1, 2, 3, 5, 9]
    assert 10 in g and 9 not in g
    with pytest.raises(SemigroupError):
        _ = g.p


@pytest.mark.parametrize("gens", [[], [0, 3], [4, 6], [-2, 3]])
def test_invalid_generators(gens):
    with pytest.raises(SemigroupError):
        make_semigroup(gens)


@pytest.mark.parametrize("p,q", [(4, 6), (3, 3), (5, 3), (1, 4)])
def test_plane_branch_rejects(p, q):
    with pytest.raises(SemigroupError):
        plane_branch(p, q)


def test_negative_not_member():
    assert -3 not in plane_branch(2, 3)
