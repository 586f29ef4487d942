import pytest
from hypothesis import given, settings, strategies as st

from hurwitz import catalog
from hurwitz.group import (CapExceededError, commutator_subgroup, generates,
                           group_from_generators, normal_closure_order,
                           regular_representation, subgroup_closure)
from hurwitz.perms import cycle_notation, pinv, pmul, porder


def test_s3_from_generators():
    G = group_from_generators([(1, 0, 2), (1, 2, 0)])
    assert G.order == 6
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 2, 3]


def test_trivial_group():
    G = group_from_generators([(0, 1)])
    assert G.order == 1


def test_cap_exceeded():
    with pytest.raises(CapExceededError):
        catalog.symmetric(9, cap=10_000)


def test_psl27_order_and_classes():
    G = catalog.psl2(7)
    assert G.order == 168
    sizes = [len(c) for c in G.conjugacy_classes()]
    # canonical order: by element order, then class size
    assert sizes == [1, 21, 56, 42, 24, 24]
    orders = [G.element_order(c[0]) for c in G.conjugacy_classes()]
    assert orders == [1, 2, 3, 4, 7, 7]


def test_orbit_stabilizer_identity():
    G = catalog.psl2(7)
    for i in range(0, G.order, 17):
        assert G.class_size(i) * G.centralizer_size(i) == G.order


def test_psl27_is_perfect_and_simple():
    G = catalog.psl2(7)
    D = G.commutator_subgroup()
    assert D.order == G.order
    assert G.is_perfect()
    assert G.is_simple()


def test_sym4_commutator_is_alt4():
    S4 = catalog.symmetric(4)
    D = S4.commutator_subgroup()
    assert D.order == 12
    assert not S4.is_perfect()


def test_regular_representation_free_and_transitive():
    G = catalog.alternating(4)
    R = regular_representation(G)
    assert R.degree == G.order == R.order
    for i in range(1, R.order):
        perm = R.elements[i]
        assert all(perm[p] != p for p in range(R.degree))
    # transitive: orbit of 0 under the elements is everything
    assert {perm[0] for perm in R.elements} == set(range(R.degree))


def test_subgroup_closure_and_generates():
    G = catalog.symmetric(4)
    # a transposition and a 4-cycle generate S4
    t = G.index[(1, 0, 2, 3)]
    c = G.index[(1, 2, 3, 0)]
    assert generates(G, (t, c))
    assert len(subgroup_closure(G, [c])) == 4
    assert not generates(G, (c,))


def test_normal_closure():
    S4 = catalog.symmetric(4)
    double = S4.index[(1, 0, 3, 2)]  # (0 1)(2 3), lies in the Klein subgroup
    assert normal_closure_order(S4, [double]) == 4


@given(st.integers(0, 167), st.integers(0, 167))
@settings(max_examples=80, deadline=None)
def test_closure_and_inverse_laws(i, j):
    G = catalog.psl2(7)
    k = G.mul(i, j)
    assert 0 <= k < G.order
    assert G.inv(k) == G.mul(G.inv(j), G.inv(i))


def test_perm_helpers():
    a = (1, 2, 0)
    assert porder(a) == 3
    assert pmul(a, pinv(a)) == (0, 1, 2)
    assert cycle_notation((1, 0, 2)) == "(0 1)"


def test_element_order_lcm():
    S7 = catalog.symmetric(7)
    el = S7.index[(1, 0, 3, 4, 2, 5, 6)]  # 2-cycle and 3-cycle
    assert S7.element_order(el) == 6


def test_commutator_subgroup_standalone_matches_method():
    G = catalog.dihedral(6)
    D = commutator_subgroup(G)
    assert D.order == 3  # [D12, D12] = C3
