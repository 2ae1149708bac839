"""Order structure on trees above cyclic elements."""

import pytest
from hypothesis import given, settings

from monoalg import core, semilinear
from monoalg.core import FiniteMonounary, validate
from oracles import tables


def test_build_order_example():
    A = validate([0, 0, 0, 1])
    P = semilinear.build_order(A, 0)
    assert P.elements == (0, 1, 2, 3)
    assert P.bottom == 0
    assert P.covers == frozenset({(1, 0), (2, 0), (3, 1)})
    assert (0, 3) in P.leq and (1, 3) in P.leq
    assert (3, 1) not in P.leq
    assert all((x, x) in P.leq for x in P.elements)


def test_build_order_rejects_non_cyclic():
    A = validate([0, 0, 0, 1])
    with pytest.raises(ValueError, match="not cyclic"):
        semilinear.build_order(A, 3)
    with pytest.raises(ValueError):
        semilinear.build_order(A, 9)


def test_trivial_tree_over_proper_cycle():
    z3 = validate([1, 2, 0])
    P = semilinear.build_order(z3, 1)
    assert P.elements == (1,)
    assert P.covers == frozenset()


def test_meet_examples():
    A = validate([0, 0, 0, 1])
    P = semilinear.build_order(A, 0)
    assert semilinear.meet(P, 2, 3) == 0
    assert semilinear.meet(P, 1, 3) == 1
    assert semilinear.meet(P, 3, 3) == 3
    assert semilinear.meet(P, 0, 2) == 0
    with pytest.raises(ValueError):
        semilinear.meet(P, 0, 7)


def test_cover_relation_is_the_operation():
    A = validate([1, 0, 0, 2, 2, 3])
    for c in range(A.n):
        if not core.cyclic_mask(A)[c]:
            continue
        P = semilinear.build_order(A, c)
        expect = {
            (x, A(x)) for x in P.elements if x != c and A(x) in set(P.elements)
        }
        assert P.covers == frozenset(expect)


def test_aut_equality_examples():
    A = validate([0, 0, 0, 0])
    same, alg, ordr = semilinear.check_aut_equality(A, 0)
    assert same
    assert len(alg) == 6  # free permutation of the three leaves
    assert alg == ordr
    z3 = validate([1, 2, 0])
    same, alg, ordr = semilinear.check_aut_equality(z3, 0)
    assert same and alg == ((0,),)
    with pytest.raises(ValueError, match="bound"):
        semilinear.check_aut_equality(validate([0] * 9), 0)


@given(tables(max_n=6))
@settings(max_examples=60, deadline=None)
def test_meet_is_a_lower_bound(tab):
    A = FiniteMonounary(tab)
    cyc = core.cyclic_mask(A)
    for c in range(A.n):
        if not cyc[c]:
            continue
        P = semilinear.build_order(A, c)
        for x in P.elements:
            for y in P.elements:
                z = semilinear.meet(P, x, y)
                assert (z, x) in P.leq and (z, y) in P.leq
                assert semilinear.meet(P, y, x) == z
                assert semilinear.meet(P, x, P.bottom) == P.bottom


@given(tables(max_n=6))
@settings(max_examples=40, deadline=None)
def test_order_and_operation_share_automorphisms(tab):
    A = FiniteMonounary(tab)
    cyc = core.cyclic_mask(A)
    for c in range(A.n):
        if cyc[c]:
            same, _, _ = semilinear.check_aut_equality(A, c)
            assert same
