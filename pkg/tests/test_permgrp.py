"""Permutation-group machinery, cross-checked against sympy."""

import random

from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from treeworks.permgrp import (
    compose,
    contains_alternating,
    cycles,
    group_elements,
    group_order,
    identify_sym6_class,
    identity,
    inverse,
    perm_from_cycles,
    pointwise_stabilizer_trivial_on,
    sign,
)


def random_perm(rng, n):
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def test_compose_inverse_identity():
    rng = random.Random(1)
    for n in (1, 2, 5, 9):
        e = identity(n)
        for _ in range(20):
            p = random_perm(rng, n)
            q = random_perm(rng, n)
            assert compose(p, inverse(p)) == e
            assert compose(inverse(p), p) == e
            assert compose(p, e) == p
            # anti/homomorphism sanity: inverse of a product.
            assert inverse(compose(p, q)) == compose(inverse(q), inverse(p))


def test_compose_matches_sympy():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randrange(2, 8)
        p = random_perm(rng, n)
        q = random_perm(rng, n)
        sp = Permutation(list(p))
        sq = Permutation(list(q))
        # our compose must agree with one of the two sympy product orders
        lhs = tuple(compose(p, q))
        rhs1 = tuple((sp * sq)(i) for i in range(n))
        rhs2 = tuple((sq * sp)(i) for i in range(n))
        assert lhs in (rhs1, rhs2)


def test_sign_and_cycles():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randrange(1, 9)
        p = random_perm(rng, n)
        assert sign(p) == Permutation(list(p)).signature()
        cyc = cycles(p)
        # cycles cover each moved point exactly once
        moved = [x for c in cyc for x in c]
        assert len(moved) == len(set(moved))
        rebuilt = perm_from_cycles([c for c in cyc], n, one_indexed=False)
        assert rebuilt == p or all(p[i] == i for i in range(n))


def test_perm_from_cycles_one_indexed():
    p = perm_from_cycles([(1, 2), (3, 4, 5)], 5)
    assert p == (1, 0, 3, 4, 2)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 9), st.integers(3, 9), st.integers(1, 4))
def test_group_order_matches_sympy(seed, n, ngens):
    rng = random.Random(seed)
    gens = [random_perm(rng, n) for _ in range(ngens)]
    ours = group_order(gens, n)
    theirs = PermutationGroup([Permutation(list(g)) for g in gens]).order()
    assert ours == theirs


def test_group_elements_small():
    gens = [(1, 0, 2), (0, 2, 1)]  # generate Sym(3)
    elems = group_elements(gens, 3)
    assert len(elems) == 6
    assert identity(3) in elems


def test_contains_alternating():
    # Sym(6) generated by a transposition and a 6-cycle.
    six = perm_from_cycles([(1, 2, 3, 4, 5, 6)], 6)
    swap = perm_from_cycles([(1, 2)], 6)
    assert contains_alternating([six, swap], 6)
    # A 2-group does not contain Alt(4).
    k4 = [perm_from_cycles([(1, 2), (3, 4)], 4),
          perm_from_cycles([(1, 3), (2, 4)], 4)]
    assert not contains_alternating(k4, 4)


def test_pointwise_stabilizer():
    # Sym(3) acting on {0,1,2}: the stabilizer of [0,1] is trivial.
    gens = [(1, 0, 2), (0, 2, 1)]
    assert pointwise_stabilizer_trivial_on(gens, 3, [0, 1])
    # Acting on 4 points but only permuting the first 3: stabilizer of [3]
    # is the whole nontrivial group.
    gens4 = [(1, 0, 2, 3), (0, 2, 1, 3)]
    assert not pointwise_stabilizer_trivial_on(gens4, 4, [3])


def test_identify_sym6_class():
    six = perm_from_cycles([(1, 2, 3, 4, 5, 6)], 6)
    swap = perm_from_cycles([(1, 2)], 6)
    assert identify_sym6_class([six, swap], 6) == "720.1"
    assert identify_sym6_class([six], 6) != "720.1"
