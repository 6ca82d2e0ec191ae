"""Sign invariants, the alpha map, and the projection-closure pipeline."""

import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from treeworks.classify import (
    GroupDescriptor,
    LabelledGraph,
    alpha,
    alpha_inverse,
    build_graph,
    burger_mozes_bound,
    burger_mozes_nondiscrete,
    classify_projection,
    detect_K_and_X,
    possibly_irreducible,
    s_values,
    s_values_bruteforce,
    solve_affine_gf2,
)
from treeworks.datum import apply_relabeling, relabelings
from treeworks.present import gamma44, gamma_2n2n1, gamma_64n


# -- the alpha map -----------------------------------------------------------

ALL_SUBSETS = [frozenset(s) for r in range(9)
               for s in itertools.combinations(range(8), r)]


@pytest.mark.parametrize("d", [4, 5, 6, 7])
def test_alpha_injective_on_small_subsets(d):
    images = {}
    for X in ALL_SUBSETS:
        img = alpha(X, d)
        assert img not in images or images[img] == X
        images[img] = X
    # the map is injective, so image size equals domain size
    assert len(images) == len(ALL_SUBSETS)


@pytest.mark.parametrize("d", [4, 6])
def test_alpha_inverse_roundtrip(d):
    for X in ALL_SUBSETS:
        img = alpha(X, d)
        if not img:
            continue
        assert alpha_inverse(img, d) == X


@pytest.mark.parametrize("d", [4, 6])
def test_alpha_inverse_detects_non_image(d):
    image = {alpha(X, d) for X in ALL_SUBSETS}
    for r in range(4):
        for s in itertools.combinations(range(6), r):
            S = frozenset(s)
            got = alpha_inverse(S, d)
            if S in image and S:
                assert got is not None and alpha(got, d) == S
            elif got is not None:
                assert alpha(got, d) == S
            else:
                assert S not in image or not S


def test_alpha_known_values():
    # even degree: down-shift xor up-shift; odd degree: up-shift plus 0-rule
    assert alpha({0}, 6) == frozenset({1})
    assert alpha({1}, 6) == frozenset({2})
    assert alpha({2}, 6) == frozenset({1, 3})
    assert alpha({0, 1}, 6) == frozenset({1, 2})
    assert alpha({1}, 5) == frozenset({0, 2})
    assert alpha({2}, 5) == frozenset({3})


# -- parity DP vs brute force ------------------------------------------------

@st.composite
def labelled_graphs(draw):
    n = draw(st.integers(1, 8))
    vertices = tuple(range(1, n + 1))
    possible = [(u, v) for u in vertices for v in vertices if u <= v]
    edges = tuple(sorted(draw(st.sets(st.sampled_from(possible), max_size=9))))
    labels = {v: draw(st.sampled_from((-1, 1))) for v in vertices}
    return LabelledGraph(vertices, edges, labels, False)


@settings(max_examples=30, deadline=None)
@given(labelled_graphs(), st.integers(0, 5))
def test_s_values_dp_matches_bruteforce(g, k_max):
    fast = s_values(g, k_max)
    slow = s_values_bruteforce(g, k_max)
    assert fast.rows == slow.rows


def test_s_values_path_graph():
    # path 1-2-3, all labels +1: every s_k is +1
    g = LabelledGraph((1, 2, 3), ((1, 2), (2, 3)), {1: 1, 2: 1, 3: 1}, False)
    m = s_values(g, 4)
    assert all(v == 1 for row in m.rows.values() for v in row)


def test_coloring_independence(example34, example66):
    # Relabeling either alphabet permutes graph vertices but never changes
    # the multiset of sign rows.
    rng = random.Random(11)
    for datum in (example34, example66, gamma44()):
        base = {side: sorted(s_values(build_graph(datum, side), 3).rows.values())
                for side in (1, 2)}
        alphas = relabelings(datum.d1, datum.tau1)
        betas = relabelings(datum.d2, datum.tau2)
        for _ in range(20):
            other = apply_relabeling(datum, rng.choice(alphas), rng.choice(betas))
            for side in (1, 2):
                rows = sorted(s_values(build_graph(other, side), 3).rows.values())
                assert rows == base[side]


# -- affine GF(2) solver vs exhaustive search --------------------------------

@st.composite
def affine_systems(draw):
    nvars = draw(st.integers(1, 6))
    neqs = draw(st.integers(0, 10))
    eqs = []
    for _ in range(neqs):
        support = draw(st.lists(st.integers(0, nvars - 1), max_size=4))
        rhs = draw(st.integers(0, 1))
        eqs.append((support, rhs))
    return nvars, eqs


def eval_system(eqs, assignment):
    for support, rhs in eqs:
        acc = 0
        for i in support:
            acc ^= assignment[i]
        if acc != rhs:
            return False
    return True


@settings(max_examples=120, deadline=None)
@given(affine_systems())
def test_affine_solver_vs_exhaustive(system):
    nvars, eqs = system
    sol = solve_affine_gf2(eqs, nvars)
    brute = None
    for bits in itertools.product((0, 1), repeat=nvars):
        if eval_system(eqs, bits):
            brute = bits
            break
    if brute is None:
        assert sol is None
    else:
        assert sol is not None
        assert eval_system(eqs, sol)


# -- K and X detection -------------------------------------------------------

def test_detect_K_and_X_worked_example(example66):
    for side, want_K, want_X in ((1, 1, {1}), (2, 2, {1, 2})):
        m = s_values(build_graph(example66, side), 6)
        K, X = detect_K_and_X(m)
        assert K == want_K
        assert X == frozenset(want_X)


# -- end-to-end classification ----------------------------------------------

def test_classify_worked_example(example66):
    r1 = classify_projection(example66, 1)
    r2 = classify_projection(example66, 2)
    assert str(r1.descriptor) == "{0}^{**}"
    assert str(r2.descriptor) == "{0,1}^*"
    # pinned evidence: sign tables, K, Y, and system verdicts
    assert r1.evidence["K"] == 1 and r1.evidence["Y"] == frozenset({0})
    assert r2.evidence["K"] == 2 and r2.evidence["Y"] == frozenset({0, 1})
    assert r1.evidence["s_matrix"][2][0] == -1
    assert all(v == 1 for x in (1, 3) for v in r1.evidence["s_matrix"][x])
    assert r2.evidence["s_matrix"][2] == tuple([1, -1, -1] * 5)[:len(r2.evidence["s_matrix"][2])]
    assert r1.evidence["system_star_solvable"] is False
    assert r1.evidence["system_doublestar_solvable"] is True
    assert r2.evidence["system_star_solvable"] is True
    assert r2.evidence["corollary_all_minus"] is True
    assert r1.evidence["local_action_class"] == "720.1"


def test_classify_small_degree_undetermined(example34):
    r = classify_projection(example34, 1)
    assert r.descriptor.variant == "Undetermined"
    assert "degree" in str(r.descriptor) or "odd" in str(r.descriptor)


def test_classify_named_family_64n():
    import math
    for n in (2, 3):
        g = gamma_64n(n)
        r1 = classify_projection(g, 1)
        assert str(r1.descriptor) == "{%d}" % n
        r2 = classify_projection(g, 2)
        assert r2.evidence["local_action_order"] == math.factorial(4 * n) // 2


def test_classify_named_family_2n2n1():
    import math
    for n in (3, 4):
        g = gamma_2n2n1(n)
        for side, d in ((1, 2 * n), (2, 2 * n + 1)):
            r = classify_projection(g, side)
            assert r.evidence["local_action_order"] == math.factorial(d)
        if n == 4:
            r1 = classify_projection(g, 1)
            assert str(r1.descriptor) == "{4}"


# -- irreducibility heuristics ----------------------------------------------

def test_possibly_irreducible(example66):
    s1, s2, both = possibly_irreducible(example66)
    assert s1 and s2 and both
    assert possibly_irreducible(gamma44(), 1)
    assert possibly_irreducible(gamma44(), 2)


def test_nondiscreteness_certificate(example66):
    assert burger_mozes_nondiscrete(example66, 1)
    assert burger_mozes_nondiscrete(example66, 2)
    assert burger_mozes_bound(6) == 360 * 60 ** 6


def test_descriptor_formatting():
    assert str(GroupDescriptor("Plain", frozenset({0, 2}))) == "{0,2}"
    assert str(GroupDescriptor("Star", frozenset({1}))) == "{1}^*"
    assert str(GroupDescriptor("PrimeStar", frozenset({0}))) == "{0}'^*"
    assert str(GroupDescriptor("DoubleStar", frozenset({0}))) == "{0}^{**}"
