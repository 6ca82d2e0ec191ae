"""Square-completion and ball actions on the two trees."""

import random

import pytest

from treeworks.action import (
    ball_paths,
    fill_rectangle,
    letters_on_ball,
    local_action_permutation,
    sphere_paths,
    word_action_on_ball,
)
from treeworks.datum import Quad, lookup_square
from treeworks.permgrp import group_order
from treeworks.present import gamma44


# -- paths -------------------------------------------------------------------

def test_path_counts():
    inv = (5, 4, 3, 2, 1)  # d=4, tau=0
    assert len(sphere_paths(4, inv, 0)) == 1
    assert len(sphere_paths(4, inv, 1)) == 4
    assert len(sphere_paths(4, inv, 2)) == 12
    assert len(ball_paths(4, inv, 2)) == 17
    # No path doubles back: successive letters are never inverse.
    for p in sphere_paths(4, inv, 3):
        assert all(inv[p[i + 1]] != p[i] for i in range(len(p) - 1))


# -- rectangle completion ----------------------------------------------------

def test_rectangle_golden(example34):
    # bottom a1 a2 a1^-1 a2, right b1 b2 (a1^-1 = a3, a2 self-inverse).
    top, left = fill_rectangle(example34, (1, 2, 3, 2), (1, 2))
    assert left == (4, 4)           # b1^-2 (b1^-1 = b4)
    assert top == (2, 3, 3, 3)      # a2 a1^-3 read left to right


def test_rectangle_matches_ball_action(example34):
    # The left word of the completed rectangle carries the bottom path of
    # the top edge to the bottom edge when acting on tree 1.
    act = word_action_on_ball(example34, (4, 4), side=1, n=4)
    assert act.apply((2, 3, 3, 3)) == (1, 2, 3, 2)


def test_single_square_rectangles(example34, example66):
    for datum in (example34, example66):
        for q in datum.R:
            top, left = fill_rectangle(datum, (q.a,), (q.b,))
            assert top == (datum.inv_a[q.ap],)
            assert left == (datum.inv_b[q.bp],)


def test_rectangle_stacking(example66):
    # Completing against a two-letter right edge = two successive completions.
    rng = random.Random(3)
    for _ in range(20):
        bottom = tuple(rng.choice(range(1, 7)) for _ in range(3))
        b1 = rng.choice(range(1, 7))
        b2 = rng.choice(range(1, 7))
        mid, left1 = fill_rectangle(example66, bottom, (b1,))
        top, left2 = fill_rectangle(example66, mid, (b2,))
        full_top, full_left = fill_rectangle(example66, bottom, (b1, b2))
        assert full_top == top
        assert full_left == left1 + left2


def test_lookup_square(example34):
    for q in example34.R:
        assert lookup_square(example34, (q.a, q.b)) == q


# -- ball actions ------------------------------------------------------------

def test_ball_action_group_laws(example66):
    w = (1, 2)
    act = word_action_on_ball(example66, w, side=2, n=3)
    inv_w = tuple(example66.inv_a[x] for x in reversed(w))
    act_inv = word_action_on_ball(example66, inv_w, side=2, n=3)
    assert act.compose(act_inv).is_identity()
    assert act_inv.compose(act).is_identity()


def test_ball_action_permutes_spheres(example66):
    act = word_action_on_ball(example66, (1, 2, 3), side=2, n=3)
    pts = ball_paths(6, example66.inv_b, 3)
    images = [act.apply(p) for p in pts]
    assert sorted(images) == sorted(pts)
    for p in pts:
        assert len(act.apply(p)) == len(p)


def test_local_action_permutation(example66):
    for letter in range(1, 7):
        for side in (1, 2):
            perm = local_action_permutation(example66, letter, side)
            assert sorted(perm) == list(range(len(perm)))


def test_letters_on_ball_orders(example66):
    # On tree 1 the radius-1 local action of this datum is all of Sym(6).
    pts, perms = letters_on_ball(example66, side=1, n=1)
    assert len(pts) == 7
    assert group_order(perms, len(pts)) % 360 == 0


# -- known ball facts for the (4,4) family member ----------------------------

@pytest.fixture(scope="module")
def g44():
    return gamma44()


def test_g44_cube_fixes_ball_1(g44):
    act = word_action_on_ball(g44, (1, 2) * 3, side=2, n=2)
    assert act.fixes_ball(1)
    assert not act.fixes_ball(2)


def test_g44_power81_fixes_ball_4_not_5(g44):
    act = word_action_on_ball(g44, (1, 2) * 81, side=2, n=5)
    assert act.fixes_ball(4)
    # b1^5 is moved to b1^4 b2^-1 (with d2=4, tau2=0: b2^-1 = b3).
    assert act.apply((1, 1, 1, 1, 1)) == (1, 1, 1, 1, 3)
    assert not act.fixes_ball(5)
