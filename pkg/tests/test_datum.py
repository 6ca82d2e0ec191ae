"""Datum encoding: involutions, parsing, validation, equivalence."""

import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from treeworks.datum import (
    DatumError,
    DatumSyntaxError,
    DatumSpec,
    Quad,
    apply_relabeling,
    canonical_form,
    encode,
    equivalent,
    equivalent_sameside,
    format_datum,
    involution,
    is_torsion_free,
    mirror,
    parse_datum,
    relabelings,
    validate,
    vertex_fixing_automorphisms,
)
from treeworks.present import gamma44, gamma66

from conftest import EXAMPLE_34_TEXT, EXAMPLE_66_TEXT


# -- involutions and relabelings ---------------------------------------------

def test_involution_small_cases():
    # d=3, tau=1: letter 2 is self-inverse, 1 <-> 3.
    assert involution(3, 1)[1:] == (3, 2, 1)
    # d=4, tau=0: 1 <-> 4, 2 <-> 3.
    assert involution(4, 0)[1:] == (4, 3, 2, 1)
    # d=4, tau=2: middle band self-inverse.
    assert involution(4, 2)[1:] == (4, 2, 3, 1)
    # d=4, tau=4: everything self-inverse.
    assert involution(4, 4)[1:] == (1, 2, 3, 4)
    # d=6, tau=0.
    assert involution(6, 0)[1:] == (6, 5, 4, 3, 2, 1)


@pytest.mark.parametrize("d,tau", [(3, 1), (4, 0), (4, 2), (4, 4),
                                   (5, 1), (6, 0), (6, 2)])
def test_involution_is_an_involution(d, tau):
    inv = involution(d, tau)
    assert sorted(inv[1:]) == list(range(1, d + 1))
    assert all(inv[inv[i]] == i for i in range(1, d + 1))
    assert sum(1 for i in range(1, d + 1) if inv[i] == i) == tau


@pytest.mark.parametrize("d,tau", [(3, 1), (4, 0), (4, 2), (5, 1), (6, 0)])
def test_relabelings_centralize_the_involution(d, tau):
    inv = involution(d, tau)
    perms = relabelings(d, tau)
    p = (d - tau) // 2
    assert len(perms) == math.factorial(p) * 2 ** p * math.factorial(tau)
    assert len(set(perms)) == len(perms)
    for g in perms:
        assert sorted(g[1:]) == list(range(1, d + 1))
        assert all(g[inv[i]] == inv[g[i]] for i in range(1, d + 1))


def test_relabelings_are_exactly_the_centralizer():
    # Cross-check against a brute-force filter of Sym(d).
    for d, tau in [(3, 1), (4, 0), (4, 2)]:
        inv = involution(d, tau)
        brute = {
            (0,) + g
            for g in itertools.permutations(range(1, d + 1))
            if all(g[inv[i] - 1] == inv[g[i - 1]] for i in range(1, d + 1))
        }
        assert set(relabelings(d, tau)) == brute


# -- quad symmetries ---------------------------------------------------------

def test_orbit_closure(example34, example66):
    for datum in (example34, example66):
        for q in datum.R:
            orb = datum.orbit(q)
            assert q in orb
            assert len(orb) in (1, 2, 4)
            assert orb <= datum.R
            assert datum.sigma(q) in orb and datum.rho(q) in orb


def test_geometric_square_partition(example34, example66):
    for datum in (example34, example66):
        squares = datum.geometric_squares()
        seen = set()
        for sq in squares:
            assert not (sq & seen)
            seen |= sq
        assert seen == datum.R


def test_sigma_rho_are_involutions(example34):
    d = example34
    for q in d.R:
        assert d.sigma(d.sigma(q)) == q
        assert d.rho(d.rho(q)) == q


# -- parsing and formatting --------------------------------------------------

def test_parse_header_and_counts(example34, example66):
    assert (example34.d1, example34.d2) == (3, 4)
    assert (example34.tau1, example34.tau2) == (1, 0)
    assert len(example34.R) == 12
    assert len(example66.R) == 36


def test_format_parse_roundtrip(example34, example66):
    for datum in (example34, example66):
        again = parse_datum(format_datum(datum))
        assert again == datum


def test_parse_rejects_garbage():
    with pytest.raises(DatumSyntaxError):
        parse_datum("not a datum\n")
    with pytest.raises(DatumSyntaxError):
        parse_datum("datum d1=3 d2=3 tau1=1 tau2=1\nsquare a1 b9 a1 b1\n")
    with pytest.raises(DatumSyntaxError):
        parse_datum("datum d1=3 d2=3 tau1=2 tau2=1\n")  # parity mismatch


def test_out_of_range_quad_rejected():
    with pytest.raises(DatumError):
        DatumSpec(3, 3, 1, 1, [(1, 4, 1, 1)])


# -- validation --------------------------------------------------------------

def test_valid_examples(example34, example66):
    for datum in (example34, example66):
        rep = validate(datum)
        assert rep.valid
        assert not rep.issues
    assert validate(example34).square_count == 4
    assert validate(example66).square_count == 9


def test_validation_catches_missing_corner(example34):
    # Drop one full geometric square: corner coverage must fail.
    sq = example34.geometric_squares()[0]
    broken = DatumSpec(3, 4, 1, 0, example34.R - sq)
    rep = validate(broken)
    assert not rep.valid
    assert any("corner" in issue.message for issue in rep.issues)


def test_validation_catches_symmetry_break(example66):
    # Remove a single quad (not a whole orbit): invariance must fail.
    q = next(iter(example66.R))
    broken = DatumSpec(6, 6, 0, 0, example66.R - {q})
    rep = validate(broken)
    assert not rep.valid


def test_validation_catches_wrong_size(example66):
    broken = DatumSpec(6, 6, 0, 0, list(example66.R)[:20])
    assert not validate(broken).valid


# -- torsion -----------------------------------------------------------------

def test_torsion_detection(example34, example66):
    assert is_torsion_free(example66)
    assert not is_torsion_free(example34)   # a2 is an involution in the group
    assert is_torsion_free(gamma44())


# -- equivalence -------------------------------------------------------------

def test_relabeling_preserves_validity_and_class(example34):
    rng = random.Random(7)
    alphas = relabelings(3, 1)
    betas = relabelings(4, 0)
    for _ in range(10):
        a = rng.choice(alphas)
        b = rng.choice(betas)
        other = apply_relabeling(example34, a, b)
        assert validate(other).valid
        assert equivalent(example34, other)
        assert canonical_form(other) == canonical_form(example34)


def test_mirror_is_equivalent_when_square(example66):
    m = mirror(example66)
    assert validate(m).valid
    assert equivalent(example66, m)
    assert canonical_form(m) == canonical_form(example66)
    assert mirror(m) == example66


def test_mirror_changes_shape_when_rectangular(example34):
    m = mirror(example34)
    assert (m.d1, m.d2) == (4, 3)
    assert not equivalent(example34, m)  # different degrees, never equivalent


def test_inequivalent_data_detected(example66):
    g = gamma66(2)
    assert not equivalent(example66, g)
    assert canonical_form(example66) != canonical_form(g)


def test_encode_is_injective_on_distinct_data(example34, example66):
    assert encode(example34) != encode(example66)
    assert encode(example34) == encode(parse_datum(EXAMPLE_34_TEXT))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_equivalence_matches_canonical_form_on_random_relabelings(seed):
    rng = random.Random(seed)
    base = parse_datum(EXAMPLE_34_TEXT if seed % 2 else EXAMPLE_66_TEXT)
    a = rng.choice(relabelings(base.d1, base.tau1))
    b = rng.choice(relabelings(base.d2, base.tau2))
    other = apply_relabeling(base, a, b)
    assert equivalent_sameside(base, other)
    assert canonical_form(other) == canonical_form(base)


# -- vertex-fixing automorphisms ---------------------------------------------

def test_automorphism_quadruples_preserve_R(example66):
    rep = vertex_fixing_automorphisms(example66)
    assert rep.count >= 1
    for (a1, b1, a2, b2) in rep.quadruples:
        for q in example66.R:
            assert Quad(a1[q.a], b1[q.b], a2[q.ap], b2[q.bp]) in example66.R
