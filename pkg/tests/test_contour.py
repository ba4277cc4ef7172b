from __future__ import annotations

from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcembed.contour import (
    contour_equivalent,
    contour_factor,
    contour_points,
    departures,
    meandering_factor,
)
from arcembed.corpus import random_onesided_map, random_onto_half
from arcembed.errors import HypothesisError
from arcembed.plmap import compose, evaluate, from_pairs, identity_map, validate
from oracles import departure_candidates, is_departure, matcher_verdict, prior_image

IDENT01 = identity_map(0, 1, codomain=(-1, 1))


def _runs(report):
    return [
        (b.orientation, [(r.x_lo, r.x_hi) for r in b.runs]) for b in report.blocks
    ]


def test_departures_identity():
    rep = departures(IDENT01)
    assert _runs(rep) == [("pos", [(Fraction(0), Fraction(1))])]
    assert rep.contour_points == ((Fraction(1), Fraction(1)),)


def test_departures_tent(tent):
    rep = departures(tent)
    assert _runs(rep) == [("pos", [(Fraction(0), Fraction(1, 2))])]
    assert rep.contour_points == ((Fraction(1, 2), Fraction(1)),)
    # grid oracle: every claimed departure is one, every grid departure is claimed
    for k in range(1, 10**4, 37):
        x = Fraction(k, 10**4)
        claimed = Fraction(0) < x <= Fraction(1, 2)
        assert (is_departure(tent, x) == "pos") == claimed


def test_departures_f_a(f_a):
    # Crossing abscissae recomputed by segment algebra: the middle segment
    # crosses 0 at 5/12 (not 3/8) and the last crosses 1/2 at 7/8.
    rep = departures(f_a)
    assert _runs(rep) == [
        ("pos", [(Fraction(0), Fraction(1, 4))]),
        ("neg", [(Fraction(5, 12), Fraction(1, 2))]),
        ("pos", [(Fraction(7, 8), Fraction(1))]),
    ]
    assert rep.contour_points == (
        (Fraction(1, 4), Fraction(1, 2)),
        (Fraction(1, 2), Fraction(-1, 4)),
        (Fraction(1), Fraction(3, 4)),
    )


def test_departures_grid_oracle(f_a):
    rep = departures(f_a)

    def claimed(x):
        for b in rep.blocks:
            for r in b.runs:
                if r.x_lo < x <= r.x_hi:
                    return b.orientation
        return None

    for k in range(1, 10**4, 29):
        x = Fraction(k, 10**4)
        assert is_departure(f_a, x) == claimed(x)


def test_departures_reject_bad_hypotheses():
    with pytest.raises(HypothesisError):
        departures(from_pairs([(0, "1/2"), (1, 1)]))
    with pytest.raises(HypothesisError):
        departures(from_pairs([(0, 0), (1, 0)]))


def test_contour_points_examples(f_a, tent):
    assert contour_points(IDENT01) == ((Fraction(1), Fraction(1)),)
    assert contour_points(tent) == ((Fraction(1, 2), Fraction(1)),)
    assert contour_points(f_a) == (
        (Fraction(1, 4), Fraction(1, 2)),
        (Fraction(1, 2), Fraction(-1, 4)),
        (Fraction(1), Fraction(3, 4)),
    )


def test_contour_factor_examples(f_a, tent):
    assert contour_factor(IDENT01) == identity_map(0, 1)
    assert contour_factor(tent) == identity_map(0, 1)
    assert contour_factor(f_a) == from_pairs(
        [(0, 0), ("1/3", "1/2"), ("2/3", "-1/4"), (1, "3/4")]
    )


def test_meandering_factor_examples(f_a, tent):
    assert meandering_factor(IDENT01) == identity_map(0, 1)
    assert meandering_factor(tent) == tent
    s = meandering_factor(f_a)
    assert evaluate(s, "1/8") == Fraction(1, 6)
    t = contour_factor(f_a)
    assert evaluate(t, Fraction(1, 6)) == Fraction(1, 4) == evaluate(f_a, "1/8")
    assert compose(t, s) == f_a


def test_contour_equivalent_examples(f_a, tent):
    assert contour_equivalent(tent, IDENT01).equal
    assert contour_equivalent(f_a, f_a).equal
    cmp = contour_equivalent(f_a, IDENT01)
    assert not cmp.equal
    # the negative block of f_a has no counterpart in the identity
    assert cmp.witness["map"] == "first"
    assert cmp.witness["orientation"] == "neg"
    assert Fraction(cmp.witness["x"]) == Fraction(1, 2)
    assert Fraction(cmp.witness["value"]) == Fraction(-1, 4)


@st.composite
def onesided(draw):
    rng = Random(draw(st.integers(min_value=0, max_value=10**9)))
    return random_onesided_map(rng, max_segments=5)


@given(onesided())
@settings(max_examples=80, deadline=None)
def test_recomposition_exact(f):
    assert compose(contour_factor(f), meandering_factor(f)) == f


@given(onesided())
@settings(max_examples=60, deadline=None)
def test_meandering_factor_is_onto(f):
    s = meandering_factor(f)
    assert s.value_range() == (Fraction(0), Fraction(1))
    assert evaluate(s, 0) == 0


@given(onesided())
@settings(max_examples=40, deadline=None)
def test_blocks_match_definition_oracle(f):
    rep = departures(f)
    g = IDENT01  # candidate generator only needs some second map's levels

    def claimed(x):
        for b in rep.blocks:
            for r in b.runs:
                if r.x_lo < x <= r.x_hi:
                    return b.orientation
        return None

    for x in departure_candidates(f, g):
        assert is_departure(f, x) == claimed(x)
    # block orientations alternate
    orients = [b.orientation for b in rep.blocks]
    assert all(a != b for a, b in zip(orients, orients[1:]))


@given(onesided())
@settings(max_examples=40, deadline=None)
def test_contour_factor_idempotent(f):
    t = contour_factor(f)
    assert contour_factor(t) == t
    # contour points of t sit exactly on the lattice with f's contour values
    n = len(contour_points(f))
    cps = contour_points(t)
    assert [a for a, _ in cps] == [Fraction(i, n) for i in range(1, n + 1)]
    assert [v for _, v in cps] == [v for _, v in contour_points(f)]


@given(onesided(), st.integers(min_value=0, max_value=10**9))
@settings(max_examples=60, deadline=None)
def test_prop_onto_precomposition_preserves_contour(f, seed):
    # tau with sigma onto and sigma(0) = 0: contour factor of tau o sigma
    # equals contour factor of tau
    sigma = random_onto_half(Random(seed), max_segments=4)
    composite = compose(f, sigma)
    assert contour_factor(composite) == contour_factor(f)


@given(onesided(), onesided(), st.integers(min_value=0, max_value=10**9))
@settings(max_examples=40, deadline=None)
def test_same_contour_survives_postcomposition(f1, f2, seed):
    # build f2' with the same contour factor as f1 via onto precomposition,
    # then postcompose both with a random centered map g
    from arcembed.corpus import random_centered_map

    sigma = random_onto_half(Random(seed), max_segments=3)
    f1_alt = compose(f1, sigma)
    assert contour_factor(f1_alt) == contour_factor(f1)
    g = random_centered_map(Random(seed + 1), max_half_segments=3)
    assert contour_factor(compose(g, f1_alt)) == contour_factor(compose(g, f1))


@given(onesided(), onesided())
@settings(max_examples=50, deadline=None)
def test_lemma_matcher_biconditional(f, g):
    assert contour_equivalent(f, g).equal == matcher_verdict(f, g)


def test_prior_image_oracle_shape(f_a):
    lo, lo_inc, hi, hi_inc = prior_image(f_a, Fraction(1, 2))
    assert (lo, lo_inc) == (Fraction(-1, 4), False)
    assert (hi, hi_inc) == (Fraction(1, 2), True)
