"""Radial departures of centered maps and everything built on them.

A radial departure of f is a straddling pair <x1, x2> (x1 < 0 < x2) whose
open interval maps exactly onto the open interval between the endpoint
values; it is positive when f(x1) < 0 < f(x2) and negative when
f(x2) < 0 < f(x1).

The set of realizable value pairs (f(x1), f(x2)) has a finite exact
description: a positive pair needs x1 to be a negative left departure,
x2 a positive right departure, with the opposite half staying inside the
pair's value gap.  Those side conditions are constant along each departure
block, so the full pair set is a finite union of axis-aligned rectangles
whose corners are record values.  ``radial_profile`` computes that union;
``same_radial_departures`` compares two unions exactly by sampling the
arrangement their endpoints generate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import contour
from .contour import NEG, POS, DepartureBlock
from .errors import DomainError, HypothesisError
from .plmap import (
    PLMap,
    evaluate,
    glue,
    is_centered,
    is_half_nonconstant,
    rat_str,
    reflect_domain,
    restrict,
)


def require_centered(f: PLMap) -> None:
    if not is_centered(f):
        raise HypothesisError("map is not centered (needs f(0) = 0 with 0 interior)")
    if not is_half_nonconstant(f):
        raise HypothesisError("a half restriction is constant")


def split_halves(f: PLMap) -> tuple[PLMap, PLMap]:
    """(reflected left half, right half): both one-sided maps on [0, |end|]."""
    a, b = f.domain
    left = reflect_domain(restrict(f, a, Fraction(0)))
    right = restrict(f, Fraction(0), b)
    return left, right


@dataclass(frozen=True)
class RadialDeparture:
    x1: Fraction
    x2: Fraction
    orientation: str
    values: tuple[Fraction, Fraction]

    def to_json(self) -> dict:
        return {
            "x1": rat_str(self.x1),
            "x2": rat_str(self.x2),
            "orientation": self.orientation,
            "values": [rat_str(self.values[0]), rat_str(self.values[1])],
        }


def radial_departure_check(f: PLMap, x1, x2) -> Optional[RadialDeparture]:
    """Classify the pair <x1, x2> by the exact range condition: the interior
    values must lie strictly between the endpoint values."""
    require_centered(f)
    x1, x2 = Fraction(x1), Fraction(x2)
    a, b = f.domain
    if not (a <= x1 < 0 < x2 <= b):
        raise DomainError(f"need {a} <= x1 < 0 < x2 <= {b}, got ({x1}, {x2})")
    y1, y2 = evaluate(f, x1), evaluate(f, x2)
    nodes = [x for x in f.xs if x1 < x < x2]
    if not any(x == 0 for x in nodes):
        nodes.append(Fraction(0))
    vals = [evaluate(f, x) for x in nodes]
    if y1 < y2 and all(y1 < v < y2 for v in vals):
        return RadialDeparture(x1, x2, POS, (y1, y2))
    if y2 < y1 and all(y2 < v < y1 for v in vals):
        return RadialDeparture(x1, x2, NEG, (y1, y2))
    return None


@dataclass(frozen=True)
class ValueInterval:
    """An interval of record values with explicit endpoint inclusion."""

    lo: Fraction
    hi: Fraction
    lo_included: bool
    hi_included: bool

    def __contains__(self, v) -> bool:
        v = Fraction(v)
        if v < self.lo or v > self.hi:
            return False
        if v == self.lo and not self.lo_included:
            return False
        if v == self.hi and not self.hi_included:
            return False
        return True

    @property
    def empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_included and self.hi_included)

    def to_json(self) -> dict:
        return {"lo": rat_str(self.lo), "hi": rat_str(self.hi),
                "lo_included": self.lo_included, "hi_included": self.hi_included}


@dataclass(frozen=True)
class PairRectangle:
    """A maximal product block of realizable value pairs: every (y1, y2) with
    y1 in ``y1_range`` and y2 in ``y2_range`` is realized by a radial
    departure of the given orientation.  The witness fields pin the record
    corner: the pair of contour points realizing the extreme values."""

    orientation: str
    y1_range: ValueInterval
    y2_range: ValueInterval
    witness_x1: Fraction
    witness_x2: Fraction
    witness_y1: Fraction
    witness_y2: Fraction

    def to_json(self) -> dict:
        return {
            "orientation": self.orientation,
            "y1_range": self.y1_range.to_json(),
            "y2_range": self.y2_range.to_json(),
            "witness": {
                "x1": rat_str(self.witness_x1),
                "x2": rat_str(self.witness_x2),
                "y1": rat_str(self.witness_y1),
                "y2": rat_str(self.witness_y2),
            },
        }


@dataclass(frozen=True)
class RadialProfile:
    rectangles: tuple[PairRectangle, ...]
    has_positive: bool
    has_negative: bool

    def canonical_pairs(self) -> tuple[RadialDeparture, ...]:
        """One record-level radial departure per rectangle."""
        return tuple(
            RadialDeparture(r.witness_x1, r.witness_x2, r.orientation,
                            (r.witness_y1, r.witness_y2))
            for r in self.rectangles
        )

    def to_json(self) -> dict:
        return {
            "has_positive": self.has_positive,
            "has_negative": self.has_negative,
            "pairs": [r.to_json() for r in self.rectangles],
        }


def radial_profile(f: PLMap) -> RadialProfile:
    """Enumerate the full value-pair set of f as record-level rectangles.

    Positive pairs: x1 ranges over a negative block of the left half, x2
    over a positive block of the right half; the blocks contribute the pairs
    with y1 below the right block's co-record and y2 above the left block's
    co-record.  Negative pairs are symmetric.
    """
    require_centered(f)
    left, right = split_halves(f)
    lrep = contour.departures(left)
    rrep = contour.departures(right)

    rects: list[PairRectangle] = []
    for lb in lrep.blocks:
        for rb in rrep.blocks:
            if lb.orientation == NEG and rb.orientation == POS:
                rect = _positive_rect(lb, rb)
            elif lb.orientation == POS and rb.orientation == NEG:
                rect = _negative_rect(lb, rb)
            else:
                rect = None
            if rect is not None:
                rects.append(rect)

    rects.sort(key=lambda r: (r.orientation, r.witness_x2, r.witness_x1))
    return RadialProfile(
        rectangles=tuple(rects),
        has_positive=any(r.orientation == POS for r in rects),
        has_negative=any(r.orientation == NEG for r in rects),
    )


def _positive_rect(lb: DepartureBlock, rb: DepartureBlock) -> Optional[PairRectangle]:
    # y1 runs over the left block's records [record, prev_record) cut by the
    # strict bound y1 < min f([0, x2)) = rb.co_record.
    y1_hi = min(lb.prev_record, rb.co_record)
    y1 = ValueInterval(lb.record, y1_hi, True, False)
    # y2 runs over (prev_record, record] cut by y2 > max f((x1, 0]) = lb.co_record.
    y2_lo = max(rb.prev_record, lb.co_record)
    y2 = ValueInterval(y2_lo, rb.record, False, True)
    if y1.empty or y2.empty or lb.record >= y1_hi or rb.record <= y2_lo:
        return None
    return PairRectangle(POS, y1, y2, -lb.contour_point, rb.contour_point,
                         lb.record, rb.record)


def _negative_rect(lb: DepartureBlock, rb: DepartureBlock) -> Optional[PairRectangle]:
    # y1 > 0 over the left positive block, cut by y1 > max f([0, x2)).
    y1_lo = max(lb.prev_record, rb.co_record)
    y1 = ValueInterval(y1_lo, lb.record, False, True)
    # y2 < 0 over the right negative block, cut by y2 < min f((x1, 0]).
    y2_hi = min(rb.prev_record, lb.co_record)
    y2 = ValueInterval(rb.record, y2_hi, True, False)
    if y1.empty or y2.empty or lb.record <= y1_lo or rb.record >= y2_hi:
        return None
    return PairRectangle(NEG, y1, y2, -lb.contour_point, rb.contour_point,
                         lb.record, rb.record)


def _pair_member(rects: tuple[PairRectangle, ...], orientation: str,
                 y1: Fraction, y2: Fraction) -> bool:
    return any(
        r.orientation == orientation and y1 in r.y1_range and y2 in r.y2_range
        for r in rects
    )


def _axis_samples(values: set[Fraction]) -> list[Fraction]:
    vs = sorted(values)
    samples = list(vs)
    samples += [(a + b) / 2 for a, b in zip(vs, vs[1:])]
    return samples


def same_radial_departures(f: PLMap, g: PLMap) -> bool:
    """Exact equality of the two maps' realizable value-pair sets.

    Both sets are finite unions of rectangles whose endpoints are record
    values, so membership is constant on the cells of the arrangement those
    endpoints induce; comparing on every endpoint and every cell midpoint
    decides equality.
    """
    pf, pg = radial_profile(f), radial_profile(g)
    for orientation in (POS, NEG):
        rects = tuple(r for r in pf.rectangles + pg.rectangles
                      if r.orientation == orientation)
        if not rects:
            continue
        y1_crit = {r.y1_range.lo for r in rects} | {r.y1_range.hi for r in rects}
        y2_crit = {r.y2_range.lo for r in rects} | {r.y2_range.hi for r in rects}
        for y1 in _axis_samples(y1_crit):
            for y2 in _axis_samples(y2_crit):
                if _pair_member(pf.rectangles, orientation, y1, y2) != _pair_member(
                    pg.rectangles, orientation, y1, y2
                ):
                    return False
    return True


def radial_contour_factor(f: PLMap) -> PLMap:
    """Both halves' contour factors glued at 0 into one map on [-1, 1]."""
    require_centered(f)
    left, right = split_halves(f)
    t_right = contour.contour_factor(right)
    t_left = reflect_domain(contour.contour_factor(left))
    return glue(t_left, t_right)


def radial_meandering_factor(f: PLMap) -> PLMap:
    """The canonical sign-preserving s with radial_contour_factor(f) o s = f:
    the two one-sided meandering factors glued at 0."""
    require_centered(f)
    left, right = split_halves(f)
    s_right = contour.meandering_factor(right)
    s_left_reflected = contour.meandering_factor(left)
    s_left = PLMap(
        tuple((-x, -y) for x, y in reversed(s_left_reflected.breakpoints)),
        (Fraction(-1), Fraction(0)),
    )
    out = glue(s_left, s_right)
    return PLMap(out.breakpoints, (Fraction(-1), Fraction(1)))


@dataclass(frozen=True)
class TwinsReport:
    ok: bool
    witness: Optional[dict]

    def to_json(self) -> dict:
        return {"ok": self.ok, "witness": self.witness}


def _sign_near_zero(half: PLMap) -> int:
    """Sign of a one-sided map just past 0 (the first nonzero node value)."""
    for _, y in half.breakpoints[1:]:
        if y != 0:
            return 1 if y > 0 else -1
    raise HypothesisError("half restriction is constant")


def no_contour_twins(f: PLMap) -> TwinsReport:
    """0 must not be a local extremum, and no interior right contour point
    may share its value with an interior left contour point."""
    require_centered(f)
    left, right = split_halves(f)
    sig_right = _sign_near_zero(right)
    sig_left = _sign_near_zero(left)
    if sig_right == sig_left:
        kind = "local_minimum" if sig_right > 0 else "local_maximum"
        return TwinsReport(False, {"kind": kind})

    a, b = f.domain
    right_cps = [(x, v) for x, v in contour.contour_points(right) if x < b]
    left_cps = [(-x, v) for x, v in contour.contour_points(left) if x < -a]
    for rx, rv in right_cps:
        for lx, lv in left_cps:
            if rv == lv:
                return TwinsReport(False, {
                    "kind": "twin",
                    "right": [rat_str(rx), rat_str(rv)],
                    "left": [rat_str(lx), rat_str(lv)],
                })
    return TwinsReport(True, None)
