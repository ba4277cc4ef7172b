"""One-sided departures, contour points, contour factors, meandering factors.

All operations here act on a PL map defined on [0, b] with f(0) = 0 and f not
constant.  A *departure* is a point x > 0 whose value is a strict new record:
f(x) lies outside the image of [0, x).  For a continuous map this is
equivalent to f(y) < f(x) for every y < x (a positive departure) or
f(y) > f(x) for every y < x (a negative departure), which the sweep below
exploits: departures are exactly the points where the running max (running
min) is strictly increasing (decreasing) from the left.

Left halves of centered maps are handled by reflecting them through
r(x) = -x into this module; there is no separate left-side code path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import HypothesisError, InternalConsistencyError
from .plmap import PLMap, compose, evaluate, rat_str

POS = "pos"
NEG = "neg"


@dataclass(frozen=True)
class DepartureRun:
    """A maximal single-segment run (x_lo, x_hi] of departures.

    Values along the run sweep the record interval (v_lo, v_hi] linearly
    (for negative runs the values decrease from v_lo toward v_hi, which is
    the more extreme record).  ``co_record`` is the opposite-orientation
    record in force while the run happens.
    """

    orientation: str
    x_lo: Fraction
    x_hi: Fraction
    v_lo: Fraction
    v_hi: Fraction
    co_record: Fraction

    def x_at_value(self, v: Fraction) -> Fraction:
        """First attainment point of record value v within this run."""
        if self.v_hi == self.v_lo:
            raise InternalConsistencyError("degenerate departure run")
        w = (v - self.v_lo) / (self.v_hi - self.v_lo)
        if not (0 < w <= 1):
            raise InternalConsistencyError(f"value {v} outside run records")
        return self.x_lo + w * (self.x_hi - self.x_lo)


@dataclass(frozen=True)
class DepartureBlock:
    """A maximal group of consecutive same-orientation departure runs.

    The block's final departure is its contour point; its record value is the
    block's extreme.  ``prev_record`` is the same-orientation record before
    the block started (0 for the first block of each orientation) and
    ``co_record`` the opposite-orientation record in force during the block,
    i.e. the value of the preceding contour point.
    """

    orientation: str
    runs: tuple[DepartureRun, ...]
    contour_point: Fraction
    record: Fraction
    prev_record: Fraction
    co_record: Fraction

    def contains_value(self, v: Fraction) -> bool:
        """Is v a departure value of this block (record interval membership)?"""
        if self.orientation == POS:
            return self.prev_record < v <= self.record
        return self.record <= v < self.prev_record

    def x_at_value(self, v: Fraction) -> Fraction:
        for run in self.runs:
            if self.orientation == POS and run.v_lo < v <= run.v_hi:
                return run.x_at_value(v)
            if self.orientation == NEG and run.v_hi <= v < run.v_lo:
                return run.x_at_value(v)
        raise InternalConsistencyError(f"value {v} not attained in block")


@dataclass(frozen=True)
class DepartureReport:
    """Departure structure of one half of a map: alternating blocks plus the
    contour point list alpha_1 < ... < alpha_n (alpha_0 = 0 is implicit)."""

    blocks: tuple[DepartureBlock, ...]
    contour_points: tuple[tuple[Fraction, Fraction], ...]

    def to_json(self) -> dict:
        return {
            "blocks": [
                {
                    "orientation": b.orientation,
                    "departures": [
                        {"lo": rat_str(r.x_lo), "hi": rat_str(r.x_hi),
                         "lo_open": True, "hi_open": False}
                        for r in b.runs
                    ],
                    "record_values": {
                        "from": rat_str(b.prev_record),
                        "to": rat_str(b.record),
                        "from_open": True,
                        "to_open": False,
                    },
                    "contour_point": rat_str(b.contour_point),
                }
                for b in self.blocks
            ],
            "contour_points": [
                [rat_str(a), rat_str(v)] for a, v in self.contour_points
            ],
        }


def require_onesided(f: PLMap) -> None:
    """Standing hypothesis for this module: f(0) = 0 with 0 the left domain
    endpoint, f not constant."""
    a, b = f.domain
    if a != 0:
        raise HypothesisError(f"expected a map on [0, b], got domain [{a}, {b}]")
    if f.breakpoints[0][1] != 0:
        raise HypothesisError("hypothesis f(0) = 0 fails")
    if all(y == 0 for y in f.ys):
        raise HypothesisError("map is constant; departures are undefined")


def departures(f: PLMap) -> DepartureReport:
    """Exact departure structure of f via a single breakpoint sweep
    maintaining the running max and min."""
    require_onesided(f)
    runs: list[DepartureRun] = []
    cur_max = Fraction(0)
    cur_min = Fraction(0)
    for (x0, y0), (x1, y1) in zip(f.breakpoints, f.breakpoints[1:]):
        if y1 > y0 and y1 > cur_max:
            if y0 == cur_max:
                xc = x0
            else:
                xc = x0 + (cur_max - y0) * (x1 - x0) / (y1 - y0)
            runs.append(DepartureRun(POS, xc, x1, cur_max, y1, cur_min))
            cur_max = y1
        elif y1 < y0 and y1 < cur_min:
            if y0 == cur_min:
                xc = x0
            else:
                xc = x0 + (cur_min - y0) * (x1 - x0) / (y1 - y0)
            runs.append(DepartureRun(NEG, xc, x1, cur_min, y1, cur_max))
            cur_min = y1

    if not runs:
        raise HypothesisError("map has no departures (constant on its record)")

    blocks: list[DepartureBlock] = []
    group: list[DepartureRun] = [runs[0]]
    for run in runs[1:]:
        if run.orientation == group[-1].orientation:
            group.append(run)
        else:
            blocks.append(_close_block(group))
            group = [run]
    blocks.append(_close_block(group))

    for prev, nxt in zip(blocks, blocks[1:]):
        if prev.orientation == nxt.orientation:
            raise InternalConsistencyError("adjacent blocks share orientation")

    cps = tuple((b.contour_point, b.record) for b in blocks)
    return DepartureReport(tuple(blocks), cps)


def _close_block(group: list[DepartureRun]) -> DepartureBlock:
    first, last = group[0], group[-1]
    if any(r.co_record != first.co_record for r in group):
        raise InternalConsistencyError("co-record drifted inside a block")
    return DepartureBlock(
        orientation=first.orientation,
        runs=tuple(group),
        contour_point=last.x_hi,
        record=last.v_hi,
        prev_record=first.v_lo,
        co_record=first.co_record,
    )


def contour_points(f: PLMap) -> tuple[tuple[Fraction, Fraction], ...]:
    """Ordered (alpha_i, f(alpha_i)) pairs: the final departure of each
    maximal same-orientation block."""
    return departures(f).contour_points


def contour_factor(f: PLMap) -> PLMap:
    """The PL map t on [0, 1] with t(i/n) = f(alpha_i), linear in between."""
    cps = contour_points(f)
    n = len(cps)
    pts = [(Fraction(0), Fraction(0))]
    pts += [(Fraction(i + 1, n), v) for i, (_, v) in enumerate(cps)]
    return PLMap(tuple(pts), f.codomain)


def meandering_factor(f: PLMap) -> PLMap:
    """The canonical s with s(0) = 0 and contour_factor(f) o s = f exactly.

    Between consecutive contour points f stays in the interval spanned by
    their values, so s can be read off as the affine rescaling of f's value
    into the matching lattice cell; past the last contour point the final
    cell is reused with the clamp w in [0, 1].
    """
    report = departures(f)
    cps = report.contour_points
    n = len(cps)
    alphas = [Fraction(0)] + [a for a, _ in cps]
    fvals = [Fraction(0)] + [v for _, v in cps]

    def s_at(x: Fraction) -> Fraction:
        fx = evaluate(f, x)
        if x >= alphas[n]:
            i = n
        else:
            i = 1
            while alphas[i] <= x:
                i += 1
        denom = fvals[i] - fvals[i - 1]
        if denom == 0:
            raise InternalConsistencyError("equal consecutive contour values")
        w = (fx - fvals[i - 1]) / denom
        if not (0 <= w <= 1):
            raise InternalConsistencyError(
                f"value at x = {x} escapes its contour cell (w = {w})"
            )
        return (1 - w) * Fraction(i - 1, n) + w * Fraction(i, n)

    xs = sorted(set(f.xs) | set(alphas))
    pts = tuple((x, s_at(x)) for x in xs)
    return PLMap(pts, (Fraction(0), Fraction(1)))


@dataclass(frozen=True)
class ContourComparison:
    equal: bool
    witness: Optional[dict]

    def to_json(self) -> dict:
        return {"equal": self.equal, "witness": self.witness}


def contour_equivalent(f: PLMap, g: PLMap) -> ContourComparison:
    """Decide t_f = t_g; on failure give a departure of one map whose prior
    image f([0, x)) matches no departure of the other.

    Matching works on block descriptors: a departure x in block i has
    f([0, x)) equal to the interval between the previous contour value
    (inclusive) and f(x) (exclusive), so blocks match iff they agree on
    (orientation, previous contour value, record interval).
    """
    tf, tg = contour_factor(f), contour_factor(g)
    equal = tf == tg
    if equal:
        return ContourComparison(True, None)

    fd = {(b.orientation, b.co_record): b for b in departures(f).blocks}
    gd = {(b.orientation, b.co_record): b for b in departures(g).blocks}

    witness = _unmatched_departure(fd, gd, "first")
    if witness is None:
        witness = _unmatched_departure(gd, fd, "second")
    if witness is None:
        raise InternalConsistencyError(
            "contour factors differ but all departure blocks match"
        )
    return ContourComparison(False, witness)


def _more_extreme(v: Fraction, w: Fraction, orientation: str) -> bool:
    return v > w if orientation == POS else v < w


def _unmatched_departure(side_a: dict, side_b: dict, label: str) -> Optional[dict]:
    """A departure value of some block of side_a not covered by side_b's block
    with the same (orientation, previous contour value) key, or None."""
    for key, block in sorted(side_a.items(), key=lambda kv: kv[1].contour_point):
        other = side_b.get(key)
        orient = block.orientation
        if other is None:
            missing_value = block.record
        elif _more_extreme(block.record, other.record, orient):
            missing_value = block.record
        elif _more_extreme(other.prev_record, block.prev_record, orient):
            # This block starts departing at shallower records than the other;
            # those shallow values are unmatched.  If the intervals are
            # disjoint altogether, the block record itself is unmatched.
            if block.contains_value(other.prev_record):
                missing_value = other.prev_record
            else:
                missing_value = block.record
        else:
            continue
        x = block.x_at_value(missing_value)
        anchor = block.co_record
        if orient == POS:
            prior = {"lo": rat_str(anchor), "hi": rat_str(missing_value),
                     "lo_included": True, "hi_included": False}
        else:
            prior = {"lo": rat_str(missing_value), "hi": rat_str(anchor),
                     "lo_included": False, "hi_included": True}
        return {
            "map": label,
            "x": rat_str(x),
            "value": rat_str(missing_value),
            "orientation": orient,
            "prior_image": prior,
        }
    return None


def recompose(f: PLMap) -> PLMap:
    """compose(contour_factor(f), meandering_factor(f)); equals f exactly."""
    return compose(contour_factor(f), meandering_factor(f))
