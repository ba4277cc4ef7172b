"""Independent brute-force oracles the test suite checks the library against.

Nothing here reuses the library's sweep/profile algorithms: departures are
decided straight from the definition (a strict record over every earlier
breakpoint), prior images are assembled from raw breakpoint scans, and the
radial flags come from an exhaustive integer scan over the 1/200 coordinate
grid.  The grid scan is exact for corpus maps because their breakpoints sit
on the (1/5)-lattice with (1/10)-lattice values (see arcembed.corpus).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from arcembed.plmap import PLMap, evaluate


# -- elementary geometry oracles -------------------------------------------


def line_value(p0, p1, x):
    """Two-point line formula, written independently of PLMap.evaluate."""
    (x0, y0), (x1, y1) = p0, p1
    return y0 + (y1 - y0) * (Fraction(x) - x0) / (x1 - x0)


def bisect_zero(f, lo, hi, steps: int = 80) -> Fraction:
    """Sign-change bisection for a continuous f on [lo, hi]; rational
    midpoints, so the bracket stays exact."""
    lo, hi = Fraction(lo), Fraction(hi)
    flo, fhi = f(lo), f(hi)
    assert flo * fhi <= 0, "no sign change in bracket"
    for _ in range(steps):
        mid = (lo + hi) / 2
        fmid = f(mid)
        if fmid == 0:
            return mid
        if flo * fmid < 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return (lo + hi) / 2


# -- departures from the definition -----------------------------------------


def is_departure(f: PLMap, x) -> str | None:
    """Definition check: f(x) is a strict record over [0, x).  For a PL map
    it is enough to compare against every breakpoint before x."""
    x = Fraction(x)
    if x <= 0:
        return None
    fx = evaluate(f, x)
    before = [y for bx, y in f.breakpoints if bx < x] + [Fraction(0)]
    if all(y < fx for y in before):
        return "pos"
    if all(y > fx for y in before):
        return "neg"
    return None


def prior_image(f: PLMap, x) -> tuple[Fraction, bool, Fraction, bool]:
    """f([0, x)) as (lo, lo_included, hi, hi_included), by raw scan."""
    x = Fraction(x)
    fx = evaluate(f, x)
    before = [y for bx, y in f.breakpoints if bx < x] + [Fraction(0)]
    lo, hi = min(before), max(before)
    lo_inc = hi_inc = True
    if fx < lo:
        lo, lo_inc = fx, False
    if fx > hi:
        hi, hi_inc = fx, False
    return lo, lo_inc, hi, hi_inc


def _level_crossings(f: PLMap, level: Fraction) -> list[Fraction]:
    """All x with f(x) = level (isolated crossings; plateau endpoints)."""
    out = []
    for (x0, y0), (x1, y1) in zip(f.breakpoints, f.breakpoints[1:]):
        if y0 == y1:
            if y0 == level:
                out += [x0, x1]
            continue
        lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
        if lo <= level <= hi:
            out.append(x0 + (level - y0) * (x1 - x0) / (y1 - y0))
    return sorted(set(out))


def departure_candidates(f: PLMap, g: PLMap) -> list[Fraction]:
    """Candidate departure points of f that are guaranteed to expose any
    block-structure difference between f and g: breakpoints, crossings of
    every breakpoint level of either map, and crossings of the midlevels in
    between."""
    levels = sorted({y for _, y in f.breakpoints} | {y for _, y in g.breakpoints}
                    | {Fraction(0)})
    levels += [(a + b) / 2 for a, b in zip(levels, levels[1:])]
    xs = {x for x, _ in f.breakpoints}
    for level in levels:
        xs.update(_level_crossings(f, level))
    return sorted(x for x in xs if x > 0)


def matcher_verdict(f: PLMap, g: PLMap) -> bool:
    """Brute-force biconditional: every departure of f has a departure of g
    with the same prior image and value, and vice versa."""

    def one_way(a: PLMap, b: PLMap) -> bool:
        for x in departure_candidates(a, b):
            if is_departure(a, x) is None:
                continue
            target = evaluate(a, x)
            image = prior_image(a, x)
            hits = [
                xb
                for xb in _level_crossings(b, target)
                if xb > 0 and is_departure(b, xb) is not None
                and prior_image(b, xb) == image
            ]
            if not hits:
                return False
        return True

    return one_way(f, g) and one_way(g, f)


# -- brute-force radial scan -------------------------------------------------


def grid_values(f: PLMap, resolution: int = 200) -> tuple[list[int], int]:
    """f sampled on the k/resolution grid, rescaled to exact integers."""
    pts = [evaluate(f, Fraction(k, resolution)) for k in range(-resolution, resolution + 1)]
    scale = lcm(*[p.denominator for p in pts])
    return [int(p * scale) for p in pts], scale


def grid_radial_flags(f: PLMap, resolution: int = 200) -> tuple[bool, bool]:
    """(has_positive, has_negative) by exhaustive scan over all grid pairs
    (x1, x2) with x1 < 0 < x2 at the given resolution.

    Exact for maps whose breakpoints lie on the grid (corpus maps at
    resolution 200): the interior extrema of a PL map sit at breakpoints.
    """
    vals, _ = grid_values(f, resolution)
    n = resolution
    center = n
    size = 2 * n + 1

    lmax = [0] * size
    lmin = [0] * size
    lmax[center] = lmin[center] = vals[center]
    for i in range(center - 1, -1, -1):
        lmax[i] = max(vals[i], lmax[i + 1])
        lmin[i] = min(vals[i], lmin[i + 1])
    rmax = [0] * size
    rmin = [0] * size
    rmax[center] = rmin[center] = vals[center]
    for j in range(center + 1, size):
        rmax[j] = max(vals[j], rmax[j - 1])
        rmin[j] = min(vals[j], rmin[j - 1])

    has_pos = has_neg = False
    for i in range(center):
        y1 = vals[i]
        for j in range(center + 1, size):
            y2 = vals[j]
            if y1 == y2:
                continue
            interior_max = max(lmax[i + 1], rmax[j - 1])
            interior_min = min(lmin[i + 1], rmin[j - 1])
            if y1 < y2:
                if not has_pos and interior_max < y2 and interior_min > y1:
                    has_pos = True
            else:
                if not has_neg and interior_max < y1 and interior_min > y2:
                    has_neg = True
            if has_pos and has_neg:
                return True, True
    return has_pos, has_neg


def grid_radial_pairs(f: PLMap, resolution: int = 200):
    """All grid pairs that are radial departures, as (x1, x2, orientation)."""
    vals, scale = grid_values(f, resolution)
    n = resolution
    center = n
    size = 2 * n + 1
    out = []
    for i in range(center):
        for j in range(center + 1, size):
            y1, y2 = vals[i], vals[j]
            interior = vals[i + 1:j]
            if y1 < y2 and all(y1 < v < y2 for v in interior):
                out.append((Fraction(i - n, n), Fraction(j - n, n), "pos"))
            elif y2 < y1 and all(y2 < v < y1 for v in interior):
                out.append((Fraction(i - n, n), Fraction(j - n, n), "neg"))
    return out


# -- composition rule oracle --------------------------------------------------


def composition_rule(check_g, check_f_of):
    """Expected classification of <x1, x2> for f o g from g's classification
    and f's classification at the (possibly swapped) image pair.

    ``check_g`` is the RadialDeparture-or-None for g at <x1, x2>;
    ``check_f_of(u1, u2)`` classifies f at an image pair.
    Returns "pos", "neg", or None.
    """
    if check_g is None:
        return None
    u1, u2 = check_g.values
    if check_g.orientation == "pos":
        inner = check_f_of(u1, u2)
        return None if inner is None else inner.orientation
    inner = check_f_of(u2, u1)
    if inner is None:
        return None
    return "pos" if inner.orientation == "neg" else "neg"
