"""Seeded random map generators for tests, demos, and oracle sweeps.

Generated maps keep their breakpoints on the x-lattice (1/5)Z and their
values on the y-lattice (1/10)Z.  That makes every record interval at least
1/10 long and every slope at most 10, so a radial departure, when one
exists, always has a witness pair on the 1/200 coordinate grid; the
brute-force grid oracle is then exact for these maps rather than merely
approximate.  Maps have at most 5 segments per half (10 total).
"""

from __future__ import annotations

from fractions import Fraction
from random import Random

from .plmap import PLMap, from_pairs

X_DEN = 5
Y_DEN = 10


def _half_values(rng: Random, n_segments: int, hit: Fraction | None = None,
                 lo: int = -Y_DEN, hi: int = Y_DEN) -> list[Fraction]:
    """Random nonzero-somewhere value list for one half (excluding the 0 at
    the center).  Optionally force one value to ``hit``."""
    while True:
        vals = [Fraction(rng.randint(lo, hi), Y_DEN) for _ in range(n_segments)]
        if any(v != 0 for v in vals):
            break
    if hit is not None:
        vals[rng.randrange(n_segments)] = hit
    return vals


def _half_xs(rng: Random, n_segments: int) -> list[Fraction]:
    """Sorted interior breakpoints plus the far endpoint, on the x-lattice."""
    interior = rng.sample(range(1, X_DEN), n_segments - 1)
    return [Fraction(i, X_DEN) for i in sorted(interior)] + [Fraction(1)]


def random_centered_map(rng: Random, max_half_segments: int = 5) -> PLMap:
    """A random centered, half-nonconstant map on [-1, 1]."""
    nl = rng.randint(1, max_half_segments)
    nr = rng.randint(1, max_half_segments)
    left_xs = _half_xs(rng, nl)
    right_xs = _half_xs(rng, nr)
    left_vs = _half_values(rng, nl)
    right_vs = _half_values(rng, nr)
    pts = [(-x, v) for x, v in zip(reversed(left_xs), reversed(left_vs))]
    pts.append((Fraction(0), Fraction(0)))
    pts += list(zip(right_xs, right_vs))
    return from_pairs(pts)


def random_onesided_map(rng: Random, max_segments: int = 5) -> PLMap:
    """A random nonconstant map on [0, 1] with f(0) = 0."""
    n = rng.randint(1, max_segments)
    xs = _half_xs(rng, n)
    vs = _half_values(rng, n)
    return from_pairs([(Fraction(0), Fraction(0))] + list(zip(xs, vs)))


def random_onto_half(rng: Random, max_segments: int = 5) -> PLMap:
    """A random onto map [0, 1] -> [0, 1] with s(0) = 0 (so min 0, max 1)."""
    n = rng.randint(1, max_segments)
    xs = _half_xs(rng, n)
    vs = _half_values(rng, n, hit=Fraction(1), lo=0, hi=Y_DEN)
    return from_pairs([(Fraction(0), Fraction(0))] + list(zip(xs, vs)),
                      codomain=(0, 1))


def random_sign_preserving_onto(rng: Random, max_half_segments: int = 5) -> PLMap:
    """A random sign-preserving map on [-1, 1] whose halves are onto [-1, 0]
    and [0, 1] respectively.  Precomposing any centered map with one of these
    preserves its radial contour factor."""
    nl = rng.randint(1, max_half_segments)
    nr = rng.randint(1, max_half_segments)
    left_xs = _half_xs(rng, nl)
    right_xs = _half_xs(rng, nr)
    left_vs = _half_values(rng, nl, hit=Fraction(1), lo=0, hi=Y_DEN)
    right_vs = _half_values(rng, nr, hit=Fraction(1), lo=0, hi=Y_DEN)
    pts = [(-x, -v) for x, v in zip(reversed(left_xs), reversed(left_vs))]
    pts.append((Fraction(0), Fraction(0)))
    pts += list(zip(right_xs, right_vs))
    return from_pairs(pts)


def corpus(seed: int, size: int, max_half_segments: int = 5) -> list[PLMap]:
    """The deterministic test corpus: ``size`` random centered maps."""
    rng = Random(seed)
    return [random_centered_map(rng, max_half_segments) for _ in range(size)]
