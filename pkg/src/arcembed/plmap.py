"""Exact piecewise-linear maps on closed rational intervals.

Every coordinate is a :class:`fractions.Fraction`; all arithmetic and all
comparisons are exact.  A :class:`PLMap` is stored normalized: breakpoints
strictly increasing in x, collinear interior breakpoints removed.  Equality of
maps is equality of normalized breakpoint lists.

Maps are immutable; every operation here is a pure function, so values can be
shared freely between threads.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    BoundaryError,
    CenterError,
    CompositionError,
    DomainError,
    MapFormatError,
)

Rational = Fraction
RationalLike = Union[Fraction, int, str]

#: Default codomain for maps built without an explicit one.
UNIT_CODOMAIN = (Fraction(-1), Fraction(1))


def rat(value: RationalLike) -> Fraction:
    """Parse a rational written as ``p/q``, an integer string, an int, or a
    Fraction.  Floats are rejected on purpose: they would smuggle rounding
    into exact comparisons."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise MapFormatError(f"bad rational literal {value!r}") from exc
    raise MapFormatError(f"bad rational literal {value!r} (floats not accepted)")


def rat_str(value: Fraction) -> str:
    """Serialize a rational as ``p/q`` or a bare integer string."""
    return str(value)


def _normalize(points: Sequence[tuple[Fraction, Fraction]]) -> tuple[tuple[Fraction, Fraction], ...]:
    """Drop collinear interior breakpoints.  Never changes pointwise values."""
    if len(points) <= 2:
        return tuple(points)
    out = list(points)
    i = 1
    while i < len(out) - 1:
        (x0, y0), (x1, y1), (x2, y2) = out[i - 1], out[i], out[i + 1]
        if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
            del out[i]
            if i > 1:
                i -= 1
        else:
            i += 1
    return tuple(out)


@dataclass(frozen=True)
class MapFlags:
    """Result of :func:`validate`."""

    centered: bool
    half_nonconstant: bool
    onto: bool
    sign_preserving: bool


@dataclass(frozen=True)
class PLMap:
    """A piecewise-linear map given by its ordered breakpoint list.

    ``breakpoints`` is a tuple of (x, y) pairs with x strictly increasing;
    the domain is [first x, last x] and evaluation is the unique PL
    interpolation of the breakpoints.  ``codomain`` is carried as metadata
    (values are checked against it at construction) and does not participate
    in equality.
    """

    breakpoints: tuple[tuple[Fraction, Fraction], ...]
    codomain: tuple[Fraction, Fraction] = field(default=UNIT_CODOMAIN, compare=False)

    def __post_init__(self) -> None:
        pts = [(rat(x), rat(y)) for x, y in self.breakpoints]
        if len(pts) < 2:
            raise MapFormatError("a PL map needs at least 2 breakpoints")
        lo, hi = rat(self.codomain[0]), rat(self.codomain[1])
        if lo >= hi:
            raise MapFormatError("codomain must be a nondegenerate interval")
        for i in range(1, len(pts)):
            if pts[i][0] <= pts[i - 1][0]:
                raise MapFormatError(
                    f"breakpoint x values must be strictly increasing "
                    f"(offending x = {pts[i][0]})"
                )
        for x, y in pts:
            if not (lo <= y <= hi):
                raise MapFormatError(f"value {y} at x = {x} outside codomain [{lo}, {hi}]")
        object.__setattr__(self, "breakpoints", _normalize(pts))
        object.__setattr__(self, "codomain", (lo, hi))

    # -- basic queries ----------------------------------------------------

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return (self.breakpoints[0][0], self.breakpoints[-1][0])

    @property
    def xs(self) -> tuple[Fraction, ...]:
        return tuple(p[0] for p in self.breakpoints)

    @property
    def ys(self) -> tuple[Fraction, ...]:
        return tuple(p[1] for p in self.breakpoints)

    def __call__(self, x: RationalLike) -> Fraction:
        return evaluate(self, rat(x))

    def value_range(self) -> tuple[Fraction, Fraction]:
        """Exact (min, max) of the map; PL extremes sit at breakpoints."""
        ys = self.ys
        return (min(ys), max(ys))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        pts = ", ".join(f"({x},{y})" for x, y in self.breakpoints)
        return f"PLMap[{pts}]"


# -- constructors ---------------------------------------------------------


def from_pairs(
    pairs: Iterable[tuple[RationalLike, RationalLike]],
    codomain: tuple[RationalLike, RationalLike] = UNIT_CODOMAIN,
) -> PLMap:
    return PLMap(tuple((rat(x), rat(y)) for x, y in pairs), (rat(codomain[0]), rat(codomain[1])))


def identity_map(
    lo: RationalLike = -1,
    hi: RationalLike = 1,
    codomain: tuple[RationalLike, RationalLike] | None = None,
) -> PLMap:
    lo, hi = rat(lo), rat(hi)
    return from_pairs([(lo, lo), (hi, hi)], codomain or (lo, hi))


def negation_map() -> PLMap:
    return from_pairs([(-1, 1), (1, -1)])


def constant_map(lo: RationalLike, hi: RationalLike, value: RationalLike,
                 codomain: tuple[RationalLike, RationalLike] = UNIT_CODOMAIN) -> PLMap:
    return from_pairs([(lo, value), (hi, value)], codomain)


# -- evaluation and algebra ------------------------------------------------


def evaluate(f: PLMap, x: RationalLike) -> Fraction:
    """Exact PL interpolation at ``x``; raises DomainError outside the domain."""
    x = rat(x)
    a, b = f.domain
    if not (a <= x <= b):
        raise DomainError(f"x = {x} outside domain [{a}, {b}]")
    xs = f.xs
    i = bisect_right(xs, x)
    if i == len(xs):
        return f.breakpoints[-1][1]
    if xs[i - 1] == x:
        return f.breakpoints[i - 1][1]
    (x0, y0), (x1, y1) = f.breakpoints[i - 1], f.breakpoints[i]
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0)


def restrict(f: PLMap, lo: RationalLike, hi: RationalLike) -> PLMap:
    """Restriction of ``f`` to [lo, hi] (a subinterval of its domain)."""
    lo, hi = rat(lo), rat(hi)
    a, b = f.domain
    if not (a <= lo < hi <= b):
        raise DomainError(f"[{lo}, {hi}] is not a subinterval of [{a}, {b}]")
    pts = [(lo, evaluate(f, lo))]
    pts += [(x, y) for x, y in f.breakpoints if lo < x < hi]
    pts.append((hi, evaluate(f, hi)))
    return PLMap(tuple(pts), f.codomain)


def reflect_domain(f: PLMap) -> PLMap:
    """g(x) = f(-x) on the mirrored domain.  Used to fold left halves into
    the one-sided machinery through r(x) = -x."""
    pts = tuple((-x, y) for x, y in reversed(f.breakpoints))
    return PLMap(pts, f.codomain)


def negate(f: PLMap) -> PLMap:
    """-f, with the codomain mirrored."""
    lo, hi = f.codomain
    return PLMap(tuple((x, -y) for x, y in f.breakpoints), (-hi, -lo))


def glue(left: PLMap, right: PLMap) -> PLMap:
    """Concatenate two maps whose domains meet at a single point where their
    values agree."""
    if left.domain[1] != right.domain[0]:
        raise DomainError("glue point mismatch")
    if left.breakpoints[-1][1] != right.breakpoints[0][1]:
        raise DomainError("glued maps disagree at the junction")
    lo = min(left.codomain[0], right.codomain[0])
    hi = max(left.codomain[1], right.codomain[1])
    return PLMap(left.breakpoints + right.breakpoints[1:], (lo, hi))


def compose(f: PLMap, g: PLMap) -> PLMap:
    """Exact f o g.  Breakpoints are g's breakpoints together with the
    preimages under g of f's breakpoints; requires range(g) within domain(f)."""
    g_lo, g_hi = g.value_range()
    f_a, f_b = f.domain
    if g_lo < f_a or g_hi > f_b:
        raise CompositionError(
            f"range of inner map [{g_lo}, {g_hi}] escapes domain [{f_a}, {f_b}]"
        )
    cuts = set(g.xs)
    f_levels = f.xs
    for (x0, y0), (x1, y1) in zip(g.breakpoints, g.breakpoints[1:]):
        if y0 == y1:
            continue
        lo, hi = (y0, y1) if y0 < y1 else (y1, y0)
        for level in f_levels:
            if lo < level < hi:
                cuts.add(x0 + (level - y0) * (x1 - x0) / (y1 - y0))
    xs = sorted(cuts)
    pts = tuple((x, evaluate(f, evaluate(g, x))) for x in xs)
    return PLMap(pts, f.codomain)


def linear_combine(
    a: RationalLike, f: PLMap, b: RationalLike, g: PLMap,
    codomain: tuple[RationalLike, RationalLike] | None = None,
) -> PLMap:
    """a*f + b*g for maps on the same domain (exact; PL is closed under
    linear combinations)."""
    if f.domain != g.domain:
        raise DomainError("linear_combine needs equal domains")
    a, b = rat(a), rat(b)
    xs = sorted(set(f.xs) | set(g.xs))
    pts = tuple((x, a * evaluate(f, x) + b * evaluate(g, x)) for x in xs)
    if codomain is None:
        ys = [p[1] for p in pts]
        codomain = (min(ys), max(ys)) if min(ys) < max(ys) else (min(ys) - 1, max(ys) + 1)
    return from_pairs(pts, codomain)


def invert_monotone(f: PLMap, codomain: tuple[RationalLike, RationalLike] | None = None) -> PLMap:
    """Inverse of a strictly monotone PL map (as a PLMap on its value range)."""
    ys = f.ys
    increasing = all(b > a for a, b in zip(ys, ys[1:]))
    decreasing = all(b < a for a, b in zip(ys, ys[1:]))
    if not (increasing or decreasing):
        raise DomainError("invert_monotone needs a strictly monotone map")
    pairs = [(y, x) for x, y in f.breakpoints]
    if decreasing:
        pairs.reverse()
    return from_pairs(pairs, codomain or f.domain)


# -- recentring ------------------------------------------------------------


def _two_piece_homeo(domain: tuple[Fraction, Fraction], pivot: Fraction) -> PLMap:
    """The PL homeomorphism of ``domain`` fixing the endpoints and sending
    ``pivot`` to 0 (two linear pieces)."""
    a, b = domain
    if not (a < pivot < b):
        raise BoundaryError(f"pivot {pivot} must be interior to [{a}, {b}]")
    if not (a < 0 < b):
        raise BoundaryError(f"domain [{a}, {b}] must contain 0 in its interior")
    return from_pairs([(a, a), (pivot, 0), (b, b)], (a, b))


def recenter(f: PLMap, p: RationalLike, q: RationalLike) -> PLMap:
    """Conjugate ``f`` by the canonical two-piece homeomorphisms sending the
    codomain point ``p`` and the domain point ``q`` to 0, so the result g
    satisfies g(0) = 0.  Requires f(q) = p with both pivots interior."""
    p, q = rat(p), rat(q)
    if evaluate(f, q) != p:
        raise CenterError(f"f({q}) = {evaluate(f, q)} != {p}")
    h = _two_piece_homeo(f.codomain, p)
    h_tilde = _two_piece_homeo(f.domain, q)
    h_tilde_inv = invert_monotone(h_tilde, codomain=f.domain)
    return compose(h, compose(f, h_tilde_inv))


# -- validation ------------------------------------------------------------


def is_centered(f: PLMap) -> bool:
    a, b = f.domain
    return a <= 0 <= b and evaluate(f, Fraction(0)) == 0


def _nonconstant_on(f: PLMap, lo: Fraction, hi: Fraction) -> bool:
    if lo >= hi:
        return False
    sub = restrict(f, lo, hi)
    ys = sub.ys
    return any(y != ys[0] for y in ys)


def is_half_nonconstant(f: PLMap) -> bool:
    a, b = f.domain
    if not (a < 0 < b):
        return False
    return _nonconstant_on(f, a, Fraction(0)) and _nonconstant_on(f, Fraction(0), b)


def validate(f: PLMap) -> MapFlags:
    """Compute the standing-hypothesis flags exactly from the breakpoints."""
    lo, hi = f.value_range()
    onto = lo == f.codomain[0] and hi == f.codomain[1]
    sign_ok = all(y >= 0 for x, y in f.breakpoints if x >= 0) and all(
        y <= 0 for x, y in f.breakpoints if x <= 0
    )
    # Sign preservation is about values over x >= 0 and x <= 0; segments that
    # straddle 0 need the value at 0 itself checked too.
    a, b = f.domain
    if a < 0 < b:
        sign_ok = sign_ok and evaluate(f, Fraction(0)) == 0

    return MapFlags(
        centered=is_centered(f),
        half_nonconstant=is_half_nonconstant(f),
        onto=onto,
        sign_preserving=sign_ok,
    )


# -- JSON interchange -------------------------------------------------------


def map_to_json(f: PLMap, provenance: str | None = None) -> dict:
    doc: dict = {
        "domain": [rat_str(f.domain[0]), rat_str(f.domain[1])],
        "codomain": [rat_str(f.codomain[0]), rat_str(f.codomain[1])],
        "breakpoints": [[rat_str(x), rat_str(y)] for x, y in f.breakpoints],
    }
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def map_from_json(doc: dict) -> PLMap:
    if not isinstance(doc, dict) or "breakpoints" not in doc:
        raise MapFormatError("map document needs a 'breakpoints' array")
    raw = doc["breakpoints"]
    if not isinstance(raw, list) or any(len(p) != 2 for p in raw):
        raise MapFormatError("'breakpoints' must be a list of [x, y] pairs")
    pts = [(rat(x), rat(y)) for x, y in raw]
    for (x0, _), (x1, _) in zip(pts, pts[1:]):
        if x1 == x0:
            raise MapFormatError(f"duplicate breakpoint x = {x0}")
        if x1 < x0:
            raise MapFormatError("breakpoints out of order")
    codomain = doc.get("codomain", ["-1", "1"])
    f = PLMap(tuple(pts), (rat(codomain[0]), rat(codomain[1])))
    if "domain" in doc:
        lo, hi = rat(doc["domain"][0]), rat(doc["domain"][1])
        if (lo, hi) != f.domain:
            raise MapFormatError(
                f"declared domain [{lo}, {hi}] does not match breakpoints "
                f"[{f.domain[0]}, {f.domain[1]}]"
            )
    return f
