"""Contour stability, the stitched factor, and inverse-system reindexing.

Given composable centered maps f1, f2 with stable radial contour factor
(t of f1 equals t of f1 o f2) and both maps free of contour twins, the
stitched factor glues the radial meandering factor of f1 o f2 on [-1, 0]
with s1 o f2 on (0, 1], where s1 is the radial meandering factor of f1.
The result recomposes through t exactly, and composing it with the radial
contour factor of the next map downstream yields a map with no negative
radial departures, which is what the embedding pipeline needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import InternalConsistencyError, StitchPreconditionError
from .plmap import PLMap, compose, glue, restrict
from .radial import (
    RadialDeparture,
    no_contour_twins,
    radial_contour_factor,
    radial_meandering_factor,
    radial_profile,
    require_centered,
)

STANDARD = "standard"
SWAPPED = "swapped"


def contour_stable(f: PLMap, g: PLMap) -> bool:
    """True when f and f o g have the same radial contour factor."""
    require_centered(f)
    require_centered(g)
    return radial_contour_factor(f) == radial_contour_factor(compose(f, g))


@dataclass(frozen=True)
class StitchResult:
    s_tilde: PLMap
    s1: PLMap
    s12: PLMap
    t1: PLMap
    f1: PLMap
    f2: PLMap
    composite: PLMap
    variant: str
    recomposes: bool
    hypotheses_checked: bool

    def to_json(self) -> dict:
        from .plmap import map_to_json

        return {
            "variant": self.variant,
            "recomposes": self.recomposes,
            "hypotheses_checked": self.hypotheses_checked,
            "s_tilde": map_to_json(self.s_tilde),
            "s1": map_to_json(self.s1),
            "s12": map_to_json(self.s12),
            "t1": map_to_json(self.t1),
        }


def stitched_factor(
    f1: PLMap,
    f2: PLMap,
    variant: str = STANDARD,
    check_hypotheses: bool = True,
) -> StitchResult:
    """Build the stitched factor for the pair (f1, f2).

    With ``check_hypotheses`` the stability and no-contour-twins
    preconditions are enforced and a violation raises
    :class:`StitchPreconditionError` naming the failed hypothesis.  Passing
    ``check_hypotheses=False`` computes the formula regardless, which is how
    the bundled counterexample data exercises the failure mode.
    """
    if variant not in (STANDARD, SWAPPED):
        raise ValueError(f"unknown variant {variant!r}")
    require_centered(f1)
    require_centered(f2)

    composite = compose(f1, f2)
    t1 = radial_contour_factor(f1)

    if check_hypotheses:
        if radial_contour_factor(composite) != t1:
            raise StitchPreconditionError(
                "contour_stable",
                "radial contour factor of f1 o f2 differs from that of f1",
            )
        for name, m in (("f1", f1), ("f2", f2)):
            report = no_contour_twins(m)
            if not report.ok:
                raise StitchPreconditionError(
                    f"no_contour_twins({name})",
                    f"{name} has contour twins: {report.witness}",
                )

    s1 = radial_meandering_factor(f1)
    s12 = radial_meandering_factor(composite)
    s1f2 = compose(s1, f2)

    if variant == STANDARD:
        left = restrict(s12, Fraction(-1), Fraction(0))
        right = restrict(s1f2, Fraction(0), Fraction(1))
    else:
        left = restrict(s1f2, Fraction(-1), Fraction(0))
        right = restrict(s12, Fraction(0), Fraction(1))
    s_tilde = glue(left, right)
    s_tilde = PLMap(s_tilde.breakpoints, (Fraction(-1), Fraction(1)))

    recomposes = compose(t1, s_tilde) == composite
    if check_hypotheses and variant == STANDARD and not recomposes:
        raise InternalConsistencyError(
            "stitched factor fails to recompose despite hypotheses"
        )
    return StitchResult(
        s_tilde=s_tilde,
        s1=s1,
        s12=s12,
        t1=t1,
        f1=f1,
        f2=f2,
        composite=composite,
        variant=variant,
        recomposes=recomposes,
        hypotheses_checked=check_hypotheses,
    )


@dataclass(frozen=True)
class StitchVerification:
    ok: bool
    witness: Optional[RadialDeparture]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def verify_stitch(result: StitchResult, f3: PLMap) -> StitchVerification:
    """Check that s-tilde composed with the radial contour factor of f3 has
    no negative radial departures.

    When every hypothesis of the construction holds this cannot fail; a
    negative departure in that situation is an implementation bug and raises
    :class:`InternalConsistencyError` instead of reporting not-ok.
    """
    require_centered(f3)
    t3 = radial_contour_factor(f3)
    composed = compose(result.s_tilde, t3)
    profile = radial_profile(composed)
    if not profile.has_negative:
        return StitchVerification(True, None)

    witness = _outermost_negative(profile)
    if (
        result.hypotheses_checked
        and result.variant == STANDARD
        and contour_stable(result.f2, f3)
    ):
        raise InternalConsistencyError(
            "negative radial departure of s-tilde o t3 despite all hypotheses; "
            f"witness {witness}"
        )
    return StitchVerification(False, witness)


def _outermost_negative(profile) -> RadialDeparture:
    candidates = [p for p in profile.canonical_pairs() if p.orientation == "neg"]
    return min(candidates, key=lambda p: (p.x1, -p.x2))


@dataclass(frozen=True)
class SystemReindex:
    original: tuple[PLMap, ...]
    derived: tuple[PLMap, ...]
    stitches: tuple[StitchResult, ...]
    coordinate_map: str

    def to_json(self) -> dict:
        from .plmap import map_to_json

        return {
            "original_count": len(self.original),
            "derived": [map_to_json(m) for m in self.derived],
            "coordinate_map": self.coordinate_map,
        }


def reindex_system(maps: list[PLMap]) -> SystemReindex:
    """Theorem-style reindexing: for each odd n with n + 2 in range, stitch
    (f_n, f_{n+1}) and compose the result with the radial contour factor of
    f_{n+2}.  Every derived bonding map is verified to have no negative
    radial departures.

    Precondition failures are reported with the 1-based index of the first
    offending map or pair.
    """
    if len(maps) < 3:
        raise StitchPreconditionError(
            "system_length", "need at least 3 maps to derive one bonding map"
        )
    for i, m in enumerate(maps, start=1):
        report = no_contour_twins(m)
        if not report.ok:
            raise StitchPreconditionError(
                "no_contour_twins",
                f"map {i} has contour twins: {report.witness}",
            )
    for i in range(len(maps) - 1):
        if not contour_stable(maps[i], maps[i + 1]):
            raise StitchPreconditionError(
                "contour_stable",
                f"pair (f_{i + 1}, f_{i + 2}) is not contour stable",
            )

    derived: list[PLMap] = []
    stitches: list[StitchResult] = []
    n = 1
    while n + 2 <= len(maps):
        result = stitched_factor(maps[n - 1], maps[n])
        verdict = verify_stitch(result, maps[n + 1])
        if not verdict.ok:
            raise InternalConsistencyError(
                f"derived map at n = {n} has a negative radial departure"
            )
        t_next = radial_contour_factor(maps[n + 1])
        derived.append(compose(result.s_tilde, t_next))
        stitches.append(result)
        n += 2

    return SystemReindex(
        original=tuple(maps),
        derived=tuple(derived),
        stitches=tuple(stitches),
        coordinate_map="x'_k = s_tilde_{2k-1}(x_{2k+1})",
    )
