"""Lower/upper approximations, boundary regions and accuracy measures.

One engine covers every family: the neighborhood system supplies N(s) and the
ideal decides what counts as negligible,

    lower(F) = {s : N(s) \\ F ∈ K}        upper(F) = {s : N(s) ∩ F ∉ K}

With the trivial ideal {∅} these are the classical ``N(s) ⊆ F`` and
``N(s) ∩ F ≠ ∅`` operators.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from roughlab.errors import DomainError
from roughlab.ideals import Ideal
from roughlab.neighborhoods import Family, NeighborhoodSystem
from roughlab.relations import Subset, popcount


class Indefinite:
    """Accuracy whose denominator vanishes on a rough set."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INDEFINITE"

    def __str__(self) -> str:
        return "indefinite"

    def __reduce__(self):
        return (Indefinite, ())


INDEFINITE = Indefinite()

AccuracyValue = Union[Fraction, Indefinite]


class AccuracyVariant(str, enum.Enum):
    INTERSECT_OVER_UNION = "iou"  # |lower ∩ F| / |upper ∪ F|
    PLAIN_RATIO = "plain"  # |lower| / |upper|

    def __str__(self) -> str:
        return self.value


def default_variant(family: Family) -> AccuracyVariant:
    return AccuracyVariant.PLAIN_RATIO if family is Family.RHO else AccuracyVariant.INTERSECT_OVER_UNION


def format_accuracy(value: AccuracyValue) -> str:
    """``"1/4 (0.2500)"``, ``"1 (1.0000)"`` or ``"indefinite"``."""
    if isinstance(value, Indefinite):
        return "indefinite"
    return f"{value} ({float(value):.4f})"


@dataclass(frozen=True)
class ApproximationResult:
    target: Subset
    lower: Subset
    upper: Subset
    boundary: Subset
    accuracy: AccuracyValue
    exact: bool
    variant: AccuracyVariant


def _operands(system: NeighborhoodSystem, ideal: Optional[Ideal], target: Subset) -> Ideal:
    if ideal is None:
        ideal = Ideal.trivial(system.universe)
    if ideal.universe != system.universe or target.universe != system.universe:
        raise DomainError("neighborhood system, ideal and set must share one universe")
    return ideal


def lower_approx(system: NeighborhoodSystem, ideal: Optional[Ideal], target: Subset) -> Subset:
    ideal = _operands(system, ideal, target)
    keep = ~ideal.carrier
    outside = ~target.bits
    mask = 0
    for s, nb in enumerate(system.masks):
        if nb & outside & keep == 0:
            mask |= 1 << s
    return Subset(system.universe, mask)


def upper_approx(system: NeighborhoodSystem, ideal: Optional[Ideal], target: Subset) -> Subset:
    ideal = _operands(system, ideal, target)
    keep = ~ideal.carrier
    mask = 0
    for s, nb in enumerate(system.masks):
        if nb & target.bits & keep:
            mask |= 1 << s
    return Subset(system.universe, mask)


def accuracy(lower: Subset, upper: Subset, target: Subset, variant: AccuracyVariant) -> AccuracyValue:
    if variant is AccuracyVariant.INTERSECT_OVER_UNION:
        num = popcount(lower.bits & target.bits)
        den = popcount(upper.bits | target.bits)
    else:
        num = popcount(lower.bits)
        den = popcount(upper.bits)
    if den:
        return Fraction(num, den)
    # the empty set is exact (accuracy 1) only when both approximations are empty
    if not target.bits and not lower.bits and not upper.bits:
        return Fraction(1)
    return INDEFINITE


def approx_report(
    system: NeighborhoodSystem,
    ideal: Optional[Ideal],
    target: Subset,
    variant: Optional[AccuracyVariant] = None,
) -> ApproximationResult:
    if variant is None:
        variant = default_variant(system.family)
    variant = AccuracyVariant(variant)
    lower = lower_approx(system, ideal, target)
    upper = upper_approx(system, ideal, target)
    return ApproximationResult(
        target=target,
        lower=lower,
        upper=upper,
        boundary=upper - lower,
        accuracy=accuracy(lower, upper, target, variant),
        exact=lower.bits == upper.bits,
        variant=variant,
    )
