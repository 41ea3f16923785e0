"""Topologies generated by neighborhood systems, and their interior/closure operators."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from roughlab.approximations import INDEFINITE, AccuracyValue
from roughlab.errors import DomainError, PreconditionError, SizeLimitError
from roughlab.ideals import Ideal
from roughlab.neighborhoods import NeighborhoodSystem
from roughlab.relations import Subset, Universe, iter_bits, popcount

MAX_POWERSET_N = 20


def _canonical(masks: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(set(masks), key=lambda m: (popcount(m), m)))


@dataclass(frozen=True)
class SetFamily:
    """Duplicate-free family of subsets, kept sorted by (cardinality, mask)."""

    universe: Universe
    masks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "masks", _canonical(self.masks))
        full = self.universe.full_mask
        if any(m < 0 or m & ~full for m in self.masks):
            raise DomainError("family member exceeds the universe")

    @classmethod
    def of(cls, universe: Universe, members: Iterable[Subset]) -> SetFamily:
        masks = []
        for m in members:
            if m.universe != universe:
                raise DomainError("family member over a different universe")
            masks.append(m.bits)
        return cls(universe, tuple(masks))

    @property
    def members(self) -> list[Subset]:
        return [Subset(self.universe, m) for m in self.masks]

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, subset: Subset) -> bool:
        return subset.bits in set(self.masks)

    def __le__(self, other: SetFamily) -> bool:
        return set(self.masks) <= set(other.masks)

    def to_names(self) -> list[list[str]]:
        return [list(m) for m in self.members]


def _check_size(universe: Universe) -> None:
    if universe.n > MAX_POWERSET_N:
        raise SizeLimitError(f"power-set filtering is limited to n <= {MAX_POWERSET_N}")


def open_set_masks(masks: tuple[int, ...], carrier: int, n: int) -> tuple[int, ...]:
    """Every F with N(s) \\ F inside the carrier for all s in F."""
    keep = ~carrier
    out = []
    for f in range(1 << n):
        outside = ~f & keep
        ok = True
        for s in iter_bits(f):
            if masks[s] & outside:
                ok = False
                break
        if ok:
            out.append(f)
    return tuple(out)


def generate_topology(system: NeighborhoodSystem) -> SetFamily:
    _check_size(system.universe)
    n = system.universe.n
    opens = []
    for f in range(1 << n):
        if all(system.masks[s] & ~f == 0 for s in iter_bits(f)):
            opens.append(f)
    return SetFamily(system.universe, tuple(opens))


def generate_topology_ideal(system: NeighborhoodSystem, ideal: Optional[Ideal]) -> SetFamily:
    if ideal is None:
        return generate_topology(system)
    if ideal.universe != system.universe:
        raise DomainError("neighborhood system and ideal belong to different universes")
    _check_size(system.universe)
    return SetFamily(system.universe, open_set_masks(system.masks, ideal.carrier, system.universe.n))


def is_topology_masks(masks: Iterable[int], full: int) -> bool:
    members = set(masks)
    if 0 not in members or full not in members:
        return False
    ordered = sorted(members)
    for i, x in enumerate(ordered):
        for y in ordered[i + 1:]:
            if x | y not in members or x & y not in members:
                return False
    return True


def is_topology(family: SetFamily) -> bool:
    # pairwise closure suffices on a finite universe
    return is_topology_masks(family.masks, family.universe.full_mask)


@dataclass(frozen=True)
class TopoApproximationResult:
    target: Subset
    interior: Subset
    closure: Subset
    boundary: Subset
    accuracy: AccuracyValue


def interior(family: SetFamily, target: Subset) -> Subset:
    mask = 0
    for m in family.masks:
        if m & ~target.bits == 0:
            mask |= m
    return Subset(family.universe, mask)


def closure(family: SetFamily, target: Subset) -> Subset:
    # complement of the largest open set missing the target
    disjoint = 0
    for m in family.masks:
        if m & target.bits == 0:
            disjoint |= m
    return Subset(family.universe, family.universe.full_mask & ~disjoint)


def topo_approx(family: SetFamily, target: Subset) -> TopoApproximationResult:
    if target.universe != family.universe:
        raise DomainError("set and topology belong to different universes")
    if not is_topology(family):
        raise PreconditionError("interior/closure need a topology; the family fails the axioms")
    inner = interior(family, target)
    outer = closure(family, target)
    acc = Fraction(len(inner), len(outer)) if len(outer) else INDEFINITE
    return TopoApproximationResult(target, inner, outer, outer - inner, acc)
