"""Ideals on a finite universe.

On a finite set a nonempty family closed under subsets and finite unions is
exactly the power set of its union, so an ideal is stored as that union (its
carrier) and membership reduces to a subset test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from roughlab.errors import DomainError, InvalidBasisError
from roughlab.relations import Subset, Universe, iter_bits


@dataclass(frozen=True)
class Ideal:
    universe: Universe
    carrier: int

    def __post_init__(self):
        if self.carrier < 0 or self.carrier >> self.universe.n:
            raise DomainError("ideal carrier exceeds the universe")

    @classmethod
    def trivial(cls, universe: Universe) -> Ideal:
        """The ideal {∅}."""
        return cls(universe, 0)

    @classmethod
    def from_carrier(cls, carrier: Subset) -> Ideal:
        return cls(carrier.universe, carrier.bits)

    @property
    def carrier_set(self) -> Subset:
        return Subset(self.universe, self.carrier)

    @property
    def is_trivial(self) -> bool:
        return self.carrier == 0

    @property
    def is_improper(self) -> bool:
        """True when the ideal is the whole power set."""
        return self.carrier == self.universe.full_mask

    def contains_mask(self, mask: int) -> bool:
        return mask & ~self.carrier == 0

    def __contains__(self, subset: Subset) -> bool:
        return ideal_contains(self, subset)

    def members(self) -> list[Subset]:
        """Materialize the family: every submask of the carrier, ascending."""
        out = []
        sub = self.carrier
        while True:
            out.append(Subset(self.universe, sub))
            if sub == 0:
                break
            sub = (sub - 1) & self.carrier
        out.reverse()
        return out

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.members()) + "}"


def ideal_from_basis(universe: Universe, basis: Iterable[Subset]) -> Ideal:
    """Smallest ideal containing every basis member."""
    basis = list(basis)
    if not basis:
        raise InvalidBasisError("an ideal basis must contain at least one set")
    carrier = 0
    for member in basis:
        if member.universe != universe:
            raise DomainError("basis member is not over the given universe")
        carrier |= member.bits
    return Ideal(universe, carrier)


def ideal_contains(ideal: Ideal, subset: Subset) -> bool:
    if subset.universe != ideal.universe:
        raise DomainError("subset and ideal belong to different universes")
    return ideal.contains_mask(subset.bits)


def enumerate_ideals(universe: Universe) -> Iterator[Ideal]:
    """One ideal per carrier, carriers in increasing mask order."""
    for carrier in range(1 << universe.n):
        yield Ideal(universe, carrier)


def carrier_elements(ideal: Ideal) -> list[str]:
    return [ideal.universe.elements[i] for i in iter_bits(ideal.carrier)]
