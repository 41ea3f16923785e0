"""The ω, ρ, 𝕀 and 𝕀^K neighborhood families over the eight kinds.

The four primitive kinds (a, b, <a>, <b>) are computed directly for each
family; the combined kinds are always derived from them:

    i = a ∩ b,   u = a ∪ b,   <i> = <a> ∩ <b>,   <u> = <a> ∪ <b>
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from roughlab.errors import ConfigurationError, DomainError
from roughlab.ideals import Ideal
from roughlab.relations import FiniteRelation, Subset, Universe


class Kind(str, enum.Enum):
    A = "a"
    B = "b"
    MIN_A = "<a>"
    MIN_B = "<b>"
    I = "i"
    U = "u"
    MIN_I = "<i>"
    MIN_U = "<u>"

    def __str__(self) -> str:
        return self.value

    @property
    def is_minimal(self) -> bool:
        return self.value.startswith("<")

    def minimal(self) -> Kind:
        """The minimal counterpart: a -> <a>, i -> <i>, ..."""
        return self if self.is_minimal else Kind(f"<{self.value}>")


OMEGA_KINDS: tuple[Kind, ...] = tuple(Kind)
PLAIN_KINDS: tuple[Kind, ...] = (Kind.A, Kind.B, Kind.I, Kind.U)

_COMBINED = {
    Kind.I: (Kind.A, Kind.B, True),
    Kind.U: (Kind.A, Kind.B, False),
    Kind.MIN_I: (Kind.MIN_A, Kind.MIN_B, True),
    Kind.MIN_U: (Kind.MIN_A, Kind.MIN_B, False),
}


class Family(str, enum.Enum):
    OMEGA = "omega"
    RHO = "rho"
    I = "i"
    IK = "ik"

    def __str__(self) -> str:
        return self.value


def parse_kind(text: Union[str, Kind]) -> Kind:
    try:
        return Kind(text)
    except ValueError:
        choices = ", ".join(k.value for k in Kind)
        raise DomainError(f"unknown neighborhood kind {text!r}; expected one of {choices}") from None


def parse_family(text: Union[str, Family]) -> Family:
    try:
        return Family(str(text).lower())
    except ValueError:
        choices = ", ".join(f.value for f in Family)
        raise DomainError(f"unknown neighborhood family {text!r}; expected one of {choices}") from None


def _minimal(base: tuple[int, ...], full: int) -> tuple[int, ...]:
    n = len(base)
    out = []
    for s in range(n):
        acc = full
        found = False
        for t in range(n):
            if base[t] >> s & 1:
                acc &= base[t]
                found = True
        # no neighborhood contains s: the intersection of an empty family is taken as ∅
        out.append(acc if found else 0)
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def _omega_primitive(relation: FiniteRelation, kind: Kind) -> tuple[int, ...]:
    full = relation.universe.full_mask
    if kind is Kind.A:
        return relation.rows
    if kind is Kind.B:
        return relation.columns()
    if kind is Kind.MIN_A:
        return _minimal(relation.rows, full)
    if kind is Kind.MIN_B:
        return _minimal(relation.columns(), full)
    raise AssertionError(kind)


def _family_primitive(relation: FiniteRelation, family: Family, kind: Kind, carrier: int) -> tuple[int, ...]:
    w = _omega_primitive(relation, kind)
    n = len(w)
    if family is Family.OMEGA:
        return w
    if family is Family.RHO:
        return tuple(sum(1 << t for t in range(n) if w[t] == w[s]) for s in range(n))
    if family is Family.I:
        return tuple(sum(1 << t for t in range(n) if w[t] & w[s]) for s in range(n))
    if family is Family.IK:
        keep = ~carrier
        return tuple(sum(1 << t for t in range(n) if w[t] & w[s] & keep) for s in range(n))
    raise AssertionError(family)


@lru_cache(maxsize=1 << 18)
def system_masks(relation: FiniteRelation, family: Family, kind: Kind, carrier: int = 0) -> tuple[int, ...]:
    """Neighborhood bitmasks of every element, indexed by element position.

    ``carrier`` is the ideal carrier and is only read for ``Family.IK``.
    """
    family = Family(family)
    kind = Kind(kind)
    if family is not Family.IK:
        carrier = 0
    if kind in _COMBINED:
        left, right, meet = _COMBINED[kind]
        x = system_masks(relation, family, left, carrier)
        y = system_masks(relation, family, right, carrier)
        if meet:
            return tuple(p & q for p, q in zip(x, y))
        return tuple(p | q for p, q in zip(x, y))
    return _family_primitive(relation, family, kind, carrier)


def _element_index(universe: Universe, s: Union[str, int]) -> int:
    if isinstance(s, int):
        if not 0 <= s < universe.n:
            raise DomainError(f"element index {s} out of range")
        return s
    return universe.index(s)


def _single(relation, family, kind, s, carrier=0) -> Subset:
    kind = parse_kind(kind)
    i = _element_index(relation.universe, s)
    return Subset(relation.universe, system_masks(relation, family, kind, carrier)[i])


def omega(relation: FiniteRelation, kind, s) -> Subset:
    return _single(relation, Family.OMEGA, kind, s)


def rho(relation: FiniteRelation, kind, s) -> Subset:
    return _single(relation, Family.RHO, kind, s)


def i_nbhd(relation: FiniteRelation, kind, s) -> Subset:
    return _single(relation, Family.I, kind, s)


def ik_nbhd(relation: FiniteRelation, ideal: Ideal, kind, s) -> Subset:
    if ideal.universe != relation.universe:
        raise DomainError("relation and ideal belong to different universes")
    return _single(relation, Family.IK, kind, s, ideal.carrier)


@dataclass(frozen=True)
class NeighborhoodSystem:
    universe: Universe
    family: Family
    kind: Kind
    masks: tuple[int, ...]
    ideal: Optional[Ideal] = None

    def __getitem__(self, s: Union[str, int]) -> Subset:
        return Subset(self.universe, self.masks[_element_index(self.universe, s)])

    @property
    def map(self) -> dict[str, Subset]:
        return {name: Subset(self.universe, m) for name, m in zip(self.universe.elements, self.masks)}

    @property
    def label(self) -> str:
        return f"{self.family.value}_{self.kind.value}"

    @classmethod
    def from_masks(cls, universe: Universe, masks, family=Family.OMEGA, kind=Kind.A) -> NeighborhoodSystem:
        """Wrap an arbitrary element -> mask assignment (handy for constant systems)."""
        masks = tuple(masks)
        if len(masks) != universe.n:
            raise DomainError("neighborhood map must cover every element")
        return cls(universe, family, kind, masks)


def nbhd_system(relation: FiniteRelation, family, kind, ideal: Optional[Ideal] = None) -> NeighborhoodSystem:
    family = parse_family(family)
    kind = parse_kind(kind)
    if family is Family.IK and ideal is None:
        raise ConfigurationError("the ik family requires an ideal")
    if family is not Family.IK and ideal is not None:
        raise ConfigurationError(f"the {family.value} family does not take an ideal")
    carrier = 0
    if ideal is not None:
        if ideal.universe != relation.universe:
            raise DomainError("relation and ideal belong to different universes")
        carrier = ideal.carrier
    masks = system_masks(relation, family, kind, carrier)
    return NeighborhoodSystem(relation.universe, family, kind, masks, ideal)
