"""Finite universes, bit-packed subsets and binary relations.

Elements are addressed by their index in the ordered universe; names only
matter for input and output. A subset is an ``int`` bitmask (bit ``i`` set iff
element ``i`` is a member) and a relation stores one such mask per row, so
``rows[s] >> t & 1`` is the matrix entry for ``(s, t)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

from roughlab.errors import DomainError, ParseError, SizeLimitError

EMPTY_SET_SYMBOL = "∅"
CANONICAL_NAMES = ("p", "q", "s", "t", "v")
MAX_ENUMERATION_N = 5


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        elements = tuple(self.elements)
        object.__setattr__(self, "elements", elements)
        if not elements:
            raise DomainError("a universe needs at least one element")
        if len(set(elements)) != len(elements):
            raise DomainError(f"duplicate element names in {list(elements)}")
        object.__setattr__(self, "_index", {name: i for i, name in enumerate(elements)})

    @classmethod
    def canonical(cls, n: int) -> Universe:
        """The n-element universe used by the exhaustive enumerators."""
        if n < 1:
            raise DomainError("n must be at least 1")
        if n <= len(CANONICAL_NAMES):
            return cls(CANONICAL_NAMES[:n])
        return cls(tuple(f"x{i}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise DomainError(f"unknown element {name!r}; universe is {list(self.elements)}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return self.n

    def __iter__(self):
        return iter(self.elements)

    def subset(self, names: Iterable[str] = ()) -> Subset:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return Subset(self, mask)

    def from_mask(self, mask: int) -> Subset:
        return Subset(self, mask)

    def empty(self) -> Subset:
        return Subset(self, 0)

    def full(self) -> Subset:
        return Subset(self, self.full_mask)

    def all_subsets(self) -> list[Subset]:
        return [Subset(self, m) for m in range(1 << self.n)]

    def parse_subset(self, text: str) -> Subset:
        """Parse a comma-separated literal such as ``"q,t"``; ``""`` and ``"∅"`` are empty."""
        text = text.strip()
        if text in ("", EMPTY_SET_SYMBOL, "{}"):
            return self.empty()
        if text.startswith("{") and text.endswith("}"):
            text = text[1:-1]
        names = [part.strip() for part in text.split(",")]
        if any(not name for name in names):
            raise ParseError(f"malformed set literal {text!r}")
        return self.subset(names)


@dataclass(frozen=True)
class Subset:
    universe: Universe
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.universe.n:
            raise DomainError(f"mask {self.bits:#b} does not fit a universe of size {self.universe.n}")

    def _check(self, other: Subset) -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.universe is not self.universe and other.universe != self.universe:
            raise DomainError("subsets belong to different universes")

    def __or__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits | other.bits)

    def __and__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits & other.bits)

    def __sub__(self, other: Subset) -> Subset:
        self._check(other)
        return Subset(self.universe, self.bits & ~other.bits)

    def complement(self) -> Subset:
        return Subset(self.universe, self.universe.full_mask & ~self.bits)

    def __le__(self, other: Subset) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def __ge__(self, other: Subset) -> bool:
        return other <= self

    def __lt__(self, other: Subset) -> bool:
        return self <= other and self.bits != other.bits

    def __gt__(self, other: Subset) -> bool:
        return other < self

    def issubset(self, other: Subset) -> bool:
        return self <= other

    def __contains__(self, name: str) -> bool:
        return bool(self.bits >> self.universe.index(name) & 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[str]:
        return (self.universe.elements[i] for i in iter_bits(self.bits))

    def names(self) -> list[str]:
        return list(self)

    def __str__(self) -> str:
        if not self.bits:
            return EMPTY_SET_SYMBOL
        return "{" + ",".join(self) + "}"

    def sort_key(self) -> tuple[int, int]:
        return (popcount(self.bits), self.bits)


class RelationProperty(enum.Enum):
    SERIAL = "serial"
    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"
    PREORDER = "preorder"
    EQUIVALENCE = "equivalence"


@dataclass(frozen=True)
class FiniteRelation:
    """A binary relation stored as one successor bitmask per source element."""

    universe: Universe
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.universe.n:
            raise DomainError(f"expected {self.universe.n} rows, got {len(rows)}")
        full = self.universe.full_mask
        if any(r & ~full or r < 0 for r in rows):
            raise DomainError("row mask exceeds the universe")

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[str, str]]) -> FiniteRelation:
        rows = [0] * universe.n
        for s, t in pairs:
            rows[universe.index(s)] |= 1 << universe.index(t)
        return cls(universe, tuple(rows))

    @classmethod
    def identity(cls, universe: Universe) -> FiniteRelation:
        return cls(universe, tuple(1 << i for i in range(universe.n)))

    @classmethod
    def empty(cls, universe: Universe) -> FiniteRelation:
        return cls(universe, (0,) * universe.n)

    @classmethod
    def complete(cls, universe: Universe) -> FiniteRelation:
        return cls(universe, (universe.full_mask,) * universe.n)

    @property
    def n(self) -> int:
        return self.universe.n

    def holds(self, s: int, t: int) -> bool:
        return bool(self.rows[s] >> t & 1)

    def pairs(self) -> list[tuple[str, str]]:
        names = self.universe.elements
        return [(names[s], names[t]) for s in range(self.n) for t in iter_bits(self.rows[s])]

    def columns(self) -> tuple[int, ...]:
        """Predecessor masks: bit s of ``columns()[t]`` is set iff sRt."""
        cols = [0] * self.n
        for s, row in enumerate(self.rows):
            for t in iter_bits(row):
                cols[t] |= 1 << s
        return tuple(cols)

    def matrix(self) -> list[list[bool]]:
        return [[self.holds(s, t) for t in range(self.n)] for s in range(self.n)]

    def is_serial(self) -> bool:
        return all(self.rows)

    def is_reflexive(self) -> bool:
        return all(row >> i & 1 for i, row in enumerate(self.rows))

    def is_symmetric(self) -> bool:
        return self.rows == self.columns()

    def is_transitive(self) -> bool:
        # sRp and pRt imply sRt: every successor's row must be inside the source row
        rows = self.rows
        for row in rows:
            for p in iter_bits(row):
                if rows[p] & ~row:
                    return False
        return True

    def __str__(self) -> str:
        return "{" + ", ".join(f"({s},{t})" for s, t in self.pairs()) + "}"


def has_property(relation: FiniteRelation, prop: RelationProperty) -> bool:
    if prop is RelationProperty.SERIAL:
        return relation.is_serial()
    if prop is RelationProperty.REFLEXIVE:
        return relation.is_reflexive()
    if prop is RelationProperty.SYMMETRIC:
        return relation.is_symmetric()
    if prop is RelationProperty.TRANSITIVE:
        return relation.is_transitive()
    if prop is RelationProperty.PREORDER:
        return relation.is_reflexive() and relation.is_transitive()
    if prop is RelationProperty.EQUIVALENCE:
        return relation.is_reflexive() and relation.is_symmetric() and relation.is_transitive()
    raise ValueError(f"unknown property {prop!r}")


def relation_from_code(n: int, code: int, universe: Optional[Universe] = None) -> FiniteRelation:
    """Decode the enumeration counter: bit ``s*n + t`` of ``code`` is entry (s, t)."""
    universe = universe or Universe.canonical(n)
    row_mask = (1 << n) - 1
    return FiniteRelation(universe, tuple((code >> (s * n)) & row_mask for s in range(n)))


def relation_code(relation: FiniteRelation) -> int:
    n = relation.n
    return sum(row << (s * n) for s, row in enumerate(relation.rows))


def enumerate_relations(n: int, filter: Optional[RelationProperty] = None) -> Iterator[FiniteRelation]:
    """Yield every relation on the canonical n-element universe, in counter order.

    The counter runs over the row-major matrix with entry (0, 0) as the least
    significant bit. ``filter`` restricts the stream without changing the order.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise SizeLimitError(f"relation enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}")
    universe = Universe.canonical(n)
    for code in range(1 << (n * n)):
        relation = relation_from_code(n, code, universe)
        if filter is None or has_property(relation, filter):
            yield relation
