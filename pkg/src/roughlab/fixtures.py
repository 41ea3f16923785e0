"""Published worked examples and their replay.

Each block fixes a relation and an ideal, then lists stated neighborhood
values, ideal families and generated topologies. ``replay_fixtures`` recomputes
all of them and compares by exact set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from roughlab.ideals import Ideal, ideal_from_basis
from roughlab.neighborhoods import Family, Kind, nbhd_system
from roughlab.relations import FiniteRelation, Universe
from roughlab.topologies import generate_topology_ideal, is_topology

E = "∅"

# (family, kind, element) -> stated value; sets as comma lists, "U" for the universe
NbValues = dict[tuple[str, str, str], str]


@dataclass(frozen=True)
class FixtureBlock:
    name: str
    universe: tuple[str, ...]
    pairs: tuple[tuple[str, str], ...]
    basis: tuple[tuple[str, ...], ...]
    ideal_family: tuple[str, ...]
    values: tuple[tuple[str, str, str, str], ...]
    topologies: tuple[tuple[str, str, tuple[str, ...]], ...] = ()

    def relation(self) -> FiniteRelation:
        return FiniteRelation.from_pairs(Universe(self.universe), self.pairs)

    def ideal(self, universe: Universe) -> Ideal:
        return ideal_from_basis(universe, [universe.subset(b) for b in self.basis])


def _each(family: str, kind: str, stated: dict[str, str]) -> tuple[tuple[str, str, str, str], ...]:
    return tuple((family, kind, element, value) for element, value in stated.items())


_REFLEXIVE_AT_T = (
    ("omega", "a", "q,t"), ("omega", "b", "p,q,t"), ("omega", "i", "q,t"), ("omega", "u", "p,q,t"),
    ("omega", "<a>", "t"), ("omega", "<b>", "q,t"), ("omega", "<i>", "t"), ("omega", "<u>", "q,t"),
    ("rho", "a", "q,t"), ("rho", "b", "t"), ("rho", "i", "t"), ("rho", "u", "q,t"),
    ("rho", "<a>", "t"), ("rho", "<b>", "q,t"), ("rho", "<i>", "t"), ("rho", "<u>", "q,t"),
    ("ik", "a", "q,t"), ("ik", "b", "U"), ("ik", "i", "q,t"), ("ik", "u", "U"),
    ("ik", "<a>", E), ("ik", "<b>", "q,t"), ("ik", "<i>", E), ("ik", "<u>", "q,t"),
)

BLOCKS: tuple[FixtureBlock, ...] = (
    FixtureBlock(
        name="reflexive",
        universe=("p", "q", "s", "t"),
        pairs=(("p", "s"), ("p", "t"), ("q", "t"), ("t", "q"), ("p", "p"), ("q", "q"), ("s", "s"), ("t", "t")),
        basis=(("t",),),
        ideal_family=(E, "t"),
        values=tuple((f, k, "t", v) for f, k, v in _REFLEXIVE_AT_T),
    ),
    FixtureBlock(
        name="serial",
        universe=("p", "q", "s", "t"),
        pairs=(("p", "p"), ("s", "p"), ("t", "p"), ("q", "t"), ("t", "q"), ("t", "t")),
        basis=(("t",),),
        ideal_family=(E, "t"),
        values=(
            _each("omega", "a", {"p": "p", "q": "t", "s": "p", "t": "p,q,t"})
            + _each("rho", "a", {"p": "p,s", "q": "q", "s": "p,s", "t": "t"})
            + _each("i", "a", {"p": "p,s,t", "q": "q,t", "s": "p,s,t", "t": "U"})
            + _each("ik", "a", {"p": "p,s,t", "q": E, "s": "p,s,t", "t": "p,s,t"})
        ),
    ),
    FixtureBlock(
        name="transitive",
        universe=("p", "q", "s", "t"),
        pairs=(("p", "s"), ("p", "t"), ("p", "q"), ("t", "q"), ("t", "t")),
        basis=(("t",),),
        ideal_family=(E, "t"),
        values=(
            _each("omega", "b", {"p": E, "q": "p,t", "s": "p", "t": "p,t"})
            + _each("omega", "<b>", {"p": "p", "q": E, "s": E, "t": "p,t"})
            + _each("rho", "b", {"p": "p", "q": "q,t", "s": "s", "t": "q,t"})
            + _each("rho", "<b>", {"p": "p", "q": "q,s", "s": "q,s", "t": "t"})
            + _each("ik", "b", {"p": E, "q": "q,s,t", "s": "q,s,t", "t": "q,s,t"})
            + _each("ik", "<b>", {"p": "p,t", "q": E, "s": E, "t": "p,t"})
        ),
    ),
    FixtureBlock(
        name="preorder",
        universe=("p", "q", "s"),
        pairs=(("p", "p"), ("q", "q"), ("s", "s"), ("p", "q"), ("p", "s"), ("q", "s")),
        basis=(("s",),),
        ideal_family=(E, "s"),
        values=(
            _each("omega", "a", {"p": "U", "q": "q,s", "s": "s"})
            + _each("rho", "a", {"p": "p", "q": "q", "s": "s"})
            + _each("ik", "a", {"p": "p,q", "q": "p,q", "s": E})
        ),
    ),
    FixtureBlock(
        name="symmetric-transitive",
        universe=("p", "q", "s", "t"),
        pairs=(("t", "t"),),
        basis=(("t",),),
        ideal_family=(E, "t"),
        values=(("omega", "a", "t", "t"), ("ik", "a", "t", E)),
    ),
    FixtureBlock(
        name="reflexive-topology",
        universe=("p", "q", "s", "t"),
        pairs=(("p", "p"), ("p", "s"), ("p", "t"), ("q", "t"), ("q", "q"), ("s", "s"), ("t", "q"), ("t", "t")),
        basis=(("s",), ("t",)),
        ideal_family=(E, "s", "t", "s,t"),
        values=(),
        topologies=(
            ("ik", "<a>", ("POWERSET",)),
            ("ik", "a", ("p", "q", "s", "p,q", "p,s", "q,s", "q,t", "p,q,s", "p,q,t", "q,s,t", E, "U")),
        ),
    ),
)


@dataclass(frozen=True)
class FixtureCheck:
    block: str
    label: str
    expected: str
    actual: str
    passed: bool


@dataclass(frozen=True)
class FixtureReport:
    checks: tuple[FixtureCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[FixtureCheck]:
        return [c for c in self.checks if not c.passed]

    def block_names(self) -> list[str]:
        seen: list[str] = []
        for c in self.checks:
            if c.block not in seen:
                seen.append(c.block)
        return seen

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            detail = c.actual if c.passed else f"expected {c.expected}, got {c.actual}"
            out.append(f"{mark} [{c.block}] {c.label} = {detail}")
        return out


def _literal(universe: Universe, text: str):
    if text == "U":
        return universe.full()
    return universe.parse_subset(text)


def _replay_block(block: FixtureBlock) -> list[FixtureCheck]:
    relation = block.relation()
    universe = relation.universe
    ideal = block.ideal(universe)
    checks = []

    expected_family = sorted(_literal(universe, m).bits for m in block.ideal_family)
    actual_family = sorted(m.bits for m in ideal.members())
    checks.append(FixtureCheck(
        block.name, "K",
        "{" + ", ".join(str(universe.from_mask(m)) for m in expected_family) + "}",
        str(ideal),
        expected_family == actual_family,
    ))

    for family, kind, element, stated in block.values:
        fam = Family(family)
        system = nbhd_system(relation, fam, kind, ideal if fam is Family.IK else None)
        expected = _literal(universe, stated)
        actual = system[element]
        checks.append(FixtureCheck(block.name, f"{family}_{kind}({element})", str(expected), str(actual),
                                   expected == actual))

    for family, kind, stated in block.topologies:
        fam = Family(family)
        system = nbhd_system(relation, fam, kind, ideal if fam is Family.IK else None)
        tau = generate_topology_ideal(system, ideal)
        if stated == ("POWERSET",):
            expected_masks = set(range(1 << universe.n))
        else:
            expected_masks = {_literal(universe, m).bits for m in stated}
        ok = set(tau.masks) == expected_masks and len(tau) == len(expected_masks) and is_topology(tau)
        checks.append(FixtureCheck(
            block.name, f"tau({family}_{kind})",
            f"{len(expected_masks)} open sets",
            f"{len(tau)} open sets, topology: {'yes' if is_topology(tau) else 'no'}",
            ok,
        ))
    return checks


def replay_fixtures(blocks: Optional[tuple[FixtureBlock, ...]] = None) -> FixtureReport:
    checks: list[FixtureCheck] = []
    for block in blocks or BLOCKS:
        checks.extend(_replay_block(block))
    return FixtureReport(tuple(checks))
