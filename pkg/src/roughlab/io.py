"""File formats: relation/ideal JSON and information tables (CSV)."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Union

from roughlab.errors import ParseError, RoughLabError
from roughlab.ideals import Ideal, ideal_from_basis
from roughlab.relations import FiniteRelation, Universe

PathLike = Union[str, Path]


def _load_json(path: PathLike) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object")
    return data


def _name_list(value, what: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise ParseError(f"{what} must be a list of element names")
    return value


def relation_from_dict(data: dict) -> FiniteRelation:
    if "universe" not in data or "pairs" not in data:
        raise ParseError('relation JSON needs "universe" and "pairs"')
    try:
        universe = Universe(tuple(_name_list(data["universe"], "universe")))
    except RoughLabError as exc:
        raise ParseError(str(exc)) from None
    pairs = data["pairs"]
    if not isinstance(pairs, list):
        raise ParseError('"pairs" must be a list of [source, target] pairs')
    checked = []
    for pair in pairs:
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, str) for x in pair)):
            raise ParseError(f"malformed pair {pair!r}; expected [source, target]")
        for name in pair:
            if name not in universe:
                raise ParseError(f"pair {pair!r} names unknown element {name!r}")
        checked.append((pair[0], pair[1]))
    return FiniteRelation.from_pairs(universe, checked)


def relation_to_dict(relation: FiniteRelation) -> dict:
    return {"universe": list(relation.universe.elements), "pairs": [list(p) for p in relation.pairs()]}


def load_relation(path: PathLike) -> FiniteRelation:
    return relation_from_dict(_load_json(path))


def save_relation(relation: FiniteRelation, path: PathLike) -> None:
    Path(path).write_text(json.dumps(relation_to_dict(relation)) + "\n", encoding="utf-8")


def ideal_from_dict(data: dict, universe: Universe) -> Ideal:
    """Accepts ``{"basis": [[...], ...]}``, ``{"carrier": [...]}`` or both (which must agree)."""
    if "basis" not in data and "carrier" not in data:
        raise ParseError('ideal JSON needs "basis" or "carrier"')
    try:
        from_basis = None
        if "basis" in data:
            basis = data["basis"]
            if not isinstance(basis, list):
                raise ParseError('"basis" must be a list of sets')
            members = [universe.subset(_name_list(b, "basis member")) for b in basis]
            from_basis = ideal_from_basis(universe, members)
        from_carrier = None
        if "carrier" in data:
            from_carrier = Ideal.from_carrier(universe.subset(_name_list(data["carrier"], "carrier")))
    except ParseError:
        raise
    except RoughLabError as exc:
        raise ParseError(str(exc)) from None
    if from_basis is not None and from_carrier is not None and from_basis != from_carrier:
        raise ParseError(
            f"ideal basis induces carrier {from_basis.carrier_set} but carrier lists {from_carrier.carrier_set}"
        )
    return from_basis if from_basis is not None else from_carrier


def ideal_to_dict(ideal: Ideal) -> dict:
    return {"carrier": list(ideal.carrier_set)}


def load_ideal(path: PathLike, universe: Universe) -> Ideal:
    return ideal_from_dict(_load_json(path), universe)


@dataclass(frozen=True)
class InformationTable:
    objects: tuple[str, ...]
    attributes: tuple[str, ...]
    values: dict  # (object, attribute) -> str

    def __post_init__(self):
        for obj in self.objects:
            for attr in self.attributes:
                if (obj, attr) not in self.values:
                    raise ParseError(f"information table is missing cell ({obj}, {attr})")

    @classmethod
    def from_rows(cls, attributes, rows) -> InformationTable:
        """``rows`` is a sequence of ``(object, [value per attribute])``."""
        attributes = tuple(attributes)
        values = {}
        objects = []
        for obj, cells in rows:
            cells = list(cells)
            if len(cells) != len(attributes):
                raise ParseError(f"row {obj!r} has {len(cells)} values for {len(attributes)} attributes")
            objects.append(obj)
            for attr, cell in zip(attributes, cells):
                values[(obj, attr)] = cell
        if len(set(objects)) != len(objects):
            raise ParseError("duplicate object names in information table")
        return cls(tuple(objects), attributes, values)

    def row(self, obj: str) -> tuple[str, ...]:
        return tuple(self.values[(obj, a)] for a in self.attributes)


def load_information_table(path: PathLike) -> InformationTable:
    """CSV with a header row; the first column holds object names."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = [r for r in csv.reader(fh) if r]
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    if not rows:
        raise ParseError(f"{path}: empty information table")
    header, body = rows[0], rows[1:]
    if len(header) < 2:
        raise ParseError(f"{path}: need an object column and at least one attribute")
    if not body:
        raise ParseError(f"{path}: information table has no objects")
    return InformationTable.from_rows(header[1:], [(r[0], r[1:]) for r in body])


def ingest_information_table(table: InformationTable, threshold) -> FiniteRelation:
    """Relate s to t when they agree on at least ``threshold`` of the attributes."""
    threshold = Fraction(threshold)
    if not 0 <= threshold <= 1:
        raise ParseError(f"threshold must lie in [0, 1], got {threshold}")
    if not table.attributes:
        raise ParseError("information table has no attributes")
    universe = Universe(table.objects)
    total = len(table.attributes)
    rows = [table.row(obj) for obj in table.objects]
    masks = []
    for a in rows:
        mask = 0
        for t, b in enumerate(rows):
            agree = sum(x == y for x, y in zip(a, b))
            if Fraction(agree, total) >= threshold:
                mask |= 1 << t
        masks.append(mask)
    return FiniteRelation(universe, tuple(masks))
