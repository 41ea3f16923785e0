import json
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import relations
from roughlab.errors import ParseError
from roughlab.io import (
    InformationTable,
    ideal_from_dict,
    ideal_to_dict,
    ingest_information_table,
    load_ideal,
    load_information_table,
    load_relation,
    relation_from_dict,
    relation_to_dict,
    save_relation,
)
from roughlab.neighborhoods import nbhd_system
from roughlab.relations import FiniteRelation, RelationProperty, Universe, has_property

U4 = Universe(("p", "q", "s", "t"))


@given(relations(max_n=5))
def test_relation_dict_round_trip(relation):
    assert relation_from_dict(relation_to_dict(relation)) == relation


def test_relation_file_round_trip(tmp_path, reflexive_rel):
    path = tmp_path / "r.json"
    save_relation(reflexive_rel, path)
    assert load_relation(path) == reflexive_rel


def test_unknown_element_rejected():
    with pytest.raises(ParseError):
        relation_from_dict({"universe": ["p", "q"], "pairs": [["p", "z"]]})


@pytest.mark.parametrize(
    "data",
    [{"universe": ["p"]}, {"universe": ["p", "p"], "pairs": []}, {"universe": ["p"], "pairs": [["p"]]}, {"universe": "p", "pairs": []}],
)
def test_malformed_relation_rejected(data):
    with pytest.raises(ParseError):
        relation_from_dict(data)


def test_duplicate_pairs_are_idempotent():
    once = relation_from_dict({"universe": ["p", "q"], "pairs": [["p", "q"]]})
    twice = relation_from_dict({"universe": ["p", "q"], "pairs": [["p", "q"], ["p", "q"]]})
    assert once == twice


def test_bad_json_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError):
        load_relation(path)
    with pytest.raises(ParseError):
        load_relation(tmp_path / "missing.json")


def test_ideal_forms():
    by_basis = ideal_from_dict({"basis": [["s"], ["t"]]}, U4)
    by_carrier = ideal_from_dict({"carrier": ["s", "t"]}, U4)
    both = ideal_from_dict({"basis": [["s", "t"]], "carrier": ["s", "t"]}, U4)
    assert by_basis == by_carrier == both
    assert ideal_to_dict(by_basis) == {"carrier": ["s", "t"]}
    assert ideal_from_dict({"basis": [[]]}, U4).is_trivial


@pytest.mark.parametrize(
    "data",
    [{}, {"basis": []}, {"basis": [["z"]]}, {"basis": [["s"]], "carrier": ["s", "t"]}, {"carrier": "s"}],
)
def test_ideal_errors(data):
    with pytest.raises(ParseError):
        ideal_from_dict(data, U4)


def test_load_ideal(tmp_path):
    path = tmp_path / "k.json"
    path.write_text(json.dumps({"basis": [["t"]]}), encoding="utf-8")
    assert load_ideal(path, U4).carrier_set.names() == ["t"]


def write_table(tmp_path, text):
    path = tmp_path / "table.csv"
    path.write_text(text, encoding="utf-8")
    return path


TOY = "object,a1,a2,a3\no1,x,y,z\no2,x,y,w\no3,x,v,w\no4,u,v,w\n"


def agreement_oracle(rows, threshold):
    related = set()
    for a, va in rows.items():
        for b, vb in rows.items():
            same = [x == y for x, y in zip(va, vb)].count(True)
            if Fraction(same, len(va)) >= threshold:
                related.add((a, b))
    return related


def test_ingest_two_thirds(tmp_path):
    table = load_information_table(write_table(tmp_path, TOY))
    rel = ingest_information_table(table, Fraction(2, 3))
    rows = {"o1": "xyz", "o2": "xyw", "o3": "xvw", "o4": "uvw"}
    expected = agreement_oracle(rows, Fraction(2, 3))
    assert set(rel.pairs()) == expected
    diagonal = {(o, o) for o in rows}
    chain = {("o1", "o2"), ("o2", "o3"), ("o3", "o4")}
    assert expected == diagonal | chain | {(b, a) for a, b in chain}


def test_ingest_threshold_one_is_indiscernibility(tmp_path):
    text = "obj,c,d\nx1,r,1\nx2,r,1\nx3,g,1\nx4,g,2\nx5,r,1\n"
    table = load_information_table(write_table(tmp_path, text))
    rel = ingest_information_table(table, 1)
    assert has_property(rel, RelationProperty.EQUIVALENCE)
    classes = {}
    for obj in table.objects:
        classes.setdefault(table.row(obj), set()).add(obj)
    rho = nbhd_system(rel, "rho", "a")
    for obj in table.objects:
        assert set(rho[obj]) == classes[table.row(obj)]


def test_ingest_threshold_zero_is_complete(tmp_path):
    table = load_information_table(write_table(tmp_path, TOY))
    rel = ingest_information_table(table, "0")
    assert rel == FiniteRelation.complete(rel.universe)


@pytest.mark.parametrize("threshold", ["3/2", "-1"])
def test_ingest_threshold_range(tmp_path, threshold):
    table = load_information_table(write_table(tmp_path, TOY))
    with pytest.raises(ParseError):
        ingest_information_table(table, threshold)


@pytest.mark.parametrize(
    "text",
    ["", "object\no1\n", "object,a\n", "object,a,b\no1,x\n", "object,a\no1,x\no1,y\n"],
)
def test_bad_tables(tmp_path, text):
    with pytest.raises(ParseError):
        load_information_table(write_table(tmp_path, text))


@given(st.lists(st.tuples(st.sampled_from("ab"), st.sampled_from("xy"), st.sampled_from("01")), min_size=1, max_size=6),
       st.sampled_from([Fraction(0), Fraction(1, 3), Fraction(2, 3), Fraction(1)]))
def test_ingest_matches_oracle(cells, threshold):
    rows = {f"o{i}": c for i, c in enumerate(cells)}
    table = InformationTable.from_rows(["a", "b", "c"], [(o, list(c)) for o, c in rows.items()])
    rel = ingest_information_table(table, threshold)
    assert set(rel.pairs()) == agreement_oracle(rows, threshold)
    assert has_property(rel, RelationProperty.REFLEXIVE) and has_property(rel, RelationProperty.SYMMETRIC)
