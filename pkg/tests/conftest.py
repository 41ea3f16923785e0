import pytest
from hypothesis import strategies as st

from roughlab.ideals import Ideal, ideal_from_basis
from roughlab.relations import FiniteRelation, Universe, relation_from_code

PQST = ("p", "q", "s", "t")

_ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE_LINES


def make(universe, pairs):
    return FiniteRelation.from_pairs(Universe(universe), pairs)


@pytest.fixture
def reflexive_rel():
    return make(PQST, [("p", "s"), ("p", "t"), ("q", "t"), ("t", "q"), ("p", "p"), ("q", "q"), ("s", "s"), ("t", "t")])


@pytest.fixture
def serial_rel():
    return make(PQST, [("p", "p"), ("s", "p"), ("t", "p"), ("q", "t"), ("t", "q"), ("t", "t")])


@pytest.fixture
def transitive_rel():
    return make(PQST, [("p", "s"), ("p", "t"), ("p", "q"), ("t", "q"), ("t", "t")])


@pytest.fixture
def preorder_rel():
    return make(("p", "q", "s"), [("p", "p"), ("q", "q"), ("s", "s"), ("p", "q"), ("p", "s"), ("q", "s")])


@pytest.fixture
def symtrans_rel():
    return make(PQST, [("t", "t")])


@pytest.fixture
def topo_rel():
    return make(PQST, [("p", "p"), ("p", "s"), ("p", "t"), ("q", "t"), ("q", "q"), ("s", "s"), ("t", "q"), ("t", "t")])


def ideal_on(relation, *basis):
    u = relation.universe
    return ideal_from_basis(u, [u.subset(b) for b in basis])


@st.composite
def relations(draw, min_n=1, max_n=4):
    n = draw(st.integers(min_n, max_n))
    code = draw(st.integers(0, (1 << (n * n)) - 1))
    return relation_from_code(n, code)


@st.composite
def relation_ideal_pairs(draw, min_n=1, max_n=4):
    relation = draw(relations(min_n, max_n))
    carrier = draw(st.integers(0, relation.universe.full_mask))
    return relation, Ideal(relation.universe, carrier)
