import pytest

from oracles import ideal_closure, is_ideal_family, powerset
from roughlab.errors import DomainError, InvalidBasisError
from roughlab.ideals import Ideal, enumerate_ideals, ideal_contains, ideal_from_basis
from roughlab.relations import Universe

U4 = Universe(("p", "q", "s", "t"))


def family_names(ideal):
    return {frozenset(m) for m in ideal.members()}


def test_single_point_basis():
    ideal = ideal_from_basis(U4, [U4.subset(["t"])])
    assert family_names(ideal) == {frozenset(), frozenset({"t"})}


def test_empty_set_basis_is_minimal_ideal():
    ideal = ideal_from_basis(U4, [U4.empty()])
    assert ideal.is_trivial
    assert family_names(ideal) == {frozenset()}


def test_two_point_basis():
    ideal = ideal_from_basis(U4, [U4.subset(["s"]), U4.subset(["t"])])
    assert family_names(ideal) == {frozenset(), frozenset("s"), frozenset("t"), frozenset("st")}


def test_empty_basis_rejected():
    with pytest.raises(InvalidBasisError):
        ideal_from_basis(U4, [])


def test_contains():
    k_t = ideal_from_basis(U4, [U4.subset(["t"])])
    assert not ideal_contains(k_t, U4.subset(["q", "t"]))
    assert ideal_contains(k_t, U4.empty())
    assert U4.subset(["t"]) in k_t


def test_contains_universe_mismatch():
    with pytest.raises(DomainError):
        ideal_contains(Ideal.trivial(U4), Universe(("x",)).subset(["x"]))


def test_membership_against_brute_force_closure():
    k_st = ideal_from_basis(U4, [U4.subset(["s", "t"])])
    closed = ideal_closure([frozenset("st")])
    members = [s for s in U4.all_subsets() if ideal_contains(k_st, s)]
    assert len(members) == 4
    for subset in U4.all_subsets():
        assert ideal_contains(k_st, subset) == (frozenset(subset) in closed)


@pytest.mark.parametrize("n, expected", [(3, 8), (4, 16)])
def test_enumerate_counts(n, expected):
    assert len(list(enumerate_ideals(Universe.canonical(n)))) == expected


def test_improper_ideal_is_allowed():
    ideals = list(enumerate_ideals(U4))
    assert ideals[-1].is_improper
    assert len(ideals[-1].members()) == 16


def test_enumerated_ideals_are_ideals():
    for n in range(1, 5):
        for ideal in enumerate_ideals(Universe.canonical(n)):
            fam = family_names(ideal)
            assert is_ideal_family(fam)


def test_monotonicity():
    ideals = list(enumerate_ideals(Universe.canonical(3)))
    for k1 in ideals:
        for k2 in ideals:
            if k1.carrier & ~k2.carrier == 0:
                assert all(m in k2 for m in k1.members())


def test_enumerated_ideals_equal_brute_force_families_n3():
    u = Universe.canonical(3)
    subsets = powerset(u.elements)
    brute = set()
    for family in powerset(subsets):
        if is_ideal_family(family):
            brute.add(frozenset(family))
    enumerated = {frozenset(family_names(k)) for k in enumerate_ideals(u)}
    assert brute == enumerated
    assert len(brute) == 8
