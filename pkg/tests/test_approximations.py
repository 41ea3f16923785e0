from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import ideal_on, relation_ideal_pairs
from roughlab.approximations import (
    INDEFINITE,
    AccuracyVariant,
    Indefinite,
    accuracy,
    approx_report,
    format_accuracy,
    lower_approx,
    upper_approx,
)
from roughlab.errors import DomainError
from roughlab.ideals import Ideal, enumerate_ideals
from roughlab.neighborhoods import OMEGA_KINDS, Family, NeighborhoodSystem, nbhd_system
from roughlab.relations import Universe, enumerate_relations

IOU = AccuracyVariant.INTERSECT_OVER_UNION
PLAIN = AccuracyVariant.PLAIN_RATIO


def test_lower_of_universe_is_universe(reflexive_rel):
    u = reflexive_rel.universe
    for kind in OMEGA_KINDS:
        system = nbhd_system(reflexive_rel, "omega", kind)
        assert lower_approx(system, Ideal.trivial(u), u.full()) == u.full()


def test_lower_omega_a_reflexive(reflexive_rel):
    u = reflexive_rel.universe
    system = nbhd_system(reflexive_rel, "omega", "a")
    F = u.subset(["q", "t"])
    # hand loop: omega_a = p:{p,s,t} q:{q,t} s:{s} t:{q,t}
    N = oracles.omega(u.elements, oracles.pairs_of(reflexive_rel), "a")
    assert oracles.lower(u.elements, N, {frozenset()}, frozenset(F)) == {"q", "t"}
    assert set(lower_approx(system, None, F)) == {"q", "t"}


def test_lower_ik_with_two_point_ideal(topo_rel):
    u = topo_rel.universe
    k = ideal_on(topo_rel, ["s"], ["t"])
    system = nbhd_system(topo_rel, "ik", "a", k)
    F = u.subset(["p"])
    N = {e: frozenset(system[e]) for e in u}
    fam = {frozenset(m) for m in k.members()}
    expected = oracles.lower(u.elements, N, fam, frozenset(F))
    assert expected == {"p", "s"}
    assert set(lower_approx(system, k, F)) == {"p", "s"}


def test_upper_of_empty_is_empty(reflexive_rel):
    u = reflexive_rel.universe
    for ideal in enumerate_ideals(u):
        for family in Family:
            system = nbhd_system(reflexive_rel, family, "u", ideal if family is Family.IK else None)
            assert not upper_approx(system, ideal, u.empty())


def test_upper_ik_symtrans(symtrans_rel):
    u = symtrans_rel.universe
    k = ideal_on(symtrans_rel, ["t"])
    system = nbhd_system(symtrans_rel, "ik", "a", k)
    assert not upper_approx(system, k, u.subset(["t"]))


def test_upper_omega_a_reflexive(reflexive_rel):
    u = reflexive_rel.universe
    system = nbhd_system(reflexive_rel, "omega", "a")
    N = oracles.omega(u.elements, oracles.pairs_of(reflexive_rel), "a")
    assert oracles.upper(u.elements, N, {frozenset()}, frozenset("s")) == {"p", "s"}
    assert set(upper_approx(system, None, u.subset(["s"]))) == {"p", "s"}


def test_universe_mismatch(reflexive_rel):
    system = nbhd_system(reflexive_rel, "omega", "a")
    other = Universe(("x", "y"))
    with pytest.raises(DomainError):
        lower_approx(system, None, other.subset(["x"]))
    with pytest.raises(DomainError):
        upper_approx(system, Ideal.trivial(other), reflexive_rel.universe.full())


def test_empty_set_exact_has_accuracy_one():
    u = Universe.canonical(4)
    system = NeighborhoodSystem.from_masks(u, [u.full_mask] * 4)
    r = approx_report(system, None, u.empty(), IOU)
    assert r.lower.bits == r.upper.bits == 0
    assert r.accuracy == 1 and r.exact


def test_empty_set_with_nonempty_lower_is_indefinite():
    u = Universe(("p", "q", "s", "t"))
    lower, upper = u.subset(["q", "s", "t"]), u.empty()
    assert accuracy(lower, upper, u.empty(), IOU) is INDEFINITE


def test_constant_empty_system_on_universe():
    u = Universe.canonical(3)
    system = NeighborhoodSystem.from_masks(u, [0, 0, 0])
    r = approx_report(system, None, u.full(), IOU)
    assert r.lower == u.full() and not r.upper
    assert r.accuracy == Fraction(1)


def test_plain_ratio_zero_upper_nonempty_target_is_indefinite():
    u = Universe.canonical(3)
    system = NeighborhoodSystem.from_masks(u, [0, 0, 0])
    r = approx_report(system, None, u.subset(["p"]), PLAIN)
    assert r.accuracy is INDEFINITE


def test_plain_ratio_is_not_clamped():
    u = Universe.canonical(2)
    # lower = {p,q}, upper = {p}: plain ratio 2
    assert accuracy(u.full(), u.subset(["p"]), u.subset(["p"]), PLAIN) == 2


def test_rho_defaults_to_plain_ratio(transitive_rel):
    system = nbhd_system(transitive_rel, "rho", "b")
    u = transitive_rel.universe
    r = approx_report(system, None, u.subset(["p", "t"]))
    assert r.variant is PLAIN
    # oracle: rho_b = p:{p} q:{q,t} s:{s} t:{q,t}
    assert set(r.lower) == {"p"} and set(r.upper) == {"p", "q", "t"}
    assert r.accuracy == Fraction(1, 3)


def test_omega_b_accuracy_values(transitive_rel):
    system = nbhd_system(transitive_rel, "omega", "b")
    u = transitive_rel.universe
    r = approx_report(system, None, u.subset(["p", "q"]))
    assert set(r.lower) == {"p", "s"}
    assert r.accuracy == Fraction(1, 4)


def test_format_accuracy():
    assert format_accuracy(Fraction(1, 4)) == "1/4 (0.2500)"
    assert format_accuracy(Fraction(1)) == "1 (1.0000)"
    assert format_accuracy(INDEFINITE) == "indefinite"
    assert Indefinite() is INDEFINITE


@given(relation_ideal_pairs(), st.data())
def test_report_invariants(pair, data):
    relation, ideal = pair
    u = relation.universe
    kind = data.draw(st.sampled_from(OMEGA_KINDS))
    family = data.draw(st.sampled_from(list(Family)))
    F = u.from_mask(data.draw(st.integers(0, u.full_mask)))
    system = nbhd_system(relation, family, kind, ideal if family is Family.IK else None)
    r = approx_report(system, ideal, F, IOU)
    assert r.boundary == r.upper - r.lower
    assert r.exact == (r.lower == r.upper)
    if F:
        assert not isinstance(r.accuracy, Indefinite)
    if not isinstance(r.accuracy, Indefinite):
        assert 0 <= r.accuracy <= 1


@given(relation_ideal_pairs(max_n=3), st.data())
def test_matches_oracle(pair, data):
    relation, ideal = pair
    u = relation.universe
    kind = data.draw(st.sampled_from(OMEGA_KINDS))
    system = nbhd_system(relation, "ik", kind, ideal)
    fam = {frozenset(m) for m in ideal.members()}
    N = {e: frozenset(system[e]) for e in u}
    for F in u.all_subsets():
        assert frozenset(lower_approx(system, ideal, F)) == oracles.lower(u.elements, N, fam, frozenset(F))
        assert frozenset(upper_approx(system, ideal, F)) == oracles.upper(u.elements, N, fam, frozenset(F))


def test_monotone_in_target_n3():
    u = Universe.canonical(3)
    subsets = u.all_subsets()
    for relation in enumerate_relations(3):
        for ideal in enumerate_ideals(u):
            for kind in ("a", "<b>"):
                system = nbhd_system(relation, "ik", kind, ideal)
                lows = [lower_approx(system, ideal, F) for F in subsets]
                ups = [upper_approx(system, ideal, F) for F in subsets]
                for i, F1 in enumerate(subsets):
                    for j, F2 in enumerate(subsets):
                        if F1 <= F2:
                            assert lows[i] <= lows[j] and ups[i] <= ups[j]
