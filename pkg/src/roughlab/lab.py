"""Registry of neighborhood claims, a per-instance checker and an exhaustive search.

Each claim is an executable predicate over a (relation, ideal) pair. Claims
marked THEOREM must survive every small model; claims marked REFUTED are
statements that look plausible but fail, and the search must find a model
that breaks them.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from roughlab.errors import DomainError, SizeLimitError
from roughlab.ideals import Ideal, enumerate_ideals
from roughlab.neighborhoods import OMEGA_KINDS, PLAIN_KINDS, Family, Kind, system_masks
from roughlab.relations import (
    FiniteRelation,
    RelationProperty,
    Subset,
    Universe,
    enumerate_relations,
    has_property,
)
from roughlab.topologies import is_topology_masks, open_set_masks

DEFAULT_MAX_SEARCH_N = 4
HARD_MAX_SEARCH_N = 5
MAX_N_ENV = "ROUGHLAB_MAX_N"


class Expectation(enum.Enum):
    THEOREM = "theorem"
    REFUTED = "refuted"


@dataclass(frozen=True)
class Violation:
    message: str
    kind: Optional[Kind] = None
    elements: tuple[str, ...] = ()
    subsets: dict = field(default_factory=dict)

    def line(self) -> str:
        parts = [self.message]
        if self.subsets:
            parts.append("; ".join(f"{k} = {v}" for k, v in self.subsets.items()))
        return " | ".join(parts)


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    hypothesis: tuple[RelationProperty, ...]
    assertion: Callable[[FiniteRelation, Ideal], Optional[Violation]]
    expected: Expectation
    uses_ideal: bool = True


@dataclass(frozen=True)
class Witness:
    relation: FiniteRelation
    ideal: Ideal
    violation: Violation

    def line(self) -> str:
        return f"R = {self.relation}, K = {self.ideal}: {self.violation.line()}"


class VerdictStatus(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    HYPOTHESIS_UNMET = "hypothesis-unmet"


@dataclass(frozen=True)
class Verdict:
    status: VerdictStatus
    witness: Optional[Witness] = None
    unmet: tuple[RelationProperty, ...] = ()

    @property
    def holds(self) -> Optional[bool]:
        """True/False for a checked instance, None when the hypothesis is unmet."""
        if self.status is VerdictStatus.HYPOTHESIS_UNMET:
            return None
        return self.status is VerdictStatus.HOLDS


# --- assertion helpers -------------------------------------------------------

def _nb(relation, family, kind, ideal: Ideal) -> tuple[int, ...]:
    return system_masks(relation, family, kind, ideal.carrier)


def _set(relation: FiniteRelation, mask: int) -> Subset:
    return Subset(relation.universe, mask)


def _name(relation: FiniteRelation, i: int) -> str:
    return relation.universe.elements[i]


def _inclusion(
    relation, ideal, kinds, left, right, left_label, right_label, kind_map=lambda k: k
) -> Optional[Violation]:
    """Check left_j(s) ⊆ right_{kind_map(j)}(s) for every listed kind and element."""
    for kind in kinds:
        xs = left(kind)
        other = kind_map(kind)
        ys = right(other)
        for s, (x, y) in enumerate(zip(xs, ys)):
            if x & ~y:
                e = _name(relation, s)
                return Violation(
                    f"{left_label}_{kind}({e}) is not a subset of {right_label}_{other}({e})",
                    kind,
                    (e,),
                    {f"{left_label}_{kind}({e})": _set(relation, x), f"{right_label}_{other}({e})": _set(relation, y)},
                )
    return None


def _ik(relation, ideal):
    return lambda kind: _nb(relation, Family.IK, kind, ideal)


def _fam(relation, family, ideal=None):
    carrier_ideal = ideal or Ideal.trivial(relation.universe)
    return lambda kind: _nb(relation, family, kind, carrier_ideal)


# --- theorem assertions ------------------------------------------------------

def _ik_symmetric(relation, ideal):
    n = relation.n
    for kind in OMEGA_KINDS:
        m = _nb(relation, Family.IK, kind, ideal)
        for s in range(n):
            for t in range(n):
                if (m[s] >> t & 1) != (m[t] >> s & 1):
                    a, b = _name(relation, s), _name(relation, t)
                    return Violation(
                        f"{b} in ik_{kind}({a}) but {a} not in ik_{kind}({b}) (or vice versa)",
                        kind, (a, b),
                        {f"ik_{kind}({a})": _set(relation, m[s]), f"ik_{kind}({b})": _set(relation, m[t])},
                    )
    return None


def _minimal_in_plain(relation, ideal):
    ik = _ik(relation, ideal)
    for kind in PLAIN_KINDS:
        small = ik(kind.minimal())
        big = ik(kind)
        for s, (x, y) in enumerate(zip(small, big)):
            if x & ~y:
                e = _name(relation, s)
                return Violation(
                    f"ik_{kind.minimal()}({e}) is not a subset of ik_{kind}({e})", kind, (e,),
                    {f"ik_{kind.minimal()}({e})": _set(relation, x), f"ik_{kind}({e})": _set(relation, y)},
                )
    return None


def _preorder_minimal_equals_plain(relation, ideal):
    ik = _ik(relation, ideal)
    for kind in PLAIN_KINDS:
        small = ik(kind.minimal())
        big = ik(kind)
        for s, (x, y) in enumerate(zip(small, big)):
            if x != y:
                e = _name(relation, s)
                return Violation(
                    f"ik_{kind.minimal()}({e}) differs from ik_{kind}({e})", kind, (e,),
                    {f"ik_{kind.minimal()}({e})": _set(relation, x), f"ik_{kind}({e})": _set(relation, y)},
                )
    return None


def _reflexive_rho_in_omega(relation, ideal):
    rho = _fam(relation, Family.RHO)
    omega = _fam(relation, Family.OMEGA)
    for kind in OMEGA_KINDS:
        for s, (r, w) in enumerate(zip(rho(kind), omega(kind))):
            # ρ ∩ ω = ρ and ρ ∪ ω = ω
            if (r & w) != r or (r | w) != w:
                e = _name(relation, s)
                return Violation(
                    f"rho_{kind}({e}) ∩ omega_{kind}({e}) != rho_{kind}({e}) or the union != omega_{kind}({e})",
                    kind, (e,),
                    {f"rho_{kind}({e})": _set(relation, r), f"omega_{kind}({e})": _set(relation, w)},
                )
    return None


def _symmetric_kinds_coincide(relation, ideal):
    ik = _ik(relation, ideal)
    groups = ((Kind.I, Kind.A, Kind.B, Kind.U), (Kind.MIN_I, Kind.MIN_A, Kind.MIN_B, Kind.MIN_U))
    for group in groups:
        base = ik(group[0])
        for kind in group[1:]:
            other = ik(kind)
            for s, (x, y) in enumerate(zip(base, other)):
                if x != y:
                    e = _name(relation, s)
                    return Violation(
                        f"ik_{group[0]}({e}) differs from ik_{kind}({e})", kind, (e,),
                        {f"ik_{group[0]}({e})": _set(relation, x), f"ik_{kind}({e})": _set(relation, y)},
                    )
    return None


def _symtrans_omega_classes(relation, ideal):
    n = relation.n
    for kind in OMEGA_KINDS:
        w = _nb(relation, Family.OMEGA, kind, ideal)
        for t in range(n):
            for s in range(n):
                if w[t] >> s & 1 and w[s] != w[t]:
                    a, b = _name(relation, s), _name(relation, t)
                    return Violation(
                        f"{a} in omega_{kind}({b}) but omega_{kind}({a}) != omega_{kind}({b})", kind, (a, b),
                        {f"omega_{kind}({a})": _set(relation, w[s]), f"omega_{kind}({b})": _set(relation, w[t])},
                    )
    return None


def _symtrans_ik_in_omega(relation, ideal):
    return _inclusion(relation, ideal, OMEGA_KINDS, _ik(relation, ideal), _fam(relation, Family.OMEGA), "ik", "omega")


def _symtrans_ik_nested(relation, ideal):
    n = relation.n
    for kind in OMEGA_KINDS:
        m = _nb(relation, Family.IK, kind, ideal)
        for t in range(n):
            for s in range(n):
                if m[t] >> s & 1 and m[s] & ~m[t]:
                    a, b = _name(relation, s), _name(relation, t)
                    return Violation(
                        f"{a} in ik_{kind}({b}) but ik_{kind}({a}) is not a subset of ik_{kind}({b})", kind, (a, b),
                        {f"ik_{kind}({a})": _set(relation, m[s]), f"ik_{kind}({b})": _set(relation, m[t])},
                    )
    return None


def _tau(relation, family, kind, ideal) -> tuple[int, ...]:
    return open_set_masks(_nb(relation, family, kind, ideal), ideal.carrier, relation.n)


def _tau_inclusion(relation, ideal, small_kind, big_kind) -> Optional[Violation]:
    small = _tau(relation, Family.IK, small_kind, ideal)
    big = set(_tau(relation, Family.IK, big_kind, ideal))
    for f in small:
        if f not in big:
            fs = _set(relation, f)
            return Violation(
                f"{fs} is open for ik_{small_kind} but not for ik_{big_kind}", small_kind, tuple(fs),
                {"F": fs},
            )
    return None


def _reflexive_tau_inclusion(relation, ideal):
    for kind in PLAIN_KINDS:
        v = _tau_inclusion(relation, ideal, kind, kind.minimal())
        if v:
            return v
    return None


def _topology_claim(family: Family, use_ideal: bool):
    def check(relation, ideal):
        k = ideal if use_ideal else Ideal.trivial(relation.universe)
        full = relation.universe.full_mask
        for kind in OMEGA_KINDS:
            opens = _tau(relation, family, kind, k)
            if not is_topology_masks(opens, full):
                return Violation(f"generated family for {family.value}_{kind} is not a topology", kind)
        return None
    return check


def _trivial_ideal_reduction(relation, ideal):
    if not ideal.is_trivial:
        return None
    for kind in OMEGA_KINDS:
        ik = _nb(relation, Family.IK, kind, ideal)
        plain = _nb(relation, Family.I, kind, ideal)
        for s, (x, y) in enumerate(zip(ik, plain)):
            if x != y:
                e = _name(relation, s)
                return Violation(f"ik_{kind}({e}) != i_{kind}({e}) under the trivial ideal", kind, (e,))
    return None


# --- refuted assertions ------------------------------------------------------

def _rho_omega_in_ik(relation, ideal):
    ik = _ik(relation, ideal)
    rho = _fam(relation, Family.RHO)
    omega = _fam(relation, Family.OMEGA)
    for kind in OMEGA_KINDS:
        for s, (r, w, y) in enumerate(zip(rho(kind), omega(kind), ik(kind))):
            if (r | w) & ~y:
                e = _name(relation, s)
                return Violation(
                    f"rho_{kind}({e}) ∪ omega_{kind}({e}) is not a subset of ik_{kind}({e})", kind, (e,),
                    {f"rho_{kind}({e})": _set(relation, r), f"omega_{kind}({e})": _set(relation, w),
                     f"ik_{kind}({e})": _set(relation, y)},
                )
    return None


def _rho_in_ik(relation, ideal):
    return _inclusion(relation, ideal, OMEGA_KINDS, _fam(relation, Family.RHO), _ik(relation, ideal), "rho", "ik")


def _plain_in_minimal(relation, ideal):
    ik = _ik(relation, ideal)
    return _inclusion(relation, ideal, PLAIN_KINDS, ik, ik, "ik", "ik", kind_map=lambda k: k.minimal())


def _tau_minimal_in_plain(relation, ideal):
    for kind in PLAIN_KINDS:
        v = _tau_inclusion(relation, ideal, kind.minimal(), kind)
        if v:
            return v
    return None


def _meet_outside_ideal(family: Family, label: str):
    def check(relation, ideal):
        n = relation.n
        for kind in OMEGA_KINDS:
            m = _nb(relation, family, kind, ideal)
            for x in range(n):
                for y in range(n):
                    meet = m[x] & m[y]
                    if meet and ideal.contains_mask(meet):
                        a, b = _name(relation, x), _name(relation, y)
                        return Violation(
                            f"{label}_{kind}({a}) ∩ {label}_{kind}({b}) is nonempty yet belongs to K", kind, (a, b),
                            {f"{label}_{kind}({a}) ∩ {label}_{kind}({b})": _set(relation, meet)},
                        )
        return None
    return check


def _omega_in_ik(relation, ideal):
    return _inclusion(relation, ideal, OMEGA_KINDS, _fam(relation, Family.OMEGA), _ik(relation, ideal), "omega", "ik")


def _rho_tau_in_ik_tau(relation, ideal):
    for kind in OMEGA_KINDS:
        rho_opens = _tau(relation, Family.RHO, kind, ideal)
        ik_opens = set(_tau(relation, Family.IK, kind, ideal))
        for f in rho_opens:
            if f not in ik_opens:
                fs = _set(relation, f)
                return Violation(f"{fs} is open for rho_{kind} with K but not for ik_{kind}", kind, tuple(fs), {"F": fs})
    return None


P = RelationProperty
T = Expectation.THEOREM
X = Expectation.REFUTED

CLAIMS: tuple[Claim, ...] = (
    Claim("ik-symmetric", "t ∈ ik_j(s) ⇔ s ∈ ik_j(t) for every j", (), _ik_symmetric, T),
    Claim("reflexive-minimal-in-plain", "R reflexive ⇒ ik_<j>(s) ⊆ ik_j(s), j ∈ {a,b,i,u}",
          (P.REFLEXIVE,), _minimal_in_plain, T),
    Claim("preorder-minimal-equals-plain", "R preorder ⇒ ik_<j>(s) = ik_j(s), j ∈ {a,b,i,u}",
          (P.PREORDER,), _preorder_minimal_equals_plain, T),
    Claim("reflexive-rho-within-omega", "R reflexive ⇒ rho_j ∩ omega_j = rho_j and rho_j ∪ omega_j = omega_j",
          (P.REFLEXIVE,), _reflexive_rho_in_omega, T, uses_ideal=False),
    Claim("symmetric-kinds-coincide", "R symmetric ⇒ ik_i = ik_a = ik_b = ik_u and ik_<i> = ik_<a> = ik_<b> = ik_<u>",
          (P.SYMMETRIC,), _symmetric_kinds_coincide, T),
    Claim("symtrans-omega-classes", "R symmetric and transitive, s ∈ omega_j(t) ⇒ omega_j(s) = omega_j(t)",
          (P.SYMMETRIC, P.TRANSITIVE), _symtrans_omega_classes, T, uses_ideal=False),
    Claim("symtrans-ik-within-omega", "R symmetric and transitive ⇒ ik_j(s) ⊆ omega_j(s)",
          (P.SYMMETRIC, P.TRANSITIVE), _symtrans_ik_in_omega, T),
    Claim("symtrans-ik-nested", "R symmetric and transitive, s ∈ ik_j(t) ⇒ ik_j(s) ⊆ ik_j(t)",
          (P.SYMMETRIC, P.TRANSITIVE), _symtrans_ik_nested, T),
    Claim("reflexive-tau-inclusion", "R reflexive ⇒ tau(ik_j) ⊆ tau(ik_<j>), j ∈ {a,b,i,u}",
          (P.REFLEXIVE,), _reflexive_tau_inclusion, T),
    Claim("omega-topology", "{F : omega_j(s) ⊆ F for s ∈ F} is a topology",
          (), _topology_claim(Family.OMEGA, False), T, uses_ideal=False),
    Claim("i-topology", "{F : i_j(s) ⊆ F for s ∈ F} is a topology",
          (), _topology_claim(Family.I, False), T, uses_ideal=False),
    Claim("rho-ideal-topology", "{F : rho_j(s) \\ F ∈ K for s ∈ F} is a topology",
          (), _topology_claim(Family.RHO, True), T),
    Claim("ik-topology", "{F : ik_j(s) \\ F ∈ K for s ∈ F} is a topology",
          (), _topology_claim(Family.IK, True), T),
    Claim("trivial-ideal-reduction", "K = {∅} ⇒ ik_j = i_j pointwise", (), _trivial_ideal_reduction, T),
    # plausible-looking statements that fail
    Claim("reflexive-rho-omega-within-ik", "R reflexive ⇒ rho_j(s) ∪ omega_j(s) ⊆ ik_j(s)",
          (P.REFLEXIVE,), _rho_omega_in_ik, X),
    Claim("serial-rho-within-ik", "R serial ⇒ rho_j(s) ⊆ ik_j(s)", (P.SERIAL,), _rho_in_ik, X),
    Claim("transitive-plain-in-minimal", "R transitive ⇒ ik_j(s) ⊆ ik_<j>(s), j ∈ {a,b,i,u}",
          (P.TRANSITIVE,), _plain_in_minimal, X),
    Claim("reflexive-tau-minimal-in-plain", "R reflexive ⇒ tau(ik_<j>) ⊆ tau(ik_j), j ∈ {a,b,i,u}",
          (P.REFLEXIVE,), _tau_minimal_in_plain, X),
    Claim("nonempty-meet-outside-ideal", "omega_j(x) ∩ omega_j(y) ≠ ∅ ⇒ omega_j(x) ∩ omega_j(y) ∉ K",
          (), _meet_outside_ideal(Family.OMEGA, "omega"), X),
    Claim("ik-nonempty-meet-outside-ideal", "ik_j(x) ∩ ik_j(y) ≠ ∅ ⇒ ik_j(x) ∩ ik_j(y) ∉ K",
          (), _meet_outside_ideal(Family.IK, "ik"), X),
    Claim("symtrans-omega-within-ik", "R symmetric and transitive ⇒ omega_j(s) ⊆ ik_j(s)",
          (P.SYMMETRIC, P.TRANSITIVE), _omega_in_ik, X),
    Claim("reflexive-rho-tau-within-ik-tau", "R reflexive ⇒ tau(rho_j, K) ⊆ tau(ik_j)",
          (P.REFLEXIVE,), _rho_tau_in_ik_tau, X),
)

REGISTRY: dict[str, Claim] = {c.id: c for c in CLAIMS}
assert len(REGISTRY) == len(CLAIMS), "duplicate claim id"


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise DomainError(f"unknown claim {claim_id!r}; known: {', '.join(REGISTRY)}") from None


def unmet_hypotheses(claim: Claim, relation: FiniteRelation) -> tuple[RelationProperty, ...]:
    return tuple(p for p in claim.hypothesis if not has_property(relation, p))


def check_claim(claim: Claim, relation: FiniteRelation, ideal: Optional[Ideal] = None) -> Verdict:
    if ideal is None:
        ideal = Ideal.trivial(relation.universe)
    if ideal.universe != relation.universe:
        raise DomainError("relation and ideal belong to different universes")
    unmet = unmet_hypotheses(claim, relation)
    if unmet:
        return Verdict(VerdictStatus.HYPOTHESIS_UNMET, unmet=unmet)
    violation = claim.assertion(relation, ideal)
    if violation is None:
        return Verdict(VerdictStatus.HOLDS)
    return Verdict(VerdictStatus.VIOLATED, Witness(relation, ideal, violation))


def max_search_n() -> int:
    """Search size guard; the environment may raise it, never past the hard cap."""
    raw = os.environ.get(MAX_N_ENV)
    if not raw:
        return DEFAULT_MAX_SEARCH_N
    try:
        value = int(raw)
    except ValueError:
        raise SizeLimitError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None
    return max(1, min(value, HARD_MAX_SEARCH_N))


def models(claim: Claim, n: int) -> Iterator[tuple[FiniteRelation, Ideal]]:
    """All (relation, ideal) pairs on n elements satisfying the hypothesis, in search order."""
    first = claim.hypothesis[0] if claim.hypothesis else None
    universe = Universe.canonical(n)
    ideals = list(enumerate_ideals(universe)) if claim.uses_ideal else [Ideal.trivial(universe)]
    for relation in enumerate_relations(n, first):
        if any(not has_property(relation, p) for p in claim.hypothesis[1:]):
            continue
        for ideal in ideals:
            yield relation, ideal


def search_counterexample(claim: Claim, max_n: int) -> Optional[Witness]:
    limit = max_search_n()
    if not 1 <= max_n <= limit:
        raise SizeLimitError(f"search size must satisfy 1 <= max_n <= {limit}, got {max_n}")
    for n in range(1, max_n + 1):
        for relation, ideal in models(claim, n):
            violation = claim.assertion(relation, ideal)
            if violation is not None:
                return Witness(relation, ideal, violation)
    return None
