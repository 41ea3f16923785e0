"""Finite rough-set engine over ω/ρ/𝕀/𝕀^K neighborhoods, ideals and generated topologies."""

from roughlab.approximations import (
    INDEFINITE,
    AccuracyVariant,
    ApproximationResult,
    Indefinite,
    approx_report,
    lower_approx,
    upper_approx,
)
from roughlab.ideals import Ideal, enumerate_ideals, ideal_contains, ideal_from_basis
from roughlab.lab import CLAIMS, Claim, Expectation, Verdict, check_claim, get_claim, search_counterexample
from roughlab.neighborhoods import Family, Kind, NeighborhoodSystem, i_nbhd, ik_nbhd, nbhd_system, omega, rho
from roughlab.relations import (
    FiniteRelation,
    RelationProperty,
    Subset,
    Universe,
    enumerate_relations,
    has_property,
)
from roughlab.topologies import SetFamily, generate_topology, generate_topology_ideal, is_topology, topo_approx

__version__ = "0.1.0"
