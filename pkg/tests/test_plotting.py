from roughlab.approximations import approx_report
from roughlab.neighborhoods import nbhd_system
from roughlab.plotting import _covers, plot_approximations, plot_topology
from roughlab.relations import Universe
from roughlab.topologies import SetFamily, generate_topology

PNG = b"\x89PNG\r\n\x1a\n"


def test_approximation_figure(tmp_path, reflexive_rel):
    system = nbhd_system(reflexive_rel, "omega", "a")
    results = [approx_report(system, None, f) for f in reflexive_rel.universe.all_subsets()]
    path = plot_approximations(results, tmp_path / "a.png", title="demo")
    assert path.read_bytes()[:8] == PNG


def test_topology_figure(tmp_path, reflexive_rel):
    tau = generate_topology(nbhd_system(reflexive_rel, "omega", "a"))
    path = plot_topology(tau, tmp_path / "t.png")
    assert path.read_bytes()[:8] == PNG


def test_covers_of_power_set_are_single_element_steps():
    u = Universe.canonical(3)
    masks = SetFamily.of(u, u.all_subsets()).masks
    edges = _covers(masks)
    # each of the 8 sets has one cover per missing element: 3 * 4 edges
    assert len(edges) == 12
    assert all(bin(b).count("1") - bin(a).count("1") == 1 for a, b in edges)


def test_covers_skip_gaps():
    assert _covers([0, 0b111]) == [(0, 0b111)]
