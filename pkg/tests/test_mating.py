from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from raymate import landing as land
from raymate import mating as mat
from raymate import parameter as par
from raymate.errors import InvalidInputError

RABBIT = par.rabbit_pair(F(1, 3))
ANTI = par.rabbit_pair(F(2, 3))
AIRPLANE = par.descriptor(F(3, 7), F(4, 7))


def test_conjugate_rabbits_obstructed():
    rep = mat.obstruction_report(RABBIT, ANTI)
    assert rep.obstructed
    assert rep.conjugate_limb_verdict is True
    assert rep.alpha_merge_verdict is True
    assert sorted(rep.loop_witness.node_ids()) == ["P1:1/7|2/7|4/7", "P2:3/7|5/7|6/7"]
    assert rep.cluster is None


def test_basilica_self_mating_obstructed():
    assert mat.obstruction_report(par.BASILICA, par.BASILICA).obstructed


def test_rabbit_airplane_unobstructed():
    rep = mat.obstruction_report(RABBIT, AIRPLANE)
    assert not rep.obstructed
    assert rep.conjugate_limb_verdict is False
    assert rep.alpha_merge_verdict is False
    assert rep.cluster.period == 1
    assert rep.cluster.rho == F(1, 3)
    assert rep.cluster.delta == 3


def test_edge_and_node_counts():
    g = mat.build_ray_graph(RABBIT, AIRPLANE, layers=[3])
    assert g.edge_count == 6
    # rabbit: one triple plus three singletons; airplane: three pairs
    assert g.node_count == 4 + 3
    assert len(g.components) == 1
    assert all(not c.has_loop for c in g.components)


def test_default_layers():
    assert mat.default_layers(RABBIT, AIRPLANE) == [1, 2, 3]
    f = par.double_rabbit(F(1, 3))
    assert mat.default_layers(f, f) == [1, 2, 3, 6]


def test_centre_pairs_are_trees():
    rep = mat.obstruction_report(par.MAIN, RABBIT)
    assert not rep.obstructed
    assert rep.cluster is None


def test_degree_mismatch():
    cubic = par.rabbit_pair(F(1, 2), 3, 0)
    with pytest.raises(InvalidInputError):
        mat.build_ray_graph(RABBIT, cubic)


def test_dot_is_deterministic():
    g = mat.build_ray_graph(RABBIT, AIRPLANE)
    comp = g.component_of_angle(F(1, 7))
    a, b = g.to_dot(comp), g.to_dot(comp)
    assert a == b
    assert a.startswith("graph raymate {")
    assert '"P1:1/7|2/7|4/7" -- "P2:1/7|6/7" [label="1/7"];' in a


def test_ray_class_checks_pass():
    g = mat.build_ray_graph(par.double_rabbit(F(1, 3)), par.double_rabbit(F(1, 3)))
    if g.loops():
        with pytest.raises(InvalidInputError):
            mat.ray_class_checks(g)
    g = mat.build_ray_graph(RABBIT, AIRPLANE)
    assert mat.ray_class_checks(g).ok


# --- properties ----------------------------------------------------------------

SMALL = par.all_descriptors(4)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_euler_characteristic(f1, f2):
    g = mat.build_ray_graph(f1, f2)
    for c in g.components:
        assert len(c.edge_nums) >= len(c.members) - 1
    # every universe angle is one edge
    expected = sum(len(land.build_layer(f1, r).label) - sum(1 for x in land.build_layer(f1, r).label if x < 0)
                   for r in g.layers)
    assert g.edge_count == expected


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_verdicts_agree_and_are_symmetric(f1, f2):
    a = mat.obstruction_report(f1, f2)
    b = mat.obstruction_report(f2, f1)
    assert a.obstructed == b.obstructed
    for v in (a.conjugate_limb_verdict, a.alpha_merge_verdict):
        assert v is None or v == a.obstructed


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(SMALL))
def test_components_have_periods_and_layers(f1, f2):
    g = mat.build_ray_graph(f1, f2)
    for c in g.components:
        assert c.period >= 1
        assert g.layers.count(c.layer) == 1
