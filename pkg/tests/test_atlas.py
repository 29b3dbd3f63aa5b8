from fractions import Fraction as F

import pytest

from raymate import atlas
from raymate import parameter as par
from raymate.errors import InvalidInputError

RABBIT = par.rabbit_pair(F(1, 3))
AIRPLANE = par.descriptor(F(3, 7), F(4, 7))


def test_alpha_labels_start_at_upper_angle():
    assert atlas.alpha_labels(RABBIT) == [F(2, 7), F(4, 7), F(1, 7)]


def test_fixed_recipe():
    recs = atlas.realizations_fixed(2, F(1, 3), 3)
    assert {r.pair for r in recs} == {(RABBIT, AIRPLANE), (AIRPLANE, RABBIT)}
    assert atlas.realizations_fixed(2, F(1, 3), 1) == []


def test_period2_labels():
    labels = atlas.period2_labels(F(1, 3))
    assert len(labels) == 3
    assert labels == [F(44, 63), F(50, 63), F(11, 63)]


def test_period2_classes_order():
    inside, other = atlas.period2_classes(F(1, 3))
    assert all(t > F(2, 3) or t < F(1, 3) for t in inside)
    assert all(F(1, 3) < t < F(2, 3) for t in other)


def test_exhaustive_matches_pool_for_third():
    a = atlas.shared_mating_table(F(1, 3))
    b = atlas.shared_mating_table(F(1, 3), exhaustive=True)
    assert {k: {r.pair for r in v} for k, v in a.items()} == {k: {r.pair for r in v} for k, v in b.items()}


def test_exhaustive_limit():
    with pytest.raises(InvalidInputError):
        atlas.exhaustive_pairs(F(1, 5))


def test_bad_rotation():
    for rho in (F(0), F(1), F(3, 2)):
        with pytest.raises(InvalidInputError):
            atlas.realizations_fixed(2, rho, 3)


def test_g_sweep_third():
    rep = atlas.g_consistency_sweep(F(1, 3))
    assert rep.checked == 27
    witness = par.descriptor(F(13, 63), F(14, 63))
    assert witness in [h for h, _, _ in rep.converse_witnesses]


def test_format_table_lines():
    text = atlas.format_table(F(1, 4))
    assert text.splitlines()[0] == "period 8, rotation number 1/4"
    assert "  (delta = 5)  f ⊥⊥ h5 ≅ h5 ⊥⊥ f" in text


def test_censuses():
    assert set(atlas.multiplicity_census(3).values()) <= {2, 3, 4}
    fixed = atlas.fixed_census(2, 4)
    assert fixed[(F(1, 4), 3)] == 2
    assert fixed[(F(1, 4), 1)] == 0
