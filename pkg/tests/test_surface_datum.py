import pytest
from hypothesis import given, strategies as st

from dtcurves.surface_datum import (BadSlotCount, CoordinateDatum, Disconnected, OnePants, TwoPants,
                                    UnsupportedGenus, generate_standard_datum, local_model,
                                    rebuild_from_models, validate)


def test_chain_genus2_is_valid(chain2):
    validate(chain2)
    assert chain2.n_curves == 3 and chain2.n_pants == 2
    assert all(isinstance(m, TwoPants) for m in chain2.local_models())


def test_curve_in_three_slots_rejected():
    with pytest.raises(BadSlotCount):
        CoordinateDatum.from_pants(2, [(0, 0, 0), (1, 2, 1)])


def test_disconnected_rejected():
    # two separate theta graphs would need genus 3 counts; a pants glued to itself only
    with pytest.raises(Disconnected):
        CoordinateDatum.from_pants(3, [(0, 0, 1), (1, 2, 2), (3, 3, 4), (4, 5, 5)])


def test_genus_one_unsupported():
    with pytest.raises(UnsupportedGenus):
        generate_standard_datum(1)


def test_folded_pants_in_genus3():
    d = CoordinateDatum.from_pants(3, [(0, 0, 1), (1, 2, 3), (2, 4, 5), (3, 5, 4)])
    m = local_model(d, 0)
    assert isinstance(m, OnePants) and m.a1.curve == 1


def test_chain_middle_curve_neighbors(chain2):
    m = local_model(chain2, 1)
    assert isinstance(m, TwoPants)
    assert {s.curve for s in m.neighbors} == {0, 2}
    assert m.f_plus != m.f_minus


def test_handles_has_folded_curves(handles2):
    kinds = [type(m) for m in handles2.local_models()]
    assert OnePants in kinds and TwoPants in kinds


def test_generated_counts():
    d = generate_standard_datum(3, "chain")
    validate(d)
    assert (d.n_curves, d.n_pants) == (6, 4)


@given(st.integers(2, 6), st.sampled_from(["chain", "handles"]))
def test_models_are_one_kind_and_rebuild(g, style):
    d = generate_standard_datum(g, style)
    models = d.local_models()
    assert all(isinstance(m, (TwoPants, OnePants)) for m in models)
    assert rebuild_from_models(g, models) == d
