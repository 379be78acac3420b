import json
import math
from collections import Counter

import jsonschema
import pytest
from hypothesis import given, strategies as st

from shufflegroups import schemas
from shufflegroups.errors import ParameterError, ResourceLimitError
from shufflegroups.group import bfs_enumerate, schreier_sims
from shufflegroups.perm import Perm, element_order, identity, transposition
from shufflegroups.shuffles import PowerDeckParams, ShuffleKind, in_shuffle, out_shuffle, power_shuffle
from shufflegroups.structure import (
    GeneratorCheck,
    VerificationReport,
    central_symmetry,
    cyclic_shift_action,
    predict,
    symmetry_bound,
    twisted_action,
    verify,
)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_predict_square_deck(m):
    p = predict(m, 2, 1)
    assert p.predicted_order == 8 and p.action == "cyclic-shift" and p.abelian_rank == 2


@pytest.mark.parametrize("m", [2, 3, 4])
def test_predict_cube_deck_twisted(m):
    p = predict(m, 3, 2)
    assert p.predicted_order == 12 and p.action == "twisted" and p.abelian_rank == 2


def test_predict_non_coprime():
    p = predict(2, 4, 2)
    assert p.c == 2 and p.t == 2 and p.abelian_rank == 2 and p.predicted_order == 8


def test_predict_accepts_params_object():
    assert predict(PowerDeckParams(3, 6, 4)) == predict(3, 6, 4)


@pytest.mark.parametrize("k,y", [(3, 3), (3, 0), (3, 5), (1, 0)])
def test_predict_rejects_bad_params(k, y):
    with pytest.raises(ParameterError):
        predict(2, k, y)


@pytest.mark.parametrize("k", range(2, 11))
def test_two_shuffles_on_power_of_two_decks(k):
    assert predict(2, k, 1).predicted_order == 2**k * k


@given(st.integers(2, 6), st.integers(2, 12), st.data())
def test_prediction_invariant_under_reduction(m, k, data):
    y = data.draw(st.integers(1, k - 1))
    p = PowerDeckParams(m, k, y) if m**k <= 2**31 else None
    if p is None:
        return
    a, b = predict(p), predict(p.reduced())
    assert (a.t, a.abelian_rank, a.predicted_order, a.action) == \
        (b.t, b.abelian_rank, b.predicted_order, b.action)
    assert a.abelian_rank in (a.t - 1, a.t)
    assert a.predicted_order == 2**a.abelian_rank * a.t


def test_twisted_action_small_case():
    assert twisted_action((1, 0)) == (0, 1)
    assert twisted_action((0, 1)) == (1, 1)
    assert cyclic_shift_action((1, 0, 0)) == (0, 1, 0)


@pytest.mark.parametrize("t", range(2, 8))
def test_actions_have_order_t(t):
    # phi(1) must generate an action of Z_t: applying it t times is the identity.
    from itertools import product
    for a in product((0, 1), repeat=t - 1):
        x = a
        for _ in range(t):
            x = twisted_action(x)
        assert x == a
    for a in product((0, 1), repeat=t):
        x = a
        for _ in range(t):
            x = cyclic_shift_action(x)
        assert x == a


@pytest.mark.parametrize("m,k,y,order", [(2, 3, 1, 24), (2, 4, 3, 64), (3, 2, 1, 8),
                                         (2, 3, 2, 12), (3, 4, 2, 8), (2, 6, 4, 12)])
def test_verify_examples(m, k, y, order):
    r = verify(m, k, y)
    assert r.verdict
    assert r.computed_order == order == r.predicted_order


def test_verify_even_case_fields():
    r = verify(2, 5, 2)
    assert r.product_relation_ok is True
    assert [g.label for g in r.generator_checks] == ["C1", "C2", "C3", "C4", "C5"]
    r = verify(2, 5, 1)
    assert r.product_relation_ok is None
    assert [g.label for g in r.generator_checks][0] == "B1"


def test_verify_resource_limit():
    with pytest.raises(ResourceLimitError):
        verify(2, 10, 1, max_degree=512)


def order_profile(gens):
    return Counter(element_order(g) for g in bfs_enumerate(gens).elements)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_small_groups_are_dihedral_and_alternating(m):
    # Among groups of order 8 only D4 has five involutions and two elements
    # of order 4; among groups of order 12 only A4 has eight elements of order 3.
    square = order_profile([power_shuffle(m, 2, 1, k) for k in ShuffleKind])
    assert square == Counter({1: 1, 2: 5, 4: 2})
    cube = order_profile([power_shuffle(m, 3, 2, k) for k in ShuffleKind])
    assert cube == Counter({1: 1, 2: 3, 3: 8})


def test_report_json_round_trip_and_schema():
    r = verify(2, 4, 2)
    doc = json.loads(r.to_json())
    jsonschema.validate(doc, schemas.VERIFICATION)
    back = VerificationReport.from_json(r.to_json())
    assert back.to_dict() == r.to_dict()
    assert doc["computed_order"] == "8"


def test_report_rejects_inconsistent_verdict():
    doc = verify(2, 3, 1).to_dict()
    doc["commutation_ok"] = False
    with pytest.raises(ValueError):
        VerificationReport.from_dict(doc)
    doc["verdict"] = False
    assert VerificationReport.from_dict(doc).verdict is False


def test_verdict_is_conjunction():
    base = dict(params=PowerDeckParams(2, 3, 1), predicted_order=24, computed_order=24,
                order_matches=True, generator_checks=[GeneratorCheck("B1", True, True)],
                commutation_ok=True, conjugation_ok=True, product_relation_ok=None,
                complement_ok=True)
    assert VerificationReport(**base).verdict
    for key in ("order_matches", "commutation_ok", "conjugation_ok", "complement_ok",
                "product_relation_ok"):
        assert not VerificationReport(**{**base, key: False}).verdict
    bad_gen = [GeneratorCheck("B1", True, False)]
    assert not VerificationReport(**{**base, "generator_checks": bad_gen}).verdict


def test_prediction_document_schema():
    jsonschema.validate(predict(4, 6, 4).to_dict(), schemas.PREDICTION)


def test_central_symmetry_examples():
    assert central_symmetry(identity(8))
    assert central_symmetry(identity(7))
    assert not central_symmetry(transposition(8, 0, 1))
    # odd deck: middle card must stay put
    assert not central_symmetry(Perm([0, 2, 1]))
    for deck, m in [(12, 2), (12, 3), (12, 4), (12, 6), (20, 5), (9, 3), (15, 5), (21, 7)]:
        assert central_symmetry(out_shuffle(m, deck // m))
        assert central_symmetry(in_shuffle(m, deck // m))


def test_symmetry_bound():
    assert symmetry_bound(2) == 8
    assert symmetry_bound(3) == 48
    assert symmetry_bound(15) == math.factorial(15) * 2**15
    assert symmetry_bound(15) == 2 * schreier_sims([in_shuffle(2, 15), out_shuffle(2, 15)]).order
    assert schreier_sims([in_shuffle(3, 2), out_shuffle(3, 2)]).order == symmetry_bound(3)
    with pytest.raises(ParameterError):
        symmetry_bound(0)


@pytest.mark.parametrize("deck,m", [(9, 3), (15, 3), (15, 5), (21, 3), (21, 7)])
def test_odd_decks_symmetric_and_bounded(deck, m):
    gens = [in_shuffle(m, deck // m), out_shuffle(m, deck // m)]
    order = schreier_sims(gens).order
    assert symmetry_bound(deck // 2) % order == 0
    if order <= 10**4:
        assert all(central_symmetry(g) for g in bfs_enumerate(gens).elements)
