import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from shufflegroups.errors import DegreeMismatchError, ParameterError
from shufflegroups.group import bfs_enumerate, contains, group_order, schreier_sims
from shufflegroups.perm import Perm, compose, identity, transposition
from shufflegroups.shuffles import in_shuffle, out_shuffle
from shufflegroups.structure import central_symmetry, symmetry_bound


def io_gens(deck, m):
    return [in_shuffle(m, deck // m), out_shuffle(m, deck // m)]


def generator_sets(max_degree=7, max_gens=3):
    return st.integers(1, max_degree).flatmap(
        lambda n: st.lists(st.permutations(range(n)).map(Perm), min_size=1, max_size=max_gens))


def test_bfs_examples():
    assert bfs_enumerate(io_gens(4, 2)).order == 8
    assert bfs_enumerate([out_shuffle(2, 26)]).order == 8
    assert bfs_enumerate(io_gens(6, 3)).order == 48


def test_bfs_cap_truncates():
    e = bfs_enumerate(io_gens(10, 2), cap=100)
    assert not e.complete
    assert e.order == 100
    assert bfs_enumerate(io_gens(4, 2), cap=8).complete


def test_bfs_trivial_and_errors():
    e = bfs_enumerate([], degree=5)
    assert e.complete and list(e.elements) == [identity(5)]
    with pytest.raises(ParameterError):
        bfs_enumerate([])
    with pytest.raises(DegreeMismatchError):
        bfs_enumerate([identity(3), identity(4)])
    with pytest.raises(ParameterError):
        bfs_enumerate([identity(3)], cap=0)


def test_bfs_labels_and_membership():
    e = bfs_enumerate([("I", in_shuffle(2, 2)), ("O", out_shuffle(2, 2))])
    assert [label for label, _ in e.generator_labels] == ["I", "O"]
    assert identity(4) in e
    assert e.index(identity(4)) == 0
    assert transposition(4, 0, 1) not in e


@pytest.mark.parametrize("deck,m", [(4, 2), (6, 3), (8, 2), (9, 3), (12, 3)])
def test_bfs_is_closed(deck, m):
    gens = io_gens(deck, m)
    e = bfs_enumerate(gens)
    assert identity(deck) in e
    for g in e.elements:
        for s in gens:
            assert compose(g, s) in e


def test_schreier_sims_examples():
    assert schreier_sims(io_gens(10, 2)).order == 1920
    assert schreier_sims(io_gens(14, 2)).order == 322560
    assert schreier_sims([identity(6)]).order == 1
    assert schreier_sims([], degree=3).order == 1


def test_group_order_large_decks():
    assert group_order(schreier_sims(io_gens(30, 2))) == math.factorial(15) * 2**14
    assert group_order(schreier_sims(io_gens(30, 2))) == 21424936845312000
    assert group_order(schreier_sims(io_gens(32, 2))) == 160
    assert group_order(schreier_sims(io_gens(52, 2))) == math.factorial(26) * 2**26


def test_contains_examples():
    chain = schreier_sims(io_gens(8, 2))
    assert contains(chain, out_shuffle(2, 4))
    assert contains(chain, identity(8))
    assert not contains(chain, transposition(8, 0, 1))
    with pytest.raises(DegreeMismatchError):
        contains(chain, identity(6))


def check_bsgs(b, gens):
    assert b.order == math.prod(len(t) for t in b.transversals)
    for level, (point, t) in enumerate(zip(b.base, b.transversals)):
        for q, u in t.items():
            assert u(point) == q
            assert all(u(bp) == bp for bp in b.base[:level])
    for g in b.strong_generators + list(gens):
        assert contains(b, g)


@pytest.mark.parametrize("deck,m", [(10, 2), (12, 3), (16, 4), (30, 2), (52, 2)])
def test_bsgs_invariants(deck, m):
    gens = io_gens(deck, m)
    check_bsgs(schreier_sims(gens), gens)


def test_schreier_sims_is_deterministic():
    a = schreier_sims(io_gens(52, 2))
    b = schreier_sims(io_gens(52, 2))
    assert a.base == b.base and a.order == b.order


@settings(max_examples=150, deadline=None)
@given(generator_sets())
def test_engines_agree_with_each_other_and_sympy(gens):
    b = schreier_sims(gens)
    e = bfs_enumerate(gens)
    assert e.complete
    assert e.order == b.order
    assert PermutationGroup([Permutation(g.tolist()) for g in gens]).order() == b.order
    check_bsgs(b, gens)
    for g in e.elements:
        assert contains(b, g)


@settings(max_examples=40, deadline=None)
@given(st.integers(10, 40).flatmap(
    lambda n: st.lists(st.permutations(range(n)).map(Perm), min_size=1, max_size=3)))
def test_chain_matches_sympy_on_larger_degrees(gens):
    expected = PermutationGroup([Permutation(g.tolist()) for g in gens]).order()
    assert schreier_sims(gens).order == expected


@pytest.mark.parametrize("deck", range(4, 41, 2))
def test_lagrange_bound(deck):
    n = deck // 2
    for m in range(2, deck + 1):
        if deck % m == 0:
            assert symmetry_bound(n) % schreier_sims(io_gens(deck, m)).order == 0


def test_membership_rejects_asymmetric_perms():
    rng = np.random.default_rng(20231016)
    for deck in (8, 10, 12, 16):
        chain = schreier_sims(io_gens(deck, 2))
        rejected = 0
        while rejected < 100:
            p = Perm(rng.permutation(deck))
            if central_symmetry(p):
                continue
            assert not contains(chain, p)
            rejected += 1


@pytest.mark.parametrize("deck,m", [(8, 2), (10, 5), (12, 4), (16, 8)])
def test_every_bfs_element_is_member(deck, m):
    gens = io_gens(deck, m)
    chain = schreier_sims(gens)
    for g in bfs_enumerate(gens).elements:
        assert contains(chain, g)
