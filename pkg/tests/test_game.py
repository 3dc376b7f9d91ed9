"""Game model: canonical positions, moves, terminality, hypergraph variant."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slownim.game import (
    GameSpec,
    apply_hypergraph_move,
    apply_move,
    canonicalize,
    complete_hypergraph,
    hypergraph_legal_moves,
    is_terminal,
    legal_moves,
    successors,
)

NIM32 = GameSpec(3, 2)


def test_canonicalize_sorts():
    assert canonicalize((2, 1, 3)) == (1, 2, 3)
    assert canonicalize([0, 0, 0]) == (0, 0, 0)
    assert canonicalize((5, 5, 3)) == (3, 5, 5)


def test_canonicalize_rejects_bad_input():
    with pytest.raises(ValueError):
        canonicalize(())
    with pytest.raises(ValueError):
        canonicalize((1, -1))
    with pytest.raises(TypeError):
        canonicalize((1.5, 2))


@given(st.lists(st.integers(min_value=0, max_value=10**12), min_size=1, max_size=7))
def test_canonicalize_is_sorting_and_idempotent(raw):
    once = canonicalize(raw)
    assert list(once) == sorted(raw)
    assert canonicalize(once) == once


def test_spec_validation():
    with pytest.raises(ValueError):
        GameSpec(3, 0)
    with pytest.raises(ValueError):
        GameSpec(3, 4)
    with pytest.raises(ValueError):
        GameSpec(0, 0)
    with pytest.raises(ValueError):
        GameSpec(3, 2, hyperedges=frozenset())
    with pytest.raises(ValueError):
        GameSpec(3, 2, hyperedges={frozenset({1, 5})})


def test_legal_moves_are_keep_indices_for_one_kept_pile():
    assert legal_moves(NIM32, (1, 1, 2)) == [1, 2, 3]
    assert legal_moves(NIM32, (0, 1, 2)) == [1]
    assert legal_moves(NIM32, (0, 0, 5)) == []


def test_legal_moves_are_keep_sets_otherwise():
    spec = GameSpec(4, 2)
    moves = legal_moves(spec, (1, 1, 1, 1))
    assert moves == sorted(itertools.combinations((1, 2, 3, 4), 2))


def test_legal_move_count_law():
    # sorted x with n = k + 1: every keep works when the minimum is positive,
    # only keeping the zero works when exactly one pile is empty
    for n in (3, 4, 5):
        spec = GameSpec(n, n - 1)
        for x in itertools.combinations_with_replacement(range(5), n):
            count = len(legal_moves(spec, x))
            if x[0] >= 1:
                assert count == n
            elif x[1] >= 1:
                assert count == 1
            else:
                assert count == 0


def test_apply_move_examples():
    assert apply_move(NIM32, (3, 3, 3), 3) == (2, 2, 3)
    assert apply_move(NIM32, (1, 1, 2), 3) == (0, 0, 2)
    assert apply_move(NIM32, (3, 5, 5), 1) == (3, 4, 4)
    assert apply_move(NIM32, (3, 5, 5), 3) == (2, 4, 5)


def test_apply_move_rejects_illegal():
    with pytest.raises(ValueError):
        apply_move(NIM32, (0, 1, 2), 3)  # would drive the empty pile negative
    with pytest.raises(ValueError):
        apply_move(NIM32, (1, 1, 2), (1, 2))  # keep-set of the wrong size


def test_is_terminal():
    assert is_terminal(NIM32, (0, 0, 7))
    assert not is_terminal(NIM32, (0, 1, 1))
    assert is_terminal(GameSpec(4, 3), (0, 0, 1, 2))
    assert not is_terminal(GameSpec(4, 3), (0, 1, 1, 2))
    assert is_terminal(GameSpec(2, 1), (0, 0))


@given(
    st.integers(min_value=2, max_value=5).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.integers(min_value=1, max_value=n),
            st.lists(st.integers(0, 30), min_size=n, max_size=n),
        )
    )
)
def test_every_move_removes_exactly_k_stones(args):
    n, k, coords = args
    spec = GameSpec(n, k)
    x = canonicalize(coords)
    for y in successors(spec, x):
        assert sum(y) == sum(x) - k
        assert all(c >= 0 for c in y)
        assert y == canonicalize(y)


def test_successors_examples():
    assert successors(NIM32, (1, 1, 2)) == [(0, 0, 2), (0, 1, 1)]
    assert successors(NIM32, (0, 0, 5)) == []
    assert successors(GameSpec(3, 3), (1, 2, 3)) == [(0, 1, 2)]


def test_hypergraph_moves_and_application():
    spec = GameSpec(3, 2, hyperedges={frozenset({1, 2}), frozenset({2, 3})})
    assert hypergraph_legal_moves(spec, (0, 1, 1)) == [frozenset({2, 3})]
    assert apply_hypergraph_move(spec, (0, 1, 1), frozenset({2, 3})) == (0, 0, 0)
    # hyperedges address fixed piles: no sorting of the position
    assert apply_hypergraph_move(spec, (2, 1, 0), frozenset({1, 2})) == (1, 0, 0)
    with pytest.raises(ValueError):
        apply_hypergraph_move(spec, (0, 1, 1), frozenset({1, 2}))
    with pytest.raises(ValueError):
        apply_hypergraph_move(spec, (1, 1, 1), frozenset({1, 3}))


def test_complete_hypergraph_matches_plain_game():
    for n in range(2, 6):
        for k in range(1, n + 1):
            plain = GameSpec(n, k)
            hyper = GameSpec(n, k, hyperedges=complete_hypergraph(n, k))
            for x in itertools.combinations_with_replacement(range(7), n):
                want = successors(plain, x)
                got = sorted({canonicalize(y) for y in successors(hyper, x)})
                assert got == want, (n, k, x)
