"""Closed-form solver: exceptional positions, per-cutoff values, E, B, remoteness."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from slownim.critical import dominates
from slownim.fast import (
    AlgorithmInvariantError,
    AnalysisResult,
    E_value,
    b_fast,
    b_t,
    best_move,
    is_exceptional,
    remoteness_fast,
)
from slownim.game import GameSpec
from slownim.oracle import b_oracle, is_basic, remoteness_oracle


def test_is_exceptional_examples():
    assert is_exceptional((3, 3, 3), 2) == 4
    assert is_exceptional((3, 5, 5), 2) == 6
    assert is_exceptional((1, 1, 1), 2) is None  # sum 3 gives m = 1, odd
    assert is_exceptional((2, 2, 2), 2) is None  # not all odd
    assert is_exceptional((1, 3, 5), 2) is None  # m = 4 but max 5 >= 4
    assert is_exceptional((7, 7, 7, 7, 7), 4) == 8


def test_b_t_examples():
    assert b_t((2, 2, 2), 2, 4) == 2
    assert b_t((0, 0, 5), 2, 2) == 0
    assert [b_t((1, 1, 2), 2, t) for t in (2, 3, 4)] == [0, 0, None]
    with pytest.raises(ValueError):
        b_t((2, 2, 2), 2, 5)
    with pytest.raises(ValueError):
        b_t((2, 2, 2), 2, 1)


def test_E_value_examples():
    assert E_value((2, 2, 2), 2).value == 2
    assert E_value((1, 1, 2), 2).value == 0
    assert E_value((0, 0, 0), 2).value == 0


def test_E_witness_is_a_dominated_basic_position():
    for x in itertools.combinations_with_replacement(range(9), 3):
        ev = E_value(x, 2)
        assert ev.value % 2 == 0
        assert is_basic(ev.witness_z, 2) == ev.value
        assert dominates(x, ev.witness_z)
        assert b_t(x, 2, ev.witness_t) == ev.value


def test_E_is_the_best_even_b_under_B():
    for x in itertools.combinations_with_replacement(range(9), 3):
        b = b_oracle(x, 2)
        e = E_value(x, 2).value
        assert e <= b
        assert (e == b) == (b % 2 == 0)


def test_b_fast_examples_and_grid_agreement():
    assert b_fast((2, 2, 2), 2) == 2
    assert b_fast((1, 1, 2), 2) == 1
    assert b_fast((0, 0, 7), 2) == 0
    for k in (2, 3):
        for x in itertools.combinations_with_replacement(range(7), k + 1):
            if is_exceptional(x, k) is None:
                assert b_fast(x, k) == b_oracle(x, k), x


def test_b_fast_rejects_exceptional_positions():
    with pytest.raises(ValueError):
        b_fast((3, 3, 3), 2)


def test_remoteness_fast_examples():
    res = remoteness_fast((3, 3, 3), 2)
    assert isinstance(res, AnalysisResult)
    assert (res.remoteness, res.status, res.branch) == (4, "P", "exceptional")
    assert res.best_keep_index == 3

    res = remoteness_fast((3, 5, 5), 2)
    assert (res.remoteness, res.status, res.branch) == (6, "P", "exceptional")

    res = remoteness_fast((1, 1, 1), 2)
    assert (res.remoteness, res.status) == (1, "N")

    res = remoteness_fast((0, 0, 9), 2)
    assert (res.remoteness, res.status, res.branch) == (0, "P", "terminal")
    assert res.best_keep_index is None and res.certificate is None


def test_certificates_check_out():
    for x in itertools.combinations_with_replacement(range(9), 3):
        res = remoteness_fast(x, 2)
        if res.branch == "E-rule":
            cert = res.certificate
            assert cert.b == res.remoteness
            assert is_basic(cert.z, 2) == cert.b
            assert dominates(x, cert.z)
        else:
            assert res.certificate is None


def test_best_move_examples():
    assert best_move((1, 1, 3), 2) == 3
    assert best_move((3, 3, 3), 2) == 3
    assert best_move((2, 4, 5), 2) == 1
    with pytest.raises(ValueError):
        best_move((0, 0, 4), 2)


def test_dimension_and_k_checks():
    with pytest.raises(ValueError):
        remoteness_fast((1, 2, 3), 3)
    with pytest.raises(ValueError):
        remoteness_fast((1, 2, 3), 0)
    with pytest.raises(ValueError):
        E_value((1, 2, 3, 4), 2)


def test_matches_oracle_on_a_four_pile_grid():
    spec = GameSpec(4, 3)
    memo: dict = {}
    for x in itertools.combinations_with_replacement(range(7), 4):
        assert (
            remoteness_fast(x, 3).remoteness
            == remoteness_oracle(spec, x, memo=memo)
        ), x


@given(st.lists(st.integers(0, 2**60), min_size=3, max_size=3))
def test_permutation_invariance(coords):
    base = remoteness_fast(tuple(coords), 2)
    for perm in itertools.permutations(coords):
        res = remoteness_fast(perm, 2)
        assert (res.remoteness, res.status) == (base.remoteness, base.status)


@given(st.lists(st.integers(0, 10**30), min_size=4, max_size=4))
def test_huge_coordinates_are_exact(coords):
    x = tuple(sorted(coords))
    res = remoteness_fast(x, 3)
    assert res.status in {"P", "N"}
    assert (res.remoteness % 2 == 0) == (res.status == "P")
    if res.branch == "E-rule":
        assert is_basic(res.certificate.z, 3) == res.certificate.b
        assert dominates(x, res.certificate.z)


def test_invariant_error_is_exported():
    assert issubclass(AlgorithmInvariantError, RuntimeError)
