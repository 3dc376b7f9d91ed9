"""The M-rule: an optimal greedy strategy for NIM(k+1, k).

One move keeps exactly one pile.  The rule picks the kept pile like this:
if every pile is odd, keep a largest one; otherwise keep a smallest even
pile, breaking ties towards the largest index.  Played from both sides this
rule realizes the remoteness exactly: the playout length equals the game
length under optimal play, so the rule is optimal for winner and loser alike.

On a sorted position the kept index is ``e_index``: the maximal index holding
the smallest even coordinate, or n when all coordinates are odd.  Reducing
every other coordinate by one leaves the tuple sorted, so M-moves need no
re-sorting -- a fact the fast solver exploits and the tests verify.
"""

from __future__ import annotations

from dataclasses import dataclass

from .game import GameSpec, Position, canonicalize, is_terminal


@dataclass(frozen=True)
class MRulePlayout:
    """Full record of a playout where both players follow the M-rule."""

    start: Position
    moves: tuple[int, ...]          # kept index per step, 1-based
    positions: tuple[Position, ...]  # start, every intermediate, terminal

    @property
    def length(self) -> int:
        return len(self.moves)


def _default_spec(x: Position) -> GameSpec:
    if len(x) < 2:
        raise ValueError("the M-rule needs n = k + 1 >= 2 piles")
    return GameSpec(len(x), len(x) - 1)


def _check_spec(spec: GameSpec | None, x: Position) -> GameSpec:
    if spec is None:
        return _default_spec(x)
    if spec.hyperedges is not None:
        raise ValueError("the M-rule is defined for plain NIM(k+1, k) only")
    if spec.n != spec.k + 1:
        raise ValueError(f"the M-rule needs n = k + 1, got n={spec.n} k={spec.k}")
    if len(x) != spec.n:
        raise ValueError(f"position has {len(x)} piles, spec wants {spec.n}")
    return spec


def e_index(x) -> int:
    """1-based index of the pile the M-rule keeps, on the sorted position.

    Maximal index holding the smallest even coordinate; n when all odd.
    """
    x = canonicalize(x)
    first_even = next((i for i, c in enumerate(x) if c % 2 == 0), None)
    if first_even is None:
        return len(x)
    v = x[first_even]
    last = first_even
    while last + 1 < len(x) and x[last + 1] == v:
        last += 1
    return last + 1


def m_move(x, spec: GameSpec | None = None) -> Position:
    """One M-rule move; the result is sorted without re-sorting."""
    x = canonicalize(x)
    spec = _check_spec(spec, x)
    if is_terminal(spec, x):
        raise ValueError(f"{x} is terminal; no move exists")
    keep = e_index(x) - 1
    out = tuple(c if i == keep else c - 1 for i, c in enumerate(x))
    assert all(out[i] <= out[i + 1] for i in range(len(out) - 1))
    return out


def m_count(x, spec: GameSpec | None = None) -> MRulePlayout:
    """Play the M-rule from x until no move remains; the playout length
    equals the remoteness of x."""
    x = canonicalize(x)
    spec = _check_spec(spec, x)
    moves: list[int] = []
    trace = [x]
    cur = x
    while not is_terminal(spec, cur):
        keep = e_index(cur)
        moves.append(keep)
        cur = tuple(c if i == keep - 1 else c - 1 for i, c in enumerate(cur))
        trace.append(cur)
    return MRulePlayout(start=x, moves=tuple(moves), positions=tuple(trace))
