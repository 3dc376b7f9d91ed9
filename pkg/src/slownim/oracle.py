"""Brute-force ground truth for small games.

Everything here works straight from the definitions, with no shortcuts, so
the fast solver and the closed-form results can be checked against it:

* ``remoteness_oracle`` -- length of the game under optimal play, where the
  winner hurries and the loser delays.  Even remoteness means the player to
  move loses (a P-position).
* ``sg_oracle`` -- classical Sprague-Grundy value (mex over successors); it is
  zero exactly on P-positions.
* ``is_basic`` / ``b_oracle`` -- the "basic position" machinery for n = k + 1:
  a basic position z has k * b(z) stones in total, no pile above b(z), and
  all piles even when b(z) is even / exactly one pile even when b(z) is odd.
  ``b_oracle(x)`` is the largest b(z) over basic z dominated by x, found by
  exhaustive enumeration.
* ``critical_oracle`` / ``m_of_oracle`` -- minimal positions of a given
  remoteness under coordinatewise dominance of sorted forms, and the value
  m(x) defined by which of those minimal positions x dominates.

Memo tables are plain dicts keyed by canonical positions (raw tuples for
hypergraph specs).  Every table has an explicit size cap; crossing it raises
``ResourceLimitError`` instead of silently degrading.  Tables are filled with
write-once deterministic values, so sharing one across threads is harmless
under the GIL; by default every call builds its own.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

from .game import GameSpec, Position, canonicalize, successors

MAX_STATES_ENV = "SLOWNIM_MAX_STATES"
DEFAULT_MAX_STATES = 1_000_000


class ResourceLimitError(RuntimeError):
    """A memo table outgrew its configured cap."""

    def __init__(self, message: str, explored: int):
        super().__init__(message)
        self.explored = explored


def _state_limit(max_states: int | None) -> int:
    if max_states is not None:
        if max_states < 1:
            raise ValueError("max_states must be positive")
        return max_states
    env = os.environ.get(MAX_STATES_ENV)
    return int(env) if env else DEFAULT_MAX_STATES


def _root_position(spec: GameSpec, x) -> tuple[int, ...]:
    if spec.hyperedges is not None:
        pos = tuple(int(c) for c in x)
        if len(pos) != spec.n:
            raise ValueError(f"position has {len(pos)} piles, spec wants {spec.n}")
        if any(c < 0 for c in pos):
            raise ValueError("pile sizes must be nonnegative")
        return pos
    pos = canonicalize(x)
    if len(pos) != spec.n:
        raise ValueError(f"position has {len(pos)} piles, spec wants {spec.n}")
    return pos


def _solve(spec: GameSpec, root, combine, memo: dict, limit: int) -> int:
    """Fill memo bottom-up with combine(successor values); iterative on purpose
    so deep positions cannot blow the recursion stack."""
    if root in memo:
        return memo[root]
    stack = [(root, None)]
    while stack:
        pos, succ = stack[-1]
        if pos in memo:
            stack.pop()
            continue
        if succ is None:
            succ = successors(spec, pos)
            stack[-1] = (pos, succ)
        missing = [s for s in succ if s not in memo]
        if missing:
            if len(memo) + len(stack) + len(missing) > limit:
                raise ResourceLimitError(
                    f"state limit {limit} exceeded while solving {root} "
                    f"(set {MAX_STATES_ENV} or pass max_states to raise it)",
                    explored=len(memo),
                )
            stack.extend((s, None) for s in missing)
            continue
        if len(memo) >= limit:
            raise ResourceLimitError(
                f"state limit {limit} exceeded while solving {root} "
                f"(set {MAX_STATES_ENV} or pass max_states to raise it)",
                explored=len(memo),
            )
        memo[pos] = combine([memo[s] for s in succ])
        stack.pop()
    return memo[root]


def _remoteness_combine(values: list[int]) -> int:
    if not values:
        return 0
    evens = [v for v in values if v % 2 == 0]
    # A winning successor exists: take the quickest win.  Otherwise all
    # successors win for the opponent: stall as long as possible.
    if evens:
        return 1 + min(evens)
    return 1 + max(values)


def _sg_combine(values: list[int]) -> int:
    seen = set(values)
    g = 0
    while g in seen:
        g += 1
    return g


def remoteness_oracle(spec: GameSpec, x, *, memo: dict | None = None,
                      max_states: int | None = None) -> int:
    """Game length under optimal play (winner minimizes, loser maximizes)."""
    root = _root_position(spec, x)
    if memo is None:
        memo = {}
    return _solve(spec, root, _remoteness_combine, memo, _state_limit(max_states))


def sg_oracle(spec: GameSpec, x, *, memo: dict | None = None,
              max_states: int | None = None) -> int:
    """Sprague-Grundy value: mex of the successor values."""
    root = _root_position(spec, x)
    if memo is None:
        memo = {}
    return _solve(spec, root, _sg_combine, memo, _state_limit(max_states))


def is_basic(z, k: int) -> int | None:
    """b(z) if z is basic for NIM(k+1, k), else None.

    Basic means: sum(z) == k * b, every pile <= b, and the piles are all even
    when b is even / all odd except exactly one when b is odd.  Note b = 0 is
    a valid (falsy) return; compare against None.
    """
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    z = canonicalize(z)
    if len(z) != k + 1:
        raise ValueError(f"basic positions have k+1 = {k + 1} piles, got {len(z)}")
    b, rem = divmod(sum(z), k)
    if rem:
        return None
    if z[-1] > b:
        return None
    evens = sum(1 for c in z if c % 2 == 0)
    if b % 2 == 0:
        return b if evens == len(z) else None
    return b if evens == 1 else None


def _dominated_sorted(x: Position):
    """All non-decreasing tuples z with z[i] <= x[i]; exactly the sorted
    positions dominated by sorted x."""
    n = len(x)
    z = [0] * n

    def rec(i: int, lo: int):
        if i == n:
            yield tuple(z)
            return
        for v in range(lo, x[i] + 1):
            z[i] = v
            yield from rec(i + 1, v)

    yield from rec(0, 0)


@lru_cache(maxsize=None)
def _b_oracle_cached(x: Position, k: int) -> int:
    best = 0
    for z in _dominated_sorted(x):
        total = sum(z)
        b, rem = divmod(total, k)
        if rem or b <= best or z[-1] > b:
            continue
        evens = sum(1 for c in z if c % 2 == 0)
        if (b % 2 == 0 and evens == len(z)) or (b % 2 == 1 and evens == 1):
            best = b
    return best


def b_oracle(x, k: int) -> int:
    """Largest b(z) over basic z dominated by x, by exhaustive enumeration."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    x = canonicalize(x)
    if len(x) != k + 1:
        raise ValueError(f"b_oracle needs k+1 = {k + 1} piles, got {len(x)}")
    return _b_oracle_cached(x, k)


def _grid_positions(n: int, bound: int):
    return itertools.combinations_with_replacement(range(bound + 1), n)


@lru_cache(maxsize=64)
def _grid_criticals(spec: GameSpec, bound: int, limit: int) -> dict[int, tuple[Position, ...]]:
    """For every remoteness value on the grid [0..bound]^n: its minimal
    positions under coordinatewise dominance of sorted forms."""
    memo: dict = {}
    by_value: dict[int, list[Position]] = {}
    for x in _grid_positions(spec.n, bound):
        v = _solve(spec, x, _remoteness_combine, memo, limit)
        by_value.setdefault(v, []).append(x)
    criticals: dict[int, tuple[Position, ...]] = {}
    for v, group in by_value.items():
        # Anything strictly dominated has a strictly smaller sum, and by
        # transitivity a dominating witness can always be picked among the
        # already-accepted minimal ones, so one sum-ordered pass suffices.
        group.sort(key=sum)
        minimal: list[Position] = []
        for x in group:
            if not any(all(a <= b for a, b in zip(y, x)) and y != x for y in minimal):
                minimal.append(x)
        criticals[v] = tuple(sorted(minimal))
    return criticals


def _require_plain(spec: GameSpec, what: str) -> None:
    if spec.hyperedges is not None:
        raise ValueError(f"{what} is defined for plain NIM specs only")


def critical_oracle(spec: GameSpec, m: int, bound: int, *,
                    max_states: int | None = None) -> set[Position]:
    """Positions of remoteness m, with coordinates <= bound, that dominate no
    other position of remoteness m.

    The bound is the caller's promise that every relevant position fits in
    the grid; for n = k + 1 coordinates of such minimal positions never
    exceed m, so bound = m + 1 is comfortable.
    """
    _require_plain(spec, "critical_oracle")
    if m < 0 or bound < 0:
        raise ValueError("m and bound must be nonnegative")
    criticals = _grid_criticals(spec, bound, _state_limit(max_states))
    return set(criticals.get(m, ()))


def m_of_oracle(spec: GameSpec, x, bound: int, *, max_states: int | None = None) -> int:
    """The value m(x): x dominates some minimal position of remoteness m and
    none of remoteness m + 1.

    Needs bound large enough to hold the minimal positions one level above
    the answer, and raises ValueError when it can tell the bound was too
    small to certify that level.
    """
    _require_plain(spec, "m_of_oracle")
    x = canonicalize(x)
    if len(x) != spec.n:
        raise ValueError(f"position has {len(x)} piles, spec wants {spec.n}")
    criticals = _grid_criticals(spec, bound, _state_limit(max_states))
    dominated = [
        m for m, group in criticals.items()
        if any(len(z) == len(x) and all(a >= b for a, b in zip(x, z)) for z in group)
    ]
    if not dominated:
        raise ValueError(f"{x} dominates no minimal position within bound {bound}")
    m = max(dominated)
    if bound < m + 1:
        raise ValueError(
            f"bound {bound} too small to certify m({x}) = {m}: positions of "
            f"remoteness {m + 1} may lie outside the grid"
        )
    return m
