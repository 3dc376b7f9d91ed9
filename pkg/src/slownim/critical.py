"""Minimal positions of a given remoteness, and their closed form for n = k+1.

A position is m-critical when its remoteness is m and it dominates (sorted
forms, coordinatewise) no other position of remoteness m.  For NIM(k+1, k)
the m-critical positions are exactly:

* branch A: sum(x) == k*m, max(x) <= m, and all piles even when m is even /
  exactly one pile even when m is odd;
* branch B: sum(x) == k*m + k - 1, max(x) < m, m even, all piles odd
  (the exceptional positions).

``enumerate_critical`` generates both branches directly as bounded sorted
partitions with parity filters.  ``check_conjecture`` probes the conjectured
generalization to arbitrary (n, k) -- k*m <= sum(x) < k*(m+1) and
max(x) <= m for every m-critical x -- against the brute-force oracle and
*reports* violations instead of asserting, since the statement is unproven.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .game import GameSpec, Position, canonicalize
from .oracle import ResourceLimitError, critical_oracle


@dataclass
class CriticalReport:
    """Outcome of a critical-position enumeration or conjecture check."""

    m: int
    positions: tuple[Position, ...]
    branches: dict[Position, str | None] = field(default_factory=dict)
    violations: tuple[tuple[Position, str], ...] = ()


def dominates(x, y) -> bool:
    """Coordinatewise >= on the sorted forms."""
    x = canonicalize(x)
    y = canonicalize(y)
    if len(x) != len(y):
        raise ValueError(f"cannot compare {len(x)} piles with {len(y)}")
    return all(a >= b for a, b in zip(x, y))


def strictly_dominates(x, y) -> bool:
    x = canonicalize(x)
    y = canonicalize(y)
    return dominates(x, y) and x != y


def is_m_critical(x, k: int, m: int) -> str | None:
    """'A' or 'B' (the matching branch above) or None; n = k + 1 only."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"m must be a nonnegative integer, got {m!r}")
    x = canonicalize(x)
    if len(x) != k + 1:
        raise ValueError(f"expected k+1 = {k + 1} piles, got {len(x)}")
    total = sum(x)
    evens = sum(1 for c in x if c % 2 == 0)
    if total == k * m and x[-1] <= m:
        if m % 2 == 0 and evens == len(x):
            return "A"
        if m % 2 == 1 and evens == 1:
            return "A"
    if total == k * m + k - 1 and x[-1] < m and m % 2 == 0 and evens == 0:
        return "B"
    return None


def _sorted_partitions(total: int, parts: int, lo: int, hi: int):
    """Non-decreasing tuples of the given length in [lo, hi] summing to total."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    vmax = min(hi, total // parts)      # smallest part cannot exceed the mean
    vmin = max(lo, total - hi * (parts - 1))
    for v in range(vmin, vmax + 1):
        for rest in _sorted_partitions(total - v, parts - 1, v, hi):
            yield (v,) + rest


def enumerate_critical(k: int, m: int, *, max_positions: int = 1_000_000) -> CriticalReport:
    """All m-critical positions of NIM(k+1, k), straight from the closed form."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"k must be a positive integer, got {k!r}")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"m must be a nonnegative integer, got {m!r}")
    n = k + 1
    branches: dict[Position, str | None] = {}

    def grab(candidates, wanted_branch):
        for z in candidates:
            if len(branches) >= max_positions:
                raise ResourceLimitError(
                    f"more than {max_positions} critical positions; "
                    "raise max_positions to enumerate them all",
                    explored=len(branches),
                )
            branches[z] = wanted_branch

    if m % 2 == 0:
        grab((z for z in _sorted_partitions(k * m, n, 0, m)
              if all(c % 2 == 0 for c in z)), "A")
        if m > 0:
            grab((z for z in _sorted_partitions(k * m + k - 1, n, 0, m - 1)
                  if all(c % 2 == 1 for c in z)), "B")
    else:
        grab((z for z in _sorted_partitions(k * m, n, 0, m)
              if sum(1 for c in z if c % 2 == 0) == 1), "A")
    return CriticalReport(m=m, positions=tuple(sorted(branches)), branches=branches)


def check_conjecture(spec: GameSpec, m: int, bound: int, *,
                     max_states: int | None = None) -> CriticalReport:
    """Probe the conjectured sum/max bounds on the oracle's m-critical
    positions of an arbitrary NIM(n, k); violations are reported, never
    asserted."""
    crits = sorted(critical_oracle(spec, m, bound, max_states=max_states))
    violations: list[tuple[Position, str]] = []
    k = spec.k
    for x in crits:
        total = sum(x)
        if not k * m <= total < k * (m + 1):
            violations.append(
                (x, f"sum {total} outside [{k * m}, {k * (m + 1)})"))
        if x[-1] > m:
            violations.append((x, f"max coordinate {x[-1]} exceeds m = {m}"))
    branches: dict[Position, str | None] = {}
    if spec.n == spec.k + 1:
        branches = {x: is_m_critical(x, k, m) for x in crits}
    return CriticalReport(m=m, positions=tuple(crits), branches=branches,
                          violations=tuple(violations))
