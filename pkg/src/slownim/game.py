"""Game model for exact slow NIM.

NIM(n, k): there are n piles of stones, and a move removes exactly one stone
from each of exactly k piles.  The player who cannot move loses.  Positions
are kept canonical (coordinates sorted non-decreasingly) because the game is
symmetric under pile permutations.  Pile sizes are plain Python ints, so very
large piles are handled exactly.

Most of this package targets the n = k + 1 family, where a move keeps exactly
one pile untouched; such a move is named by the 1-based index of the kept
coordinate in the sorted position.  For general (n, k) a move is the sorted
tuple of kept indices (size n - k).

There is also a hypergraph variant: a move picks a hyperedge all of whose
piles are nonempty and removes one stone from each pile of that edge.  With
the complete k-uniform hypergraph this is NIM(n, k) again, except that the
edge names the reduced piles instead of the kept ones.  Hyperedges refer to
fixed pile identities, so the hypergraph game is not permutation symmetric
and its positions are deliberately *not* canonicalized.
"""

from __future__ import annotations

import itertools
import operator
from dataclasses import dataclass

Position = tuple[int, ...]


@dataclass(frozen=True)
class GameSpec:
    """Parameters of one game: pile count n, move size k, optional hyperedges.

    When ``hyperedges`` is given, moves come from the edges (each edge is a
    set of 1-based pile indices) and ``k`` is ignored for move generation.
    """

    n: int
    k: int
    hyperedges: frozenset[frozenset[int]] | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")
        if not isinstance(self.k, int) or not 0 < self.k <= self.n:
            raise ValueError(f"k must satisfy 0 < k <= n, got k={self.k!r}")
        if self.hyperedges is not None:
            edges = frozenset(frozenset(e) for e in self.hyperedges)
            if not edges:
                raise ValueError("hyperedge set must be nonempty")
            for edge in edges:
                if not edge:
                    raise ValueError("hyperedges must be nonempty")
                if not all(isinstance(i, int) and 1 <= i <= self.n for i in edge):
                    raise ValueError(f"hyperedge {set(edge)} not within piles 1..{self.n}")
            object.__setattr__(self, "hyperedges", edges)


def complete_hypergraph(n: int, k: int) -> frozenset[frozenset[int]]:
    """All k-subsets of {1..n}; with these edges the hypergraph game is NIM(n, k)."""
    return frozenset(frozenset(c) for c in itertools.combinations(range(1, n + 1), k))


def canonicalize(raw) -> Position:
    """Sorted tuple of the pile sizes; rejects empty input and negative piles."""
    coords = [operator.index(c) for c in raw]
    if not coords:
        raise ValueError("a position needs at least one pile")
    if any(c < 0 for c in coords):
        raise ValueError(f"pile sizes must be nonnegative, got {coords}")
    coords.sort()
    return tuple(coords)


def _check_len(spec: GameSpec, x: Position) -> None:
    if len(x) != spec.n:
        raise ValueError(f"position has {len(x)} piles, spec wants {spec.n}")


def is_terminal(spec: GameSpec, x) -> bool:
    """True when no move is available from x."""
    if spec.hyperedges is not None:
        pos = tuple(operator.index(c) for c in x)
        _check_len(spec, pos)
        return not hypergraph_legal_moves(spec, pos)
    x = canonicalize(x)
    _check_len(spec, x)
    # A move needs k nonempty piles.
    positive = sum(1 for c in x if c > 0)
    return positive < spec.k


def legal_moves(spec: GameSpec, x):
    """Moves from canonical x.

    For n = k + 1 returns the legal keep-indices as plain ints (1-based on the
    sorted position); otherwise returns sorted tuples of kept indices.  Moves
    keeping equal coordinates are not deduplicated here -- callers that want
    distinct successors dedupe at the successor level.
    """
    x = canonicalize(x)
    _check_len(spec, x)
    n, k = spec.n, spec.k
    positive = [i for i in range(1, n + 1) if x[i - 1] > 0]
    if len(positive) < k:
        return []
    moves = []
    for reduced in itertools.combinations(positive, k):
        keep = tuple(i for i in range(1, n + 1) if i not in reduced)
        moves.append(keep[0] if n == k + 1 else keep)
    moves.sort()
    return moves


def apply_move(spec: GameSpec, x, move) -> Position:
    """Canonical successor of x under a keep-index (int) or keep-set move."""
    x = canonicalize(x)
    _check_len(spec, x)
    keep = frozenset([move]) if isinstance(move, int) else frozenset(move)
    if len(keep) != spec.n - spec.k or not all(1 <= i <= spec.n for i in keep):
        raise ValueError(f"move {move!r} is not a keep-set of size {spec.n - spec.k}")
    out = []
    for i, c in enumerate(x, start=1):
        if i in keep:
            out.append(c)
        else:
            if c == 0:
                raise ValueError(f"illegal move {move!r} from {x}: pile {i} is empty")
            out.append(c - 1)
    return canonicalize(out)


def hypergraph_legal_moves(spec: GameSpec, x) -> list[frozenset[int]]:
    """Playable hyperedges at x (all piles of the edge nonempty), in stable order."""
    if spec.hyperedges is None:
        raise ValueError("spec has no hyperedges")
    pos = tuple(operator.index(c) for c in x)
    _check_len(spec, pos)
    if any(c < 0 for c in pos):
        raise ValueError(f"pile sizes must be nonnegative, got {list(pos)}")
    playable = [e for e in spec.hyperedges if all(pos[i - 1] > 0 for i in e)]
    playable.sort(key=lambda e: tuple(sorted(e)))
    return playable


def apply_hypergraph_move(spec: GameSpec, x, edge) -> tuple[int, ...]:
    """Successor of x with one stone removed from each pile of the edge.

    Coordinates keep their original order: hyperedges name fixed piles.
    """
    pos = tuple(operator.index(c) for c in x)
    _check_len(spec, pos)
    edge = frozenset(edge)
    if spec.hyperedges is None or edge not in spec.hyperedges:
        raise ValueError(f"{set(edge)} is not a hyperedge of the spec")
    if any(pos[i - 1] <= 0 for i in edge):
        raise ValueError(f"illegal move {set(edge)} from {pos}: empty pile in edge")
    return tuple(c - 1 if i in edge else c for i, c in enumerate(pos, start=1))


def successors(spec: GameSpec, x) -> list:
    """Distinct successor positions of x, in stable sorted order.

    Canonical positions for plain NIM(n, k); raw (order-preserving) tuples for
    hypergraph specs.
    """
    if spec.hyperedges is not None:
        succ = {apply_hypergraph_move(spec, x, e) for e in hypergraph_legal_moves(spec, x)}
        return sorted(succ)
    x = canonicalize(x)
    _check_len(spec, x)
    n, k = spec.n, spec.k
    positive = [i for i in range(n) if x[i] > 0]
    if len(positive) < k:
        return []
    succ = set()
    for reduced in itertools.combinations(positive, k):
        child = list(x)
        for i in reduced:
            child[i] -= 1
        child.sort()
        succ.add(tuple(child))
    return sorted(succ)
