"""Solver and verification toolkit for exact slow NIM, NIM(n, k).

A move removes one stone from each of exactly k piles out of n; whoever
cannot move loses.  The package solves the n = k + 1 family in polynomial
time (``remoteness_fast``), plays the optimal M-rule strategy (``m_count``),
enumerates minimal positions of a given remoteness (``enumerate_critical``),
and carries brute-force oracles plus closed-form four-pile rules to verify
it all.
"""

from .game import (
    GameSpec,
    Position,
    apply_hypergraph_move,
    apply_move,
    canonicalize,
    complete_hypergraph,
    hypergraph_legal_moves,
    is_terminal,
    legal_moves,
    successors,
)
from .oracle import (
    DEFAULT_MAX_STATES,
    MAX_STATES_ENV,
    ResourceLimitError,
    b_oracle,
    critical_oracle,
    is_basic,
    m_of_oracle,
    remoteness_oracle,
    sg_oracle,
)
from .mrule import MRulePlayout, e_index, m_count, m_move
from .fast import (
    AlgorithmInvariantError,
    AnalysisResult,
    BasicCertificate,
    EValue,
    E_value,
    b_fast,
    b_t,
    best_move,
    is_exceptional,
    remoteness_fast,
)
from .critical import (
    CriticalReport,
    check_conjecture,
    dominates,
    enumerate_critical,
    is_m_critical,
    strictly_dominates,
)
from .nim43 import Nim43Verdict, nim43_consistency, nim43_status

__version__ = "0.1.0"

__all__ = [
    "GameSpec",
    "Position",
    "canonicalize",
    "legal_moves",
    "apply_move",
    "is_terminal",
    "successors",
    "hypergraph_legal_moves",
    "apply_hypergraph_move",
    "complete_hypergraph",
    "remoteness_oracle",
    "sg_oracle",
    "is_basic",
    "b_oracle",
    "critical_oracle",
    "m_of_oracle",
    "ResourceLimitError",
    "DEFAULT_MAX_STATES",
    "MAX_STATES_ENV",
    "e_index",
    "m_move",
    "m_count",
    "MRulePlayout",
    "is_exceptional",
    "b_t",
    "E_value",
    "EValue",
    "b_fast",
    "remoteness_fast",
    "best_move",
    "AnalysisResult",
    "BasicCertificate",
    "AlgorithmInvariantError",
    "dominates",
    "strictly_dominates",
    "is_m_critical",
    "enumerate_critical",
    "check_conjecture",
    "CriticalReport",
    "nim43_status",
    "nim43_consistency",
    "Nim43Verdict",
]
