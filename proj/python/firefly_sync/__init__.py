"""Finite-state pulse-coupled oscillator networks.

Thin Python layer over the C++ core: graph builders, the deterministic
update rule, exact orbit resolution, exhaustive synchronization sweeps,
and the randomized variant (Monte Carlo ensembles and exact absorbing
chains).
"""

from ._firefly import (
    Graph,
    blinking_state,
    chain_analysis,
    compute_orbit,
    is_n_synchronizing,
    make_complete,
    make_cycle,
    make_path,
    make_star,
    mc_ensemble,
    parse_family,
    step,
)

__all__ = [
    "Graph",
    "blinking_state",
    "chain_analysis",
    "compute_orbit",
    "is_n_synchronizing",
    "make_complete",
    "make_cycle",
    "make_path",
    "make_star",
    "mc_ensemble",
    "parse_family",
    "step",
]
