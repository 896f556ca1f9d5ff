"""Exact graph-homology and chord-diagram weight computations for
Rozansky-Witten invariants of formal hyperkaehler manifolds."""

__version__ = "0.1.0"
