"""Exact invariants of complex projective line arrangements.

The package computes combinatorial and homeomorphism-type invariants of
arrangements defined over Galois number fields: incidence automorphisms,
tensor linking groups, and loop linking numbers via braided wiring diagrams
or certified projections.
"""

from .errors import ArrlinkError

__version__ = "0.1.0"

__all__ = ["ArrlinkError", "__version__"]
