"""
eqos - equivariant Orlik-Solomon engine.

Exact-arithmetic construction of the Orlik-Solomon, equivariant Orlik-Solomon
and Varchenko-Gel'fand presentations of a real hyperplane arrangement over
GF(2), with a topological cross-check through the Salvetti complex.
"""

__version__ = "0.1.0"
