"""Finite ample groupoids: bisections, full groups, convolution algebras and their automorphisms.

Subpackages:
- core: groupoid tables, validation, orbits and isotropy
- bisections: the bisection inverse semigroup and the full group F(G)
- convolution: exact scalars, C_c(G) and Lamperti (spatial) elements
- norms: I-norm, regular representation and p-operator norm bounds
- cohomology: cocycles, coboundaries and H^1(G, T)
- automorphisms: Aut(G), gamma, lift, upsilon, phi, omega and inner maps
- verification: split exact sequence checks
- builders: groupoid constructions and the .gpd / element grammars
- cli: command-line reports
"""

from .core import FiniteGroupoid, validate, orbits, is_effective

__version__ = "0.3.0"

__all__ = ["FiniteGroupoid", "validate", "orbits", "is_effective", "__version__"]
