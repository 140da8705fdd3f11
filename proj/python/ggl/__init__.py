"""Graph Ginzburg-Landau energies, gradient flows, and limit experiments.

Thin Python surface over the C++ core: weighted-graph calculus, periodic-grid
energies (h/k families and the nonlocal-means functional), explicit Euler
gradient flows, and the experiment harness.
"""

from ._ggl import *  # noqa: F401,F403
from ._ggl import __all__  # noqa: F401
