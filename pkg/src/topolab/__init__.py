"""Exact computations with finite topologies, ideal topologies and Hattori
topologies on the rational-endpoint real line."""

from .core import (FiniteSpace, analyze, discrete, from_opens, generate, khalimsky, mask_of,
                   members, odd_even, product, sierpinski, trivial)
from .compat import (TopologyPair, are_pi_compatible, decompose_open, gdelta_pi_network,
                     is_admissible_extension, is_pi_network, meet)
from .ideals import (Ideal, alpha_topology, is_star_admissible, local_function, nwd_ideal,
                     star_closure, star_topology)
from .enumeration import enumerate_topologies, search_counterexample, verify

__version__ = "0.1.0"
