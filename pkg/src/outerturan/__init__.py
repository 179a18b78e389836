"""Outerplanar Turán numbers of double stars, computed and checked at small n."""

__version__ = "0.1.0"

from .graph import (BlockDecomposition, ContractViolation, Graph, Graph6Error, GraphError,
                    block_decomposition, canonical_form, contains_subgraph, graph6_decode,
                    graph6_encode, is_connected)
from .planarity import (OuterCycle, is_maximal_outerplanar, is_outerplanar, is_two_connected,
                        outer_cycle)
from .doublestar import (DoubleStarSpec, DoubleStarWitness, contains_double_star,
                         edge_hosts_double_star, every_34_edge_shares_neighbor,
                         is_double_star_free, shared_neighbor_holds)
from .constructions import (construct_Gn, construct_H, construct_Hprime, construct_On,
                            construct_Tn, construct_two_M5, f_formula, fan_mop, h_formula,
                            turan_formula)
from .extremal import (ExtremalResult, ResourceGuardError, ResultCache, TriangulationCode,
                       enumerate_connected_outerplanar, enumerate_mops, ex_connected, ex_general,
                       max_free_subgraph, probe_conjecture, verify_theorems)
