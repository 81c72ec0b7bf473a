"""Matching counts, matching energy, Hosoya index and edge connectivity of small
graphs, with exhaustive checks that K^k_{n-1,1} maximizes matching energy and
Hosoya index among connected graphs of order n and edge connectivity k."""

from .canon import canonical_certificate
from .cuts import CutWitness, all_min_cut_sides, edge_connectivity, has_trivial_min_cut
from .energy import (EnergyResult, graph_energy, matching_energy, matching_energy_quadrature,
                     matching_energy_roots, tree_equality_check)
from .enumeration import enumerate_connected, enumerate_trees
from .graph import (FamilyParams, Graph, apex_family, build_graph, complete_graph, delete_edge,
                    delete_vertex, delete_vertex_pair, disjoint_union, operation_I, split_family)
from .graph6 import decode as graph6_decode, encode as graph6_encode
from .matchcount import (MatchCounter, MatchVector, PolyCoeffs, QuasiOrder, hosoya_index, match_vector,
                         match_vector_bruteforce, poly_coeffs, quasi_compare, vertex_recurrence_check)
from .verify import SweepReport, classify, sweep, verify_theorem

__version__ = "0.1.0"
