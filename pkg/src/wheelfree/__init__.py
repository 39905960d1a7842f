"""Wheel-free extremal spectral graph toolkit.

Constructs the extremal families (a matching joined to an independent set,
the complement of the 7-cycle, spider-neighborhood shapes), computes
adjacency and signless-Laplacian spectral radii exactly where closed forms
exist and numerically otherwise, and reproduces the extremal
characterization by exhaustive isomorph-free search at small orders.
"""

from .graphs import (Graph, GraphError, MAX_VERTICES, bits, complement,
                     complete, cycle, delete_edge, delete_vertex,
                     disjoint_union, edges_between, empty, from_edges,
                     from_graph6, g_ab, g_abcd, h_n, induced, join, k_copies,
                     mask_of, matching_join, path, permute, to_graph6, wheel)
from .wheels import (PairViolation, WheelWitness, brute_force_contains_wheel,
                     check_pair_neighborhoods, find_wheel_witness, is_wheel_free,
                     neighborhood_components)
from .spectral import (ConvergenceError, SpectralResult, adjacency_matrix,
                       closed_form_rho_a_hn, closed_form_rho_q, graph_matrix,
                       jacobi_eigensystem, row_sum_bounds, signless_laplacian,
                       spectral_radius, walk_count_r)
from .quotient import (Partition, PartitionError, QuotientMatrix,
                       apex_spider_partition, char_poly, char_poly_exact,
                       coarsest_equitable, is_equitable, is_largest_root,
                       legs_only_top_below, poly_eval, poly_shift,
                       quotient_eigenvalues, quotient_matrix,
                       apex_spider_char_poly_check, shares_top_eigenvalue)
from .enumeration import (BudgetExhausted, CanonicalForm, GeneratorConfig,
                          canonical_form, canonical_graph, canonical_graph6,
                          enumerate_graphs, enumerate_wheel_free, spool)
from .search import (SearchReport, StructuralDiagnostics, TheoremVerdict,
                     confirm_tie_exact, max_spectral_radius,
                     structural_diagnostics, verify_theorem1, verify_theorem2)

__version__ = "0.1.0"
