"""Bi-Cohen-Macaulay graphs: certificates, classification, generic models.

The public surface mirrors the module layout: ``graphs`` for combinatorics,
``ideals`` for squarefree monomial ideals and Alexander duality,
``resolutions`` for exact homology and Betti tables, ``bicm`` for the
certificate, ``classify`` for the bipartite/chordal families, ``generic``
for tree models, ``separation`` for inseparability, ``audit`` for the
exhaustive theorem audit.
"""

from .bicm import BiCMCertificate, certify_bicm, quick_reject
from .classify import (BipartiteBiCMWitness, ChordalBiCMWitness,
                       build_bipartite_bicm, build_chordal_bicm,
                       recognize_bipartite_bicm, recognize_chordal_bicm,
                       reduction_ideal_check)
from .errors import ConsistencyError, InputError, SizeGuardError
from .generic import (RelationMatrix, generic_graph, generic_ideal,
                      generic_matrix, path_endpoints, recover_tree)
from .graphs import Graph, Tree
from .ideals import (SquarefreeIdeal, alexander_dual, edge_ideal, make_ideal,
                     minimal_primes, squarefree_veronese, substitute)
from .resolutions import (BettiTable, FieldSpec, SimplicialComplex,
                          betti_table, eagon_reiner_check,
                          has_linear_resolution, independence_complex,
                          is_cohen_macaulay, reduced_homology_ranks)
from .separation import (InseparableModel, SeparationCandidate,
                         dual_specialization_check, inseparable_model,
                         is_inseparable, linear_syzygy_graph, relation_trees,
                         validate_separation)

__version__ = "0.1.0"

__all__ = [
    "BiCMCertificate", "BettiTable", "BipartiteBiCMWitness",
    "ChordalBiCMWitness", "ConsistencyError", "FieldSpec", "Graph",
    "InputError", "InseparableModel", "RelationMatrix", "SeparationCandidate",
    "SimplicialComplex", "SizeGuardError", "SquarefreeIdeal", "Tree",
    "alexander_dual", "betti_table", "build_bipartite_bicm",
    "build_chordal_bicm", "certify_bicm", "dual_specialization_check",
    "eagon_reiner_check", "edge_ideal", "generic_graph", "generic_ideal",
    "generic_matrix", "has_linear_resolution", "independence_complex",
    "inseparable_model", "is_cohen_macaulay", "is_inseparable",
    "linear_syzygy_graph", "make_ideal", "minimal_primes", "path_endpoints",
    "quick_reject", "recognize_bipartite_bicm", "recognize_chordal_bicm",
    "recover_tree", "reduced_homology_ranks", "reduction_ideal_check",
    "relation_trees", "squarefree_veronese", "substitute",
    "validate_separation",
]
