"""Graph k-colorability via homomorphisms from right-angled Artin groups
onto products of free groups."""

from .errors import (InternalError, ParseError, PreconditionError, RaagColorError,
                     VerificationError)
from .freegroup import (FreeWord, ProductElement, ProductShape, abelianized_vector,
                        blocks_proportional, exp_sum, parse_word, product_commute,
                        product_inverse, product_multiply, word_inverse, word_multiply,
                        words_commute)
from .graph import (Coloring, Graph, min_coloring_oracle, parse_coloring, parse_graph,
                    random_graph, serialize_coloring, serialize_graph, validate_coloring)
from .homomorphism import (Homomorphism, abelianization_matrix, parse_hom, serialize_hom,
                           verify_h1_iso, verify_homomorphism)
from .linalg import (BlockRowPartition, RationalMatrix, det, principal_completion_check,
                     rank, select_block_rows)
from .reduction import (EquivalenceReport, coloring_to_surjection, equivalence_harness,
                        round_trip, surjection_to_coloring)

__all__ = [
    "BlockRowPartition", "Coloring", "EquivalenceReport", "FreeWord", "Graph", "Homomorphism",
    "InternalError", "ParseError", "PreconditionError", "ProductElement", "ProductShape",
    "RaagColorError", "RationalMatrix", "VerificationError", "abelianization_matrix",
    "abelianized_vector", "blocks_proportional", "coloring_to_surjection", "det",
    "equivalence_harness", "exp_sum", "min_coloring_oracle", "parse_coloring", "parse_graph",
    "parse_hom", "parse_word", "principal_completion_check", "product_commute",
    "product_inverse", "product_multiply", "random_graph", "rank", "round_trip",
    "select_block_rows", "serialize_coloring", "serialize_graph", "serialize_hom",
    "surjection_to_coloring", "validate_coloring", "verify_h1_iso", "verify_homomorphism",
    "word_inverse", "word_multiply", "words_commute",
]
