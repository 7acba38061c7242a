"""Edge-disjoint graph packings with no rainbow subgraph.

A packing places edge-disjoint copies of a pattern graph into a host and
colors each copy with its own color.  A rainbow copy of a forbidden graph
is one whose edges all come from distinct copies.  This package builds
large rainbow-free packings, certifies progression-free difference sets,
audits pentagon packings against counting bounds, solves small instances
exactly, and optimizes the blowup weight triples behind the lower-bound
constructions.
"""

from .certificates import FAIL, LOWER_BOUND, PASS, Certificate
from .constructions import (UnbalancedBlowupShape, c5_blowup_packing,
                            k5_double_pentagon, kt_packing,
                            perfect_decomposition_check, unbalanced_blowup,
                            unbalanced_edge_count)
from .errors import AuditError, BudgetError, GuardError, PackingError
from .gadgets import (Gadget, QFreeSet, behrend_q_free, enumerate_gadgets,
                      gadget_satisfied, is_q_limited_triple,
                      max_q_free_bruteforce, verify_gadget_free, verify_q_free)
from .graphs import (BlowupSpec, ColoredPacking, SimpleGraph, blow_up,
                     canonical_json, chromatic_number, girth, union_graph)
from .lp import FractionalPackingProblem, lp_fractional_packing
from .optimizer import (WeightTriple, c5_decomposition_coeff, class_ratios,
                        density, maximize_density, reference_coeffs,
                        reference_triple, solve_abg, upper_bound_coeff)
from .solver import (SearchConfig, SearchResult, enumerate_copies,
                     max_rainbow_free_packing, oracle_max_packing)
from .verifier import (OrderClass, PentagonAudit, RainbowWitness,
                       classify_order, exists_homomorphism, find_rainbow,
                       pentagon_audit)

__version__ = "0.1.0"

__all__ = [
    "AuditError",
    "BlowupSpec",
    "BudgetError",
    "Certificate",
    "ColoredPacking",
    "FAIL",
    "FractionalPackingProblem",
    "Gadget",
    "GuardError",
    "LOWER_BOUND",
    "OrderClass",
    "PASS",
    "PackingError",
    "PentagonAudit",
    "QFreeSet",
    "RainbowWitness",
    "SearchConfig",
    "SearchResult",
    "SimpleGraph",
    "UnbalancedBlowupShape",
    "WeightTriple",
    "behrend_q_free",
    "blow_up",
    "c5_blowup_packing",
    "c5_decomposition_coeff",
    "canonical_json",
    "chromatic_number",
    "class_ratios",
    "classify_order",
    "density",
    "enumerate_copies",
    "enumerate_gadgets",
    "exists_homomorphism",
    "find_rainbow",
    "gadget_satisfied",
    "girth",
    "is_q_limited_triple",
    "k5_double_pentagon",
    "kt_packing",
    "lp_fractional_packing",
    "max_q_free_bruteforce",
    "max_rainbow_free_packing",
    "maximize_density",
    "oracle_max_packing",
    "pentagon_audit",
    "perfect_decomposition_check",
    "reference_coeffs",
    "reference_triple",
    "solve_abg",
    "unbalanced_blowup",
    "unbalanced_edge_count",
    "union_graph",
    "upper_bound_coeff",
    "verify_gadget_free",
    "verify_q_free",
]
