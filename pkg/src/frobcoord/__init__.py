"""Pregroup grammaticality, semiring tensor networks and coordination.

The package checks whether typed word sequences reduce to a target type,
evaluates grammatical sentences as tensor-network contractions over a
real or boolean carrier, and builds coordinator tensors whose contraction
provably equals the entry-wise merge of the coordinated conjuncts.
"""

from . import errors
from .coordination import (coordinate_closed_form, coordinator_tensor,
                           ditransitive_coordination, stripping_sentence)
from .evaluator import (SpaceAssignment, TensorNetwork, build_network,
                        evaluate, evaluate_sentence)
from .lexicon import (Lexicon, LexiconEntry, SplitMix64, dumps_lexicon,
                      generate_random_lexicon, load_lexicon, parse_lexicon,
                      save_lexicon)
from .pregroup import (Derivation, PregroupType, SimpleType, coordinator_type,
                       enumerate_reductions, parse_type, reduce)
from .selftest import SuiteResult, run_selftest
from .semiring import BOOLEAN, REAL, Semiring
from .tensor import (Tensor, Wire, contract, eta_cap, frobenius_delta,
                     frobenius_iota, frobenius_mu, frobenius_mu_matrix,
                     frobenius_zeta, permute_wires, random_tensor, scalar,
                     tensor_product)

__version__ = "0.1.0"

__all__ = [
    "errors", "Semiring", "REAL", "BOOLEAN",
    "Wire", "Tensor", "scalar", "tensor_product", "contract", "eta_cap",
    "frobenius_delta", "frobenius_mu", "frobenius_mu_matrix",
    "frobenius_iota", "frobenius_zeta", "permute_wires", "random_tensor",
    "SimpleType", "PregroupType", "Derivation", "parse_type", "reduce",
    "enumerate_reductions", "coordinator_type",
    "SpaceAssignment", "TensorNetwork", "build_network", "evaluate",
    "evaluate_sentence",
    "coordinator_tensor", "coordinate_closed_form",
    "ditransitive_coordination", "stripping_sentence",
    "Lexicon", "LexiconEntry", "SplitMix64", "load_lexicon", "parse_lexicon",
    "save_lexicon", "dumps_lexicon", "generate_random_lexicon",
    "SuiteResult", "run_selftest",
    "__version__",
]
