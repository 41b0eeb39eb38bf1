"""qgrass: exact-arithmetic workbench for quantum cluster structures on Grassmannians.

Highlights:
  * weak-separation combinatorics and the quasi-commutation exponent c(I, J),
  * kappa/lambda invariants of rank-one cycle representations, with an
    independent truncated-ring linear-algebra oracle,
  * a based quantum torus with exact right division,
  * quantum seeds (B, L) with Laurent-expansion mutation tracking,
  * the rectangle seed of Gr(m, n) and exchange-graph exploration,
  * a quantum matrix algebra oracle (straightening, quantum minors,
    quasi-commutation, short quantum Plücker relations),
  * a CLI (``qgrass``) and a session HTTP service.
"""

from .builder import (
    L_from_labels,
    classical_plucker_eval,
    explore_exchange_graph,
    initial_seed,
    relabel_after_exchange,
)
from .errors import QGrassError
from .qmatrix import QuantumMatrixAlgebra
from .rankone import kappa, kappa_truncated_oracle, lambda_pair, min_exponent_vector
from .seeds import (
    QuantumSeed,
    check_compatible,
    exchange_exponents,
    mutate_BL,
    mutate_seed,
)
from .subsets import (
    c_exponent,
    classify_noncrossing,
    is_maximal_ws,
    is_ws_collection,
    max_diag,
    partition_from_subset,
    subset_from_partition,
)
from .torus import TorusElement, gamma, mul_monomials
from .upoly import UFrac

__all__ = [
    "L_from_labels",
    "QGrassError",
    "QuantumMatrixAlgebra",
    "QuantumSeed",
    "TorusElement",
    "UFrac",
    "c_exponent",
    "check_compatible",
    "classical_plucker_eval",
    "classify_noncrossing",
    "exchange_exponents",
    "explore_exchange_graph",
    "gamma",
    "initial_seed",
    "is_maximal_ws",
    "is_ws_collection",
    "kappa",
    "kappa_truncated_oracle",
    "lambda_pair",
    "max_diag",
    "min_exponent_vector",
    "mul_monomials",
    "mutate_BL",
    "mutate_seed",
    "partition_from_subset",
    "relabel_after_exchange",
    "subset_from_partition",
]

__version__ = "0.1.0"
