"""Schubert cells in global Milnor fibers of determinantal and Pfaffian
hypersurfaces: ordered pseudo-rotation factorizations, cell identification,
and the exact Schubert-cycle cohomology calculus."""

from .tolerances import DEFAULT_TOL, ToleranceConfig
from .numlin import (
    IwasawaParts,
    diagonalize_quadratic_form,
    eig_unitary,
    haar_sample,
    hermitian_inner,
    iwasawa_split,
    jn,
    normalize_skew_form,
    pfaffian,
    solvable_sample,
)
from .rotor import (
    HPseudoRotation,
    PseudoRotation,
    apply,
    cartan_conjugate,
    conjugate_by_unitary,
    hline_canonical,
    in_cartan_model,
    involutions,
    jmul,
    min_index,
    sigma,
    whitehead_interchange,
)
from .factor import (
    OrderedFactorization,
    SchubertSymbol,
    cartan_model_sample,
    cell_sample,
    embed,
    factorize_decreasing,
    factorize_skew,
    factorize_su,
    factorize_symmetric,
    reverse_order,
    sample_interior_params,
    schubert_map,
    schubert_map_sk,
    schubert_map_sy,
    symbol_invariance_check,
)
from .milnor import (
    CellIdentification,
    FiberElement,
    closure_product_check,
    dressing_sample,
    fiber_sample,
    identify,
    identify_general,
    identify_skew,
    identify_symmetric,
    sol_invariance_check,
    undress_skew,
    undress_symmetric,
)
from . import cohom

__all__ = [
    "DEFAULT_TOL",
    "ToleranceConfig",
    "IwasawaParts",
    "diagonalize_quadratic_form",
    "eig_unitary",
    "haar_sample",
    "hermitian_inner",
    "iwasawa_split",
    "jn",
    "normalize_skew_form",
    "pfaffian",
    "solvable_sample",
    "HPseudoRotation",
    "PseudoRotation",
    "apply",
    "cartan_conjugate",
    "conjugate_by_unitary",
    "hline_canonical",
    "in_cartan_model",
    "involutions",
    "jmul",
    "min_index",
    "sigma",
    "whitehead_interchange",
    "OrderedFactorization",
    "SchubertSymbol",
    "cartan_model_sample",
    "cell_sample",
    "embed",
    "factorize_decreasing",
    "factorize_skew",
    "factorize_su",
    "factorize_symmetric",
    "reverse_order",
    "sample_interior_params",
    "schubert_map",
    "schubert_map_sk",
    "schubert_map_sy",
    "symbol_invariance_check",
    "CellIdentification",
    "FiberElement",
    "closure_product_check",
    "dressing_sample",
    "fiber_sample",
    "identify",
    "identify_general",
    "identify_skew",
    "identify_symmetric",
    "sol_invariance_check",
    "undress_skew",
    "undress_symmetric",
    "cohom",
]
