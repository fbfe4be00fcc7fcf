"""Group-constrained matroid base solvers and a brute-force verification lab."""

from .errors import CapacityError, GcmbError, InternalError, ParseError, UsageError
from .groups import (
    GroupElement,
    GroupSpec,
    Subgroup,
    closeness_class,
    cosets,
    davenport,
    stabilizer,
)
from .matroids import (
    Matroid,
    brualdi_bijection,
    contract,
    delete,
    dual,
    enumerate_bases,
    find_blocks,
    find_exchange,
    is_k_replaceable,
    is_strongly_base_orderable,
    load_matroid,
    make_explicit,
    make_graphic,
    make_linear,
    make_partition,
    make_uniform,
)
from .intersection import max_common_independent, min_weight_common_base
from .solver import (
    Labeling,
    Signature,
    SignatureDelta,
    SolveResult,
    base_with_signature,
    enumerate_signatures,
    find_optimum_base,
    label_sum,
    signature_of,
    solve_enum,
    solve_proximity,
)
from .lab import (
    LabelImage,
    Witness,
    check_k_close,
    check_schrijver_seymour,
    check_strongly_k_close,
    is_block_isolating,
    is_strong_block_isolating,
    isolation_scan,
    label_image,
    reduce_witness,
    sbo_strong_closeness_suite,
)
from .catalog import (
    CatalogEntry,
    builtin_instances,
    filter_blocks,
    load_catalog,
    tight_example,
)

__all__ = [
    "CapacityError",
    "CatalogEntry",
    "GcmbError",
    "GroupElement",
    "GroupSpec",
    "InternalError",
    "LabelImage",
    "Labeling",
    "Matroid",
    "ParseError",
    "Signature",
    "SignatureDelta",
    "SolveResult",
    "Subgroup",
    "UsageError",
    "Witness",
    "base_with_signature",
    "brualdi_bijection",
    "builtin_instances",
    "check_k_close",
    "check_schrijver_seymour",
    "check_strongly_k_close",
    "closeness_class",
    "contract",
    "cosets",
    "davenport",
    "delete",
    "dual",
    "enumerate_bases",
    "enumerate_signatures",
    "filter_blocks",
    "find_blocks",
    "find_exchange",
    "find_optimum_base",
    "is_block_isolating",
    "is_k_replaceable",
    "is_strong_block_isolating",
    "is_strongly_base_orderable",
    "isolation_scan",
    "label_image",
    "label_sum",
    "load_catalog",
    "load_matroid",
    "make_explicit",
    "make_graphic",
    "make_linear",
    "make_partition",
    "make_uniform",
    "max_common_independent",
    "min_weight_common_base",
    "reduce_witness",
    "sbo_strong_closeness_suite",
    "signature_of",
    "solve_enum",
    "solve_proximity",
    "stabilizer",
    "tight_example",
]
