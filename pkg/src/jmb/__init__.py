"""Exact engine for modular Jordan-type index bounds of finite linear groups."""

from .catalog import (
    Catalog,
    ComponentEntry,
    Condition,
    ConstituentEntry,
    LieTypeDescriptor,
    QuasicomponentEntry,
    alternating_min_degree,
    builtin_catalog,
    default_catalog,
    dyadic_weight,
    inertia_bound,
    is_prime,
    lie_component_bound,
    load_catalog,
    parse_catalog,
    primitive_cap,
    sp_normalizer_bound,
    spin_degree_divisor,
)
from .errors import (
    CapExceededError,
    CatalogError,
    CatalogParseError,
    CatalogValidationError,
    DomainError,
    EngineError,
    ThresholdNotFoundError,
)
from .exactnum import SciApprox, alpha_exponent, factorial, power, sci_string
from .pair_search import (
    Block,
    BoundResult,
    SaturatedPair,
    best_pair,
    bound_table,
    bound_value,
    generic_bound,
    pair_value,
    parse_shape,
    threshold,
)
from .tensor_search import (
    PrimitiveBound,
    TensorConfig,
    enumerate_tensor_configs,
    primitive_bound,
    tensor_value,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BoundResult",
    "CapExceededError",
    "Catalog",
    "CatalogError",
    "CatalogParseError",
    "CatalogValidationError",
    "ComponentEntry",
    "Condition",
    "ConstituentEntry",
    "DomainError",
    "EngineError",
    "LieTypeDescriptor",
    "PrimitiveBound",
    "QuasicomponentEntry",
    "SaturatedPair",
    "SciApprox",
    "TensorConfig",
    "ThresholdNotFoundError",
    "alpha_exponent",
    "alternating_min_degree",
    "best_pair",
    "bound_table",
    "bound_value",
    "builtin_catalog",
    "default_catalog",
    "dyadic_weight",
    "enumerate_tensor_configs",
    "factorial",
    "generic_bound",
    "inertia_bound",
    "is_prime",
    "lie_component_bound",
    "load_catalog",
    "pair_value",
    "parse_catalog",
    "parse_shape",
    "power",
    "primitive_bound",
    "primitive_cap",
    "sci_string",
    "sp_normalizer_bound",
    "spin_degree_divisor",
    "tensor_value",
    "threshold",
]
