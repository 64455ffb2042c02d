from .rootdata import (
    FAMILIES,
    RootSystemType,
    WeylElement,
    all_builtin_types,
    coxeter_element,
    is_periodic_component,
    root_system,
    simple_reflections,
)
from .signed import SignedPermutation, all_signed_permutations, check_condition2
from .census import (
    CensusReport,
    WeylGroup,
    census,
    coxeter_class_size,
    enumerate_weyl,
    solomon_coefficients,
)
from .lifts import lift_order_rule, lift_to_normalizer, weyl_image

__all__ = [
    "FAMILIES",
    "RootSystemType",
    "WeylElement",
    "WeylGroup",
    "CensusReport",
    "SignedPermutation",
    "all_builtin_types",
    "all_signed_permutations",
    "census",
    "check_condition2",
    "coxeter_class_size",
    "coxeter_element",
    "enumerate_weyl",
    "is_periodic_component",
    "lift_order_rule",
    "lift_to_normalizer",
    "root_system",
    "simple_reflections",
    "solomon_coefficients",
    "weyl_image",
]
