"""Exact computation of degree excess functions of monomial ideals."""

from .asymptotics import (
    DegreeExcessProfile,
    analyze,
    check_g1,
    excess_profile,
    kodiyalam_reduction,
    lead_bound_epsilon,
    lead_bound_r,
    local_maxima,
    p_of,
    reduction_number,
)
from .families import FamilySpec, build_family
from .monomial import (
    FactoredIdeal,
    MonomialIdeal,
    contains,
    ideal_equals,
    max_degree,
    member_of_power,
    minimalize,
    mu,
    power,
    product_disjoint,
)
from .newton import caratheodory_certificate, delta, in_upper_cone, vertices

__all__ = [
    "DegreeExcessProfile", "FactoredIdeal", "FamilySpec", "MonomialIdeal",
    "analyze", "build_family", "caratheodory_certificate", "check_g1", "contains",
    "delta", "excess_profile", "ideal_equals", "in_upper_cone", "kodiyalam_reduction",
    "lead_bound_epsilon", "lead_bound_r", "local_maxima", "max_degree", "member_of_power",
    "minimalize", "mu", "p_of", "power", "product_disjoint", "reduction_number", "vertices",
]
