"""Exact Stanley depth of monomial ideals and their quotients."""

from .formulas import (
    maximal_ideal_sdepth,
    morey_depth_lower_bound,
    path_power_sdepth,
    path_sdepth,
    stabilization_threshold,
)
from .ideal import (
    MonomialIdeal,
    add_generators,
    colon,
    contains,
    edge_ideal,
    embed,
    equals,
    maximal_ideal,
    minimalize,
    path_ideal,
    power,
)
from .monomial import ExponentVector, add, divides, saturating_subtract, total_degree
from .poset import (
    CharPoset,
    Interval,
    Mode,
    build_ideal_poset,
    build_quotient_poset,
    covers,
    default_bound,
    interval_contained,
    layer,
    layer_multiples,
    rho,
)
from .solver import (
    PartitionCertificate,
    brute_force_sdepth,
    partition_exists,
    sdepth_ideal,
    sdepth_of_poset,
    sdepth_quotient,
    validate_certificate,
)

__version__ = "0.1.0"
