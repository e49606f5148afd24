"""Numerical semigroups, value ideals, monomial staircases and certified reductions."""

from .certify import (
    ReductionCertificate,
    VerificationReport,
    deserialize,
    load,
    save,
    serialize,
    verify,
)
from .errors import StaircaseKitError
from .extcalc import lemma4_step, reduce_to_maximal
from .numsgp import (
    NumericalSemigroup,
    apery_set,
    arithmetic_semigroup,
    conductor_arithmetic,
    contains,
    from_generators,
    gaps,
)
from .truncmono import (
    StaircaseIdeal,
    TruncatedRingParams,
    curve_ring,
    normalize,
    staircase_of_conductor,
    truncated_ring,
)
from .valideal import (
    SemigroupIdeal,
    colon,
    conductor_ideal,
    ideal_from_values,
    is_stable_under_normalization,
    max_ideal_power,
    multiply,
    reduction_exponent,
    stable_power_threshold,
)

__version__ = "0.1.0"
