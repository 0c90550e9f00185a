"""twistlab: exact computable invariants.

Periodic continued fractions of real quadratic numbers, Morita
equivalence and isomorphism of noncommutative-torus parameters,
stationary dimension groups with decidable positivity, and
elliptic-curve twists over Q with the two-level isomorphism dichotomy.
"""

from .surd import QuadraticSurd, format_surd, parse_surd
from .contfrac import (
    EventuallyPeriodicCF,
    FiniteCF,
    canonical_rotation,
    convergents,
    expand_rational,
    expand_surd,
    value_of,
)
from .torus import (
    TorusParameter,
    UnimodularWitness,
    apply_mobius,
    isomorphic,
    morita_equivalent,
    morita_invariant,
    sl2_witness,
)
from .dimgroup import (
    K0Element,
    Positivity,
    StationaryDimensionGroup,
    from_cf_period,
    from_matrix,
    is_positive,
    rank2_morita_equivalent,
    rank2_slope,
)
from .elliptic import (
    EllipticCurve,
    TwistParameter,
    c_isomorphic,
    j_invariant,
    q_isomorphic,
    twist,
    twist_between,
)

__version__ = "0.1.0"

__all__ = [
    "QuadraticSurd", "parse_surd", "format_surd",
    "FiniteCF", "EventuallyPeriodicCF", "expand_rational", "expand_surd",
    "value_of", "convergents", "canonical_rotation",
    "TorusParameter", "UnimodularWitness", "apply_mobius", "isomorphic",
    "morita_equivalent", "sl2_witness", "morita_invariant",
    "StationaryDimensionGroup", "K0Element", "Positivity", "from_matrix",
    "from_cf_period", "is_positive", "rank2_slope", "rank2_morita_equivalent",
    "EllipticCurve", "TwistParameter", "j_invariant", "twist",
    "c_isomorphic", "q_isomorphic", "twist_between",
]
