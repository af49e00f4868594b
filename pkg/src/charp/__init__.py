"""Computer algebra in prime characteristic: perfections, Frobenius and tight closure, invariants."""

__version__ = "0.1.0"

from .errors import (
    CharPError,
    ContextMismatch,
    DegenerateInput,
    NotInvariant,
    ParseError,
    ResourceBoundExceeded,
    UnsupportedRing,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    colon_ideal,
    frobenius_power_ideal,
    ideal_intersect,
    ideal_member,
    normal_form,
    quotient_colon,
    quotient_member,
)
from .perfection import (
    Found,
    NotFoundUpTo,
    PerfElement,
    frobenius_closure_member,
    perf_arith,
    perf_colon,
    perf_divides,
    perf_gcd,
    perf_normalize,
)
from .polyarith import (
    FieldElement,
    NotAPthPower,
    Polynomial,
    RingCtx,
    frobenius_power,
    multivariate_divide,
    poly_arith,
    pth_root,
)
from .polygcd import poly_gcd
from .textio import parse_poly
