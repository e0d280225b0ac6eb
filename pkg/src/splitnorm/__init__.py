"""splitnorm: exact and numerical L^p Fourier norms of split functions.

The exact engine computes (N_t f)^p -- the p-th power of the L^p norm of
the Fourier transform of the split function S_t f -- as a piecewise
polynomial in the shift t, for even p, over Gaussian-rational data.  A
numerical engine handles arbitrary p > 1 with certified error budgets, and
a multiplier module covers the split Fourier-multiplier constants, bounds,
and lower-bound estimation.
"""

from .errors import (
    BudgetExceeded,
    GridOverflow,
    InapplicableHypothesis,
    InvalidOffsets,
    InvalidSpec,
    MissingInput,
    NegativeNorm,
    NegativeShift,
    NonRealInput,
    OddOrNonintegerP,
    OddP,
    POutOfRange,
    ParseError,
    SplitnormError,
    TailDivergence,
    UnverifiedPositivity,
    ZeroPolynomial,
)
from .polyalg import (
    MonotoneVerdict,
    PiecewisePoly,
    Poly,
    SignVerdict,
    conv_power,
    convolve,
    correlate,
    indicator,
    is_nondecreasing_on,
    is_nonincreasing_on,
    is_nonnegative,
    isolate_real_roots,
    l2_inner,
    reflect,
    tent,
    translate,
    zero_function,
)
from .splitcore import (
    ClassSVerdict,
    GenSplitSpec,
    SplitPair,
    apply_gen_split,
    apply_split,
    class_s_check,
    class_s_sufficient,
    even_odd,
    split,
)
from .normprofile import (
    CoeffSeq,
    ConstancyVerdict,
    NormProfile,
    SeriesProfile,
    check_constancy,
    check_monotone,
    gen_profile,
    gen_t0,
    gen_t0_2,
    newt_constant,
    norm_profile,
    separable_profile,
    series_profile,
)
from .oscint import FTEvaluator, NumericNorm, ft_eval, norm_numeric, tail_bound
from .multnorm import (
    BoundReport,
    DiscreteMultiplier,
    EstimateResult,
    MultConstants,
    bound_report,
    constants,
    estimate_lower,
    exact_norm_positive_kernel,
    halfline_multiplier,
    segment_multiplier,
    split_multiplier,
    t0,
    tent_multiplier,
)

__version__ = "0.1.0"
