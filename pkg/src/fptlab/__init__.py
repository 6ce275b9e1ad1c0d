"""fptlab: exact prime-characteristic singularity invariants.

Sparse polynomial and ideal arithmetic over F_p, with the bracket-power
machinery needed to compute nu sequences, F-pure-threshold intervals
and certificates, test ideals, and exact F-signature samples and
left-derivative tables for polynomial hypersurfaces.
"""

from .errors import (
    ConstraintViolation,
    ExpansionTooLarge,
    FptlabError,
    InvalidParameter,
    MatrixTooLarge,
    NotInMaximalIdeal,
    NotMonomialIdeal,
    NotSharplyFPure,
    NotStabilized,
    NonProperIdeal,
    ParseError,
    QNotPowerOfP,
    ResourceGuard,
    RingMismatch,
    UnknownVariable,
    ZeroDenominator,
    ZeroDivisorArg,
    ZeroInverse,
    ZeroPolynomial,
)
from .primefield import BigRational, FpScalar, fp_inverse, is_prime, rat_reduce
from .polyring import (
    Monomial,
    PolyRing,
    SparsePoly,
    bracket_exponent,
    frobenius_decompose,
    mul_truncated,
    multinomial_expand_power,
    pow_truncated,
    truncate_mod_bracket,
)
from .ideals import (
    GREVLEX,
    Ideal,
    INFINITE,
    LEX,
    MonomialOrder,
    bracket_power,
    colon_principal,
    frobenius_root,
    groebner,
    ideal_equal,
    ideal_sum,
    length_colon_bracket,
    maximal_ideal,
    minimalize_generators,
    monomial_is_radical,
    normal_form,
    quotient_dimension,
    quotient_length,
)
from .thresholds import (
    FptCertificate,
    FptInterval,
    NuRecord,
    certify_fpt,
    compatible_chain,
    fpt_interval,
    is_sharply_fpure,
    isolated_certificate,
    isolated_criterion,
    nu_sequence,
)
from .testideals import (
    TauReport,
    test_ideal_agreement,
    test_ideal_compatible_chain,
    test_ideal_root_chain,
)
from .fsignature import (
    DerivativeRow,
    DerivativeTable,
    FsigSample,
    HeightEstimate,
    colength,
    fsignature_at,
    geom_sum,
    hilbert_kunz_length,
    hilbert_kunz_sequence,
    left_derivative_table,
    normalized_length_seq,
    signature_samples,
    splitting_height_estimate,
    splitting_number,
    splitting_ratio_estimate,
)
from .families import (
    CheckResult,
    FamilyInstance,
    VerifyReport,
    cusp_instance,
    deformed_fermat_instance,
    double_line_instance,
    equal_threshold_curve_instance,
    verify_cusp,
    verify_deformed_fermat,
    verify_double_line,
    verify_equal_threshold_curve,
)
from .cli import parse_polynomial

__version__ = "0.1.0"
