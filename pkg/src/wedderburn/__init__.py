"""Exact arithmetic in skew polynomial rings K[t;S,D] and Wedderburn polynomials."""

from .rings import (
    ContextMismatchError,
    FiniteField,
    IntegersMod,
    MatrixRing,
    NotInvertibleError,
    QuaternionAlgebra,
    RationalField,
    RationalFunctionField,
    Ring,
    Scalar,
    TriangularPairRing,
    Twist,
    UnsupportedContextError,
    UpperTriangularRing,
    builtin_ring,
    centralizer_basis,
    conjugating_element,
    is_in_centralizer,
    sd_conjugate,
)
from .parsing import ParseError, parse_element, parse_poly
from .skewpoly import (
    BezoutChainError,
    DegenerateTraceError,
    LlcmTrace,
    SkewPoly,
    SymmetricTable,
    bezout_eval,
    evaluate,
    llcm,
    llcm_linear,
    llcm_set,
    miura_check,
    norm_N,
    operator_apply,
    pindep_test,
    product_formula,
    pseudo_linear_apply,
    right_divmod,
    smul,
    symmetric_functions,
    viete_check,
)
from .matrix import (
    DivMatrix,
    LuDecomposition,
    SingularMatrixError,
    companion_check,
    gauss_invert,
    inverse_vandermonde_via_F,
    lu_vandermonde,
    lu_wronskian,
    quasideterminant,
    vandermonde,
    wronskian,
)
from .wpoly import (
    ClassData,
    Factorization,
    FlagChain,
    class_decomposition,
    enumerate_factorizations,
    enumerate_flags,
    exponent_space,
    factorization_from_flag,
    flag_from_factorization,
    is_w_polynomial,
    quadratic_relations_check,
    right_c_independent,
    root_set,
)
from .duo import DuoReport, duo_solve, is_left_duo, lemma71_construct, llcm2_exists

