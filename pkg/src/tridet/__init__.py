"""Exact real-root counting and tridiagonal determinantal representations."""

from .detrep import (
    DetRep,
    IsolationList,
    RetryExhausted,
    detrep_build,
    detrep_from_q,
    interlacing_q,
    interval_family_scan,
    isolate_real_roots,
    lower_bound_check,
)
from .exact_core import (
    DenseMat,
    Poly,
    UnitLDL,
    ZeroPivot,
    cauchy_bound,
    companion_matrix,
    ldlt_decompose,
    lower_tri_inverse,
    poly_divrem,
    poly_gcd,
)
from .hankel import (
    HankelSeq,
    HornerBasis,
    barnett_check,
    dual_q_tilde,
    duality_check,
    hankel_signature,
    hankel_tridiag,
    horner_basis,
    intertwinning_check,
    newton_sums,
    pch_matrix,
    series_expand,
    wdr,
)
from .srems import (
    DegreeBreakdown,
    NotSquarefree,
    SignSeq,
    SremSeq,
    classical_sturm_query,
    pmv,
    sign_sequence,
    srems_compute,
    sturm_count,
    tarski_query,
)
from .tridiag import (
    SurdTridiag,
    TridiagRep,
    build_L,
    char_polys,
    dual,
    split_blocks,
    surd_view,
    tridiag_from_srems,
)
