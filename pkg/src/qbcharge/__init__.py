"""Simulate fully charging quantum batteries and certify the entanglement they need."""

from .config import DEFAULT, Tolerances
from .entdepth import (
    DepthCertificate,
    OracleResult,
    PairCoefficients,
    exact_depth,
    max_pair_product,
    pair_product,
    reduced_purity,
    resource_depth,
    thm1_bound,
)
from .harness import ChargeReport, SweepRow, conjecture_audit, figure_sweep, report, thm2_check
from .metrics import (
    QslBreakdown,
    RateResult,
    charging_rate,
    charging_time,
    conjecture_rhs,
    qsl_tau,
    scheme_qsl,
    scheme_rate,
    stored_work,
)
from .numerics import EigenSystem, evolve, hermitian_eig, overlap
from .schemes import (
    HybridSpec,
    ParallelSpec,
    RealizedScheme,
    SU2Spec,
    Tridiag3Spec,
    TridiagSpec,
    build_hybrid,
    build_parallel,
    build_su2,
    build_tridiag,
    build_tridiag3,
    check_full_charging,
    hybrid_basis,
    hybrid_evolved,
    hybrid_hamiltonian,
    parallel_amplitudes,
    parallel_eta_squared,
    spectrum_condition_check,
    mirror_sign_ratios,
    su2_coefficients,
    su2_generators,
    tridiag3_admissible_ratios,
    tridiag3_analytic_state,
)

__version__ = "0.1.0"
