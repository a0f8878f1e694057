"""Transfer-matrix machinery for stationary measures of one-dimensional
two-state quantum walks, with a complete classification engine for the
Hadamard walk."""

from .coin import (
    CoinDecomposition,
    CoinMatrix,
    InitialVector,
    Measure,
    SpinorField,
    decompose,
    hadamard,
    identity_coin,
    measure_of,
    rotation_coin,
    validate_coin,
)
from .evolution import (
    StationarityReport,
    eigen_residual,
    stationarity_report,
    step,
    verify_stationary,
)
from .transfer import (
    TransferPair,
    boundary_values,
    build_transfer,
    kls_eigenfunction,
    transfer_eigenfunction,
)
from .closed_form import (
    CharRoots,
    RootType,
    char_roots,
    closed_form_eigenfunction,
    closed_form_field,
    eigenfunction_case,
    root_type,
)
from .classify import (
    Aperiodic,
    BoundedOscillatory,
    Exponential,
    FinitePeriod,
    QuadraticPolynomial,
    StationaryClass,
    Uniform,
    UniformPeriodOne,
    WValues,
    case2_measure,
    classify,
    double_root_eigenvalues,
    exp_rates,
    lambda_moduli,
    period_of,
    qp_coefficients,
    theta_region,
    uniform_condition,
    w_values,
    xi_angle,
    z_components,
)
from .spectrum import (
    SymbolEigenvalues,
    dispersion_table,
    fourier_symbol,
    hadamard_symbol_eigenvalues,
    spectrum_arcs,
    symbol_eigenvalues,
    symbol_eigenvector,
)

__version__ = "0.1.0"
