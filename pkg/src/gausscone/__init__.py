"""Two-mode Gaussian state toolkit.

Covariance-matrix invariants, the hyperbolic-interval (Minkowski cone)
picture of physicality and separability, entanglement measures, state
generators with a lossy-fiber channel, and a sweep/threshold CLI.
"""

from .core import (
    Classification,
    CovarianceMatrix,
    Kind,
    LocalInvariants,
    NegativeDiscriminant,
    NegativeSquaredEigenvalue,
    NonHermitianInput,
    StandardFormParams,
    SymplecticPair,
    UnphysicalState,
    build_standard_cm,
    classify_physical,
    classify_separable,
    det_via_invariants,
    is_physical,
    local_invariants,
    partial_transpose,
    physical_via_schur,
    purity,
    seralian,
    symplectic_eigenvalues,
)
from .measures import (
    AsymmetricState,
    DegenerateArgument,
    MeasureKind,
    NonPsdNoise,
    SeparableState,
    eof_lower_bound,
    eof_symmetric,
    evaluate_measure,
    log_negativity,
    minkowski_distance_measure,
    noise_convolution_cm,
    transposed_pair,
    unified_argument,
)
from .minkowski import (
    CoordinateSingularity,
    Intervals,
    MinkowskiCoords,
    coordinates,
    fiber_separatrix_residual,
    interval_physical,
    interval_separability,
    intervals,
    tmtss_separatrix,
)
from .states import (
    FiberParams,
    InvalidTransmission,
    LocalSymplectic,
    TmtssParams,
    apply_local,
    lossy_fiber,
    make_local_symplectic,
    random_local_symplectic,
    random_physical_state,
    random_standard_params,
    tmsv,
    tmtss,
)

__version__ = "0.1.0"
