"""Exact Steklov spectra of canonical orbisurfaces, finite ball quotients and Sunada unions."""

from .errors import (
    CollectionSizeMismatch,
    DomainError,
    EmptyClass,
    InfeasibleCounts,
    InvalidGroup,
    NonIntegerDimension,
    NotOrthogonal,
    OrderExceeded,
    PeelInconsistency,
    StekError,
    UnitMismatch,
)
from .spectra import (
    ArithmeticSpectrum,
    BoundaryData,
    SpectrumView,
    Unit,
    canonical_disk_spectrum,
    canonical_half_disk_spectrum,
    canonical_spectrum,
    enumerate_spectrum,
    spectra_equal,
)
from .inverse import (
    BoundaryDataClass,
    ProgressionDecomposition,
    data_equivalent,
    enumerate_class_members,
    peel_progressions,
    peel_progressions_approx,
    recover_boundary_class,
)
from .ball_quotients import (
    FourierDTN,
    HarmonicDimensionTable,
    OrthogonalGroup,
    close_group,
    dtn_cone,
    dtn_disk,
    invariant_harmonic_dims,
    quotient_ball_spectrum,
    steklov_isospectral_quotients,
)
from .sunada import (
    FiniteGroup,
    SubgroupCollection,
    conjugacy_classes,
    permutation_character_equal,
    sunada_ball_check,
    sunada_condition,
)
from .bounds import (
    BoundRegimeInput,
    CellComplex,
    LensParams,
    bound_regime,
    euler_characteristic,
    isoperimetric_quotient,
    sigma2_lens,
    verify_sharpness_family,
)

__version__ = "0.1.0"
