"""Exclusion-strength constants and Lieb-Thirring-type bounds."""
from ._kernels import BACKEND
from .applications import (
    CallablePotential,
    HarmonicPotential,
    PartitionSpec,
    PowerLawPotential,
    SampledPotential,
    StabilitySpec,
    TrapSpec,
    angular_momentum_bound,
    cs_confined_energy,
    harmonic_trap_bound,
    optimize_partition,
    powerlaw_asymptotic_constant,
    powerlaw_bound,
    stability_bound,
)
from .density import (
    DensityProfile,
    StepDensity,
    cs_density_bound,
    ll_density_bound,
    maximal_function,
    rho_tilde,
    split_tree,
)
from .errors import (
    BracketError,
    ConvergenceError,
    DomainError,
    InapplicableBoundError,
    InputFormatError,
    RootFindingError,
)
from .exclusion import (
    DEFAULT_REGISTRY,
    ConstantsRegistry,
    StatisticsKind,
    StatisticsParams,
    c_alpha_N,
    xi_H,
    xi_S,
)
from .oracle import (
    counterexample_crossing,
    cs_neumann_ground_energy,
    ll_neumann_ground_energy,
)
from .report import BoundReport
from .special import RootBracket, bessel_j, find_root, first_bessel_zero, gamma_fn
from .thermo import (
    GasSpec,
    anyon_gas_bound,
    anyon_potential_bound,
    cs_gas_bound,
    ll_gas_bound,
    ll_potential_bound,
    reference_energy,
)

__version__ = "0.1.0"
