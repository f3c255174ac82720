"""casnuc: screened Casimir interactions across a nuclear-scale pair plasma.

A thermal electron-positron gas forms between closely spaced conducting
surfaces once the confined vacuum energy is balanced against black-body
radiation.  This package evaluates the resulting plasma state, the
Lifshitz/Matsubara interaction free energy with its magnetic corrections,
the Casimir/Coulomb equilibrium separation, and the effective-meson
picture of the screened zero-frequency term.
"""

from ._version import __version__
from .constants import CONSTANTS_VINTAGE, PhysicalConstants, constants
from .errors import (
    CasnucError,
    ConvergenceError,
    DomainError,
    NumericalError,
    UnitError,
)
from .lifshitz import (
    DEFAULT_PLATE_AREA,
    FreeEnergyBreakdown,
    LayerResponse,
    SweepRow,
    SweepSpec,
    distance_coupled_breakdown,
    finite_freq_asymptote,
    finite_freq_sum,
    full_matsubara,
    kappa_perp,
    matsubara_term,
    reflection_pair,
    screening_wavevector,
    sweep_rows,
    total_free_energy,
    zero_freq_amplitudes,
    zero_freq_asymptote,
    zero_freq_exact,
    zero_freq_quadrature,
)
from .nuclear import (
    EquilibriumResult,
    YukawaQuantities,
    blackbody_energy,
    coulomb_energy,
    equilibrium_distance,
    fermi_quantities,
    ideal_casimir,
    meson_mass,
    plasmon_linewidth,
    screening_length,
    yukawa_quantities,
)
from .plasma import (
    PermeabilityModel,
    PlasmaState,
    density_from_distance,
    distance_closed_forms,
    lande_g,
    langevin,
    pair_density,
    pair_permeability_dynamic,
    pair_permeability_in_field,
    pair_permeability_static,
    plasma_frequency,
    plasma_state_from_distance,
    spin_susceptibility,
    temperature_from_distance,
    temperature_from_force,
)
from .units import convert

__all__ = [
    "__version__",
    "CONSTANTS_VINTAGE",
    "PhysicalConstants",
    "constants",
    "convert",
    "CasnucError",
    "ConvergenceError",
    "DomainError",
    "NumericalError",
    "UnitError",
    "PlasmaState",
    "PermeabilityModel",
    "temperature_from_distance",
    "temperature_from_force",
    "pair_density",
    "density_from_distance",
    "plasma_frequency",
    "langevin",
    "lande_g",
    "spin_susceptibility",
    "pair_permeability_static",
    "pair_permeability_dynamic",
    "pair_permeability_in_field",
    "plasma_state_from_distance",
    "distance_closed_forms",
    "LayerResponse",
    "FreeEnergyBreakdown",
    "DEFAULT_PLATE_AREA",
    "kappa_perp",
    "reflection_pair",
    "zero_freq_amplitudes",
    "zero_freq_exact",
    "zero_freq_quadrature",
    "zero_freq_asymptote",
    "finite_freq_asymptote",
    "matsubara_term",
    "finite_freq_sum",
    "full_matsubara",
    "screening_wavevector",
    "distance_coupled_breakdown",
    "total_free_energy",
    "SweepSpec",
    "SweepRow",
    "sweep_rows",
    "EquilibriumResult",
    "YukawaQuantities",
    "ideal_casimir",
    "blackbody_energy",
    "coulomb_energy",
    "equilibrium_distance",
    "meson_mass",
    "screening_length",
    "yukawa_quantities",
    "fermi_quantities",
    "plasmon_linewidth",
]
