"""Show how plasma screening suppresses the zero-frequency attraction.

The exact series evaluation is compared against independent adaptive
quadrature over a grid of screening strengths, then against its own
large-screening asymptote, and finally the magnetic enhancement of the
screening wavevector is applied at the physical state.
"""

from casnuc.lifshitz import (
    DEFAULT_PLATE_AREA,
    screening_wavevector,
    zero_freq_asymptote,
    zero_freq_exact,
    zero_freq_quadrature,
)
from casnuc.plasma import PermeabilityModel, plasma_state_from_distance
from casnuc.units import convert


def per_pair_mev(f_per_area: float) -> float:
    return convert(f_per_area * DEFAULT_PLATE_AREA, "J", "MeV")


def main() -> None:
    L = 1e-15
    state = plasma_state_from_distance(L, PermeabilityModel.unity())
    T = state.T

    print("series vs quadrature, L = 1 fm:")
    print(f"{'kappa*L':>8} {'series [MeV]':>14} {'quadrature [MeV]':>17} {'rel dev':>10}")
    for kappa_L in (0.0, 0.1, 1.0, 5.0, 20.0):
        kappa = kappa_L / L
        series = zero_freq_exact(kappa, L, T)
        quadrature = zero_freq_quadrature(kappa, L, T)
        dev = abs(series - quadrature) / max(abs(series), abs(quadrature), 1e-300)
        print(f"{kappa_L:>8.1f} {per_pair_mev(series):>14.6f} "
              f"{per_pair_mev(quadrature):>17.6f} {dev:>10.1e}")

    print()
    print("asymptote quality (ratio to exact series):")
    for kappa_L in (1.0, 2.0, 5.0, 10.0):
        kappa = kappa_L / L
        ratio = zero_freq_asymptote(kappa, L, T) / zero_freq_exact(kappa, L, T)
        print(f"  kappa*L = {kappa_L:>5.1f}: {ratio:.6f}")

    print()
    print("magnetic screening at the 1 fm state:")
    for label, model in (("mu = 1", PermeabilityModel.unity()),
                         ("spin mu", PermeabilityModel.static_spin())):
        s = plasma_state_from_distance(L, model)
        kappa = screening_wavevector(s.rho, s.mu_ep)
        f0 = zero_freq_exact(kappa, L, s.T)
        print(f"  {label:>8}: kappa*L = {kappa * L:>7.3f}, "
              f"F0 per pair = {per_pair_mev(f0):>12.4e} MeV")


if __name__ == "__main__":
    main()
