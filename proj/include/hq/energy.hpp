#pragma once

#include <functional>
#include <vector>

#include "hq/core.hpp"

namespace hq::energy {

/// Which radial normalization integral enters the energy: the quadrature
/// value, the Lommel closed form, or the large-kR limit R/(2k^2).
enum class RadialMode { Numeric, Closed, Asymptotic };

/// How the n + 1/2 angular factor is produced: straight from the formula, or
/// as (sum over m of the |Y_n^m|^2 sphere integral) times the cycle-average
/// one half, evaluated by quadrature.
enum class AngularPath { Analytic, Quadrature };

/// Time average of squared sinusoids over a full cycle: exactly 1/2.
double cycle_average_factor();

/// Quadrature counterpart: (1/T) * integral of f(t)^2 over one period T.
/// Validates the 1/2 factor for any phase-shifted sinusoid f.
double numeric_cycle_average(const std::function<double(double)>& f, double period,
                             const QuadratureSpec& spec);

/// The cycle-averaged energy of a single mode, factored the way it is
/// assembled: total = prefactor * radial_factor * angular_factor.
struct ModeEnergyBreakdown {
    double prefactor = 0.0;      ///< epsilon0 * |E0|^2 (J/m^3 per unit amplitude^2)
    double radial_factor = 0.0;  ///< R_n (m^3)
    double angular_factor = 0.0; ///< n + 1/2 (dimensionless)
    double total = 0.0;          ///< energy (J)
};

/// Energy of the mode (n, k) inside the setup's ball of radius setup.R.
/// With AngularPath::Quadrature the n + 1/2 factor comes from the sphere
/// quadrature of the harmonic sum times the 1/2 cycle average instead of
/// the analytic formula; both paths must agree.
ModeEnergyBreakdown mode_energy(int n, double k, const PhysicalSetup& setup,
                                RadialMode mode, const QuadratureSpec& spec,
                                AngularPath path = AngularPath::Analytic);

/// The action-valued constant epsilon0 * R * V * |E0|^2 / (2 pi^2 c).
double beta(const PhysicalSetup& setup);

/// Band energy of order n: (V/pi^2) times the integral over k in
/// [k0, k0 + omega/c] of k^2 * epsilon0 |E0|^2 R_n(k) (n + 1/2).
/// In RadialMode::Asymptotic the integrand is constant and the result
/// reduces to beta(setup) * (n + 1/2) * omega identically; the other modes
/// quantify how fast the finite-kR integrand approaches that limit.
///
/// The rule integrates in the offset variable k - k0 so that narrow bands
/// on top of a large k0 lose no precision to cancellation.
double mode_sum_energy(int n, double omega, double k0, const PhysicalSetup& setup,
                       RadialMode mode, const QuadratureSpec& spec);

/// Band energies for a list of reference wavenumbers k0, each reduced to an
/// inferred action beta_hat = energy / ((n + 1/2) * omega). The spread of
/// the beta_hats measures how k0-independent the band energy is.
struct BetaReport {
    double beta = 0.0;           ///< reference value from the setup (J s)
    int n = 0;
    double omega = 0.0;          ///< band width in angular frequency (rad/s)
    RadialMode mode = RadialMode::Asymptotic;
    std::vector<double> k0_values;
    std::vector<double> energies;   ///< band energy per k0 (J)
    std::vector<double> beta_hats;  ///< inferred action per k0 (J s)
    double max_rel_variation = 0.0; ///< (max - min) / |mean| of the beta_hats
};

BetaReport k0_independence_scan(int n, double omega, const std::vector<double>& k0_list,
                                const PhysicalSetup& setup, RadialMode mode,
                                const QuadratureSpec& spec);

/// Amplitude E0 that makes beta(setup) hit beta_target at the setup's
/// geometry: sqrt(2 pi^2 c * beta_target / (epsilon0 R V)).
double calibrate_amplitude(const PhysicalSetup& setup, double beta_target);

}  // namespace hq::energy
