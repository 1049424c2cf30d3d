#include "hq/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hq/angular.hpp"
#include "hq/quad.hpp"
#include "hq/radial.hpp"

namespace hq::energy {

double cycle_average_factor() { return 0.5; }

double numeric_cycle_average(const std::function<double(double)>& f, double period,
                             const QuadratureSpec& spec) {
    if (!(period > 0.0)) throw std::domain_error("numeric_cycle_average: period must be > 0");
    // f^2 oscillates at twice the fundamental rate 2*pi/period.
    const double rate = 4.0 * pi / period;
    const double integral = quad::integrate_radial([&f](double t) { return f(t) * f(t); }, 0.0,
                                                   period, spec, rate);
    return integral / period;
}

namespace {

double radial_factor(int n, double k, double R, RadialMode mode, const QuadratureSpec& spec) {
    switch (mode) {
        case RadialMode::Numeric: return radial::integral_numeric(n, k, R, spec);
        case RadialMode::Closed: return radial::integral_closed(n, k, R);
        case RadialMode::Asymptotic: return radial::integral_asymptotic(k, R);
    }
    throw std::logic_error("radial_factor: unknown RadialMode");
}

}  // namespace

ModeEnergyBreakdown mode_energy(int n, double k, const PhysicalSetup& setup_in,
                                RadialMode mode, const QuadratureSpec& spec,
                                AngularPath path) {
    const PhysicalSetup setup = validated(setup_in);
    if (n < 0) throw std::domain_error("mode_energy: n must be >= 0");
    if (!(k > 0.0)) throw std::domain_error("mode_energy: k must be > 0");

    ModeEnergyBreakdown out;
    out.prefactor = setup.epsilon0 * setup.E0 * setup.E0;
    out.radial_factor = radial_factor(n, k, setup.R, mode, spec);
    switch (path) {
        case AngularPath::Analytic:
            out.angular_factor = static_cast<double>(n) + 0.5;
            break;
        case AngularPath::Quadrature:
            out.angular_factor = angular::degeneracy_sum(n, spec) * cycle_average_factor();
            break;
    }
    out.total = out.prefactor * out.radial_factor * out.angular_factor;
    return out;
}

double beta(const PhysicalSetup& setup_in) {
    const PhysicalSetup setup = validated(setup_in);
    return setup.epsilon0 * setup.R * setup.V * setup.E0 * setup.E0 / (2.0 * pi * pi * setup.c);
}

double mode_sum_energy(int n, double omega, double k0, const PhysicalSetup& setup_in,
                       RadialMode mode, const QuadratureSpec& spec) {
    const PhysicalSetup setup = validated(setup_in);
    if (n < 0) throw std::domain_error("mode_sum_energy: n must be >= 0");
    if (!(omega > 0.0)) throw std::domain_error("mode_sum_energy: omega must be > 0");
    if (!(k0 > 0.0)) throw std::domain_error("mode_sum_energy: k0 must be > 0");

    const double width = omega / setup.c;
    // R_n(k) carries j_n(kR)^2 fringes at rate 2R in k; the constant
    // asymptotic integrand needs no such refinement.
    const double hint = (mode == RadialMode::Asymptotic) ? 0.0 : 2.0 * setup.R;
    const quad::Rule1D rule = quad::composite_rule(0.0, width, spec, hint);

    const double density = setup.epsilon0 * setup.E0 * setup.E0 *
                           (static_cast<double>(n) + 0.5) * setup.V / (pi * pi);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double k = k0 + rule.nodes[i];
        sum += rule.weights[i] * k * k * radial_factor(n, k, setup.R, mode, spec);
    }
    return density * sum;
}

BetaReport k0_independence_scan(int n, double omega, const std::vector<double>& k0_list,
                                const PhysicalSetup& setup, RadialMode mode,
                                const QuadratureSpec& spec) {
    if (k0_list.empty())
        throw std::domain_error("k0_independence_scan: k0 list must not be empty");

    BetaReport report;
    report.beta = beta(setup);
    report.n = n;
    report.omega = omega;
    report.mode = mode;
    report.k0_values = k0_list;
    report.energies.reserve(k0_list.size());
    report.beta_hats.reserve(k0_list.size());
    for (double k0 : k0_list) {
        const double e = mode_sum_energy(n, omega, k0, setup, mode, spec);
        report.energies.push_back(e);
        report.beta_hats.push_back(e / ((static_cast<double>(n) + 0.5) * omega));
    }

    const auto [lo, hi] = std::minmax_element(report.beta_hats.begin(), report.beta_hats.end());
    double mean = 0.0;
    for (double b : report.beta_hats) mean += b;
    mean /= static_cast<double>(report.beta_hats.size());
    report.max_rel_variation = (mean == 0.0) ? 0.0 : (*hi - *lo) / std::abs(mean);
    return report;
}

double calibrate_amplitude(const PhysicalSetup& setup_in, double beta_target) {
    if (!(beta_target > 0.0))
        throw std::domain_error("calibrate_amplitude: beta_target must be > 0");
    PhysicalSetup probe = setup_in;
    probe.E0 = 1.0;  // geometry and constants must validate; amplitude is the unknown
    const PhysicalSetup setup = validated(probe);
    return std::sqrt(2.0 * pi * pi * setup.c * beta_target / (setup.epsilon0 * setup.R * setup.V));
}

}  // namespace hq::energy
