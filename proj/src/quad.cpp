#include "hq/quad.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace hq::quad {

Rule1D gauss_legendre(int order) {
    if (order < 1) throw std::domain_error("gauss_legendre: order must be >= 1");

    const std::size_t q = static_cast<std::size_t>(order);
    Rule1D rule;
    rule.nodes.assign(q, 0.0);
    rule.weights.assign(q, 0.0);

    // Solve for the roots in the upper half [0, 1]; mirror to the lower half.
    const std::size_t half = (q + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev-based initial guess for the i-th root (descending order).
        double x = std::cos(pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(q) + 0.5));

        double dp = 0.0;  // P_q'(x) at the converged root
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_q(x) and P_q'(x) by the three-term recurrence.
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= q; ++k) {
                const double pk = ((2.0 * static_cast<double>(k) - 1.0) * x * p1 -
                                   (static_cast<double>(k) - 1.0) * p0) /
                                  static_cast<double>(k);
                p0 = p1;
                p1 = pk;
            }
            dp = static_cast<double>(q) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) <= 1e-15) {
                // One final polish step keeps the weight formula consistent.
                double q0 = 1.0;
                double q1 = x;
                for (std::size_t k = 2; k <= q; ++k) {
                    const double qk = ((2.0 * static_cast<double>(k) - 1.0) * x * q1 -
                                       (static_cast<double>(k) - 1.0) * q0) /
                                      static_cast<double>(k);
                    q0 = q1;
                    q1 = qk;
                }
                dp = static_cast<double>(q) * (x * q1 - q0) / (x * x - 1.0);
                break;
            }
        }

        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // i-th guess descends from +1, so it lands in the upper half.
        rule.nodes[q - 1 - i] = x;
        rule.weights[q - 1 - i] = w;
        rule.nodes[i] = -x;
        rule.weights[i] = w;
    }
    if (q % 2 == 1) rule.nodes[q / 2] = 0.0;  // middle root is exactly zero
    return rule;
}

SphereRule sphere_rule(const QuadratureSpec& spec) {
    spec.validate();

    const Rule1D gl = gauss_legendre(spec.theta_order);
    const double phi_weight = 2.0 * pi / static_cast<double>(spec.phi_points);

    SphereRule rule;
    rule.nodes.reserve(gl.nodes.size() * static_cast<std::size_t>(spec.phi_points));
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
        // Gauss-Legendre node in u = cos(theta); the substitution absorbs the
        // sin(theta) factor of the solid-angle measure into the weight.
        const double theta = std::acos(gl.nodes[i]);
        const double w = gl.weights[i] * phi_weight;
        for (int j = 0; j < spec.phi_points; ++j) {
            const double phi = 2.0 * pi * static_cast<double>(j) /
                               static_cast<double>(spec.phi_points);
            rule.nodes.push_back(SphereNode{theta, phi, w});
        }
    }
    return rule;
}

Rule1D composite_rule(double a, double b, const QuadratureSpec& spec,
                      double oscillation_k_max) {
    if (!(a < b)) throw std::domain_error("composite_rule: requires a < b");
    spec.validate();

    int panels = spec.radial_panels;
    if (oscillation_k_max > 0.0) {
        // At least one panel per half-period of the fastest oscillation.
        const double needed = std::ceil((b - a) * oscillation_k_max / pi);
        if (needed > static_cast<double>(panels)) panels = static_cast<int>(needed);
    }

    const Rule1D gl = gauss_legendre(spec.radial_order);
    const double h = (b - a) / static_cast<double>(panels);

    Rule1D rule;
    rule.nodes.reserve(static_cast<std::size_t>(panels) * gl.nodes.size());
    rule.weights.reserve(static_cast<std::size_t>(panels) * gl.nodes.size());
    for (int p = 0; p < panels; ++p) {
        const double lo = a + h * static_cast<double>(p);
        const double mid = lo + 0.5 * h;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            rule.nodes.push_back(mid + 0.5 * h * gl.nodes[i]);
            rule.weights.push_back(0.5 * h * gl.weights[i]);
        }
    }
    return rule;
}

double integrate_radial(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec, double oscillation_k_max) {
    const Rule1D rule = composite_rule(a, b, spec, oscillation_k_max);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(rule.nodes[i]);
    }
    return sum;
}

}  // namespace hq::quad
