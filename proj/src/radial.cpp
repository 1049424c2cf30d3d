#include "hq/radial.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hq/quad.hpp"
#include "hq/specfun.hpp"

namespace hq::radial {

namespace {

void require_positive(const char* where, double k, double R) {
    if (!(k > 0.0)) throw std::domain_error(std::string(where) + ": k must be > 0");
    if (!(R > 0.0)) throw std::domain_error(std::string(where) + ": R must be > 0");
}

}  // namespace

double integral_numeric(int n, double k, double R, const QuadratureSpec& spec) {
    if (n < 0) throw std::domain_error("radial::integral_numeric: n must be >= 0");
    require_positive("radial::integral_numeric", k, R);
    return quad::integrate_radial(
        [n, k](double r) {
            const double j = specfun::sph_bessel_j(n, k * r);
            return r * r * j * j;
        },
        0.0, R, spec, 2.0 * k);
}

double integral_closed(int n, double k, double R) {
    if (n < 0) throw std::domain_error("radial::integral_closed: n must be >= 0");
    require_positive("radial::integral_closed", k, R);
    const auto j = specfun::sph_bessel_j_pair(n, k * R);
    return 0.5 * R * R * R * (j.at * j.at - j.below * j.above);
}

double integral_asymptotic(double k, double R) {
    require_positive("radial::integral_asymptotic", k, R);
    return R / (2.0 * k * k);
}

RadialResult integrals(int n, double k, double R, const QuadratureSpec& spec) {
    RadialResult out;
    out.numeric = integral_numeric(n, k, R, spec);
    out.closed = integral_closed(n, k, R);
    out.asymptotic = integral_asymptotic(k, R);
    out.kR = k * R;
    return out;
}

std::vector<DeviationRow> asymptotic_deviation_scan(int n_max,
                                                    const std::vector<double>& kR_values) {
    if (n_max < 0) throw std::domain_error("asymptotic_deviation_scan: n_max must be >= 0");
    double previous = 0.0;
    for (std::size_t i = 0; i < kR_values.size(); ++i) {
        if (!(kR_values[i] > 0.0))
            throw std::domain_error("asymptotic_deviation_scan: kR values must be > 0");
        if (i > 0 && !(kR_values[i] > previous))
            throw std::domain_error("asymptotic_deviation_scan: kR values must ascend");
        previous = kR_values[i];
    }

    std::vector<DeviationRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max + 1) * kR_values.size());
    for (int n = 0; n <= n_max; ++n) {
        for (double kR : kR_values) {
            DeviationRow row;
            row.n = n;
            row.kR = kR;
            row.closed = integral_closed(n, kR, 1.0);
            row.asymptotic = integral_asymptotic(kR, 1.0);
            row.rel_dev = std::abs(row.closed / row.asymptotic - 1.0);
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace hq::radial
