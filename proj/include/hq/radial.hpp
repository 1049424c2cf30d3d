#pragma once

#include <vector>

#include "hq/core.hpp"

namespace hq::radial {

/// Numerical value of the mode normalization integral over the ball,
/// integral of r^2 j_n(kr)^2 for r in [0, R], by composite Gauss-Legendre
/// quadrature with oscillation hint 2k (the rate of the j_n^2 fringes).
double integral_numeric(int n, double k, double R, const QuadratureSpec& spec);

/// Same integral in closed form via the Lommel identity,
///   (R^3/2) [ j_n(kR)^2 - j_{n-1}(kR) j_{n+1}(kR) ],
/// with j_{-1}(x) = cos(x)/x covering the n = 0 case.
double integral_closed(int n, double k, double R);

/// Large-kR limit R/(2k^2), independent of the order n.
double integral_asymptotic(double k, double R);

/// All three forms of the integral plus the dimensionless product kR.
struct RadialResult {
    double numeric = 0.0;     ///< quadrature value (m^3)
    double closed = 0.0;      ///< Lommel closed form (m^3)
    double asymptotic = 0.0;  ///< R/(2k^2) (m^3)
    double kR = 0.0;
};

RadialResult integrals(int n, double k, double R, const QuadratureSpec& spec);

/// One row of the asymptotic-approach scan at fixed R = 1, k = kR.
struct DeviationRow {
    int n = 0;
    double kR = 0.0;
    double closed = 0.0;
    double asymptotic = 0.0;
    double rel_dev = 0.0;  ///< |closed/asymptotic - 1|
};

/// How fast the closed-form integral approaches R/(2k^2): one row per
/// (n, kR) pair for n = 0..n_max. Because the closed form obeys the
/// similarity law R_n(k, R) = F_n(kR)/k^3, fixing R = 1 loses nothing.
/// kR values must be positive and strictly ascending.
std::vector<DeviationRow> asymptotic_deviation_scan(int n_max,
                                                    const std::vector<double>& kR_values);

}  // namespace hq::radial
