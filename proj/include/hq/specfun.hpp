#pragma once

#include <vector>

#include "hq/core.hpp"

namespace hq::specfun {

/// Associated Legendre function P_n^m(x) with the Condon-Shortley phase
/// (-1)^m included. Stable forward recurrence in n from the closed-form
/// P_m^m. Requires 0 <= m <= n and |x| <= 1.
double assoc_legendre(int n, int m, double x);

/// Spherical harmonic Y_n^m(theta, phi), orthonormal over the sphere.
/// Negative m via Y_n^{-m} = (-1)^m conj(Y_n^m). The normalization
/// factorial ratio is accumulated as an iterated product, so orders up to
/// n = 60 stay inside double range.
complexd sph_harmonic(const ModeIndex& idx, double theta, double phi);

/// All of Y_n^m for m = -n..n at one point; result[m + n] holds index m.
/// Shares one Legendre pass per m, which is what the quadrature loops want.
std::vector<complexd> sph_harmonic_row(int n, double theta, double phi);

/// Spherical Bessel function j_n(x) of the first kind, x >= 0.
double sph_bessel_j(int n, double x);

/// j_0(x) .. j_nmax(x) in one pass.
///
/// For x > max(1, nmax) the upward recurrence from the closed forms j_0 and
/// j_1 is stable. Otherwise Miller's downward recurrence is used: start the
/// three-term recurrence at order nmax + 16 + ceil(x) with arbitrary seed
/// values, run it down to order 0, and rescale the whole sequence against
/// the closed form of j_0 (or j_1 when x sits on a zero of j_0; the two
/// have no common zeros). Intermediate values are renormalized whenever
/// they approach double overflow.
std::vector<double> sph_bessel_j_seq(int nmax, double x);

/// Consecutive triple around order n, as needed by the closed-form radial
/// integral. j_{-1}(x) = cos(x)/x by convention, so n = 0 needs no special
/// case downstream. Requires x > 0.
struct BesselTriple {
    double below;   ///< j_{n-1}(x)
    double at;      ///< j_n(x)
    double above;   ///< j_{n+1}(x)
};
BesselTriple sph_bessel_j_pair(int n, double x);

}  // namespace hq::specfun
