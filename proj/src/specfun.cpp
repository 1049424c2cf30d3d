#include "hq/specfun.hpp"

#include <cmath>

namespace hq::specfun {

double assoc_legendre(int n, int m, double x) {
    if (n < 0 || m < 0 || m > n)
        throw std::domain_error("assoc_legendre: require 0 <= m <= n");
    if (std::abs(x) > 1.0)
        throw std::domain_error("assoc_legendre: require |x| <= 1");

    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}, built as a running product.
    const double sxx = std::sqrt((1.0 - x) * (1.0 + x));
    double pmm = 1.0;
    for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * sxx;
    if (n == m) return pmm;

    // P_{m+1}^m = x (2m+1) P_m^m, then the two-term recurrence upward in n.
    double pprev = pmm;
    double pcur = x * (2.0 * m + 1.0) * pmm;
    for (int nn = m + 2; nn <= n; ++nn) {
        double pnext = ((2.0 * nn - 1.0) * x * pcur - (nn + m - 1.0) * pprev) / (nn - m);
        pprev = pcur;
        pcur = pnext;
    }
    return pcur;
}

namespace {

// sqrt((2n+1)/(4pi) * (n-m)!/(n+m)!) for 0 <= m <= n without raw factorials.
double harmonic_norm(int n, int m) {
    double ratio = (2.0 * n + 1.0) / (4.0 * pi);
    for (int j = 1; j <= m; ++j) ratio /= static_cast<double>(n + j) * static_cast<double>(n - j + 1);
    return std::sqrt(ratio);
}

}  // namespace

complexd sph_harmonic(const ModeIndex& idx, double theta, double phi) {
    const int n = idx.n;
    const int ma = std::abs(idx.m);
    const double p = assoc_legendre(n, ma, std::cos(theta));
    complexd y = harmonic_norm(n, ma) * p * std::polar(1.0, ma * phi);
    if (idx.m < 0) y = (ma % 2 != 0 ? -1.0 : 1.0) * std::conj(y);
    return y;
}

std::vector<complexd> sph_harmonic_row(int n, double theta, double phi) {
    if (n < 0) throw std::domain_error("sph_harmonic_row: n must be >= 0");
    const double x = std::cos(theta);
    std::vector<complexd> row(2 * n + 1);

    double ratio = (2.0 * n + 1.0) / (4.0 * pi);  // running (2n+1)/(4pi) * (n-m)!/(n+m)!
    for (int m = 0; m <= n; ++m) {
        if (m > 0) ratio /= static_cast<double>(n + m) * static_cast<double>(n - m + 1);
        const complexd y = std::sqrt(ratio) * assoc_legendre(n, m, x) * std::polar(1.0, m * phi);
        row[n + m] = y;
        if (m > 0) row[n - m] = (m % 2 != 0 ? -1.0 : 1.0) * std::conj(y);
    }
    return row;
}

std::vector<double> sph_bessel_j_seq(int nmax, double x) {
    if (nmax < 0) throw std::domain_error("sph_bessel_j_seq: order must be >= 0");
    if (x < 0.0) throw std::domain_error("sph_bessel_j_seq: require x >= 0");

    std::vector<double> j(nmax + 1, 0.0);
    if (x == 0.0) {
        j[0] = 1.0;  // j_n(0) = delta_{n0}
        return j;
    }

    const double j0 = std::sin(x) / x;
    if (nmax == 0) {
        j[0] = j0;
        return j;
    }
    const double j1 = std::sin(x) / (x * x) - std::cos(x) / x;

    if (x > std::max(1.0, static_cast<double>(nmax))) {
        // Upward recurrence; stable while the order stays below x.
        j[0] = j0;
        j[1] = j1;
        for (int k = 1; k < nmax; ++k) j[k + 1] = (2.0 * k + 1.0) / x * j[k] - j[k - 1];
        return j;
    }

    // Miller's method. The start-order margin 16 + ceil(x) gives >= 12
    // correct digits for orders up to 40.
    const int start = nmax + 16 + static_cast<int>(std::ceil(x));
    constexpr double rescale_limit = 1e250;
    constexpr double rescale_factor = 1e-250;

    double fup = 0.0;    // f_{k+1}
    double fcur = 1e-30; // f_k, seeded at k = start
    for (int k = start; k >= 1; --k) {
        const double fdown = (2.0 * k + 1.0) / x * fcur - fup;
        fup = fcur;
        fcur = fdown;
        if (k - 1 <= nmax) j[k - 1] = fcur;
        if (std::abs(fcur) > rescale_limit) {
            fcur *= rescale_factor;
            fup *= rescale_factor;
            for (int i = std::min(k - 1, nmax); i <= nmax; ++i) j[i] *= rescale_factor;
        }
    }

    // Normalize against whichever closed form is farther from a zero.
    const double scale = std::abs(j0) >= std::abs(j1) ? j0 / j[0] : j1 / j[1];
    for (double& v : j) v *= scale;
    return j;
}

double sph_bessel_j(int n, double x) {
    return sph_bessel_j_seq(n, x)[static_cast<std::size_t>(n)];
}

BesselTriple sph_bessel_j_pair(int n, double x) {
    if (n < 0) throw std::domain_error("sph_bessel_j_pair: order must be >= 0");
    if (!(x > 0.0)) throw std::domain_error("sph_bessel_j_pair: require x > 0");
    if (n == 0) {
        auto seq = sph_bessel_j_seq(1, x);
        return {std::cos(x) / x, seq[0], seq[1]};
    }
    auto seq = sph_bessel_j_seq(n + 1, x);
    return {seq[n - 1], seq[n], seq[n + 1]};
}

}  // namespace hq::specfun
