#include "hq/angular.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "hq/parallel.hpp"
#include "hq/quad.hpp"
#include "hq/specfun.hpp"

namespace hq::angular {

std::size_t GramMatrix::index(int m_row, int m_col) const {
    if (m_row < -n_ || m_row > n_ || m_col < -n_ || m_col > n_) {
        throw std::out_of_range("GramMatrix: order outside [-n, n]");
    }
    const std::size_t d = static_cast<std::size_t>(dim());
    return static_cast<std::size_t>(m_row + n_) * d + static_cast<std::size_t>(m_col + n_);
}

double GramMatrix::max_identity_deviation() const {
    double worst = 0.0;
    for (int mp = -n_; mp <= n_; ++mp) {
        for (int m = -n_; m <= n_; ++m) {
            const complexd expected = (mp == m) ? complexd{1.0, 0.0} : complexd{0.0, 0.0};
            worst = std::max(worst, std::abs(at(mp, m) - expected));
        }
    }
    return worst;
}

namespace {

void require_sufficient(const char* where, int n, const QuadratureSpec& spec) {
    if (n < 0) throw std::domain_error(std::string(where) + ": degree must be >= 0");
    spec.validate();
    if (!spec.sufficient_for(n)) {
        throw std::invalid_argument(std::string(where) + ": quadrature cannot resolve degree " +
                                    std::to_string(n) + " (needs theta_order >= " +
                                    std::to_string(n + 1) + " and phi_points >= " +
                                    std::to_string(2 * n + 2) + ")");
    }
}

}  // namespace

GramMatrix gram_matrix(int n, const QuadratureSpec& spec) {
    require_sufficient("gram_matrix", n, spec);

    const quad::SphereRule rule = quad::sphere_rule(spec);
    const int dim = 2 * n + 1;

    // Per-node outer products, accumulated over fixed-size chunks so the
    // reduction order does not depend on the thread count.
    const std::size_t chunk = 64;
    const auto partials = par::map_chunks<std::vector<complexd>>(
        rule.nodes.size(), chunk, [&](std::size_t begin, std::size_t end) {
            std::vector<complexd> acc(static_cast<std::size_t>(dim) * dim);
            for (std::size_t i = begin; i < end; ++i) {
                const auto& node = rule.nodes[i];
                const auto row = specfun::sph_harmonic_row(n, node.theta, node.phi);
                for (int a = 0; a < dim; ++a) {
                    const complexd left = std::conj(row[static_cast<std::size_t>(a)]) * node.weight;
                    // Fill the upper triangle only; Hermitian symmetry gives the rest.
                    for (int b = a; b < dim; ++b) {
                        acc[static_cast<std::size_t>(a) * dim + b] +=
                            left * row[static_cast<std::size_t>(b)];
                    }
                }
            }
            return acc;
        });

    GramMatrix gram(n);
    for (const auto& acc : partials) {
        for (int a = 0; a < dim; ++a) {
            for (int b = a; b < dim; ++b) {
                gram.at(a - n, b - n) += acc[static_cast<std::size_t>(a) * dim + b];
            }
        }
    }
    for (int a = 0; a < dim; ++a) {
        // The diagonal is a weighted sum of |Y|^2, real by construction; drop
        // the multiply-rounding residue so the matrix is Hermitian exactly.
        complexd& diag = gram.at(a - n, a - n);
        diag = complexd{diag.real(), 0.0};
        for (int b = a + 1; b < dim; ++b) {
            gram.at(b - n, a - n) = std::conj(gram.at(a - n, b - n));
        }
    }
    return gram;
}

double degeneracy_sum(int n, const QuadratureSpec& spec) {
    require_sufficient("degeneracy_sum", n, spec);

    const quad::SphereRule rule = quad::sphere_rule(spec);
    const std::size_t chunk = 64;
    const auto partials = par::map_chunks<double>(
        rule.nodes.size(), chunk, [&](std::size_t begin, std::size_t end) {
            double acc = 0.0;
            for (std::size_t i = begin; i < end; ++i) {
                const auto& node = rule.nodes[i];
                const auto row = specfun::sph_harmonic_row(n, node.theta, node.phi);
                double density = 0.0;
                for (const complexd& y : row) density += std::norm(y);
                acc += node.weight * density;
            }
            return acc;
        });

    double total = 0.0;
    for (double part : partials) total += part;
    return total;
}

complexd angular_profile(int n, double theta, double phi) {
    if (n < 0) throw std::domain_error("angular_profile: degree must be >= 0");
    const auto row = specfun::sph_harmonic_row(n, theta, phi);
    complexd sum{0.0, 0.0};
    for (const complexd& y : row) sum += y;
    return sum;
}

}  // namespace hq::angular
