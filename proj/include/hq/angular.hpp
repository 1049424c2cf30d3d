#pragma once

#include <vector>

#include "hq/core.hpp"

namespace hq::angular {

/// Dense Hermitian matrix of overlaps between the 2n+1 harmonics of a fixed
/// degree n, indexed by order m in [-n, n]. Entry (m', m) approximates
/// integral over the sphere of conj(Y_n^m') * Y_n^m and equals the identity
/// for an exact quadrature.
class GramMatrix {
public:
    explicit GramMatrix(int n)
        : n_(n), data_(static_cast<std::size_t>(2 * n + 1) * static_cast<std::size_t>(2 * n + 1)) {}

    [[nodiscard]] int degree() const { return n_; }
    [[nodiscard]] int dim() const { return 2 * n_ + 1; }

    /// Access by order pair; both arguments must lie in [-n, n].
    [[nodiscard]] complexd& at(int m_row, int m_col) {
        return data_[index(m_row, m_col)];
    }
    [[nodiscard]] const complexd& at(int m_row, int m_col) const {
        return data_[index(m_row, m_col)];
    }

    /// Largest absolute deviation of any entry from the identity matrix.
    [[nodiscard]] double max_identity_deviation() const;

private:
    [[nodiscard]] std::size_t index(int m_row, int m_col) const;

    int n_;
    std::vector<complexd> data_;
};

/// Gram matrix of degree-n spherical harmonics under the given sphere rule.
/// Throws std::invalid_argument when the rule cannot integrate the degree-2n
/// products exactly (theta_order < n+1 or phi_points < 2n+2).
GramMatrix gram_matrix(int n, const QuadratureSpec& spec);

/// Quadrature value of sum over m of |Y_n^m|^2 integrated over the sphere,
/// which the addition theorem fixes at exactly 2n+1 regardless of direction.
double degeneracy_sum(int n, const QuadratureSpec& spec);

/// Coherent sum over m of Y_n^m evaluated at one direction: the angular
/// factor of a single-degree multipole field sampled along (theta, phi).
complexd angular_profile(int n, double theta, double phi);

}  // namespace hq::angular
