#include "hq/angmom.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "hq/angular.hpp"
#include "hq/parallel.hpp"
#include "hq/quad.hpp"
#include "hq/specfun.hpp"

namespace hq::angmom {

TransverseBasis transverse_basis(const Vec3& khat) {
    if (std::abs(khat.norm() - 1.0) > 1e-12)
        throw std::domain_error("transverse_basis: khat must be a unit vector");

    Vec3 axis{1.0, 0.0, 0.0};
    double smallest = std::abs(khat.x);
    if (std::abs(khat.y) < smallest) {
        axis = Vec3{0.0, 1.0, 0.0};
        smallest = std::abs(khat.y);
    }
    if (std::abs(khat.z) < smallest) axis = Vec3{0.0, 0.0, 1.0};

    TransverseBasis basis;
    basis.e1 = axis.cross(khat).normalized();
    basis.e2 = khat.cross(basis.e1);
    return basis;
}

Vec3C polarization_vector(Polarization pol, const Vec3& khat) {
    const TransverseBasis basis = transverse_basis(khat);
    switch (pol) {
        case Polarization::Linear1:
            return {complexd{basis.e1.x}, complexd{basis.e1.y}, complexd{basis.e1.z}};
        case Polarization::Linear2:
            return {complexd{basis.e2.x}, complexd{basis.e2.y}, complexd{basis.e2.z}};
        case Polarization::CircularPlus:
        case Polarization::CircularMinus: {
            const double lambda = helicity(pol);
            const double s = 1.0 / std::sqrt(2.0);
            return {complexd{basis.e1.x * s, lambda * basis.e2.x * s},
                    complexd{basis.e1.y * s, lambda * basis.e2.y * s},
                    complexd{basis.e1.z * s, lambda * basis.e2.z * s}};
        }
    }
    throw std::logic_error("polarization_vector: unknown Polarization");
}

Vec3C field_eval(const FieldSpec& fs, const PhysicalSetup& setup, double r, double theta,
                 double phi, double t) {
    fs.validate();
    if (r < 0.0) throw std::domain_error("field_eval: r must be >= 0");

    const double omega = setup.c * fs.k;
    const complexd scalar = fs.E0 * specfun::sph_bessel_j(fs.n, fs.k * r) *
                            angular::angular_profile(fs.n, theta, phi) *
                            std::exp(complexd{0.0, -omega * t});
    return scalar * polarization_vector(fs.polarization, fs.khat);
}

namespace {

/// Volume grid for the ball of radius R: the scalar profile split into its
/// radial samples (with r^2 and rule weights folded in) and angular samples.
struct VolumeGrid {
    std::vector<double> radial_j;    ///< j_n(kr) per radial node
    std::vector<double> radial_w;    ///< w_r * r^2 per radial node
    std::vector<complexd> profile;   ///< angular profile per sphere node
    std::vector<double> sphere_w;    ///< sphere weight per node
    double profile_norm = 0.0;       ///< sum of w * |profile|^2
    double radial_norm = 0.0;        ///< sum of w_r * r^2 * j^2
};

VolumeGrid build_grid(const FieldSpec& fs, double R, const QuadratureSpec& spec) {
    fs.validate();
    if (!(R > 0.0)) throw std::domain_error("angmom: R must be > 0");
    if (!spec.sufficient_for(fs.n))
        throw std::invalid_argument(
            "angmom: quadrature cannot resolve the angular profile of this order");

    VolumeGrid grid;

    const quad::Rule1D radial = quad::composite_rule(0.0, R, spec, 2.0 * fs.k);
    grid.radial_j.reserve(radial.nodes.size());
    grid.radial_w.reserve(radial.nodes.size());
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        const double r = radial.nodes[i];
        const double j = specfun::sph_bessel_j(fs.n, fs.k * r);
        const double w = radial.weights[i] * r * r;
        grid.radial_j.push_back(j);
        grid.radial_w.push_back(w);
        grid.radial_norm += w * j * j;
    }

    const quad::SphereRule sphere = quad::sphere_rule(spec);
    grid.profile.reserve(sphere.nodes.size());
    grid.sphere_w.reserve(sphere.nodes.size());
    for (const auto& node : sphere.nodes) {
        const complexd p = angular::angular_profile(fs.n, node.theta, node.phi);
        grid.profile.push_back(p);
        grid.sphere_w.push_back(node.weight);
        grid.profile_norm += node.weight * std::norm(p);
    }
    return grid;
}

}  // namespace

Vec3 intrinsic_angular_momentum(const FieldSpec& fs, const PhysicalSetup& setup, double R,
                                const QuadratureSpec& spec) {
    validated(setup);
    const VolumeGrid grid = build_grid(fs, R, spec);
    const Vec3C pol = polarization_vector(fs.polarization, fs.khat);
    const double omega = setup.c * fs.k;

    // Im[E x E*] per volume node, accumulated radial-chunk by radial-chunk so
    // the summation order is independent of the thread count.
    const auto partials = par::map_chunks<Vec3>(
        grid.radial_j.size(), 16, [&](std::size_t begin, std::size_t end) {
            Vec3 acc;
            for (std::size_t ir = begin; ir < end; ++ir) {
                for (std::size_t is = 0; is < grid.profile.size(); ++is) {
                    const complexd scalar = fs.E0 * grid.radial_j[ir] * grid.profile[is];
                    const Vec3C field = scalar * pol;
                    const Vec3 im_cross = field.cross(field.conj()).imag();
                    acc += (grid.radial_w[ir] * grid.sphere_w[is]) * im_cross;
                }
            }
            return acc;
        });

    Vec3 total;
    for (const Vec3& part : partials) total += part;
    return (-setup.epsilon0 / (2.0 * omega)) * total;
}

AngularMomentumReport conservation_check(const FieldSpec& fs, const PhysicalSetup& setup,
                                         double R, const std::vector<double>& times,
                                         const QuadratureSpec& spec) {
    validated(setup);
    const VolumeGrid grid = build_grid(fs, R, spec);
    const Vec3C pol = polarization_vector(fs.polarization, fs.khat);
    const double omega = setup.c * fs.k;
    const double period = 2.0 * pi / omega;

    if (times.size() < 2)
        throw std::domain_error("conservation_check: need at least two sample times");
    double t_lo = times.front(), t_hi = times.front();
    for (double t : times) {
        t_lo = std::min(t_lo, t);
        t_hi = std::max(t_hi, t);
    }
    if (t_hi - t_lo < period * (1.0 - 1e-9))
        throw std::domain_error("conservation_check: times must span one period 2*pi/omega");

    AngularMomentumReport report;
    report.helicity = fs.polarization;
    report.reference_magnitude = setup.epsilon0 / (2.0 * omega) * fs.E0 * fs.E0 *
                                 grid.radial_norm * grid.profile_norm;
    report.samples.reserve(times.size());

    for (double t : times) {
        const complexd phase = std::exp(complexd{0.0, -omega * t});
        const auto partials = par::map_chunks<Vec3>(
            grid.radial_j.size(), 16, [&](std::size_t begin, std::size_t end) {
                Vec3 acc;
                for (std::size_t ir = begin; ir < end; ++ir) {
                    for (std::size_t is = 0; is < grid.profile.size(); ++is) {
                        const complexd scalar =
                            fs.E0 * grid.radial_j[ir] * grid.profile[is] * phase;
                        const Vec3C field = scalar * pol;
                        // Real field and potential from the phasor; A is chosen
                        // so that E = -dA/dt holds exactly.
                        const Vec3 E = field.real();
                        const Vec3 A = field.imag() / omega;
                        acc += (grid.radial_w[ir] * grid.sphere_w[is]) * E.cross(A);
                    }
                }
                return acc;
            });
        Vec3 J;
        for (const Vec3& part : partials) J += part;
        J = setup.epsilon0 * J;
        report.samples.push_back({t, J});
    }

    Vec3 mean;
    for (const auto& s : report.samples) mean += s.J;
    report.J_mean = mean / static_cast<double>(report.samples.size());

    const Vec3 J0 = report.samples.front().J;
    const double mag0 = J0.norm();
    double worst = 0.0;
    for (const auto& s : report.samples) {
        const Vec3 d = s.J - J0;
        worst = std::max({worst, std::abs(d.x), std::abs(d.y), std::abs(d.z),
                          std::abs(s.J.norm() - mag0)});
    }
    report.max_drift = worst / report.reference_magnitude;
    return report;
}

double beta_from_angmom(const FieldSpec& fs, int n, double omega, double k0,
                        const PhysicalSetup& setup, energy::RadialMode radial_mode,
                        const QuadratureSpec& spec) {
    fs.validate();
    if (fs.polarization != Polarization::CircularPlus)
        throw std::domain_error(
            "beta_from_angmom: requires CircularPlus polarization (|J| = H/omega needs "
            "helicity +1)");

    const double band_energy = energy::mode_sum_energy(n, omega, k0, setup, radial_mode, spec);
    const double J_magnitude = band_energy / omega;
    return J_magnitude / (static_cast<double>(n) + 0.5);
}

}  // namespace hq::angmom
