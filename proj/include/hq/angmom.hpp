#pragma once

#include <vector>

#include "hq/core.hpp"
#include "hq/energy.hpp"

namespace hq::angmom {

/// Right-handed orthonormal pair spanning the plane perpendicular to khat,
/// with e1 x e2 = khat.
struct TransverseBasis {
    Vec3 e1;
    Vec3 e2;
};

/// Deterministic transverse frame: e1 is the normalized cross product of the
/// coordinate axis with the smallest |khat| component (ties resolved x, y, z)
/// against khat, and e2 = khat x e1. The same khat always yields the same
/// frame, bit for bit.
TransverseBasis transverse_basis(const Vec3& khat);

/// Complex unit polarization vector in the transverse frame of khat:
/// Linear1 -> e1, Linear2 -> e2, circular states -> (e1 + i*lambda*e2)/sqrt(2)
/// with helicity lambda = +-1.
Vec3C polarization_vector(Polarization pol, const Vec3& khat);

/// Complex field phasor at one spacetime point:
///   E0 * j_n(kr) * (sum over m of Y_n^m(theta, phi)) * e^{-i omega t} * pol,
/// with omega = c k (c from the setup). The physical field is the real part.
Vec3C field_eval(const FieldSpec& fs, const PhysicalSetup& setup, double r, double theta,
                 double phi, double t);

/// Polarization-carried angular momentum of the time-averaged field,
///   -epsilon0/(2 omega) * integral over the ball of radius R of Im[E x E*],
/// by radial-times-sphere quadrature. The sphere rule must resolve degree
/// 2n (see QuadratureSpec::sufficient_for), else std::invalid_argument.
Vec3 intrinsic_angular_momentum(const FieldSpec& fs, const PhysicalSetup& setup, double R,
                                const QuadratureSpec& spec);

/// J(t) sampled over (at least) one oscillation cycle.
struct AngularMomentumSample {
    double t = 0.0;
    Vec3 J;
};

struct AngularMomentumReport {
    Vec3 J_mean;                                  ///< average of the samples (J s)
    std::vector<AngularMomentumSample> samples;
    double max_drift = 0.0;                       ///< relative drift versus the first sample
    Polarization helicity = Polarization::Linear1;///< input polarization state
    double reference_magnitude = 0.0;             ///< drift denominator (J s), see below
};

/// Instantaneous J(t) = epsilon0 * integral of E(r,t) x A(r,t) over the ball
/// of radius R, sampled at each requested time. The real fields come from the
/// phasor as E = Re[field_eval] and A = Im[field_eval]/omega, which satisfies
/// E = -dA/dt identically.
///
/// Drift (of |J| and of every component) is measured against
/// reference_magnitude = epsilon0/(2 omega) * integral of |E|^2 phasor
/// modulus: that equals |J| for circular polarization and stays a meaningful
/// positive scale for linear states, whose J vanishes pointwise.
///
/// The times must hold at least two values and span one period 2 pi/omega.
AngularMomentumReport conservation_check(const FieldSpec& fs, const PhysicalSetup& setup,
                                         double R, const std::vector<double>& times,
                                         const QuadratureSpec& spec);

/// The action inferred from angular momentum: band angular momentum
/// |J| = energy/omega for a positive-helicity band divided by (n + 1/2).
/// Requires CircularPlus polarization; other states carry no |J| = H/omega
/// identity. radial_mode selects the radial integral entering the band
/// energy, as in energy::mode_sum_energy.
double beta_from_angmom(const FieldSpec& fs, int n, double omega, double k0,
                        const PhysicalSetup& setup, energy::RadialMode radial_mode,
                        const QuadratureSpec& spec);

}  // namespace hq::angmom
