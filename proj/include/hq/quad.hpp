#pragma once

#include <functional>
#include <vector>

#include "hq/core.hpp"

namespace hq::quad {

/// One-dimensional rule: nodes and positive weights of equal length.
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree
/// <= 2*order - 1. Nodes are Legendre roots found by Newton iteration
/// from Chebyshev initial guesses, converged to 1e-15, and stored in
/// ascending order with exact +/- symmetry.
Rule1D gauss_legendre(int order);

struct SphereNode {
    double theta;
    double phi;
    double weight;
};

/// Product rule over the solid angle: Gauss-Legendre in cos(theta)
/// (absorbing the sin(theta) measure) times a uniform grid in phi with
/// weight 2*pi/phi_points. Weights sum to 4*pi. Exact for spherical
/// polynomials up to degree min(2*theta_order - 1, phi_points - 1).
struct SphereRule {
    std::vector<SphereNode> nodes;
};

SphereRule sphere_rule(const QuadratureSpec& spec);

/// Composite Gauss-Legendre rule mapped onto [a, b]: radial_panels equal
/// panels with radial_order points each. A positive oscillation_k_max raises
/// the panel count to at least ceil((b-a)*k_max/pi), so each panel spans at
/// most half an oscillation period of integrands like sin(k_max * r).
Rule1D composite_rule(double a, double b, const QuadratureSpec& spec,
                      double oscillation_k_max = 0.0);

/// Integral of f over [a, b] with composite_rule. Requires a < b.
double integrate_radial(const std::function<double(double)>& f, double a, double b,
                        const QuadratureSpec& spec, double oscillation_k_max = 0.0);

}  // namespace hq::quad
