#include "hq/core.hpp"

#include <sstream>

namespace hq {

double spherical_volume(double R) {
    if (!(R > 0.0)) throw std::domain_error("spherical_volume: R must be > 0");
    return 4.0 / 3.0 * pi * R * R * R;
}

std::vector<std::string> validate_setup(const PhysicalSetup& s) {
    std::vector<std::string> errors;
    if (!(s.epsilon0 > 0.0)) errors.push_back("epsilon0 must be > 0");
    if (!(s.c > 0.0)) errors.push_back("c must be > 0");
    if (!(s.R > 0.0)) errors.push_back("R must be > 0");
    if (!(s.V > 0.0)) errors.push_back("V must be > 0");
    if (!(s.E0 >= 0.0)) errors.push_back("E0 must be >= 0");
    return errors;
}

PhysicalSetup validated(const PhysicalSetup& s) {
    auto errors = validate_setup(s);
    if (errors.empty()) return s;
    std::ostringstream msg;
    msg << "invalid PhysicalSetup:";
    for (const auto& e : errors) msg << ' ' << e << ';';
    throw std::invalid_argument(msg.str());
}

int helicity(Polarization p) {
    switch (p) {
        case Polarization::CircularPlus: return +1;
        case Polarization::CircularMinus: return -1;
        default: return 0;
    }
}

void FieldSpec::validate() const {
    if (n < 0) throw std::domain_error("FieldSpec: n must be >= 0");
    if (!(k > 0.0)) throw std::domain_error("FieldSpec: k must be > 0");
    if (std::abs(khat.norm() - 1.0) > 1e-12)
        throw std::domain_error("FieldSpec: khat must be a unit vector (|khat| = 1 within 1e-12)");
}

QuadratureSpec QuadratureSpec::for_order(int n) {
    if (n < 0) throw std::domain_error("QuadratureSpec::for_order: n must be >= 0");
    QuadratureSpec spec;
    spec.theta_order = std::max(n + 1, spec.theta_order);
    spec.phi_points = std::max(2 * n + 2, spec.phi_points);
    return spec;
}

void QuadratureSpec::validate() const {
    if (theta_order < 1 || phi_points < 1 || radial_panels < 1 || radial_order < 1)
        throw std::domain_error("QuadratureSpec: all orders and counts must be >= 1");
}

}  // namespace hq
