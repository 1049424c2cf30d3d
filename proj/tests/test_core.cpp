#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hq/core.hpp"

using namespace hq;

TEST_SUITE("core") {

TEST_CASE("Vec3 algebra") {
    const Vec3 x{1, 0, 0}, y{0, 1, 0}, z{0, 0, 1};
    const Vec3 xy = x.cross(y);
    CHECK(xy.x == 0.0);
    CHECK(xy.y == 0.0);
    CHECK(xy.z == 1.0);
    CHECK(x.dot(y) == 0.0);
    CHECK(Vec3{3, 4, 0}.norm() == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(z.cross(x).y == 1.0);

    const Vec3 v = Vec3{2, -1, 2} / 3.0;
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(Vec3{}.normalized(), std::domain_error);

    const Vec3 u = Vec3{5, 0, 0}.normalized();
    CHECK(u.x == 1.0);
}

TEST_CASE("Vec3C conjugation and cross product") {
    const Vec3C a{{1, 2}, {0, -1}, {3, 0}};
    const Vec3C ac = a.conj();
    CHECK(ac.x == complexd{1, -2});
    CHECK(ac.y == complexd{0, 1});
    CHECK(a.norm2() == doctest::Approx(1 + 4 + 1 + 9).epsilon(1e-15));

    // E x E* has purely imaginary components for any complex vector.
    const Vec3C c = a.cross(a.conj());
    CHECK(c.x.real() == doctest::Approx(0.0));
    CHECK(c.y.real() == doctest::Approx(0.0));
    CHECK(c.z.real() == doctest::Approx(0.0));
}

TEST_CASE("spherical_volume") {
    // 4*pi/3
    CHECK(spherical_volume(1.0) == doctest::Approx(4.1887902047863909846).epsilon(1e-15));
    CHECK(spherical_volume(2.0) == doctest::Approx(8.0 * 4.1887902047863909846).epsilon(1e-15));
    CHECK_THROWS_AS(spherical_volume(0.0), std::domain_error);
    CHECK_THROWS_AS(spherical_volume(-1.0), std::domain_error);
}

TEST_CASE("setup validation lists every violation") {
    PhysicalSetup bad;
    bad.epsilon0 = -1.0;
    bad.R = 0.0;
    bad.E0 = -2.0;
    const auto errors = validate_setup(bad);
    CHECK(errors.size() == 3);
    CHECK_THROWS_AS(validated(bad), std::invalid_argument);

    CHECK(validate_setup(PhysicalSetup::si()).empty());
    CHECK(validate_setup(PhysicalSetup::natural()).empty());

    // Zero amplitude is a valid (empty) field.
    PhysicalSetup dark = PhysicalSetup::natural();
    dark.E0 = 0.0;
    CHECK(validate_setup(dark).empty());
}

TEST_CASE("unit systems") {
    const PhysicalSetup si = PhysicalSetup::si();
    CHECK(si.epsilon0 == 8.8541878128e-12);
    CHECK(si.c == 299792458.0);
    CHECK(si.mu0() == doctest::Approx(1.25663706212e-6).epsilon(1e-9));

    const PhysicalSetup nat = PhysicalSetup::natural();
    CHECK(nat.epsilon0 == 1.0);
    CHECK(nat.c == 1.0);
    CHECK(nat.R == 1.0);
    CHECK(nat.V == 1.0);
    CHECK(nat.E0 == 1.0);
    CHECK(nat.mu0() == 1.0);
}

TEST_CASE("ModeIndex bounds") {
    CHECK_NOTHROW(ModeIndex(3, -3));
    CHECK_NOTHROW(ModeIndex(0, 0));
    CHECK_THROWS_AS(ModeIndex(2, 3), std::domain_error);
    CHECK_THROWS_AS(ModeIndex(2, -3), std::domain_error);
    CHECK_THROWS_AS(ModeIndex(-1, 0), std::domain_error);
}

TEST_CASE("helicity of polarization states") {
    CHECK(helicity(Polarization::CircularPlus) == 1);
    CHECK(helicity(Polarization::CircularMinus) == -1);
    CHECK(helicity(Polarization::Linear1) == 0);
    CHECK(helicity(Polarization::Linear2) == 0);
}

TEST_CASE("FieldSpec validation") {
    FieldSpec ok;
    CHECK_NOTHROW(ok.validate());

    FieldSpec bad_n = ok;
    bad_n.n = -1;
    CHECK_THROWS_AS(bad_n.validate(), std::domain_error);

    FieldSpec bad_k = ok;
    bad_k.k = 0.0;
    CHECK_THROWS_AS(bad_k.validate(), std::domain_error);

    FieldSpec bad_dir = ok;
    bad_dir.khat = Vec3{1, 1, 0};
    CHECK_THROWS_AS(bad_dir.validate(), std::domain_error);

    FieldSpec oblique = ok;
    oblique.khat = Vec3{1, 1, 1}.normalized();
    CHECK_NOTHROW(oblique.validate());
}

TEST_CASE("QuadratureSpec sufficiency") {
    const QuadratureSpec def;
    CHECK(def.sufficient_for(7));        // theta 8 >= 8, phi 16 >= 16
    CHECK_FALSE(def.sufficient_for(8));  // theta 8 < 9

    const auto spec = QuadratureSpec::for_order(12);
    CHECK(spec.theta_order == 13);
    CHECK(spec.phi_points == 26);
    CHECK(spec.sufficient_for(12));

    // Small orders keep the default rule, which is already sufficient.
    const auto low = QuadratureSpec::for_order(2);
    CHECK(low.theta_order == 8);
    CHECK(low.phi_points == 16);

    QuadratureSpec bad;
    bad.radial_order = 0;
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
    CHECK_THROWS_AS(QuadratureSpec::for_order(-1), std::domain_error);
}

}  // TEST_SUITE
