#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hq/core.hpp"
#include "hq/quad.hpp"

using namespace hq;
using namespace hq::quad;

TEST_SUITE("quad") {

TEST_CASE("Gauss-Legendre low orders match the textbook rules") {
    const auto one = gauss_legendre(1);
    REQUIRE(one.nodes.size() == 1);
    CHECK(one.nodes[0] == 0.0);
    CHECK(one.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const auto two = gauss_legendre(2);
    CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(two.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    const auto five = gauss_legendre(5);
    CHECK(five.nodes[2] == 0.0);
    CHECK(five.nodes[4] == doctest::Approx(0.90617984593866399280).epsilon(1e-15));
    CHECK(five.nodes[3] == doctest::Approx(0.53846931010568309104).epsilon(1e-15));
    CHECK(five.weights[2] == doctest::Approx(0.56888888888888888889).epsilon(1e-15));
    CHECK(five.weights[3] == doctest::Approx(0.47862867049936646804).epsilon(1e-15));
    CHECK(five.weights[4] == doctest::Approx(0.23692688505618908751).epsilon(1e-15));

    CHECK_THROWS_AS(gauss_legendre(0), std::domain_error);
}

TEST_CASE("Gauss-Legendre symmetry and weight sum") {
    for (int order : {3, 8, 16, 33, 64}) {
        const auto rule = gauss_legendre(order);
        double wsum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            // Mirror nodes must be exact negations, bit for bit.
            CHECK(rule.nodes[i] == -rule.nodes[rule.nodes.size() - 1 - i]);
            CHECK(rule.weights[i] == rule.weights[rule.nodes.size() - 1 - i]);
            CHECK(rule.weights[i] > 0.0);
            wsum += rule.weights[i];
        }
        CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
        if (order % 2 == 1) CHECK(rule.nodes[static_cast<std::size_t>(order) / 2] == 0.0);
    }
}

TEST_CASE("Gauss-Legendre integrates polynomials up to degree 2q-1 exactly") {
    const int order = 8;
    const auto rule = gauss_legendre(order);
    const auto integrate_monomial = [&](int power) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            sum += rule.weights[i] * std::pow(rule.nodes[i], power);
        }
        return sum;
    };
    for (int p = 0; p <= 2 * order - 1; ++p) {
        const double exact = (p % 2 == 0) ? 2.0 / (p + 1) : 0.0;
        CHECK(integrate_monomial(p) == doctest::Approx(exact).epsilon(1e-14));
    }
    // Degree 2q misses: x^16 over order 8 shows a visible defect.
    CHECK(std::abs(integrate_monomial(16) - 2.0 / 17.0) > 1e-12);
}

TEST_CASE("sphere rule integrates solid-angle polynomials") {
    QuadratureSpec spec;
    spec.theta_order = 6;
    spec.phi_points = 12;
    const auto rule = sphere_rule(spec);
    REQUIRE(rule.nodes.size() == 72);

    double area = 0.0, cos2 = 0.0, mixed = 0.0;
    for (const auto& node : rule.nodes) {
        area += node.weight;
        const double c = std::cos(node.theta);
        cos2 += node.weight * c * c;
        // sin^2(theta) cos(phi) sin(phi): integrates to zero by symmetry.
        const double s = std::sin(node.theta);
        mixed += node.weight * s * s * std::cos(node.phi) * std::sin(node.phi);
    }
    CHECK(area == doctest::Approx(4.0 * pi).epsilon(1e-15));
    CHECK(cos2 == doctest::Approx(4.0 * pi / 3.0).epsilon(1e-14));
    CHECK(mixed == doctest::Approx(0.0));
}

TEST_CASE("sphere rule weights are uniform in phi") {
    QuadratureSpec spec;
    spec.theta_order = 4;
    spec.phi_points = 7;
    const auto rule = sphere_rule(spec);
    REQUIRE(rule.nodes.size() == 28);
    // Same theta -> same weight, phi spacing 2 pi / 7.
    for (int j = 1; j < 7; ++j) {
        CHECK(rule.nodes[static_cast<std::size_t>(j)].weight == rule.nodes[0].weight);
        CHECK(rule.nodes[static_cast<std::size_t>(j)].phi ==
              doctest::Approx(2.0 * pi * j / 7.0).epsilon(1e-15));
    }
}

TEST_CASE("composite rule covers the interval and maps weights") {
    QuadratureSpec spec;
    spec.radial_panels = 4;
    spec.radial_order = 6;
    const auto rule = composite_rule(2.0, 5.0, spec);
    REQUIRE(rule.nodes.size() == 24);
    double wsum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        CHECK(rule.nodes[i] > 2.0);
        CHECK(rule.nodes[i] < 5.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        wsum += rule.weights[i];
    }
    CHECK(wsum == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS(composite_rule(1.0, 1.0, spec), std::domain_error);
    CHECK_THROWS_AS(composite_rule(2.0, 1.0, spec), std::domain_error);
}

TEST_CASE("oscillation hint raises the panel count") {
    QuadratureSpec spec;  // 8 panels, order 12
    const double k = 40.0;
    // ceil(10 * 40 / pi) = 128 panels of 12 nodes each.
    const auto rule = composite_rule(0.0, 10.0, spec, k);
    CHECK(rule.nodes.size() == 128 * 12);
    // Without the hint the default panel count stays.
    CHECK(composite_rule(0.0, 10.0, spec).nodes.size() == 8 * 12);
}

TEST_CASE("integrate_radial nails oscillatory closed forms") {
    const QuadratureSpec spec;
    // integral of sin^2(k r) over [0, L] = L/2 - sin(2 k L)/(4 k)
    for (double k : {3.0, 25.0, 80.0}) {
        const double L = 2.5;
        const double exact = L / 2.0 - std::sin(2.0 * k * L) / (4.0 * k);
        const double value = integrate_radial(
            [k](double r) { return std::sin(k * r) * std::sin(k * r); }, 0.0, L, spec, 2.0 * k);
        CHECK(value == doctest::Approx(exact).epsilon(1e-13));
    }
    // Smooth integrand, no hint: r^3 over [0, 2] = 4.
    CHECK(integrate_radial([](double r) { return r * r * r; }, 0.0, 2.0, spec) ==
          doctest::Approx(4.0).epsilon(1e-14));
}

}  // TEST_SUITE
