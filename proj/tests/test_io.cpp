#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hq/core.hpp"
#include "hq/io.hpp"

using namespace hq;
using namespace hq::io;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

energy::BetaReport sample_beta_report() {
    energy::BetaReport report;
    report.beta = 0.050660591821168885722;
    report.n = 2;
    report.omega = 1.5;
    report.mode = energy::RadialMode::Closed;
    report.k0_values = {10.0, 100.0};
    report.energies = {0.19, 0.1900001};
    report.beta_hats = {0.0506, 0.05066};
    report.max_rel_variation = 1.2e-3;
    return report;
}

angmom::AngularMomentumReport sample_angmom_report() {
    angmom::AngularMomentumReport report;
    report.J_mean = {0.25, -0.5, 1.0};
    report.samples = {{0.0, {0.25, -0.5, 1.0}}, {3.14, {0.25, -0.5, 1.0}}};
    report.max_drift = 4.2e-16;
    report.helicity = Polarization::CircularPlus;
    report.reference_magnitude = 1.1456439237389599802;
    return report;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("fmt17 round-trips doubles exactly") {
    for (double v : {pi, 0.1, 1.0 / 3.0, 1e-300, 5e-324,
                     1.7976931348623157e308, -2.5000000000000004, 0.0}) {
        const std::string s = fmt17(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(fmt17(0.5) == "0.5");
    CHECK(fmt17(-3.0) == "-3");
}

TEST_CASE("enum names round-trip and reject junk") {
    for (auto mode : {energy::RadialMode::Numeric, energy::RadialMode::Closed,
                      energy::RadialMode::Asymptotic}) {
        CHECK(radial_mode_from_string(to_string(mode)) == mode);
    }
    CHECK(to_string(energy::RadialMode::Asymptotic) == "asymptotic");
    CHECK_THROWS_AS(radial_mode_from_string("lommel"), std::invalid_argument);
    CHECK_THROWS_AS(radial_mode_from_string(""), std::invalid_argument);

    for (auto pol : {Polarization::Linear1, Polarization::Linear2,
                     Polarization::CircularPlus, Polarization::CircularMinus}) {
        CHECK(polarization_from_string(to_string(pol)) == pol);
    }
    CHECK(to_string(Polarization::CircularMinus) == "circular-");
    CHECK_THROWS_AS(polarization_from_string("circular"), std::invalid_argument);
}

TEST_CASE("deviation scan CSV") {
    std::vector<radial::DeviationRow> rows{{0, 10.0, 0.04, 0.05, 0.2},
                                           {1, 100.0, 0.5, 0.5, 0.0}};
    const auto lines = lines_of(deviation_scan_csv(rows));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "n,kR,closed,asymptotic,rel_dev");
    CHECK(lines[1] == "0,10,0.040000000000000001,0.050000000000000003,0.20000000000000001");
    CHECK(lines[2] == "1,100,0.5,0.5,0");
    CHECK(deviation_scan_csv({}) == "n,kR,closed,asymptotic,rel_dev\n");
}

TEST_CASE("beta report CSV") {
    const auto lines = lines_of(beta_report_csv(sample_beta_report()));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "n,omega,k0,energy,beta_hat,radial_mode");
    // One row per k0, in input order, mode rendered by name.
    CHECK(lines[1].substr(0, 9) == "2,1.5,10,");
    CHECK(lines[1].substr(lines[1].size() - 7) == ",closed");
    CHECK(lines[2].substr(0, 10) == "2,1.5,100,");
}

TEST_CASE("beta report JSON") {
    const auto j = beta_report_json(sample_beta_report());
    CHECK(j.at("assumes_k_independent_amplitude") == true);
    CHECK(j.at("beta").get<double>() == 0.050660591821168885722);
    CHECK(j.at("n") == 2);
    CHECK(j.at("omega") == 1.5);
    CHECK(j.at("radial_mode") == "closed");
    CHECK(j.at("k0_values").size() == 2);
    CHECK(j.at("energies").size() == 2);
    CHECK(j.at("beta_hats").size() == 2);
    CHECK(j.at("max_rel_variation").get<double>() == 1.2e-3);
    CHECK(j.size() == 9);  // no stray keys
}

TEST_CASE("angular momentum CSV") {
    const auto lines = lines_of(angmom_samples_csv(sample_angmom_report()));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "t,Jx,Jy,Jz,|J|");
    CHECK(lines[1] == std::string("0,0.25,-0.5,1,") + fmt17(Vec3{0.25, -0.5, 1.0}.norm()));
    CHECK(lines[2].substr(0, fmt17(3.14).size() + 1) == fmt17(3.14) + ",");
}

TEST_CASE("angular momentum JSON") {
    const auto j = angmom_report_json(sample_angmom_report());
    CHECK(j.at("helicity") == "circular+");
    CHECK(j.at("max_drift").get<double>() == 4.2e-16);
    CHECK(j.at("reference_magnitude").get<double>() == 1.1456439237389599802);
    REQUIRE(j.at("J_mean").size() == 3);
    CHECK(j.at("J_mean")[0] == 0.25);
    CHECK(j.at("J_mean")[1] == -0.5);
    CHECK(j.at("J_mean")[2] == 1.0);
    REQUIRE(j.at("samples").size() == 2);
    CHECK(j.at("samples")[0].at("t") == 0.0);
    REQUIRE(j.at("samples")[0].at("J").size() == 3);
    CHECK(j.at("samples")[1].at("t") == 3.14);
    CHECK(j.size() == 5);
}

}  // TEST_SUITE
