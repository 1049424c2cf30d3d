#include "hq/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hq::io {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_string(energy::RadialMode mode) {
    switch (mode) {
        case energy::RadialMode::Numeric: return "numeric";
        case energy::RadialMode::Closed: return "closed";
        case energy::RadialMode::Asymptotic: return "asymptotic";
    }
    throw std::logic_error("to_string: unknown RadialMode");
}

energy::RadialMode radial_mode_from_string(const std::string& s) {
    if (s == "numeric") return energy::RadialMode::Numeric;
    if (s == "closed") return energy::RadialMode::Closed;
    if (s == "asymptotic") return energy::RadialMode::Asymptotic;
    throw std::invalid_argument("unknown radial mode '" + s +
                                "' (expected numeric, closed or asymptotic)");
}

std::string to_string(Polarization pol) {
    switch (pol) {
        case Polarization::Linear1: return "linear1";
        case Polarization::Linear2: return "linear2";
        case Polarization::CircularPlus: return "circular+";
        case Polarization::CircularMinus: return "circular-";
    }
    throw std::logic_error("to_string: unknown Polarization");
}

Polarization polarization_from_string(const std::string& s) {
    if (s == "linear1") return Polarization::Linear1;
    if (s == "linear2") return Polarization::Linear2;
    if (s == "circular+") return Polarization::CircularPlus;
    if (s == "circular-") return Polarization::CircularMinus;
    throw std::invalid_argument("unknown polarization '" + s +
                                "' (expected linear1, linear2, circular+ or circular-)");
}

std::string deviation_scan_csv(const std::vector<radial::DeviationRow>& rows) {
    std::ostringstream out;
    out << "n,kR,closed,asymptotic,rel_dev\n";
    for (const auto& row : rows) {
        out << row.n << ',' << fmt17(row.kR) << ',' << fmt17(row.closed) << ','
            << fmt17(row.asymptotic) << ',' << fmt17(row.rel_dev) << '\n';
    }
    return out.str();
}

std::string beta_report_csv(const energy::BetaReport& report) {
    std::ostringstream out;
    out << "n,omega,k0,energy,beta_hat,radial_mode\n";
    for (std::size_t i = 0; i < report.k0_values.size(); ++i) {
        out << report.n << ',' << fmt17(report.omega) << ',' << fmt17(report.k0_values[i])
            << ',' << fmt17(report.energies[i]) << ',' << fmt17(report.beta_hats[i]) << ','
            << to_string(report.mode) << '\n';
    }
    return out.str();
}

nlohmann::json beta_report_json(const energy::BetaReport& report) {
    return nlohmann::json{
        {"assumes_k_independent_amplitude", true},
        {"beta", report.beta},
        {"beta_hats", report.beta_hats},
        {"energies", report.energies},
        {"k0_values", report.k0_values},
        {"max_rel_variation", report.max_rel_variation},
        {"n", report.n},
        {"omega", report.omega},
        {"radial_mode", to_string(report.mode)},
    };
}

std::string angmom_samples_csv(const angmom::AngularMomentumReport& report) {
    std::ostringstream out;
    out << "t,Jx,Jy,Jz,|J|\n";
    for (const auto& s : report.samples) {
        out << fmt17(s.t) << ',' << fmt17(s.J.x) << ',' << fmt17(s.J.y) << ','
            << fmt17(s.J.z) << ',' << fmt17(s.J.norm()) << '\n';
    }
    return out.str();
}

nlohmann::json angmom_report_json(const angmom::AngularMomentumReport& report) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : report.samples) {
        samples.push_back({{"t", s.t}, {"J", {s.J.x, s.J.y, s.J.z}}});
    }
    return nlohmann::json{
        {"J_mean", {report.J_mean.x, report.J_mean.y, report.J_mean.z}},
        {"helicity", to_string(report.helicity)},
        {"max_drift", report.max_drift},
        {"reference_magnitude", report.reference_magnitude},
        {"samples", samples},
    };
}

}  // namespace hq::io
