#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hq/angmom.hpp"
#include "hq/core.hpp"
#include "hq/energy.hpp"
#include "hq/radial.hpp"

namespace hq::io {

/// Shortest fixed-precision rendering that still round-trips a double:
/// printf "%.17g", locale-independent.
std::string fmt17(double v);

std::string to_string(energy::RadialMode mode);
energy::RadialMode radial_mode_from_string(const std::string& s);

std::string to_string(Polarization pol);
Polarization polarization_from_string(const std::string& s);

/// CSV with header `n,kR,closed,asymptotic,rel_dev`, one row per scan entry.
std::string deviation_scan_csv(const std::vector<radial::DeviationRow>& rows);

/// CSV with header `n,omega,k0,energy,beta_hat,radial_mode`, one row per k0.
std::string beta_report_csv(const energy::BetaReport& report);

nlohmann::json beta_report_json(const energy::BetaReport& report);

/// CSV with header `t,Jx,Jy,Jz,|J|`, one row per time sample.
std::string angmom_samples_csv(const angmom::AngularMomentumReport& report);

nlohmann::json angmom_report_json(const angmom::AngularMomentumReport& report);

}  // namespace hq::io
