#pragma once

#include <string>
#include <vector>

namespace hq::verify {

/// Quick keeps every check but trims the grids (low orders, one kR decade)
/// so the whole battery runs in seconds; Full runs the complete grids.
enum class Profile { Quick, Full };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double measured = 0.0;  ///< worst value observed for the headline check
    double tolerance = 0.0; ///< threshold the headline check is held to
    std::string note;       ///< secondary measurements, if any
};

/// The ten verification criteria, in order. Pure computation: output depends
/// only on the profile, never on wall clock, environment or thread count.
std::vector<CriterionResult> run_all(Profile profile);

bool all_passed(const std::vector<CriterionResult>& results);

/// One line per criterion: id, PASS/FAIL, name, measured value, tolerance.
std::string render(const std::vector<CriterionResult>& results);

}  // namespace hq::verify
