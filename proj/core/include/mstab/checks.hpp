#pragma once
#include <string>
#include <vector>

#include "mstab/report.hpp"

namespace mstab::checks {

// suite names accepted by `verify` (plus "all")
std::vector<std::string> suite_names();

// run one suite; reports come back sorted by check name
std::vector<Report> run_suite(const std::string& suite, const CheckParams& params);

// exploratory conjugacy probe: Q8-bar vs its pi-conjugate at one level
Report conjsearch(int level);

// versioned JSON export of Theta at (level, coeff_bits)
std::string theta_export_json(int level, int coeff_bits);

}  // namespace mstab::checks
