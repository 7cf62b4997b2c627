#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qtoda/verify.hpp"

namespace qtoda {

/// 17-significant-digit decimal form; reproducible across runs.
std::string format_double(double x);

/// Deterministic JSON: fixed field order, fixed float formatting, LF only.
std::string verification_to_json(const VerificationReport& report);
std::string q1_report_to_json(const Q1Report& report);

void write_solutions_csv(std::ostream& os, const std::vector<BetheSolution>& sols);
void write_flow_csv(std::ostream& os, const std::vector<FlowSample>& samples);

}  // namespace qtoda
