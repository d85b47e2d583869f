#pragma once

#include <string>
#include <string_view>

#include "wilsonlab/suite.hpp"

namespace wilsonlab {

enum class ReportFormat { Json, Csv, Text };

/// Throws PreconditionViolated on an unknown name.
ReportFormat parse_format(std::string_view name);

/// JSON: {suite, params, results: [{check, p, mod_exp, lhs, rhs, status,
/// reason}], summary: {pass, fail, skipped}}. Residues are decimal strings.
/// Only params.wall_time depends on the run.
std::string render_report(const SuiteReport& report, ReportFormat format);

}  // namespace wilsonlab
