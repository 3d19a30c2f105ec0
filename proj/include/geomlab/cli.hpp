#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geomlab/norms.hpp"

namespace geomlab {

/// Space-descriptor grammar: `lp:<p>:dim=<n>` with p a decimal or `inf`;
/// `c0trunc:dim=<n>`; `polygon:<path>` with one comma-separated vertex per
/// line. Throws input_error with a descriptive message.
NormedSpace parse_space_descriptor(const std::string& text);

/// `start:end:step` (inclusive of both ends when step divides the interval
/// within 1e-12), a comma-separated list, or a single value.
std::vector<double> parse_lambda_spec(const std::string& text);

/// Full CLI entry point. Exit codes: 0 success, 1 usage error, 2 failed
/// checks, 3 numerical non-convergence. GEOMLAB_SEED overrides the seed.
int geomlab_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace geomlab
