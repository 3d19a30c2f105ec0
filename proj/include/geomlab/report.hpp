#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geomlab/norms.hpp"

namespace geomlab {

enum class CheckStatus { pass, fail, vacuous };

/// Argument pair (and lambda, when the check is lambda-indexed) backing a
/// check outcome. For checks without a natural lambda the field carries the
/// relevant scalar (documented per check in the note).
struct CheckWitness {
    Vector x;
    Vector y;
    double lambda = 0.0;
};

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    double lhs = 0.0;   // measured side
    double rhs = 0.0;   // bound it is compared against
    double tol = 0.0;
    std::optional<CheckWitness> witness;
    std::string note;
};

const char* to_string(CheckStatus s);

enum class ConvexityProbe { convex_consistent, violated };

/// Threshold decisions over estimates, with the margins that back them so a
/// decision can be reproduced from the report alone.
struct Classification {
    bool inner_product_like = false;
    bool uniformly_nonsquare = false;
    bool normal_structure_sufficient = false;
    ConvexityProbe convexity_probe = ConvexityProbe::convex_consistent;
    std::array<double, 3> violating_lambdas{0, 0, 0};  // midpoint triple when violated

    // margins
    double ly_half = 0.0;                 // estimate at lambda = 1/2
    double max_frechet_residual = 0.0;
    double nonsquare_margin = 0.0;        // max_lambda(upper(lambda) - estimate) - decision margin
    double normal_structure_margin = 0.0; // best (rhs - estimate - gap) over lambda in [1/2, 1]
    double convexity_excess = 0.0;        // worst midpoint excess over the averaged pair
    bool estimates_converged = true;
};

}  // namespace geomlab
