#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "geomlab/norms.hpp"

namespace geomlab {

/// Raised by estimate_delta when no sphere pair at the requested grid
/// resolution satisfies the distance constraint (only near eps = 2).
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EstimatorConfig {
    int grid_resolution = 512;  // dim-2 theta nodes per axis
    int refine_rounds = 3;      // each round shrinks the theta window 8x
    int starts = 64;            // multi-start count, dim >= 3
    int local_iters = 200;      // pattern-search sweep cap per start
    std::uint64_t seed = 1;
    double tol = 1e-6;          // convergence threshold on objective improvement
};

void validate(const EstimatorConfig& cfg);

/// A witness-certified bound: `value` is the objective recomputed at the
/// stored pair, so it is a sound lower bound for sup-type constants and a
/// sound upper bound for the convexity modulus.
struct EstimateResult {
    double value = 0.0;
    Vector witness_x;
    Vector witness_y;
    std::int64_t evaluations = 0;
    EstimatorConfig config;
    bool converged = true;          // last refinement improved by <= cfg.tol
    double last_improvement = 0.0;  // objective gain in the final refinement
};

struct SweepResult {
    std::vector<double> lambdas;            // strictly increasing, in [0,1]
    std::vector<EstimateResult> values;     // one estimate per lambda
};

/// ||lambda x + (1-lambda) y||^2 + lambda (1-lambda) ||x - y||^2.
/// Requires x, y on the unit sphere within 1e-9 and lambda in [0,1].
double ly_objective(const NormedSpace& space, const Vector& x, const Vector& y,
                    double lambda);

/// Supremum estimate of the lambda-parallelogram objective over S_X x S_X.
/// dim 2: exhaustive theta-product grid with windowed refinement;
/// dim >= 3: seeded multi-start coordinate pattern search.
/// Endpoints lambda in {0,1} return exactly 1 without search.
EstimateResult estimate_lprime_y(const NormedSpace& space, double lambda,
                                 const EstimatorConfig& cfg);

/// Per-lambda estimates over a strictly increasing grid; the incumbent
/// witness of each node warm-starts the next.
SweepResult sweep_lprime_y(const NormedSpace& space, std::span<const double> lambdas,
                           const EstimatorConfig& cfg);

/// von Neumann-Jordan constant: sup of
/// (||x+y||^2 + ||x-y||^2) / (2(||x||^2 + ||y||^2)) over (x, y) != (0, 0),
/// searched in the scale-reduced form x in S_X, y = t u with u in S_X,
/// t on a fixed 64-node grid in [0,1].
EstimateResult estimate_cnj(const NormedSpace& space, const EstimatorConfig& cfg);

/// Unit-sphere constants: sup of (||x+y||^2 + ||x-y||^2) / 4 over S_X x S_X,
/// returned together with its 4x companion sharing the witness pair.
std::pair<EstimateResult, EstimateResult> estimate_cnj_prime_and_E(
    const NormedSpace& space, const EstimatorConfig& cfg);

/// Convexity modulus estimate: min of 1 - ||x+y||/2 over sphere pairs with
/// ||x-y|| >= eps. Certified upper bound on the true modulus.
EstimateResult estimate_delta(const NormedSpace& space, double eps,
                              const EstimatorConfig& cfg);

/// Lower bound on the sup at lambda from a convexity-modulus value delta
/// at distance eps:  (2(1-delta) - |2 lambda - 1| eps)^2 / 4
///                   + lambda (1-lambda) eps^2.
double ly_delta_lower_bound(double lambda, double eps, double delta);

/// One-eps upper expression:
/// (2 lambda + |1 - 2 lambda| - 2 lambda delta)^2 + lambda (1-lambda) eps^2.
/// Bounds the objective of every pair at distance exactly eps.
double ly_delta_upper_bound_at(double lambda, double eps, double delta);

/// Global upper bound: sup of ly_delta_upper_bound_at over an eps-grid of
/// step 1/256, with delta taken from a pointwise-exact monotone profile.
/// The profile must be non-decreasing on [0,2].
double ly_delta_upper_bound(double lambda,
                            const std::function<double(double)>& delta_profile);

}  // namespace geomlab
