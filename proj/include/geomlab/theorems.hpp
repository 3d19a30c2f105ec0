#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geomlab/constants.hpp"
#include "geomlab/norms.hpp"
#include "geomlab/report.hpp"

namespace geomlab {

struct CheckReport {
    std::string space;
    std::vector<CheckItem> items;
    EstimatorConfig config;
    double wall_time_seconds = 0.0;
    bool estimates_converged = true;  // backs the CLI non-convergence exit code

    bool all_pass() const;
};

/// | ||x+y||^2 + ||y+z||^2 + ||x+z||^2 - ||x+y+z||^2 - ||x||^2 - ||y||^2 - ||z||^2 |.
/// Zero for all triples exactly when the norm comes from an inner product.
double frechet_residual(const NormedSpace& space, const Vector& x, const Vector& y,
                        const Vector& z);

/// Exact convexity-modulus profile for spaces where one is known in closed
/// form: Euclidean (any dim), and l1 / max norm (identically zero).
std::optional<std::function<double(double)>> analytic_delta_profile(
    const NormedSpace& space);

/// Runs the identity and inequality checks over a lambda grid:
/// range bounds, lambda symmetry, Lipschitz continuity in lambda, the
/// half-lambda identity with the unit-sphere constant and its 4x companion,
/// the two relation inequalities, and (when an analytic convexity profile is
/// registered) the modulus sandwich. Failures are data, not exceptions.
CheckReport run_check_suite(const NormedSpace& space, std::span<const double> lambda_grid,
                            const EstimatorConfig& cfg);

/// Threshold classification over a default lambda grid {0, 0.05, ..., 1}:
/// inner-product likeness (flat sweep + Frechet residual), uniform
/// non-squareness (strict gap below the saturation parabola), sufficient
/// evidence for normal structure, and a midpoint convexity probe.
Classification classify_space(const NormedSpace& space, const EstimatorConfig& cfg);

/// The lambda grid {i/20 : i = 0..20} used by classify_space and the CLI.
std::vector<double> default_lambda_grid();

}  // namespace geomlab
