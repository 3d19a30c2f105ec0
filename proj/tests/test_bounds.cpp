#include <doctest.h>

#include <cmath>

#include "geomlab/constants.hpp"
#include "geomlab/norms.hpp"
#include "geomlab/theorems.hpp"
#include "oracle.hpp"

using namespace geomlab;

namespace {
double hilbert_profile(double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); }
}  // namespace

TEST_CASE("modulus lower bound evaluates the proof-form expression") {
    CHECK(ly_delta_lower_bound(0.5, 2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ly_delta_lower_bound(0.5, std::sqrt(2.0), 1.0 - std::sqrt(2.0) / 2.0) ==
          doctest::Approx(1.0).epsilon(1e-14));

    // at lambda = 0 it collapses to (1 - delta - eps/2)^2
    for (double eps : {0.0, 0.5, 1.3}) {
        for (double delta : {0.0, 0.2}) {
            const double expect = std::pow(1.0 - delta - eps / 2.0, 2);
            CHECK(ly_delta_lower_bound(0.0, eps, delta) ==
                  doctest::Approx(expect).epsilon(1e-14));
            CHECK(ly_delta_lower_bound(0.0, eps, delta) <= 1.0 + 1e-15);
        }
    }

    CHECK_THROWS_AS(ly_delta_lower_bound(-0.1, 1.0, 0.0), input_error);
    CHECK_THROWS_AS(ly_delta_lower_bound(0.5, 2.1, 0.0), input_error);
    CHECK_THROWS_AS(ly_delta_lower_bound(0.5, 1.0, 1.5), input_error);
}

TEST_CASE("modulus upper bound: single-eps expression and globalization") {
    // flat zero profile at lambda = 1/2 peaks at eps = 2 with value 2
    CHECK(ly_delta_upper_bound_at(0.5, 2.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(ly_delta_upper_bound(0.5, [](double) { return 0.0; }) ==
          doctest::Approx(2.0).epsilon(1e-14));

    // Euclidean profile keeps the lambda = 1/2 bound pinned at 1
    CHECK(ly_delta_upper_bound(0.5, hilbert_profile) == doctest::Approx(1.0).epsilon(1e-12));

    // at lambda = 0 the expression reduces to 1 for any admissible profile
    CHECK(ly_delta_upper_bound(0.0, hilbert_profile) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ly_delta_upper_bound(0.0, [](double) { return 0.0; }) ==
          doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(ly_delta_upper_bound(0.5, [](double e) { return 0.5 - e / 4.0; }),
                    input_error);
    CHECK_THROWS_AS(ly_delta_upper_bound(1.5, hilbert_profile), input_error);
}

TEST_CASE("sandwich brackets the estimates on spaces with exact profiles") {
    EstimatorConfig cfg;
    cfg.grid_resolution = 256;
    cfg.refine_rounds = 3;
    cfg.seed = 1;

    SUBCASE("euclidean plane") {
        const NormedSpace l2(LpNorm{2.0, 2});
        const auto profile = analytic_delta_profile(l2);
        REQUIRE(profile.has_value());
        for (double lam : {0.1, 0.35, 0.5, 0.8}) {
            const double est = estimate_lprime_y(l2, lam, cfg).value;
            double lb = 0.0;
            for (int k = 0; k <= 512; ++k) {
                const double eps = 2.0 * k / 512.0;
                lb = std::max(lb, ly_delta_lower_bound(lam, eps,
                                                       std::clamp((*profile)(eps), 0.0, 1.0)));
            }
            const double ub = ly_delta_upper_bound(lam, *profile);
            INFO("lambda=", lam, " lb=", lb, " est=", est, " ub=", ub);
            CHECK(lb <= est + 2e-3);
            CHECK(est <= ub + 2e-3);
            // for the Euclidean profile the lower bound is tight at eps = 2
            CHECK(lb == doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("max norm with the zero profile") {
        const NormedSpace li(LpNorm{std::numeric_limits<double>::infinity(), 2});
        const auto profile = analytic_delta_profile(li);
        REQUIRE(profile.has_value());
        const double est = estimate_lprime_y(li, 0.5, cfg).value;
        const double ub = ly_delta_upper_bound(0.5, *profile);
        CHECK(ub == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(std::fabs(est - ub) <= 1e-3);  // the bound is attained
    }
}

TEST_CASE("profiles are registered exactly for the closed-form spaces") {
    CHECK(analytic_delta_profile(NormedSpace(LpNorm{2.0, 2})).has_value());
    CHECK(analytic_delta_profile(NormedSpace(LpNorm{2.0, 3})).has_value());
    CHECK(analytic_delta_profile(NormedSpace(LpNorm{1.0, 2})).has_value());
    CHECK(analytic_delta_profile(
              NormedSpace(LpNorm{std::numeric_limits<double>::infinity(), 2}))
              .has_value());
    CHECK_FALSE(analytic_delta_profile(NormedSpace(LpNorm{3.0, 2})).has_value());
    CHECK_FALSE(analytic_delta_profile(NormedSpace(MaxPlusWeightedL2{8})).has_value());

    // the registered Euclidean profile matches the estimator within grid error
    const NormedSpace l2(LpNorm{2.0, 2});
    const auto profile = *analytic_delta_profile(l2);
    EstimatorConfig cfg;
    cfg.grid_resolution = 256;
    cfg.refine_rounds = 3;
    for (double eps : {0.4, 1.0, 1.6}) {
        CHECK(std::fabs(estimate_delta(l2, eps, cfg).value - profile(eps)) <= 1e-3);
    }
}
