// Acceptance suite: each criterion prints one PASS/FAIL line with its
// measured worst case; the exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "geomlab/constants.hpp"
#include "geomlab/io.hpp"
#include "geomlab/norms.hpp"
#include "geomlab/theorems.hpp"

#include "../src/rng.hpp"

using namespace geomlab;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

double parabola(double lam) { return -4.0 * lam * lam + 4.0 * lam + 1.0; }

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %-24s %s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

}  // namespace

int main() {
    const EstimatorConfig cfg;  // defaults throughout
    const std::vector<double> grid = default_lambda_grid();
    std::vector<double> dense;
    for (int i = 0; i <= 100; ++i) dense.push_back(i / 100.0);

    const std::vector<NormedSpace> catalog = catalog_spaces();

    // shared artifacts
    std::map<std::string, SweepResult> sweeps;       // 21-node grid
    std::map<std::string, SweepResult> dense_sweeps; // 101-node grid
    std::map<std::string, EstimateResult> cnjp, gao;
    std::map<std::string, double> sweep_seconds;
    for (const NormedSpace& s : catalog) {
        Timer t;
        sweeps.emplace(s.label(), sweep_lprime_y(s, grid, cfg));
        sweep_seconds[s.label()] = t.seconds();
        dense_sweeps.emplace(s.label(), sweep_lprime_y(s, dense, cfg));
        auto [cp, e] = estimate_cnj_prime_and_E(s, cfg);
        cnjp.emplace(s.label(), cp);
        gao.emplace(s.label(), e);
    }

    {  // 1. Hilbert flatness
        double worst = 0.0, secs = 0.0;
        for (const char* lbl : {"lp:2:dim=2", "lp:2:dim=3"}) {
            for (const auto& v : sweeps.at(lbl).values)
                worst = std::max(worst, std::fabs(v.value - 1.0));
            secs = std::max(secs, sweep_seconds.at(lbl));
        }
        report(1, "hilbert-flatness", worst <= 1e-3 && secs <= 60.0,
               "max |estimate - 1| = " + fmt(worst) + " (<= 1e-3), sweep time " + fmt(secs) +
                   "s (<= 60s)");
    }

    {  // 2. square-space saturation with exact analytic witnesses
        double worst = 0.0, worst_witness = 0.0;
        const NormedSpace li(LpNorm{kInf, 2});
        const NormedSpace l1(LpNorm{1.0, 2});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double lam = grid[i];
            worst = std::max(worst, std::fabs(sweeps.at("lp:inf:dim=2").values[i].value -
                                              parabola(lam)));
            worst = std::max(worst, std::fabs(sweeps.at("lp:1:dim=2").values[i].value -
                                              parabola(lam)));
            const double expect = 1.0 + (lam * (1.0 - lam)) * 4.0;
            worst_witness = std::max(
                worst_witness,
                std::fabs(ly_objective(li, {1.0, 1.0}, {1.0, -1.0}, lam) - expect));
            worst_witness = std::max(
                worst_witness,
                std::fabs(ly_objective(l1, {1.0, 0.0}, {0.0, 1.0}, lam) - expect));
        }
        report(2, "square-saturation", worst <= 1e-3 && worst_witness <= 1e-12,
               "max |estimate - parabola| = " + fmt(worst) +
                   " (<= 1e-3), analytic witness residual " + fmt(worst_witness));
    }

    Classification cls_l2, cls_l1, cls_linf, cls_l3;
    {
        cls_l2 = classify_space(catalog[0], cfg);
        cls_l1 = classify_space(catalog[2], cfg);
        cls_linf = classify_space(catalog[3], cfg);
        cls_l3 = classify_space(catalog[4], cfg);
    }

    {  // 3. the l3 example: large half-lambda value, midpoint convexity violation
        const double half = sweeps.at("lp:3:dim=2").values[10].value;
        const bool probe = cls_l3.convexity_probe == ConvexityProbe::violated &&
                           cls_l3.violating_lambdas[0] == 0.0 &&
                           cls_l3.violating_lambdas[1] == 0.5 &&
                           cls_l3.violating_lambdas[2] == 1.0;
        report(3, "l3-example", half >= 1.0098 && probe,
               "estimate(1/2) = " + fmt(half) + " (>= 1.0098), midpoint violation at {0, "
               "1/2, 1}: " + (probe ? "yes" : "no"));
    }

    {  // 4. identity chain on every catalog space
        double worst_half = 0.0, worst_e = 0.0;
        for (const NormedSpace& s : catalog) {
            const double half = estimate_lprime_y(s, 0.5, cfg).value;
            worst_half = std::max(worst_half, std::fabs(half - cnjp.at(s.label()).value));
            worst_e = std::max(worst_e, std::fabs(gao.at(s.label()).value -
                                                  4.0 * cnjp.at(s.label()).value));
        }
        report(4, "identity-chain", worst_half <= 2e-3 && worst_e <= 8e-3,
               "max |L(1/2) - cnj'| = " + fmt(worst_half) + " (<= 2e-3), max |E - 4 cnj'| = " +
                   fmt(worst_e) + " (<= 8e-3)");
    }

    {  // 5. symmetry on the coarse grid, Lipschitz on the dense grid (h = 0.01)
        double worst_sym = 0.0, worst_lip = -kInf;
        for (const NormedSpace& s : catalog) {
            const SweepResult& sw = sweeps.at(s.label());
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const std::size_t j = grid.size() - 1 - i;
                worst_sym = std::max(
                    worst_sym, std::fabs(sw.values[i].value - sw.values[j].value));
            }
            const SweepResult& ds = dense_sweeps.at(s.label());
            for (std::size_t i = 0; i + 1 < dense.size(); ++i) {
                const double h = dense[i + 1] - dense[i];
                worst_lip = std::max(worst_lip,
                                     std::fabs(ds.values[i + 1].value - ds.values[i].value) -
                                         4.0 * h);
            }
        }
        report(5, "symmetry-lipschitz", worst_sym <= 2e-3 && worst_lip <= 2e-3,
               "max |L(l) - L(1-l)| = " + fmt(worst_sym) +
                   " (<= 2e-3), max Lipschitz excess = " + fmt(worst_lip) + " (<= 2e-3)");
    }

    {  // 6. convexity-modulus oracle on the Euclidean plane
        const NormedSpace l2 = catalog[0];
        double worst = 0.0;
        for (int k = 1; k <= 9; ++k) {
            const double eps = 0.2 * k;
            const double est = estimate_delta(l2, eps, cfg).value;
            const double exact = 1.0 - std::sqrt(1.0 - eps * eps / 4.0);
            worst = std::max(worst, std::fabs(est - exact));
        }
        report(6, "delta-oracle", worst <= 1e-3,
               "max |delta estimate - analytic| = " + fmt(worst) + " (<= 1e-3)");
    }

    {  // 7. modulus sandwich with exact profiles
        const NormedSpace l2 = catalog[0];
        const auto prof2 = *analytic_delta_profile(l2);
        double worst_lo = -kInf, worst_hi = -kInf;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double lam = grid[i];
            const double est = sweeps.at("lp:2:dim=2").values[i].value;
            double lb = -kInf;
            for (int k = 0; k <= 512; ++k) {
                const double eps = 2.0 * k / 512.0;
                lb = std::max(lb, ly_delta_lower_bound(
                                      lam, eps, std::min(1.0, std::max(0.0, prof2(eps)))));
            }
            worst_lo = std::max(worst_lo, lb - est);
            worst_hi = std::max(worst_hi, est - ly_delta_upper_bound(lam, prof2));
        }
        const double ub_inf = ly_delta_upper_bound(0.5, [](double) { return 0.0; });
        const double attained =
            std::fabs(sweeps.at("lp:inf:dim=2").values[10].value - ub_inf);
        const bool pass = worst_lo <= 2e-3 && worst_hi <= 2e-3 && ub_inf == 2.0 &&
                          attained <= 1e-3;
        report(7, "delta-sandwich", pass,
               "euclidean lower excess " + fmt(worst_lo) + ", upper excess " + fmt(worst_hi) +
                   " (<= 2e-3); max-norm bound " + fmt(ub_inf) + " attained within " +
                   fmt(attained));
    }

    {  // 8. relation inequalities against the unit-sphere constant
        double worst_lo = -kInf, worst_hi = -kInf;
        for (const NormedSpace& s : catalog) {
            const SweepResult& sw = sweeps.at(s.label());
            const double cp = cnjp.at(s.label()).value;
            for (std::size_t i = 0; i < grid.size(); ++i) {
                const double lam = grid[i];
                worst_lo = std::max(worst_lo, 2.0 * std::min(lam, 1.0 - lam) * cp -
                                                  sw.values[i].value);
                if (lam > 0.15 && lam < 0.85) {
                    const double f =
                        1.0 - std::fabs(1.0 - 2.0 * lam) / (2.0 * std::sqrt(lam * (1.0 - lam)));
                    worst_hi = std::max(worst_hi, f * sw.values[i].value - cp);
                }
            }
        }
        report(8, "relation-inequalities", worst_lo <= 2e-3 && worst_hi <= 2e-3,
               "worst lower-relation excess " + fmt(worst_lo) + ", worst upper-relation "
               "excess " + fmt(worst_hi) + " (<= 2e-3)");
    }

    {  // 9. classification table
        const bool ok2 = cls_l2.inner_product_like && cls_l2.uniformly_nonsquare &&
                         cls_l2.normal_structure_sufficient;
        const bool oki = !cls_linf.inner_product_like && !cls_linf.uniformly_nonsquare &&
                         !cls_linf.normal_structure_sufficient;
        const bool ok1 = !cls_l1.inner_product_like && !cls_l1.uniformly_nonsquare &&
                         !cls_l1.normal_structure_sufficient;
        const bool ok3 = !cls_l3.inner_product_like && cls_l3.uniformly_nonsquare &&
                         cls_l3.normal_structure_sufficient;
        std::ostringstream d;
        d << "l2(T,T,T):" << (ok2 ? "ok" : "BAD") << " linf(F,F,F):" << (oki ? "ok" : "BAD")
          << " l1(F,F,F):" << (ok1 ? "ok" : "BAD") << " l3(F,T,T):" << (ok3 ? "ok" : "BAD");
        report(9, "classification-table", ok2 && oki && ok1 && ok3, d.str());
    }

    {  // 10. property suite: 1000 seeded trials per catalog space
        bool pass = true;
        std::ostringstream detail;
        detail.setf(std::ios::fixed);

        for (const NormedSpace& s : catalog) {
            EstimatorConfig tiny;
            tiny.grid_resolution = 16;
            tiny.refine_rounds = 1;
            tiny.starts = 2;
            tiny.local_iters = 25;

            EstimatorConfig fine = tiny;
            fine.grid_resolution = 32;
            fine.starts = 4;

            int bad_cert = 0, bad_mono = 0;
            detail::Rng rng(41);
            for (int trial = 0; trial < 1000; ++trial) {
                const double lam = 0.01 + 0.98 * rng.uniform01();
                tiny.seed = fine.seed = 1000 + static_cast<std::uint64_t>(trial);
                const EstimateResult a = estimate_lprime_y(s, lam, tiny);
                if (std::fabs(ly_objective(s, a.witness_x, a.witness_y, lam) - a.value) >
                    1e-12)
                    ++bad_cert;
                if (trial % 4 == 0) {  // paired run at the finer budget
                    const EstimateResult b = estimate_lprime_y(s, lam, fine);
                    // 1e-12 grain: flat landscapes pin the incumbent on
                    // rounding noise, so the last bits may wander
                    if (b.value < a.value - 1e-12) ++bad_mono;
                }
            }

            int bad_axiom = 0;
            for (const CheckItem& it : validate_norm_axioms(s, 1000, 97))
                if (it.status == CheckStatus::fail) ++bad_axiom;

            if (bad_cert || bad_mono || bad_axiom) {
                pass = false;
                detail << s.label() << "(cert:" << bad_cert << " mono:" << bad_mono
                       << " axiom:" << bad_axiom << ") ";
            }
        }

        // csv round-trip over seeded synthetic sweeps
        int bad_csv = 0;
        detail::Rng rng(4242);
        for (int trial = 0; trial < 1000; ++trial) {
            SweepResult sweep;
            sweep.lambdas = {rng.uniform01() * 0.5, 0.6 + rng.uniform01() * 0.4};
            for (int i = 0; i < 2; ++i) {
                EstimateResult r;
                r.value = std::exp(rng.uniform(-40.0, 40.0));
                r.witness_x = {rng.normal(), rng.normal()};
                r.witness_y = {rng.normal(), rng.normal()};
                r.evaluations = static_cast<std::int64_t>(rng.uniform01() * 1e12);
                sweep.values.push_back(std::move(r));
            }
            std::stringstream buf;
            write_sweep_csv(buf, sweep);
            const SweepResult back = read_sweep_csv(buf);
            for (int i = 0; i < 2; ++i)
                if (back.lambdas[static_cast<std::size_t>(i)] !=
                        sweep.lambdas[static_cast<std::size_t>(i)] ||
                    back.values[static_cast<std::size_t>(i)].value !=
                        sweep.values[static_cast<std::size_t>(i)].value ||
                    back.values[static_cast<std::size_t>(i)].witness_x !=
                        sweep.values[static_cast<std::size_t>(i)].witness_x)
                    ++bad_csv;
        }
        if (bad_csv) {
            pass = false;
            detail << "csv-roundtrip:" << bad_csv << " ";
        }

        std::string msg = pass ? "certification, monotonicity, axioms, csv round-trip all "
                                 "clean over 1000 trials/space"
                               : detail.str();
        report(10, "property-suite", pass, msg);

        // exploratory: the truncated sequence space, reported but not asserted
        const SweepResult& c0 = sweeps.at("c0trunc:dim=8");
        std::printf("       c0trunc:dim=8 exploratory sweep (truncation of the sequence-space "
                    "example; no assertion):\n");
        for (std::size_t i = 0; i < c0.lambdas.size(); i += 2)
            std::printf("         lambda=%.2f estimate=%.6f\n", c0.lambdas[i],
                        c0.values[i].value);
    }

    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
