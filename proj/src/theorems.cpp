#include "geomlab/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "rng.hpp"

namespace geomlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq_norm(const NormedSpace& sp, std::span<const double> v) {
    const double n = sp.norm_unchecked(v);
    return n * n;
}

double saturation_bound(double lam) { return -4.0 * lam * lam + 4.0 * lam + 1.0; }

// relation factor 1 - |1-2l| / (2 sqrt(l(1-l))); positive only on the
// middle band where the second relation inequality has content
double relation_factor(double lam) {
    if (lam <= 0.0 || lam >= 1.0) return -kInf;
    return 1.0 - std::fabs(1.0 - 2.0 * lam) / (2.0 * std::sqrt(lam * (1.0 - lam)));
}

CheckItem make_item(std::string name, double lhs, double rhs, double tol, bool pass,
                    std::string note) {
    CheckItem it;
    it.name = std::move(name);
    it.lhs = lhs;
    it.rhs = rhs;
    it.tol = tol;
    it.status = pass ? CheckStatus::pass : CheckStatus::fail;
    it.note = std::move(note);
    return it;
}

CheckWitness witness_of(const EstimateResult& r, double lam) {
    return CheckWitness{r.witness_x, r.witness_y, lam};
}

}  // namespace

bool CheckReport::all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& it) { return it.status != CheckStatus::fail; });
}

double frechet_residual(const NormedSpace& space, const Vector& x, const Vector& y,
                        const Vector& z) {
    const auto n = static_cast<std::size_t>(space.dim());
    if (x.size() != n || y.size() != n || z.size() != n)
        throw input_error("frechet_residual: dimension mismatch");
    for (const auto* v : {&x, &y, &z})
        for (double c : *v)
            if (!std::isfinite(c)) throw input_error("frechet_residual: non-finite coordinate");

    Vector t(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) t[i] = x[i] + y[i];
    acc += sq_norm(space, t);
    for (std::size_t i = 0; i < n; ++i) t[i] = y[i] + z[i];
    acc += sq_norm(space, t);
    for (std::size_t i = 0; i < n; ++i) t[i] = x[i] + z[i];
    acc += sq_norm(space, t);
    for (std::size_t i = 0; i < n; ++i) t[i] = x[i] + y[i] + z[i];
    acc -= sq_norm(space, t);
    acc -= sq_norm(space, x);
    acc -= sq_norm(space, y);
    acc -= sq_norm(space, z);
    return std::fabs(acc);
}

std::optional<std::function<double(double)>> analytic_delta_profile(const NormedSpace& space) {
    if (const auto* lp = std::get_if<LpNorm>(&space.descriptor())) {
        if (lp->p == 2.0)
            return [](double eps) { return 1.0 - std::sqrt(1.0 - eps * eps / 4.0); };
        // l1 and the max norm contain isometric squares: the modulus vanishes
        if (lp->p == 1.0 || std::isinf(lp->p)) return [](double) { return 0.0; };
    }
    return std::nullopt;
}

std::vector<double> default_lambda_grid() {
    std::vector<double> grid(21);
    for (int i = 0; i <= 20; ++i) grid[static_cast<std::size_t>(i)] = i / 20.0;
    return grid;
}

CheckReport run_check_suite(const NormedSpace& space, std::span<const double> lambda_grid,
                            const EstimatorConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckReport rep;
    rep.space = space.label();
    rep.config = cfg;

    const SweepResult sweep = sweep_lprime_y(space, lambda_grid, cfg);
    const auto [cnjp, gao_e] = estimate_cnj_prime_and_E(space, cfg);

    // direct estimate at 1/2 for the identity checks, so both sides of the
    // comparison run the same cold search
    const EstimateResult half_own = estimate_lprime_y(space, 0.5, cfg);
    const EstimateResult* half = &half_own;

    rep.estimates_converged = cnjp.converged && half->converged;
    for (const auto& v : sweep.values) rep.estimates_converged &= v.converged;

    const std::size_t m = sweep.lambdas.size();

    {  // range_lower: every estimate at least 1
        std::size_t worst = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (sweep.values[i].value < sweep.values[worst].value) worst = i;
        CheckItem it = make_item("range_lower", sweep.values[worst].value, 1.0, cfg.tol,
                                 sweep.values[worst].value >= 1.0 - cfg.tol,
                                 "min estimate over the lambda grid vs the constant lower bound");
        it.witness = witness_of(sweep.values[worst], sweep.lambdas[worst]);
        rep.items.push_back(std::move(it));
    }
    {  // range_upper: every estimate below the saturation parabola
        std::size_t worst = 0;
        double worst_gap = -kInf;
        for (std::size_t i = 0; i < m; ++i) {
            const double gap = sweep.values[i].value - saturation_bound(sweep.lambdas[i]);
            if (gap > worst_gap) {
                worst_gap = gap;
                worst = i;
            }
        }
        CheckItem it = make_item("range_upper", sweep.values[worst].value,
                                 saturation_bound(sweep.lambdas[worst]), cfg.tol,
                                 worst_gap <= cfg.tol,
                                 "estimate vs -4l^2+4l+1 at the tightest lambda");
        it.witness = witness_of(sweep.values[worst], sweep.lambdas[worst]);
        rep.items.push_back(std::move(it));
    }
    {  // symmetry across lambda <-> 1 - lambda, on matching grid nodes
        double worst = -kInf;
        std::size_t wi = 0, wj = 0;
        bool any = false;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i; j < m; ++j)
                if (std::fabs(sweep.lambdas[i] + sweep.lambdas[j] - 1.0) <= 1e-9) {
                    any = true;
                    const double d =
                        std::fabs(sweep.values[i].value - sweep.values[j].value);
                    if (d > worst) {
                        worst = d;
                        wi = i;
                        wj = j;
                    }
                }
        if (any) {
            CheckItem it = make_item("symmetry", worst, 0.0, 2e-3, worst <= 2e-3,
                                     "worst |estimate(l) - estimate(1-l)| over paired nodes");
            it.witness = witness_of(sweep.values[wi], sweep.lambdas[wi]);
            (void)wj;
            rep.items.push_back(std::move(it));
        } else {
            CheckItem it;
            it.name = "symmetry";
            it.status = CheckStatus::vacuous;
            it.note = "no lambda pairs summing to 1 on this grid";
            rep.items.push_back(std::move(it));
        }
    }
    {  // 4-Lipschitz continuity in lambda on consecutive nodes
        double worst = -kInf;
        std::size_t wi = 0;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            const double h = sweep.lambdas[i + 1] - sweep.lambdas[i];
            const double excess =
                std::fabs(sweep.values[i + 1].value - sweep.values[i].value) - 4.0 * h;
            if (excess > worst) {
                worst = excess;
                wi = i;
            }
        }
        if (m >= 2) {
            CheckItem it = make_item(
                "lipschitz", std::fabs(sweep.values[wi + 1].value - sweep.values[wi].value),
                4.0 * (sweep.lambdas[wi + 1] - sweep.lambdas[wi]), 2e-3, worst <= 2e-3,
                "worst consecutive jump vs 4 |dl|");
            it.witness = witness_of(sweep.values[wi + 1], sweep.lambdas[wi + 1]);
            rep.items.push_back(std::move(it));
        }
    }
    {  // the half-lambda identity and its 4x companion
        CheckItem it = make_item("half_identity", half->value, cnjp.value, 2e-3,
                                 std::fabs(half->value - cnjp.value) <= 2e-3,
                                 "estimate at lambda = 1/2 vs the unit-sphere constant");
        it.witness = witness_of(*half, 0.5);
        rep.items.push_back(std::move(it));

        CheckItem e = make_item("e_identity", gao_e.value, 4.0 * cnjp.value, 8e-3,
                                std::fabs(gao_e.value - 4.0 * cnjp.value) <= 8e-3,
                                "sum-of-squares constant vs 4x the unit-sphere constant");
        e.witness = witness_of(gao_e, 0.5);
        rep.items.push_back(std::move(e));
    }
    {  // relation_lower: estimate(l) >= 2 min(l, 1-l) cnj'
        double worst = -kInf;
        std::size_t wi = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const double lam = sweep.lambdas[i];
            const double lower = 2.0 * std::min(lam, 1.0 - lam) * cnjp.value;
            const double viol = lower - sweep.values[i].value;
            if (viol > worst) {
                worst = viol;
                wi = i;
            }
        }
        CheckItem it = make_item("relation_lower",
                                 2.0 * std::min(sweep.lambdas[wi], 1.0 - sweep.lambdas[wi]) *
                                     cnjp.value,
                                 sweep.values[wi].value, 2e-3, worst <= 2e-3,
                                 "2 min(l, 1-l) cnj' vs estimate, tightest lambda");
        it.witness = witness_of(sweep.values[wi], sweep.lambdas[wi]);
        rep.items.push_back(std::move(it));
    }
    {  // relation_upper: cnj' >= factor(l) * estimate(l) where the factor is positive
        double worst = -kInf;
        std::size_t wi = 0;
        bool any = false;
        for (std::size_t i = 0; i < m; ++i) {
            const double f = relation_factor(sweep.lambdas[i]);
            if (f <= 0.0) continue;
            any = true;
            const double viol = f * sweep.values[i].value - cnjp.value;
            if (viol > worst) {
                worst = viol;
                wi = i;
            }
        }
        if (any) {
            CheckItem it = make_item("relation_upper",
                                     relation_factor(sweep.lambdas[wi]) * sweep.values[wi].value,
                                     cnjp.value, 2e-3, worst <= 2e-3,
                                     "factor(l) estimate vs cnj', tightest applicable lambda");
            it.witness = witness_of(sweep.values[wi], sweep.lambdas[wi]);
            rep.items.push_back(std::move(it));
        } else {
            CheckItem it;
            it.name = "relation_upper";
            it.status = CheckStatus::vacuous;
            it.note = "relation factor nonpositive on every grid lambda";
            rep.items.push_back(std::move(it));
        }
    }
    {  // convexity-modulus sandwich, only with an exact analytic profile
        const auto profile = analytic_delta_profile(space);
        if (profile) {
            double worst_lo = -kInf, worst_hi = -kInf;
            std::size_t wlo = 0, whi = 0;
            for (std::size_t i = 0; i < m; ++i) {
                const double lam = sweep.lambdas[i];
                double lb = -kInf;
                for (int k = 0; k <= 512; ++k) {
                    const double eps = 2.0 * k / 512.0;
                    const double d = std::clamp((*profile)(eps), 0.0, 1.0);
                    lb = std::max(lb, ly_delta_lower_bound(lam, eps, d));
                }
                const double ub = ly_delta_upper_bound(lam, *profile);
                const double vlo = lb - sweep.values[i].value;
                const double vhi = sweep.values[i].value - ub;
                if (vlo > worst_lo) {
                    worst_lo = vlo;
                    wlo = i;
                }
                if (vhi > worst_hi) {
                    worst_hi = vhi;
                    whi = i;
                }
            }
            CheckItem lo = make_item("delta_sandwich_lower", worst_lo, 0.0, 2e-3,
                                     worst_lo <= 2e-3,
                                     "best modulus lower bound minus estimate, tightest lambda");
            lo.witness = witness_of(sweep.values[wlo], sweep.lambdas[wlo]);
            rep.items.push_back(std::move(lo));
            CheckItem hi = make_item("delta_sandwich_upper", worst_hi, 0.0, 2e-3,
                                     worst_hi <= 2e-3,
                                     "estimate minus globalized modulus upper bound, tightest "
                                     "lambda");
            hi.witness = witness_of(sweep.values[whi], sweep.lambdas[whi]);
            rep.items.push_back(std::move(hi));
        } else {
            for (const char* n : {"delta_sandwich_lower", "delta_sandwich_upper"}) {
                CheckItem it;
                it.name = n;
                it.status = CheckStatus::vacuous;
                it.note = "no analytic convexity-modulus profile registered for this space";
                rep.items.push_back(std::move(it));
            }
        }
    }

    rep.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

Classification classify_space(const NormedSpace& space, const EstimatorConfig& cfg) {
    const std::vector<double> grid = default_lambda_grid();
    const SweepResult sweep = sweep_lprime_y(space, grid, cfg);
    const std::size_t m = grid.size();

    Classification c;
    c.estimates_converged = true;
    for (const auto& v : sweep.values) c.estimates_converged &= v.converged;
    c.ly_half = sweep.values[10].value;  // grid node 0.5

    // Frechet residual over seeded triples on and off the unit sphere
    detail::Rng rng(cfg.seed);
    const auto n = static_cast<std::size_t>(space.dim());
    Vector x(n), y(n), z(n);
    double worst_res = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        for (Vector* v : {&x, &y, &z}) {
            Vector dir(n);
            double sq = 0.0;
            for (auto& cc : dir) {
                cc = rng.normal();
                sq += cc * cc;
            }
            if (sq < 1e-18) {
                dir[0] = 1.0;
            }
            const double nn = space.norm_unchecked(dir);
            const double radius = rng.uniform(0.5, 2.0);
            for (std::size_t i = 0; i < n; ++i) (*v)[i] = radius * dir[i] / nn;
        }
        worst_res = std::max(worst_res, frechet_residual(space, x, y, z));
    }
    c.max_frechet_residual = worst_res;
    c.inner_product_like = c.ly_half <= 1.0 + 1e-3 && worst_res <= 1e-6;

    // uniform non-squareness: a strict gap below the saturation parabola at
    // some interior lambda. One-sided: saturation itself cannot be certified
    // from lower bounds, only refuted.
    double best_gap = -kInf;
    for (std::size_t i = 0; i < m; ++i) {
        if (grid[i] <= 0.0 || grid[i] >= 1.0) continue;
        best_gap = std::max(best_gap,
                            -4.0 * grid[i] * grid[i] + 4.0 * grid[i] + 1.0 -
                                sweep.values[i].value);
    }
    constexpr double kNonsquareMargin = 1e-2;
    c.uniformly_nonsquare = best_gap > kNonsquareMargin;
    c.nonsquare_margin = best_gap - kNonsquareMargin;

    // normal structure evidence on [1/2, 1], with the last refinement gain as
    // heuristic upper slack on the estimate
    double best_ns = -kInf;
    for (std::size_t i = 0; i < m; ++i) {
        if (grid[i] < 0.5) continue;
        const double rhs = -grid[i] * grid[i] + grid[i] + 1.0;
        best_ns = std::max(
            best_ns, rhs - (sweep.values[i].value + sweep.values[i].last_improvement));
    }
    c.normal_structure_sufficient = best_ns > 0.0;
    c.normal_structure_margin = best_ns;

    // midpoint convexity probe over grid triples
    double worst_excess = -kInf;
    std::size_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 2; j < m; ++j) {
            if ((i + j) % 2 != 0) continue;
            const std::size_t mid = (i + j) / 2;
            const double excess = sweep.values[mid].value -
                                  (sweep.values[i].value + sweep.values[j].value) / 2.0;
            if (excess > worst_excess) {
                worst_excess = excess;
                wa = i;
                wb = j;
            }
        }
    c.convexity_excess = worst_excess;
    if (worst_excess > 3.0 * cfg.tol) {
        c.convexity_probe = ConvexityProbe::violated;
        c.violating_lambdas = {grid[wa], grid[(wa + wb) / 2], grid[wb]};
    } else {
        c.convexity_probe = ConvexityProbe::convex_consistent;
    }
    return c;
}

}  // namespace geomlab
