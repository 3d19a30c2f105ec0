#include "geomlab/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "rng.hpp"

namespace geomlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok) throw input_error(msg);
}

// Theta lattice node: 2 pi idx / den. Computed so that the same rational
// angle yields the same double across lattices whose denominators differ by
// a power of two; node sets then nest exactly when the resolution doubles.
double theta_node(std::int64_t idx, std::int64_t den) {
    std::int64_t m = idx % den;
    if (m < 0) m += den;
    return (2.0 * std::numbers::pi * static_cast<double>(m)) / static_cast<double>(den);
}

struct Vec2 {
    double c[2];
};

Vec2 unit_at(const NormedSpace& space, double theta) {
    Vec2 v{{std::cos(theta), std::sin(theta)}};
    const double n = space.norm_unchecked({v.c, 2});
    return {{v.c[0] / n, v.c[1] / n}};
}

// Shared objective cores. The public operations and the estimator cells both
// go through these, so a stored estimate reproduces bit-for-bit when the
// objective is re-evaluated at its witness pair.

double ly_core(const NormedSpace& sp, std::span<const double> x, std::span<const double> y,
               double lam, std::span<double> comb, std::span<double> diff) {
    const double mu = 1.0 - lam;
    for (std::size_t i = 0; i < x.size(); ++i) {
        comb[i] = lam * x[i] + mu * y[i];
        diff[i] = x[i] - y[i];
    }
    const double a = sp.norm_unchecked(comb);
    const double d = sp.norm_unchecked(diff);
    return a * a + (lam * mu) * (d * d);
}

double cnj_prime_core(const NormedSpace& sp, std::span<const double> x,
                      std::span<const double> y, std::span<double> sum,
                      std::span<double> diff) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum[i] = x[i] + y[i];
        diff[i] = x[i] - y[i];
    }
    const double s = sp.norm_unchecked(sum);
    const double d = sp.norm_unchecked(diff);
    return (s * s + d * d) / 4.0;
}

double nj_ratio_core(const NormedSpace& sp, std::span<const double> x,
                     std::span<const double> y, std::span<double> sum,
                     std::span<double> diff) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        sum[i] = x[i] + y[i];
        diff[i] = x[i] - y[i];
    }
    const double s = sp.norm_unchecked(sum);
    const double d = sp.norm_unchecked(diff);
    const double nx = sp.norm_unchecked(x);
    const double ny = sp.norm_unchecked(y);
    return (s * s + d * d) / (2.0 * (nx * nx + ny * ny));
}

double delta_core(const NormedSpace& sp, std::span<const double> x, std::span<const double> y,
                  std::span<double> sum) {
    for (std::size_t i = 0; i < x.size(); ++i) sum[i] = x[i] + y[i];
    return 1.0 - sp.norm_unchecked(sum) / 2.0;
}

struct CellOut {
    double value;
    bool swapped;   // witness orientation is (y, x)
    bool feasible;
};

// The sup is invariant under swapping x and y, so the search maximizes the
// larger of the two orientations. With matched seeds this makes the lambda
// and (1 - lambda) searches evaluate identical numbers, which the symmetry
// checks rely on.
class LyCell {
public:
    LyCell(const NormedSpace& space, double lam)
        : space_(space), lam_(lam), comb_(space.dim()), diff_(space.dim()) {}

    CellOut operator()(std::span<const double> x, std::span<const double> y) {
        const double f = ly_core(space_, x, y, lam_, comb_, diff_);
        if (lam_ == 0.5) return {f, false, true};
        const double g = ly_core(space_, y, x, lam_, comb_, diff_);
        if (g > f) return {g, true, true};
        return {f, false, true};
    }

private:
    const NormedSpace& space_;
    double lam_;
    std::vector<double> comb_, diff_;
};

class CnjPrimeCell {
public:
    explicit CnjPrimeCell(const NormedSpace& space)
        : space_(space), sum_(space.dim()), diff_(space.dim()) {}

    CellOut operator()(std::span<const double> x, std::span<const double> y) {
        return {cnj_prime_core(space_, x, y, sum_, diff_), false, true};
    }

private:
    const NormedSpace& space_;
    std::vector<double> sum_, diff_;
};

class DeltaCell {
public:
    DeltaCell(const NormedSpace& space, double eps)
        : space_(space), eps_(eps), sum_(space.dim()), diff_(space.dim()) {}

    CellOut operator()(std::span<const double> x, std::span<const double> y) {
        for (std::size_t i = 0; i < x.size(); ++i) diff_[i] = x[i] - y[i];
        if (space_.norm_unchecked(diff_) < eps_) return {0.0, false, false};
        return {delta_core(space_, x, y, sum_), false, true};
    }

private:
    const NormedSpace& space_;
    double eps_;
    std::vector<double> sum_, diff_;
};

struct SearchOutcome {
    double value = 0.0;
    Vector wx, wy;
    std::int64_t evaluations = 0;
    double last_improvement = 0.0;
    bool converged = true;
    bool found = false;
};

bool better(double candidate, double incumbent, bool maximize) {
    return maximize ? candidate > incumbent : candidate < incumbent;
}

struct AxisNodes {
    std::vector<std::int64_t> idx;
    std::vector<Vec2> pts;
};

AxisNodes window_nodes(const NormedSpace& space, std::int64_t center, std::int64_t den, int res) {
    AxisNodes a;
    a.idx.reserve(res + 1);
    a.pts.reserve(res + 1);
    for (int k = -res / 2; k <= res / 2; ++k) {
        const std::int64_t id = center + k;
        a.idx.push_back(id);
        a.pts.push_back(unit_at(space, theta_node(id, den)));
    }
    return a;
}

// Exhaustive (theta1, theta2) product grid with windowed refinement; each
// round divides the window by 8 around the incumbent node. Node angles stay
// on one rational lattice, so doubling grid_resolution only ever adds points.
template <class Cell>
SearchOutcome grid_search_pairs(const NormedSpace& space, Cell cell, const EstimatorConfig& cfg,
                                bool maximize, bool symmetric) {
    const int res = cfg.grid_resolution;
    std::int64_t den = res;

    SearchOutcome out;
    double best = maximize ? -kInf : kInf;
    std::int64_t bi = 0, bj = 0;
    bool bswap = false;

    std::vector<Vec2> pts;
    pts.reserve(res);
    for (int i = 0; i < res; ++i) pts.push_back(unit_at(space, theta_node(i, den)));

    for (int i = 0; i < res; ++i) {
        for (int j = symmetric ? i : 0; j < res; ++j) {
            const CellOut c = cell({pts[i].c, 2}, {pts[j].c, 2});
            ++out.evaluations;
            if (!c.feasible) continue;
            if (!out.found || better(c.value, best, maximize)) {
                out.found = true;
                best = c.value;
                bi = i;
                bj = j;
                bswap = c.swapped;
            }
        }
    }
    if (!out.found) return out;

    Vec2 wx = pts[bi], wy = pts[bj];
    for (int round = 0; round < cfg.refine_rounds; ++round) {
        den *= 8;
        bi *= 8;
        bj *= 8;
        const AxisNodes ax = window_nodes(space, bi, den, res);
        const AxisNodes ay = window_nodes(space, bj, den, res);
        const double before = best;
        for (std::size_t a = 0; a < ax.idx.size(); ++a) {
            for (std::size_t b = 0; b < ay.idx.size(); ++b) {
                const CellOut c = cell({ax.pts[a].c, 2}, {ay.pts[b].c, 2});
                ++out.evaluations;
                if (!c.feasible) continue;
                if (better(c.value, best, maximize)) {
                    best = c.value;
                    bi = ax.idx[a];
                    bj = ay.idx[b];
                    bswap = c.swapped;
                    wx = ax.pts[a];
                    wy = ay.pts[b];
                }
            }
        }
        out.last_improvement = std::fabs(best - before);
    }

    out.value = best;
    out.converged = out.last_improvement <= cfg.tol;
    const Vec2& fx = bswap ? wy : wx;
    const Vec2& fy = bswap ? wx : wy;
    out.wx = {fx.c[0], fx.c[1]};
    out.wy = {fy.c[0], fy.c[1]};
    return out;
}

Vector random_unit(const NormedSpace& space, detail::Rng& rng) {
    Vector d(static_cast<std::size_t>(space.dim()));
    for (;;) {
        double sq = 0.0;
        for (auto& c : d) {
            c = rng.normal();
            sq += c * c;
        }
        if (sq < 1e-18) continue;
        const double n = space.norm_unchecked(d);
        for (auto& c : d) c /= n;
        return d;
    }
}

void renormalize(const NormedSpace& space, Vector& v) {
    const double n = space.norm_unchecked(v);
    for (auto& c : v) c /= n;
}

Vector unit_of(const NormedSpace& space, Vector v) {
    const double n = space.norm_unchecked(v);
    for (auto& c : v) c /= n;
    return v;
}

// Deterministic starts covering the sign-pattern basins where pairwise
// objectives peak: axis antipodes and two-coordinate diagonal pairs.
std::vector<std::pair<Vector, Vector>> structured_starts(const NormedSpace& space) {
    const auto n = static_cast<std::size_t>(space.dim());
    std::vector<std::pair<Vector, Vector>> starts;
    for (std::size_t i = 0; i < n; ++i) {
        Vector a(n, 0.0);
        a[i] = 1.0;
        Vector x = unit_of(space, a);
        Vector y = x;
        for (auto& c : y) c = -c;
        starts.emplace_back(std::move(x), std::move(y));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector a(n, 0.0), b(n, 0.0);
            a[i] = 1.0;
            a[j] = 1.0;
            b[i] = 1.0;
            b[j] = -1.0;
            starts.emplace_back(unit_of(space, std::move(a)), unit_of(space, std::move(b)));
        }
    return starts;
}

// Seeded multi-start coordinate pattern search on normalized directions,
// dim >= 3. Moves perturb one raw coordinate, renormalize, and keep strict
// improvements; the step halves after a sweep with no accepted move.
template <class Cell>
SearchOutcome multistart_search(const NormedSpace& space, Cell cell, const EstimatorConfig& cfg,
                                bool maximize, bool antipodal_starts,
                                const Vector* warm_x, const Vector* warm_y) {
    const auto n = static_cast<std::size_t>(space.dim());
    detail::Rng rng(cfg.seed);

    std::vector<std::pair<Vector, Vector>> starts = structured_starts(space);
    starts.reserve(starts.size() + static_cast<std::size_t>(cfg.starts) + 1);
    for (int s = 0; s < cfg.starts; ++s) {
        Vector x = random_unit(space, rng);
        Vector y;
        if (antipodal_starts) {
            y = x;
            for (auto& c : y) c = -c;
        } else {
            y = random_unit(space, rng);
        }
        starts.emplace_back(std::move(x), std::move(y));
    }
    if (warm_x && warm_y) starts.insert(starts.begin(), {*warm_x, *warm_y});

    constexpr double kMinStep = 1e-7;
    SearchOutcome out;
    double best = maximize ? -kInf : kInf;

    Vector cand;
    for (auto& [sx, sy] : starts) {
        CellOut cur = cell(sx, sy);
        ++out.evaluations;
        if (!cur.feasible) continue;

        double step = 0.5;
        double sweep_gain = 0.0;
        for (int iter = 0; iter < cfg.local_iters && step >= kMinStep; ++iter) {
            const double before = cur.value;
            for (std::size_t axis = 0; axis < 2 * n; ++axis) {
                Vector& tgt = axis < n ? sx : sy;
                const std::size_t c = axis % n;
                for (double sign : {1.0, -1.0}) {
                    cand = tgt;
                    cand[c] += sign * step;
                    const double nn = space.norm_unchecked(cand);
                    if (nn == 0.0) continue;
                    for (auto& v : cand) v /= nn;
                    const CellOut trial =
                        axis < n ? cell(cand, sy) : cell(sx, cand);
                    ++out.evaluations;
                    if (trial.feasible && better(trial.value, cur.value, maximize)) {
                        tgt = cand;
                        cur = trial;
                        break;
                    }
                }
            }
            sweep_gain = std::fabs(cur.value - before);
            if (cur.value == before) step *= 0.5;
        }

        if (!out.found || better(cur.value, best, maximize)) {
            out.found = true;
            best = cur.value;
            out.wx = cur.swapped ? sy : sx;
            out.wy = cur.swapped ? sx : sy;
            out.last_improvement = sweep_gain;
        }
    }
    out.value = best;
    out.converged = out.found && out.last_improvement <= cfg.tol;
    return out;
}

EstimateResult endpoint_result(const NormedSpace& space, const EstimatorConfig& cfg) {
    // The objective is identically ||y||^2 (or ||x||^2) there; no search.
    Vector e(static_cast<std::size_t>(space.dim()), 0.0);
    e[0] = 1.0;
    const Vector u = unit_vector(space, e);
    EstimateResult r;
    r.value = 1.0;
    r.witness_x = u;
    r.witness_y = u;
    r.evaluations = 0;
    r.config = cfg;
    r.converged = true;
    r.last_improvement = 0.0;
    return r;
}

EstimateResult from_outcome(const SearchOutcome& s, const EstimatorConfig& cfg) {
    EstimateResult r;
    r.value = s.value;
    r.witness_x = s.wx;
    r.witness_y = s.wy;
    r.evaluations = s.evaluations;
    r.config = cfg;
    r.converged = s.converged;
    r.last_improvement = s.last_improvement;
    return r;
}

EstimateResult estimate_lprime_y_impl(const NormedSpace& space, double lam,
                                      const EstimatorConfig& cfg, const Vector* warm_x,
                                      const Vector* warm_y) {
    validate(cfg);
    require(lam >= 0.0 && lam <= 1.0, "lambda must lie in [0, 1]");
    if (lam == 0.0 || lam == 1.0) return endpoint_result(space, cfg);

    SearchOutcome s;
    if (space.dim() == 2) {
        LyCell cell(space, lam);
        s = grid_search_pairs(space, std::move(cell), cfg, /*maximize=*/true,
                              /*symmetric=*/true);
        if (warm_x && warm_y) {
            LyCell probe(space, lam);
            const CellOut c = probe(*warm_x, *warm_y);
            ++s.evaluations;
            if (c.feasible && c.value > s.value) {
                s.value = c.value;
                s.wx = c.swapped ? *warm_y : *warm_x;
                s.wy = c.swapped ? *warm_x : *warm_y;
            }
        }
    } else {
        s = multistart_search(space, LyCell(space, lam), cfg, /*maximize=*/true,
                              /*antipodal_starts=*/false, warm_x, warm_y);
    }
    return from_outcome(s, cfg);
}

}  // namespace

void validate(const EstimatorConfig& cfg) {
    require(cfg.grid_resolution >= 8, "grid_resolution must be >= 8");
    require(cfg.refine_rounds >= 0, "refine_rounds must be >= 0");
    require(cfg.starts >= 1, "starts must be >= 1");
    require(cfg.local_iters >= 1, "local_iters must be >= 1");
    require(cfg.tol > 0.0, "tol must be positive");
}

double ly_objective(const NormedSpace& space, const Vector& x, const Vector& y, double lam) {
    require(lam >= 0.0 && lam <= 1.0, "ly_objective: lambda must lie in [0, 1]");
    const double nx = norm_eval(space, x);
    const double ny = norm_eval(space, y);
    require(std::fabs(nx - 1.0) <= 1e-9 && std::fabs(ny - 1.0) <= 1e-9,
            "ly_objective: arguments must lie on the unit sphere within 1e-9");
    std::vector<double> comb(x.size()), diff(x.size());
    return ly_core(space, x, y, lam, comb, diff);
}

EstimateResult estimate_lprime_y(const NormedSpace& space, double lam,
                                 const EstimatorConfig& cfg) {
    return estimate_lprime_y_impl(space, lam, cfg, nullptr, nullptr);
}

SweepResult sweep_lprime_y(const NormedSpace& space, std::span<const double> lambdas,
                           const EstimatorConfig& cfg) {
    require(!lambdas.empty(), "sweep_lprime_y: empty lambda grid");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        require(lambdas[i] >= 0.0 && lambdas[i] <= 1.0, "sweep lambda outside [0, 1]");
        require(i == 0 || lambdas[i] > lambdas[i - 1],
                "sweep lambda grid must be strictly increasing");
    }
    SweepResult sweep;
    sweep.lambdas.assign(lambdas.begin(), lambdas.end());
    sweep.values.reserve(lambdas.size());
    const Vector* wx = nullptr;
    const Vector* wy = nullptr;
    for (const double lam : lambdas) {
        sweep.values.push_back(estimate_lprime_y_impl(space, lam, cfg, wx, wy));
        wx = &sweep.values.back().witness_x;
        wy = &sweep.values.back().witness_y;
    }
    return sweep;
}

EstimateResult estimate_cnj(const NormedSpace& space, const EstimatorConfig& cfg) {
    validate(cfg);
    constexpr int kTNodes = 64;  // fixed scale grid for y = t u, t in [0, 1]

    std::vector<double> sum(static_cast<std::size_t>(space.dim()));
    std::vector<double> diff(sum.size());

    if (space.dim() == 2) {
        const int res = cfg.grid_resolution;
        std::int64_t den = res;
        std::int64_t tden = kTNodes - 1;

        std::vector<Vec2> pts;
        std::vector<double> nx2(res);
        pts.reserve(res);
        for (int i = 0; i < res; ++i) {
            pts.push_back(unit_at(space, theta_node(i, den)));
            const double nx = space.norm_unchecked({pts[i].c, 2});
            nx2[i] = nx * nx;
        }

        SearchOutcome out;
        double best = -kInf;
        std::int64_t bi = 0, bj = 0, bt = 0;
        Vec2 wx{}, wu{};
        double wt = 0.0;

        auto ratio = [&](const Vec2& x, double x2, const Vec2& u, double t) {
            const double y[2] = {t * u.c[0], t * u.c[1]};
            sum[0] = x.c[0] + y[0];
            sum[1] = x.c[1] + y[1];
            diff[0] = x.c[0] - y[0];
            diff[1] = x.c[1] - y[1];
            const double s = space.norm_unchecked(sum);
            const double d = space.norm_unchecked(diff);
            const double ny = space.norm_unchecked({y, 2});
            return (s * s + d * d) / (2.0 * (x2 + ny * ny));
        };

        for (int i = 0; i < res; ++i) {
            for (int j = 0; j < res; ++j) {
                for (int k = 0; k < kTNodes; ++k) {
                    const double t = static_cast<double>(k) / static_cast<double>(tden);
                    const double v = ratio(pts[i], nx2[i], pts[j], t);
                    ++out.evaluations;
                    if (!out.found || v > best) {
                        out.found = true;
                        best = v;
                        bi = i;
                        bj = j;
                        bt = k;
                    }
                }
            }
        }
        wx = pts[bi];
        wu = pts[bj];
        wt = static_cast<double>(bt) / static_cast<double>(tden);

        for (int round = 0; round < cfg.refine_rounds; ++round) {
            den *= 8;
            tden *= 8;
            bi *= 8;
            bj *= 8;
            bt *= 8;
            const AxisNodes ax = window_nodes(space, bi, den, res);
            const AxisNodes au = window_nodes(space, bj, den, res);
            std::vector<double> ax2(ax.pts.size());
            for (std::size_t a = 0; a < ax.pts.size(); ++a) {
                const double nx = space.norm_unchecked({ax.pts[a].c, 2});
                ax2[a] = nx * nx;
            }
            const double before = best;
            for (std::size_t a = 0; a < ax.idx.size(); ++a) {
                for (std::size_t b = 0; b < au.idx.size(); ++b) {
                    for (int k = -kTNodes / 2; k <= kTNodes / 2; ++k) {
                        const std::int64_t ti = bt + k;
                        if (ti < 0 || ti > tden) continue;
                        const double t = static_cast<double>(ti) / static_cast<double>(tden);
                        const double v = ratio(ax.pts[a], ax2[a], au.pts[b], t);
                        ++out.evaluations;
                        if (v > best) {
                            best = v;
                            bi = ax.idx[a];
                            bj = au.idx[b];
                            bt = ti;
                            wx = ax.pts[a];
                            wu = au.pts[b];
                            wt = t;
                        }
                    }
                }
            }
            out.last_improvement = std::fabs(best - before);
        }

        out.value = best;
        out.converged = out.last_improvement <= cfg.tol;
        out.wx = {wx.c[0], wx.c[1]};
        out.wy = {wt * wu.c[0], wt * wu.c[1]};
        return from_outcome(out, cfg);
    }

    // dim >= 3: multi-start pattern search over (x direction, u direction, t)
    detail::Rng rng(cfg.seed);
    const auto n = static_cast<std::size_t>(space.dim());
    SearchOutcome out;
    double best = -kInf;

    auto ratio_xyt = [&](const Vector& x, const Vector& u, double t) {
        Vector y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = t * u[i];
        return nj_ratio_core(space, x, y, sum, diff);
    };

    struct CnjStart {
        Vector x, u;
        double t;
    };
    std::vector<CnjStart> starts;
    for (auto& [sx, sy] : structured_starts(space))
        starts.push_back({std::move(sx), std::move(sy), 1.0});
    for (int s = 0; s < cfg.starts; ++s) {
        Vector x = random_unit(space, rng);
        Vector u = random_unit(space, rng);
        double t = std::floor(rng.uniform01() * kTNodes) / (kTNodes - 1);
        starts.push_back({std::move(x), std::move(u), std::min(t, 1.0)});
    }

    Vector cand;
    for (auto& [x, u, t] : starts) {
        double cur = ratio_xyt(x, u, t);
        ++out.evaluations;

        double step = 0.5;
        double sweep_gain = 0.0;
        constexpr double kMinStep = 1e-7;
        for (int iter = 0; iter < cfg.local_iters && step >= kMinStep; ++iter) {
            const double before = cur;
            for (std::size_t axis = 0; axis < 2 * n + 1; ++axis) {
                for (double sign : {1.0, -1.0}) {
                    if (axis == 2 * n) {
                        const double tt = std::clamp(t + sign * step, 0.0, 1.0);
                        const double v = ratio_xyt(x, u, tt);
                        ++out.evaluations;
                        if (v > cur) {
                            t = tt;
                            cur = v;
                            break;
                        }
                    } else {
                        Vector& tgt = axis < n ? x : u;
                        cand = tgt;
                        cand[axis % n] += sign * step;
                        const double nn = space.norm_unchecked(cand);
                        if (nn == 0.0) continue;
                        for (auto& v : cand) v /= nn;
                        const double v =
                            axis < n ? ratio_xyt(cand, u, t) : ratio_xyt(x, cand, t);
                        ++out.evaluations;
                        if (v > cur) {
                            tgt = cand;
                            cur = v;
                            break;
                        }
                    }
                }
            }
            sweep_gain = std::fabs(cur - before);
            if (cur == before) step *= 0.5;
        }

        if (!out.found || cur > best) {
            out.found = true;
            best = cur;
            out.wx = x;
            out.wy.resize(n);
            for (std::size_t i = 0; i < n; ++i) out.wy[i] = t * u[i];
            out.last_improvement = sweep_gain;
        }
    }
    out.value = best;
    out.converged = out.last_improvement <= cfg.tol;
    return from_outcome(out, cfg);
}

std::pair<EstimateResult, EstimateResult> estimate_cnj_prime_and_E(
    const NormedSpace& space, const EstimatorConfig& cfg) {
    validate(cfg);
    SearchOutcome s;
    if (space.dim() == 2) {
        s = grid_search_pairs(space, CnjPrimeCell(space), cfg, /*maximize=*/true,
                              /*symmetric=*/true);
    } else {
        s = multistart_search(space, CnjPrimeCell(space), cfg, /*maximize=*/true,
                              /*antipodal_starts=*/false, nullptr, nullptr);
    }
    EstimateResult cnjp = from_outcome(s, cfg);
    EstimateResult e = cnjp;
    e.value = 4.0 * cnjp.value;
    e.last_improvement = 4.0 * cnjp.last_improvement;
    return {std::move(cnjp), std::move(e)};
}

EstimateResult estimate_delta(const NormedSpace& space, double eps, const EstimatorConfig& cfg) {
    validate(cfg);
    require(eps >= 0.0 && eps <= 2.0, "estimate_delta: eps must lie in [0, 2]");
    SearchOutcome s;
    if (space.dim() == 2) {
        s = grid_search_pairs(space, DeltaCell(space, eps), cfg, /*maximize=*/false,
                              /*symmetric=*/true);
    } else {
        s = multistart_search(space, DeltaCell(space, eps), cfg, /*maximize=*/false,
                              /*antipodal_starts=*/true, nullptr, nullptr);
    }
    if (!s.found)
        throw infeasible_error("estimate_delta: no sphere pair with ||x-y|| >= eps at this "
                               "grid resolution");
    return from_outcome(s, cfg);
}

double ly_delta_lower_bound(double lam, double eps, double delta) {
    require(lam >= 0.0 && lam <= 1.0, "ly_delta_lower_bound: lambda outside [0, 1]");
    require(eps >= 0.0 && eps <= 2.0, "ly_delta_lower_bound: eps outside [0, 2]");
    require(delta >= 0.0 && delta <= 1.0, "ly_delta_lower_bound: delta outside [0, 1]");
    const double q = 2.0 * (1.0 - delta) - std::fabs(2.0 * lam - 1.0) * eps;
    return 0.25 * q * q + lam * (1.0 - lam) * eps * eps;
}

double ly_delta_upper_bound_at(double lam, double eps, double delta) {
    require(lam >= 0.0 && lam <= 1.0, "ly_delta_upper_bound_at: lambda outside [0, 1]");
    require(eps >= 0.0 && eps <= 2.0, "ly_delta_upper_bound_at: eps outside [0, 2]");
    require(delta >= 0.0 && delta <= 1.0, "ly_delta_upper_bound_at: delta outside [0, 1]");
    const double b = 2.0 * lam + std::fabs(1.0 - 2.0 * lam) - 2.0 * lam * delta;
    return b * b + lam * (1.0 - lam) * eps * eps;
}

double ly_delta_upper_bound(double lam, const std::function<double(double)>& delta_profile) {
    require(lam >= 0.0 && lam <= 1.0, "ly_delta_upper_bound: lambda outside [0, 1]");
    require(static_cast<bool>(delta_profile), "ly_delta_upper_bound: missing profile");
    constexpr int kSteps = 512;  // eps grid step 1/256 over [0, 2]
    double sup = -kInf;
    double prev = -kInf;
    for (int k = 0; k <= kSteps; ++k) {
        const double eps = 2.0 * static_cast<double>(k) / kSteps;
        double d = delta_profile(eps);
        require(std::isfinite(d) && d >= -1e-12 && d <= 1.0 + 1e-12,
                "ly_delta_upper_bound: profile value outside [0, 1]");
        d = std::clamp(d, 0.0, 1.0);
        require(d >= prev - 1e-12, "ly_delta_upper_bound: profile must be non-decreasing");
        prev = d;
        sup = std::max(sup, ly_delta_upper_bound_at(lam, eps, d));
    }
    return sup;
}

}  // namespace geomlab
