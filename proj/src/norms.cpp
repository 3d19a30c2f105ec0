#include "geomlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include "geomlab/report.hpp"
#include "rng.hpp"

namespace geomlab {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw input_error(msg);
}

void require_finite(const Vector& x, const char* what) {
    for (double v : x) {
        if (!std::isfinite(v)) throw input_error(std::string(what) + ": non-finite coordinate");
    }
}

std::string format_p(double p) {
    if (std::isinf(p)) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", p);
    return buf;
}

double cross(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

// Andrew's monotone chain; returns the hull counter-clockwise, collinear
// points dropped.
std::vector<std::array<double, 2>> convex_hull(std::vector<std::array<double, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<std::array<double, 2>> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross({hull[k - 1][0] - hull[k - 2][0], hull[k - 1][1] - hull[k - 2][1]},
                               {pts[i][0] - hull[k - 2][0], pts[i][1] - hull[k - 2][1]}) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i > 0; --i) {
        while (k >= lower &&
               cross({hull[k - 1][0] - hull[k - 2][0], hull[k - 1][1] - hull[k - 2][1]},
                     {pts[i - 1][0] - hull[k - 2][0], pts[i - 1][1] - hull[k - 2][1]}) <= 0.0)
            --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

}  // namespace

NormedSpace::NormedSpace(NormDescriptor descriptor, std::string label)
    : descriptor_(std::move(descriptor)), label_(std::move(label)) {
    if (const auto* lp = std::get_if<LpNorm>(&descriptor_)) {
        require(!std::isnan(lp->p) && lp->p >= 1.0, "lp norm requires p >= 1");
        require(lp->dim >= 2, "lp space requires dim >= 2");
        dim_ = lp->dim;
        p_ = lp->p;
        if (std::isinf(p_)) {
            kind_ = Kind::linf;
        } else if (p_ == 1.0) {
            kind_ = Kind::l1;
        } else if (p_ == 2.0) {
            kind_ = Kind::l2;
        } else if (p_ == std::floor(p_) && p_ <= 16.0) {
            kind_ = Kind::lp_int;
            p_int_ = static_cast<int>(p_);
        } else {
            kind_ = Kind::lp_general;
        }
        if (label_.empty()) label_ = "lp:" + format_p(p_) + ":dim=" + std::to_string(dim_);
    } else if (const auto* mp = std::get_if<MaxPlusWeightedL2>(&descriptor_)) {
        require(mp->dim >= 1, "truncated sequence norm requires dim >= 1");
        dim_ = mp->dim;
        kind_ = Kind::max_plus_l2;
        weights_.resize(dim_);
        double w = 1.0;
        for (int i = 0; i < dim_; ++i) {
            w *= 0.25;
            weights_[i] = w;
        }
        if (label_.empty()) label_ = "c0trunc:dim=" + std::to_string(dim_);
    } else {
        const auto& pg = std::get<PolygonGauge>(descriptor_);
        require(pg.vertices.size() >= 2, "polygon gauge requires at least 2 vertices");
        std::vector<std::array<double, 2>> pts;
        pts.reserve(2 * pg.vertices.size());
        for (const auto& v : pg.vertices) {
            require(v.size() == 2, "polygon vertices must have 2 coordinates");
            require_finite(v, "polygon vertex");
            pts.push_back({v[0], v[1]});
            pts.push_back({-v[0], -v[1]});
        }
        hull_ = convex_hull(std::move(pts));
        require(hull_.size() >= 3, "polygon gauge: symmetrized hull has empty interior");
        dim_ = 2;
        kind_ = Kind::polygon;
        // rotate so the vertex angles ascend, for the wedge lookup
        hull_angles_.resize(hull_.size());
        std::size_t lo = 0;
        for (std::size_t i = 0; i < hull_.size(); ++i) {
            hull_angles_[i] = std::atan2(hull_[i][1], hull_[i][0]);
            if (hull_angles_[i] < hull_angles_[lo]) lo = i;
        }
        std::rotate(hull_.begin(), hull_.begin() + static_cast<std::ptrdiff_t>(lo), hull_.end());
        std::rotate(hull_angles_.begin(), hull_angles_.begin() + static_cast<std::ptrdiff_t>(lo),
                    hull_angles_.end());
        if (label_.empty())
            label_ = "polygon(" + std::to_string(pg.vertices.size()) + " vertices)";
    }
}

double NormedSpace::polygon_gauge(double x0, double x1) const {
    if (x0 == 0.0 && x1 == 0.0) return 0.0;
    const double phi = std::atan2(x1, x0);
    // wedge [angle[i], angle[i+1]) containing phi; wraps at the ends
    const auto it = std::upper_bound(hull_angles_.begin(), hull_angles_.end(), phi);
    const std::size_t j = static_cast<std::size_t>(it - hull_angles_.begin()) % hull_.size();
    const std::size_t i = (j + hull_.size() - 1) % hull_.size();
    const std::array<double, 2> a = hull_[i];
    const std::array<double, 2> e = {hull_[j][0] - a[0], hull_[j][1] - a[1]};
    return cross({x0, x1}, e) / cross(a, e);
}

double NormedSpace::norm_unchecked(std::span<const double> x) const {
    switch (kind_) {
        case Kind::l1: {
            double s = 0.0;
            for (double v : x) s += std::fabs(v);
            return s;
        }
        case Kind::l2: {
            double s = 0.0;
            for (double v : x) s += v * v;
            return std::sqrt(s);
        }
        case Kind::linf: {
            double m = 0.0;
            for (double v : x) m = std::max(m, std::fabs(v));
            return m;
        }
        case Kind::lp_int: {
            double s = 0.0;
            for (double v : x) {
                const double a = std::fabs(v);
                double t = a;
                for (int k = 1; k < p_int_; ++k) t *= a;
                s += t;
            }
            if (p_int_ == 3) return std::cbrt(s);
            if (p_int_ == 4) return std::sqrt(std::sqrt(s));
            return std::pow(s, 1.0 / p_);
        }
        case Kind::lp_general: {
            double s = 0.0;
            for (double v : x) s += std::pow(std::fabs(v), p_);
            return std::pow(s, 1.0 / p_);
        }
        case Kind::max_plus_l2: {
            double m = 0.0, s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                m = std::max(m, std::fabs(x[i]));
                s += x[i] * x[i] * weights_[i];
            }
            return m + std::sqrt(s);
        }
        case Kind::polygon:
            return polygon_gauge(x[0], x[1]);
    }
    return 0.0;  // unreachable
}

double norm_eval(const NormedSpace& space, const Vector& x) {
    if (static_cast<int>(x.size()) != space.dim())
        throw input_error("norm_eval: dimension mismatch");
    require_finite(x, "norm_eval");
    return space.norm_unchecked(x);
}

Vector unit_vector(const NormedSpace& space, const Vector& u) {
    const double n = norm_eval(space, u);
    if (n == 0.0) throw input_error("unit_vector: degenerate zero direction");
    Vector r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] / n;
    return r;
}

std::vector<Vector> sphere_grid(const NormedSpace& space, int resolution) {
    if (space.dim() != 2) throw input_error("sphere_grid: unsupported dimension (needs 2)");
    require(resolution >= 4, "sphere_grid: resolution must be >= 4");
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(resolution));
    for (int k = 0; k < resolution; ++k) {
        const double th = 2.0 * std::numbers::pi * k / resolution;
        out.push_back(unit_vector(space, Vector{std::cos(th), std::sin(th)}));
    }
    return out;
}

std::vector<Vector> sample_sphere(const NormedSpace& space, int count, std::uint64_t seed) {
    require(count >= 1, "sample_sphere: count must be >= 1");
    detail::Rng rng(seed);
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    Vector dir(static_cast<std::size_t>(space.dim()));
    while (static_cast<int>(out.size()) < count) {
        double sq = 0.0;
        for (auto& c : dir) {
            c = rng.normal();
            sq += c * c;
        }
        if (sq < 1e-18) continue;  // resample a numerically void direction
        out.push_back(unit_vector(space, dir));
    }
    return out;
}

std::vector<NormedSpace> catalog_spaces() {
    std::vector<NormedSpace> v;
    v.emplace_back(LpNorm{2.0, 2});
    v.emplace_back(LpNorm{2.0, 3});
    v.emplace_back(LpNorm{1.0, 2});
    v.emplace_back(LpNorm{std::numeric_limits<double>::infinity(), 2});
    v.emplace_back(LpNorm{3.0, 2});
    v.emplace_back(MaxPlusWeightedL2{8});
    return v;
}

std::vector<CheckItem> validate_norm_axioms(const NormedSpace& space, int trials,
                                            std::uint64_t seed) {
    require(trials >= 1, "validate_norm_axioms: trials must be >= 1");
    detail::Rng rng(seed);
    const auto n = static_cast<std::size_t>(space.dim());

    double worst_hom = 0.0, worst_tri = -std::numeric_limits<double>::infinity();
    Vector hom_x, tri_x, tri_y;
    double hom_t = 0.0;

    Vector x(n), y(n), tx(n), xy(n);
    for (int trial = 0; trial < trials; ++trial) {
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = rng.uniform(-2.0, 2.0);
            y[i] = rng.uniform(-2.0, 2.0);
        }
        const double t = rng.uniform(-2.0, 2.0);
        for (std::size_t i = 0; i < n; ++i) {
            tx[i] = t * x[i];
            xy[i] = x[i] + y[i];
        }
        const double nx = space.norm_unchecked(x);
        const double ny = space.norm_unchecked(y);
        const double ntx = space.norm_unchecked(tx);
        const double nxy = space.norm_unchecked(xy);

        const double scaled = std::fabs(t) * nx;
        const double rel = std::fabs(ntx - scaled) / std::max(scaled, 1e-30);
        if (rel > worst_hom && scaled > 0.0) {
            worst_hom = rel;
            hom_x = x;
            hom_t = t;
        }
        const double excess = nxy - (nx + ny);
        if (excess > worst_tri) {
            worst_tri = excess;
            tri_x = x;
            tri_y = y;
        }
    }
    const double zero_norm = space.norm_unchecked(Vector(n, 0.0));

    std::vector<CheckItem> items;
    {
        CheckItem it;
        it.name = "axiom_homogeneity";
        it.lhs = worst_hom;
        it.rhs = 1e-9;
        it.tol = 1e-9;
        it.status = worst_hom <= 1e-9 ? CheckStatus::pass : CheckStatus::fail;
        it.note = "worst relative error of ||t x|| vs |t| ||x||; witness lambda holds t";
        if (it.status == CheckStatus::fail) it.witness = CheckWitness{hom_x, hom_x, hom_t};
        items.push_back(std::move(it));
    }
    {
        CheckItem it;
        it.name = "axiom_triangle";
        it.lhs = worst_tri;
        it.rhs = 1e-12;
        it.tol = 1e-12;
        it.status = worst_tri <= 1e-12 ? CheckStatus::pass : CheckStatus::fail;
        it.note = "worst ||x+y|| - ||x|| - ||y||";
        if (it.status == CheckStatus::fail) it.witness = CheckWitness{tri_x, tri_y, 0.0};
        items.push_back(std::move(it));
    }
    {
        CheckItem it;
        it.name = "axiom_zero_norm";
        it.lhs = zero_norm;
        it.rhs = 0.0;
        it.tol = 0.0;
        it.status = zero_norm == 0.0 ? CheckStatus::pass : CheckStatus::fail;
        it.note = "||0|| must be exactly 0";
        items.push_back(std::move(it));
    }
    return items;
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::vacuous: return "vacuous";
    }
    return "?";
}

}  // namespace geomlab
