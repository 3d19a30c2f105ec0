#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace geomlab {

/// A point of R^n, coordinates in ambient order.
using Vector = std::vector<double>;

/// Precondition violations on user-supplied data (dimension mismatch,
/// out-of-domain parameters, non-finite coordinates, ...).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// lp norm, p >= 1; p = infinity is represented exactly (max norm),
/// never as a large finite exponent.
struct LpNorm {
    double p = 2.0;
    int dim = 2;
};

/// ||x|| = max_i |x_i| + (sum_{i=1..dim} |x_i|^2 / 4^i)^(1/2).
/// Finite truncation of a classical sequence-space norm; dim >= 1.
struct MaxPlusWeightedL2 {
    int dim = 8;
};

/// Minkowski gauge of the absolutely convex hull of +-vertices, dim fixed to 2.
/// The symmetrized hull must have nonempty interior.
struct PolygonGauge {
    std::vector<Vector> vertices;
};

using NormDescriptor = std::variant<LpNorm, MaxPlusWeightedL2, PolygonGauge>;

/// A finite-dimensional normed space: a descriptor plus its evaluator.
/// Immutable after construction; all operations on it are pure functions.
class NormedSpace {
public:
    explicit NormedSpace(NormDescriptor descriptor, std::string label = {});

    int dim() const { return dim_; }
    const NormDescriptor& descriptor() const { return descriptor_; }

    /// Descriptor in the CLI grammar ("lp:2:dim=2", "c0trunc:dim=8", ...);
    /// the label passed at construction wins when present.
    const std::string& label() const { return label_; }

    /// Norm without input validation. Hot path for the estimators; the
    /// caller guarantees x.size() == dim() and finite coordinates.
    double norm_unchecked(std::span<const double> x) const;

private:
    enum class Kind { l1, l2, linf, lp_int, lp_general, max_plus_l2, polygon };

    NormDescriptor descriptor_;
    int dim_ = 0;
    std::string label_;
    Kind kind_ = Kind::l2;
    double p_ = 2.0;
    int p_int_ = 2;
    std::vector<double> weights_;  // 4^-i for the truncated sequence norm
    // Symmetrized hull for PolygonGauge, counter-clockwise, with atan2 angles.
    std::vector<std::array<double, 2>> hull_;
    std::vector<double> hull_angles_;

    double polygon_gauge(double x0, double x1) const;
};

/// ||x|| under the space's norm. Validates dimension and finiteness.
double norm_eval(const NormedSpace& space, const Vector& x);

/// u / ||u||; rejects u = 0.
Vector unit_vector(const NormedSpace& space, const Vector& u);

/// Normalized directions (cos theta_k, sin theta_k), theta_k = 2 pi k / resolution.
/// Requires dim == 2 and resolution >= 4.
std::vector<Vector> sphere_grid(const NormedSpace& space, int resolution);

/// `count` points on the unit sphere from a seeded generator; the sequence is
/// a pure function of (space, count, seed).
std::vector<Vector> sample_sphere(const NormedSpace& space, int count, std::uint64_t seed);

/// The built-in space catalog used by the CLI and the check suites.
std::vector<NormedSpace> catalog_spaces();

struct CheckItem;

/// Seeded randomized audit of the norm axioms: absolute homogeneity within
/// 1e-9 relative, triangle inequality with 1e-12 additive slack, and
/// ||0|| = 0. Returns one report item per axiom; failures carry the witness.
std::vector<CheckItem> validate_norm_axioms(const NormedSpace& space, int trials,
                                            std::uint64_t seed);

}  // namespace geomlab
