#pragma once

#include "mcda/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mcda {

/// Membership curve sampled on a strictly increasing grid.
struct SampledMembership {
    std::vector<double> grid;
    std::vector<double> degrees;

    friend bool operator==(const SampledMembership&, const SampledMembership&) = default;
};

/// Default lattice grid: 1001 points resolve a unit satisfaction axis in
/// steps of 0.001.
inline constexpr std::size_t default_grid_resolution = 1001;

/// Max pointwise difference below which two sampled curves count as equal.
inline constexpr double sampled_equality_tolerance = 1e-9;

inline std::vector<double> make_grid(double lo, double hi, std::size_t resolution) {
    if (resolution < 2) throw std::invalid_argument("make_grid: resolution must be at least 2");
    if (!(lo < hi)) throw std::invalid_argument("make_grid: span is empty");
    std::vector<double> grid(resolution);
    const double span = hi - lo;
    for (std::size_t i = 0; i < resolution; ++i)
        grid[i] = lo + span * static_cast<double>(i) / static_cast<double>(resolution - 1);
    grid.back() = hi;
    return grid;
}

inline SampledMembership sample(const TriangularFuzzyNumber& fn, const std::vector<double>& grid) {
    SampledMembership out;
    out.grid = grid;
    out.degrees.reserve(grid.size());
    for (double x : grid) out.degrees.push_back(membership(fn, x));
    return out;
}

/// Uniform grid spanning the union of the two supports. A fully degenerate
/// span is widened symmetrically so the shared carrier point stays inside.
inline std::vector<double> support_grid(const TriangularFuzzyNumber& A, const TriangularFuzzyNumber& B,
                                        std::size_t resolution = default_grid_resolution) {
    double lo = std::min(A.a, B.a);
    double hi = std::max(A.c, B.c);
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    return make_grid(lo, hi, resolution);
}

inline bool sampled_equal(const SampledMembership& x, const SampledMembership& y,
                          double tolerance = sampled_equality_tolerance) {
    if (x.degrees.size() != y.degrees.size()) return false;
    for (std::size_t i = 0; i < x.degrees.size(); ++i)
        if (std::abs(x.degrees[i] - y.degrees[i]) > tolerance) return false;
    return true;
}

namespace detail {

enum class LatticeOp { take_min, take_max };

/// Crossing-point construction of the lattice MIN/MAX of two triangular
/// numbers. For MIN the result is the fuzzy union below the crossing point
/// x_m and the fuzzy intersection at and above it; MAX mirrors this. x_m is
/// the grid point between the two modes where the intersection peaks, the
/// smallest qualifying index when the peak is not unique. Ordered disjoint
/// supports short-circuit: MIN is the left operand, MAX the right one.
inline SampledMembership lattice_combine(const TriangularFuzzyNumber& A, const TriangularFuzzyNumber& B,
                                         std::size_t resolution, LatticeOp op) {
    if (!is_valid(A) || !is_valid(B))
        throw std::invalid_argument("lattice: operands must satisfy a <= b <= c");
    const auto grid = support_grid(A, B, resolution);
    const bool want_min = op == LatticeOp::take_min;

    if (A.c <= B.a) return sample(want_min ? A : B, grid);
    if (B.c <= A.a) return sample(want_min ? B : A, grid);

    const SampledMembership sa = sample(A, grid);
    const SampledMembership sb = sample(B, grid);

    const double lo_mode = std::min(A.b, B.b);
    const double hi_mode = std::max(A.b, B.b);
    auto first = static_cast<std::size_t>(std::lower_bound(grid.begin(), grid.end(), lo_mode) -
                                          grid.begin());
    auto one_past = static_cast<std::size_t>(std::upper_bound(grid.begin(), grid.end(), hi_mode) -
                                             grid.begin());
    std::size_t last = one_past == 0 ? 0 : one_past - 1;
    // Both modes inside a single grid cell: fall back to the bracketing pair.
    if (first > last) std::swap(first, last);

    std::size_t idx_m = first;
    double best = -1.0;
    for (std::size_t i = first; i <= last; ++i) {
        const double inter = std::min(sa.degrees[i], sb.degrees[i]);
        if (inter > best) {
            best = inter;
            idx_m = i;
        }
    }

    SampledMembership out;
    out.grid = grid;
    out.degrees.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool use_union = want_min ? i < idx_m : i >= idx_m;
        out.degrees[i] = use_union ? std::max(sa.degrees[i], sb.degrees[i])
                                   : std::min(sa.degrees[i], sb.degrees[i]);
    }
    return out;
}

}  // namespace detail

/// Lattice MIN under z = min(x, y), sampled on the shared support grid.
inline SampledMembership lattice_min(const TriangularFuzzyNumber& A, const TriangularFuzzyNumber& B,
                                     std::size_t resolution = default_grid_resolution) {
    return detail::lattice_combine(A, B, resolution, detail::LatticeOp::take_min);
}

/// Lattice MAX under z = max(x, y); mirror construction of lattice_min.
inline SampledMembership lattice_max(const TriangularFuzzyNumber& A, const TriangularFuzzyNumber& B,
                                     std::size_t resolution = default_grid_resolution) {
    return detail::lattice_combine(A, B, resolution, detail::LatticeOp::take_max);
}

/// Triangular norm used to intersect membership degrees.
enum class TNorm { minimum, product };

inline double tnorm_apply(TNorm t, double x, double y) {
    return t == TNorm::minimum ? std::min(x, y) : x * y;
}

/// Normalized overlap of E inside F on a shared grid: the grid sum of
/// T(mu_E, mu_F) over the grid sum of mu_E. The antecedent E must carry
/// some membership mass.
inline double inclusion_index(const SampledMembership& E, const SampledMembership& F,
                              TNorm tnorm = TNorm::minimum) {
    if (E.grid.size() != F.grid.size())
        throw std::invalid_argument("inclusion_index: grids differ in size");
    for (std::size_t i = 0; i < E.grid.size(); ++i)
        if (std::abs(E.grid[i] - F.grid[i]) > 1e-12)
            throw std::invalid_argument("inclusion_index: operands sampled on different grids");

    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < E.degrees.size(); ++i) {
        num += tnorm_apply(tnorm, E.degrees[i], F.degrees[i]);
        den += E.degrees[i];
    }
    if (den == 0.0) throw std::invalid_argument("inclusion_index: empty-antecedent");
    return num / den;
}

}  // namespace mcda
