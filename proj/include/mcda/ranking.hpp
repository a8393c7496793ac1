#pragma once

#include "mcda/fuzzy.hpp"
#include "mcda/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace mcda {

/// Which fuzzy-number ranking family to use when a total order is needed.
enum class RankingMethod { centroid, lattice_ini };

/// Strict "ranks ahead of" comparison: centroid abscissa descending, ties
/// by mode, then by left support bound. False both ways means a tie.
inline bool ranks_before(const TriangularFuzzyNumber& x, const TriangularFuzzyNumber& y) {
    const double cx = centroid(x).x0;
    const double cy = centroid(y).x0;
    if (cx != cy) return cx > cy;
    if (x.b != y.b) return x.b > y.b;
    return x.a > y.a;
}

/// Descending centroid ranking; returns the permutation of input indices,
/// best first. Ties keep the original order.
inline std::vector<std::size_t> rank_centroid(const std::vector<TriangularFuzzyNumber>& items) {
    if (items.empty()) throw std::invalid_argument("rank_centroid: empty list");
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return ranks_before(items[i], items[j]); });
    return order;
}

/// Outcome of the lattice/inclusion-index comparison: precedes means the
/// first operand orders strictly below the second.
enum class LatticeRelation { precedes, succeeds, equivalent };

/// Ranks A against B through the lattice MIN: when MIN coincides with one
/// operand that operand is the smaller one; otherwise the inclusion of MIN
/// in each operand decides.
inline LatticeRelation rank_lattice_ini(const TriangularFuzzyNumber& A, const TriangularFuzzyNumber& B,
                                        std::size_t resolution = default_grid_resolution,
                                        TNorm tnorm = TNorm::minimum) {
    const SampledMembership mn = lattice_min(A, B, resolution);
    const SampledMembership sa = sample(A, mn.grid);
    const SampledMembership sb = sample(B, mn.grid);
    const bool min_is_a = sampled_equal(mn, sa);
    const bool min_is_b = sampled_equal(mn, sb);
    if (min_is_a && min_is_b) return LatticeRelation::equivalent;
    if (min_is_a) return LatticeRelation::precedes;
    if (min_is_b) return LatticeRelation::succeeds;

    const double in_a = inclusion_index(mn, sa, tnorm);
    const double in_b = inclusion_index(mn, sb, tnorm);
    if (std::abs(in_a - in_b) <= 1e-12) return LatticeRelation::equivalent;
    return in_a > in_b ? LatticeRelation::precedes : LatticeRelation::succeeds;
}

}  // namespace mcda
