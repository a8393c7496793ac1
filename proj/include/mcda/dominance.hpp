#pragma once

#include "mcda/fuzzy.hpp"
#include "mcda/measures.hpp"
#include "mcda/owa.hpp"
#include "mcda/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcda {

/// Two cumulative measures agreeing within this slack count as equal.
inline constexpr double dominance_equality_tolerance = 1e-12;

enum class DominanceRelation { first_dominates, second_dominates, equal, incomparable };

/// Measure-based dominance: the first measure dominates when it is at least
/// the second on every prefix and strictly above on some prefix.
inline DominanceRelation dominates(const CumulativeMeasure& mu_a, const CumulativeMeasure& mu_b) {
    if (mu_a.size() != mu_b.size())
        throw std::invalid_argument("dominates: measure lengths " + std::to_string(mu_a.size()) + " and " +
                                    std::to_string(mu_b.size()) + " differ");
    bool all_close = true;
    bool a_ge = true;
    bool b_ge = true;
    for (std::size_t j = 0; j < mu_a.size(); ++j) {
        const double da = mu_a.values[j];
        const double db = mu_b.values[j];
        if (std::abs(da - db) > dominance_equality_tolerance) all_close = false;
        if (da < db) a_ge = false;
        if (db < da) b_ge = false;
    }
    if (all_close) return DominanceRelation::equal;
    if (a_ge) return DominanceRelation::first_dominates;
    if (b_ge) return DominanceRelation::second_dominates;
    return DominanceRelation::incomparable;
}

/// Per-grade increments V_j = mu(H_j) - mu(H_{j-1}), with mu(H_0) = 0.
/// Nonnegative and summing to one for a valid cumulative measure.
inline std::vector<double> delta_weights(const CumulativeMeasure& mu) {
    std::vector<double> v(mu.size());
    double prev = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        v[j] = mu.values[j] - prev;
        prev = mu.values[j];
    }
    return v;
}

/// Choquet-style summary of a cumulative measure on the scale: the fuzzy
/// number sum of V_j-scaled grades. A unit step at grade k returns y_k
/// exactly.
inline TriangularFuzzyNumber surrogate(const CumulativeMeasure& mu, const LinguisticScale& scale) {
    if (mu.size() != scale.size())
        throw std::invalid_argument("surrogate: measure length " + std::to_string(mu.size()) +
                                    " does not match scale size " + std::to_string(scale.size()));
    const std::vector<double> v = delta_weights(mu);
    TriangularFuzzyNumber acc{0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < v.size(); ++j) acc = acc + v[j] * scale.values[j];
    return acc;
}

enum class OrderingMethod { dominance, surrogate };

/// How a list of criterion measures was put in rank order: the permutation
/// (largest first, indices into the input list), which comparison method
/// decided it, and the surrogates when they were needed.
struct CriterionOrdering {
    std::vector<std::size_t> rho;
    OrderingMethod method_used = OrderingMethod::dominance;
    std::optional<std::vector<TriangularFuzzyNumber>> surrogates;
};

namespace detail {

/// Largest-first order over the surrogates using the selected fuzzy ranking.
/// The centroid path is a stable sort; the lattice path counts pairwise wins
/// since its relation need not be transitive on overlapping shapes. Ties stay
/// in input order either way.
inline std::vector<std::size_t> rank_fuzzy_descending(const std::vector<TriangularFuzzyNumber>& items,
                                                      RankingMethod ranking, std::size_t resolution) {
    std::vector<std::size_t> order(items.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    if (ranking == RankingMethod::centroid) {
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t i, std::size_t j) { return ranks_before(items[i], items[j]); });
        return order;
    }
    std::vector<std::size_t> wins(items.size(), 0);
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = 0; j < items.size(); ++j) {
            if (i == j) continue;
            if (rank_lattice_ini(items[i], items[j], resolution) == LatticeRelation::succeeds) ++wins[i];
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return wins[i] > wins[j]; });
    return order;
}

}  // namespace detail

/// Orders criterion measures largest first. When every pair is comparable
/// under dominance (dominates or equal) the dominance order is used directly;
/// one incomparable pair switches the whole list to surrogate ranking so a
/// single method decides the order. Ties keep input order.
inline CriterionOrdering order_criteria(const std::vector<CumulativeMeasure>& measures,
                                        const LinguisticScale& scale, RankingMethod ranking,
                                        std::size_t resolution = default_grid_resolution) {
    if (measures.empty()) throw std::invalid_argument("order_criteria: empty measure list");
    for (const auto& mu : measures) {
        if (mu.size() != scale.size())
            throw std::invalid_argument("order_criteria: measure length " + std::to_string(mu.size()) +
                                        " does not match scale size " + std::to_string(scale.size()));
    }

    const std::size_t n = measures.size();
    bool all_comparable = true;
    for (std::size_t i = 0; i < n && all_comparable; ++i)
        for (std::size_t j = i + 1; j < n && all_comparable; ++j)
            if (dominates(measures[i], measures[j]) == DominanceRelation::incomparable) all_comparable = false;

    CriterionOrdering out;
    if (all_comparable) {
        out.method_used = OrderingMethod::dominance;
        std::vector<std::size_t> remaining(n);
        std::iota(remaining.begin(), remaining.end(), std::size_t{0});
        while (!remaining.empty()) {
            std::size_t pick = remaining.size();
            for (std::size_t c = 0; c < remaining.size() && pick == remaining.size(); ++c) {
                bool undominated = true;
                for (std::size_t o = 0; o < remaining.size() && undominated; ++o) {
                    if (o == c) continue;
                    if (dominates(measures[remaining[c]], measures[remaining[o]]) ==
                        DominanceRelation::second_dominates)
                        undominated = false;
                }
                if (undominated) pick = c;
            }
            out.rho.push_back(remaining[pick]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        return out;
    }

    out.method_used = OrderingMethod::surrogate;
    std::vector<TriangularFuzzyNumber> surrogates;
    surrogates.reserve(n);
    for (const auto& mu : measures) surrogates.push_back(surrogate(mu, scale));
    out.rho = detail::rank_fuzzy_descending(surrogates, ranking, resolution);
    out.surrogates = std::move(surrogates);
    return out;
}

/// Convex combination of already rank-ordered measures, prefix by prefix.
/// Inherits monotonicity and the unit endpoint from its inputs.
inline CumulativeMeasure aggregate_measure(const std::vector<CumulativeMeasure>& measures_in_rank_order,
                                           const WeightVector& weights) {
    if (measures_in_rank_order.empty()) throw std::invalid_argument("aggregate_measure: empty measure list");
    if (measures_in_rank_order.size() != weights.size())
        throw std::invalid_argument("aggregate_measure: " + std::to_string(measures_in_rank_order.size()) +
                                    " measures but " + std::to_string(weights.size()) + " weights");
    const std::size_t len = measures_in_rank_order.front().size();
    for (const auto& mu : measures_in_rank_order) {
        if (mu.size() != len)
            throw std::invalid_argument("aggregate_measure: measure lengths " + std::to_string(len) + " and " +
                                        std::to_string(mu.size()) + " differ");
    }
    if (const auto diags = validate(weights); !diags.empty())
        throw std::invalid_argument("aggregate_measure: " + join(diags));

    CumulativeMeasure out;
    out.values.resize(len);
    for (std::size_t j = 0; j < len; ++j) {
        double acc = 0.0;
        for (std::size_t i = 0; i < measures_in_rank_order.size(); ++i)
            acc += weights.weights[i] * measures_in_rank_order[i].values[j];
        out.values[j] = std::clamp(acc, 0.0, 1.0);
    }
    return out;
}

}  // namespace mcda
