#pragma once

#include "mcda/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mcda {

/// OWA weights: each in [0,1], summing to one.
struct WeightVector {
    std::vector<double> weights;
    bool operator==(const WeightVector&) const = default;

    std::size_t size() const { return weights.size(); }
};

inline std::vector<std::string> validate(const WeightVector& w) {
    std::vector<std::string> diags;
    if (w.weights.empty()) {
        diags.push_back("weight vector is empty");
        return diags;
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < w.weights.size(); ++j) {
        if (w.weights[j] < 0.0 || w.weights[j] > 1.0)
            diags.push_back("w[" + std::to_string(j + 1) + "] = " + format_number(w.weights[j]) +
                            " outside [0, 1]");
        sum += w.weights[j];
    }
    if (std::abs(sum - 1.0) > 1e-9) diags.push_back("weights sum to " + format_number(sum) + ", not 1");
    return diags;
}

/// Q(z) = z^alpha on [0,1], alpha > 0.
struct PowerQuantifier {
    double exponent = 1.0;
    bool operator==(const PowerQuantifier&) const = default;
};

/// Q interpolated linearly between (z, Q(z)) knots; must run from (0,0) to
/// (1,1) without decreasing.
struct PiecewiseLinearQuantifier {
    std::vector<std::pair<double, double>> knots;
    bool operator==(const PiecewiseLinearQuantifier&) const = default;
};

/// A regular nondecreasing quantifier, the source of OWA weights.
using Quantifier = std::variant<PowerQuantifier, PiecewiseLinearQuantifier>;

inline std::vector<std::string> validate(const Quantifier& q) {
    std::vector<std::string> diags;
    std::visit(detail::overloaded{
                   [&](const PowerQuantifier& p) {
                       if (!(p.exponent > 0.0))
                           diags.push_back("power quantifier exponent " + format_number(p.exponent) +
                                           " must be positive");
                   },
                   [&](const PiecewiseLinearQuantifier& p) {
                       if (p.knots.size() < 2) {
                           diags.push_back("piecewise quantifier needs at least 2 knots");
                           return;
                       }
                       if (p.knots.front() != std::pair{0.0, 0.0})
                           diags.push_back("piecewise quantifier must start at (0, 0)");
                       if (p.knots.back() != std::pair{1.0, 1.0})
                           diags.push_back("piecewise quantifier must end at (1, 1)");
                       for (std::size_t i = 0; i + 1 < p.knots.size(); ++i) {
                           if (!(p.knots[i].first < p.knots[i + 1].first))
                               diags.push_back("piecewise quantifier knot " + std::to_string(i + 2) +
                                               " does not advance in z");
                           if (p.knots[i].second > p.knots[i + 1].second)
                               diags.push_back("piecewise quantifier decreases at knot " + std::to_string(i + 2));
                       }
                   },
               },
               q);
    return diags;
}

/// Evaluates Q(z) for z in [0,1].
inline double evaluate(const Quantifier& q, double z) {
    if (z < 0.0 || z > 1.0)
        throw std::invalid_argument("evaluate: quantifier argument " + format_number(z) + " outside [0, 1]");
    if (const auto diags = validate(q); !diags.empty()) throw std::invalid_argument("evaluate: " + join(diags));
    return std::visit(detail::overloaded{
                          [&](const PowerQuantifier& p) { return std::pow(z, p.exponent); },
                          [&](const PiecewiseLinearQuantifier& p) {
                              auto it = std::upper_bound(p.knots.begin(), p.knots.end(), z,
                                                         [](double v, const auto& k) { return v < k.first; });
                              if (it == p.knots.begin()) return p.knots.front().second;
                              if (it == p.knots.end()) return p.knots.back().second;
                              const auto& [z1, q1] = *it;
                              const auto& [z0, q0] = *std::prev(it);
                              const double t = (z - z0) / (z1 - z0);
                              return q0 + t * (q1 - q0);
                          },
                      },
                      q);
}

namespace detail {

inline double ipow(std::size_t base, std::size_t exp) {
    double r = 1.0;
    for (std::size_t i = 0; i < exp; ++i) r *= static_cast<double>(base);
    return r;
}

inline bool integral_exponent(double alpha, std::size_t& out) {
    if (alpha < 1.0 || alpha > 16.0) return false;
    const double rounded = std::round(alpha);
    if (rounded != alpha) return false;
    out = static_cast<std::size_t>(rounded);
    return true;
}

}  // namespace detail

/// Weights from a quantifier: w_j = Q(j/q) - Q((j-1)/q). Power quantifiers
/// with whole-number exponents are computed as exact integer ratios so the
/// familiar fractions (1/9, 3/9, 5/9, ...) come out correctly rounded.
inline WeightVector quantifier_weights(const Quantifier& q, std::size_t count) {
    if (count == 0) throw std::invalid_argument("quantifier_weights: argument count must be positive");
    if (const auto diags = validate(q); !diags.empty())
        throw std::invalid_argument("quantifier_weights: " + join(diags));

    WeightVector w;
    w.weights.resize(count);
    std::size_t m = 0;
    if (const auto* p = std::get_if<PowerQuantifier>(&q); p && detail::integral_exponent(p->exponent, m)) {
        const double denom = detail::ipow(count, m);
        for (std::size_t j = 1; j <= count; ++j)
            w.weights[j - 1] = (detail::ipow(j, m) - detail::ipow(j - 1, m)) / denom;
        return w;
    }
    double prev = 0.0;
    for (std::size_t j = 1; j <= count; ++j) {
        const double cur = evaluate(q, static_cast<double>(j) / static_cast<double>(count));
        w.weights[j - 1] = std::max(0.0, cur - prev);
        prev = cur;
    }
    return w;
}

/// Per-argument importances; kept as given, normalized where consumed.
struct ImportanceVector {
    std::vector<double> lambdas;
    bool operator==(const ImportanceVector&) const = default;

    std::size_t size() const { return lambdas.size(); }
};

inline std::vector<std::string> validate(const ImportanceVector& imp) {
    std::vector<std::string> diags;
    double sum = 0.0;
    for (std::size_t i = 0; i < imp.lambdas.size(); ++i) {
        if (imp.lambdas[i] < 0.0)
            diags.push_back("importance lambda[" + std::to_string(i + 1) + "] = " +
                            format_number(imp.lambdas[i]) + " is negative");
        sum += imp.lambdas[i];
    }
    if (imp.lambdas.empty() || sum <= 0.0) diags.push_back("importances must have a positive total");
    return diags;
}

/// Weights from a quantifier and importances already permuted into ranking
/// order: w_j = Q(S_j) - Q(S_{j-1}) with S_j the normalized importance prefix
/// sums. Equal importances reduce to quantifier_weights exactly.
inline WeightVector importance_weights(const Quantifier& q, const std::vector<double>& lambdas_in_rank_order) {
    const ImportanceVector imp{lambdas_in_rank_order};
    if (const auto diags = validate(imp); !diags.empty())
        throw std::invalid_argument("importance_weights: " + join(diags));

    const bool all_equal = std::all_of(lambdas_in_rank_order.begin(), lambdas_in_rank_order.end(),
                                       [&](double v) { return v == lambdas_in_rank_order.front(); });
    if (all_equal) return quantifier_weights(q, lambdas_in_rank_order.size());

    if (const auto diags = validate(q); !diags.empty())
        throw std::invalid_argument("importance_weights: " + join(diags));

    const std::size_t count = lambdas_in_rank_order.size();
    const double total = std::accumulate(lambdas_in_rank_order.begin(), lambdas_in_rank_order.end(), 0.0);
    WeightVector w;
    w.weights.resize(count);
    double running = 0.0;
    double prev_q = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        running += lambdas_in_rank_order[j];
        const double s = (j + 1 == count) ? 1.0 : std::min(1.0, running / total);
        const double cur_q = evaluate(q, s);
        w.weights[j] = std::max(0.0, cur_q - prev_q);
        prev_q = cur_q;
    }
    return w;
}

/// The OWA operator: weights applied to the values sorted largest first.
inline double owa_aggregate(const std::vector<double>& values, const WeightVector& weights) {
    if (values.size() != weights.size())
        throw std::invalid_argument("owa_aggregate: " + std::to_string(values.size()) + " values but " +
                                    std::to_string(weights.size()) + " weights");
    if (const auto diags = validate(weights); !diags.empty())
        throw std::invalid_argument("owa_aggregate: " + join(diags));

    std::vector<double> sorted = values;
    std::stable_sort(sorted.begin(), sorted.end(), std::greater<>{});
    double acc = 0.0;
    for (std::size_t j = 0; j < sorted.size(); ++j) acc += weights.weights[j] * sorted[j];
    return acc;
}

}  // namespace mcda
