#pragma once

#include "mcda/format.hpp"
#include "mcda/fuzzy.hpp"
#include "mcda/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace mcda {

/// Slack allowed when checking that probability masses sum to one and that
/// possibility degrees peak at one. Inputs further off are rejected rather
/// than silently renormalized.
inline constexpr double normalization_tolerance = 1e-9;

/// Ordered satisfaction grades, best first, each realized as a triangular
/// fuzzy number on the satisfaction axis.
struct LinguisticScale {
    std::vector<std::string> labels;
    std::vector<TriangularFuzzyNumber> values;
    bool operator==(const LinguisticScale&) const = default;

    std::size_t size() const { return values.size(); }
};

struct ProbabilitySatisfaction {
    std::vector<double> mass;
    bool operator==(const ProbabilitySatisfaction&) const = default;
};

struct PossibilitySatisfaction {
    std::vector<double> degrees;
    bool operator==(const PossibilitySatisfaction&) const = default;
};

/// Contiguous range of scale indices (1-based, inclusive) one of which holds.
struct IntervalSatisfaction {
    std::size_t lo = 1;
    std::size_t hi = 1;
    bool operator==(const IntervalSatisfaction&) const = default;
};

struct CertainSatisfaction {
    std::size_t index = 1;
    bool operator==(const CertainSatisfaction&) const = default;
};

/// What is known about one criterion's satisfaction grade.
using UncertainSatisfaction =
    std::variant<ProbabilitySatisfaction, PossibilitySatisfaction, IntervalSatisfaction, CertainSatisfaction>;

/// Measure of the prefix sets: values[j-1] = mu({grades 1..j}). Nondecreasing
/// and ending at one for any well-formed satisfaction.
struct CumulativeMeasure {
    std::vector<double> values;
    bool operator==(const CumulativeMeasure&) const = default;

    std::size_t size() const { return values.size(); }
};

inline std::vector<std::string> validate(const LinguisticScale& scale) {
    std::vector<std::string> diags;
    if (scale.labels.size() != scale.values.size())
        diags.push_back("scale has " + std::to_string(scale.labels.size()) + " labels but " +
                        std::to_string(scale.values.size()) + " values");
    if (scale.values.size() < 2) diags.push_back("scale needs at least 2 grades");
    for (std::size_t i = 0; i < scale.values.size(); ++i) {
        if (!is_valid(scale.values[i]))
            diags.push_back("scale grade " + std::to_string(i + 1) + " is not a valid triangular number");
    }
    if (diags.empty()) {
        for (std::size_t i = 0; i + 1 < scale.values.size(); ++i) {
            if (!ranks_before(scale.values[i], scale.values[i + 1]))
                diags.push_back("scale grades " + std::to_string(i + 1) + " and " + std::to_string(i + 2) +
                                " are not strictly decreasing");
        }
    }
    return diags;
}

inline std::vector<std::string> validate(const UncertainSatisfaction& sat, std::size_t n) {
    std::vector<std::string> diags;
    const std::string range = "1.." + std::to_string(n);
    std::visit(detail::overloaded{
                   [&](const ProbabilitySatisfaction& p) {
                       if (p.mass.size() != n) {
                           diags.push_back("probability has " + std::to_string(p.mass.size()) +
                                           " entries, scale has " + std::to_string(n));
                           return;
                       }
                       double sum = 0.0;
                       for (std::size_t j = 0; j < n; ++j) {
                           if (p.mass[j] < 0.0 || p.mass[j] > 1.0)
                               diags.push_back("probability p[" + std::to_string(j + 1) + "] = " +
                                               format_number(p.mass[j]) + " outside [0, 1]");
                           sum += p.mass[j];
                       }
                       if (std::abs(sum - 1.0) > normalization_tolerance)
                           diags.push_back("probability mass " + format_number(sum) + " != 1");
                   },
                   [&](const PossibilitySatisfaction& p) {
                       if (p.degrees.size() != n) {
                           diags.push_back("possibility has " + std::to_string(p.degrees.size()) +
                                           " entries, scale has " + std::to_string(n));
                           return;
                       }
                       double peak = 0.0;
                       for (std::size_t j = 0; j < n; ++j) {
                           if (p.degrees[j] < 0.0 || p.degrees[j] > 1.0)
                               diags.push_back("possibility tau[" + std::to_string(j + 1) + "] = " +
                                               format_number(p.degrees[j]) + " outside [0, 1]");
                           peak = std::max(peak, p.degrees[j]);
                       }
                       if (std::abs(peak - 1.0) > normalization_tolerance)
                           diags.push_back("possibility max " + format_number(peak) + " != 1");
                   },
                   [&](const IntervalSatisfaction& iv) {
                       if (iv.lo < 1 || iv.hi > n)
                           diags.push_back("interval [" + std::to_string(iv.lo) + ", " + std::to_string(iv.hi) +
                                           "] outside " + range);
                       if (iv.lo > iv.hi)
                           diags.push_back("interval lo " + std::to_string(iv.lo) + " > hi " +
                                           std::to_string(iv.hi));
                   },
                   [&](const CertainSatisfaction& c) {
                       if (c.index < 1 || c.index > n)
                           diags.push_back("certain index " + std::to_string(c.index) + " outside " + range);
                   },
               },
               sat);
    return diags;
}

inline std::vector<std::string> validate(const CumulativeMeasure& mu) {
    std::vector<std::string> diags;
    if (mu.values.empty()) {
        diags.push_back("cumulative measure is empty");
        return diags;
    }
    for (std::size_t j = 0; j < mu.values.size(); ++j) {
        if (mu.values[j] < 0.0 || mu.values[j] > 1.0)
            diags.push_back("mu(H" + std::to_string(j + 1) + ") = " + format_number(mu.values[j]) +
                            " outside [0, 1]");
        if (j > 0 && mu.values[j] < mu.values[j - 1])
            diags.push_back("mu(H" + std::to_string(j + 1) + ") = " + format_number(mu.values[j]) +
                            " decreases below " + format_number(mu.values[j - 1]));
    }
    if (std::abs(mu.values.back() - 1.0) > normalization_tolerance)
        diags.push_back("mu(H" + std::to_string(mu.values.size()) + ") = " + format_number(mu.values.back()) +
                        " != 1");
    return diags;
}

/// Measure of an arbitrary subset of scale indices (1-based): probabilities
/// add, possibilities take the max, intervals and certain grades test overlap
/// and membership. The empty subset measures zero.
inline double measure_of_subset(const UncertainSatisfaction& sat, std::span<const std::size_t> subset,
                                std::size_t n) {
    for (std::size_t idx : subset) {
        if (idx < 1 || idx > n)
            throw std::invalid_argument("measure_of_subset: index " + std::to_string(idx) + " outside 1.." +
                                        std::to_string(n));
    }
    if (const auto diags = validate(sat, n); !diags.empty())
        throw std::invalid_argument("measure_of_subset: " + join(diags));
    if (subset.empty()) return 0.0;

    return std::visit(detail::overloaded{
                          [&](const ProbabilitySatisfaction& p) {
                              double sum = 0.0;
                              for (std::size_t idx : subset) sum += p.mass[idx - 1];
                              return std::min(1.0, sum);
                          },
                          [&](const PossibilitySatisfaction& p) {
                              double peak = 0.0;
                              for (std::size_t idx : subset) peak = std::max(peak, p.degrees[idx - 1]);
                              return peak;
                          },
                          [&](const IntervalSatisfaction& iv) {
                              for (std::size_t idx : subset)
                                  if (idx >= iv.lo && idx <= iv.hi) return 1.0;
                              return 0.0;
                          },
                          [&](const CertainSatisfaction& c) {
                              for (std::size_t idx : subset)
                                  if (idx == c.index) return 1.0;
                              return 0.0;
                          },
                      },
                      sat);
}

/// Cumulative measure over the best-first prefixes {1}, {1,2}, ..., {1..n}.
/// The final prefix is the whole scale, so the last value is exactly one.
inline CumulativeMeasure cumulative(const UncertainSatisfaction& sat, std::size_t n) {
    if (const auto diags = validate(sat, n); !diags.empty())
        throw std::invalid_argument("cumulative: " + join(diags));

    CumulativeMeasure mu;
    mu.values.resize(n);
    std::visit(detail::overloaded{
                   [&](const ProbabilitySatisfaction& p) {
                       double sum = 0.0;
                       for (std::size_t j = 0; j < n; ++j) {
                           sum += p.mass[j];
                           mu.values[j] = std::min(1.0, sum);
                       }
                   },
                   [&](const PossibilitySatisfaction& p) {
                       double peak = 0.0;
                       for (std::size_t j = 0; j < n; ++j) {
                           peak = std::max(peak, p.degrees[j]);
                           mu.values[j] = peak;
                       }
                   },
                   [&](const IntervalSatisfaction& iv) {
                       for (std::size_t j = 0; j < n; ++j) mu.values[j] = (j + 1 >= iv.lo) ? 1.0 : 0.0;
                   },
                   [&](const CertainSatisfaction& c) {
                       for (std::size_t j = 0; j < n; ++j) mu.values[j] = (j + 1 >= c.index) ? 1.0 : 0.0;
                   },
               },
               sat);
    mu.values.back() = 1.0;
    return mu;
}

/// Maps numeric satisfaction bounds onto the contiguous scale indices whose
/// modes fall inside [lo, hi].
inline IntervalSatisfaction interval_from_bounds(const LinguisticScale& scale, double lo, double hi) {
    if (!(lo <= hi))
        throw std::invalid_argument("interval_from_bounds: lo " + format_number(lo) + " > hi " +
                                    format_number(hi));
    std::size_t first = 0;
    std::size_t last = 0;
    for (std::size_t j = 1; j <= scale.size(); ++j) {
        const double mode = scale.values[j - 1].b;
        if (mode < lo || mode > hi) continue;
        if (first == 0) first = j;
        last = j;
    }
    if (first == 0)
        throw std::invalid_argument("interval_from_bounds: no scale grade has its mode inside [" +
                                    format_number(lo) + ", " + format_number(hi) + "]");
    return IntervalSatisfaction{first, last};
}

}  // namespace mcda
