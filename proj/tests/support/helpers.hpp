#pragma once

#include "mcda/mcda.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testsupport {

struct Rng {
    std::mt19937 engine;

    explicit Rng(std::uint32_t seed) : engine(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }

    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine);
    }
};

inline mcda::TriangularFuzzyNumber random_tfn(Rng& rng, double lo = 0.0, double hi = 1.0,
                                              double min_leg = 0.0) {
    const double b = rng.uniform(lo + min_leg, hi - min_leg);
    const double a = b - rng.uniform(min_leg, std::max(min_leg, b - lo));
    const double c = b + rng.uniform(min_leg, std::max(min_leg, hi - b));
    return {a, b, c};
}

/// Scale with strictly centroid-decreasing grades: modes descend on an even
/// lattice with jitter, legs kept short enough to preserve the order.
inline mcda::LinguisticScale random_scale(Rng& rng, std::size_t n) {
    mcda::LinguisticScale scale;
    const double step = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double b = (static_cast<double>(n - j) - 0.5) * step + rng.uniform(-0.1, 0.1) * step;
        const double a = b - rng.uniform(0.0, 0.2) * step;
        const double c = b + rng.uniform(0.0, 0.2) * step;
        scale.labels.push_back("g" + std::to_string(j + 1));
        scale.values.push_back({a, b, c});
    }
    return scale;
}

inline mcda::UncertainSatisfaction random_satisfaction(Rng& rng, std::size_t n) {
    switch (rng.index(4)) {
        case 0: {
            std::vector<double> mass(n);
            double sum = 0.0;
            for (auto& m : mass) {
                m = rng.uniform(0.0, 1.0);
                sum += m;
            }
            for (auto& m : mass) m /= sum;
            return mcda::ProbabilitySatisfaction{mass};
        }
        case 1: {
            std::vector<double> degrees(n);
            for (auto& d : degrees) d = rng.uniform(0.0, 1.0);
            degrees[rng.index(n)] = 1.0;
            return mcda::PossibilitySatisfaction{degrees};
        }
        case 2: {
            const std::size_t lo = 1 + rng.index(n);
            const std::size_t hi = lo + rng.index(n - lo + 1);
            return mcda::IntervalSatisfaction{lo, hi};
        }
        default:
            return mcda::CertainSatisfaction{1 + rng.index(n)};
    }
}

/// Sorted uniforms capped at one: a valid cumulative measure by construction.
inline mcda::CumulativeMeasure random_cumulative(Rng& rng, std::size_t n) {
    mcda::CumulativeMeasure mu;
    mu.values.resize(n);
    for (std::size_t j = 0; j + 1 < n; ++j) mu.values[j] = rng.uniform(0.0, 1.0);
    std::sort(mu.values.begin(), mu.values.end() - 1);
    mu.values.back() = 1.0;
    return mu;
}

inline mcda::WeightVector random_weights(Rng& rng, std::size_t n) {
    mcda::WeightVector w;
    w.weights.resize(n);
    double sum = 0.0;
    for (auto& v : w.weights) {
        v = rng.uniform(0.0, 1.0);
        sum += v;
    }
    for (auto& v : w.weights) v /= sum;
    return w;
}

/// Direct sup-min evaluation of the lattice operations over the grid
/// product: an O(n^2) oracle independent of the crossing-point construction.
inline mcda::SampledMembership brute_force_lattice(const mcda::TriangularFuzzyNumber& A,
                                                   const mcda::TriangularFuzzyNumber& B,
                                                   std::size_t resolution, bool want_min) {
    mcda::SampledMembership out;
    out.grid = mcda::support_grid(A, B, resolution);
    out.degrees.assign(out.grid.size(), 0.0);
    std::vector<double> da(out.grid.size());
    std::vector<double> db(out.grid.size());
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
        da[i] = mcda::membership(A, out.grid[i]);
        db[i] = mcda::membership(B, out.grid[i]);
    }
    for (std::size_t i = 0; i < out.grid.size(); ++i) {
        for (std::size_t j = 0; j < out.grid.size(); ++j) {
            const std::size_t k = want_min ? std::min(i, j) : std::max(i, j);
            const double v = std::min(da[i], db[j]);
            if (v > out.degrees[k]) out.degrees[k] = v;
        }
    }
    return out;
}

/// Steepest membership slope over both operands' non-degenerate legs; the
/// lattice error bound is two grid steps of this.
inline double max_leg_slope(const mcda::TriangularFuzzyNumber& A, const mcda::TriangularFuzzyNumber& B) {
    double s = 0.0;
    for (const auto& fn : {A, B}) {
        if (fn.b > fn.a) s = std::max(s, 1.0 / (fn.b - fn.a));
        if (fn.c > fn.b) s = std::max(s, 1.0 / (fn.c - fn.b));
    }
    return s;
}

inline double max_pointwise_diff(const mcda::SampledMembership& x, const mcda::SampledMembership& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.degrees.size(); ++i)
        worst = std::max(worst, std::abs(x.degrees[i] - y.degrees[i]));
    return worst;
}

/// Region centroid by column sums: x from first moments of column areas,
/// y from half the squared column heights. Independent of the inverse-shape
/// integrals the library uses.
inline mcda::Centroid scanline_centroid(const mcda::GeneralizedFuzzyNumber& fn, std::size_t columns) {
    const double h = (fn.d - fn.a) / static_cast<double>(columns);
    double area = 0.0;
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < columns; ++i) {
        const double x = fn.a + (static_cast<double>(i) + 0.5) * h;
        const double f = mcda::membership(fn, x);
        area += f * h;
        mx += x * f * h;
        my += 0.5 * f * f * h;
    }
    return {mx / area, my / area};
}

inline const mcda::LinguisticScale& worked_example_scale() {
    static const mcda::LinguisticScale scale{
        {"perfect", "very good", "good", "poor", "none"},
        {{0.75, 1.0, 1.0}, {0.5, 0.75, 1.0}, {0.25, 0.5, 0.75}, {0.0, 0.25, 0.5}, {0.0, 0.0, 0.25}},
    };
    return scale;
}

inline const std::vector<mcda::CumulativeMeasure>& worked_example_measures() {
    static const std::vector<mcda::CumulativeMeasure> rows{
        {{0.0, 0.2, 0.7, 0.9, 1.0}},
        {{0.4, 0.4, 0.6, 0.8, 1.0}},
        {{0.0, 0.0, 0.0, 1.0, 1.0}},
    };
    return rows;
}

inline mcda::DecisionProblem worked_example_problem() {
    mcda::DecisionProblem problem;
    problem.scale = worked_example_scale();
    problem.criteria = {"C1", "C2", "C3"};
    problem.quantifier = mcda::PowerQuantifier{2.0};
    problem.alternatives.push_back(
        {"x",
         {mcda::ProbabilitySatisfaction{{0.0, 0.2, 0.5, 0.2, 0.1}},
          mcda::PossibilitySatisfaction{{0.4, 0.2, 0.6, 0.8, 1.0}},
          mcda::CertainSatisfaction{4}}});
    return problem;
}

}  // namespace testsupport
