#pragma once

#include "mcda/dominance.hpp"
#include "mcda/fuzzy.hpp"
#include "mcda/lattice.hpp"
#include "mcda/measures.hpp"
#include "mcda/owa.hpp"
#include "mcda/ranking.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcda {

/// Invalid input, carrying one diagnostic per offending field.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<std::string> diags)
        : std::invalid_argument(join(diags)), diagnostics_(std::move(diags)) {}

    const std::vector<std::string>& diagnostics() const { return diagnostics_; }

private:
    std::vector<std::string> diagnostics_;
};

/// One candidate: a satisfaction per criterion, in criteria declaration order.
struct Alternative {
    std::string name;
    std::vector<UncertainSatisfaction> satisfactions;
    bool operator==(const Alternative&) const = default;
};

/// A complete decision instance: the vocabulary, the criteria, the weight
/// source, and the candidates to rank. Notes ride along into report warnings.
struct DecisionProblem {
    LinguisticScale scale;
    std::vector<std::string> criteria;
    Quantifier quantifier = PowerQuantifier{1.0};
    std::optional<ImportanceVector> importances;
    std::vector<Alternative> alternatives;
    RankingMethod ranking_method = RankingMethod::centroid;
    std::size_t grid_resolution = default_grid_resolution;
    std::vector<std::string> notes;
    bool operator==(const DecisionProblem&) const = default;
};

/// Intermediate tables kept with every score: cumulative measures and their
/// per-grade increments in criterion declaration order, and the OWA weights
/// in rank order.
struct Trace {
    std::vector<CumulativeMeasure> cumulative;
    std::vector<std::vector<double>> delta;
    WeightVector weights;
};

/// Everything the pipeline derives for one alternative.
struct AlternativeScore {
    CumulativeMeasure aggregate;
    TriangularFuzzyNumber surrogate;
    double centroid = 0.0;
    CriterionOrdering criterion_ordering;
    Trace trace;
};

struct RankedAlternative {
    std::string name;
    AlternativeScore score;
};

/// Ranked alternatives, best first, plus how they were compared.
struct RankingReport {
    std::vector<RankedAlternative> ranking;
    OrderingMethod comparison_method = OrderingMethod::dominance;
    std::vector<std::string> warnings;
};

inline std::vector<std::string> validate(const DecisionProblem& problem) {
    std::vector<std::string> diags = validate(problem.scale);
    const std::size_t n = problem.scale.size();

    if (problem.criteria.empty()) diags.push_back("no criteria declared");
    std::set<std::string> seen;
    for (const auto& name : problem.criteria)
        if (!seen.insert(name).second) diags.push_back("duplicate criterion \"" + name + "\"");

    for (const auto& d : validate(problem.quantifier)) diags.push_back(d);

    if (problem.importances) {
        if (problem.importances->size() != problem.criteria.size())
            diags.push_back("importances count " + std::to_string(problem.importances->size()) +
                            " does not match criteria count " + std::to_string(problem.criteria.size()));
        for (const auto& d : validate(*problem.importances)) diags.push_back(d);
    }

    if (problem.grid_resolution < 2)
        diags.push_back("grid resolution " + std::to_string(problem.grid_resolution) + " too small");

    seen.clear();
    for (const auto& alt : problem.alternatives) {
        if (!seen.insert(alt.name).second) diags.push_back("duplicate alternative \"" + alt.name + "\"");
        if (alt.satisfactions.size() != problem.criteria.size()) {
            diags.push_back("alternative \"" + alt.name + "\" has " + std::to_string(alt.satisfactions.size()) +
                            " satisfactions for " + std::to_string(problem.criteria.size()) + " criteria");
            continue;
        }
        for (std::size_t k = 0; k < alt.satisfactions.size(); ++k) {
            for (const auto& d : validate(alt.satisfactions[k], n))
                diags.push_back("alternative \"" + alt.name + "\", criterion \"" + problem.criteria[k] +
                                "\": " + d);
        }
    }
    return diags;
}

namespace detail {

inline AlternativeScore score_validated(const DecisionProblem& problem, const Alternative& alt) {
    const std::size_t n = problem.scale.size();
    AlternativeScore score;
    score.trace.cumulative.reserve(alt.satisfactions.size());
    for (const auto& sat : alt.satisfactions) score.trace.cumulative.push_back(cumulative(sat, n));
    score.trace.delta.reserve(score.trace.cumulative.size());
    for (const auto& mu : score.trace.cumulative) score.trace.delta.push_back(delta_weights(mu));

    score.criterion_ordering = order_criteria(score.trace.cumulative, problem.scale, problem.ranking_method,
                                              problem.grid_resolution);
    const std::vector<std::size_t>& rho = score.criterion_ordering.rho;

    if (problem.importances) {
        std::vector<double> lambdas_in_rank_order(rho.size());
        for (std::size_t j = 0; j < rho.size(); ++j)
            lambdas_in_rank_order[j] = problem.importances->lambdas[rho[j]];
        score.trace.weights = importance_weights(problem.quantifier, lambdas_in_rank_order);
    } else {
        score.trace.weights = quantifier_weights(problem.quantifier, rho.size());
    }

    std::vector<CumulativeMeasure> in_rank_order;
    in_rank_order.reserve(rho.size());
    for (std::size_t idx : rho) in_rank_order.push_back(score.trace.cumulative[idx]);
    score.aggregate = aggregate_measure(in_rank_order, score.trace.weights);
    score.surrogate = surrogate(score.aggregate, problem.scale);
    score.centroid = centroid(score.surrogate).x0;
    return score;
}

}  // namespace detail

/// Scores one alternative: cumulative measures per criterion, criterion
/// ordering, quantifier (or importance) weights, aggregate measure, and its
/// surrogate summary, all retained in the trace.
inline AlternativeScore score_alternative(const DecisionProblem& problem, const std::string& alternative) {
    if (auto diags = validate(problem); !diags.empty()) throw ValidationError(std::move(diags));
    const auto it = std::find_if(problem.alternatives.begin(), problem.alternatives.end(),
                                 [&](const Alternative& alt) { return alt.name == alternative; });
    if (it == problem.alternatives.end())
        throw ValidationError({"unknown alternative \"" + alternative + "\""});
    return detail::score_validated(problem, *it);
}

/// Ranks every alternative. When each pair of aggregate measures is
/// comparable under dominance the dominance order is reported; one
/// incomparable pair sends the whole field to the surrogate ranking so a
/// single method decides. Ties order by name.
inline RankingReport rank_alternatives(const DecisionProblem& problem) {
    if (auto diags = validate(problem); !diags.empty()) throw ValidationError(std::move(diags));
    if (problem.alternatives.empty()) throw ValidationError({"no alternatives to rank"});

    RankingReport report;
    report.warnings = problem.notes;

    const std::size_t n = problem.alternatives.size();
    std::vector<AlternativeScore> scores;
    scores.reserve(n);
    for (const auto& alt : problem.alternatives) scores.push_back(detail::score_validated(problem, alt));

    bool all_comparable = true;
    for (std::size_t i = 0; i < n && all_comparable; ++i)
        for (std::size_t j = i + 1; j < n && all_comparable; ++j)
            if (dominates(scores[i].aggregate, scores[j].aggregate) == DominanceRelation::incomparable)
                all_comparable = false;

    std::vector<std::size_t> order;
    if (all_comparable) {
        report.comparison_method = OrderingMethod::dominance;
        std::vector<std::size_t> remaining(n);
        std::iota(remaining.begin(), remaining.end(), std::size_t{0});
        while (!remaining.empty()) {
            std::size_t pick = remaining.size();
            for (std::size_t c = 0; c < remaining.size(); ++c) {
                bool undominated = true;
                for (std::size_t o = 0; o < remaining.size() && undominated; ++o) {
                    if (o == c) continue;
                    if (dominates(scores[remaining[c]].aggregate, scores[remaining[o]].aggregate) ==
                        DominanceRelation::second_dominates)
                        undominated = false;
                }
                if (!undominated) continue;
                if (pick == remaining.size() ||
                    problem.alternatives[remaining[c]].name < problem.alternatives[remaining[pick]].name)
                    pick = c;
            }
            order.push_back(remaining[pick]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
        }
    } else {
        report.comparison_method = OrderingMethod::surrogate;
        if (problem.ranking_method == RankingMethod::centroid) {
            order.resize(n);
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
                if (ranks_before(scores[i].surrogate, scores[j].surrogate)) return true;
                if (ranks_before(scores[j].surrogate, scores[i].surrogate)) return false;
                return problem.alternatives[i].name < problem.alternatives[j].name;
            });
        } else {
            std::vector<std::size_t> wins(n, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j && rank_lattice_ini(scores[i].surrogate, scores[j].surrogate,
                                                   problem.grid_resolution) == LatticeRelation::succeeds)
                        ++wins[i];
            order.resize(n);
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
                if (wins[i] != wins[j]) return wins[i] > wins[j];
                return problem.alternatives[i].name < problem.alternatives[j].name;
            });
        }
    }

    report.ranking.reserve(n);
    for (std::size_t idx : order)
        report.ranking.push_back({problem.alternatives[idx].name, std::move(scores[idx])});
    return report;
}

}  // namespace mcda
