#pragma once

#include "mcda/pipeline.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace mcda {

struct ParseOptions {
    bool strict = true;
};

/// Either a problem or the reasons there is none. Warnings carry non-fatal
/// notices (unknown fields under the lenient option).
struct ParseResult {
    std::optional<DecisionProblem> problem;
    std::vector<std::string> diagnostics;
    std::vector<std::string> warnings;

    bool ok() const { return problem.has_value(); }
};

namespace detail {

using spec_json = nlohmann::ordered_json;

inline std::string full_precision(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void check_keys(const spec_json& obj, std::initializer_list<std::string_view> known,
                       const std::string& path, const ParseOptions& options, ParseResult& result) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const bool recognized =
            std::any_of(known.begin(), known.end(), [&](std::string_view k) { return it.key() == k; });
        if (recognized) continue;
        const std::string field = path.empty() ? it.key() : path + "." + it.key();
        auto& sink = options.strict ? result.diagnostics : result.warnings;
        sink.push_back("unknown field \"" + field + "\"");
    }
}

inline std::optional<std::vector<double>> number_array(const spec_json& v, const std::string& path,
                                                       std::vector<std::string>& diags) {
    if (!v.is_array()) {
        diags.push_back(path + " must be an array of numbers");
        return std::nullopt;
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& el : v) {
        if (!el.is_number()) {
            diags.push_back(path + " must be an array of numbers");
            return std::nullopt;
        }
        out.push_back(el.get<double>());
    }
    return out;
}

inline std::optional<std::size_t> positive_integer(const spec_json& v, const std::string& path,
                                                   std::vector<std::string>& diags) {
    if (v.is_number_integer() || v.is_number_unsigned()) {
        const long long raw = v.get<long long>();
        if (raw >= 1) return static_cast<std::size_t>(raw);
    }
    diags.push_back(path + " must be a positive integer");
    return std::nullopt;
}

inline std::optional<Quantifier> parse_quantifier_value(const spec_json& v, const std::string& path,
                                                        std::vector<std::string>& diags) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const std::string_view prefix = "power:";
        if (s.rfind(prefix, 0) == 0) {
            const std::string arg = s.substr(prefix.size());
            std::size_t consumed = 0;
            double alpha = 0.0;
            try {
                alpha = std::stod(arg, &consumed);
            } catch (const std::exception&) {
                consumed = 0;
            }
            if (consumed == arg.size() && !arg.empty()) return Quantifier{PowerQuantifier{alpha}};
        }
        diags.push_back(path + " string \"" + s + "\" is not \"power:<alpha>\"");
        return std::nullopt;
    }
    if (v.is_array()) {
        PiecewiseLinearQuantifier q;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& k = v[i];
            if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number()) {
                diags.push_back(path + " knot " + std::to_string(i + 1) + " must be a [z, Q(z)] pair");
                return std::nullopt;
            }
            q.knots.emplace_back(k[0].get<double>(), k[1].get<double>());
        }
        return Quantifier{q};
    }
    diags.push_back(path + " must be \"power:<alpha>\" or a knot list");
    return std::nullopt;
}

inline std::optional<UncertainSatisfaction> parse_satisfaction(const spec_json& v, const std::string& path,
                                                               const LinguisticScale& scale,
                                                               std::vector<std::string>& diags) {
    if (!v.is_object() || v.size() != 1) {
        diags.push_back(path + " must be an object with exactly one satisfaction tag");
        return std::nullopt;
    }
    const auto it = v.begin();
    const std::string& tag = it.key();
    const spec_json& body = it.value();
    if (tag == "probability") {
        if (auto arr = number_array(body, path + ".probability", diags)) return ProbabilitySatisfaction{*arr};
        return std::nullopt;
    }
    if (tag == "possibility") {
        if (auto arr = number_array(body, path + ".possibility", diags)) return PossibilitySatisfaction{*arr};
        return std::nullopt;
    }
    if (tag == "interval") {
        if (!body.is_array() || body.size() != 2) {
            diags.push_back(path + ".interval must be a [lo, hi] index pair");
            return std::nullopt;
        }
        const auto lo = positive_integer(body[0], path + ".interval", diags);
        const auto hi = positive_integer(body[1], path + ".interval", diags);
        if (!lo || !hi) return std::nullopt;
        return IntervalSatisfaction{*lo, *hi};
    }
    if (tag == "interval_bounds") {
        const auto arr = number_array(body, path + ".interval_bounds", diags);
        if (!arr) return std::nullopt;
        if (arr->size() != 2) {
            diags.push_back(path + ".interval_bounds must be a [lo, hi] pair");
            return std::nullopt;
        }
        try {
            return interval_from_bounds(scale, (*arr)[0], (*arr)[1]);
        } catch (const std::invalid_argument& e) {
            diags.push_back(path + ": " + e.what());
            return std::nullopt;
        }
    }
    if (tag == "certain") {
        if (auto idx = positive_integer(body, path + ".certain", diags)) return CertainSatisfaction{*idx};
        return std::nullopt;
    }
    diags.push_back(path + " has unknown satisfaction tag \"" + tag + "\"");
    return std::nullopt;
}

inline spec_json satisfaction_to_json(const UncertainSatisfaction& sat) {
    spec_json j;
    std::visit(overloaded{
                   [&](const ProbabilitySatisfaction& p) { j["probability"] = p.mass; },
                   [&](const PossibilitySatisfaction& p) { j["possibility"] = p.degrees; },
                   [&](const IntervalSatisfaction& iv) { j["interval"] = {iv.lo, iv.hi}; },
                   [&](const CertainSatisfaction& c) { j["certain"] = c.index; },
               },
               sat);
    return j;
}

}  // namespace detail

/// Parses a quantifier given as "power:<alpha>" or as a JSON knot list like
/// [[0, 0], [0.5, 0.2], [1, 1]].
inline std::optional<Quantifier> parse_quantifier(const std::string& text,
                                                  std::vector<std::string>& diagnostics) {
    detail::spec_json j;
    if (!text.empty() && text.front() == '[') {
        try {
            j = detail::spec_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            diagnostics.push_back(std::string("quantifier syntax error: ") + e.what());
            return std::nullopt;
        }
    } else {
        j = text;
    }
    return detail::parse_quantifier_value(j, "quantifier", diagnostics);
}

/// Parses the JSON problem format. Returns every diagnostic it can find;
/// unknown fields are errors under strict parsing and warnings otherwise.
inline ParseResult parse_spec(const std::string& text, ParseOptions options = {}) {
    ParseResult result;
    detail::spec_json doc = detail::spec_json::object();
    const bool blank = std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch); });
    if (!blank) {
        try {
            doc = detail::spec_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            result.diagnostics.push_back(std::string("syntax error: ") + e.what());
            return result;
        }
    }
    if (!doc.is_object()) {
        result.diagnostics.push_back("spec must be a JSON object");
        return result;
    }

    auto& diags = result.diagnostics;
    detail::check_keys(
        doc, {"scale", "criteria", "quantifier", "importances", "alternatives", "ranking", "grid", "notes"}, "",
        options, result);

    DecisionProblem problem;

    if (!doc.contains("scale")) {
        diags.push_back("missing scale");
    } else if (!doc["scale"].is_object()) {
        diags.push_back("scale must be an object");
    } else {
        const auto& s = doc["scale"];
        detail::check_keys(s, {"labels", "values"}, "scale", options, result);
        if (!s.contains("labels") || !s["labels"].is_array() ||
            !std::all_of(s["labels"].begin(), s["labels"].end(),
                         [](const detail::spec_json& el) { return el.is_string(); })) {
            diags.push_back("scale.labels must be an array of strings");
        } else {
            problem.scale.labels = s["labels"].get<std::vector<std::string>>();
        }
        if (!s.contains("values") || !s["values"].is_array()) {
            diags.push_back("scale.values must be an array of [a, b, c] triples");
        } else {
            for (std::size_t i = 0; i < s["values"].size(); ++i) {
                const auto& t = s["values"][i];
                if (!t.is_array() || t.size() != 3 || !t[0].is_number() || !t[1].is_number() ||
                    !t[2].is_number()) {
                    diags.push_back("scale.values[" + std::to_string(i + 1) + "] must be an [a, b, c] triple");
                    continue;
                }
                problem.scale.values.push_back(
                    {t[0].get<double>(), t[1].get<double>(), t[2].get<double>()});
            }
        }
    }

    if (!doc.contains("criteria")) {
        diags.push_back("missing criteria");
    } else if (!doc["criteria"].is_array() ||
               !std::all_of(doc["criteria"].begin(), doc["criteria"].end(),
                            [](const detail::spec_json& el) { return el.is_string(); })) {
        diags.push_back("criteria must be an array of strings");
    } else {
        problem.criteria = doc["criteria"].get<std::vector<std::string>>();
    }

    if (!doc.contains("quantifier")) {
        diags.push_back("missing quantifier");
    } else if (auto q = detail::parse_quantifier_value(doc["quantifier"], "quantifier", diags)) {
        problem.quantifier = *q;
    }

    if (doc.contains("importances")) {
        if (auto arr = detail::number_array(doc["importances"], "importances", diags))
            problem.importances = ImportanceVector{*arr};
    }

    if (doc.contains("ranking")) {
        const auto& r = doc["ranking"];
        if (r.is_string() && r.get<std::string>() == "centroid") {
            problem.ranking_method = RankingMethod::centroid;
        } else if (r.is_string() && r.get<std::string>() == "lattice-ini") {
            problem.ranking_method = RankingMethod::lattice_ini;
        } else {
            diags.push_back("ranking must be \"centroid\" or \"lattice-ini\"");
        }
    }

    if (doc.contains("grid")) {
        if (auto g = detail::positive_integer(doc["grid"], "grid", diags)) problem.grid_resolution = *g;
    }

    if (doc.contains("notes")) {
        if (!doc["notes"].is_array() || !std::all_of(doc["notes"].begin(), doc["notes"].end(),
                                                     [](const detail::spec_json& el) { return el.is_string(); })) {
            diags.push_back("notes must be an array of strings");
        } else {
            problem.notes = doc["notes"].get<std::vector<std::string>>();
        }
    }

    if (!doc.contains("alternatives")) {
        diags.push_back("missing alternatives");
    } else if (!doc["alternatives"].is_object()) {
        diags.push_back("alternatives must be an object");
    } else {
        for (auto it = doc["alternatives"].begin(); it != doc["alternatives"].end(); ++it) {
            const std::string path = "alternatives." + it.key();
            if (!it.value().is_object()) {
                diags.push_back(path + " must map criteria to satisfactions");
                continue;
            }
            Alternative alt;
            alt.name = it.key();
            for (auto sit = it.value().begin(); sit != it.value().end(); ++sit) {
                if (std::find(problem.criteria.begin(), problem.criteria.end(), sit.key()) ==
                    problem.criteria.end())
                    diags.push_back(path + "." + sit.key() + " is not a declared criterion");
            }
            bool complete = true;
            for (const auto& criterion : problem.criteria) {
                if (!it.value().contains(criterion)) {
                    diags.push_back(path + " has no entry for criterion \"" + criterion + "\"");
                    complete = false;
                    continue;
                }
                auto sat = detail::parse_satisfaction(it.value()[criterion], path + "." + criterion,
                                                      problem.scale, diags);
                if (sat)
                    alt.satisfactions.push_back(std::move(*sat));
                else
                    complete = false;
            }
            if (complete) problem.alternatives.push_back(std::move(alt));
        }
    }

    if (diags.empty()) {
        for (const auto& d : validate(problem)) diags.push_back(d);
    }
    if (diags.empty()) result.problem = std::move(problem);
    return result;
}

/// Canonical spec text for a problem; re-parsing it reproduces the problem.
inline std::string emit_spec(const DecisionProblem& problem) {
    detail::spec_json doc;
    doc["scale"]["labels"] = problem.scale.labels;
    auto& values = doc["scale"]["values"] = detail::spec_json::array();
    for (const auto& fn : problem.scale.values) values.push_back({fn.a, fn.b, fn.c});
    doc["criteria"] = problem.criteria;
    std::visit(detail::overloaded{
                   [&](const PowerQuantifier& p) {
                       doc["quantifier"] = "power:" + detail::full_precision(p.exponent);
                   },
                   [&](const PiecewiseLinearQuantifier& p) {
                       auto& knots = doc["quantifier"] = detail::spec_json::array();
                       for (const auto& [z, qz] : p.knots) knots.push_back({z, qz});
                   },
               },
               problem.quantifier);
    if (problem.importances) doc["importances"] = problem.importances->lambdas;
    doc["ranking"] = problem.ranking_method == RankingMethod::centroid ? "centroid" : "lattice-ini";
    doc["grid"] = problem.grid_resolution;
    if (!problem.notes.empty()) doc["notes"] = problem.notes;
    auto& alts = doc["alternatives"] = detail::spec_json::object();
    for (const auto& alt : problem.alternatives) {
        auto& entry = alts[alt.name] = detail::spec_json::object();
        for (std::size_t k = 0; k < problem.criteria.size(); ++k)
            entry[problem.criteria[k]] = detail::satisfaction_to_json(alt.satisfactions[k]);
    }
    return doc.dump(2) + "\n";
}

inline const char* ordering_method_name(OrderingMethod method) {
    return method == OrderingMethod::dominance ? "dominance" : "surrogate";
}

/// Machine-readable score: full-precision numbers, stable key set.
inline nlohmann::ordered_json score_to_json(const AlternativeScore& score, const std::string& name,
                                            const std::vector<std::string>& criteria) {
    nlohmann::ordered_json j;
    j["alternative"] = name;
    auto& order = j["criterion_order"] = nlohmann::ordered_json::array();
    for (std::size_t idx : score.criterion_ordering.rho) order.push_back(criteria[idx]);
    j["ordering_method"] = ordering_method_name(score.criterion_ordering.method_used);
    j["weights"] = score.trace.weights.weights;
    j["aggregate"] = score.aggregate.values;
    j["surrogate"] = {score.surrogate.a, score.surrogate.b, score.surrogate.c};
    j["centroid"] = score.centroid;
    auto& trace = j["trace"];
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        trace["cumulative"][criteria[k]] = score.trace.cumulative[k].values;
        trace["delta"][criteria[k]] = score.trace.delta[k];
    }
    if (score.criterion_ordering.surrogates) {
        for (std::size_t k = 0; k < criteria.size(); ++k) {
            const auto& fn = (*score.criterion_ordering.surrogates)[k];
            trace["criterion_surrogates"][criteria[k]] = {fn.a, fn.b, fn.c};
        }
    }
    return j;
}

inline nlohmann::ordered_json report_to_json(const RankingReport& report,
                                             const std::vector<std::string>& criteria) {
    nlohmann::ordered_json j;
    j["comparison_method"] = ordering_method_name(report.comparison_method);
    auto& ranking = j["ranking"] = nlohmann::ordered_json::array();
    for (const auto& entry : report.ranking) ranking.push_back(score_to_json(entry.score, entry.name, criteria));
    j["warnings"] = report.warnings;
    return j;
}

namespace detail {

inline std::string styled(const std::string& text, bool color) {
    return color ? "\033[1m" + text + "\033[0m" : text;
}

inline std::string number_row(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += "  ";
        out += format_number(values[i]);
    }
    return out;
}

inline std::string tfn_text(const TriangularFuzzyNumber& fn) {
    return "(" + format_number(fn.a) + ", " + format_number(fn.b) + ", " + format_number(fn.c) + ")";
}

inline std::string padded(const std::string& name, std::size_t width) {
    return name + std::string(width > name.size() ? width - name.size() : 0, ' ');
}

}  // namespace detail

/// Human-readable score block with the full trace tables.
inline std::string render_score(const AlternativeScore& score, const std::string& name,
                                const std::vector<std::string>& criteria, bool color = false) {
    std::size_t width = 0;
    for (const auto& c : criteria) width = std::max(width, c.size());

    std::string out = detail::styled("alternative " + name, color) + "\n";
    out += "  criterion order: ";
    for (std::size_t i = 0; i < score.criterion_ordering.rho.size(); ++i) {
        if (i > 0) out += " > ";
        out += criteria[score.criterion_ordering.rho[i]];
    }
    out += std::string("  (") + ordering_method_name(score.criterion_ordering.method_used) + ")\n";
    out += "  weights: " + detail::number_row(score.trace.weights.weights) + "\n";
    out += "  cumulative mu(Hj):\n";
    for (std::size_t k = 0; k < criteria.size(); ++k)
        out += "    " + detail::padded(criteria[k], width) + "  " +
               detail::number_row(score.trace.cumulative[k].values) + "\n";
    out += "  delta V:\n";
    for (std::size_t k = 0; k < criteria.size(); ++k)
        out += "    " + detail::padded(criteria[k], width) + "  " + detail::number_row(score.trace.delta[k]) +
               "\n";
    if (score.criterion_ordering.surrogates) {
        out += "  criterion surrogates:\n";
        for (std::size_t k = 0; k < criteria.size(); ++k)
            out += "    " + detail::padded(criteria[k], width) + "  " +
                   detail::tfn_text((*score.criterion_ordering.surrogates)[k]) + "\n";
    }
    out += "  aggregate mu: " + detail::number_row(score.aggregate.values) + "\n";
    out += "  surrogate: " + detail::tfn_text(score.surrogate) + "\n";
    out += "  centroid: " + format_number(score.centroid) + "\n";
    return out;
}

/// Human-readable ranking with every alternative's trace appended.
inline std::string render_report(const RankingReport& report, const std::vector<std::string>& criteria,
                                 bool color = false) {
    std::string out =
        detail::styled(std::string("ranking (") + ordering_method_name(report.comparison_method) +
                           " comparison)",
                       color) +
        "\n";
    std::size_t width = 0;
    for (const auto& entry : report.ranking) width = std::max(width, entry.name.size());
    for (std::size_t i = 0; i < report.ranking.size(); ++i) {
        const auto& entry = report.ranking[i];
        out += "  " + std::to_string(i + 1) + ". " + detail::padded(entry.name, width) + "  centroid " +
               format_number(entry.score.centroid) + "  M = " + detail::tfn_text(entry.score.surrogate) + "\n";
    }
    out += "\n";
    for (const auto& entry : report.ranking) out += render_score(entry.score, entry.name, criteria, color) + "\n";
    if (!report.warnings.empty()) {
        out += detail::styled("warnings:", color) + "\n";
        for (const auto& w : report.warnings) out += "  - " + w + "\n";
    }
    return out;
}

}  // namespace mcda
