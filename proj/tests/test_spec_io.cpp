#include "support/helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace mcda;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string minimal_spec() {
    return R"({
  "scale": {"labels": ["good", "bad"], "values": [[0.5, 1, 1], [0, 0, 0.5]]},
  "criteria": ["C1"],
  "quantifier": "power:1",
  "alternatives": {"x": {"C1": {"certain": 1}}}
})";
}

bool contains(const std::vector<std::string>& messages, const std::string& needle) {
    for (const auto& m : messages)
        if (m.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("bundled worked example parses to the reference problem", "[spec_io]") {
    const auto result = parse_spec(read_file(MCDA_WORKED_SPEC));
    REQUIRE(result.ok());
    CHECK(result.diagnostics.empty());
    CHECK(result.warnings.empty());

    const auto expected = testsupport::worked_example_problem();
    const auto& got = *result.problem;
    CHECK(got.scale == expected.scale);
    CHECK(got.criteria == expected.criteria);
    CHECK(got.quantifier == expected.quantifier);
    CHECK(got.alternatives == expected.alternatives);
    CHECK(got.ranking_method == RankingMethod::centroid);
    CHECK(got.notes.size() == 2);
}

TEST_CASE("minimal spec parses with defaults", "[spec_io]") {
    const auto result = parse_spec(minimal_spec());
    REQUIRE(result.ok());
    const auto& problem = *result.problem;
    CHECK(problem.quantifier == Quantifier{PowerQuantifier{1.0}});
    CHECK(problem.ranking_method == RankingMethod::centroid);
    CHECK(problem.grid_resolution == default_grid_resolution);
    CHECK(!problem.importances.has_value());
    CHECK(problem.notes.empty());
}

TEST_CASE("empty document reports every missing section", "[spec_io]") {
    const auto result = parse_spec("");
    CHECK(!result.ok());
    CHECK(contains(result.diagnostics, "missing scale"));
    CHECK(contains(result.diagnostics, "missing criteria"));
    CHECK(contains(result.diagnostics, "missing quantifier"));
    CHECK(contains(result.diagnostics, "missing alternatives"));
}

TEST_CASE("syntax errors carry the parser location", "[spec_io]") {
    const auto result = parse_spec("{\"scale\": }");
    CHECK(!result.ok());
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0].find("syntax error: ") == 0);

    const auto array_doc = parse_spec("[1, 2, 3]");
    CHECK(!array_doc.ok());
    CHECK(contains(array_doc.diagnostics, "spec must be a JSON object"));
}

TEST_CASE("semantic problems surface with their json path", "[spec_io]") {
    auto text = read_file(MCDA_WORKED_SPEC);
    const auto marker = std::string("\"probability\": [0, 0.2, 0.5, 0.2, 0.1]");
    const auto at = text.find(marker);
    REQUIRE(at != std::string::npos);
    text.replace(at, marker.size(), "\"probability\": [0, 0.3, 0.5, 0.2, 0.1]");

    const auto result = parse_spec(text);
    CHECK(!result.ok());
    REQUIRE(result.diagnostics.size() == 1);
    CHECK(result.diagnostics[0] == "alternative \"x\", criterion \"C1\": probability mass 1.1 != 1");
}

TEST_CASE("undeclared and missing criteria are reported", "[spec_io]") {
    auto text = std::string(R"({
  "scale": {"labels": ["good", "bad"], "values": [[0.5, 1, 1], [0, 0, 0.5]]},
  "criteria": ["C1", "C2"],
  "quantifier": "power:1",
  "alternatives": {"x": {"C1": {"certain": 1}, "C9": {"certain": 2}}}
})");
    const auto result = parse_spec(text);
    CHECK(!result.ok());
    CHECK(contains(result.diagnostics, "alternatives.x.C9 is not a declared criterion"));
    CHECK(contains(result.diagnostics, "alternatives.x has no entry for criterion \"C2\""));
}

TEST_CASE("unknown fields are strict errors and lenient warnings", "[spec_io]") {
    auto text = minimal_spec();
    text.insert(1, "\"color\": \"blue\",");

    const auto strict = parse_spec(text);
    CHECK(!strict.ok());
    CHECK(contains(strict.diagnostics, "unknown field \"color\""));

    const auto lenient = parse_spec(text, ParseOptions{false});
    CHECK(lenient.ok());
    CHECK(lenient.diagnostics.empty());
    CHECK(contains(lenient.warnings, "unknown field \"color\""));
}

TEST_CASE("quantifier text forms", "[spec_io]") {
    std::vector<std::string> diags;
    const auto power = parse_quantifier("power:2.5", diags);
    REQUIRE(power.has_value());
    CHECK(*power == Quantifier{PowerQuantifier{2.5}});

    const auto knots = parse_quantifier("[[0, 0], [0.5, 0.2], [1, 1]]", diags);
    REQUIRE(knots.has_value());
    CHECK(*knots == Quantifier{PiecewiseLinearQuantifier{{{0.0, 0.0}, {0.5, 0.2}, {1.0, 1.0}}}});
    CHECK(diags.empty());

    CHECK(!parse_quantifier("power:two", diags).has_value());
    CHECK(!parse_quantifier("most", diags).has_value());
    CHECK(!parse_quantifier("[[0, 0], [1]]", diags).has_value());
    CHECK(!parse_quantifier("[[0, 0], [1, 1]", diags).has_value());
    CHECK(diags.size() == 4);
}

TEST_CASE("interval satisfactions parse in both forms", "[spec_io]") {
    auto text = std::string(R"({
  "scale": {
    "labels": ["perfect", "very good", "good", "poor", "none"],
    "values": [[0.75, 1, 1], [0.5, 0.75, 1], [0.25, 0.5, 0.75], [0, 0.25, 0.5], [0, 0, 0.25]]
  },
  "criteria": ["C1", "C2"],
  "quantifier": "power:2",
  "alternatives": {"x": {"C1": {"interval": [2, 3]}, "C2": {"interval_bounds": [0, 0.3]}}}
})");
    const auto result = parse_spec(text);
    REQUIRE(result.ok());
    const auto& sats = result.problem->alternatives[0].satisfactions;
    CHECK(sats[0] == UncertainSatisfaction{IntervalSatisfaction{2, 3}});
    CHECK(sats[1] == UncertainSatisfaction{IntervalSatisfaction{4, 5}});
}

TEST_CASE("specs round-trip through emit and parse", "[spec_io]") {
    auto problem = testsupport::worked_example_problem();
    problem.notes = {"first note", "second note"};
    const auto echoed = parse_spec(emit_spec(problem));
    REQUIRE(echoed.ok());
    CHECK(*echoed.problem == problem);

    DecisionProblem fancy;
    fancy.scale = testsupport::worked_example_scale();
    fancy.criteria = {"cost", "risk"};
    fancy.quantifier = PiecewiseLinearQuantifier{{{0.0, 0.0}, {0.25, 0.1}, {1.0, 1.0}}};
    fancy.importances = ImportanceVector{{0.75, 0.25}};
    fancy.ranking_method = RankingMethod::lattice_ini;
    fancy.grid_resolution = 513;
    fancy.alternatives.push_back({"alpha", {IntervalSatisfaction{1, 3}, CertainSatisfaction{2}}});
    fancy.alternatives.push_back({"beta", {PossibilitySatisfaction{{1.0, 0.5, 0.25, 0.0, 0.0}},
                                           ProbabilitySatisfaction{{0.5, 0.25, 0.125, 0.0625, 0.0625}}}});
    const auto back = parse_spec(emit_spec(fancy));
    REQUIRE(back.ok());
    CHECK(*back.problem == fancy);
}

TEST_CASE("score json carries the full trace", "[spec_io]") {
    const auto problem = testsupport::worked_example_problem();
    const auto score = score_alternative(problem, "x");
    const auto j = score_to_json(score, "x", problem.criteria);

    CHECK(j["alternative"] == "x");
    CHECK(j["criterion_order"] == nlohmann::ordered_json::array({"C2", "C1", "C3"}));
    CHECK(j["ordering_method"] == "surrogate");
    REQUIRE(j["weights"].size() == 3);
    CHECK(j["weights"][0].get<double>() == 1.0 / 9.0);
    REQUIRE(j["aggregate"].size() == 5);
    CHECK_THAT(j["aggregate"][3].get<double>(), Catch::Matchers::WithinAbs(8.5 / 9.0, 1e-12));
    REQUIRE(j["surrogate"].size() == 3);
    CHECK(j["trace"]["cumulative"]["C2"] ==
          nlohmann::ordered_json::array({0.4, 0.4, 0.6, 0.8, 1.0}));
    CHECK(j["trace"]["delta"].contains("C3"));
    CHECK(j["trace"]["criterion_surrogates"].contains("C1"));
}

TEST_CASE("report json lists ranked alternatives and warnings", "[spec_io]") {
    auto problem = testsupport::worked_example_problem();
    problem.notes = {"pilot data only"};
    const auto report = rank_alternatives(problem);
    const auto j = report_to_json(report, problem.criteria);

    CHECK(j["comparison_method"] == "dominance");
    REQUIRE(j["ranking"].size() == 1);
    CHECK(j["ranking"][0]["alternative"] == "x");
    CHECK(j["warnings"] == nlohmann::ordered_json::array({"pilot data only"}));
}

TEST_CASE("text rendering shows the order, tables, and warnings", "[spec_io]") {
    auto problem = testsupport::worked_example_problem();
    problem.notes = {"pilot data only"};
    const auto report = rank_alternatives(problem);
    const auto text = render_report(report, problem.criteria);

    CHECK(text.find("ranking (dominance comparison)") != std::string::npos);
    CHECK(text.find("1. x") != std::string::npos);
    CHECK(text.find("criterion order: C2 > C1 > C3  (surrogate)") != std::string::npos);
    CHECK(text.find("weights: 0.111111  0.333333  0.555556") != std::string::npos);
    CHECK(text.find("aggregate mu: 0.0444444  0.111111  0.3  0.944444  1") != std::string::npos);
    CHECK(text.find("warnings:") != std::string::npos);
    CHECK(text.find("  - pilot data only") != std::string::npos);
    CHECK(text.find("\033[") == std::string::npos);

    const auto colored = render_report(report, problem.criteria, true);
    CHECK(colored.find("\033[1m") != std::string::npos);
}
