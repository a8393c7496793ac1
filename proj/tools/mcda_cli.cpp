#include "mcda/mcda.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

constexpr int exit_validation = 1;
constexpr int exit_usage = 2;

bool color_enabled() {
    if (std::getenv("NO_COLOR") != nullptr) return false;
    return isatty(fileno(stdout)) != 0;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ProblemFlags {
    std::string spec_path;
    std::string ranking;
    std::size_t grid = 0;
    std::string format = "text";
    bool lenient = false;
};

void add_common_flags(CLI::App* cmd, ProblemFlags& flags) {
    cmd->add_option("spec", flags.spec_path, "problem spec file")->required();
    cmd->add_option("--ranking", flags.ranking, "fuzzy ranking strategy")
        ->check(CLI::IsMember({"centroid", "lattice-ini"}));
    cmd->add_option("--grid", flags.grid, "lattice grid resolution")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    cmd->add_option("--format", flags.format, "report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--lenient,!--strict", flags.lenient, "tolerate unknown spec fields");
}

int load_problem(const ProblemFlags& flags, mcda::DecisionProblem& problem) {
    const auto text = read_file(flags.spec_path);
    if (!text) {
        std::cerr << "cannot read " << flags.spec_path << "\n";
        return exit_usage;
    }
    mcda::ParseResult parsed = mcda::parse_spec(*text, {.strict = !flags.lenient});
    for (const auto& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
    if (!parsed.ok()) {
        for (const auto& d : parsed.diagnostics) std::cerr << d << "\n";
        return exit_validation;
    }
    problem = std::move(*parsed.problem);
    if (!flags.ranking.empty())
        problem.ranking_method =
            flags.ranking == "centroid" ? mcda::RankingMethod::centroid : mcda::RankingMethod::lattice_ini;
    if (flags.grid != 0) problem.grid_resolution = flags.grid;
    return 0;
}

int run_rank(const ProblemFlags& flags) {
    mcda::DecisionProblem problem;
    if (const int rc = load_problem(flags, problem); rc != 0) return rc;
    try {
        const mcda::RankingReport report = mcda::rank_alternatives(problem);
        if (flags.format == "json")
            std::cout << mcda::report_to_json(report, problem.criteria).dump(2) << "\n";
        else
            std::cout << mcda::render_report(report, problem.criteria, color_enabled());
    } catch (const mcda::ValidationError& e) {
        for (const auto& d : e.diagnostics()) std::cerr << d << "\n";
        return exit_validation;
    }
    return 0;
}

int run_score(const ProblemFlags& flags, const std::string& alternative) {
    mcda::DecisionProblem problem;
    if (const int rc = load_problem(flags, problem); rc != 0) return rc;
    try {
        const mcda::AlternativeScore score = mcda::score_alternative(problem, alternative);
        if (flags.format == "json")
            std::cout << mcda::score_to_json(score, alternative, problem.criteria).dump(2) << "\n";
        else
            std::cout << mcda::render_score(score, alternative, problem.criteria, color_enabled());
    } catch (const mcda::ValidationError& e) {
        for (const auto& d : e.diagnostics()) std::cerr << d << "\n";
        return exit_validation;
    }
    return 0;
}

int run_weights(const std::string& quantifier_arg, std::size_t count, const std::vector<double>& importances,
                const std::string& format) {
    std::vector<std::string> diags;
    const auto quantifier = mcda::parse_quantifier(quantifier_arg, diags);
    if (!quantifier) {
        for (const auto& d : diags) std::cerr << d << "\n";
        return exit_usage;
    }
    mcda::WeightVector w;
    try {
        if (importances.empty()) {
            w = mcda::quantifier_weights(*quantifier, count);
        } else {
            if (importances.size() != count) {
                std::cerr << "importances count " << importances.size() << " does not match --n " << count
                          << "\n";
                return exit_validation;
            }
            w = mcda::importance_weights(*quantifier, importances);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return exit_validation;
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["weights"] = w.weights;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < w.weights.size(); ++i)
            std::cout << (i > 0 ? " " : "") << mcda::format_number(w.weights[i]);
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"OWA decision engine over uncertain linguistic satisfactions"};
    app.require_subcommand(1);

    ProblemFlags rank_flags;
    CLI::App* rank = app.add_subcommand("rank", "rank all alternatives in a problem spec");
    add_common_flags(rank, rank_flags);

    ProblemFlags score_flags;
    std::string alternative;
    CLI::App* score = app.add_subcommand("score", "score one alternative with its full trace");
    add_common_flags(score, score_flags);
    score->add_option("--alternative", alternative, "alternative name")->required();

    std::string quantifier_arg;
    std::size_t count = 0;
    std::vector<double> importances;
    std::string weights_format = "text";
    CLI::App* weights = app.add_subcommand("weights", "print the OWA weights a quantifier induces");
    weights->add_option("--quantifier", quantifier_arg, "\"power:<alpha>\" or a JSON knot list")->required();
    weights->add_option("--n", count, "argument count")->required()->check(CLI::PositiveNumber);
    weights->add_option("--importances", importances, "importances in rank order")->delimiter(',');
    weights->add_option("--format", weights_format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (*rank) return run_rank(rank_flags);
    if (*score) return run_score(score_flags, alternative);
    return run_weights(quantifier_arg, count, importances, weights_format);
}
