#include "credence/bayes.hpp"
#include "credence/betting.hpp"
#include "credence/coherence.hpp"
#include "credence/errors.hpp"
#include "credence/figures.hpp"
#include "credence/formats.hpp"
#include "credence/litigation.hpp"
#include "credence/reports.hpp"
#include "credence/voting.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace credence;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitIncoherent = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
    if (!out) throw Error("failed while writing '" + path + "'");
}

RoundingPolicy policy_from_mode(const std::string& mode) {
    return mode == "paper" ? RoundingPolicy::Published : RoundingPolicy::Exact;
}

BetaParams parse_beta(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("prior must be written alpha:beta, e.g. 1:1, got '" + text + "'");
    return {parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

int run_tables(const std::string& mode) {
    std::cout << tables_text(policy_from_mode(mode));
    return kExitOk;
}

int run_figures(const std::string& out_dir, const std::string& mode) {
    const RoundingPolicy policy = policy_from_mode(mode);
    const StageTable table = published_table();
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec); // best effort; the write below reports failures
    const std::pair<FigureKind, const char*> figures[] = {
        {FigureKind::Prior, "figure1.svg"},
        {FigureKind::Joint, "figure2.svg"},
        {FigureKind::Posterior, "figure3.svg"},
    };
    for (const auto& [kind, name] : figures) {
        const std::string path = (fs::path(out_dir) / name).string();
        write_file(path, to_svg(make_figure(table, policy, kind)));
        std::cout << "wrote " << path << "\n";
    }
    return kExitOk;
}

int run_update(const std::string& prior_path, const std::string& likelihood_path) {
    const DiscreteDistribution prior = parse_distribution_json(read_file(prior_path));
    auto [order, likelihoods] = parse_likelihood_json(read_file(likelihood_path));
    std::cout << update_report(update(prior, likelihoods));
    return kExitOk;
}

int run_odds(const std::optional<std::string>& credence_text,
             const std::optional<std::string>& odds_text) {
    if (credence_text.has_value() == odds_text.has_value())
        throw Error("provide either a credence or --from-odds, not both");
    if (credence_text) {
        const Probability p = Probability::from_string(*credence_text);
        const Odds odds = credence_to_odds(p);
        std::cout << "credence " << value_text(p.value()) << " -> odds " << odds.str()
                  << " against\n";
    } else {
        const Odds odds = Odds::parse(*odds_text);
        const Probability p = odds_to_credence(odds);
        std::cout << "odds " << odds.str() << " against -> credence " << value_text(p.value())
                  << "\n";
    }
    return kExitOk;
}

int run_coherence(const std::string& book_path) {
    const CredenceBook book = parse_book_json(read_file(book_path));
    const CoherenceVerdict verdict = check_coherence(book);
    std::cout << coherence_report(verdict);
    std::cout << (verify_certificate(book, verdict) ? "certificate: verified\n"
                                                    : "certificate: INVALID\n");
    return is_coherent(verdict) ? kExitOk : kExitIncoherent;
}

int run_vote(const std::string& ballots_path, bool issues, const std::string& outcome_fn,
             const std::string& mode, const std::string& rule_name) {
    const std::vector<Ballot> ballots = parse_ballots_json(read_file(ballots_path));
    const AggregationRule rule =
        rule_name == "median" ? AggregationRule::Median : AggregationRule::Mean;
    if (issues) {
        if (outcome_fn.empty()) throw Error("--issues requires --outcome-fn");
        const OutcomeFunction fn = OutcomeFunction::parse(outcome_fn);
        const VoteMode vote_mode =
            mode == "outcome" ? VoteMode::OutcomeVoting : VoteMode::IssueVoting;
        std::cout << "outcome function: " << fn.str() << "\n";
        std::cout << panel_report(aggregate_issues(ballots, fn, rule, vote_mode));
        return kExitOk;
    }
    // Single-question panels: every ballot must score exactly one shared question.
    const auto& first_scores = ballots.front().scores;
    if (first_scores.size() != 1)
        throw Error("ballots carry multiple questions; use --issues with --outcome-fn");
    const std::string question = first_scores.begin()->first;
    for (const auto& ballot : ballots)
        if (ballot.scores.size() != 1 || !ballot.scores.count(question))
            throw Error("ballots disagree on the question; use --issues with --outcome-fn");
    std::cout << "question: " << question << "\n";
    std::cout << panel_report(aggregate_outcome(ballots, question, rule),
                              binary_baseline(ballots, question));
    return kExitOk;
}

int run_converge(const std::string& prior_a, const std::string& prior_b,
                 const std::optional<std::string>& stream_path) {
    const BetaParams a = parse_beta(prior_a);
    const BetaParams b = parse_beta(prior_b);
    const std::vector<int> stream =
        stream_path ? parse_stream_text(read_file(*stream_path)) : embedded_flip_stream();
    std::cout << convergence_report(a, b, convergence_demo(a, b, stream), stream);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subjective probability toolkit: exact Bayesian tables, betting odds, "
                 "Dutch-book coherence checks, and score-voting panels"};
    app.require_subcommand(1);

    std::string tables_mode = "exact";
    auto* tables_cmd = app.add_subcommand("tables", "Print the litigation prior/posterior tables");
    tables_cmd->add_option("--mode", tables_mode, "exact | paper (published one-decimal rounding)")
        ->check(CLI::IsMember({"exact", "paper"}));

    std::string figures_dir;
    std::string figures_mode = "exact";
    auto* figures_cmd = app.add_subcommand("figures", "Write the three area-diagram SVG files");
    figures_cmd->add_option("--out", figures_dir, "output directory")->required();
    figures_cmd->add_option("--mode", figures_mode, "exact | paper")
        ->check(CLI::IsMember({"exact", "paper"}));

    std::string prior_path, likelihood_path;
    auto* update_cmd = app.add_subcommand("update", "Bayes-update a prior with likelihoods");
    update_cmd->add_option("--prior", prior_path, "prior distribution JSON file")->required();
    update_cmd->add_option("--likelihood", likelihood_path, "likelihood JSON file")->required();

    std::optional<std::string> odds_credence, odds_from;
    auto* odds_cmd = app.add_subcommand("odds", "Convert between credences and betting odds");
    odds_cmd->add_option("credence", odds_credence, "credence as a fraction or decimal");
    odds_cmd->add_option("--from-odds", odds_from, "odds A:B (against:for)");

    std::string book_path;
    auto* coherence_cmd =
        app.add_subcommand("coherence", "Check a credence book for Dutch-book coherence");
    coherence_cmd->add_option("--book", book_path, "credence book JSON file")->required();

    std::string ballots_path, outcome_fn, vote_mode = "issue", vote_rule = "mean";
    bool vote_issues = false;
    auto* vote_cmd = app.add_subcommand("vote", "Aggregate a panel of score ballots");
    vote_cmd->add_option("--ballots", ballots_path, "ballots JSON file")->required();
    vote_cmd->add_flag("--issues", vote_issues, "aggregate per issue through an outcome function");
    vote_cmd->add_option("--outcome-fn", outcome_fn, "boolean outcome function over issue ids");
    vote_cmd->add_option("--mode", vote_mode, "issue | outcome voting")
        ->check(CLI::IsMember({"issue", "outcome"}));
    vote_cmd->add_option("--rule", vote_rule, "mean | median aggregation")
        ->check(CLI::IsMember({"mean", "median"}));

    std::string prior_a, prior_b;
    std::optional<std::string> stream_path;
    auto* converge_cmd =
        app.add_subcommand("converge", "Show two agents' predictive probabilities converging");
    converge_cmd->add_option("--prior-a", prior_a, "Beta prior alpha:beta")->required();
    converge_cmd->add_option("--prior-b", prior_b, "Beta prior alpha:beta")->required();
    converge_cmd->add_option("--stream", stream_path,
                             "0/1 observation file (default: embedded 100-flip stream)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (tables_cmd->parsed()) return run_tables(tables_mode);
        if (figures_cmd->parsed()) return run_figures(figures_dir, figures_mode);
        if (update_cmd->parsed()) return run_update(prior_path, likelihood_path);
        if (odds_cmd->parsed()) return run_odds(odds_credence, odds_from);
        if (coherence_cmd->parsed()) return run_coherence(book_path);
        if (vote_cmd->parsed())
            return run_vote(ballots_path, vote_issues, outcome_fn, vote_mode, vote_rule);
        if (converge_cmd->parsed()) return run_converge(prior_a, prior_b, stream_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
