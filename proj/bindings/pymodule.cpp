#include "credence/bayes.hpp"
#include "credence/betting.hpp"
#include "credence/coherence.hpp"
#include "credence/errors.hpp"
#include "credence/figures.hpp"
#include "credence/litigation.hpp"
#include "credence/voting.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace credence;

namespace {

py::object to_fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(fraction_string(r));
}

Rational rational_from(py::handle value) {
    if (py::isinstance<py::str>(value)) return parse_rational(value.cast<std::string>());
    if (py::isinstance<py::float_>(value))
        throw ParseError("floating-point values are inexact; pass a string like '0.48' or a "
                         "fractions.Fraction");
    if (py::hasattr(value, "numerator") && py::hasattr(value, "denominator")) {
        // Covers int and fractions.Fraction, at arbitrary precision via str.
        Integer num(py::str(value.attr("numerator")).cast<std::string>());
        Integer den(py::str(value.attr("denominator")).cast<std::string>());
        return {num, den};
    }
    throw ParseError("expected a rational as str, int, or fractions.Fraction");
}

Probability probability_from(py::handle value) { return Probability(rational_from(value)); }

RoundingPolicy policy_from(const std::string& mode) {
    if (mode == "exact") return RoundingPolicy::Exact;
    if (mode == "paper") return RoundingPolicy::Published;
    throw ParseError("mode must be 'exact' or 'paper'");
}

AggregationRule rule_from(const std::string& rule) {
    if (rule == "mean") return AggregationRule::Mean;
    if (rule == "median") return AggregationRule::Median;
    throw ParseError("rule must be 'mean' or 'median'");
}

std::vector<Ballot> ballots_from(const py::list& entries) {
    std::vector<Ballot> ballots;
    for (const auto& entry : entries) {
        auto pair = entry.cast<std::pair<std::string, py::dict>>();
        std::map<std::string, Score> scores;
        for (const auto& [question, score] : pair.second)
            scores.emplace(question.cast<std::string>(), probability_from(score));
        ballots.emplace_back(std::move(pair.first), std::move(scores));
    }
    return ballots;
}

py::dict panel_dict(const PanelResult& result) {
    py::dict out;
    out["aggregate"] = to_fraction(result.aggregate.value());
    out["burden_met"] = result.decision == Decision::BurdenMet;
    out["mode"] = result.mode == VoteMode::IssueVoting ? "issue" : "outcome";
    out["rule"] = result.rule == AggregationRule::Mean ? "mean" : "median";
    if (!result.issue_aggregates.empty()) {
        py::dict issues;
        for (const auto& [issue, score] : result.issue_aggregates)
            issues[py::str(issue)] = to_fraction(score.value());
        out["issues"] = issues;
    }
    return out;
}

py::dict table_dict(const StageTable& table) {
    py::dict out;
    out["prior_pre"] = to_fraction(table.prior_pre.value());
    out["prior_post"] = to_fraction(table.prior_post.value());
    out["cond_gov_given_pre"] = to_fraction(table.cond_gov_given_pre.value());
    out["cond_gov_given_post"] = to_fraction(table.cond_gov_given_post.value());
    return out;
}

StageTable table_from(const py::dict& table) {
    return {probability_from(table["prior_pre"]), probability_from(table["prior_post"]),
            probability_from(table["cond_gov_given_pre"]),
            probability_from(table["cond_gov_given_post"])};
}

CredenceBook book_from(const std::vector<std::string>& outcomes, const py::list& assessments) {
    SampleSpace space(outcomes);
    std::vector<Assessment> parsed;
    for (const auto& entry : assessments) {
        auto pair = entry.cast<std::pair<std::vector<std::string>, py::object>>();
        parsed.push_back({space.event(std::move(pair.first)), probability_from(pair.second)});
    }
    return {std::move(space), std::move(parsed)};
}

py::dict verdict_dict(const CoherenceVerdict& verdict) {
    py::dict out;
    if (const auto* coherent = std::get_if<Coherent>(&verdict)) {
        out["coherent"] = true;
        py::dict witness;
        for (const auto& outcome : coherent->witness.space().outcomes())
            witness[py::str(outcome)] = to_fraction(coherent->witness.mass(outcome).value());
        out["witness"] = witness;
    } else {
        const auto& dutch = std::get<Incoherent>(verdict);
        out["coherent"] = false;
        py::list stakes;
        for (const auto& [event, stake] : dutch.stakes)
            stakes.append(py::make_tuple(event.members(), to_fraction(stake)));
        out["stakes"] = stakes;
        out["guaranteed_loss"] = to_fraction(dutch.guaranteed_loss);
    }
    return out;
}

CoherenceVerdict verdict_from(const CredenceBook& book, const py::dict& verdict) {
    if (verdict["coherent"].cast<bool>()) {
        std::map<std::string, Probability> mass;
        for (const auto& [outcome, value] : verdict["witness"].cast<py::dict>())
            mass.emplace(outcome.cast<std::string>(), probability_from(value));
        return Coherent{DiscreteDistribution(book.space(), mass)};
    }
    Incoherent dutch;
    for (const auto& entry : verdict["stakes"].cast<py::list>()) {
        auto pair = entry.cast<std::pair<std::vector<std::string>, py::object>>();
        dutch.stakes.emplace_back(Event(std::move(pair.first)), rational_from(pair.second));
    }
    dutch.guaranteed_loss = rational_from(verdict["guaranteed_loss"]);
    return dutch;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact subjective-probability kernel: finite Bayesian updating, betting odds, "
              "Dutch-book coherence certificates, and score-voting aggregation";

    py::register_exception<Error>(m, "Error");

    m.def("multiply_rule", [](py::object prior, py::object conditional) {
        return to_fraction(multiply_rule(probability_from(prior), probability_from(conditional)).value());
    });
    m.def("addition_rule", [](const py::list& joints) {
        std::vector<Probability> parsed;
        for (const auto& j : joints) parsed.push_back(probability_from(j));
        return to_fraction(addition_rule(parsed).value());
    });
    m.def("bayes_posterior", [](py::object joint, py::object marginal) {
        return to_fraction(bayes_posterior(probability_from(joint), probability_from(marginal)).value());
    });
    m.def("update", [](const py::dict& prior, const py::dict& likelihoods) {
        std::vector<std::string> order;
        std::map<std::string, Probability> mass, likes;
        for (const auto& [cell, value] : prior) {
            order.push_back(cell.cast<std::string>());
            mass.emplace(order.back(), probability_from(value));
        }
        for (const auto& [cell, value] : likelihoods)
            likes.emplace(cell.cast<std::string>(), probability_from(value));
        const DiscreteDistribution posterior = update({SampleSpace(order), mass}, likes);
        py::dict out;
        for (const auto& cell : order) out[py::str(cell)] = to_fraction(posterior.mass(cell).value());
        return out;
    });

    m.def("convergence", [](py::object a, py::object b, const std::vector<int>& stream) {
        auto alpha_beta = [](py::object prior) {
            auto pair = prior.cast<std::pair<py::object, py::object>>();
            return BetaParams(rational_from(pair.first), rational_from(pair.second));
        };
        py::list out;
        for (const auto& [pa, pb] : convergence_demo(alpha_beta(a), alpha_beta(b), stream))
            out.append(py::make_tuple(to_fraction(pa.value()), to_fraction(pb.value())));
        return out;
    });
    m.def("embedded_stream", [] { return embedded_flip_stream(); });

    m.def("credence_to_odds", [](py::object p) {
        const Odds odds = credence_to_odds(probability_from(p));
        return py::make_tuple(py::int_(py::str(odds.against().str())),
                              py::int_(py::str(odds.for_part().str())));
    });
    m.def("odds_to_credence", [](py::object against, py::object for_part) {
        return to_fraction(odds_to_credence({rational_from(against), rational_from(for_part)}).value());
    });
    m.def("bet_payoff",
          [](const std::vector<std::string>& outcomes, const std::vector<std::string>& event,
             py::object quotient, py::object stake, const std::string& realized) {
              SampleSpace space(outcomes);
              BetOffer offer(space, space.event(event), probability_from(quotient),
                             rational_from(stake));
              return to_fraction(bet_payoff(offer, realized));
          });

    m.def("check_coherence",
          [](const std::vector<std::string>& outcomes, const py::list& assessments) {
              return verdict_dict(check_coherence(book_from(outcomes, assessments)));
          });
    m.def("verify_certificate",
          [](const std::vector<std::string>& outcomes, const py::list& assessments,
             const py::dict& verdict) {
              const CredenceBook book = book_from(outcomes, assessments);
              return verify_certificate(book, verdict_from(book, verdict));
          });

    m.def("published_table", [] { return table_dict(published_table()); });
    m.def("table_from_csv",
          [](const std::string& csv) { return table_dict(count_table(parse_cases_csv(csv))); });
    m.def("embedded_corpus_csv", [] { return cases_to_csv(embedded_corpus()); });
    m.def("posterior_table", [](const py::dict& table, const std::string& mode) {
        const PosteriorTable posterior = posterior_table(table_from(table), policy_from(mode));
        py::dict out;
        out["joint_pre"] = to_fraction(posterior.joint_pre.value());
        out["joint_post"] = to_fraction(posterior.joint_post.value());
        out["marginal_gov"] = to_fraction(posterior.marginal_gov.value());
        out["post_pre_given_gov"] = to_fraction(posterior.post_pre_given_gov.value());
        out["post_post_given_gov"] = to_fraction(posterior.post_post_given_gov.value());
        return out;
    });
    m.def("figure_svg", [](int which, const std::string& mode) {
        const FigureKind kind = which == 1   ? FigureKind::Prior
                                : which == 2 ? FigureKind::Joint
                                : which == 3 ? FigureKind::Posterior
                                             : throw ParseError("figure number must be 1, 2, or 3");
        return to_svg(make_figure(published_table(), policy_from(mode), kind));
    });

    m.def("aggregate_outcome",
          [](const py::list& ballots, const std::string& question, const std::string& rule) {
              return panel_dict(aggregate_outcome(ballots_from(ballots), question, rule_from(rule)));
          },
          py::arg("ballots"), py::arg("question"), py::arg("rule") = "mean");
    m.def("aggregate_issues",
          [](const py::list& ballots, const std::string& outcome_fn, const std::string& rule,
             const std::string& mode) {
              const VoteMode vote_mode = mode == "outcome" ? VoteMode::OutcomeVoting
                                         : mode == "issue"
                                             ? VoteMode::IssueVoting
                                             : throw ParseError("mode must be 'issue' or 'outcome'");
              return panel_dict(aggregate_issues(ballots_from(ballots),
                                                 OutcomeFunction::parse(outcome_fn),
                                                 rule_from(rule), vote_mode));
          },
          py::arg("ballots"), py::arg("outcome_fn"), py::arg("rule") = "mean",
          py::arg("mode") = "issue");
    m.def("binary_baseline", [](const py::list& ballots, const std::string& question) {
        return panel_dict(binary_baseline(ballots_from(ballots), question));
    });
}
