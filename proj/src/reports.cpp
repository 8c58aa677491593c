#include "credence/reports.hpp"

#include <algorithm>
#include <cstddef>

namespace credence {

namespace {

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string event_text(const Event& e) {
    std::string out = "{";
    bool first = true;
    for (const auto& label : e.members()) {
        if (!first) out += ", ";
        out += label;
        first = false;
    }
    return out + "}";
}

std::string decision_text(Decision d) {
    return d == Decision::BurdenMet ? "burden met" : "burden not met";
}

} // namespace

std::string value_text(const Rational& r) {
    return fraction_string(r) + " (" + decimal_string(r, 4) + ")";
}

std::string tables_text(RoundingPolicy policy) {
    const StageTable table = published_table();
    const PosteriorTable posterior = posterior_table(table, policy);
    const bool published = policy == RoundingPolicy::Published;

    auto prior_cell = [&](const Probability& p) {
        return published ? published_style(p.value(), 2) : value_text(p.value());
    };
    auto joint_cell = [&](const Probability& p) {
        return published ? published_style(p.value(), 1) : value_text(p.value());
    };
    auto posterior_cell = [&](const Probability& p) {
        return published ? published_style(truncate_decimal(p.value(), 2), 2)
                         : value_text(p.value());
    };

    std::string out;
    out += "Prior probabilities (published values)\n";
    out += pad("event", 17) + pad("P(event)", 20) + "P(gov | event)\n";
    out += pad("pre-trial", 17) + pad(prior_cell(table.prior_pre), 20) +
           prior_cell(table.cond_gov_given_pre) + "\n";
    out += pad("trial-or-post", 17) + pad(prior_cell(table.prior_post), 20) +
           prior_cell(table.cond_gov_given_post) + "\n";
    out += pad("sum", 17) +
           (published
                ? published_style(table.prior_pre.value() + table.prior_post.value(), 2)
                : fraction_string(table.prior_pre.value() + table.prior_post.value())) +
           "\n";
    out += "\n";
    out += published ? "Posterior probabilities (published one-decimal rounding)\n"
                     : "Posterior probabilities (exact)\n";
    out += pad("event", 17) + pad("P(event, gov)", 20) + "P(event | gov)\n";
    out += pad("pre-trial", 17) + pad(joint_cell(posterior.joint_pre), 20) +
           posterior_cell(posterior.post_pre_given_gov) + "\n";
    out += pad("trial-or-post", 17) + pad(joint_cell(posterior.joint_post), 20) +
           posterior_cell(posterior.post_post_given_gov) + "\n";
    const Rational display_posterior_sum =
        published ? truncate_decimal(posterior.post_pre_given_gov.value(), 2) +
                        truncate_decimal(posterior.post_post_given_gov.value(), 2)
                  : posterior.post_pre_given_gov.value() + posterior.post_post_given_gov.value();
    out += pad("sum", 17) + pad(joint_cell(posterior.marginal_gov), 20) +
           (published ? published_style(display_posterior_sum, 2)
                      : fraction_string(display_posterior_sum)) +
           "\n";
    return out;
}

std::string update_report(const DiscreteDistribution& posterior) {
    std::string out = "posterior:\n";
    std::size_t label_width = 0;
    for (const auto& outcome : posterior.space().outcomes())
        label_width = std::max(label_width, outcome.size());
    for (const auto& outcome : posterior.space().outcomes())
        out += "  " + pad(outcome, label_width + 2) + value_text(posterior.mass(outcome).value()) +
               "\n";
    return out;
}

std::string coherence_report(const CoherenceVerdict& verdict) {
    std::string out;
    if (const auto* coherent = std::get_if<Coherent>(&verdict)) {
        out += "COHERENT: the book extends to a probability measure\n";
        out += "witness:\n";
        const auto& witness = coherent->witness;
        std::size_t label_width = 0;
        for (const auto& outcome : witness.space().outcomes())
            label_width = std::max(label_width, outcome.size());
        for (const auto& outcome : witness.space().outcomes())
            out += "  " + pad(outcome, label_width + 2) +
                   value_text(witness.mass(outcome).value()) + "\n";
        return out;
    }
    const auto& dutch = std::get<Incoherent>(verdict);
    out += "INCOHERENT: a Dutch book guarantees a sure loss\n";
    out += "stakes (positive buys at the quoted price, negative sells):\n";
    std::size_t label_width = 0;
    for (const auto& [event, stake] : dutch.stakes)
        label_width = std::max(label_width, event_text(event).size());
    for (const auto& [event, stake] : dutch.stakes) {
        std::string amount = fraction_string(stake);
        if (stake > 0) amount.insert(amount.begin(), '+');
        out += "  " + pad(event_text(event), label_width + 2) + amount + "\n";
    }
    out += "guaranteed loss: " + value_text(dutch.guaranteed_loss) + "\n";
    return out;
}

std::string panel_report(const PanelResult& result, const std::optional<PanelResult>& baseline) {
    std::string out;
    out += std::string("rule: ") + (result.rule == AggregationRule::Mean ? "mean" : "median") +
           "\n";
    if (!result.issue_aggregates.empty()) {
        out += "issue aggregates:\n";
        std::size_t label_width = 0;
        for (const auto& [issue, score] : result.issue_aggregates)
            label_width = std::max(label_width, issue.size());
        for (const auto& [issue, score] : result.issue_aggregates)
            out += "  " + pad(issue, label_width + 2) + value_text(score.value()) +
                   (score.value() > Rational(1, 2) ? "  -> established" : "  -> not established") +
                   "\n";
    }
    out += "mode: " +
           std::string(result.mode == VoteMode::IssueVoting ? "issue-voting" : "outcome-voting") +
           "\n";
    out += "aggregate: " + value_text(result.aggregate.value()) + "\n";
    out += "decision: " + decision_text(result.decision) + "\n";
    if (baseline) {
        out += "binary baseline: " + value_text(baseline->aggregate.value()) +
               " yes fraction -> " + decision_text(baseline->decision) + "\n";
    }
    return out;
}

std::string convergence_report(const BetaParams& prior_a, const BetaParams& prior_b,
                               const std::vector<std::pair<Probability, Probability>>& steps,
                               const std::vector<int>& stream) {
    auto row = [](std::string step, std::string obs, std::string a, std::string b,
                  std::string diff) {
        return pad(std::move(step), 6) + pad(std::move(obs), 5) + pad(std::move(a), 22) +
               pad(std::move(b), 22) + diff + "\n";
    };
    std::string out;
    out += "agent A prior: Beta(" + fraction_string(prior_a.alpha) + ", " +
           fraction_string(prior_a.beta) + ")   agent B prior: Beta(" +
           fraction_string(prior_b.alpha) + ", " + fraction_string(prior_b.beta) + ")\n";
    out += row("step", "obs", "P_A(next success)", "P_B(next success)", "|difference|");
    const Probability initial_a = prior_a.predictive(0, 0);
    const Probability initial_b = prior_b.predictive(0, 0);
    out += row("0", "-", value_text(initial_a.value()), value_text(initial_b.value()),
               value_text(abs(initial_a.value() - initial_b.value())));
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& [a, b] = steps[i];
        out += row(std::to_string(i + 1), std::to_string(stream[i]), value_text(a.value()),
                   value_text(b.value()), value_text(abs(a.value() - b.value())));
    }
    return out;
}

} // namespace credence
