#pragma once

#include "credence/probability.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace credence {

/// A judge's credence in [0, 1]; 0.5 means undecided.
using Score = Probability;

/// One judge's scores, keyed by question id.
struct Ballot {
    std::string judge_id;
    std::map<std::string, Score> scores;

    Ballot(std::string judge_id, std::map<std::string, Score> scores);
};

/// Boolean composition of issue findings into a case outcome, e.g.
/// "I1 AND (I2 OR NOT I3)". Keywords are uppercase; everything else is an
/// issue id.
class OutcomeFunction {
public:
    struct Node; // expression tree, defined in voting.cpp

    static OutcomeFunction parse(std::string_view expression);

    static OutcomeFunction issue(std::string id);
    static OutcomeFunction negation(OutcomeFunction operand);
    static OutcomeFunction conjunction(OutcomeFunction lhs, OutcomeFunction rhs);
    static OutcomeFunction disjunction(OutcomeFunction lhs, OutcomeFunction rhs);

    /// Issue ids referenced, sorted and deduplicated.
    std::vector<std::string> issues() const;

    /// Evaluates against per-issue findings. Missing issues throw
    /// StructuralError.
    bool evaluate(const std::map<std::string, bool>& findings) const;

    std::string str() const;

private:
    explicit OutcomeFunction(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

enum class Decision { BurdenMet, BurdenNotMet };
enum class VoteMode { OutcomeVoting, IssueVoting };
enum class AggregationRule { Mean, Median };

/// Aggregated panel decision. The burden of persuasion is met only when the
/// governing aggregate strictly exceeds 1/2; an exact 1/2 leaves it unmet.
struct PanelResult {
    Score aggregate;
    std::map<std::string, Score> issue_aggregates; // filled in issue-voting mode
    Decision decision = Decision::BurdenNotMet;
    VoteMode mode = VoteMode::OutcomeVoting;
    AggregationRule rule = AggregationRule::Mean;
};

/// Mean or lower-median aggregation of one question's scores across the
/// panel, thresholded at 1/2.
PanelResult aggregate_outcome(const std::vector<Ballot>& ballots, const std::string& question,
                              AggregationRule rule = AggregationRule::Mean);

/// Issue-voting aggregates each issue across judges, thresholds each issue,
/// then composes the booleans through the outcome function. Outcome-voting
/// lets each judge threshold their own issue scores and compose a personal
/// outcome vote (0 or 1), then aggregates those votes. The two modes can
/// disagree on the same ballots (the doctrinal paradox).
PanelResult aggregate_issues(const std::vector<Ballot>& ballots, const OutcomeFunction& fn,
                             AggregationRule rule = AggregationRule::Mean,
                             VoteMode mode = VoteMode::IssueVoting);

/// The classical binary baseline: each score collapses to an up-or-down vote
/// at the 1/2 threshold and the majority decides; ties leave the burden
/// unmet. The aggregate reported is the fraction of yes votes.
PanelResult binary_baseline(const std::vector<Ballot>& ballots, const std::string& question);

/// Three-judge conjunction instance where issue-voting and outcome-voting
/// reach opposite decisions.
struct DoctrinalParadoxFixture {
    std::vector<Ballot> ballots;
    OutcomeFunction outcome_fn;
};

const DoctrinalParadoxFixture& doctrinal_paradox_fixture();

} // namespace credence
