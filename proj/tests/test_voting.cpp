#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credence/errors.hpp"
#include "credence/voting.hpp"

#include <random>

using namespace credence;

namespace {

Score S(const char* text) { return Score::from_string(text); }

std::vector<Ballot> single_question(const std::vector<const char*>& scores) {
    std::vector<Ballot> ballots;
    int i = 0;
    for (const char* text : scores)
        ballots.emplace_back("J" + std::to_string(++i),
                             std::map<std::string, Score>{{"Q", S(text)}});
    return ballots;
}

} // namespace

TEST_CASE("ballot invariants") {
    CHECK_THROWS_AS(Ballot("", {{"Q", S("1/2")}}), StructuralError);
    CHECK_THROWS_AS(Ballot("J1", {}), StructuralError);
}

TEST_CASE("outcome aggregation") {
    SUBCASE("mean of .9/.6/.3 meets the burden") {
        const PanelResult r = aggregate_outcome(single_question({".9", ".6", ".3"}), "Q");
        CHECK(r.aggregate == S("3/5"));
        CHECK(r.decision == Decision::BurdenMet);
    }
    SUBCASE("all-undecided panel leaves the burden unmet") {
        const PanelResult r = aggregate_outcome(single_question({".5", ".5", ".5"}), "Q");
        CHECK(r.aggregate == S("1/2"));
        CHECK(r.decision == Decision::BurdenNotMet);
    }
    SUBCASE("exact threshold boundary") {
        const PanelResult r = aggregate_outcome(single_question({"1", "0"}), "Q");
        CHECK(r.aggregate == S("1/2"));
        CHECK(r.decision == Decision::BurdenNotMet);
    }
    SUBCASE("lower median on even panels") {
        const PanelResult r =
            aggregate_outcome(single_question({".9", ".7", ".4", ".2"}), "Q",
                              AggregationRule::Median);
        CHECK(r.aggregate == S(".4"));
        CHECK(r.decision == Decision::BurdenNotMet);
    }
    SUBCASE("median on odd panels") {
        const PanelResult r =
            aggregate_outcome(single_question({".9", ".7", ".2"}), "Q", AggregationRule::Median);
        CHECK(r.aggregate == S(".7"));
        CHECK(r.decision == Decision::BurdenMet);
    }
    SUBCASE("missing question") {
        CHECK_THROWS_AS(aggregate_outcome(single_question({".9"}), "R"), StructuralError);
        CHECK_THROWS_AS(aggregate_outcome({}, "Q"), StructuralError);
    }
    SUBCASE("all-equal scores aggregate to themselves") {
        const PanelResult r = aggregate_outcome(single_question({".7", ".7", ".7"}), "Q");
        CHECK(r.aggregate == S(".7"));
    }
}

TEST_CASE("outcome function parsing and evaluation") {
    const OutcomeFunction fn = OutcomeFunction::parse("I1 AND (I2 OR NOT I3)");
    CHECK(fn.issues() == std::vector<std::string>{"I1", "I2", "I3"});
    CHECK(fn.evaluate({{"I1", true}, {"I2", false}, {"I3", false}}));
    CHECK_FALSE(fn.evaluate({{"I1", true}, {"I2", false}, {"I3", true}}));
    CHECK_FALSE(fn.evaluate({{"I1", false}, {"I2", true}, {"I3", false}}));
    CHECK(fn.str() == "(I1 AND (I2 OR NOT I3))");
    CHECK_THROWS_AS(fn.evaluate({{"I1", true}}), StructuralError);

    CHECK_THROWS_AS(OutcomeFunction::parse(""), ParseError);
    CHECK_THROWS_AS(OutcomeFunction::parse("I1 AND"), ParseError);
    CHECK_THROWS_AS(OutcomeFunction::parse("(I1"), ParseError);
    CHECK_THROWS_AS(OutcomeFunction::parse("I1 ? I2"), ParseError);
    CHECK_THROWS_AS(OutcomeFunction::parse("I1 I2"), ParseError);

    // NOT binds tighter than AND, AND tighter than OR.
    const OutcomeFunction prec = OutcomeFunction::parse("NOT A AND B OR C");
    CHECK(prec.str() == "((NOT A AND B) OR C)");
}

TEST_CASE("doctrinal paradox: the two modes disagree") {
    const auto& fixture = doctrinal_paradox_fixture();

    const PanelResult by_issue =
        aggregate_issues(fixture.ballots, fixture.outcome_fn, AggregationRule::Mean,
                         VoteMode::IssueVoting);
    CHECK(by_issue.issue_aggregates.at("I1") == S("2/3"));
    CHECK(by_issue.issue_aggregates.at("I2") == S("2/3"));
    CHECK(by_issue.decision == Decision::BurdenMet);

    const PanelResult by_outcome =
        aggregate_issues(fixture.ballots, fixture.outcome_fn, AggregationRule::Mean,
                         VoteMode::OutcomeVoting);
    CHECK(by_outcome.aggregate == S("1/3"));
    CHECK(by_outcome.decision == Decision::BurdenNotMet);
}

TEST_CASE("issue aggregation details") {
    SUBCASE("missing issue score") {
        std::vector<Ballot> ballots;
        ballots.emplace_back("J1", std::map<std::string, Score>{{"I1", S("1")}});
        CHECK_THROWS_AS(aggregate_issues(ballots, OutcomeFunction::parse("I1 AND I2")),
                        StructuralError);
    }
    SUBCASE("modes coincide for a single judge") {
        std::mt19937_64 rng(31);
        std::uniform_int_distribution<int> num(0, 4);
        const OutcomeFunction fn = OutcomeFunction::parse("I1 AND NOT I2 OR I3");
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Ballot> one;
            one.emplace_back("J1", std::map<std::string, Score>{
                                       {"I1", Score(Rational(num(rng), 4))},
                                       {"I2", Score(Rational(num(rng), 4))},
                                       {"I3", Score(Rational(num(rng), 4))}});
            const PanelResult a = aggregate_issues(one, fn, AggregationRule::Mean,
                                                   VoteMode::IssueVoting);
            const PanelResult b = aggregate_issues(one, fn, AggregationRule::Mean,
                                                   VoteMode::OutcomeVoting);
            CHECK(a.decision == b.decision);
        }
    }
    SUBCASE("unanimous panels agree across modes") {
        std::mt19937_64 rng(37);
        std::uniform_int_distribution<int> num(0, 4);
        const OutcomeFunction fn = OutcomeFunction::parse("(I1 OR I2) AND I3");
        for (int trial = 0; trial < 50; ++trial) {
            std::map<std::string, Score> shared{{"I1", Score(Rational(num(rng), 4))},
                                                {"I2", Score(Rational(num(rng), 4))},
                                                {"I3", Score(Rational(num(rng), 4))}};
            std::vector<Ballot> panel;
            for (int j = 1; j <= 5; ++j) panel.emplace_back("J" + std::to_string(j), shared);
            const PanelResult a = aggregate_issues(panel, fn, AggregationRule::Mean,
                                                   VoteMode::IssueVoting);
            const PanelResult b = aggregate_issues(panel, fn, AggregationRule::Mean,
                                                   VoteMode::OutcomeVoting);
            CHECK(a.decision == b.decision);
        }
    }
}

TEST_CASE("binary baseline") {
    SUBCASE("thresholding then majority") {
        const PanelResult r = binary_baseline(single_question({".51", ".51", "0"}), "Q");
        CHECK(r.aggregate == S("2/3"));
        CHECK(r.decision == Decision::BurdenMet);
        // The same scores under mean aggregation miss the burden: binary
        // voting discards how weak the two yes votes are.
        const PanelResult mean = aggregate_outcome(single_question({".51", ".51", "0"}), "Q");
        CHECK(mean.aggregate == S("0.34"));
        CHECK(mean.decision == Decision::BurdenNotMet);
    }
    SUBCASE("a lone undecided judge") {
        const PanelResult r = binary_baseline(single_question({".5"}), "Q");
        CHECK(r.decision == Decision::BurdenNotMet);
    }
    SUBCASE("exact ties fail the burden") {
        const PanelResult r = binary_baseline(single_question({".9", ".1"}), "Q");
        CHECK(r.aggregate == S("1/2"));
        CHECK(r.decision == Decision::BurdenNotMet);
    }
}

TEST_CASE("for one judge every route gives the same decision") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> num(0, 8);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Ballot> one;
        one.emplace_back("J1", std::map<std::string, Score>{{"Q", Score(Rational(num(rng), 8))}});
        const Decision d1 = aggregate_outcome(one, "Q").decision;
        const Decision d2 = aggregate_outcome(one, "Q", AggregationRule::Median).decision;
        const Decision d3 = binary_baseline(one, "Q").decision;
        const Decision d4 =
            aggregate_issues(one, OutcomeFunction::parse("Q"), AggregationRule::Mean,
                             VoteMode::IssueVoting)
                .decision;
        const Decision d5 =
            aggregate_issues(one, OutcomeFunction::parse("Q"), AggregationRule::Mean,
                             VoteMode::OutcomeVoting)
                .decision;
        CHECK(d1 == d2);
        CHECK(d1 == d3);
        CHECK(d1 == d4);
        CHECK(d1 == d5);
    }
}

TEST_CASE("raising one score never flips the burden off") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> num(0, 16);
    std::uniform_int_distribution<int> panel_size(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = panel_size(rng);
        std::vector<int> raw;
        std::vector<Ballot> ballots;
        for (int j = 0; j < n; ++j) {
            raw.push_back(num(rng));
            ballots.emplace_back("J" + std::to_string(j),
                                 std::map<std::string, Score>{
                                     {"Q", Score(Rational(raw.back(), 16))}});
        }
        const Decision before = aggregate_outcome(ballots, "Q").decision;
        // Raise one judge's score.
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int target = pick(rng);
        if (raw[target] == 16) continue;
        std::uniform_int_distribution<int> bump(raw[target] + 1, 16);
        ballots[target] = Ballot("J" + std::to_string(target),
                                 {{"Q", Score(Rational(bump(rng), 16))}});
        const Decision after = aggregate_outcome(ballots, "Q").decision;
        if (before == Decision::BurdenMet) CHECK(after == Decision::BurdenMet);
    }
}

TEST_CASE("permutation invariance of mean aggregation") {
    std::vector<Ballot> a = single_question({".9", ".2", ".7"});
    std::vector<Ballot> b = single_question({".7", ".9", ".2"});
    CHECK(aggregate_outcome(a, "Q").aggregate == aggregate_outcome(b, "Q").aggregate);
}
