#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credence/errors.hpp"
#include "credence/formats.hpp"

using namespace credence;

TEST_CASE("book documents") {
    const CredenceBook book = parse_book_json(R"({
        "outcomes": ["e", "not_e"],
        "assessments": [
            {"event": ["e"], "quotient": "3/5"},
            {"event": ["not_e"], "quotient": "0.4"}
        ]
    })");
    CHECK(book.space().outcomes() == std::vector<std::string>{"e", "not_e"});
    REQUIRE(book.assessments().size() == 2);
    CHECK(book.assessments()[0].quotient == Probability(3, 5));
    CHECK(book.assessments()[1].quotient == Probability(2, 5));

    CHECK_THROWS_AS(parse_book_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_book_json("{}"), ParseError);
    CHECK_THROWS_AS(parse_book_json(R"({"outcomes": ["e"], "assessments": [{}]})"), ParseError);
    // Floating-point literals are refused: 0.6 the double is not 3/5.
    CHECK_THROWS_AS(parse_book_json(R"({
        "outcomes": ["e"],
        "assessments": [{"event": ["e"], "quotient": 0.6}]
    })"),
                    ParseError);
    // Events outside the space are structural errors from the space layer.
    CHECK_THROWS_AS(parse_book_json(R"({
        "outcomes": ["e"],
        "assessments": [{"event": ["zzz"], "quotient": "1/2"}]
    })"),
                    StructuralError);
}

TEST_CASE("ballot documents") {
    const auto ballots = parse_ballots_json(R"([
        {"judge": "J1", "scores": {"I1": "2/3", "I2": 1}},
        {"judge": "J2", "scores": {"I1": "0.25", "I2": 0}}
    ])");
    REQUIRE(ballots.size() == 2);
    CHECK(ballots[0].judge_id == "J1");
    CHECK(ballots[0].scores.at("I1") == Probability(2, 3));
    CHECK(ballots[1].scores.at("I1") == Probability(1, 4));

    CHECK_THROWS_AS(parse_ballots_json("{}"), ParseError);
    CHECK_THROWS_AS(parse_ballots_json("[]"), ParseError);
    CHECK_THROWS_AS(parse_ballots_json(R"([{"judge": "J1"}])"), ParseError);
    CHECK_THROWS_AS(parse_ballots_json(R"([{"judge": "J1", "scores": {"I1": 0.5}}])"),
                    ParseError);
}

TEST_CASE("distribution and likelihood documents") {
    const DiscreteDistribution prior = parse_distribution_json(R"({"A": "0.48", "C": "0.52"})");
    CHECK(prior.space().outcomes() == std::vector<std::string>{"A", "C"}); // document order
    CHECK(prior.mass("A") == Probability(12, 25));

    CHECK_THROWS_AS(parse_distribution_json(R"({"A": "0.5", "C": "0.6"})"), StructuralError);
    CHECK_THROWS_AS(parse_distribution_json(R"({})"), ParseError);
    CHECK_THROWS_AS(parse_distribution_json(R"([1, 2])"), ParseError);

    auto [order, cells] = parse_likelihood_json(R"({"A": "0.21", "C": "0.45"})");
    CHECK(order == std::vector<std::string>{"A", "C"});
    CHECK(cells.at("C") == Probability(9, 20));
}

TEST_CASE("stream documents") {
    CHECK(parse_stream_text("1 0 1\n1\n") == std::vector<int>{1, 0, 1, 1});
    CHECK_THROWS_AS(parse_stream_text("1 2 1"), ParseError);
    CHECK_THROWS_AS(parse_stream_text("   "), ParseError);
}
