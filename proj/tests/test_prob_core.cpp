#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "credence/bayes.hpp"
#include "credence/distribution.hpp"
#include "credence/errors.hpp"
#include "credence/probability.hpp"
#include "credence/rational.hpp"
#include "credence/space.hpp"

#include <map>
#include <random>

using namespace credence;

namespace {

Probability P(const char* text) { return Probability::from_string(text); }

} // namespace

TEST_CASE("probability validates its range") {
    CHECK(P("0").is_zero());
    CHECK(P("1").is_one());
    CHECK(P("1/3").value() == Rational(1, 3));
    CHECK(P("0.48").value() == Rational(12, 25));
    CHECK_THROWS_AS(Probability(Rational(3, 2)), StructuralError);
    CHECK_THROWS_AS(Probability(Rational(-1, 10)), StructuralError);
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational(".48") == Rational(12, 25));
    CHECK(parse_rational("2/6") == Rational(1, 3));
    CHECK(parse_rational("-1.5") == Rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);

    CHECK(fraction_string(Rational(28, 93)) == "28/93");
    CHECK(fraction_string(Rational(2)) == "2");
    CHECK(decimal_string(Rational(28, 93), 4) == "0.3011");
    CHECK(decimal_string(Rational(65, 93), 4) == "0.6989");
    CHECK(decimal_string(Rational(1, 3), 2, DecimalRounding::Truncate) == "0.33");
    CHECK(round_decimal(Rational(63, 625), 1) == Rational(1, 10));   // .1008 -> .1
    CHECK(round_decimal(Rational(117, 500), 1) == Rational(1, 5));   // .2340 -> .2
    CHECK(round_decimal(Rational(1, 4), 1) == Rational(3, 10));      // half rounds up
    CHECK(truncate_decimal(Rational(2, 3), 2) == Rational(66, 100));
    CHECK(significant_string(Rational(16240, 93), 6) == "174.624");
    CHECK(significant_string(Rational(1392, 5), 6) == "278.4");
    CHECK(published_style(Rational(12, 25), 2) == ".48");
    CHECK(published_style(Rational(1, 10), 1) == ".1");
    CHECK(published_style(Rational(1), 2) == "1.0");
}

TEST_CASE("sample space and events") {
    SampleSpace space({"a", "b", "c", "d"});
    CHECK(space.size() == 4);
    CHECK_THROWS_AS(SampleSpace({"a", "a"}), StructuralError);
    CHECK_THROWS_AS(SampleSpace(std::vector<std::string>{}), StructuralError);

    Event e = space.event({"b", "a", "b"});
    CHECK(e.members() == std::vector<std::string>{"a", "b"}); // sorted, deduplicated
    CHECK_THROWS_AS(space.event({"z"}), StructuralError);
    CHECK(space.complement(e).members() == std::vector<std::string>{"c", "d"});
}

TEST_CASE("distribution invariants") {
    SampleSpace space({"a", "b"});
    CHECK_THROWS_AS(DiscreteDistribution(space, {{"a", P("1/2")}, {"b", P("1/4")}}),
                    StructuralError);
    CHECK_THROWS_AS(DiscreteDistribution(space, {{"a", P("1")}}), StructuralError);
    DiscreteDistribution d(space, {{"a", P("1/2")}, {"b", P("1/2")}});
    CHECK(d.mass("a") == P("1/2"));
    CHECK_THROWS_AS(d.mass("z"), StructuralError);
}

TEST_CASE("event_probability") {
    SampleSpace abcd({"a", "b", "c", "d"});
    DiscreteDistribution uniform(abcd, {{"a", P("1/4")}, {"b", P("1/4")},
                                        {"c", P("1/4")}, {"d", P("1/4")}});
    CHECK(event_probability(uniform, abcd.event({"a", "b"})) == P("1/2"));
    CHECK(event_probability(uniform, Event(std::vector<std::string>{})) == P("0"));

    SampleSpace cells({"pre_gov", "pre_non", "post_gov", "post_non"});
    DiscreteDistribution counts(cells, {{"pre_gov", P("15/157")},
                                        {"pre_non", P("56/157")},
                                        {"post_gov", P("39/157")},
                                        {"post_non", P("47/157")}});
    CHECK(event_probability(counts, cells.event({"pre_gov", "pre_non"})) == P("71/157"));
    CHECK_THROWS_AS(event_probability(counts, Event({"elsewhere"})), StructuralError);
}

TEST_CASE("multiplication rule") {
    CHECK(multiply_rule(P(".48"), P(".21")) == P("0.1008"));
    CHECK(multiply_rule(P(".52"), P(".45")) == P("0.2340"));
    CHECK(multiply_rule(P("1"), P("28/93")) == P("28/93"));
}

TEST_CASE("addition rule") {
    CHECK(addition_rule({P("0.1008"), P("0.2340")}) == P("0.3348"));
    CHECK(addition_rule({P(".1"), P(".2")}) == P(".3"));
    CHECK(addition_rule({}) == P("0"));
    CHECK_THROWS_AS(addition_rule({P("0.7"), P("0.7")}), InvalidDecompositionError);
}

TEST_CASE("bayes posterior") {
    CHECK(bayes_posterior(P(".1"), P(".3")) == P("1/3"));
    CHECK(bayes_posterior(P(".2"), P(".3")) == P("2/3"));
    CHECK(bayes_posterior(P("0.1008"), P("0.3348")) == P("28/93"));
    CHECK_THROWS_AS(bayes_posterior(P(".1"), P("0")), NullEvidenceError);
    CHECK_THROWS_AS(bayes_posterior(P(".4"), P(".3")), InvalidDecompositionError);
}

TEST_CASE("update over a partition") {
    SampleSpace stages({"A", "C"});
    DiscreteDistribution prior(stages, {{"A", P(".48")}, {"C", P(".52")}});
    std::map<std::string, Probability> likelihoods{{"A", P(".21")}, {"C", P(".45")}};

    DiscreteDistribution posterior = update(prior, likelihoods);
    CHECK(posterior.mass("A") == P("28/93"));
    CHECK(posterior.mass("C") == P("65/93"));

    SUBCASE("degenerate prior is a fixed point") {
        DiscreteDistribution degenerate(stages, {{"A", P("1")}, {"C", P("0")}});
        DiscreteDistribution out = update(degenerate, likelihoods);
        CHECK(out.mass("A") == P("1"));
        CHECK(out.mass("C") == P("0"));
    }
    SUBCASE("uniform prior with equal likelihoods stays uniform") {
        DiscreteDistribution uniform(stages, {{"A", P("1/2")}, {"C", P("1/2")}});
        std::map<std::string, Probability> flat{{"A", P("1/3")}, {"C", P("1/3")}};
        CHECK(update(uniform, flat) == uniform);
    }
    SUBCASE("missing likelihood cell") {
        std::map<std::string, Probability> partial{{"A", P(".21")}};
        CHECK_THROWS_AS(update(prior, partial), StructuralError);
    }
    SUBCASE("unknown likelihood cell") {
        std::map<std::string, Probability> extra{{"A", P(".21")}, {"C", P(".45")},
                                                 {"Z", P(".5")}};
        CHECK_THROWS_AS(update(prior, extra), StructuralError);
    }
    SUBCASE("all-zero products") {
        std::map<std::string, Probability> zero{{"A", P("0")}, {"C", P("0")}};
        CHECK_THROWS_AS(update(prior, zero), NullEvidenceError);
    }
}

TEST_CASE("update is invariant under likelihood rescaling") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> numerator(0, 8);
    SampleSpace space({"x", "y", "z"});
    for (int trial = 0; trial < 200; ++trial) {
        // Random prior over 3 cells with denominator 16
        int a = numerator(rng), b = numerator(rng);
        if (a + b > 16) continue;
        DiscreteDistribution prior(space, {{"x", Probability(Rational(a, 16))},
                                           {"y", Probability(Rational(b, 16))},
                                           {"z", Probability(Rational(16 - a - b, 16))}});
        std::map<std::string, Probability> like{
            {"x", Probability(Rational(numerator(rng), 8))},
            {"y", Probability(Rational(numerator(rng), 8))},
            {"z", Probability(Rational(numerator(rng), 8))}};
        Rational total = 0;
        for (const auto& [cell, p] : like) total += prior.mass(cell).value() * p.value();
        if (total == 0) continue;

        // Scale all likelihoods by 1/4 (scaling up may leave [0,1]).
        std::map<std::string, Probability> scaled;
        for (const auto& [cell, p] : like)
            scaled.emplace(cell, Probability(p.value() / 4));
        CHECK(update(prior, like) == update(prior, scaled));
    }
}

TEST_CASE("rule-by-rule pipeline reproduces update on 2-cell partitions") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> numerator(0, 10);
    SampleSpace space({"A", "C"});
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Rational pa(numerator(rng), 10);
        Probability la(Rational(numerator(rng), 10)), lc(Rational(numerator(rng), 10));
        DiscreteDistribution prior(space, {{"A", Probability(pa)}, {"C", Probability(1 - pa)}});
        const Probability joint_a = multiply_rule(prior.mass("A"), la);
        const Probability joint_c = multiply_rule(prior.mass("C"), lc);
        const Probability marginal = addition_rule({joint_a, joint_c});
        if (marginal.is_zero()) continue;
        DiscreteDistribution updated =
            update(prior, {{"A", la}, {"C", lc}});
        CHECK(bayes_posterior(joint_a, marginal) == updated.mass("A"));
        CHECK(bayes_posterior(joint_c, marginal) == updated.mass("C"));
        ++checked;
    }
    CHECK(checked > 200);
}

TEST_CASE("published-rounding posteriors display as .33/.66 and sum to .99") {
    const Probability joint_pre{round_decimal(Rational(63, 625), 1)};
    const Probability joint_post{round_decimal(Rational(117, 500), 1)};
    const Probability marginal = addition_rule({joint_pre, joint_post});
    const Probability post_pre = bayes_posterior(joint_pre, marginal);
    const Probability post_post = bayes_posterior(joint_post, marginal);
    CHECK(post_pre == P("1/3"));
    CHECK(post_post == P("2/3"));
    CHECK(truncate_decimal(post_pre.value(), 2) == Rational(33, 100));
    CHECK(truncate_decimal(post_post.value(), 2) == Rational(66, 100));
    CHECK(truncate_decimal(post_pre.value(), 2) + truncate_decimal(post_post.value(), 2) ==
          Rational(99, 100));
}

TEST_CASE("beta-bernoulli convergence") {
    CHECK_THROWS_AS(BetaParams(Rational(0), Rational(1)), StructuralError);
    CHECK_THROWS_AS(BetaParams(Rational(1), Rational(-2)), StructuralError);
    CHECK_THROWS_AS(convergence_demo(BetaParams(1, 1), BetaParams(1, 1), {}), StructuralError);
    CHECK_THROWS_AS(convergence_demo(BetaParams(1, 1), BetaParams(1, 1), {0, 2}),
                    StructuralError);

    SUBCASE("hand-checked single observation") {
        auto steps = convergence_demo(BetaParams(2, 1), BetaParams(1, 2), {1});
        REQUIRE(steps.size() == 1);
        CHECK(steps[0].first == P("3/4"));
        CHECK(steps[0].second == P("1/2"));
    }
    SUBCASE("equal priors stay pointwise equal") {
        auto steps = convergence_demo(BetaParams(Rational(3, 2), Rational(1, 2)),
                                      BetaParams(Rational(3, 2), Rational(1, 2)),
                                      embedded_flip_stream());
        for (const auto& [a, b] : steps) CHECK(a == b);
    }
    SUBCASE("embedded stream endpoints, frozen from a conjugate-update oracle") {
        const auto& stream = embedded_flip_stream();
        REQUIRE(stream.size() == 100);
        auto steps = convergence_demo(BetaParams(1, 1), BetaParams(5, 1), stream);
        CHECK(steps.front().first == P("2/3"));
        CHECK(steps.front().second == P("6/7"));
        CHECK(steps.back().first == P("23/34"));
        CHECK(steps.back().second == P("73/106"));
        const Rational initial_diff = abs(Rational(1, 2) - Rational(5, 6));
        const Rational final_diff =
            abs(steps.back().first.value() - steps.back().second.value());
        CHECK(final_diff == Rational(11, 901));
        CHECK(final_diff < initial_diff);
    }
}
