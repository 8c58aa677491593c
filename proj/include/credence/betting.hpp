#pragma once

#include "credence/probability.hpp"
#include "credence/space.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace credence {

/// Betting odds quoted against:for, reduced to lowest integer terms.
/// A credence of 1/3 quotes as 2:1 against. Certainties (p = 0 or 1) have no
/// finite odds and are rejected.
class Odds {
public:
    /// Both components must be positive; any rational pair canonicalizes to
    /// coprime integers (1/2 : 1/4 becomes 2 : 1).
    Odds(const Rational& against, const Rational& for_part);

    /// Parses "A:B" with rational components, e.g. "2:1" or "5/2:1".
    static Odds parse(std::string_view text);

    const Integer& against() const { return against_; }
    const Integer& for_part() const { return for_; }

    std::string str() const; // "2:1"

    friend bool operator==(const Odds&, const Odds&) = default;

private:
    Integer against_;
    Integer for_;
};

/// p -> (1-p):p in lowest terms. Throws CertaintyOddsError for p in {0, 1}.
Odds credence_to_odds(const Probability& p);

/// against:for -> for / (for + against). Exact inverse of credence_to_odds.
Probability odds_to_credence(const Odds& o);

/// A unit bet on an event: the buyer pays quotient × stake up front and
/// receives the stake if the event occurs.
struct BetOffer {
    SampleSpace space;
    Event event;
    Probability quotient;
    Rational stake; // strictly positive

    BetOffer(SampleSpace space, Event event, Probability quotient, Rational stake);
};

enum class Side { Buy, Sell };

/// A bought or sold bet inside a book. Selling negates the buyer payoff.
struct Position {
    BetOffer offer;
    Side side = Side::Buy;
};

inline Position buy(BetOffer offer) { return {std::move(offer), Side::Buy}; }
inline Position sell(BetOffer offer) { return {std::move(offer), Side::Sell}; }

/// Buyer's net payoff when `realized` occurs: stake·(1 − q) if the event
/// contains the outcome, −stake·q otherwise.
Rational bet_payoff(const BetOffer& bet, const std::string& realized);

Rational position_payoff(const Position& position, const std::string& realized);

/// Sum of position payoffs. All bets must share one sample space.
Rational book_payoff(const std::vector<Position>& book, const std::string& realized);

} // namespace credence
