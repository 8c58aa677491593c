#include "credence/betting.hpp"

#include "credence/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace credence {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

} // namespace

Odds::Odds(const Rational& against, const Rational& for_part) {
    if (against <= 0 || for_part <= 0)
        throw StructuralError("odds components must be strictly positive");
    // Clear denominators, then divide out the gcd.
    Integer a = numerator(against) * denominator(for_part);
    Integer f = numerator(for_part) * denominator(against);
    Integer g = gcd(a, f);
    against_ = a / g;
    for_ = f / g;
}

Odds Odds::parse(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("odds must be written as A:B, got '" + std::string(text) + "'");
    Rational a = parse_rational(text.substr(0, colon));
    Rational f = parse_rational(text.substr(colon + 1));
    if (a <= 0 || f <= 0) throw ParseError("odds components must be positive");
    return {a, f};
}

std::string Odds::str() const {
    return against_.str() + ":" + for_.str();
}

Odds credence_to_odds(const Probability& p) {
    if (p.is_zero() || p.is_one())
        throw CertaintyOddsError("certainty " + fraction_string(p.value()) +
                                 " has no finite odds");
    return {1 - p.value(), p.value()};
}

Probability odds_to_credence(const Odds& o) {
    return Probability(Rational(o.for_part(), o.for_part() + o.against()));
}

BetOffer::BetOffer(SampleSpace space_in, Event event_in, Probability quotient_in,
                   Rational stake_in)
    : space(std::move(space_in)), event(std::move(event_in)),
      quotient(std::move(quotient_in)), stake(std::move(stake_in)) {
    space.require_event(event);
    if (stake <= 0) throw StructuralError("bet stake must be strictly positive");
}

Rational bet_payoff(const BetOffer& bet, const std::string& realized) {
    if (!bet.space.contains(realized))
        throw StructuralError("outcome '" + realized + "' not in the bet's sample space");
    if (bet.event.contains(realized)) return bet.stake * (1 - bet.quotient.value());
    return -bet.stake * bet.quotient.value();
}

Rational position_payoff(const Position& position, const std::string& realized) {
    Rational buyer = bet_payoff(position.offer, realized);
    return position.side == Side::Buy ? buyer : Rational(-buyer);
}

Rational book_payoff(const std::vector<Position>& book, const std::string& realized) {
    Rational total = 0;
    for (const auto& position : book) {
        if (position.offer.space != book.front().offer.space)
            throw StructuralError("book mixes bets over different sample spaces");
        total += position_payoff(position, realized);
    }
    return total;
}

} // namespace credence
