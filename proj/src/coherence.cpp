#include "credence/coherence.hpp"

#include "credence/betting.hpp"
#include "credence/errors.hpp"
#include "credence/linear_feasibility.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>

namespace credence {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

/// Scales a Farkas row vector so the assessment stakes become coprime
/// integers; purely cosmetic, the certificate stays valid under any positive
/// scaling.
void scale_to_primitive(std::vector<Rational>& values, Rational& loss) {
    Integer lcm_den = 1, gcd_num = 0;
    for (const auto& v : values) {
        if (v == 0) continue;
        lcm_den = lcm(lcm_den, denominator(v));
        gcd_num = gcd(gcd_num, numerator(v));
    }
    if (gcd_num == 0) return;
    const Rational factor(lcm_den, gcd_num);
    for (auto& v : values) v *= factor;
    loss *= factor;
}

} // namespace

CredenceBook::CredenceBook(SampleSpace space, std::vector<Assessment> assessments)
    : space_(std::move(space)) {
    std::map<Event, Probability> seen;
    for (auto& a : assessments) {
        space_.require_event(a.event);
        auto [it, inserted] = seen.emplace(a.event, a.quotient);
        if (inserted) {
            assessments_.push_back(std::move(a));
        } else if (it->second != a.quotient) {
            throw StructuralError("event assessed twice with different quotients (" +
                                  fraction_string(it->second.value()) + " vs " +
                                  fraction_string(a.quotient.value()) + ")");
        }
    }
}

const Probability* CredenceBook::quotient_for(const Event& e) const {
    for (const auto& a : assessments_)
        if (a.event == e) return &a.quotient;
    return nullptr;
}

CoherenceVerdict check_coherence(const CredenceBook& book) {
    const auto& space = book.space();
    const auto& assessments = book.assessments();
    if (space.size() > kMaxOutcomes)
        throw CapacityError("sample space exceeds the documented cap of " +
                            std::to_string(kMaxOutcomes) + " outcomes");
    if (assessments.size() > kMaxAssessments)
        throw CapacityError("book exceeds the documented cap of " +
                            std::to_string(kMaxAssessments) + " assessments");

    const std::size_t n = space.size();
    const std::size_t m = assessments.size() + 1;

    std::vector<std::vector<Rational>> A(m, std::vector<Rational>(n, 0));
    std::vector<Rational> b(m);
    for (std::size_t j = 0; j < n; ++j) A[0][j] = 1; // Σ p_ω = 1
    b[0] = 1;
    for (std::size_t i = 0; i < assessments.size(); ++i) {
        for (const auto& label : assessments[i].event.members())
            A[i + 1][*space.index_of(label)] = 1;
        b[i + 1] = assessments[i].quotient.value();
    }

    FeasibilityResult result = solve_nonnegative_system(A, b);

    if (result.feasible) {
        std::vector<Probability> mass;
        mass.reserve(n);
        for (const auto& v : result.point) mass.emplace_back(v);
        return Coherent{DiscreteDistribution(space, std::move(mass))};
    }

    // Farkas row y: yᵀA ≤ 0, yᵀb > 0. The agent's payoff from staking the
    // assessment components of y is yᵀA(ω) − yᵀb ≤ −yᵀb < 0 on every outcome
    // (the normalization component cancels), so those components are a Dutch
    // book with guaranteed loss yᵀb.
    Rational loss = 0;
    for (std::size_t i = 0; i < m; ++i) loss += result.farkas[i] * b[i];
    std::vector<Rational> stake_values(result.farkas.begin() + 1, result.farkas.end());
    scale_to_primitive(stake_values, loss);

    Incoherent dutch;
    dutch.guaranteed_loss = loss;
    for (std::size_t i = 0; i < assessments.size(); ++i)
        if (stake_values[i] != 0) dutch.stakes.emplace_back(assessments[i].event, stake_values[i]);
    return dutch;
}

bool verify_certificate(const CredenceBook& book, const CoherenceVerdict& verdict) {
    if (const auto* coherent = std::get_if<Coherent>(&verdict)) {
        const auto& witness = coherent->witness;
        if (witness.space() != book.space()) return false;
        for (const auto& a : book.assessments())
            if (event_probability(witness, a.event) != a.quotient) return false;
        return true;
    }

    const auto& dutch = std::get<Incoherent>(verdict);
    if (dutch.guaranteed_loss <= 0) return false;
    if (dutch.stakes.empty()) return false;

    std::vector<Position> positions;
    try {
        for (const auto& [event, stake] : dutch.stakes) {
            if (stake == 0) return false;
            const Probability* quotient = book.quotient_for(event);
            if (!quotient) return false; // stake on an event the book never priced
            positions.push_back({BetOffer(book.space(), event, *quotient, abs(stake)),
                                 stake > 0 ? Side::Buy : Side::Sell});
        }
        for (const auto& outcome : book.space().outcomes())
            if (book_payoff(positions, outcome) > -dutch.guaranteed_loss) return false;
    } catch (const Error&) {
        return false;
    }
    return true;
}

} // namespace credence
