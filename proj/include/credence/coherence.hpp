#pragma once

#include "credence/distribution.hpp"
#include "credence/probability.hpp"
#include "credence/space.hpp"

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

namespace credence {

/// One priced event: the agent buys or sells a unit bet on `event` at
/// `quotient` per unit stake.
struct Assessment {
    Event event;
    Probability quotient;

    friend bool operator==(const Assessment&, const Assessment&) = default;
};

/// A finite set of betting quotients to be checked for coherence. Events must
/// lie inside the space; exact duplicate events must agree on their quotient
/// (they are collapsed) and conflicting duplicates are rejected.
class CredenceBook {
public:
    CredenceBook(SampleSpace space, std::vector<Assessment> assessments);

    const SampleSpace& space() const { return space_; }
    const std::vector<Assessment>& assessments() const { return assessments_; }

    /// Quotient assessed for an event, if any.
    const Probability* quotient_for(const Event& e) const;

private:
    SampleSpace space_;
    std::vector<Assessment> assessments_;
};

/// The book extends to a probability measure; `witness` is one such measure
/// and assigns exactly the assessed quotient to every assessed event.
struct Coherent {
    DiscreteDistribution witness;
};

/// The book admits a Dutch book: placing `stakes` (positive = the agent buys
/// at its own quotient, negative = sells) loses the agent at least
/// `guaranteed_loss` on every outcome of the space.
struct Incoherent {
    std::vector<std::pair<Event, Rational>> stakes;
    Rational guaranteed_loss;
};

using CoherenceVerdict = std::variant<Coherent, Incoherent>;

inline bool is_coherent(const CoherenceVerdict& v) {
    return std::holds_alternative<Coherent>(v);
}

/// Documented scale caps; exact elimination degrades combinatorially past
/// desk scale.
inline constexpr std::size_t kMaxOutcomes = 16;
inline constexpr std::size_t kMaxAssessments = 32;

/// Decides coherence by exact linear feasibility over outcome masses
/// p_ω ≥ 0 with Σ p_ω = 1 and Σ_{ω∈E} p_ω = q(E) for every assessment.
/// Throws CapacityError past the scale caps. Deterministic.
CoherenceVerdict check_coherence(const CredenceBook& book);

/// Re-derives the verdict's guarantee from first principles: a Coherent
/// witness is checked against every assessment exactly; Incoherent stakes are
/// priced on every outcome of the space and must lose at least
/// guaranteed_loss everywhere. Returns false on any violation.
bool verify_certificate(const CredenceBook& book, const CoherenceVerdict& verdict);

} // namespace credence
