#pragma once

#include "credence/probability.hpp"
#include "credence/space.hpp"

#include <map>
#include <string>
#include <vector>

namespace credence {

/// Exact mode computes with full rationals end to end. Published mode mirrors
/// the presentation of the source tables: joint probabilities are rounded to
/// one decimal place (half up) before the marginal and posterior stages.
enum class RoundingPolicy { Exact, Published };

/// Probability mass over a finite sample space. Every outcome carries an
/// entry and the masses sum to exactly 1; both are enforced at construction.
class DiscreteDistribution {
public:
    DiscreteDistribution(SampleSpace space, const std::map<std::string, Probability>& mass);
    DiscreteDistribution(SampleSpace space, std::vector<Probability> mass_by_outcome);

    const SampleSpace& space() const { return space_; }
    const Probability& mass(const std::string& outcome) const;
    const std::vector<Probability>& masses() const { return mass_; }

    friend bool operator==(const DiscreteDistribution&, const DiscreteDistribution&) = default;

private:
    void validate() const;

    SampleSpace space_;
    std::vector<Probability> mass_; // aligned with space_.outcomes()
};

/// Σ mass over the event's members; exact. The event must lie in the
/// distribution's space.
Probability event_probability(const DiscreteDistribution& dist, const Event& e);

} // namespace credence
