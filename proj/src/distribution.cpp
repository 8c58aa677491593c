#include "credence/distribution.hpp"

#include "credence/errors.hpp"

namespace credence {

DiscreteDistribution::DiscreteDistribution(SampleSpace space,
                                           const std::map<std::string, Probability>& mass)
    : space_(std::move(space)) {
    mass_.reserve(space_.size());
    for (const auto& outcome : space_.outcomes()) {
        auto it = mass.find(outcome);
        if (it == mass.end())
            throw StructuralError("distribution missing mass for outcome '" + outcome + "'");
        mass_.push_back(it->second);
    }
    if (mass.size() != space_.size())
        throw StructuralError("distribution assigns mass to outcomes outside its space");
    validate();
}

DiscreteDistribution::DiscreteDistribution(SampleSpace space,
                                           std::vector<Probability> mass_by_outcome)
    : space_(std::move(space)), mass_(std::move(mass_by_outcome)) {
    if (mass_.size() != space_.size())
        throw StructuralError("distribution mass vector does not match the space size");
    validate();
}

void DiscreteDistribution::validate() const {
    Rational sum = 0;
    for (const auto& p : mass_) sum += p.value();
    if (sum != 1)
        throw StructuralError("distribution mass sums to " + fraction_string(sum) +
                              ", expected exactly 1");
}

const Probability& DiscreteDistribution::mass(const std::string& outcome) const {
    auto idx = space_.index_of(outcome);
    if (!idx) throw StructuralError("outcome '" + outcome + "' not in the sample space");
    return mass_[*idx];
}

Probability event_probability(const DiscreteDistribution& dist, const Event& e) {
    dist.space().require_event(e);
    Rational sum = 0;
    for (const auto& label : e.members()) sum += dist.mass(label).value();
    return Probability(sum);
}

} // namespace credence
