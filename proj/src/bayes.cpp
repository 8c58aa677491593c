#include "credence/bayes.hpp"

#include "credence/errors.hpp"

namespace credence {

Probability multiply_rule(const Probability& prior, const Probability& conditional) {
    return Probability(prior.value() * conditional.value());
}

Probability addition_rule(const std::vector<Probability>& joints) {
    Rational sum = 0;
    for (const auto& j : joints) sum += j.value();
    if (sum > 1)
        throw InvalidDecompositionError("joint probabilities sum to " + fraction_string(sum) +
                                        ", which exceeds 1");
    return Probability(sum);
}

Probability bayes_posterior(const Probability& joint, const Probability& marginal) {
    if (marginal.is_zero())
        throw NullEvidenceError("cannot condition on evidence of probability zero");
    if (joint.value() > marginal.value())
        throw InvalidDecompositionError("joint " + fraction_string(joint.value()) +
                                        " exceeds marginal " + fraction_string(marginal.value()));
    return Probability(joint.value() / marginal.value());
}

DiscreteDistribution update(const DiscreteDistribution& prior,
                            const std::map<std::string, Probability>& likelihoods) {
    const auto& outcomes = prior.space().outcomes();
    for (const auto& [cell, p] : likelihoods) {
        (void)p;
        if (!prior.space().contains(cell))
            throw StructuralError("likelihood references unknown cell '" + cell + "'");
    }
    std::vector<Rational> products;
    products.reserve(outcomes.size());
    Rational total = 0;
    for (const auto& cell : outcomes) {
        auto it = likelihoods.find(cell);
        if (it == likelihoods.end())
            throw StructuralError("missing likelihood for cell '" + cell + "'");
        products.push_back(prior.mass(cell).value() * it->second.value());
        total += products.back();
    }
    if (total == 0)
        throw NullEvidenceError("all prior-times-likelihood products are zero");
    std::vector<Probability> posterior;
    posterior.reserve(products.size());
    for (const auto& product : products) posterior.emplace_back(product / total);
    return {prior.space(), std::move(posterior)};
}

BetaParams::BetaParams(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha <= 0 || beta <= 0)
        throw StructuralError("Beta parameters must be strictly positive");
}

Probability BetaParams::predictive(const Integer& successes, const Integer& n) const {
    return Probability((alpha + successes) / (alpha + beta + n));
}

std::vector<std::pair<Probability, Probability>>
convergence_demo(const BetaParams& prior_a, const BetaParams& prior_b,
                 const std::vector<int>& stream) {
    if (stream.empty()) throw StructuralError("observation stream is empty");
    std::vector<std::pair<Probability, Probability>> steps;
    steps.reserve(stream.size());
    Integer successes = 0;
    Integer n = 0;
    for (int obs : stream) {
        if (obs != 0 && obs != 1)
            throw StructuralError("observations must be 0 or 1");
        successes += obs;
        ++n;
        steps.emplace_back(prior_a.predictive(successes, n), prior_b.predictive(successes, n));
    }
    return steps;
}

const std::vector<int>& embedded_flip_stream() {
    static const std::vector<int> stream = {
        1, 1, 0, 1, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 0,
        0, 1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1,
        1, 1, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1,
        1, 0, 0, 1, 0, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 0,
        1, 1, 1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1,
    };
    return stream;
}

} // namespace credence
