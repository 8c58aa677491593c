#pragma once

#include "credence/distribution.hpp"
#include "credence/probability.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace credence {

/// Joint probability of two events from a prior and a conditional:
/// P(B, A) = P(A) · P(B|A). Exact.
Probability multiply_rule(const Probability& prior, const Probability& conditional);

/// Marginal probability as the sum of joint probabilities over a partition.
/// Throws InvalidDecompositionError when the sum exceeds 1.
Probability addition_rule(const std::vector<Probability>& joints);

/// P(A|B) = P(A, B) / P(B). Throws NullEvidenceError when the marginal is
/// zero and InvalidDecompositionError when the joint exceeds the marginal.
Probability bayes_posterior(const Probability& joint, const Probability& marginal);

/// Full Bayes update over a partition: posterior(cell) ∝ prior(cell) ·
/// likelihood(cell), renormalized. Every cell of the prior's space needs a
/// likelihood entry; all-zero products throw NullEvidenceError.
DiscreteDistribution update(const DiscreteDistribution& prior,
                            const std::map<std::string, Probability>& likelihoods);

/// Positive-parameter Beta prior for a Bernoulli success probability.
struct BetaParams {
    Rational alpha;
    Rational beta;

    BetaParams(Rational a, Rational b);

    /// Posterior predictive mean after `successes` out of `n` observations:
    /// (alpha + successes) / (alpha + beta + n).
    Probability predictive(const Integer& successes, const Integer& n) const;
};

/// Runs two agents' conjugate Beta-Bernoulli updates down a shared binary
/// observation stream and reports both posterior predictive probabilities
/// after each observation. With equal priors the two sequences coincide;
/// with different priors they drift together as evidence accumulates.
std::vector<std::pair<Probability, Probability>>
convergence_demo(const BetaParams& prior_a, const BetaParams& prior_b,
                 const std::vector<int>& stream);

/// The fixed 100-observation binary stream used as the default demo input.
const std::vector<int>& embedded_flip_stream();

} // namespace credence
