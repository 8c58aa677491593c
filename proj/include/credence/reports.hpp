#pragma once

#include "credence/bayes.hpp"
#include "credence/coherence.hpp"
#include "credence/litigation.hpp"
#include "credence/voting.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace credence {

/// Both litigation tables rendered as fixed-width text. Published mode prints
/// the table style of the source (.48, .1, .33); exact mode prints fractions
/// with 4-decimal companions. Byte-stable for identical input.
std::string tables_text(RoundingPolicy policy);

/// "fraction (decimal)" pair, e.g. "28/93 (0.3011)".
std::string value_text(const Rational& r);

std::string update_report(const DiscreteDistribution& posterior);

std::string coherence_report(const CoherenceVerdict& verdict);

std::string panel_report(const PanelResult& result,
                         const std::optional<PanelResult>& baseline = std::nullopt);

std::string convergence_report(const BetaParams& prior_a, const BetaParams& prior_b,
                               const std::vector<std::pair<Probability, Probability>>& steps,
                               const std::vector<int>& stream);

} // namespace credence
