#pragma once

#include "credence/coherence.hpp"
#include "credence/distribution.hpp"
#include "credence/voting.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace credence {

/// Credence book document:
///   {"outcomes": ["e", "not_e"],
///    "assessments": [{"event": ["e"], "quotient": "3/5"}, ...]}
/// Quotients are exact strings ("num/den" or finite decimals) or integers.
CredenceBook parse_book_json(std::string_view text);

/// Ballot document: a top-level array, one ballot per entry:
///   [{"judge": "J1", "scores": {"I1": "2/3", "I2": "0.5"}}, ...]
std::vector<Ballot> parse_ballots_json(std::string_view text);

/// Distribution document: an object mapping outcomes to masses, in space
/// order: {"A": "0.48", "C": "0.52"}.
DiscreteDistribution parse_distribution_json(std::string_view text);

/// Likelihood document: same shape as a distribution but the values need not
/// sum to 1. Returns cells in document order alongside the lookup map.
std::pair<std::vector<std::string>, std::map<std::string, Probability>>
parse_likelihood_json(std::string_view text);

/// Whitespace-separated 0/1 tokens.
std::vector<int> parse_stream_text(std::string_view text);

} // namespace credence
