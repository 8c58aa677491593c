#include "credence/formats.hpp"

#include "credence/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace credence {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(std::string_view text, const char* what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string(what) + ": " + e.what());
    }
}

/// Exact value from a JSON leaf: strings parse as rationals, integers embed
/// directly. Floating-point JSON numbers are rejected; binary doubles rarely
/// mean the decimal the author wrote.
Rational exact_value(const ordered_json& node, const std::string& context) {
    if (node.is_string()) return parse_rational(node.get<std::string>());
    if (node.is_number_integer()) return Rational(node.get<long long>());
    if (node.is_number_float())
        throw ParseError(context + ": floating-point literals are inexact; quote the value "
                                   "as a string like \"0.48\" or \"12/25\"");
    throw ParseError(context + ": expected a number string");
}

} // namespace

CredenceBook parse_book_json(std::string_view text) {
    const ordered_json doc = parse_json(text, "book");
    if (!doc.is_object() || !doc.contains("outcomes") || !doc.contains("assessments"))
        throw ParseError("book: expected an object with 'outcomes' and 'assessments'");
    if (!doc["outcomes"].is_array())
        throw ParseError("book: 'outcomes' must be an array of labels");
    std::vector<std::string> outcomes;
    for (const auto& label : doc["outcomes"]) {
        if (!label.is_string()) throw ParseError("book: outcome labels must be strings");
        outcomes.push_back(label.get<std::string>());
    }
    SampleSpace space(std::move(outcomes));

    if (!doc["assessments"].is_array())
        throw ParseError("book: 'assessments' must be an array");
    std::vector<Assessment> assessments;
    for (const auto& entry : doc["assessments"]) {
        if (!entry.is_object() || !entry.contains("event") || !entry.contains("quotient"))
            throw ParseError("book: each assessment needs 'event' and 'quotient'");
        if (!entry["event"].is_array())
            throw ParseError("book: assessment 'event' must be an array of labels");
        std::vector<std::string> members;
        for (const auto& label : entry["event"]) {
            if (!label.is_string()) throw ParseError("book: event labels must be strings");
            members.push_back(label.get<std::string>());
        }
        Probability quotient{exact_value(entry["quotient"], "book quotient")};
        assessments.push_back({space.event(std::move(members)), std::move(quotient)});
    }
    return {std::move(space), std::move(assessments)};
}

std::vector<Ballot> parse_ballots_json(std::string_view text) {
    const ordered_json doc = parse_json(text, "ballots");
    if (!doc.is_array()) throw ParseError("ballots: expected a top-level array");
    if (doc.empty()) throw ParseError("ballots: no entries");
    std::vector<Ballot> ballots;
    for (const auto& entry : doc) {
        if (!entry.is_object() || !entry.contains("judge") || !entry.contains("scores"))
            throw ParseError("ballots: each entry needs 'judge' and 'scores'");
        if (!entry["judge"].is_string()) throw ParseError("ballots: 'judge' must be a string");
        if (!entry["scores"].is_object())
            throw ParseError("ballots: 'scores' must be an object of question -> value");
        std::map<std::string, Score> scores;
        for (const auto& [question, value] : entry["scores"].items())
            scores.emplace(question, Score(exact_value(value, "score for '" + question + "'")));
        ballots.emplace_back(entry["judge"].get<std::string>(), std::move(scores));
    }
    return ballots;
}

namespace {

std::pair<std::vector<std::string>, std::map<std::string, Probability>>
parse_cells(std::string_view text, const char* what) {
    const ordered_json doc = parse_json(text, what);
    if (!doc.is_object() || doc.empty())
        throw ParseError(std::string(what) + ": expected a nonempty object of cell -> value");
    std::vector<std::string> order;
    std::map<std::string, Probability> cells;
    for (const auto& [cell, value] : doc.items()) {
        order.push_back(cell);
        cells.emplace(cell, Probability(exact_value(value, std::string(what) + " cell '" + cell + "'")));
    }
    return {std::move(order), std::move(cells)};
}

} // namespace

DiscreteDistribution parse_distribution_json(std::string_view text) {
    auto [order, cells] = parse_cells(text, "distribution");
    return {SampleSpace(std::move(order)), cells};
}

std::pair<std::vector<std::string>, std::map<std::string, Probability>>
parse_likelihood_json(std::string_view text) {
    return parse_cells(text, "likelihood");
}

std::vector<int> parse_stream_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> stream;
    std::string token;
    while (in >> token) {
        if (token == "0") stream.push_back(0);
        else if (token == "1") stream.push_back(1);
        else throw ParseError("stream token '" + token + "' is not 0 or 1");
    }
    if (stream.empty()) throw ParseError("stream: no observations");
    return stream;
}

} // namespace credence
