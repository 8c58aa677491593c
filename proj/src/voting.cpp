#include "credence/voting.hpp"

#include "credence/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <variant>

namespace credence {

Ballot::Ballot(std::string judge_id_in, std::map<std::string, Score> scores_in)
    : judge_id(std::move(judge_id_in)), scores(std::move(scores_in)) {
    if (judge_id.empty()) throw StructuralError("ballot with empty judge id");
    if (scores.empty()) throw StructuralError("ballot for '" + judge_id + "' carries no scores");
}

struct OutcomeFunction::Node {
    struct Issue {
        std::string id;
    };
    struct Not {
        std::shared_ptr<const Node> operand;
    };
    struct And {
        std::shared_ptr<const Node> lhs, rhs;
    };
    struct Or {
        std::shared_ptr<const Node> lhs, rhs;
    };
    std::variant<Issue, Not, And, Or> value;
};

OutcomeFunction OutcomeFunction::issue(std::string id) {
    return OutcomeFunction(
        std::make_shared<Node>(Node{Node::Issue{std::move(id)}}));
}

OutcomeFunction OutcomeFunction::negation(OutcomeFunction operand) {
    return OutcomeFunction(std::make_shared<Node>(Node{Node::Not{std::move(operand.root_)}}));
}

OutcomeFunction OutcomeFunction::conjunction(OutcomeFunction lhs, OutcomeFunction rhs) {
    return OutcomeFunction(
        std::make_shared<Node>(Node{Node::And{std::move(lhs.root_), std::move(rhs.root_)}}));
}

OutcomeFunction OutcomeFunction::disjunction(OutcomeFunction lhs, OutcomeFunction rhs) {
    return OutcomeFunction(
        std::make_shared<Node>(Node{Node::Or{std::move(lhs.root_), std::move(rhs.root_)}}));
}

namespace {

struct Token {
    enum Kind { Ident, KwAnd, KwOr, KwNot, LParen, RParen, End } kind;
    std::string text;
};

std::vector<Token> lex(std::string_view expr) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < expr.size()) {
        const char c = expr[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '(') {
            tokens.push_back({Token::LParen, "("});
            ++i;
        } else if (c == ')') {
            tokens.push_back({Token::RParen, ")"});
            ++i;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            while (i < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[i])) ||
                                       expr[i] == '_'))
                ++i;
            std::string word(expr.substr(start, i - start));
            if (word == "AND") tokens.push_back({Token::KwAnd, word});
            else if (word == "OR") tokens.push_back({Token::KwOr, word});
            else if (word == "NOT") tokens.push_back({Token::KwNot, word});
            else tokens.push_back({Token::Ident, word});
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) +
                             "' in outcome expression");
        }
    }
    tokens.push_back({Token::End, ""});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    OutcomeFunction parse() {
        OutcomeFunction fn = or_expr();
        if (peek().kind != Token::End)
            throw ParseError("unexpected trailing '" + peek().text + "' in outcome expression");
        return fn;
    }

private:
    OutcomeFunction or_expr() {
        OutcomeFunction lhs = and_expr();
        while (peek().kind == Token::KwOr) {
            advance();
            lhs = OutcomeFunction::disjunction(std::move(lhs), and_expr());
        }
        return lhs;
    }

    OutcomeFunction and_expr() {
        OutcomeFunction lhs = unary();
        while (peek().kind == Token::KwAnd) {
            advance();
            lhs = OutcomeFunction::conjunction(std::move(lhs), unary());
        }
        return lhs;
    }

    OutcomeFunction unary() {
        if (peek().kind == Token::KwNot) {
            advance();
            return OutcomeFunction::negation(unary());
        }
        if (peek().kind == Token::LParen) {
            advance();
            OutcomeFunction inner = or_expr();
            if (peek().kind != Token::RParen)
                throw ParseError("missing ')' in outcome expression");
            advance();
            return inner;
        }
        if (peek().kind == Token::Ident) {
            std::string id = peek().text;
            advance();
            return OutcomeFunction::issue(std::move(id));
        }
        throw ParseError("expected issue id, NOT, or '(' in outcome expression");
    }

    const Token& peek() const { return tokens_[pos_]; }
    void advance() { ++pos_; }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

OutcomeFunction OutcomeFunction::parse(std::string_view expression) {
    return Parser(lex(expression)).parse();
}

namespace {

void collect_issues(const OutcomeFunction::Node& node, std::set<std::string>& out);

} // namespace

struct IssueCollector {
    std::set<std::string>& out;
    void operator()(const OutcomeFunction::Node::Issue& n) { out.insert(n.id); }
    void operator()(const OutcomeFunction::Node::Not& n) { collect_issues(*n.operand, out); }
    void operator()(const OutcomeFunction::Node::And& n) {
        collect_issues(*n.lhs, out);
        collect_issues(*n.rhs, out);
    }
    void operator()(const OutcomeFunction::Node::Or& n) {
        collect_issues(*n.lhs, out);
        collect_issues(*n.rhs, out);
    }
};

namespace {

void collect_issues(const OutcomeFunction::Node& node, std::set<std::string>& out) {
    std::visit(IssueCollector{out}, node.value);
}

bool eval_node(const OutcomeFunction::Node& node, const std::map<std::string, bool>& findings) {
    struct Visitor {
        const std::map<std::string, bool>& findings;
        bool operator()(const OutcomeFunction::Node::Issue& n) const {
            auto it = findings.find(n.id);
            if (it == findings.end())
                throw StructuralError("no finding for issue '" + n.id + "'");
            return it->second;
        }
        bool operator()(const OutcomeFunction::Node::Not& n) const {
            return !eval_node(*n.operand, findings);
        }
        bool operator()(const OutcomeFunction::Node::And& n) const {
            return eval_node(*n.lhs, findings) && eval_node(*n.rhs, findings);
        }
        bool operator()(const OutcomeFunction::Node::Or& n) const {
            return eval_node(*n.lhs, findings) || eval_node(*n.rhs, findings);
        }
    };
    return std::visit(Visitor{findings}, node.value);
}

std::string node_str(const OutcomeFunction::Node& node) {
    struct Visitor {
        std::string operator()(const OutcomeFunction::Node::Issue& n) const { return n.id; }
        std::string operator()(const OutcomeFunction::Node::Not& n) const {
            return "NOT " + node_str(*n.operand);
        }
        std::string operator()(const OutcomeFunction::Node::And& n) const {
            return "(" + node_str(*n.lhs) + " AND " + node_str(*n.rhs) + ")";
        }
        std::string operator()(const OutcomeFunction::Node::Or& n) const {
            return "(" + node_str(*n.lhs) + " OR " + node_str(*n.rhs) + ")";
        }
    };
    return std::visit(Visitor{}, node.value);
}

} // namespace

std::vector<std::string> OutcomeFunction::issues() const {
    std::set<std::string> set;
    collect_issues(*root_, set);
    return {set.begin(), set.end()};
}

bool OutcomeFunction::evaluate(const std::map<std::string, bool>& findings) const {
    return eval_node(*root_, findings);
}

std::string OutcomeFunction::str() const { return node_str(*root_); }

namespace {

bool burden_met(const Score& aggregate) { return aggregate.value() > Rational(1, 2); }

Score aggregate_scores(std::vector<Score> scores, AggregationRule rule) {
    if (rule == AggregationRule::Mean) {
        Rational sum = 0;
        for (const auto& s : scores) sum += s.value();
        return Score(sum / Integer(scores.size()));
    }
    // Lower median: deterministic and conservative toward the burden rule.
    std::sort(scores.begin(), scores.end());
    return scores[(scores.size() - 1) / 2];
}

Score ballot_score(const Ballot& ballot, const std::string& question) {
    auto it = ballot.scores.find(question);
    if (it == ballot.scores.end())
        throw StructuralError("ballot '" + ballot.judge_id + "' has no score for '" + question +
                              "'");
    return it->second;
}

void require_ballots(const std::vector<Ballot>& ballots) {
    if (ballots.empty()) throw StructuralError("no ballots to aggregate");
}

} // namespace

PanelResult aggregate_outcome(const std::vector<Ballot>& ballots, const std::string& question,
                              AggregationRule rule) {
    require_ballots(ballots);
    std::vector<Score> scores;
    scores.reserve(ballots.size());
    for (const auto& ballot : ballots) scores.push_back(ballot_score(ballot, question));
    PanelResult result;
    result.aggregate = aggregate_scores(std::move(scores), rule);
    result.decision = burden_met(result.aggregate) ? Decision::BurdenMet : Decision::BurdenNotMet;
    result.mode = VoteMode::OutcomeVoting;
    result.rule = rule;
    return result;
}

PanelResult aggregate_issues(const std::vector<Ballot>& ballots, const OutcomeFunction& fn,
                             AggregationRule rule, VoteMode mode) {
    require_ballots(ballots);
    const std::vector<std::string> issue_ids = fn.issues();
    if (issue_ids.empty()) throw StructuralError("outcome function references no issues");

    PanelResult result;
    result.mode = mode;
    result.rule = rule;

    if (mode == VoteMode::IssueVoting) {
        std::map<std::string, bool> findings;
        for (const auto& issue : issue_ids) {
            std::vector<Score> scores;
            scores.reserve(ballots.size());
            for (const auto& ballot : ballots) scores.push_back(ballot_score(ballot, issue));
            Score aggregate = aggregate_scores(std::move(scores), rule);
            findings[issue] = burden_met(aggregate);
            result.issue_aggregates.emplace(issue, std::move(aggregate));
        }
        const bool outcome = fn.evaluate(findings);
        result.aggregate = outcome ? Score(Rational(1)) : Score(Rational(0));
        result.decision = outcome ? Decision::BurdenMet : Decision::BurdenNotMet;
        return result;
    }

    // Outcome-voting: each judge casts the boolean their own scores imply.
    std::vector<Score> votes;
    votes.reserve(ballots.size());
    for (const auto& ballot : ballots) {
        std::map<std::string, bool> findings;
        for (const auto& issue : issue_ids)
            findings[issue] = burden_met(ballot_score(ballot, issue));
        votes.push_back(fn.evaluate(findings) ? Score(Rational(1)) : Score(Rational(0)));
    }
    result.aggregate = aggregate_scores(std::move(votes), rule);
    result.decision = burden_met(result.aggregate) ? Decision::BurdenMet : Decision::BurdenNotMet;
    return result;
}

PanelResult binary_baseline(const std::vector<Ballot>& ballots, const std::string& question) {
    require_ballots(ballots);
    std::size_t yes = 0;
    for (const auto& ballot : ballots)
        if (burden_met(ballot_score(ballot, question))) ++yes;
    PanelResult result;
    result.aggregate = Score(Rational(Integer(yes), Integer(ballots.size())));
    result.decision = burden_met(result.aggregate) ? Decision::BurdenMet : Decision::BurdenNotMet;
    result.mode = VoteMode::OutcomeVoting;
    result.rule = AggregationRule::Mean;
    return result;
}

const DoctrinalParadoxFixture& doctrinal_paradox_fixture() {
    static const DoctrinalParadoxFixture fixture = [] {
        const Score yes{Rational(1)};
        const Score no{Rational(0)};
        std::vector<Ballot> ballots;
        ballots.emplace_back("J1", std::map<std::string, Score>{{"I1", yes}, {"I2", yes}});
        ballots.emplace_back("J2", std::map<std::string, Score>{{"I1", yes}, {"I2", no}});
        ballots.emplace_back("J3", std::map<std::string, Score>{{"I1", no}, {"I2", yes}});
        return DoctrinalParadoxFixture{std::move(ballots), OutcomeFunction::parse("I1 AND I2")};
    }();
    return fixture;
}

} // namespace credence
