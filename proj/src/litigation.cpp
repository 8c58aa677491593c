#include "credence/litigation.hpp"

#include "credence/bayes.hpp"
#include "credence/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace credence {

CaseCorpus::CaseCorpus(std::vector<CaseRecord> records) : records_(std::move(records)) {
    std::set<std::string> seen;
    for (const auto& record : records_) {
        if (record.id.empty()) throw StructuralError("case record with empty id");
        if (!seen.insert(record.id).second)
            throw StructuralError("duplicate case id '" + record.id + "'");
    }
}

std::size_t CaseCorpus::count(Stage stage) const {
    return std::count_if(records_.begin(), records_.end(),
                         [&](const CaseRecord& r) { return r.stage == stage; });
}

std::size_t CaseCorpus::count(Party party) const {
    return std::count_if(records_.begin(), records_.end(),
                         [&](const CaseRecord& r) { return r.party == party; });
}

std::size_t CaseCorpus::count(Stage stage, Party party) const {
    return std::count_if(records_.begin(), records_.end(), [&](const CaseRecord& r) {
        return r.stage == stage && r.party == party;
    });
}

const CaseCorpus& embedded_corpus() {
    static const CaseCorpus corpus = [] {
        std::vector<CaseRecord> records;
        records.reserve(157);
        int serial = 0;
        auto fill = [&](int count, Stage stage, Party party) {
            for (int i = 0; i < count; ++i) {
                char id[8];
                std::snprintf(id, sizeof id, "c%03d", ++serial);
                records.push_back({id, stage, party});
            }
        };
        fill(15, Stage::PreTrial, Party::Government);
        fill(56, Stage::PreTrial, Party::NonGovernment);
        fill(39, Stage::TrialOrPost, Party::Government);
        fill(47, Stage::TrialOrPost, Party::NonGovernment);
        return CaseCorpus(std::move(records));
    }();
    return corpus;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

} // namespace

CaseCorpus parse_cases_csv(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::vector<CaseRecord> records;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != "id,stage,party")
                throw ParseError("expected header 'id,stage,party'", line_no);
            continue;
        }
        if (line.empty() && in.eof()) break; // tolerate a trailing newline
        auto fields = split_fields(line);
        if (fields.size() != 3) throw ParseError("expected 3 comma-separated fields", line_no);
        CaseRecord record;
        record.id = fields[0];
        if (record.id.empty()) throw ParseError("empty case id", line_no);
        if (!seen.insert(record.id).second)
            throw ParseError("duplicate case id '" + record.id + "'", line_no);
        if (fields[1] == "pretrial") record.stage = Stage::PreTrial;
        else if (fields[1] == "trial_or_post") record.stage = Stage::TrialOrPost;
        else throw ParseError("unknown stage '" + fields[1] + "' (want pretrial|trial_or_post)", line_no);
        if (fields[2] == "gov") record.party = Party::Government;
        else if (fields[2] == "nongov") record.party = Party::NonGovernment;
        else throw ParseError("unknown party '" + fields[2] + "' (want gov|nongov)", line_no);
        records.push_back(std::move(record));
    }
    if (line_no == 0) throw ParseError("empty input, expected header 'id,stage,party'", 1);
    return CaseCorpus(std::move(records));
}

std::string cases_to_csv(const CaseCorpus& corpus) {
    std::string out = "id,stage,party\n";
    for (const auto& record : corpus.records()) {
        out += record.id;
        out += record.stage == Stage::PreTrial ? ",pretrial," : ",trial_or_post,";
        out += record.party == Party::Government ? "gov\n" : "nongov\n";
    }
    return out;
}

StageTable::StageTable(Probability prior_pre_in, Probability prior_post_in,
                       Probability cond_gov_given_pre_in, Probability cond_gov_given_post_in)
    : prior_pre(std::move(prior_pre_in)), prior_post(std::move(prior_post_in)),
      cond_gov_given_pre(std::move(cond_gov_given_pre_in)),
      cond_gov_given_post(std::move(cond_gov_given_post_in)) {
    if (prior_pre.value() + prior_post.value() != 1)
        throw StructuralError("stage priors must sum to exactly 1");
}

StageTable count_table(const CaseCorpus& corpus) {
    if (corpus.size() == 0) throw DegenerateCorpusError("corpus is empty");
    const Integer total = corpus.size();
    const Integer pre = corpus.count(Stage::PreTrial);
    const Integer post = corpus.count(Stage::TrialOrPost);
    if (pre == 0 || post == 0)
        throw DegenerateCorpusError("corpus must contain both litigation stages");
    const Integer pre_gov = corpus.count(Stage::PreTrial, Party::Government);
    const Integer post_gov = corpus.count(Stage::TrialOrPost, Party::Government);
    return {Probability(Rational(pre, total)), Probability(Rational(post, total)),
            Probability(Rational(pre_gov, pre)), Probability(Rational(post_gov, post))};
}

StageTable published_table() {
    return {Probability(12, 25), Probability(13, 25), Probability(21, 100),
            Probability(9, 20)};
}

PosteriorTable posterior_table(const StageTable& table, RoundingPolicy policy) {
    Probability joint_pre = multiply_rule(table.prior_pre, table.cond_gov_given_pre);
    Probability joint_post = multiply_rule(table.prior_post, table.cond_gov_given_post);
    if (policy == RoundingPolicy::Published) {
        joint_pre = Probability(round_decimal(joint_pre.value(), 1));
        joint_post = Probability(round_decimal(joint_post.value(), 1));
    }
    const Probability marginal = addition_rule({joint_pre, joint_post});
    if (marginal.is_zero())
        throw NullEvidenceError("marginal probability of a government case is zero");
    return {joint_pre, joint_post, marginal, bayes_posterior(joint_pre, marginal),
            bayes_posterior(joint_post, marginal), policy};
}

} // namespace credence
