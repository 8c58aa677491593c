#pragma once

#include "credence/distribution.hpp"
#include "credence/probability.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace credence {

enum class Stage { PreTrial, TrialOrPost };
enum class Party { Government, NonGovernment };

struct CaseRecord {
    std::string id; // nonempty, unique within a corpus
    Stage stage = Stage::PreTrial;
    Party party = Party::NonGovernment;

    friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

class CaseCorpus {
public:
    explicit CaseCorpus(std::vector<CaseRecord> records);

    const std::vector<CaseRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }
    std::size_t count(Stage stage) const;
    std::size_t count(Party party) const;
    std::size_t count(Stage stage, Party party) const;

    friend bool operator==(const CaseCorpus&, const CaseCorpus&) = default;

private:
    std::vector<CaseRecord> records_;
};

/// The bundled federal appellate sample (Federal Reporter vol. 287,
/// non-criminal cases) with the four published cell counts: 15 pre-trial
/// government, 56 pre-trial non-government, 39 trial/post government, 47
/// trial/post non-government. Note the total is 157; the originally quoted
/// totals (154 cases, fraction denominators of 148) do not match these cells
/// and are not reconstructed here — published_table() carries the published
/// decimals instead.
const CaseCorpus& embedded_corpus();

/// Parses "id,stage,party" CSV with stage ∈ {pretrial, trial_or_post} and
/// party ∈ {gov, nongov}. Errors carry the offending 1-based line number.
CaseCorpus parse_cases_csv(std::string_view text);

/// Inverse of parse_cases_csv; round-trips exactly.
std::string cases_to_csv(const CaseCorpus& corpus);

/// Stage priors plus government-case conditionals per stage.
struct StageTable {
    Probability prior_pre;
    Probability prior_post;
    Probability cond_gov_given_pre;
    Probability cond_gov_given_post;

    StageTable(Probability prior_pre, Probability prior_post, Probability cond_gov_given_pre,
               Probability cond_gov_given_post);

    friend bool operator==(const StageTable&, const StageTable&) = default;
};

/// Exact relative frequencies counted from a corpus. Requires a nonempty
/// corpus with both stages present.
StageTable count_table(const CaseCorpus& corpus);

/// The published decimals (.48, .52, .21, .45) as exact rationals. The
/// published fractions (71/148, 86/148) are inconsistent with the cell
/// counts; this table exists so the published pipeline stays reproducible
/// without inventing a reconciliation.
StageTable published_table();

/// The Bayes pipeline of a stage table: joints by the multiplication rule,
/// marginal by the addition rule, posteriors by division. Under
/// RoundingPolicy::Published the joints are rounded to one decimal before the
/// marginal and posterior stages, mirroring the published tables.
struct PosteriorTable {
    Probability joint_pre;
    Probability joint_post;
    Probability marginal_gov;
    Probability post_pre_given_gov;
    Probability post_post_given_gov;
    RoundingPolicy policy = RoundingPolicy::Exact;
};

PosteriorTable posterior_table(const StageTable& table, RoundingPolicy policy);

} // namespace credence
