#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ate/candidates.hpp"
#include "ate/graph.hpp"
#include "ate/scored_list.hpp"

namespace ate {

enum class SeedMode { verified, unsupervised };

struct SeedSet {
    std::size_t z = 0;                       // proposal size
    SeedMode mode = SeedMode::verified;
    std::vector<std::string> terms;          // canonical strings
    std::unordered_set<std::string> words;   // words(S)

    static SeedSet from_terms(std::vector<std::string> terms, std::size_t z, SeedMode mode,
                              const NormalizeConfig& cfg, const CandidateSet& cs);
};

struct SeedProposal {
    std::string canonical;
    std::size_t tf_total = 0;
};

// The top-z most frequent candidates, for manual verification.
std::vector<SeedProposal> propose_seeds(const CandidateSet& cs, std::size_t z);

// Annotation rows: canonical -> 1 (real term) / 0 (not a term). Rows naming
// candidates outside the proposal are an error.
SeedSet verify_seeds(const CandidateSet& cs, std::size_t z,
                     const std::unordered_map<std::string, bool>& annotations, const NormalizeConfig& cfg);

// All top-z proposals taken as seeds, no verification.
SeedSet unsupervised_seeds(const CandidateSet& cs, std::size_t z, const NormalizeConfig& cfg);

struct RevisedEntry {
    std::string canonical;
    double srk = 0.0;
    double nate = 0.0;
    double mean_nsmi = 0.0;
};

// Final ranking plus the normalized components that produced it.
struct RevisedList {
    std::string method;  // "semrerank(<base>)" or "adp-textrank(<base>)"
    std::vector<RevisedEntry> entries;  // srk-descending, ties by canonical

    std::size_t rank(const std::string& canonical) const;  // 1-based
    ScoredList as_scored_list() const;
};

// Combine a base ranking with per-word importance scores:
//   nate(t) = shifted base score / max shifted base score (shift by the
//             minimum when any score is negative; all-equal lists pin nate=1)
//   nsmi(w) = importance(w) / max importance over the candidate vocabulary
//   srk(t)  = (1 + mean of nsmi over words(t)) * nate(t)
// Words with no importance entry contribute 0. The result always satisfies
// nate(t) <= srk(t) <= 2*nate(t).
RevisedList revise_scores(const ScoredList& base, const SemanticImportance& importance,
                          const CandidateSet& cs, const NormalizeConfig& cfg,
                          const std::string& method_prefix = "semrerank");

}  // namespace ate
