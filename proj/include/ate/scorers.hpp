#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ate/candidates.hpp"
#include "ate/corpus.hpp"
#include "ate/scored_list.hpp"

namespace ate {

// Word frequencies of a general-purpose contrast corpus, loaded from a
// "word<TAB>count" TSV (optional "#total<TAB>N" header, else the sum).
struct RefCorpusStats {
    std::unordered_map<std::string, std::size_t> freq;
    std::size_t total = 0;

    static RefCorpusStats load(const std::string& path);
    std::size_t count(const std::string& word) const {
        auto it = freq.find(word);
        return it == freq.end() ? 0 : it->second;
    }
};

struct ScorerOptions {
    double basic_alpha = 3.5;
    double combo_alpha = 0.75;
    double combo_beta = 0.1;
    double glossex_alpha = 0.5;
    double glossex_beta = 0.5;
    double chisq_frequent_fraction = 0.1;  // of the candidate set, floor below
    std::size_t chisq_frequent_min = 30;
    bool chisq_subtract_max = true;        // robust variant: drop the largest summand
};

ScoredList score_tfidf(const Corpus& corpus, const CandidateSet& cs);
ScoredList score_cvalue(const Corpus& corpus, const CandidateSet& cs);
ScoredList score_basic(const Corpus& corpus, const CandidateSet& cs, double alpha);
ScoredList score_combobasic(const Corpus& corpus, const CandidateSet& cs, double alpha, double beta);
ScoredList score_rake(const Corpus& corpus, const CandidateSet& cs);
ScoredList score_weirdness(const Corpus& corpus, const CandidateSet& cs, const RefCorpusStats& ref);
ScoredList score_relevance(const Corpus& corpus, const CandidateSet& cs, const RefCorpusStats& ref);
ScoredList score_glossex(const Corpus& corpus, const CandidateSet& cs, const RefCorpusStats& ref,
                         double alpha, double beta);
ScoredList score_chisquare(const Corpus& corpus, const CandidateSet& cs, const ScorerOptions& opt);

// Uniform-weight rank voting: score = -mean rank across the input lists.
ScoredList vote(const std::vector<const ScoredList*>& lists);

// Dispatch by method name (tfidf, cvalue, basic, combobasic, rake, weirdness,
// relevance, glossex, chisquare). "vote" is not dispatched here as it consumes
// other lists. The reference stats may be null for methods that ignore them.
ScoredList run_scorer(const std::string& method, const Corpus& corpus, const CandidateSet& cs,
                      const RefCorpusStats* ref, const ScorerOptions& opt);

const std::vector<std::string>& scorer_names();  // the nine dispatchable methods

// Candidate containment index: for every term, which other terms properly
// contain it / are properly contained in it (word-level contiguous
// subsequence). Shared by CValue, Basic and ComboBasic.
struct ContainmentIndex {
    std::vector<std::vector<std::size_t>> containers;  // term slot -> slots of longer terms containing it
    std::vector<std::vector<std::size_t>> contained;   // term slot -> slots of shorter terms inside it

    static ContainmentIndex build(const CandidateSet& cs);
};

}  // namespace ate
