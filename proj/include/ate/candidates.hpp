#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "ate/corpus.hpp"

namespace ate {

enum class ExtractionMode { ngram, pos_pattern };

struct ExtractionConfig {
    ExtractionMode mode = ExtractionMode::ngram;
    std::size_t minc = 2;   // minimum characters per word
    std::size_t maxc = 0;   // maximum canonical length; 0 = unlimited
    std::size_t minw = 1;   // word-count bounds after stopword trimming
    std::size_t maxw = 5;
    std::vector<std::string> patterns;  // regexes over the tag sequence, pos-pattern mode
    std::size_t min_freq = 1;
};

struct CandidateTerm {
    std::string canonical;            // space-joined lemma sequence
    std::vector<std::string> words;   // ordered lemmas (interior stopwords included)
    std::size_t tf_total = 0;
    std::map<std::string, std::size_t> tf_doc;      // doc id -> occurrences
    std::set<std::string> surface_variants;

    std::size_t df() const { return tf_doc.size(); }
};

struct CandidateSet {
    std::vector<CandidateTerm> terms;  // canonical-sorted, canonicals unique
    ExtractionConfig config;

    const CandidateTerm* find(const std::string& canonical) const;
    std::size_t size() const { return terms.size(); }
};

// Candidate discovery plus frequency counting. Discovery depends on the mode
// (all qualifying n-grams, or per-pattern greedy longest tag matches); a
// candidate's per-document frequency is always the number of non-overlapping
// left-to-right occurrences of its lemma sequence in that document.
CandidateSet extract_candidates(const Corpus& corpus, const ExtractionConfig& cfg);

// Recount per-document frequencies for an already-known candidate list
// (reloaded from a persisted set). Counting matches extract_candidates.
CandidateSet rebuild_candidates(const Corpus& corpus, const ExtractionConfig& cfg,
                                const std::vector<std::string>& canonicals);

// Top z candidates by total frequency, ties broken by canonical ascending.
std::vector<const CandidateTerm*> top_frequent(const CandidateSet& cs, std::size_t z);

// Deduplicated non-stopword word set of a term / of a whole candidate set.
std::unordered_set<std::string> words_of(const CandidateTerm& term, const NormalizeConfig& cfg);
std::unordered_set<std::string> words_of(const CandidateSet& cs, const NormalizeConfig& cfg);

// One pattern regex per non-empty line; '#' lines are comments. Each tag in
// the document tag sequence is matched with a single trailing space, e.g.
// "(JJ )*(NN |NNS )+".
std::vector<std::string> load_pattern_file(const std::string& path);

}  // namespace ate
