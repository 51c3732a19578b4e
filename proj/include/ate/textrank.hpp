#pragma once

#include <unordered_set>

#include "ate/graph.hpp"
#include "ate/semrerank.hpp"

namespace ate {

// Adapted-TextRank comparator: co-occurrence graphs instead of relatedness
// graphs, everything downstream shared with the main pipeline.

// Unweighted undirected graph of the words shared between the document and
// the candidate vocabulary. The window slides over the eligible-word stream
// (tokens surviving normalization and present in the vocabulary); two
// distinct words within `window` positions of each other are joined.
WordGraph build_cooccurrence_graph(const Document& doc,
                                   const std::unordered_set<std::string>& candidate_words,
                                   std::size_t window);

// Personalised PageRank per document with the same activation and parameters
// as the relatedness pipeline; scores summed across documents.
SemanticImportance ctextrank(const Corpus& corpus, const std::unordered_set<std::string>& candidate_words,
                             const std::unordered_set<std::string>& seed_words, std::size_t window,
                             const PageRankParams& params, unsigned threads = 1);

RevisedList revise_with_ctextrank(const ScoredList& base, const SemanticImportance& ctr,
                                  const CandidateSet& cs, const NormalizeConfig& cfg);

}  // namespace ate
