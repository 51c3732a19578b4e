#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ate/candidates.hpp"
#include "ate/corpus.hpp"
#include "ate/embedding.hpp"

namespace ate {

// Undirected word graph of one document; adjacency is stored symmetric with
// no self-loops.
struct WordGraph {
    std::string doc_id;
    std::vector<std::string> nodes;                       // insertion-ordered, unique
    std::unordered_map<std::string, std::size_t> slot;
    std::vector<std::unordered_set<std::size_t>> adj;

    std::size_t size() const { return nodes.size(); }
    bool has_edge(const std::string& a, const std::string& b) const;
    std::size_t add_node(const std::string& word);
    void add_edge(std::size_t a, std::size_t b);

    // Symmetry / no-self-loop invariant; throws data_error on violation.
    void check_consistency() const;
};

struct PageRankParams {
    double damping = 0.85;
    double tolerance = 1e-10;  // L1 change per iteration
    std::size_t max_iterations = 200;
};

struct PageRankResult {
    std::vector<double> scores;  // indexed like graph nodes; non-negative, sums to 1
    bool converged = true;
    std::size_t iterations = 0;
};

// Node weights for the personalised jump, normalized to sum 1.
using PersonalizationVector = std::vector<double>;

// Per-document graph: every word shared between the document and the
// candidate vocabulary becomes a node, joined to the neighbors from its
// ranked relatedness list that score at least rel_min (the index already
// holds only the top rel_top fraction). Neighbors join the graph even when
// the document itself does not contain them.
WordGraph build_graph(const Document& doc, const std::unordered_set<std::string>& candidate_words,
                      const RelatednessIndex& idx, double rel_min);

// Weight 1 on nodes whose word belongs to the seed word set, then normalize.
// Falls back to uniform when nothing activates (flagged via *activated).
PersonalizationVector activate(const WordGraph& g, const std::unordered_set<std::string>& seed_words,
                               std::size_t* activated = nullptr);

// Power iteration for Pr = c M Pr + (1-c) v over the directed version of the
// graph; dangling mass is redistributed proportionally to v.
PageRankResult personalized_pagerank(const WordGraph& g, const PersonalizationVector& v,
                                     const PageRankParams& p);

// Corpus-level semantic importance: per-word sum of the document PageRank
// scores; words absent from every graph score 0.
struct SemanticImportance {
    std::unordered_map<std::string, double> smi;
    std::size_t documents = 0;       // graphs aggregated
    std::size_t nonempty_graphs = 0;
    bool all_converged = true;

    double value(const std::string& word) const {
        auto it = smi.find(word);
        return it == smi.end() ? 0.0 : it->second;
    }
};

SemanticImportance semantic_importance(const Corpus& corpus,
                                       const std::unordered_set<std::string>& candidate_words,
                                       const RelatednessIndex& idx, double rel_min,
                                       const std::unordered_set<std::string>& seed_words,
                                       const PageRankParams& params, unsigned threads = 1);

// Isolated-word fraction and per-word strongly-related-share quartiles for a
// grid of rel_min thresholds, from exact pairwise relatedness.
struct PswaRow {
    double rel_min = 0.0;
    double isolated_fraction = 0.0;
    double pswa_min = 0.0, pswa_q1 = 0.0, pswa_median = 0.0, pswa_q3 = 0.0, pswa_max = 0.0;
};

std::vector<PswaRow> pswa_stats(const EmbeddingModel& m, const std::unordered_set<std::string>& vocabulary,
                                const std::vector<double>& rel_min_grid, unsigned threads = 1);

}  // namespace ate
