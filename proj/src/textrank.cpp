#include "ate/textrank.hpp"

#include "ate/util.hpp"

namespace ate {

WordGraph build_cooccurrence_graph(const Document& doc,
                                   const std::unordered_set<std::string>& candidate_words,
                                   std::size_t window) {
    if (window < 2) throw config_error("co-occurrence window must be at least 2");
    WordGraph g;
    g.doc_id = doc.id;
    std::vector<std::size_t> stream;  // node slots of eligible tokens, in order
    for (const auto& tok : doc.tokens) {
        if (tok.norm.empty() || !candidate_words.count(tok.norm)) continue;
        stream.push_back(g.add_node(tok.norm));
    }
    for (std::size_t i = 0; i < stream.size(); ++i)
        for (std::size_t j = i + 1; j < stream.size() && j - i < window; ++j)
            g.add_edge(stream[i], stream[j]);
    g.check_consistency();
    return g;
}

SemanticImportance ctextrank(const Corpus& corpus, const std::unordered_set<std::string>& candidate_words,
                             const std::unordered_set<std::string>& seed_words, std::size_t window,
                             const PageRankParams& params, unsigned threads) {
    struct DocResult {
        std::vector<std::string> nodes;
        std::vector<double> scores;
        bool converged = true;
        bool empty = true;
    };
    std::vector<DocResult> results(corpus.docs.size());

    parallel_for(corpus.docs.size(), threads, [&](std::size_t i) {
        WordGraph g = build_cooccurrence_graph(corpus.docs[i], candidate_words, window);
        if (g.size() == 0) return;
        PersonalizationVector v = activate(g, seed_words);
        PageRankResult pr = personalized_pagerank(g, v, params);
        results[i] = {std::move(g.nodes), std::move(pr.scores), pr.converged, false};
    });

    SemanticImportance out;
    out.documents = corpus.docs.size();
    for (const auto& r : results) {
        if (r.empty) continue;
        ++out.nonempty_graphs;
        out.all_converged = out.all_converged && r.converged;
        for (std::size_t k = 0; k < r.nodes.size(); ++k) out.smi[r.nodes[k]] += r.scores[k];
    }
    return out;
}

RevisedList revise_with_ctextrank(const ScoredList& base, const SemanticImportance& ctr,
                                  const CandidateSet& cs, const NormalizeConfig& cfg) {
    return revise_scores(base, ctr, cs, cfg, "adp-textrank");
}

}  // namespace ate
