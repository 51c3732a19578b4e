#include "ate/graph.hpp"

#include <algorithm>
#include <cmath>

#include "ate/util.hpp"

namespace ate {

bool WordGraph::has_edge(const std::string& a, const std::string& b) const {
    auto ia = slot.find(a), ib = slot.find(b);
    if (ia == slot.end() || ib == slot.end()) return false;
    return adj[ia->second].count(ib->second) > 0;
}

std::size_t WordGraph::add_node(const std::string& word) {
    auto [it, inserted] = slot.try_emplace(word, nodes.size());
    if (inserted) {
        nodes.push_back(word);
        adj.emplace_back();
    }
    return it->second;
}

void WordGraph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) return;
    adj[a].insert(b);
    adj[b].insert(a);
}

void WordGraph::check_consistency() const {
    for (std::size_t a = 0; a < adj.size(); ++a) {
        if (adj[a].count(a)) throw data_error("graph has a self-loop at " + nodes[a]);
        for (std::size_t b : adj[a])
            if (!adj[b].count(a))
                throw data_error("asymmetric adjacency between " + nodes[a] + " and " + nodes[b]);
    }
}

WordGraph build_graph(const Document& doc, const std::unordered_set<std::string>& candidate_words,
                      const RelatednessIndex& idx, double rel_min) {
    WordGraph g;
    g.doc_id = doc.id;
    // Iterate the document in token order so node numbering is deterministic.
    std::unordered_set<std::string> seen;
    for (const auto& tok : doc.tokens) {
        const auto& w = tok.norm;
        if (w.empty() || !candidate_words.count(w) || !seen.insert(w).second) continue;
        if (!idx.contains(w)) continue;  // OOV for the embedding model
        std::size_t a = g.add_node(w);
        for (const auto& nb : idx.neighbors(w)) {
            if (nb.score < rel_min) break;  // lists are sorted descending
            std::size_t b = g.add_node(nb.word);
            g.add_edge(a, b);
        }
    }
    g.check_consistency();
    return g;
}

PersonalizationVector activate(const WordGraph& g, const std::unordered_set<std::string>& seed_words,
                               std::size_t* activated) {
    if (g.size() == 0) throw data_error("cannot build a personalization vector for an empty graph");
    PersonalizationVector v(g.size(), 0.0);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (seed_words.count(g.nodes[i])) {
            v[i] = 1.0;
            ++hits;
        }
    if (activated) *activated = hits;
    double norm = hits > 0 ? static_cast<double>(hits) : static_cast<double>(g.size());
    if (hits == 0) std::fill(v.begin(), v.end(), 1.0);  // uniform fallback
    for (auto& x : v) x /= norm;
    return v;
}

PageRankResult personalized_pagerank(const WordGraph& g, const PersonalizationVector& v,
                                     const PageRankParams& p) {
    const std::size_t n = g.size();
    if (n == 0) throw data_error("personalized_pagerank requires a non-empty graph");
    if (v.size() != n) throw data_error("personalization vector size mismatch");
    if (p.damping <= 0.0 || p.damping >= 1.0) throw config_error("damping must be in (0, 1)");

    // Flatten adjacency; each undirected edge acts as two directed edges.
    std::vector<std::vector<std::size_t>> in_links(n);
    std::vector<double> out_deg(n, 0.0);
    for (std::size_t x = 0; x < n; ++x) {
        out_deg[x] = static_cast<double>(g.adj[x].size());
        for (std::size_t y : g.adj[x]) in_links[y].push_back(x);
    }
    for (auto& links : in_links) std::sort(links.begin(), links.end());

    PageRankResult res;
    res.scores.assign(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n, 0.0);
    res.converged = false;
    for (std::size_t iter = 0; iter < p.max_iterations; ++iter) {
        double dangling = 0.0;
        for (std::size_t x = 0; x < n; ++x)
            if (out_deg[x] == 0.0) dangling += res.scores[x];
        for (std::size_t y = 0; y < n; ++y) {
            double flow = 0.0;
            for (std::size_t x : in_links[y]) flow += res.scores[x] / out_deg[x];
            next[y] = p.damping * (flow + dangling * v[y]) + (1.0 - p.damping) * v[y];
        }
        double change = 0.0;
        for (std::size_t y = 0; y < n; ++y) change += std::abs(next[y] - res.scores[y]);
        res.scores.swap(next);
        res.iterations = iter + 1;
        if (change < p.tolerance) {
            res.converged = true;
            break;
        }
    }
    double mass = 0.0;
    for (double s : res.scores) {
        if (s < 0.0) throw data_error("PageRank produced a negative score");
        mass += s;
    }
    if (std::abs(mass - 1.0) > 1e-9) throw data_error("PageRank scores do not sum to 1");
    return res;
}

SemanticImportance semantic_importance(const Corpus& corpus,
                                       const std::unordered_set<std::string>& candidate_words,
                                       const RelatednessIndex& idx, double rel_min,
                                       const std::unordered_set<std::string>& seed_words,
                                       const PageRankParams& params, unsigned threads) {
    struct DocResult {
        std::vector<std::string> nodes;
        std::vector<double> scores;
        bool converged = true;
        bool empty = true;
    };
    std::vector<DocResult> results(corpus.docs.size());

    parallel_for(corpus.docs.size(), threads, [&](std::size_t i) {
        WordGraph g = build_graph(corpus.docs[i], candidate_words, idx, rel_min);
        if (g.size() == 0) return;
        PersonalizationVector v = activate(g, seed_words);
        PageRankResult pr = personalized_pagerank(g, v, params);
        results[i] = {std::move(g.nodes), std::move(pr.scores), pr.converged, false};
    });

    // Documents are already id-sorted; summing in that order pins the
    // floating-point result independent of the thread count.
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

std::vector<PswaRow> pswa_stats(const EmbeddingModel& m, const std::unordered_set<std::string>& vocabulary,
                                const std::vector<double>& rel_min_grid, unsigned threads) {
    std::vector<std::string> vocab;
    for (const auto& w : vocabulary)
        if (m.contains(w)) vocab.push_back(w);
    std::sort(vocab.begin(), vocab.end());
    const std::size_t n = vocab.size();
    if (n < 2) throw data_error("pswa_stats needs at least 2 in-vocabulary words");
    const std::size_t dim = m.dim();

    std::vector<double> unit(n * dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float* v = m.vector(vocab[i]);
        double norm = 0.0;
        for (std::size_t d = 0; d < dim; ++d) norm += static_cast<double>(v[d]) * static_cast<double>(v[d]);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (std::size_t d = 0; d < dim; ++d) unit[i * dim + d] = static_cast<double>(v[d]) / norm;
    }

    // counts[i][t]: neighbors of word i scoring at least grid[t].
    std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(rel_min_grid.size(), 0));
    parallel_for(n, threads, [&](std::size_t i) {
        const double* vi = unit.data() + i * dim;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double* vj = unit.data() + j * dim;
            double dot = 0.0;
            for (std::size_t d = 0; d < dim; ++d) dot += vi[d] * vj[d];
            for (std::size_t t = 0; t < rel_min_grid.size(); ++t)
                if (dot >= rel_min_grid[t]) ++counts[i][t];
        }
    });

    auto quartile = [](const std::vector<double>& sorted, double q) {
        double pos = q * static_cast<double>(sorted.size() - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        double frac = pos - static_cast<double>(lo);
        if (lo + 1 >= sorted.size()) return sorted.back();
        return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
    };

    std::vector<PswaRow> rows;
    for (std::size_t t = 0; t < rel_min_grid.size(); ++t) {
        PswaRow row;
        row.rel_min = rel_min_grid[t];
        std::vector<double> pswa(n);
        std::size_t isolated = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (counts[i][t] == 0) ++isolated;
            pswa[i] = static_cast<double>(counts[i][t]) / static_cast<double>(n);
        }
        std::sort(pswa.begin(), pswa.end());
        row.isolated_fraction = static_cast<double>(isolated) / static_cast<double>(n);
        row.pswa_min = pswa.front();
        row.pswa_q1 = quartile(pswa, 0.25);
        row.pswa_median = quartile(pswa, 0.5);
        row.pswa_q3 = quartile(pswa, 0.75);
        row.pswa_max = pswa.back();
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ate
