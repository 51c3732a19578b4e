// Independent reference implementations the tests check the library against.
// Everything here is deliberately naive: direct loops, dense linear algebra,
// full pairwise enumeration.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "ate/corpus.hpp"
#include "ate/embedding.hpp"
#include "ate/graph.hpp"

namespace oracle {

// Dense solve of (I - c(M + v d^T)) x = (1 - c) v by Gaussian elimination,
// where M is the column-stochastic walk matrix of the undirected graph and d
// marks zero-degree columns (their mass teleports proportionally to v).
inline std::vector<double> pagerank_solve(const ate::WordGraph& g, const std::vector<double>& v, double c) {
    const std::size_t n = g.size();
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t col = 0; col < n; ++col) {
        double deg = static_cast<double>(g.adj[col].size());
        if (deg == 0.0) {
            for (std::size_t row = 0; row < n; ++row) a[row][col] = v[row];
        } else {
            for (std::size_t row : g.adj[col]) a[row][col] = 1.0 / deg;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? 1.0 : 0.0) - c * a[i][j];
        a[i][n] = (1.0 - c) * v[i];
    }
    // Partial-pivot elimination.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row)
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        std::swap(a[col], a[pivot]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0.0) continue;
            double f = a[row][col] / a[col][col];
            for (std::size_t k = col; k <= n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

// Algorithm-by-the-book graph builder: all pairwise cosines, full sort,
// top-fraction cut, then the minimum threshold.
inline std::set<std::pair<std::string, std::string>> brute_force_edges(
    const ate::EmbeddingModel& m, const std::vector<std::string>& vocab,
    const std::unordered_set<std::string>& doc_words, double rel_min, double rel_top) {
    std::set<std::pair<std::string, std::string>> edges;
    std::size_t keep = std::min(
        vocab.size() - 1,
        static_cast<std::size_t>(std::ceil(rel_top * static_cast<double>(vocab.size() - 1))));
    for (const auto& w : vocab) {
        if (!doc_words.count(w)) continue;
        std::vector<std::pair<double, std::string>> scored;
        for (const auto& y : vocab) {
            if (y == w) continue;
            scored.emplace_back(ate::relatedness(m, w, y), y);
        }
        std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (std::size_t k = 0; k < keep && k < scored.size(); ++k) {
            if (scored[k].first < rel_min) break;
            edges.insert({std::min(w, scored[k].second), std::max(w, scored[k].second)});
        }
    }
    return edges;
}

inline std::set<std::pair<std::string, std::string>> graph_edges(const ate::WordGraph& g) {
    std::set<std::pair<std::string, std::string>> edges;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b : g.adj[a])
            edges.insert({std::min(g.nodes[a], g.nodes[b]), std::max(g.nodes[a], g.nodes[b])});
    return edges;
}

// Ranked list as plain canonical sequence plus truth set; loop-based metrics.
inline double naive_p_at_k(const std::vector<std::string>& ranked,
                           const std::unordered_set<std::string>& truth, std::size_t k) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < ranked.size() && i < k; ++i)
        if (truth.count(ranked[i])) ++hits;
    return static_cast<double>(hits) / static_cast<double>(k);
}

struct NaiveRtp {
    std::size_t rtp = 0;
    double p = 0.0, r = 0.0, f1 = 0.0;
};

inline NaiveRtp naive_rtp(const std::vector<std::string>& ranked,
                          const std::unordered_set<std::string>& truth) {
    NaiveRtp out;
    for (const auto& t : ranked)
        if (truth.count(t)) ++out.rtp;
    if (out.rtp == 0) return out;
    std::size_t tp = 0;
    for (std::size_t i = 0; i < out.rtp && i < ranked.size(); ++i)
        if (truth.count(ranked[i])) ++tp;
    out.p = static_cast<double>(tp) / static_cast<double>(out.rtp);
    out.r = static_cast<double>(tp) / static_cast<double>(truth.size());
    out.f1 = (out.p + out.r) > 0 ? 2 * out.p * out.r / (out.p + out.r) : 0.0;
    return out;
}

inline double naive_movement(std::size_t rank_base, std::size_t rank_revised, std::size_t total) {
    return (static_cast<double>(rank_base) - static_cast<double>(rank_revised)) /
           static_cast<double>(total);
}

inline std::size_t naive_bin(double mov) {
    if (mov == 0.0) return 20;
    int step = static_cast<int>(std::ceil(std::abs(mov) / 0.05));
    step = std::min(step, 20);
    return mov > 0.0 ? 20 + static_cast<std::size_t>(step) : 20 - static_cast<std::size_t>(step);
}

// Word-level contiguous subsequence test.
inline bool contains_subsequence(const std::vector<std::string>& longer,
                                 const std::vector<std::string>& shorter) {
    if (shorter.size() >= longer.size()) return false;
    for (std::size_t s = 0; s + shorter.size() <= longer.size(); ++s) {
        bool match = true;
        for (std::size_t i = 0; i < shorter.size(); ++i)
            if (longer[s + i] != shorter[i]) {
                match = false;
                break;
            }
        if (match) return true;
    }
    return false;
}

// Greedy non-overlapping occurrence count of a word sequence over one
// document, mirroring the counting contract.
inline std::size_t naive_term_count(const ate::Document& doc, const std::vector<std::string>& words,
                                    std::size_t minc) {
    std::vector<std::string> lemmas;
    std::vector<bool> valid;
    for (const auto& tok : doc.tokens) {
        lemmas.push_back(tok.lemma);
        valid.push_back(!tok.lemma.empty() && tok.lemma.size() >= minc);
    }
    std::size_t count = 0, i = 0;
    while (i + words.size() <= lemmas.size()) {
        bool match = true;
        for (std::size_t k = 0; k < words.size(); ++k)
            if (!valid[i + k] || lemmas[i + k] != words[k]) {
                match = false;
                break;
            }
        if (match) {
            ++count;
            i += words.size();
        } else {
            ++i;
        }
    }
    return count;
}

}  // namespace oracle
