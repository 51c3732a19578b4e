#include "ate/scorers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <unordered_set>

namespace ate {

namespace {

void require_nonempty(const CandidateSet& cs) {
    if (cs.terms.empty()) throw data_error("empty candidate set");
}

std::string join(const std::vector<std::string>& words, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (i != begin) out += ' ';
        out += words[i];
    }
    return out;
}

// Per-word weirdness ratio with add-one smoothing on the reference side.
double word_weirdness(const std::string& w, const Corpus& corpus, const RefCorpusStats& ref) {
    double p_target = static_cast<double>(corpus.word_tf(w)) / static_cast<double>(corpus.total_tokens);
    double p_ref = (static_cast<double>(ref.count(w)) + 1.0) / static_cast<double>(ref.total);
    return p_target / p_ref;
}

double mean_word_weirdness(const CandidateTerm& t, const Corpus& corpus, const RefCorpusStats& ref) {
    double sum = 0.0;
    for (const auto& w : t.words) sum += word_weirdness(w, corpus, ref);
    return sum / static_cast<double>(t.words.size());
}

}  // namespace

RefCorpusStats RefCorpusStats::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open reference stats: " + path);
    RefCorpusStats stats;
    std::size_t declared_total = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cols = split(line, '\t');
        if (cols.size() != 2) throw data_error("malformed reference stats line " + std::to_string(lineno));
        if (cols[0] == "#total") {
            declared_total = std::stoull(cols[1]);
            continue;
        }
        std::size_t n = std::stoull(cols[1]);
        stats.freq[to_lower(trim(cols[0]))] += n;
        stats.total += n;
    }
    if (declared_total > 0) stats.total = declared_total;
    if (stats.total == 0) throw data_error("reference stats declare no tokens: " + path);
    return stats;
}

ContainmentIndex ContainmentIndex::build(const CandidateSet& cs) {
    ContainmentIndex idx;
    idx.containers.resize(cs.terms.size());
    idx.contained.resize(cs.terms.size());
    std::unordered_map<std::string, std::size_t> slot;
    slot.reserve(cs.terms.size());
    for (std::size_t i = 0; i < cs.terms.size(); ++i) slot.emplace(cs.terms[i].canonical, i);

    for (std::size_t j = 0; j < cs.terms.size(); ++j) {
        const auto& words = cs.terms[j].words;
        std::unordered_set<std::size_t> found;
        for (std::size_t width = 1; width < words.size(); ++width)
            for (std::size_t start = 0; start + width <= words.size(); ++start) {
                auto it = slot.find(join(words, start, start + width));
                if (it != slot.end()) found.insert(it->second);
            }
        for (std::size_t a : found) {
            idx.containers[a].push_back(j);
            idx.contained[j].push_back(a);
        }
    }
    return idx;
}

ScoredList score_tfidf(const Corpus& corpus, const CandidateSet& cs) {
    require_nonempty(cs);
    double n_docs = static_cast<double>(corpus.docs.size());
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (const auto& t : cs.terms) {
        double df = static_cast<double>(t.df());
        // idf degenerates to 0 when a term is in every document; the small
        // offset keeps the frequency signal alive there.
        double ratio = n_docs / df + (t.df() == corpus.docs.size() ? 0.01 : 0.0);
        entries.push_back({t.canonical, static_cast<double>(t.tf_total) * std::log(ratio)});
    }
    return ScoredList("tfidf", std::move(entries));
}

ScoredList score_cvalue(const Corpus& corpus, const CandidateSet& cs) {
    (void)corpus;
    require_nonempty(cs);
    ContainmentIndex idx = ContainmentIndex::build(cs);
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (std::size_t i = 0; i < cs.terms.size(); ++i) {
        const auto& t = cs.terms[i];
        double weight = std::log2(static_cast<double>(t.words.size()) + 0.1);
        double freq = static_cast<double>(t.tf_total);
        const auto& longer = idx.containers[i];
        if (!longer.empty()) {
            double nested = 0.0;
            for (std::size_t j : longer) nested += static_cast<double>(cs.terms[j].tf_total);
            freq -= nested / static_cast<double>(longer.size());
        }
        entries.push_back({t.canonical, weight * freq});
    }
    return ScoredList("cvalue", std::move(entries));
}

ScoredList score_basic(const Corpus& corpus, const CandidateSet& cs, double alpha) {
    (void)corpus;
    require_nonempty(cs);
    ContainmentIndex idx = ContainmentIndex::build(cs);
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (std::size_t i = 0; i < cs.terms.size(); ++i) {
        const auto& t = cs.terms[i];
        double score = static_cast<double>(t.words.size()) * std::log(static_cast<double>(t.tf_total)) +
                       alpha * static_cast<double>(idx.containers[i].size());
        entries.push_back({t.canonical, score});
    }
    return ScoredList("basic", std::move(entries));
}

ScoredList score_combobasic(const Corpus& corpus, const CandidateSet& cs, double alpha, double beta) {
    (void)corpus;
    require_nonempty(cs);
    ContainmentIndex idx = ContainmentIndex::build(cs);
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (std::size_t i = 0; i < cs.terms.size(); ++i) {
        const auto& t = cs.terms[i];
        double score = static_cast<double>(t.words.size()) * std::log(static_cast<double>(t.tf_total)) +
                       alpha * static_cast<double>(idx.containers[i].size()) +
                       beta * static_cast<double>(idx.contained[i].size());
        entries.push_back({t.canonical, score});
    }
    return ScoredList("combobasic", std::move(entries));
}

ScoredList score_rake(const Corpus& corpus, const CandidateSet& cs) {
    (void)corpus;
    require_nonempty(cs);
    // deg(w) sums the lengths of distinct candidates containing w; freq(w)
    // sums their frequencies.
    std::unordered_map<std::string, double> deg, freq;
    for (const auto& t : cs.terms) {
        std::unordered_set<std::string> uniq(t.words.begin(), t.words.end());
        for (const auto& w : uniq) {
            deg[w] += static_cast<double>(t.words.size());
            freq[w] += static_cast<double>(t.tf_total);
        }
    }
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (const auto& t : cs.terms) {
        double score = 0.0;
        for (const auto& w : t.words) score += deg[w] / freq[w];
        entries.push_back({t.canonical, score});
    }
    return ScoredList("rake", std::move(entries));
}

ScoredList score_weirdness(const Corpus& corpus, const CandidateSet& cs, const RefCorpusStats& ref) {
    require_nonempty(cs);
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (const auto& t : cs.terms) entries.push_back({t.canonical, mean_word_weirdness(t, corpus, ref)});
    return ScoredList("weirdness", std::move(entries));
}

ScoredList score_relevance(const Corpus& corpus, const CandidateSet& cs, const RefCorpusStats& ref) {
    require_nonempty(cs);
    double n_docs = static_cast<double>(corpus.docs.size());
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (const auto& t : cs.terms) {
        double w = mean_word_weirdness(t, corpus, ref);
        double df_share = static_cast<double>(t.df()) / n_docs;
        entries.push_back({t.canonical, 1.0 - 1.0 / std::log2(2.0 + w * df_share)});
    }
    return ScoredList("relevance", std::move(entries));
}

ScoredList score_glossex(const Corpus& corpus, const CandidateSet& cs, const RefCorpusStats& ref,
                         double alpha, double beta) {
    require_nonempty(cs);
    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    for (const auto& t : cs.terms) {
        double specificity = 0.0;
        double tf_sum = 0.0;
        for (const auto& w : t.words) {
            double p_target = static_cast<double>(corpus.word_tf(w)) / static_cast<double>(corpus.total_tokens);
            double p_ref = (static_cast<double>(ref.count(w)) + 1.0) / static_cast<double>(ref.total);
            specificity += std::log(p_target / p_ref);
            tf_sum += static_cast<double>(corpus.word_tf(w));
        }
        double len = static_cast<double>(t.words.size());
        double td = specificity / len;
        double freq = static_cast<double>(t.tf_total);
        double tc = len * freq * std::log10(freq + 1.0) / tf_sum;
        entries.push_back({t.canonical, alpha * td + beta * tc});
    }
    return ScoredList("glossex", std::move(entries));
}

ScoredList score_chisquare(const Corpus& corpus, const CandidateSet& cs, const ScorerOptions& opt) {
    if (cs.terms.size() < 2) throw data_error("chisquare needs at least 2 candidates");
    std::size_t g_size =
        std::max(opt.chisq_frequent_min,
                 static_cast<std::size_t>(std::ceil(opt.chisq_frequent_fraction *
                                                    static_cast<double>(cs.terms.size()))));
    auto frequent = top_frequent(cs, std::min(g_size, cs.terms.size()));

    // p_g: document-frequency share of each frequent term within the set.
    double df_sum = 0.0;
    for (const auto* g : frequent) df_sum += static_cast<double>(g->df());
    std::vector<double> p_g(frequent.size());
    for (std::size_t k = 0; k < frequent.size(); ++k)
        p_g[k] = static_cast<double>(frequent[k]->df()) / df_sum;

    // Packed document-presence bitsets; co-occurrence is popcount over ANDs.
    std::unordered_map<std::string, std::size_t> doc_slot;
    for (const auto& doc : corpus.docs) doc_slot.emplace(doc.id, doc_slot.size());
    const std::size_t blocks = (doc_slot.size() + 63) / 64;
    auto presence = [&](const CandidateTerm& t) {
        std::vector<std::uint64_t> bits(blocks, 0);
        for (const auto& [doc_id, n] : t.tf_doc)
            if (n > 0) {
                std::size_t d = doc_slot.at(doc_id);
                bits[d >> 6] |= std::uint64_t{1} << (d & 63);
            }
        return bits;
    };
    std::vector<std::vector<std::uint64_t>> g_docs;
    g_docs.reserve(frequent.size());
    for (const auto* g : frequent) g_docs.push_back(presence(*g));

    std::vector<ScoredEntry> entries;
    entries.reserve(cs.terms.size());
    std::vector<double> co(frequent.size(), 0.0);
    for (const auto& t : cs.terms) {
        std::vector<std::uint64_t> t_docs = presence(t);
        double n_t = 0.0;
        for (std::size_t k = 0; k < frequent.size(); ++k) {
            if (frequent[k]->canonical == t.canonical) {
                co[k] = 0.0;
                continue;
            }
            std::uint64_t c = 0;
            for (std::size_t b = 0; b < blocks; ++b)
                c += static_cast<std::uint64_t>(std::popcount(t_docs[b] & g_docs[k][b]));
            co[k] = static_cast<double>(c);
            n_t += co[k];
        }
        double chi = 0.0, max_summand = 0.0;
        if (n_t > 0.0) {
            for (std::size_t k = 0; k < frequent.size(); ++k) {
                if (frequent[k]->canonical == t.canonical) continue;
                double expected = n_t * p_g[k];
                if (expected <= 0.0) continue;
                double summand = (co[k] - expected) * (co[k] - expected) / expected;
                chi += summand;
                max_summand = std::max(max_summand, summand);
            }
            if (opt.chisq_subtract_max) chi -= max_summand;
        }
        entries.push_back({t.canonical, chi});
    }
    return ScoredList("chisquare", std::move(entries));
}

ScoredList vote(const std::vector<const ScoredList*>& lists) {
    if (lists.empty()) throw data_error("vote needs at least one list");
    const auto& first = *lists.front();
    for (const auto* l : lists) {
        if (l->size() != first.size()) throw data_error("vote inputs cover different candidate sets");
        for (const auto& e : first.entries())
            if (!l->contains(e.canonical))
                throw data_error("vote inputs cover different candidate sets: missing " + e.canonical);
    }
    std::vector<ScoredEntry> entries;
    entries.reserve(first.size());
    for (const auto& e : first.entries()) {
        double mean_rank = 0.0;
        for (const auto* l : lists) mean_rank += static_cast<double>(l->rank(e.canonical));
        mean_rank /= static_cast<double>(lists.size());
        entries.push_back({e.canonical, -mean_rank});
    }
    return ScoredList("vote", std::move(entries));
}

const std::vector<std::string>& scorer_names() {
    static const std::vector<std::string> names = {"tfidf",     "cvalue",    "basic",
                                                   "combobasic", "rake",     "weirdness",
                                                   "relevance", "glossex",   "chisquare"};
    return names;
}

ScoredList run_scorer(const std::string& method, const Corpus& corpus, const CandidateSet& cs,
                      const RefCorpusStats* ref, const ScorerOptions& opt) {
    auto need_ref = [&]() -> const RefCorpusStats& {
        if (!ref) throw config_error(method + " requires reference corpus stats");
        return *ref;
    };
    if (method == "tfidf") return score_tfidf(corpus, cs);
    if (method == "cvalue") return score_cvalue(corpus, cs);
    if (method == "basic") return score_basic(corpus, cs, opt.basic_alpha);
    if (method == "combobasic") return score_combobasic(corpus, cs, opt.combo_alpha, opt.combo_beta);
    if (method == "rake") return score_rake(corpus, cs);
    if (method == "weirdness") return score_weirdness(corpus, cs, need_ref());
    if (method == "relevance") return score_relevance(corpus, cs, need_ref());
    if (method == "glossex") return score_glossex(corpus, cs, need_ref(), opt.glossex_alpha, opt.glossex_beta);
    if (method == "chisquare") return score_chisquare(corpus, cs, opt);
    throw config_error("unknown scorer: " + method);
}

}  // namespace ate
