#include "ate/semrerank.hpp"

#include <algorithm>
#include <cmath>

#include "ate/util.hpp"

namespace ate {

SeedSet SeedSet::from_terms(std::vector<std::string> terms, std::size_t z, SeedMode mode,
                            const NormalizeConfig& cfg, const CandidateSet& cs) {
    SeedSet s;
    s.z = z;
    s.mode = mode;
    s.terms = std::move(terms);
    std::sort(s.terms.begin(), s.terms.end());
    for (const auto& canonical : s.terms) {
        const CandidateTerm* t = cs.find(canonical);
        if (t) {
            for (const auto& w : words_of(*t, cfg)) s.words.insert(w);
        } else {
            // Standalone seed term (annotation against a newer extraction);
            // derive its words directly.
            for (const auto& w : split(canonical, ' '))
                if (!w.empty() && !cfg.stopwords.count(w)) s.words.insert(w);
        }
    }
    return s;
}

std::vector<SeedProposal> propose_seeds(const CandidateSet& cs, std::size_t z) {
    std::vector<SeedProposal> out;
    for (const auto* t : top_frequent(cs, z)) out.push_back({t->canonical, t->tf_total});
    return out;
}

SeedSet verify_seeds(const CandidateSet& cs, std::size_t z,
                     const std::unordered_map<std::string, bool>& annotations, const NormalizeConfig& cfg) {
    auto proposals = propose_seeds(cs, z);
    std::unordered_set<std::string> proposed;
    for (const auto& p : proposals) proposed.insert(p.canonical);
    for (const auto& [canonical, keep] : annotations) {
        (void)keep;
        if (!proposed.count(canonical))
            throw data_error("annotation refers to a candidate outside the proposal: " + canonical);
    }
    std::vector<std::string> kept;
    for (const auto& p : proposals) {
        auto it = annotations.find(p.canonical);
        if (it != annotations.end() && it->second) kept.push_back(p.canonical);
    }
    return SeedSet::from_terms(std::move(kept), z, SeedMode::verified, cfg, cs);
}

SeedSet unsupervised_seeds(const CandidateSet& cs, std::size_t z, const NormalizeConfig& cfg) {
    std::vector<std::string> all;
    for (const auto& p : propose_seeds(cs, z)) all.push_back(p.canonical);
    return SeedSet::from_terms(std::move(all), z, SeedMode::unsupervised, cfg, cs);
}

std::size_t RevisedList::rank(const std::string& canonical) const {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].canonical == canonical) return i + 1;
    throw data_error("candidate not in revised list: " + canonical);
}

ScoredList RevisedList::as_scored_list() const {
    std::vector<ScoredEntry> scored;
    scored.reserve(entries.size());
    for (const auto& e : entries) scored.push_back({e.canonical, e.srk});
    return ScoredList::preordered(method, std::move(scored));
}

RevisedList revise_scores(const ScoredList& base, const SemanticImportance& importance,
                          const CandidateSet& cs, const NormalizeConfig& cfg,
                          const std::string& method_prefix) {
    if (base.size() != cs.terms.size())
        throw data_error("base list does not cover the candidate set: " + base.method());
    for (const auto& t : cs.terms)
        if (!base.contains(t.canonical))
            throw data_error("base list missing candidate: " + t.canonical);

    // Shift scores when negative so max-normalization lands in [0, 1].
    double min_score = base.entries().back().score;
    double shift = min_score < 0.0 ? -min_score : 0.0;
    double max_score = base.entries().front().score + shift;

    double max_importance = 0.0;
    for (const auto& t : cs.terms)
        for (const auto& w : words_of(t, cfg)) max_importance = std::max(max_importance, importance.value(w));

    RevisedList out;
    out.method = method_prefix + "(" + base.method() + ")";
    out.entries.reserve(cs.terms.size());
    for (const auto& t : cs.terms) {
        RevisedEntry e;
        e.canonical = t.canonical;
        double shifted = base.score(t.canonical) + shift;
        e.nate = max_score > 0.0 ? shifted / max_score : 1.0;

        auto words = words_of(t, cfg);
        double nsmi_sum = 0.0;
        if (max_importance > 0.0)
            for (const auto& w : words) nsmi_sum += importance.value(w) / max_importance;
        e.mean_nsmi = words.empty() ? 0.0 : nsmi_sum / static_cast<double>(words.size());
        e.srk = (1.0 + e.mean_nsmi) * e.nate;

        if (e.srk < e.nate - 1e-12 || e.srk > 2.0 * e.nate + 1e-12)
            throw data_error("revised score out of bounds for: " + t.canonical);
        out.entries.push_back(std::move(e));
    }
    // Ties fall back to the base ranking, so a revision that adds nothing
    // (zero importance, or normalization rounding collapsing near-equal
    // scores) reproduces the base order exactly.
    std::sort(out.entries.begin(), out.entries.end(), [&](const RevisedEntry& a, const RevisedEntry& b) {
        if (a.srk != b.srk) return a.srk > b.srk;
        return base.rank(a.canonical) < base.rank(b.canonical);
    });
    return out;
}

}  // namespace ate
