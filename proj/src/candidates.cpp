#include "ate/candidates.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <unordered_map>

#include "ate/util.hpp"

namespace ate {

namespace {

struct DocView {
    const Document* doc;
    std::vector<bool> valid;  // lemma present and >= minc characters
};

DocView make_view(const Document& doc, const ExtractionConfig& cfg) {
    DocView view{&doc, std::vector<bool>(doc.tokens.size(), false)};
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
        const auto& lemma = doc.tokens[i].lemma;
        view.valid[i] = !lemma.empty() && lemma.size() >= cfg.minc;
    }
    return view;
}

std::string join_lemmas(const Document& doc, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (i != begin) out += ' ';
        out += doc.tokens[i].lemma;
    }
    return out;
}

std::string join_surfaces(const Document& doc, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
        if (i != begin) out += ' ';
        out += doc.tokens[i].surface;
    }
    return out;
}

struct Discovery {
    std::unordered_map<std::string, std::size_t> index;  // canonical -> slot
    std::vector<CandidateTerm> terms;

    void record(const Document& doc, std::size_t begin, std::size_t end) {
        std::string canonical = join_lemmas(doc, begin, end);
        auto [it, inserted] = index.try_emplace(canonical, terms.size());
        if (inserted) {
            CandidateTerm term;
            term.canonical = canonical;
            for (std::size_t i = begin; i < end; ++i) term.words.push_back(doc.tokens[i].lemma);
            terms.push_back(std::move(term));
        }
        terms[it->second].surface_variants.insert(join_surfaces(doc, begin, end));
    }
};

// Windows whose first and last tokens are non-stopwords are exactly the
// trimmed forms of all qualifying n-grams, so trimming needs no extra pass.
void discover_ngrams(const DocView& view, const ExtractionConfig& cfg, Discovery& out) {
    const auto& tokens = view.doc->tokens;
    for (std::size_t start = 0; start < tokens.size(); ++start) {
        if (!view.valid[start] || tokens[start].stop) continue;
        std::size_t width_limit = std::min(cfg.maxw, tokens.size() - start);
        std::string canonical = tokens[start].lemma;
        for (std::size_t width = 1; width <= width_limit; ++width) {
            std::size_t last = start + width - 1;
            if (!view.valid[last]) break;  // n-grams cannot span invalid tokens
            if (width > 1) {
                canonical += ' ';
                canonical += tokens[last].lemma;
            }
            if (cfg.maxc > 0 && canonical.size() > cfg.maxc) break;
            if (width < cfg.minw || tokens[last].stop) continue;
            out.record(*view.doc, start, last + 1);
        }
    }
}

struct TagStream {
    std::string tags;                 // "DT JJ NN " — one trailing space per tag
    std::vector<std::size_t> starts;  // offset of each token's tag
    std::vector<std::size_t> ends;    // offset just past each token's trailing space

    std::size_t token_at(std::size_t offset) const {
        auto it = std::lower_bound(starts.begin(), starts.end(), offset);
        return static_cast<std::size_t>(it - starts.begin());
    }
};

TagStream make_tag_stream(const Document& doc) {
    TagStream ts;
    for (const auto& tok : doc.tokens) {
        ts.starts.push_back(ts.tags.size());
        ts.tags += tok.pos.empty() ? "?" : tok.pos;
        ts.tags += ' ';
        ts.ends.push_back(ts.tags.size());
    }
    return ts;
}

void discover_pos_matches(const DocView& view, const std::vector<std::regex>& patterns,
                          const ExtractionConfig& cfg, Discovery& out) {
    const auto& tokens = view.doc->tokens;
    TagStream ts = make_tag_stream(*view.doc);
    for (const auto& re : patterns) {
        std::size_t tok_pos = 0;
        while (tok_pos < tokens.size()) {
            std::smatch m;
            auto begin = ts.tags.cbegin() + static_cast<std::ptrdiff_t>(ts.starts[tok_pos]);
            if (!std::regex_search(begin, ts.tags.cend(), m, re, std::regex_constants::match_continuous) ||
                m.length(0) == 0) {
                ++tok_pos;
                continue;
            }
            std::size_t match_end = ts.starts[tok_pos] + static_cast<std::size_t>(m.length(0));
            std::size_t end_tok = ts.token_at(match_end);
            if (end_tok <= tok_pos || ts.ends[end_tok - 1] != match_end) {
                ++tok_pos;  // match did not end on a tag boundary
                continue;
            }
            // Trim stopword edges, then apply the word constraints.
            std::size_t lo = tok_pos, hi = end_tok;
            while (lo < hi && tokens[lo].stop) ++lo;
            while (hi > lo && tokens[hi - 1].stop) --hi;
            bool ok = lo < hi && hi - lo >= cfg.minw && hi - lo <= cfg.maxw;
            for (std::size_t i = lo; ok && i < hi; ++i) ok = view.valid[i];
            if (ok) {
                std::string canonical = join_lemmas(*view.doc, lo, hi);
                if (cfg.maxc == 0 || canonical.size() <= cfg.maxc) out.record(*view.doc, lo, hi);
            }
            tok_pos = end_tok;  // greedy non-overlapping scan
        }
    }
}

// Non-overlapping left-to-right occurrence count of every candidate, grouped
// by word count so one pass per width covers the whole set.
void count_occurrences(const Corpus& corpus, const ExtractionConfig& cfg, Discovery& disc) {
    std::size_t max_width = 0;
    for (const auto& t : disc.terms) max_width = std::max(max_width, t.words.size());

    for (const auto& doc : corpus.docs) {
        DocView view = make_view(doc, cfg);
        std::unordered_map<std::size_t, std::vector<std::size_t>> positions;  // slot -> match starts
        for (std::size_t width = 1; width <= max_width; ++width) {
            for (std::size_t start = 0; start + width <= doc.tokens.size(); ++start) {
                bool in_run = true;
                for (std::size_t i = start; i < start + width; ++i)
                    if (!view.valid[i]) {
                        in_run = false;
                        break;
                    }
                if (!in_run) continue;
                auto it = disc.index.find(join_lemmas(doc, start, start + width));
                if (it != disc.index.end()) positions[it->second].push_back(start);
            }
        }
        for (auto& [slot, starts] : positions) {
            std::size_t width = disc.terms[slot].words.size();
            std::size_t count = 0, next_free = 0;
            for (std::size_t s : starts) {
                if (s >= next_free) {
                    ++count;
                    next_free = s + width;
                }
            }
            disc.terms[slot].tf_doc[doc.id] = count;
            disc.terms[slot].tf_total += count;
        }
    }
}

}  // namespace

CandidateSet rebuild_candidates(const Corpus& corpus, const ExtractionConfig& cfg,
                                const std::vector<std::string>& canonicals) {
    Discovery disc;
    for (const auto& canonical : canonicals) {
        if (canonical.empty()) throw data_error("empty candidate canonical");
        auto [it, inserted] = disc.index.try_emplace(canonical, disc.terms.size());
        if (!inserted) throw data_error("duplicate candidate canonical: " + canonical);
        CandidateTerm term;
        term.canonical = canonical;
        term.words = split(canonical, ' ');
        disc.terms.push_back(std::move(term));
    }
    count_occurrences(corpus, cfg, disc);

    CandidateSet cs;
    cs.config = cfg;
    cs.terms = std::move(disc.terms);
    std::sort(cs.terms.begin(), cs.terms.end(),
              [](const CandidateTerm& a, const CandidateTerm& b) { return a.canonical < b.canonical; });
    return cs;
}

CandidateSet extract_candidates(const Corpus& corpus, const ExtractionConfig& cfg) {
    if (cfg.minw > cfg.maxw || cfg.minw == 0) throw config_error("extraction requires 1 <= minw <= maxw");
    if (cfg.maxc > 0 && cfg.minc > cfg.maxc) throw config_error("extraction requires minc <= maxc");

    std::vector<std::regex> compiled;
    if (cfg.mode == ExtractionMode::pos_pattern) {
        if (cfg.patterns.empty()) throw config_error("pos-pattern mode requires at least one pattern");
        bool tagged = false;
        for (const auto& doc : corpus.docs)
            for (const auto& tok : doc.tokens)
                if (!tok.pos.empty()) {
                    tagged = true;
                    break;
                }
        if (!tagged) throw data_error("pos-pattern mode requires a tagged corpus");
        for (const auto& p : cfg.patterns) {
            try {
                compiled.emplace_back(p, std::regex::ECMAScript | std::regex::optimize);
            } catch (const std::regex_error& e) {
                throw config_error("bad PoS pattern '" + p + "': " + e.what());
            }
        }
    }

    Discovery disc;
    for (const auto& doc : corpus.docs) {
        DocView view = make_view(doc, cfg);
        if (cfg.mode == ExtractionMode::ngram)
            discover_ngrams(view, cfg, disc);
        else
            discover_pos_matches(view, compiled, cfg, disc);
    }
    count_occurrences(corpus, cfg, disc);

    CandidateSet cs;
    cs.config = cfg;
    for (auto& term : disc.terms)
        if (term.tf_total >= std::max<std::size_t>(cfg.min_freq, 1)) cs.terms.push_back(std::move(term));
    std::sort(cs.terms.begin(), cs.terms.end(),
              [](const CandidateTerm& a, const CandidateTerm& b) { return a.canonical < b.canonical; });
    return cs;
}

const CandidateTerm* CandidateSet::find(const std::string& canonical) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), canonical,
                               [](const CandidateTerm& t, const std::string& c) { return t.canonical < c; });
    if (it != terms.end() && it->canonical == canonical) return &*it;
    return nullptr;
}

std::vector<const CandidateTerm*> top_frequent(const CandidateSet& cs, std::size_t z) {
    if (z == 0) throw config_error("top_frequent requires z >= 1");
    std::vector<const CandidateTerm*> order;
    order.reserve(cs.terms.size());
    for (const auto& t : cs.terms) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const CandidateTerm* a, const CandidateTerm* b) {
        if (a->tf_total != b->tf_total) return a->tf_total > b->tf_total;
        return a->canonical < b->canonical;
    });
    if (order.size() > z) order.resize(z);
    return order;
}

std::unordered_set<std::string> words_of(const CandidateTerm& term, const NormalizeConfig& cfg) {
    std::unordered_set<std::string> words;
    for (const auto& w : term.words)
        if (!cfg.stopwords.count(w)) words.insert(w);
    return words;
}

std::unordered_set<std::string> words_of(const CandidateSet& cs, const NormalizeConfig& cfg) {
    std::unordered_set<std::string> words;
    for (const auto& term : cs.terms)
        for (const auto& w : term.words)
            if (!cfg.stopwords.count(w)) words.insert(w);
    return words;
}

std::vector<std::string> load_pattern_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open pattern file: " + path);
    std::vector<std::string> patterns;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (!t.empty() && t.front() != '#') patterns.emplace_back(t);
    }
    return patterns;
}

}  // namespace ate
