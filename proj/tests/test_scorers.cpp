#include <doctest.h>

#include <cmath>

#include "ate/scorers.hpp"
#include "ate/util.hpp"
#include "oracles.hpp"

using namespace ate;

namespace {

CandidateTerm term(const std::string& canonical, std::size_t tf,
                   std::map<std::string, std::size_t> tf_doc = {}) {
    CandidateTerm t;
    t.canonical = canonical;
    t.words = split(canonical, ' ');
    t.tf_total = tf;
    t.tf_doc = std::move(tf_doc);
    if (t.tf_doc.empty() && tf > 0) t.tf_doc["d0"] = tf;
    return t;
}

CandidateSet make_set(std::vector<CandidateTerm> terms) {
    CandidateSet cs;
    cs.terms = std::move(terms);
    std::sort(cs.terms.begin(), cs.terms.end(),
              [](const CandidateTerm& a, const CandidateTerm& b) { return a.canonical < b.canonical; });
    return cs;
}

Corpus dummy_corpus(std::size_t docs) {
    std::vector<std::pair<std::string, std::vector<std::string>>> raw;
    for (std::size_t i = 0; i < docs; ++i) raw.push_back({"d" + std::to_string(i), {"filler"}});
    return make_corpus(raw, NormalizeConfig{});
}

// Independent CValue/Basic/ComboBasic oracle over brute-force containment.
struct NestingOracle {
    std::vector<std::vector<std::size_t>> containers, contained;

    explicit NestingOracle(const CandidateSet& cs)
        : containers(cs.terms.size()), contained(cs.terms.size()) {
        for (std::size_t a = 0; a < cs.terms.size(); ++a)
            for (std::size_t b = 0; b < cs.terms.size(); ++b)
                if (a != b && oracle::contains_subsequence(cs.terms[b].words, cs.terms[a].words)) {
                    containers[a].push_back(b);
                    contained[b].push_back(a);
                }
    }

    double cvalue(const CandidateSet& cs, std::size_t i) const {
        double w = std::log2(static_cast<double>(cs.terms[i].words.size()) + 0.1);
        double f = static_cast<double>(cs.terms[i].tf_total);
        if (containers[i].empty()) return w * f;
        double nested = 0.0;
        for (std::size_t b : containers[i]) nested += static_cast<double>(cs.terms[b].tf_total);
        return w * (f - nested / static_cast<double>(containers[i].size()));
    }
};

}  // namespace

TEST_CASE("tfidf: direct formula and idf monotonicity") {
    NormalizeConfig ncfg;
    Corpus corpus = make_corpus({{"d1", {"alpha", "beta", "alpha", "beta", "alpha", "beta"}},
                                 {"d2", {"alpha", "beta", "alpha", "beta", "alpha", "beta"}},
                                 {"d3", {"gamma", "delta"}},
                                 {"d4", {"epsilon", "zeta"}}},
                                ncfg);
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 2});
    ScoredList list = score_tfidf(corpus, cs);
    const CandidateTerm* ab = cs.find("alpha beta");
    REQUIRE(ab != nullptr);
    CHECK(ab->tf_total == 6);
    CHECK(ab->df() == 2);
    CHECK(list.score("alpha beta") == doctest::Approx(6.0 * std::log(2.0)).epsilon(1e-12));

    // Same frequency, broader document spread scores lower.
    CandidateSet pair = make_set({term("everywhere", 4, {{"d0", 1}, {"d1", 1}, {"d2", 1}, {"d3", 1}}),
                                  term("focused", 4, {{"d0", 4}})});
    ScoredList two = score_tfidf(dummy_corpus(4), pair);
    CHECK(two.rank("focused") == 1);
    CHECK(two.rank("everywhere") == 2);

    CHECK_THROWS_AS(score_tfidf(corpus, CandidateSet{}), data_error);
}

TEST_CASE("single-candidate list ranks it first") {
    CandidateSet cs = make_set({term("only", 3)});
    ScoredList list = score_tfidf(dummy_corpus(1), cs);
    CHECK(list.rank("only") == 1);
}

TEST_CASE("cvalue: direct formula, absorption, containment oracle") {
    Corpus corpus = dummy_corpus(1);

    CandidateSet lone = make_set({term("alpha beta", 10)});
    CHECK(score_cvalue(corpus, lone).score("alpha beta") ==
          doctest::Approx(10.0 * std::log2(2.1)).epsilon(1e-12));

    CandidateSet absorbed = make_set({term("alpha beta", 7), term("alpha beta gamma", 7)});
    CHECK(score_cvalue(corpus, absorbed).score("alpha beta") == doctest::Approx(0.0));

    CandidateSet chain = make_set({term("alpha", 9), term("alpha beta", 6), term("alpha beta gamma", 2),
                                   term("beta gamma", 3), term("delta", 4)});
    NestingOracle oracle_idx(chain);
    ScoredList got = score_cvalue(corpus, chain);
    for (std::size_t i = 0; i < chain.terms.size(); ++i)
        CHECK(got.score(chain.terms[i].canonical) ==
              doctest::Approx(oracle_idx.cvalue(chain, i)).epsilon(1e-12));
}

TEST_CASE("cvalue nesting sets match brute force on random sets") {
    Rng rng(99);
    std::vector<std::string> pool = {"aa", "bb", "cc", "dd"};
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<CandidateTerm> terms;
        std::unordered_set<std::string> seen;
        std::size_t n = 2 + rng.next_below(13);
        while (terms.size() < n) {
            std::size_t len = 1 + rng.next_below(4);
            std::string canonical;
            for (std::size_t k = 0; k < len; ++k)
                canonical += (k ? " " : "") + pool[rng.next_below(pool.size())];
            if (!seen.insert(canonical).second) continue;
            terms.push_back(term(canonical, 1 + rng.next_below(20)));
        }
        CandidateSet cs = make_set(std::move(terms));
        NestingOracle oracle_idx(cs);
        ContainmentIndex idx = ContainmentIndex::build(cs);
        for (std::size_t i = 0; i < cs.terms.size(); ++i) {
            auto a = idx.containers[i];
            auto b = oracle_idx.containers[i];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            CHECK(a == b);
        }
        ScoredList got = score_cvalue(dummy_corpus(1), cs);
        for (std::size_t i = 0; i < cs.terms.size(); ++i) {
            if (idx.containers[i].empty())
                CHECK(got.score(cs.terms[i].canonical) ==
                      std::log2(static_cast<double>(cs.terms[i].words.size()) + 0.1) *
                          static_cast<double>(cs.terms[i].tf_total));
            CHECK(got.score(cs.terms[i].canonical) ==
                  doctest::Approx(oracle_idx.cvalue(cs, i)).epsilon(1e-12));
        }
    }
}

TEST_CASE("basic: formula, nesting bonus, monotonicity") {
    Corpus corpus = dummy_corpus(1);
    CandidateSet cs = make_set(
        {term("alpha beta", 10), term("gamma alpha beta", 2), term("alpha beta delta", 3)});
    ScoredList list = score_basic(corpus, cs, 3.5);
    CHECK(list.score("alpha beta") == doctest::Approx(2.0 * std::log(10.0) + 3.5 * 2.0).epsilon(1e-12));
    CHECK(list.score("gamma alpha beta") == doctest::Approx(3.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(list.score("alpha beta delta") == doctest::Approx(3.0 * std::log(3.0)).epsilon(1e-12));

    // Only e_t differs: the more-nested candidate must rank first.
    CandidateSet pair = make_set({term("alpha beta", 5), term("gamma delta", 5),
                                  term("alpha beta epsilon", 1), term("zeta", 1)});
    ScoredList two = score_basic(corpus, pair, 3.5);
    CHECK(two.rank("alpha beta") < two.rank("gamma delta"));
    CHECK(two.score("alpha beta") - two.score("gamma delta") == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("combobasic: reductions and oracle") {
    Corpus corpus = dummy_corpus(1);
    CandidateSet cs = make_set({term("alpha beta", 10), term("gamma alpha beta", 2),
                                term("alpha beta delta", 3), term("beta", 7)});
    ScoredList plain = score_basic(corpus, cs, 0.75);
    ScoredList combo_b0 = score_combobasic(corpus, cs, 0.75, 0.0);
    for (const auto& t : cs.terms)
        CHECK(combo_b0.score(t.canonical) == doctest::Approx(plain.score(t.canonical)).epsilon(1e-12));

    ScoredList bare = score_combobasic(corpus, cs, 0.0, 0.0);
    for (const auto& t : cs.terms)
        CHECK(bare.score(t.canonical) ==
              doctest::Approx(static_cast<double>(t.words.size()) *
                              std::log(static_cast<double>(t.tf_total)))
                  .epsilon(1e-12));

    NestingOracle oracle_idx(cs);
    ScoredList full = score_combobasic(corpus, cs, 0.75, 0.1);
    for (std::size_t i = 0; i < cs.terms.size(); ++i) {
        double expected = static_cast<double>(cs.terms[i].words.size()) *
                              std::log(static_cast<double>(cs.terms[i].tf_total)) +
                          0.75 * static_cast<double>(oracle_idx.containers[i].size()) +
                          0.1 * static_cast<double>(oracle_idx.contained[i].size());
        CHECK(full.score(cs.terms[i].canonical) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("rake: hand enumeration over three candidates") {
    // deg(deep)=2 freq=4; deg(learning)=3 freq=10; deg(network)=1 freq=3.
    CandidateSet cs = make_set({term("deep learning", 4), term("learning", 6), term("network", 3)});
    ScoredList list = score_rake(dummy_corpus(1), cs);
    CHECK(list.score("deep learning") == doctest::Approx(2.0 / 4.0 + 3.0 / 10.0).epsilon(1e-12));
    CHECK(list.score("learning") == doctest::Approx(3.0 / 10.0).epsilon(1e-12));
    CHECK(list.score("network") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    // A word living in longer candidates outscores one of equal frequency in
    // a short candidate.
    CHECK(list.score("network") > list.score("learning"));
}

TEST_CASE("weirdness: smoothing and direct evaluation") {
    std::vector<std::string> tokens(990, "filler");
    for (int i = 0; i < 10; ++i) tokens.push_back("signal");
    Corpus corpus = make_corpus({{"d1", tokens}}, NormalizeConfig{});
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 1});
    REQUIRE(cs.find("signal") != nullptr);

    RefCorpusStats ref;
    ref.freq = {{"signal", 1}};
    ref.total = 10000;
    ScoredList list = score_weirdness(corpus, cs, ref);
    CHECK(list.score("signal") == doctest::Approx(50.0).epsilon(1e-12));
    // Absent from the reference: add-one smoothing keeps it finite.
    CHECK(list.score("filler") == doctest::Approx((990.0 / 1000.0) / (1.0 / 10000.0)).epsilon(1e-12));
}

TEST_CASE("weirdness: identical target/reference distributions score uniformly") {
    std::vector<std::string> tokens(10, "alpha");
    for (int i = 0; i < 20; ++i) tokens.push_back("beta");
    Corpus corpus = make_corpus({{"d1", tokens}}, NormalizeConfig{});
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 1});
    RefCorpusStats ref;
    ref.freq = {{"alpha", 9}, {"beta", 19}};
    ref.total = 30;
    ScoredList list = score_weirdness(corpus, cs, ref);
    CHECK(list.score("alpha") == doctest::Approx(list.score("beta")).epsilon(1e-12));
}

TEST_CASE("relevance: direct formula evaluation") {
    std::vector<std::string> tokens(990, "filler");
    for (int i = 0; i < 10; ++i) tokens.push_back("signal");
    Corpus corpus = make_corpus({{"d1", tokens}}, NormalizeConfig{});
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 1});
    RefCorpusStats ref;
    ref.freq = {{"signal", 1}};
    ref.total = 10000;
    ScoredList list = score_relevance(corpus, cs, ref);
    // weirdness(signal)=50, df/N = 1.
    CHECK(list.score("signal") == doctest::Approx(1.0 - 1.0 / std::log2(2.0 + 50.0)).epsilon(1e-12));
    CHECK(list.score("signal") < 1.0);
}

TEST_CASE("glossex: direct evaluation and structural bound") {
    std::vector<std::string> tokens(990, "filler");
    for (int i = 0; i < 10; ++i) tokens.push_back("signal");
    Corpus corpus = make_corpus({{"d1", tokens}}, NormalizeConfig{});
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 1});
    RefCorpusStats ref;
    ref.freq = {{"signal", 1}};
    ref.total = 10000;
    ScoredList list = score_glossex(corpus, cs, ref, 0.5, 0.5);
    double td = std::log((10.0 / 1000.0) / (2.0 / 10000.0));
    double tc = 10.0 * std::log10(11.0) / 10.0;
    CHECK(list.score("signal") == doctest::Approx(0.5 * td + 0.5 * tc).epsilon(1e-12));

    // For 1-word candidates term cohesion is bounded by log10(f+1).
    for (const auto& t : cs.terms) {
        if (t.words.size() != 1) continue;
        double bound = std::log10(static_cast<double>(t.tf_total) + 1.0);
        double specificity = std::log(
            (static_cast<double>(corpus.word_tf(t.words[0])) / static_cast<double>(corpus.total_tokens)) /
            ((static_cast<double>(ref.count(t.words[0])) + 1.0) / static_cast<double>(ref.total)));
        CHECK(list.score(t.canonical) <= 0.5 * specificity + 0.5 * bound + 1e-12);
    }
}

TEST_CASE("glossex: identical distributions zero out domain specificity") {
    std::vector<std::string> tokens(10, "alpha");
    for (int i = 0; i < 20; ++i) tokens.push_back("beta");
    Corpus corpus = make_corpus({{"d1", tokens}}, NormalizeConfig{});
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 1});
    RefCorpusStats ref;
    ref.freq = {{"alpha", 9}, {"beta", 19}};
    ref.total = 30;
    // With alpha=1, beta=0 the score is pure domain specificity.
    ScoredList td_only = score_glossex(corpus, cs, ref, 1.0, 0.0);
    CHECK(td_only.score("alpha") == doctest::Approx(0.0));
    CHECK(td_only.score("beta") == doctest::Approx(0.0));
}

TEST_CASE("chisquare: null case, hand contingency, doubling") {
    NormalizeConfig ncfg;
    ScorerOptions opt;
    opt.chisq_frequent_fraction = 0.0;

    // tau co-occurs with both frequent terms exactly at expectation.
    Corpus null_corpus = make_corpus(
        {{"d1", {"alpha", "alpha", "tau"}}, {"d2", {"beta", "beta", "tau"}}, {"d3", {"alpha", "beta"}}},
        ncfg);
    CandidateSet null_cs = extract_candidates(null_corpus, ExtractionConfig{.minw = 1, .maxw = 1});
    opt.chisq_frequent_min = 2;
    opt.chisq_subtract_max = false;
    CHECK(score_chisquare(null_corpus, null_cs, opt).score("tau") == doctest::Approx(0.0));

    // tau always with gamma, never with delta/epsilon.
    std::vector<std::pair<std::string, std::vector<std::string>>> docs = {
        {"d1", {"gamma", "tau"}},
        {"d2", {"gamma", "tau"}},
        {"d3", {"gamma", "delta"}},
        {"d4", {"delta", "epsilon"}},
        {"d5", {"epsilon"}}};
    Corpus corpus = make_corpus(docs, ncfg);
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 1});
    opt.chisq_frequent_min = 3;
    opt.chisq_subtract_max = false;
    ScoredList plain = score_chisquare(corpus, cs, opt);
    CHECK(plain.score("tau") == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    opt.chisq_subtract_max = true;
    ScoredList robust = score_chisquare(corpus, cs, opt);
    CHECK(robust.score("tau") == doctest::Approx(8.0 / 7.0).epsilon(1e-12));

    // Duplicating every document doubles each statistic (p_g is share-based).
    auto doubled_docs = docs;
    for (const auto& [id, toks] : docs) doubled_docs.push_back({id + "_copy", toks});
    Corpus doubled = make_corpus(doubled_docs, ncfg);
    CandidateSet doubled_cs = extract_candidates(doubled, ExtractionConfig{.minw = 1, .maxw = 1});
    for (bool subtract : {false, true}) {
        opt.chisq_subtract_max = subtract;
        ScoredList one = score_chisquare(corpus, cs, opt);
        ScoredList two = score_chisquare(doubled, doubled_cs, opt);
        for (const auto& t : cs.terms)
            CHECK(two.score(t.canonical) == doctest::Approx(2.0 * one.score(t.canonical)).epsilon(1e-9));
    }

    CandidateSet tiny = make_set({term("alone", 1)});
    CHECK_THROWS_AS(score_chisquare(corpus, tiny, opt), data_error);
}

TEST_CASE("vote: identity, symmetry, mean-rank ties") {
    ScoredList a("m1", {{"x", 3.0}, {"y", 2.0}, {"z", 1.0}});
    ScoredList single = vote({&a});
    CHECK(single.rank("x") == 1);
    CHECK(single.rank("y") == 2);
    CHECK(single.rank("z") == 3);

    ScoredList b("m2", {{"x", 1.0}, {"y", 2.0}, {"z", 3.0}});
    ScoredList rev = vote({&a, &b});
    CHECK(rev.rank("x") == 1);  // all means equal -> lexicographic
    CHECK(rev.rank("y") == 2);
    CHECK(rev.rank("z") == 3);

    // Ranks (1,3) and (2,2) tie at mean 2; lexicographic order breaks it.
    ScoredList l1("m1", {{"m", 3.0}, {"n", 2.0}, {"o", 1.0}});
    ScoredList l2("m2", {{"o", 3.0}, {"n", 2.0}, {"m", 1.0}});
    ScoredList tied = vote({&l1, &l2});
    CHECK(tied.rank("m") == 1);
    CHECK(tied.rank("n") == 2);
    CHECK(tied.rank("o") == 3);

    ScoredList v1 = vote({&a, &a, &a});
    for (const auto& e : a.entries()) CHECK(v1.rank(e.canonical) == a.rank(e.canonical));

    ScoredList mismatched("m3", {{"x", 1.0}, {"w", 2.0}, {"z", 3.0}});
    CHECK_THROWS_AS(vote({&a, &mismatched}), data_error);
}

TEST_CASE("contrastive scorers require reference stats") {
    Corpus corpus = dummy_corpus(2);
    CandidateSet cs = make_set({term("alpha", 2), term("beta", 1)});
    for (const std::string m : {"weirdness", "relevance", "glossex"})
        CHECK_THROWS_AS(run_scorer(m, corpus, cs, nullptr, ScorerOptions{}), config_error);
    CHECK_NOTHROW(run_scorer("tfidf", corpus, cs, nullptr, ScorerOptions{}));
}

TEST_CASE("every scorer covers the candidate set exactly") {
    Rng rng(3);
    std::vector<std::string> pool = {"cell", "receptor", "protein", "bind", "signal", "pathway"};
    std::vector<std::pair<std::string, std::vector<std::string>>> docs;
    for (int d = 0; d < 6; ++d) {
        std::vector<std::string> tokens;
        for (int i = 0; i < 60; ++i) tokens.push_back(pool[rng.next_below(pool.size())]);
        docs.push_back({"d" + std::to_string(d), tokens});
    }
    Corpus corpus = make_corpus(docs, NormalizeConfig{});
    CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 3});
    RefCorpusStats ref;
    ref.freq = {{"cell", 500}, {"protein", 20}};
    ref.total = 100000;
    ScorerOptions opt;
    for (const auto& name : scorer_names()) {
        ScoredList list = run_scorer(name, corpus, cs, &ref, opt);
        REQUIRE(list.size() == cs.terms.size());
        for (const auto& t : cs.terms) CHECK(list.contains(t.canonical));
        for (std::size_t i = 1; i < list.entries().size(); ++i) {
            const auto& prev = list.entries()[i - 1];
            const auto& cur = list.entries()[i];
            CHECK((prev.score > cur.score || (prev.score == cur.score && prev.canonical < cur.canonical)));
        }
    }
}

TEST_CASE("tfidf and weirdness rank order is invariant under frequency scaling") {
    Rng rng(17);
    std::vector<std::string> pool = {"cell", "receptor", "protein", "bind", "signal", "pathway"};
    for (std::uint64_t k : {2ULL, 7ULL}) {
        std::vector<std::pair<std::string, std::vector<std::string>>> docs;
        for (int d = 0; d < 3; ++d) {
            std::vector<std::string> tokens;
            std::size_t len = 10 + rng.next_below(15);
            for (std::size_t i = 0; i < len; ++i) tokens.push_back(pool[rng.next_below(pool.size())]);
            docs.push_back({"d" + std::to_string(d), tokens});
        }
        Corpus corpus = make_corpus(docs, NormalizeConfig{});
        CandidateSet cs = extract_candidates(corpus, ExtractionConfig{.minw = 1, .maxw = 2});
        REQUIRE(cs.terms.size() <= 50);

        Corpus scaled_corpus = corpus;
        scaled_corpus.total_tokens *= k;
        for (auto& [w, n] : scaled_corpus.tf) n *= k;
        CandidateSet scaled_cs = cs;
        for (auto& t : scaled_cs.terms) {
            t.tf_total *= k;
            for (auto& [doc, n] : t.tf_doc) n *= k;
        }

        RefCorpusStats ref;
        ref.freq = {{"cell", 900}, {"signal", 100}};
        ref.total = 50000;

        auto order = [](const ScoredList& l) {
            std::vector<std::string> o;
            for (const auto& e : l.entries()) o.push_back(e.canonical);
            return o;
        };
        CHECK(order(score_tfidf(corpus, cs)) == order(score_tfidf(scaled_corpus, scaled_cs)));
        CHECK(order(score_weirdness(corpus, cs, ref)) ==
              order(score_weirdness(scaled_corpus, scaled_cs, ref)));
    }
}
