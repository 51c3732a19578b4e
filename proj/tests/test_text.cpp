#include <doctest.h>

#include <cstdlib>

#include "ate/text.hpp"
#include "ate/util.hpp"

using namespace ate;

TEST_CASE("normalize_word filters stopwords, junk and short words") {
    NormalizeConfig cfg;
    CHECK_FALSE(normalize_word("the", cfg).has_value());
    CHECK_FALSE(normalize_word("%%%", cfg).has_value());
    CHECK_FALSE(normalize_word("a1", NormalizeConfig{.stopwords = {}, .minc = 3}).has_value());
    CHECK(normalize_word("Cells", cfg) == std::string("cell"));
    CHECK(normalize_word("CD45RA+", cfg) == std::string("cd45ra+"));
}

TEST_CASE("lemmatizer rule table") {
    Lemmatizer lm;
    CHECK(lm.lemma("cells") == "cell");
    CHECK(lm.lemma("binds") == "bind");
    CHECK(lm.lemma("studies") == "study");
    CHECK(lm.lemma("boxes") == "box");
    CHECK(lm.lemma("classes") == "class");
    CHECK(lm.lemma("matrices") == "matrix");
    CHECK(lm.lemma("running") == "run");
    CHECK(lm.lemma("stopped") == "stop");
    CHECK(lm.lemma("used") == "use");
    CHECK(lm.lemma("speed") == "speed");
    CHECK(lm.lemma("gas") == "gas");
    CHECK(lm.lemma("series") == "series");
    CHECK(Lemmatizer(Lemmatizer::Kind::none).lemma("cells") == "cells");
    CHECK_THROWS_AS(Lemmatizer::from_name("porter"), config_error);
}

TEST_CASE("normalize_word is idempotent on surviving words") {
    NormalizeConfig cfg;
    Rng rng(42);
    const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
    const std::vector<std::string> suffixes = {"", "s", "es", "ies", "ing", "ed", "ss", "us"};
    for (int trial = 0; trial < 2000; ++trial) {
        std::string w;
        std::size_t len = 1 + rng.next_below(8);
        for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.next_below(alphabet.size())];
        w += suffixes[rng.next_below(suffixes.size())];
        auto once = normalize_word(w, cfg);
        if (!once) continue;
        auto twice = normalize_word(*once, cfg);
        REQUIRE_MESSAGE(twice.has_value(), "word: ", w, " once: ", *once);
        CHECK_MESSAGE(*twice == *once, "word: ", w, " once: ", *once, " twice: ", *twice);
    }
}

TEST_CASE("plain tokenizer strips edge punctuation but keeps '+' and hyphens") {
    auto toks = tokenize_plain("The (acoustic) edge-detection, with CD45RA+ cells!");
    REQUIRE(toks.size() == 6);
    CHECK(toks[0] == "The");
    CHECK(toks[1] == "acoustic");
    CHECK(toks[2] == "edge-detection");
    CHECK(toks[3] == "with");
    CHECK(toks[4] == "CD45RA+");
    CHECK(toks[5] == "cells");
    CHECK(tokenize_plain("  \t\n ").empty());
    CHECK(tokenize_plain("... --- !!!").empty());
}

TEST_CASE("stopword list is pinned") {
    CHECK(default_stopwords().size() == 158);
    CHECK(default_stopwords().count("the") == 1);
    CHECK(default_stopwords().count("cell") == 0);

    // The shipped reference file mirrors the built-in list exactly.
    if (const char* root = std::getenv("SEMRERANK_ROOT"); root && *root) {
        auto from_file = load_stopword_file(std::string(root) + "/data/stopwords_en.txt");
        CHECK(from_file == default_stopwords());
    }
}
