#include "ate/text.hpp"

#include <array>
#include <fstream>
#include <unordered_map>

#include "ate/util.hpp"

namespace ate {

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

bool ends_with(std::string_view w, std::string_view suf) {
    return w.size() >= suf.size() && w.compare(w.size() - suf.size(), suf.size(), suf) == 0;
}

const std::unordered_map<std::string, std::string>& irregular_forms() {
    static const std::unordered_map<std::string, std::string> table = {
        {"men", "man"},         {"women", "woman"},     {"children", "child"},
        {"feet", "foot"},       {"teeth", "tooth"},     {"mice", "mouse"},
        {"geese", "goose"},     {"people", "person"},   {"lives", "life"},
        {"leaves", "leaf"},     {"halves", "half"},     {"selves", "self"},
        {"knives", "knife"},    {"wives", "wife"},      {"wolves", "wolf"},
        {"shelves", "shelf"},   {"indices", "index"},   {"matrices", "matrix"},
        {"vertices", "vertex"}, {"analyses", "analysis"}, {"hypotheses", "hypothesis"},
        {"theses", "thesis"},   {"bases", "basis"},     {"axes", "axis"},
        {"criteria", "criterion"}, {"phenomena", "phenomenon"}, {"media", "medium"},
        {"nuclei", "nucleus"},  {"radii", "radius"},    {"stimuli", "stimulus"},
        {"foci", "focus"},      {"fungi", "fungus"},    {"alumni", "alumnus"},
        {"genera", "genus"},    {"corpora", "corpus"},  {"went", "go"},
        {"gone", "go"},         {"done", "do"},         {"made", "make"},
        {"taken", "take"},      {"took", "take"},       {"given", "give"},
        {"gave", "give"},       {"shown", "show"},      {"showed", "show"},
        {"found", "find"},      {"held", "hold"},       {"kept", "keep"},
        {"left", "leave"},      {"lost", "lose"},       {"met", "meet"},
        {"paid", "pay"},        {"said", "say"},        {"seen", "see"},
        {"saw", "see"},         {"sent", "send"},       {"set", "set"},
        {"told", "tell"},       {"thought", "think"},   {"understood", "understand"},
        {"used", "use"},        {"written", "write"},   {"wrote", "write"},
        {"built", "build"},     {"brought", "bring"},   {"began", "begin"},
        {"begun", "begin"},     {"chosen", "choose"},   {"chose", "choose"},
        {"grown", "grow"},      {"grew", "grow"},       {"known", "know"},
        {"knew", "know"},       {"led", "lead"},        {"ran", "run"},
        {"spent", "spend"},     {"became", "become"},   {"got", "get"},
        {"has", "have"},        {"was", "be"},          {"were", "be"},
        {"does", "do"},         {"goes", "go"},         {"died", "die"},
    };
    return table;
}

// Words ending in -s that must not be singularized by the suffix rules.
const std::unordered_set<std::string>& s_exceptions() {
    static const std::unordered_set<std::string> table = {
        "gas",    "bias",   "canvas", "alias",  "atlas",  "lens",    "series",
        "species","news",   "physics","basis",  "analysis","thesis", "crisis",
        "axis",   "always", "perhaps","besides","mathematics", "dynamics",
        "statistics", "economics", "genetics", "acoustics", "its",
    };
    return table;
}

bool undouble_candidate(char c) {
    // After stripping -ing/-ed, a doubled final consonant is collapsed
    // (running -> run) except for letters commonly doubled in the base form.
    return c != 'l' && c != 's' && c != 'z' && c != 'e' && !is_vowel(c);
}

std::string strip_ing_ed(std::string w, std::size_t suf_len) {
    std::string stem = w.substr(0, w.size() - suf_len);
    bool stem_has_vowel = false;
    for (char c : stem)
        if (is_vowel(c) || c == 'y') stem_has_vowel = true;
    // Vowel-final stems ("speed" - ed, "seeing" - ing) are left alone; the
    // suffix rules cannot recover the base form reliably there.
    if (!stem_has_vowel || stem.size() < 2 || is_vowel(stem.back())) return w;
    std::size_t n = stem.size();
    if (n >= 3 && stem[n - 1] == stem[n - 2] && undouble_candidate(stem[n - 1])) {
        stem.pop_back();  // stopped -> stop
        return stem;
    }
    // making -> make: restore the final e after [consonant][vowel][consonant]
    // stems ending in a letter that rarely closes an English base form.
    if (n >= 2 && is_vowel(stem[n - 2])) {
        char last = stem[n - 1];
        if (n >= 3 && !is_vowel(stem[n - 3]) && (last == 'c' || last == 'g' || last == 'v' || last == 'u' ||
                                                 last == 's' || last == 'z'))
            return stem + "e";
    }
    return stem;
}

std::string english_lemma_once(const std::string& w) {
    if (w.size() < 3) return w;
    auto irr = irregular_forms().find(w);
    if (irr != irregular_forms().end()) return irr->second;
    if (w.back() == 's') {
        if (s_exceptions().count(w)) return w;
        if (ends_with(w, "ies") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
        if (ends_with(w, "sses") || ends_with(w, "xes") || ends_with(w, "zzes") || ends_with(w, "ches") ||
            ends_with(w, "shes"))
            return w.substr(0, w.size() - 2);
        if (ends_with(w, "ss") || ends_with(w, "us") || ends_with(w, "is")) return w;
        return w.substr(0, w.size() - 1);
    }
    if (ends_with(w, "ied") && w.size() > 4) return w.substr(0, w.size() - 3) + "y";
    if (ends_with(w, "ing") && w.size() > 5) return strip_ing_ed(w, 3);
    if (ends_with(w, "ed") && w.size() > 4) return strip_ing_ed(w, 2);
    return w;
}

// Iterate to a fixed point so re-lemmatizing a lemma never changes it
// ("gones" -> "gone" -> "go" resolves in one call).
std::string english_lemma(std::string w) {
    for (int pass = 0; pass < 5; ++pass) {
        std::string next = english_lemma_once(w);
        if (next == w) return w;
        w = std::move(next);
    }
    return w;
}

}  // namespace

Lemmatizer Lemmatizer::from_name(std::string_view name) {
    if (name == "none") return Lemmatizer(Kind::none);
    if (name == "english-rules" || name.empty()) return Lemmatizer(Kind::english_rules);
    throw config_error("unknown lemmatizer: " + std::string(name));
}

std::string Lemmatizer::lemma(std::string_view lower) const {
    if (kind_ == Kind::none) return std::string(lower);
    return english_lemma(std::string(lower));
}

const std::unordered_set<std::string>& default_stopwords() {
    static const std::unordered_set<std::string> words = {
        "a", "about", "above", "after", "again", "against", "all", "almost", "also", "although",
        "am", "among", "an", "and", "any", "are", "as", "at", "be", "because",
        "been", "before", "being", "below", "between", "both", "but", "by", "can", "cannot",
        "could", "did", "do", "does", "doing", "down", "during", "each", "either", "else",
        "etc", "ever", "every", "few", "for", "from", "further", "had", "has", "have",
        "having", "he", "her", "here", "hers", "herself", "him", "himself", "his", "how",
        "however", "i", "if", "in", "into", "is", "it", "its", "itself", "just",
        "least", "let", "may", "me", "might", "more", "most", "must", "my", "myself",
        "neither", "no", "nor", "not", "of", "off", "often", "on", "once", "only",
        "onto", "or", "other", "our", "ours", "ourselves", "out", "over", "own", "per",
        "rather", "said", "same", "shall", "she", "should", "since", "so", "some", "such",
        "than", "that", "the", "their", "theirs", "them", "themselves", "then", "there", "therefore",
        "these", "they", "this", "those", "through", "thus", "to", "too", "under", "until",
        "up", "upon", "us", "very", "was", "we", "were", "what", "when", "where",
        "whether", "which", "while", "who", "whom", "whose", "why", "will", "with", "within",
        "without", "would", "yet", "you", "your", "yours", "yourself", "yourselves",
    };
    return words;
}

NormalizeConfig NormalizeConfig::with_stopword_file(const std::string& path, std::size_t minc,
                                                    std::string_view lemmatizer_name) {
    NormalizeConfig cfg;
    if (!path.empty()) cfg.stopwords = load_stopword_file(path);
    cfg.minc = minc;
    cfg.lemmatizer = Lemmatizer::from_name(lemmatizer_name);
    return cfg;
}

std::optional<std::string> normalize_word(std::string_view surface, const NormalizeConfig& cfg) {
    std::string lower = to_lower(surface);
    if (cfg.stopwords.count(lower)) return std::nullopt;
    std::string lemma = cfg.lemmatizer.lemma(lower);
    if (cfg.stopwords.count(lemma)) return std::nullopt;
    if (cfg.require_alnum && !has_alnum(lemma)) return std::nullopt;
    if (lemma.size() < cfg.minc) return std::nullopt;
    return lemma;
}

std::string lemma_of(std::string_view surface, const NormalizeConfig& cfg) {
    std::string lower = to_lower(surface);
    if (!has_alnum(lower)) return std::string();
    return cfg.lemmatizer.lemma(lower);
}

std::vector<std::string> tokenize_plain(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0, n = text.size();
    while (i < n) {
        while (i < n && (static_cast<unsigned char>(text[i]) <= ' ')) ++i;
        std::size_t start = i;
        while (i < n && static_cast<unsigned char>(text[i]) > ' ') ++i;
        if (i == start) break;
        std::string_view raw = text.substr(start, i - start);
        // Strip edge punctuation; '+' is part of the word ("CD45RA+").
        while (!raw.empty() && !is_word_char(static_cast<unsigned char>(raw.front())) && raw.front() != '+')
            raw.remove_prefix(1);
        while (!raw.empty() && !is_word_char(static_cast<unsigned char>(raw.back())) && raw.back() != '+')
            raw.remove_suffix(1);
        if (!raw.empty()) tokens.emplace_back(raw);
    }
    return tokens;
}

std::unordered_set<std::string> load_stopword_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open stopword list: " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (!t.empty()) words.insert(to_lower(t));
    }
    return words;
}

}  // namespace ate
