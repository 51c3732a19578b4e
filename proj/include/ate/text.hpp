#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ate {

// Bytes >= 0x80 are treated as letters so UTF-8 text passes through intact.
inline bool is_word_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

inline bool has_alnum(std::string_view w) {
    for (unsigned char c : w)
        if (is_word_char(c)) return true;
    return false;
}

inline std::string to_lower(std::string_view w) {
    std::string out(w);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

// Deterministic rule-table lemmatizer for English: a small irregular-form
// dictionary plus suffix rules for -ies/-es/-s/-ing/-ed. Input must be
// lowercase. Output is stable under re-application.
class Lemmatizer {
  public:
    enum class Kind { english_rules, none };

    explicit Lemmatizer(Kind kind = Kind::english_rules) : kind_(kind) {}

    static Lemmatizer from_name(std::string_view name);

    std::string lemma(std::string_view lower) const;
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

// The shipped stopword list (see data/stopwords_en.txt for the same content);
// word count documented in the README.
const std::unordered_set<std::string>& default_stopwords();

struct NormalizeConfig {
    std::unordered_set<std::string> stopwords = default_stopwords();
    std::size_t minc = 2;              // minimum characters per word
    Lemmatizer lemmatizer{};           // rule-table by default
    bool require_alnum = true;

    static NormalizeConfig with_stopword_file(const std::string& path, std::size_t minc,
                                              std::string_view lemmatizer_name = "english-rules");
};

// Lowercase + lemmatize, dropping stopwords (checked on both the surface and
// the lemma), words without an alphanumeric character, and words shorter than
// minc after lemmatization. Returns nothing for dropped words.
std::optional<std::string> normalize_word(std::string_view surface, const NormalizeConfig& cfg);

// Lowercase lemma with no filtering; empty only when the surface has no
// alphanumeric character. Candidate extraction needs this for words that
// normalize_word would drop (interior stopwords, short words).
std::string lemma_of(std::string_view surface, const NormalizeConfig& cfg);

// Whitespace tokenizer for plain text: splits on Unicode whitespace, then
// strips leading/trailing punctuation. Intra-word hyphens and '+' survive
// ("CD45RA+", "edge-detection").
std::vector<std::string> tokenize_plain(std::string_view text);

std::unordered_set<std::string> load_stopword_file(const std::string& path);

}  // namespace ate
