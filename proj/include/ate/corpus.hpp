#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ate/text.hpp"

namespace ate {

struct Token {
    std::string surface;
    std::string lemma;  // lowercase lemma; empty when the surface has no alphanumeric character
    std::string norm;   // filtered normal form (stopwords, short words dropped); empty when filtered
    std::string pos;    // empty for plain corpora
    std::size_t position = 0;
    bool stop = false;  // surface or lemma is on the stopword list
};

struct Document {
    std::string id;
    std::vector<Token> tokens;
};

enum class CorpusFormat { plain, tagged };

// Immutable after load; tf/df are indexed by lemma over every token that has
// one (stopwords included, so scorers can look up any candidate word).
struct Corpus {
    std::vector<Document> docs;
    std::unordered_map<std::string, std::size_t> tf;
    std::unordered_map<std::string, std::size_t> df;
    std::size_t total_tokens = 0;  // tokens with a lemma

    std::size_t word_tf(const std::string& lemma) const {
        auto it = tf.find(lemma);
        return it == tf.end() ? 0 : it->second;
    }
};

// Plain format: directory of UTF-8 .txt files, one document per file.
// Tagged format: directory of .tsv files, one "token<TAB>pos" row per token.
// Document ids are file stems; loading order is id-sorted.
Corpus load_corpus(const std::string& path, CorpusFormat format, const NormalizeConfig& cfg);

// Normalize raw documents (surface/pos/position filled) and index tf/df.
// Documents are sorted by id; duplicate ids are an error.
Corpus finalize_corpus(std::vector<Document> docs, const NormalizeConfig& cfg);

// Build a Corpus from in-memory documents of raw token surfaces (tests,
// bindings). Pass empty tags for untagged input.
Corpus make_corpus(const std::vector<std::pair<std::string, std::vector<std::string>>>& docs,
                   const NormalizeConfig& cfg);

std::unordered_set<std::string> words_of(const Document& doc);

// Filtered word stream of a document, order retained (embedding training,
// co-occurrence windows).
std::vector<std::string> norm_stream(const Document& doc);

}  // namespace ate
