#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ate/corpus.hpp"

namespace ate {

struct TrainParams {
    std::size_t dim = 100;
    std::size_t window = 3;
    std::size_t epochs = 15;
    std::size_t negative = 5;
    double learning_rate = 0.025;  // linear decay over training
    std::uint64_t rng_seed = 7;
};

// Word -> dense vector map. Vectors all share one dimension; vocabulary keys
// are normalized words.
class EmbeddingModel {
  public:
    EmbeddingModel() = default;
    EmbeddingModel(std::size_t dim, TrainParams meta) : dim_(dim), meta_(meta) {}

    std::size_t dim() const { return dim_; }
    std::size_t vocab_size() const { return words_.size(); }
    const TrainParams& meta() const { return meta_; }
    const std::vector<std::string>& words() const { return words_; }

    bool contains(const std::string& word) const { return index_.count(word) > 0; }
    const float* vector(const std::string& word) const;  // throws data_error when OOV
    void add(const std::string& word, std::vector<float> values);

    void save(const std::string& path) const;
    static EmbeddingModel load(const std::string& path);

  private:
    std::size_t dim_ = 0;
    TrainParams meta_{};
    std::vector<std::string> words_;
    std::vector<float> data_;  // row-major vocab x dim
    std::unordered_map<std::string, std::size_t> index_;
};

// Skip-gram with negative sampling over the filtered word streams of the
// corpus (stopwords removed, lemmatized, word order retained, no frequency
// cutoff). Single-threaded and bit-reproducible for a fixed seed.
EmbeddingModel train_embeddings(const Corpus& corpus, const TrainParams& params);

// Cosine of the two word vectors; zero vectors score 0 by convention.
double relatedness(const EmbeddingModel& m, const std::string& a, const std::string& b);

// Per-word ranked neighbor lists over a target vocabulary, truncated to the
// top rel_top fraction. Stored scores let graph construction apply rel_min.
class RelatednessIndex {
  public:
    struct Neighbor {
        std::string word;
        double score;
    };

    RelatednessIndex() = default;

    double rel_min() const { return rel_min_; }
    double rel_top() const { return rel_top_; }
    const std::vector<std::string>& vocabulary() const { return vocab_; }
    const std::vector<std::string>& dropped_oov() const { return dropped_; }

    bool contains(const std::string& word) const { return index_.count(word) > 0; }
    const std::vector<Neighbor>& neighbors(const std::string& word) const;

    void save(const std::string& path) const;
    static RelatednessIndex load(const std::string& path);

    friend RelatednessIndex build_relrank(const EmbeddingModel& m,
                                          const std::unordered_set<std::string>& vocabulary,
                                          double rel_min, double rel_top, unsigned threads);

  private:
    double rel_min_ = 0.5;
    double rel_top_ = 0.15;
    std::vector<std::string> vocab_;   // sorted
    std::vector<std::string> dropped_; // vocabulary words absent from the model
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<Neighbor>> lists_;
};

// Exact brute-force top-k ranking by cosine over unit-normalized vectors.
// Truncation size is ceil(rel_top * (|vocab| - 1)); ties order by word
// ascending; a word never lists itself.
RelatednessIndex build_relrank(const EmbeddingModel& m, const std::unordered_set<std::string>& vocabulary,
                               double rel_min, double rel_top, unsigned threads = 1);

}  // namespace ate
