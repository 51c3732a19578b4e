#include "ate/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ate/util.hpp"

namespace ate {

namespace {

constexpr double kMaxExp = 6.0;

double sigmoid(double x) {
    if (x > kMaxExp) return 1.0;
    if (x < -kMaxExp) return 0.0;
    return 1.0 / (1.0 + std::exp(-x));
}

struct Vocab {
    std::vector<std::string> words;                       // frequency-descending, then lexicographic
    std::vector<std::size_t> counts;
    std::unordered_map<std::string, std::size_t> index;
};

Vocab build_vocab(const std::vector<std::vector<std::string>>& streams) {
    std::unordered_map<std::string, std::size_t> counts;
    for (const auto& s : streams)
        for (const auto& w : s) ++counts[w];
    Vocab v;
    v.words.reserve(counts.size());
    for (const auto& [w, c] : counts) v.words.push_back(w);
    std::sort(v.words.begin(), v.words.end(), [&](const std::string& a, const std::string& b) {
        if (counts[a] != counts[b]) return counts[a] > counts[b];
        return a < b;
    });
    v.counts.reserve(v.words.size());
    for (std::size_t i = 0; i < v.words.size(); ++i) {
        v.counts.push_back(counts[v.words[i]]);
        v.index.emplace(v.words[i], i);
    }
    return v;
}

// Unigram table raised to the 3/4 power, as in the original word2vec sampler.
std::vector<std::uint32_t> build_negative_table(const Vocab& v, std::size_t table_size = 1u << 20) {
    double norm = 0.0;
    for (std::size_t c : v.counts) norm += std::pow(static_cast<double>(c), 0.75);
    std::vector<std::uint32_t> table(table_size);
    std::size_t word = 0;
    double cum = std::pow(static_cast<double>(v.counts[0]), 0.75) / norm;
    for (std::size_t i = 0; i < table_size; ++i) {
        table[i] = static_cast<std::uint32_t>(word);
        if (static_cast<double>(i + 1) / static_cast<double>(table_size) > cum && word + 1 < v.words.size()) {
            ++word;
            cum += std::pow(static_cast<double>(v.counts[word]), 0.75) / norm;
        }
    }
    return table;
}

}  // namespace

const float* EmbeddingModel::vector(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) throw data_error("word not in embedding vocabulary: " + word);
    return data_.data() + it->second * dim_;
}

void EmbeddingModel::add(const std::string& word, std::vector<float> values) {
    if (values.size() != dim_) throw data_error("vector dimension mismatch for word: " + word);
    if (!index_.emplace(word, words_.size()).second) throw data_error("duplicate word: " + word);
    words_.push_back(word);
    data_.insert(data_.end(), values.begin(), values.end());
}

void EmbeddingModel::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write embeddings: " + path);
    out << words_.size() << ' ' << dim_ << '\n';
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out << words_[i];
        for (std::size_t d = 0; d < dim_; ++d)
            out << ' ' << format_double(static_cast<double>(data_[i * dim_ + d]));
        out << '\n';
    }
}

EmbeddingModel EmbeddingModel::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open embeddings: " + path);
    std::string header;
    if (!std::getline(in, header)) throw data_error("empty embedding file: " + path);
    std::istringstream hs(header);
    std::size_t vocab = 0, dim = 0;
    if (!(hs >> vocab >> dim) || dim == 0) throw data_error("bad embedding header: " + path);

    EmbeddingModel model(dim, TrainParams{});
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        std::vector<float> values;
        values.reserve(dim);
        double v;
        while (ls >> v) values.push_back(static_cast<float>(v));
        if (values.size() != dim)
            throw data_error(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(dim) +
                             " values, got " + std::to_string(values.size()));
        model.add(word, std::move(values));
    }
    if (model.vocab_size() != vocab)
        throw data_error(path + ": header declares " + std::to_string(vocab) + " words, file has " +
                         std::to_string(model.vocab_size()));
    return model;
}

EmbeddingModel train_embeddings(const Corpus& corpus, const TrainParams& params) {
    if (params.dim == 0 || params.window == 0) throw config_error("embedding dim and window must be positive");
    std::vector<std::vector<std::string>> streams;
    streams.reserve(corpus.docs.size());
    std::size_t total_tokens = 0;
    for (const auto& doc : corpus.docs) {
        auto s = norm_stream(doc);
        total_tokens += s.size();
        streams.push_back(std::move(s));
    }
    if (total_tokens == 0) throw data_error("no tokens survive preprocessing; cannot train embeddings");

    Vocab vocab = build_vocab(streams);
    std::vector<std::vector<std::uint32_t>> encoded;
    encoded.reserve(streams.size());
    for (const auto& s : streams) {
        std::vector<std::uint32_t> ids;
        ids.reserve(s.size());
        for (const auto& w : s) ids.push_back(static_cast<std::uint32_t>(vocab.index.at(w)));
        encoded.push_back(std::move(ids));
    }
    auto table = build_negative_table(vocab);

    const std::size_t dim = params.dim;
    Rng rng(params.rng_seed);
    std::vector<float> syn0(vocab.words.size() * dim);
    std::vector<float> syn1(vocab.words.size() * dim, 0.0f);
    for (auto& x : syn0) x = static_cast<float>((rng.next_double() - 0.5) / static_cast<double>(dim));

    const double total_work = static_cast<double>(params.epochs) * static_cast<double>(total_tokens);
    std::vector<double> grad(dim);
    std::size_t processed = 0;

    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
        for (const auto& ids : encoded) {
            for (std::size_t pos = 0; pos < ids.size(); ++pos, ++processed) {
                double alpha = params.learning_rate *
                               std::max(1.0 - static_cast<double>(processed) / (total_work + 1.0), 1e-4);
                std::size_t shrink = rng.next_below(params.window);
                std::size_t reach = params.window - shrink;
                std::size_t lo = pos >= reach ? pos - reach : 0;
                std::size_t hi = std::min(ids.size(), pos + reach + 1);
                for (std::size_t ctx = lo; ctx < hi; ++ctx) {
                    if (ctx == pos) continue;
                    float* input = syn0.data() + static_cast<std::size_t>(ids[ctx]) * dim;
                    std::fill(grad.begin(), grad.end(), 0.0);
                    for (std::size_t k = 0; k <= params.negative; ++k) {
                        std::uint32_t target;
                        double label;
                        if (k == 0) {
                            target = ids[pos];
                            label = 1.0;
                        } else {
                            target = table[rng.next_below(table.size())];
                            if (target == ids[pos]) continue;
                            label = 0.0;
                        }
                        float* output = syn1.data() + static_cast<std::size_t>(target) * dim;
                        double dot = 0.0;
                        for (std::size_t d = 0; d < dim; ++d)
                            dot += static_cast<double>(input[d]) * static_cast<double>(output[d]);
                        double g = (label - sigmoid(dot)) * alpha;
                        for (std::size_t d = 0; d < dim; ++d) {
                            grad[d] += g * static_cast<double>(output[d]);
                            output[d] += static_cast<float>(g * static_cast<double>(input[d]));
                        }
                    }
                    for (std::size_t d = 0; d < dim; ++d) input[d] += static_cast<float>(grad[d]);
                }
            }
        }
    }

    EmbeddingModel model(dim, params);
    for (std::size_t i = 0; i < vocab.words.size(); ++i)
        model.add(vocab.words[i],
                  std::vector<float>(syn0.begin() + static_cast<std::ptrdiff_t>(i * dim),
                                     syn0.begin() + static_cast<std::ptrdiff_t>((i + 1) * dim)));
    return model;
}

double relatedness(const EmbeddingModel& m, const std::string& a, const std::string& b) {
    const float* va = m.vector(a);
    const float* vb = m.vector(b);
    double dot = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t d = 0; d < m.dim(); ++d) {
        dot += static_cast<double>(va[d]) * static_cast<double>(vb[d]);
        na += static_cast<double>(va[d]) * static_cast<double>(va[d]);
        nb += static_cast<double>(vb[d]) * static_cast<double>(vb[d]);
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot / (std::sqrt(na) * std::sqrt(nb));
}

const std::vector<RelatednessIndex::Neighbor>& RelatednessIndex::neighbors(const std::string& word) const {
    auto it = index_.find(word);
    if (it == index_.end()) throw data_error("word not in relatedness index: " + word);
    return lists_[it->second];
}

RelatednessIndex build_relrank(const EmbeddingModel& m, const std::unordered_set<std::string>& vocabulary,
                               double rel_min, double rel_top, unsigned threads) {
    RelatednessIndex idx;
    idx.rel_min_ = rel_min;
    idx.rel_top_ = rel_top;
    for (const auto& w : vocabulary)
        (m.contains(w) ? idx.vocab_ : idx.dropped_).push_back(w);
    std::sort(idx.vocab_.begin(), idx.vocab_.end());
    std::sort(idx.dropped_.begin(), idx.dropped_.end());
    if (idx.vocab_.size() < 2) throw data_error("relatedness index needs at least 2 in-vocabulary words");

    const std::size_t n = idx.vocab_.size();
    const std::size_t dim = m.dim();
    const std::size_t keep = std::min(
        n - 1, static_cast<std::size_t>(std::ceil(rel_top * static_cast<double>(n - 1))));

    // Unit-normalize once; cosine becomes a dot product.
    std::vector<double> unit(n * dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float* v = m.vector(idx.vocab_[i]);
        double norm = 0.0;
        for (std::size_t d = 0; d < dim; ++d) norm += static_cast<double>(v[d]) * static_cast<double>(v[d]);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        for (std::size_t d = 0; d < dim; ++d) unit[i * dim + d] = static_cast<double>(v[d]) / norm;
    }

    idx.lists_.resize(n);
    for (std::size_t i = 0; i < n; ++i) idx.index_.emplace(idx.vocab_[i], i);

    parallel_for(n, threads, [&](std::size_t i) {
        std::vector<std::pair<double, std::size_t>> scored;
        scored.reserve(n - 1);
        const double* vi = unit.data() + i * dim;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double* vj = unit.data() + j * dim;
            double dot = 0.0;
            for (std::size_t d = 0; d < dim; ++d) dot += vi[d] * vj[d];
            scored.emplace_back(dot, j);
        }
        auto better = [&](const std::pair<double, std::size_t>& a, const std::pair<double, std::size_t>& b) {
            if (a.first != b.first) return a.first > b.first;
            return idx.vocab_[a.second] < idx.vocab_[b.second];
        };
        if (scored.size() > keep) {
            std::nth_element(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(keep) - 1,
                             scored.end(), better);
            scored.resize(keep);
        }
        std::sort(scored.begin(), scored.end(), better);
        auto& list = idx.lists_[i];
        list.reserve(scored.size());
        for (const auto& [score, j] : scored) list.push_back({idx.vocab_[j], score});
    });
    return idx;
}

void RelatednessIndex::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw data_error("cannot write relatedness index: " + path);
    out << "#rel_min\t" << format_double(rel_min_) << "\n#rel_top\t" << format_double(rel_top_) << '\n';
    for (const auto& w : dropped_) out << "#oov\t" << w << '\n';
    for (std::size_t i = 0; i < vocab_.size(); ++i)
        for (const auto& nb : lists_[i])
            out << vocab_[i] << '\t' << nb.word << '\t' << format_double(nb.score) << '\n';
}

RelatednessIndex RelatednessIndex::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open relatedness index: " + path);
    RelatednessIndex idx;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cols = split(line, '\t');
        if (cols[0] == "#rel_min" && cols.size() == 2) {
            idx.rel_min_ = std::stod(cols[1]);
            continue;
        }
        if (cols[0] == "#rel_top" && cols.size() == 2) {
            idx.rel_top_ = std::stod(cols[1]);
            continue;
        }
        if (cols[0] == "#oov" && cols.size() == 2) {
            idx.dropped_.push_back(cols[1]);
            continue;
        }
        if (cols.size() != 3) throw data_error(path + ":" + std::to_string(lineno) + ": expected 3 columns");
        auto [it, inserted] = idx.index_.try_emplace(cols[0], idx.lists_.size());
        if (inserted) {
            idx.vocab_.push_back(cols[0]);
            idx.lists_.emplace_back();
        }
        idx.lists_[it->second].push_back({cols[1], std::stod(cols[2])});
    }
    return idx;
}

}  // namespace ate
