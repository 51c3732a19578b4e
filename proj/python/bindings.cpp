#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ate/candidates.hpp"
#include "ate/corpus.hpp"
#include "ate/embedding.hpp"
#include "ate/eval.hpp"
#include "ate/graph.hpp"
#include "ate/scorers.hpp"
#include "ate/semrerank.hpp"
#include "ate/textrank.hpp"
#include "ate/util.hpp"

namespace py = pybind11;
using namespace ate;

namespace {

NormalizeConfig make_normalize_config(const std::string& stopword_file, std::size_t minc,
                                      const std::string& lemmatizer) {
    return NormalizeConfig::with_stopword_file(stopword_file, minc, lemmatizer);
}

std::unordered_set<std::string> set_of(const std::vector<std::string>& v) {
    return {v.begin(), v.end()};
}

}  // namespace

PYBIND11_MODULE(semrerank, m) {
    m.doc() = "Term extraction toolkit: base ATE scorers plus personalised-PageRank re-ranking "
              "over word-relatedness graphs.";

    py::register_exception<config_error>(m, "ConfigError");
    py::register_exception<data_error>(m, "DataError");

    py::class_<NormalizeConfig>(m, "NormalizeConfig")
        .def(py::init(&make_normalize_config), py::arg("stopword_file") = "", py::arg("minc") = 2,
             py::arg("lemmatizer") = "english-rules")
        .def_readwrite("minc", &NormalizeConfig::minc);

    m.def("normalize_word",
          [](const std::string& surface, const NormalizeConfig& cfg) -> py::object {
              auto norm = normalize_word(surface, cfg);
              return norm ? py::cast(*norm) : py::none();
          },
          py::arg("surface"), py::arg("config"),
          "Lowercased lemma, or None when the word is filtered out.");

    py::class_<Corpus>(m, "Corpus")
        .def_property_readonly("num_documents", [](const Corpus& c) { return c.docs.size(); })
        .def_property_readonly("total_tokens", [](const Corpus& c) { return c.total_tokens; })
        .def_property_readonly("document_ids",
                               [](const Corpus& c) {
                                   std::vector<std::string> ids;
                                   for (const auto& d : c.docs) ids.push_back(d.id);
                                   return ids;
                               })
        .def("word_tf", &Corpus::word_tf, py::arg("lemma"))
        .def("document_words", [](const Corpus& c, const std::string& doc_id) {
            for (const auto& d : c.docs)
                if (d.id == doc_id) return words_of(d);
            throw data_error("no such document: " + doc_id);
        });

    m.def("load_corpus",
          [](const std::string& path, const std::string& format, const NormalizeConfig& cfg) {
              if (format != "plain" && format != "tagged") throw config_error("format must be plain|tagged");
              return load_corpus(path, format == "plain" ? CorpusFormat::plain : CorpusFormat::tagged, cfg);
          },
          py::arg("path"), py::arg("format"), py::arg("config"));
    m.def("make_corpus", &make_corpus, py::arg("documents"), py::arg("config"),
          "Corpus from [(doc_id, [token, ...]), ...].");

    py::class_<CandidateTerm>(m, "CandidateTerm")
        .def_readonly("canonical", &CandidateTerm::canonical)
        .def_readonly("words", &CandidateTerm::words)
        .def_readonly("tf_total", &CandidateTerm::tf_total)
        .def_property_readonly("df", &CandidateTerm::df)
        .def_property_readonly("tf_doc",
                               [](const CandidateTerm& t) {
                                   return std::map<std::string, std::size_t>(t.tf_doc.begin(),
                                                                             t.tf_doc.end());
                               });

    py::class_<ExtractionConfig>(m, "ExtractionConfig")
        .def(py::init([](const std::string& mode, std::size_t minc, std::size_t maxc, std::size_t minw,
                         std::size_t maxw, std::vector<std::string> patterns, std::size_t min_freq) {
                 ExtractionConfig cfg;
                 if (mode == "ngram") cfg.mode = ExtractionMode::ngram;
                 else if (mode == "pos-pattern") cfg.mode = ExtractionMode::pos_pattern;
                 else throw config_error("mode must be ngram|pos-pattern");
                 cfg.minc = minc;
                 cfg.maxc = maxc;
                 cfg.minw = minw;
                 cfg.maxw = maxw;
                 cfg.patterns = std::move(patterns);
                 cfg.min_freq = min_freq;
                 return cfg;
             }),
             py::arg("mode") = "ngram", py::arg("minc") = 2, py::arg("maxc") = 0, py::arg("minw") = 1,
             py::arg("maxw") = 5, py::arg("patterns") = std::vector<std::string>{},
             py::arg("min_freq") = 1);

    py::class_<CandidateSet>(m, "CandidateSet")
        .def("__len__", &CandidateSet::size)
        .def_property_readonly("terms", [](const CandidateSet& cs) { return cs.terms; })
        .def("find", [](const CandidateSet& cs, const std::string& canonical) -> py::object {
            const CandidateTerm* t = cs.find(canonical);
            return t ? py::cast(*t) : py::none();
        });

    m.def("extract_candidates", &extract_candidates, py::arg("corpus"), py::arg("config"));
    m.def("candidate_words",
          [](const CandidateSet& cs, const NormalizeConfig& cfg) {
              auto words = words_of(cs, cfg);
              return std::vector<std::string>(words.begin(), words.end());
          },
          py::arg("candidates"), py::arg("config"));

    py::class_<ScoredList>(m, "ScoredList")
        .def("__len__", &ScoredList::size)
        .def_property_readonly("method", &ScoredList::method)
        .def_property_readonly("entries",
                               [](const ScoredList& l) {
                                   std::vector<std::pair<std::string, double>> out;
                                   for (const auto& e : l.entries()) out.emplace_back(e.canonical, e.score);
                                   return out;
                               })
        .def("rank", &ScoredList::rank, py::arg("canonical"))
        .def("score", &ScoredList::score, py::arg("canonical"));

    py::class_<RefCorpusStats>(m, "RefCorpusStats")
        .def_static("load", &RefCorpusStats::load, py::arg("path"))
        .def(py::init([](const std::map<std::string, std::size_t>& freq, std::size_t total) {
                 RefCorpusStats stats;
                 stats.freq.insert(freq.begin(), freq.end());
                 stats.total = total;
                 return stats;
             }),
             py::arg("freq"), py::arg("total"));

    m.def("scorer_names", [] { return scorer_names(); });
    m.def("run_scorer",
          [](const std::string& method, const Corpus& corpus, const CandidateSet& cs,
             const RefCorpusStats* ref) { return run_scorer(method, corpus, cs, ref, ScorerOptions{}); },
          py::arg("method"), py::arg("corpus"), py::arg("candidates"), py::arg("ref") = nullptr);
    m.def("vote", [](const std::vector<ScoredList>& lists) {
        std::vector<const ScoredList*> ptrs;
        for (const auto& l : lists) ptrs.push_back(&l);
        return vote(ptrs);
    });

    py::class_<EmbeddingModel>(m, "EmbeddingModel")
        .def_property_readonly("dim", &EmbeddingModel::dim)
        .def_property_readonly("vocab_size", &EmbeddingModel::vocab_size)
        .def("contains", &EmbeddingModel::contains)
        .def("save", &EmbeddingModel::save, py::arg("path"))
        .def_static("load", &EmbeddingModel::load, py::arg("path"));

    m.def("train_embeddings",
          [](const Corpus& corpus, std::size_t dim, std::size_t window, std::size_t epochs,
             std::size_t negative, double learning_rate, std::uint64_t seed) {
              TrainParams params{dim, window, epochs, negative, learning_rate, seed};
              return train_embeddings(corpus, params);
          },
          py::arg("corpus"), py::arg("dim") = 100, py::arg("window") = 3, py::arg("epochs") = 15,
          py::arg("negative") = 5, py::arg("learning_rate") = 0.025, py::arg("seed") = 7);
    m.def("relatedness", &relatedness, py::arg("model"), py::arg("a"), py::arg("b"));

    py::class_<RelatednessIndex>(m, "RelatednessIndex")
        .def_property_readonly("rel_min", &RelatednessIndex::rel_min)
        .def_property_readonly("rel_top", &RelatednessIndex::rel_top)
        .def_property_readonly("vocabulary", &RelatednessIndex::vocabulary)
        .def("neighbors",
             [](const RelatednessIndex& idx, const std::string& word) {
                 std::vector<std::pair<std::string, double>> out;
                 for (const auto& nb : idx.neighbors(word)) out.emplace_back(nb.word, nb.score);
                 return out;
             })
        .def("save", &RelatednessIndex::save)
        .def_static("load", &RelatednessIndex::load);

    m.def("build_relrank",
          [](const EmbeddingModel& model, const std::vector<std::string>& vocabulary, double rel_min,
             double rel_top, unsigned threads) {
              return build_relrank(model, set_of(vocabulary), rel_min, rel_top, threads);
          },
          py::arg("model"), py::arg("vocabulary"), py::arg("rel_min") = 0.5, py::arg("rel_top") = 0.15,
          py::arg("threads") = 1);

    py::class_<SemanticImportance>(m, "SemanticImportance")
        .def_property_readonly("scores",
                               [](const SemanticImportance& s) {
                                   return std::map<std::string, double>(s.smi.begin(), s.smi.end());
                               })
        .def_readonly("documents", &SemanticImportance::documents)
        .def_readonly("nonempty_graphs", &SemanticImportance::nonempty_graphs)
        .def_readonly("all_converged", &SemanticImportance::all_converged)
        .def("value", &SemanticImportance::value, py::arg("word"));

    m.def("semantic_importance",
          [](const Corpus& corpus, const std::vector<std::string>& candidate_words,
             const RelatednessIndex& idx, double rel_min, const std::vector<std::string>& seed_words,
             double damping, double tolerance, std::size_t max_iterations, unsigned threads) {
              PageRankParams params{damping, tolerance, max_iterations};
              return semantic_importance(corpus, set_of(candidate_words), idx, rel_min,
                                         set_of(seed_words), params, threads);
          },
          py::arg("corpus"), py::arg("candidate_words"), py::arg("index"), py::arg("rel_min") = 0.5,
          py::arg("seed_words") = std::vector<std::string>{}, py::arg("damping") = 0.85,
          py::arg("tolerance") = 1e-10, py::arg("max_iterations") = 200, py::arg("threads") = 1);

    m.def("ctextrank",
          [](const Corpus& corpus, const std::vector<std::string>& candidate_words,
             const std::vector<std::string>& seed_words, std::size_t window, double damping,
             double tolerance, std::size_t max_iterations, unsigned threads) {
              PageRankParams params{damping, tolerance, max_iterations};
              return ctextrank(corpus, set_of(candidate_words), set_of(seed_words), window, params,
                               threads);
          },
          py::arg("corpus"), py::arg("candidate_words"), py::arg("seed_words"), py::arg("window") = 2,
          py::arg("damping") = 0.85, py::arg("tolerance") = 1e-10, py::arg("max_iterations") = 200,
          py::arg("threads") = 1);

    py::class_<SeedSet>(m, "SeedSet")
        .def_readonly("z", &SeedSet::z)
        .def_readonly("terms", &SeedSet::terms)
        .def_property_readonly("words",
                               [](const SeedSet& s) {
                                   return std::vector<std::string>(s.words.begin(), s.words.end());
                               })
        .def_property_readonly("mode", [](const SeedSet& s) {
            return s.mode == SeedMode::verified ? "verified" : "unsupervised";
        });

    m.def("propose_seeds",
          [](const CandidateSet& cs, std::size_t z) {
              std::vector<std::pair<std::string, std::size_t>> out;
              for (const auto& p : propose_seeds(cs, z)) out.emplace_back(p.canonical, p.tf_total);
              return out;
          },
          py::arg("candidates"), py::arg("z"));
    m.def("verify_seeds",
          [](const CandidateSet& cs, std::size_t z, const std::map<std::string, bool>& annotations,
             const NormalizeConfig& cfg) {
              std::unordered_map<std::string, bool> ann(annotations.begin(), annotations.end());
              return verify_seeds(cs, z, ann, cfg);
          },
          py::arg("candidates"), py::arg("z"), py::arg("annotations"), py::arg("config"));
    m.def("unsupervised_seeds", &unsupervised_seeds, py::arg("candidates"), py::arg("z"),
          py::arg("config"));

    py::class_<RevisedList>(m, "RevisedList")
        .def_readonly("method", &RevisedList::method)
        .def_property_readonly("entries",
                               [](const RevisedList& l) {
                                   std::vector<std::tuple<std::string, double, double, double>> out;
                                   for (const auto& e : l.entries)
                                       out.emplace_back(e.canonical, e.srk, e.nate, e.mean_nsmi);
                                   return out;
                               })
        .def("rank", &RevisedList::rank)
        .def("as_scored_list", &RevisedList::as_scored_list);

    m.def("revise_scores",
          [](const ScoredList& base, const SemanticImportance& importance, const CandidateSet& cs,
             const NormalizeConfig& cfg) { return revise_scores(base, importance, cs, cfg); },
          py::arg("base"), py::arg("importance"), py::arg("candidates"), py::arg("config"));
    m.def("revise_with_ctextrank", &revise_with_ctextrank, py::arg("base"), py::arg("ctextrank"),
          py::arg("candidates"), py::arg("config"));

    py::class_<GroundTruth>(m, "GroundTruth")
        .def_static("load", &GroundTruth::load, py::arg("path"), py::arg("config"))
        .def_static("from_terms", &GroundTruth::from_terms, py::arg("terms"), py::arg("config"))
        .def("__len__", [](const GroundTruth& gt) { return gt.terms.size(); })
        .def("contains", &GroundTruth::contains, py::arg("canonical"));

    py::class_<RtpMetrics>(m, "RtpMetrics")
        .def_readonly("rtp", &RtpMetrics::rtp)
        .def_readonly("precision", &RtpMetrics::precision)
        .def_readonly("recall", &RtpMetrics::recall)
        .def_readonly("f1", &RtpMetrics::f1);

    m.def("precision_at_k", &precision_at_k, py::arg("list"), py::arg("ground_truth"), py::arg("k"));
    m.def("avg_p_at_k", &avg_p_at_k, py::arg("list"), py::arg("ground_truth"));
    m.def("rtp_and_prf", &rtp_and_prf, py::arg("list"), py::arg("ground_truth"));
    m.def("movement",
          [](const ScoredList& base, const ScoredList& revised, const std::vector<std::string>& terms) {
              MovementReport report = movement(base, revised, terms);
              std::map<std::string, double> movs(report.movements.begin(), report.movements.end());
              std::vector<std::size_t> hist(report.histogram.begin(), report.histogram.end());
              return py::make_tuple(movs, hist);
          },
          py::arg("base"), py::arg("revised"), py::arg("terms"),
          "Per-term relative movement plus the 41-bin histogram (index 20 is the exact-zero bin).");

    m.def("pswa_stats",
          [](const EmbeddingModel& model, const std::vector<std::string>& vocabulary,
             const std::vector<double>& grid, unsigned threads) {
              std::vector<std::map<std::string, double>> out;
              for (const auto& row : pswa_stats(model, set_of(vocabulary), grid, threads))
                  out.push_back({{"rel_min", row.rel_min},
                                 {"isolated_fraction", row.isolated_fraction},
                                 {"pswa_min", row.pswa_min},
                                 {"pswa_q1", row.pswa_q1},
                                 {"pswa_median", row.pswa_median},
                                 {"pswa_q3", row.pswa_q3},
                                 {"pswa_max", row.pswa_max}});
              return out;
          },
          py::arg("model"), py::arg("vocabulary"),
          py::arg("grid") = std::vector<double>{0.9, 0.8, 0.7, 0.6, 0.5}, py::arg("threads") = 1);
}
