#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ate/candidates.hpp"
#include "ate/corpus.hpp"
#include "ate/embedding.hpp"
#include "ate/graph.hpp"
#include "ate/scorers.hpp"
#include "ate/semrerank.hpp"

namespace ate {

// One structured config file drives every subcommand. Format: "key = value"
// lines, '#' comments; unknown keys are an error. The documented schema and a
// fully annotated sample live under configs/.
struct RunConfig {
    std::string corpus_path;
    CorpusFormat corpus_format = CorpusFormat::plain;

    std::string stopword_path;  // empty -> built-in list
    std::string lemmatizer = "english-rules";

    ExtractionConfig extraction;
    std::string pattern_path;

    std::vector<std::string> scorers = {"tfidf"};
    ScorerOptions scorer_options;
    std::string ref_stats_path;

    std::string vectors_path;  // external embeddings; empty -> train
    TrainParams embedding;

    double rel_min = 0.5;
    double rel_top = 0.15;

    std::size_t seeds_z = 200;
    SeedMode seed_mode = SeedMode::verified;
    std::string annotations_path;

    PageRankParams pagerank;
    std::size_t textrank_window = 2;

    std::string ground_truth_path;
    std::size_t rare_tf_below = 5;

    std::string output_dir = "out";
    unsigned threads = 1;
    std::uint64_t rng_seed = 7;

    std::uint64_t config_hash = 0;  // over the canonical effective settings

    static RunConfig load(const std::string& path);
    static RunConfig from_text(const std::string& text, const std::string& origin = "<config>");
    std::string canonical_text() const;

    NormalizeConfig normalize() const;

    std::string artifact(const std::string& name) const;
    std::string corpus_tsv() const { return artifact("corpus.tsv"); }
    std::string candidates_tsv() const { return artifact("candidates.tsv"); }
    std::string embeddings_txt() const { return artifact("embeddings.txt"); }
    std::string relindex_tsv() const { return artifact("relindex.tsv"); }
    std::string score_tsv(const std::string& method) const { return artifact("scores/" + method + ".tsv"); }
    std::string seed_proposal_tsv() const { return artifact("seed_proposal.tsv"); }
    std::string seeds_tsv() const { return artifact("seeds.tsv"); }
    std::string smi_tsv() const { return artifact("smi.tsv"); }
    std::string ctextrank_tsv() const { return artifact("ctextrank.tsv"); }
    std::string revised_tsv(const std::string& variant, const std::string& method) const {
        return artifact("revised/" + variant + "_" + method + ".tsv");
    }
    std::string eval_tsv(const std::string& variant, const std::string& method) const {
        return artifact("eval/" + variant + "_" + method + ".tsv");
    }
    std::string movement_tsv(const std::string& variant, const std::string& method) const {
        return artifact("eval/movement_" + variant + "_" + method + ".tsv");
    }
    std::string compare_csv() const { return artifact("compare.csv"); }
    std::string diagnostics_tsv() const { return artifact("diagnostics.tsv"); }
};

// Exit codes shared by the stages and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitDataError = 3;
inline constexpr int kExitConvergenceWarning = 4;

int run_ingest(const RunConfig& cfg);
int run_extract(const RunConfig& cfg);
int run_embed(const RunConfig& cfg);
int run_relindex(const RunConfig& cfg);
int run_score(const RunConfig& cfg);
int run_seeds_propose(const RunConfig& cfg);
int run_seeds_build(const RunConfig& cfg);
int run_smi(const RunConfig& cfg);
int run_rerank(const RunConfig& cfg);
int run_textrank(const RunConfig& cfg);
int run_eval(const RunConfig& cfg);
int run_compare(const RunConfig& cfg);
int run_diagnose(const RunConfig& cfg);

}  // namespace ate
