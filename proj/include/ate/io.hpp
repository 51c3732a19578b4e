#pragma once

#include <map>
#include <string>
#include <vector>

#include "ate/candidates.hpp"
#include "ate/corpus.hpp"
#include "ate/eval.hpp"
#include "ate/graph.hpp"
#include "ate/scored_list.hpp"
#include "ate/semrerank.hpp"

namespace ate {

// Artifact headers are "#key<TAB>value" lines before the data rows. Every
// artifact records the config hash, corpus hash and rng seed of the run that
// produced it.
using ArtifactHeader = std::map<std::string, std::string>;

struct TsvFile {
    ArtifactHeader header;
    std::vector<std::vector<std::string>> rows;
};

TsvFile read_tsv(const std::string& path);

// Writes via a ".partial" sidecar renamed on success, so interrupted runs
// never leave a plausible-looking artifact behind.
class ArtifactWriter {
  public:
    explicit ArtifactWriter(std::string path, const ArtifactHeader& header);
    ~ArtifactWriter();
    ArtifactWriter(const ArtifactWriter&) = delete;
    ArtifactWriter& operator=(const ArtifactWriter&) = delete;

    void row(const std::vector<std::string>& cells);
    void raw_line(const std::string& line);
    void commit();

  private:
    std::string path_;
    std::string partial_path_;
    bool committed_ = false;
    struct Impl;
    Impl* impl_;
};

void write_corpus_tsv(const std::string& path, const Corpus& corpus, const ArtifactHeader& header);
Corpus read_corpus_tsv(const std::string& path, const NormalizeConfig& cfg, ArtifactHeader* header = nullptr);

void write_candidates_tsv(const std::string& path, const CandidateSet& cs, const ArtifactHeader& header);

// Reload a persisted candidate set. tf_total/df come from the file;
// per-document counts are absent (rebuild_candidates recovers them).
CandidateSet read_candidates_tsv(const std::string& path, ArtifactHeader* header = nullptr);

void write_scored_list_tsv(const std::string& path, const ScoredList& list, const ArtifactHeader& header);
ScoredList read_scored_list_tsv(const std::string& path, ArtifactHeader* header = nullptr);

void write_revised_list_tsv(const std::string& path, const RevisedList& list, const ArtifactHeader& header);
RevisedList read_revised_list_tsv(const std::string& path, ArtifactHeader* header = nullptr);

void write_seed_proposal_tsv(const std::string& path, const std::vector<SeedProposal>& proposals,
                             const ArtifactHeader& header);
// Annotation rows are the proposal file with the label column filled (0/1);
// blank labels are an error at build time.
std::unordered_map<std::string, bool> read_seed_annotations(const std::string& path);

void write_seed_set_tsv(const std::string& path, const SeedSet& seeds, const ArtifactHeader& header);
SeedSet read_seed_set_tsv(const std::string& path, const NormalizeConfig& cfg, const CandidateSet& cs,
                          ArtifactHeader* header = nullptr);

void write_importance_tsv(const std::string& path, const SemanticImportance& importance,
                          const ArtifactHeader& header);
SemanticImportance read_importance_tsv(const std::string& path, ArtifactHeader* header = nullptr);

void write_eval_report_tsv(const std::string& path, const EvalReport& report, const ArtifactHeader& header);
EvalReport read_eval_report_tsv(const std::string& path, ArtifactHeader* header = nullptr);

void write_movement_tsv(const std::string& path, const MovementReport& all,
                        const MovementReport& rare, const ArtifactHeader& header);

void write_pswa_tsv(const std::string& path, const std::vector<PswaRow>& rows, const ArtifactHeader& header);

void append_manifest(const std::string& dir, const std::string& command, const ArtifactHeader& header);

std::uint64_t hash_file(const std::string& path);

}  // namespace ate
