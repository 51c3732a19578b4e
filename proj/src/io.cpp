#include "ate/io.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ate/util.hpp"

namespace fs = std::filesystem;

namespace ate {

namespace {

std::string join_cells(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += '\t';
        line += cells[i];
    }
    return line;
}

void expect_columns(const std::vector<std::string>& row, std::size_t n, const std::string& path,
                    std::size_t lineno) {
    if (row.size() != n)
        throw data_error(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(n) +
                         " columns, got " + std::to_string(row.size()));
}

}  // namespace

TsvFile read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open artifact: " + path);
    TsvFile file;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto cols = split(line.substr(1), '\t');
            if (cols.size() == 2) file.header[cols[0]] = cols[1];
            continue;
        }
        file.rows.push_back(split(line, '\t'));
    }
    return file;
}

struct ArtifactWriter::Impl {
    std::ofstream out;
};

ArtifactWriter::ArtifactWriter(std::string path, const ArtifactHeader& header)
    : path_(std::move(path)), partial_path_(path_ + ".partial"), impl_(new Impl) {
    fs::path parent = fs::path(path_).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    impl_->out.open(partial_path_, std::ios::trunc);
    if (!impl_->out) throw data_error("cannot write artifact: " + partial_path_);
    for (const auto& [k, v] : header) impl_->out << '#' << k << '\t' << v << '\n';
}

ArtifactWriter::~ArtifactWriter() {
    if (!committed_) {
        impl_->out.close();
        std::error_code ec;
        fs::remove(partial_path_, ec);
    }
    delete impl_;
}

void ArtifactWriter::row(const std::vector<std::string>& cells) { impl_->out << join_cells(cells) << '\n'; }

void ArtifactWriter::raw_line(const std::string& line) { impl_->out << line << '\n'; }

void ArtifactWriter::commit() {
    impl_->out.flush();
    if (!impl_->out) throw data_error("write failed: " + partial_path_);
    impl_->out.close();
    fs::rename(partial_path_, path_);
    committed_ = true;
}

void write_corpus_tsv(const std::string& path, const Corpus& corpus, const ArtifactHeader& header) {
    ArtifactHeader h = header;
    h["docs"] = std::to_string(corpus.docs.size());
    ArtifactWriter w(path, h);
    for (const auto& doc : corpus.docs)
        for (const auto& tok : doc.tokens)
            w.row({doc.id, std::to_string(tok.position), tok.surface, tok.pos});
    w.commit();
}

Corpus read_corpus_tsv(const std::string& path, const NormalizeConfig& cfg, ArtifactHeader* header) {
    TsvFile file = read_tsv(path);
    if (header) *header = file.header;
    std::vector<Document> docs;
    std::size_t lineno = 0;
    for (const auto& row : file.rows) {
        ++lineno;
        expect_columns(row, 4, path, lineno);
        if (docs.empty() || docs.back().id != row[0]) {
            docs.emplace_back();
            docs.back().id = row[0];
        }
        Token tok;
        tok.position = std::stoull(row[1]);
        tok.surface = row[2];
        tok.pos = row[3];
        docs.back().tokens.push_back(std::move(tok));
    }
    if (docs.empty()) throw data_error("corpus artifact has no tokens: " + path);
    return finalize_corpus(std::move(docs), cfg);
}

void write_candidates_tsv(const std::string& path, const CandidateSet& cs, const ArtifactHeader& header) {
    ArtifactHeader h = header;
    h["candidates"] = std::to_string(cs.terms.size());
    ArtifactWriter w(path, h);
    for (const auto& t : cs.terms)
        w.row({t.canonical, std::to_string(t.tf_total), std::to_string(t.df())});
    w.commit();
}

CandidateSet read_candidates_tsv(const std::string& path, ArtifactHeader* header) {
    TsvFile file = read_tsv(path);
    if (header) *header = file.header;
    CandidateSet cs;
    std::size_t lineno = 0;
    for (const auto& row : file.rows) {
        ++lineno;
        expect_columns(row, 3, path, lineno);
        CandidateTerm term;
        term.canonical = row[0];
        term.words = split(row[0], ' ');
        term.tf_total = std::stoull(row[1]);
        cs.terms.push_back(std::move(term));
    }
    std::sort(cs.terms.begin(), cs.terms.end(),
              [](const CandidateTerm& a, const CandidateTerm& b) { return a.canonical < b.canonical; });
    for (std::size_t i = 1; i < cs.terms.size(); ++i)
        if (cs.terms[i].canonical == cs.terms[i - 1].canonical)
            throw data_error("duplicate candidate in " + path + ": " + cs.terms[i].canonical);
    return cs;
}

void write_scored_list_tsv(const std::string& path, const ScoredList& list, const ArtifactHeader& header) {
    ArtifactHeader h = header;
    h["method"] = list.method();
    ArtifactWriter w(path, h);
    std::size_t rank = 0;
    for (const auto& e : list.entries()) w.row({std::to_string(++rank), e.canonical, format_double(e.score)});
    w.commit();
}

ScoredList read_scored_list_tsv(const std::string& path, ArtifactHeader* header) {
    TsvFile file = read_tsv(path);
    if (header) *header = file.header;
    auto method = file.header.find("method");
    if (method == file.header.end()) throw data_error("scored list missing #method header: " + path);
    std::vector<ScoredEntry> entries;
    std::size_t lineno = 0;
    for (const auto& row : file.rows) {
        ++lineno;
        expect_columns(row, 3, path, lineno);
        entries.push_back({row[1], std::stod(row[2])});
    }
    return ScoredList(method->second, std::move(entries));
}

void write_revised_list_tsv(const std::string& path, const RevisedList& list, const ArtifactHeader& header) {
    ArtifactHeader h = header;
    h["method"] = list.method;
    ArtifactWriter w(path, h);
    std::size_t rank = 0;
    for (const auto& e : list.entries)
        w.row({std::to_string(++rank), e.canonical, format_double(e.srk), format_double(e.nate),
               format_double(e.mean_nsmi)});
    w.commit();
}

RevisedList read_revised_list_tsv(const std::string& path, ArtifactHeader* header) {
    TsvFile file = read_tsv(path);
    if (header) *header = file.header;
    auto method = file.header.find("method");
    if (method == file.header.end()) throw data_error("revised list missing #method header: " + path);
    RevisedList list;
    list.method = method->second;
    std::size_t lineno = 0;
    for (const auto& row : file.rows) {
        ++lineno;
        expect_columns(row, 5, path, lineno);
        list.entries.push_back({row[1], std::stod(row[2]), std::stod(row[3]), std::stod(row[4])});
    }
    return list;
}

void write_seed_proposal_tsv(const std::string& path, const std::vector<SeedProposal>& proposals,
                             const ArtifactHeader& header) {
    ArtifactWriter w(path, header);
    for (const auto& p : proposals) w.row({p.canonical, std::to_string(p.tf_total), ""});
    w.commit();
}

std::unordered_map<std::string, bool> read_seed_annotations(const std::string& path) {
    TsvFile file = read_tsv(path);
    std::unordered_map<std::string, bool> out;
    std::size_t lineno = 0;
    for (const auto& row : file.rows) {
        ++lineno;
        expect_columns(row, 3, path, lineno);
        std::string label(trim(row[2]));
        if (label != "0" && label != "1")
            throw data_error(path + ":" + std::to_string(lineno) + ": label must be 0 or 1 for '" + row[0] +
                             "'");
        out[row[0]] = label == "1";
    }
    return out;
}

void write_seed_set_tsv(const std::string& path, const SeedSet& seeds, const ArtifactHeader& header) {
    ArtifactHeader h = header;
    h["mode"] = seeds.mode == SeedMode::verified ? "verified" : "unsupervised";
    h["z"] = std::to_string(seeds.z);
    h["seed_terms"] = std::to_string(seeds.terms.size());
    ArtifactWriter w(path, h);
    for (const auto& t : seeds.terms) w.row({t});
    w.commit();
}

SeedSet read_seed_set_tsv(const std::string& path, const NormalizeConfig& cfg, const CandidateSet& cs,
                          ArtifactHeader* header) {
    TsvFile file = read_tsv(path);
    if (header) *header = file.header;
    std::vector<std::string> terms;
    for (const auto& row : file.rows) terms.push_back(row[0]);
    SeedMode mode = file.header.count("mode") && file.header.at("mode") == "unsupervised"
                        ? SeedMode::unsupervised
                        : SeedMode::verified;
    std::size_t z = file.header.count("z") ? std::stoull(file.header.at("z")) : terms.size();
    return SeedSet::from_terms(std::move(terms), z, mode, cfg, cs);
}

void write_importance_tsv(const std::string& path, const SemanticImportance& importance,
                          const ArtifactHeader& header) {
    ArtifactHeader h = header;
    h["documents"] = std::to_string(importance.documents);
    h["nonempty_graphs"] = std::to_string(importance.nonempty_graphs);
    h["converged"] = importance.all_converged ? "1" : "0";
    ArtifactWriter w(path, h);
    std::vector<std::pair<std::string, double>> sorted(importance.smi.begin(), importance.smi.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [word, score] : sorted) w.row({word, format_double(score)});
    w.commit();
}

SemanticImportance read_importance_tsv(const std::string& path, ArtifactHeader* header) {
    TsvFile file = read_tsv(path);
    if (header) *header = file.header;
    SemanticImportance out;
    if (file.header.count("documents")) out.documents = std::stoull(file.header.at("documents"));
    if (file.header.count("nonempty_graphs"))
        out.nonempty_graphs = std::stoull(file.header.at("nonempty_graphs"));
    if (file.header.count("converged")) out.all_converged = file.header.at("converged") == "1";
    std::size_t lineno = 0;
    for (const auto& row : file.rows) {
        ++lineno;
        expect_columns(row, 2, path, lineno);
        out.smi[row[0]] = std::stod(row[1]);
    }
    return out;
}

void write_eval_report_tsv(const std::string& path, const EvalReport& report, const ArtifactHeader& header) {
    ArtifactHeader h = header;
    h["method"] = report.method;
    ArtifactWriter w(path, h);
    w.row({"metric", "value"});
    for (std::size_t i = 0; i < kPrecisionCutoffs.size(); ++i)
        w.row({"p@" + std::to_string(kPrecisionCutoffs[i]), format_double(report.p_at_k[i])});
    w.row({"avg_p@k", format_double(report.avg_p)});
    w.row({"rtp", std::to_string(report.rtp.rtp)});
    w.row({"p@rtp", format_double(report.rtp.precision)});
    w.row({"r@rtp", format_double(report.rtp.recall)});
    w.row({"f1@rtp", format_double(report.rtp.f1)});
    w.commit();
}

EvalReport read_eval_report_tsv(const std::string& path, ArtifactHeader* header) {
    TsvFile file = read_tsv(path);
    if (header) *header = file.header;
    auto method = file.header.find("method");
    if (method == file.header.end()) throw data_error("eval report missing #method header: " + path);
    EvalReport report;
    report.method = method->second;
    for (const auto& row : file.rows) {
        if (row.size() != 2 || row[0] == "metric") continue;
        const std::string& k = row[0];
        if (k == "avg_p@k") report.avg_p = std::stod(row[1]);
        else if (k == "rtp") report.rtp.rtp = std::stoull(row[1]);
        else if (k == "p@rtp") report.rtp.precision = std::stod(row[1]);
        else if (k == "r@rtp") report.rtp.recall = std::stod(row[1]);
        else if (k == "f1@rtp") report.rtp.f1 = std::stod(row[1]);
        else
            for (std::size_t i = 0; i < kPrecisionCutoffs.size(); ++i)
                if (k == "p@" + std::to_string(kPrecisionCutoffs[i])) report.p_at_k[i] = std::stod(row[1]);
    }
    return report;
}

void write_movement_tsv(const std::string& path, const MovementReport& all, const MovementReport& rare,
                        const ArtifactHeader& header) {
    ArtifactWriter w(path, header);
    w.row({"term", "mov", "rare"});
    std::unordered_set<std::string> rare_terms;
    for (const auto& [term, mov] : rare.movements) rare_terms.insert(term);
    for (const auto& [term, mov] : all.movements)
        w.row({term, format_double(mov), rare_terms.count(term) ? "1" : "0"});
    w.raw_line("#histogram\tbin\tall\trare");
    for (std::size_t b = 0; b < all.histogram.size(); ++b)
        w.raw_line("#bin\t" + MovementReport::bin_label(b) + '\t' + std::to_string(all.histogram[b]) + '\t' +
                   std::to_string(rare.histogram[b]));
    w.commit();
}

void write_pswa_tsv(const std::string& path, const std::vector<PswaRow>& rows, const ArtifactHeader& header) {
    ArtifactWriter w(path, header);
    w.row({"rel_min", "isolated_fraction", "pswa_min", "pswa_q1", "pswa_median", "pswa_q3", "pswa_max"});
    for (const auto& r : rows)
        w.row({format_double(r.rel_min), format_double(r.isolated_fraction), format_double(r.pswa_min),
               format_double(r.pswa_q1), format_double(r.pswa_median), format_double(r.pswa_q3),
               format_double(r.pswa_max)});
    w.commit();
}

void append_manifest(const std::string& dir, const std::string& command, const ArtifactHeader& header) {
    fs::create_directories(dir);
    std::ofstream out(fs::path(dir) / "manifest.txt", std::ios::app);
    if (!out) throw data_error("cannot append manifest under: " + dir);
    auto now = std::chrono::system_clock::now();
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
    out << secs << '\t' << command;
    for (const auto& [k, v] : header) out << '\t' << k << '=' << v;
    out << '\n';
}

std::uint64_t hash_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("cannot hash missing file: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 16];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0)
        h = fnv1a(std::string_view(buf, static_cast<std::size_t>(in.gcount())), h);
    return h;
}

}  // namespace ate
