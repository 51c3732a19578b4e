#include "ate/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ate/eval.hpp"
#include "ate/io.hpp"
#include "ate/textrank.hpp"
#include "ate/util.hpp"

namespace fs = std::filesystem;

namespace ate {

namespace {

std::string require_artifact(const std::string& path, const std::string& producer) {
    if (!fs::exists(path))
        throw data_error("missing artifact " + path + "; run `semrerank " + producer + "` first");
    return path;
}

std::string require_input(const std::string& path, const std::string& what) {
    if (path.empty()) throw config_error("config does not set " + what);
    if (!fs::exists(path)) throw data_error(what + " does not exist: " + path);
    return path;
}

ArtifactHeader base_header(const RunConfig& cfg) {
    ArtifactHeader h;
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(cfg.config_hash));
    h["config"] = hex;
    h["seed"] = std::to_string(cfg.rng_seed);
    return h;
}

ArtifactHeader header_with_corpus(const RunConfig& cfg) {
    ArtifactHeader h = base_header(cfg);
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(hash_file(require_artifact(cfg.corpus_tsv(), "ingest"))));
    h["corpus"] = hex;
    return h;
}

Corpus load_pipeline_corpus(const RunConfig& cfg) {
    return read_corpus_tsv(require_artifact(cfg.corpus_tsv(), "ingest"), cfg.normalize());
}

CandidateSet load_pipeline_candidates(const RunConfig& cfg) {
    return read_candidates_tsv(require_artifact(cfg.candidates_tsv(), "extract"));
}

std::vector<std::string> effective_scorers(const RunConfig& cfg) {
    if (cfg.scorers.empty()) throw config_error("config sets no scorers");
    return cfg.scorers;
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return from_text(buf.str(), path);
}

RunConfig RunConfig::from_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        auto eq = stripped.find('=');
        if (eq == std::string_view::npos)
            throw config_error(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key(trim(stripped.substr(0, eq)));
        std::string value(trim(stripped.substr(eq + 1)));

        auto as_size = [&](const std::string& v) -> std::size_t {
            try {
                return std::stoull(v);
            } catch (...) {
                throw config_error(origin + ":" + std::to_string(lineno) + ": bad integer '" + v + "'");
            }
        };
        auto as_double = [&](const std::string& v) -> double {
            try {
                return std::stod(v);
            } catch (...) {
                throw config_error(origin + ":" + std::to_string(lineno) + ": bad number '" + v + "'");
            }
        };

        if (key == "corpus.path") cfg.corpus_path = value;
        else if (key == "corpus.format") {
            if (value == "plain") cfg.corpus_format = CorpusFormat::plain;
            else if (value == "tagged") cfg.corpus_format = CorpusFormat::tagged;
            else throw config_error(origin + ": corpus.format must be plain or tagged");
        } else if (key == "normalize.stopwords") cfg.stopword_path = value;
        else if (key == "normalize.lemmatizer") cfg.lemmatizer = value;
        else if (key == "extract.mode") {
            if (value == "ngram") cfg.extraction.mode = ExtractionMode::ngram;
            else if (value == "pos-pattern") cfg.extraction.mode = ExtractionMode::pos_pattern;
            else throw config_error(origin + ": extract.mode must be ngram or pos-pattern");
        } else if (key == "extract.minc") cfg.extraction.minc = as_size(value);
        else if (key == "extract.maxc") cfg.extraction.maxc = as_size(value);
        else if (key == "extract.minw") cfg.extraction.minw = as_size(value);
        else if (key == "extract.maxw") cfg.extraction.maxw = as_size(value);
        else if (key == "extract.min_freq") cfg.extraction.min_freq = as_size(value);
        else if (key == "extract.patterns") cfg.pattern_path = value;
        else if (key == "scorers") {
            cfg.scorers.clear();
            for (auto& m : split(value, ',')) {
                std::string name(trim(m));
                if (!name.empty()) cfg.scorers.push_back(name);
            }
        } else if (key == "scorer.basic.alpha") cfg.scorer_options.basic_alpha = as_double(value);
        else if (key == "scorer.combobasic.alpha") cfg.scorer_options.combo_alpha = as_double(value);
        else if (key == "scorer.combobasic.beta") cfg.scorer_options.combo_beta = as_double(value);
        else if (key == "scorer.glossex.alpha") cfg.scorer_options.glossex_alpha = as_double(value);
        else if (key == "scorer.glossex.beta") cfg.scorer_options.glossex_beta = as_double(value);
        else if (key == "scorer.chisquare.fraction") cfg.scorer_options.chisq_frequent_fraction = as_double(value);
        else if (key == "scorer.chisquare.min") cfg.scorer_options.chisq_frequent_min = as_size(value);
        else if (key == "scorer.chisquare.subtract_max") cfg.scorer_options.chisq_subtract_max = value == "1";
        else if (key == "ref.stats") cfg.ref_stats_path = value;
        else if (key == "embedding.vectors") cfg.vectors_path = value;
        else if (key == "embedding.dim") cfg.embedding.dim = as_size(value);
        else if (key == "embedding.window") cfg.embedding.window = as_size(value);
        else if (key == "embedding.epochs") cfg.embedding.epochs = as_size(value);
        else if (key == "embedding.negative") cfg.embedding.negative = as_size(value);
        else if (key == "embedding.learning_rate") cfg.embedding.learning_rate = as_double(value);
        else if (key == "rel_min") cfg.rel_min = as_double(value);
        else if (key == "rel_top") cfg.rel_top = as_double(value);
        else if (key == "seeds.z") cfg.seeds_z = as_size(value);
        else if (key == "seeds.mode") {
            if (value == "verified") cfg.seed_mode = SeedMode::verified;
            else if (value == "unsupervised") cfg.seed_mode = SeedMode::unsupervised;
            else throw config_error(origin + ": seeds.mode must be verified or unsupervised");
        } else if (key == "seeds.annotations") cfg.annotations_path = value;
        else if (key == "pagerank.damping") cfg.pagerank.damping = as_double(value);
        else if (key == "pagerank.tolerance") cfg.pagerank.tolerance = as_double(value);
        else if (key == "pagerank.max_iterations") cfg.pagerank.max_iterations = as_size(value);
        else if (key == "textrank.window") cfg.textrank_window = as_size(value);
        else if (key == "eval.ground_truth") cfg.ground_truth_path = value;
        else if (key == "eval.rare_tf_below") cfg.rare_tf_below = as_size(value);
        else if (key == "output.dir") cfg.output_dir = value;
        else if (key == "threads") cfg.threads = static_cast<unsigned>(as_size(value));
        else if (key == "rng_seed") cfg.rng_seed = as_size(value);
        else throw config_error(origin + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (const char* env_out = std::getenv("SEMRERANK_OUT"); env_out && *env_out) cfg.output_dir = env_out;
    cfg.embedding.rng_seed = cfg.rng_seed;
    if (!(cfg.rel_min >= 0.0 && cfg.rel_min <= 1.0)) throw config_error("rel_min must be in [0, 1]");
    if (!(cfg.rel_top > 0.0 && cfg.rel_top <= 1.0)) throw config_error("rel_top must be in (0, 1]");
    if (!(cfg.pagerank.damping > 0.0 && cfg.pagerank.damping < 1.0))
        throw config_error("pagerank.damping must be in (0, 1)");
    if (!(cfg.pagerank.tolerance > 0.0)) throw config_error("pagerank.tolerance must be positive");
    if (cfg.pagerank.max_iterations == 0) throw config_error("pagerank.max_iterations must be >= 1");
    if (cfg.textrank_window < 2) throw config_error("textrank.window must be at least 2");
    if (cfg.seeds_z == 0) throw config_error("seeds.z must be >= 1");
    cfg.config_hash = fnv1a(cfg.canonical_text());
    return cfg;
}

std::string RunConfig::canonical_text() const {
    std::ostringstream out;
    out << "corpus.format=" << (corpus_format == CorpusFormat::plain ? "plain" : "tagged") << '\n'
        << "corpus.path=" << corpus_path << '\n'
        << "embedding.dim=" << embedding.dim << '\n'
        << "embedding.epochs=" << embedding.epochs << '\n'
        << "embedding.learning_rate=" << format_double(embedding.learning_rate) << '\n'
        << "embedding.negative=" << embedding.negative << '\n'
        << "embedding.vectors=" << vectors_path << '\n'
        << "embedding.window=" << embedding.window << '\n'
        << "eval.ground_truth=" << ground_truth_path << '\n'
        << "eval.rare_tf_below=" << rare_tf_below << '\n'
        << "extract.maxc=" << extraction.maxc << '\n'
        << "extract.maxw=" << extraction.maxw << '\n'
        << "extract.min_freq=" << extraction.min_freq << '\n'
        << "extract.minc=" << extraction.minc << '\n'
        << "extract.minw=" << extraction.minw << '\n'
        << "extract.mode=" << (extraction.mode == ExtractionMode::ngram ? "ngram" : "pos-pattern") << '\n'
        << "extract.patterns=" << pattern_path << '\n'
        << "normalize.lemmatizer=" << lemmatizer << '\n'
        << "normalize.stopwords=" << stopword_path << '\n'
        << "pagerank.damping=" << format_double(pagerank.damping) << '\n'
        << "pagerank.max_iterations=" << pagerank.max_iterations << '\n'
        << "pagerank.tolerance=" << format_double(pagerank.tolerance) << '\n'
        << "ref.stats=" << ref_stats_path << '\n'
        << "rel_min=" << format_double(rel_min) << '\n'
        << "rel_top=" << format_double(rel_top) << '\n'
        << "rng_seed=" << rng_seed << '\n'
        << "scorer.basic.alpha=" << format_double(scorer_options.basic_alpha) << '\n'
        << "scorer.chisquare.fraction=" << format_double(scorer_options.chisq_frequent_fraction) << '\n'
        << "scorer.chisquare.min=" << scorer_options.chisq_frequent_min << '\n'
        << "scorer.chisquare.subtract_max=" << (scorer_options.chisq_subtract_max ? 1 : 0) << '\n'
        << "scorer.combobasic.alpha=" << format_double(scorer_options.combo_alpha) << '\n'
        << "scorer.combobasic.beta=" << format_double(scorer_options.combo_beta) << '\n'
        << "scorer.glossex.alpha=" << format_double(scorer_options.glossex_alpha) << '\n'
        << "scorer.glossex.beta=" << format_double(scorer_options.glossex_beta) << '\n';
    out << "scorers=";
    for (std::size_t i = 0; i < scorers.size(); ++i) out << (i ? "," : "") << scorers[i];
    out << '\n'
        << "seeds.annotations=" << annotations_path << '\n'
        << "seeds.mode=" << (seed_mode == SeedMode::verified ? "verified" : "unsupervised") << '\n'
        << "seeds.z=" << seeds_z << '\n'
        << "textrank.window=" << textrank_window << '\n';
    return out.str();
}

NormalizeConfig RunConfig::normalize() const {
    return NormalizeConfig::with_stopword_file(stopword_path, extraction.minc, lemmatizer);
}

std::string RunConfig::artifact(const std::string& name) const {
    return (fs::path(output_dir) / name).string();
}

int run_ingest(const RunConfig& cfg) {
    require_input(cfg.corpus_path, "corpus.path");
    Corpus corpus = load_corpus(cfg.corpus_path, cfg.corpus_format, cfg.normalize());
    write_corpus_tsv(cfg.corpus_tsv(), corpus, base_header(cfg));
    append_manifest(cfg.output_dir, "ingest", header_with_corpus(cfg));
    std::cerr << "ingest: " << corpus.docs.size() << " documents, " << corpus.total_tokens << " tokens\n";
    return kExitOk;
}

int run_extract(const RunConfig& cfg) {
    Corpus corpus = load_pipeline_corpus(cfg);
    ExtractionConfig ecfg = cfg.extraction;
    if (ecfg.mode == ExtractionMode::pos_pattern)
        ecfg.patterns = load_pattern_file(require_input(cfg.pattern_path, "extract.patterns"));
    CandidateSet cs = extract_candidates(corpus, ecfg);
    write_candidates_tsv(cfg.candidates_tsv(), cs, header_with_corpus(cfg));
    append_manifest(cfg.output_dir, "extract", header_with_corpus(cfg));
    std::cerr << "extract: " << cs.terms.size() << " candidates\n";
    return kExitOk;
}

int run_embed(const RunConfig& cfg) {
    ArtifactHeader h = header_with_corpus(cfg);
    if (!cfg.vectors_path.empty()) {
        EmbeddingModel model = EmbeddingModel::load(require_input(cfg.vectors_path, "embedding.vectors"));
        model.save(cfg.embeddings_txt() + ".partial");
        fs::rename(cfg.embeddings_txt() + ".partial", cfg.embeddings_txt());
        std::cerr << "embed: loaded " << model.vocab_size() << " external vectors (dim " << model.dim()
                  << ")\n";
    } else {
        Corpus corpus = load_pipeline_corpus(cfg);
        EmbeddingModel model = train_embeddings(corpus, cfg.embedding);
        fs::create_directories(cfg.output_dir);
        model.save(cfg.embeddings_txt() + ".partial");
        fs::rename(cfg.embeddings_txt() + ".partial", cfg.embeddings_txt());
        std::cerr << "embed: trained " << model.vocab_size() << " vectors (dim " << model.dim() << ")\n";
    }
    append_manifest(cfg.output_dir, "embed", h);
    return kExitOk;
}

int run_relindex(const RunConfig& cfg) {
    EmbeddingModel model = EmbeddingModel::load(require_artifact(cfg.embeddings_txt(), "embed"));
    CandidateSet cs = load_pipeline_candidates(cfg);
    auto vocabulary = words_of(cs, cfg.normalize());
    RelatednessIndex idx = build_relrank(model, vocabulary, cfg.rel_min, cfg.rel_top, cfg.threads);
    if (!idx.dropped_oov().empty())
        std::cerr << "relindex: dropped " << idx.dropped_oov().size() << " out-of-vocabulary words\n";
    idx.save(cfg.relindex_tsv() + ".partial");
    fs::rename(cfg.relindex_tsv() + ".partial", cfg.relindex_tsv());
    append_manifest(cfg.output_dir, "relindex", header_with_corpus(cfg));
    std::cerr << "relindex: " << idx.vocabulary().size() << " words indexed\n";
    return kExitOk;
}

int run_score(const RunConfig& cfg) {
    Corpus corpus = load_pipeline_corpus(cfg);
    CandidateSet persisted = load_pipeline_candidates(cfg);
    std::vector<std::string> canonicals;
    for (const auto& t : persisted.terms) canonicals.push_back(t.canonical);
    CandidateSet cs = rebuild_candidates(corpus, cfg.extraction, canonicals);

    RefCorpusStats ref;
    bool have_ref = false;
    auto methods = effective_scorers(cfg);
    for (const auto& m : methods)
        if (m == "weirdness" || m == "relevance" || m == "glossex") {
            ref = RefCorpusStats::load(require_input(cfg.ref_stats_path, "ref.stats"));
            have_ref = true;
            break;
        }

    ArtifactHeader h = header_with_corpus(cfg);
    std::vector<ScoredList> computed;
    for (const auto& m : methods) {
        if (m == "vote") continue;
        computed.push_back(run_scorer(m, corpus, cs, have_ref ? &ref : nullptr, cfg.scorer_options));
        write_scored_list_tsv(cfg.score_tsv(m), computed.back(), h);
        std::cerr << "score: " << m << " over " << computed.back().size() << " candidates\n";
    }
    if (std::find(methods.begin(), methods.end(), "vote") != methods.end()) {
        if (computed.empty()) throw config_error("vote requires at least one other scorer");
        std::vector<const ScoredList*> inputs;
        for (const auto& l : computed) inputs.push_back(&l);
        ScoredList voted = vote(inputs);
        write_scored_list_tsv(cfg.score_tsv("vote"), voted, h);
        std::cerr << "score: vote over " << inputs.size() << " lists\n";
    }
    append_manifest(cfg.output_dir, "score", h);
    return kExitOk;
}

int run_seeds_propose(const RunConfig& cfg) {
    CandidateSet cs = load_pipeline_candidates(cfg);
    auto proposals = propose_seeds(cs, cfg.seeds_z);
    ArtifactHeader h = header_with_corpus(cfg);
    h["z"] = std::to_string(cfg.seeds_z);
    write_seed_proposal_tsv(cfg.seed_proposal_tsv(), proposals, h);
    append_manifest(cfg.output_dir, "seeds-propose", h);
    std::cerr << "seeds-propose: " << proposals.size() << " proposals; annotate the third column with 0/1\n";
    return kExitOk;
}

int run_seeds_build(const RunConfig& cfg) {
    CandidateSet cs = load_pipeline_candidates(cfg);
    NormalizeConfig ncfg = cfg.normalize();
    SeedSet seeds;
    if (cfg.seed_mode == SeedMode::unsupervised) {
        seeds = unsupervised_seeds(cs, cfg.seeds_z, ncfg);
    } else {
        auto annotations =
            read_seed_annotations(require_input(cfg.annotations_path, "seeds.annotations"));
        seeds = verify_seeds(cs, cfg.seeds_z, annotations, ncfg);
    }
    if (seeds.terms.empty())
        std::cerr << "seeds-build: warning: empty seed set; personalization falls back to uniform\n";
    write_seed_set_tsv(cfg.seeds_tsv(), seeds, header_with_corpus(cfg));
    append_manifest(cfg.output_dir, "seeds-build", header_with_corpus(cfg));
    std::cerr << "seeds-build: " << seeds.terms.size() << " seed terms (" << seeds.words.size()
              << " words)\n";
    return kExitOk;
}

int run_smi(const RunConfig& cfg) {
    Corpus corpus = load_pipeline_corpus(cfg);
    CandidateSet cs = load_pipeline_candidates(cfg);
    NormalizeConfig ncfg = cfg.normalize();
    RelatednessIndex idx = RelatednessIndex::load(require_artifact(cfg.relindex_tsv(), "relindex"));
    SeedSet seeds = read_seed_set_tsv(require_artifact(cfg.seeds_tsv(), "seeds-build"), ncfg, cs);
    auto vocabulary = words_of(cs, ncfg);
    SemanticImportance smi =
        semantic_importance(corpus, vocabulary, idx, cfg.rel_min, seeds.words, cfg.pagerank, cfg.threads);
    write_importance_tsv(cfg.smi_tsv(), smi, header_with_corpus(cfg));
    append_manifest(cfg.output_dir, "smi", header_with_corpus(cfg));
    std::cerr << "smi: " << smi.smi.size() << " words over " << smi.nonempty_graphs << " graphs\n";
    if (!smi.all_converged) {
        std::cerr << "smi: warning: PageRank hit the iteration cap on some documents\n";
        return kExitConvergenceWarning;
    }
    return kExitOk;
}

int run_rerank(const RunConfig& cfg) {
    CandidateSet cs = load_pipeline_candidates(cfg);
    NormalizeConfig ncfg = cfg.normalize();
    SemanticImportance smi = read_importance_tsv(require_artifact(cfg.smi_tsv(), "smi"));
    ArtifactHeader h = header_with_corpus(cfg);
    for (const auto& m : effective_scorers(cfg)) {
        ScoredList base = read_scored_list_tsv(require_artifact(cfg.score_tsv(m), "score"));
        RevisedList revised = revise_scores(base, smi, cs, ncfg, "semrerank");
        write_revised_list_tsv(cfg.revised_tsv("semrerank", m), revised, h);
    }
    append_manifest(cfg.output_dir, "rerank", h);
    std::cerr << "rerank: revised " << effective_scorers(cfg).size() << " base rankings\n";
    return kExitOk;
}

int run_textrank(const RunConfig& cfg) {
    Corpus corpus = load_pipeline_corpus(cfg);
    CandidateSet cs = load_pipeline_candidates(cfg);
    NormalizeConfig ncfg = cfg.normalize();
    SeedSet seeds = read_seed_set_tsv(require_artifact(cfg.seeds_tsv(), "seeds-build"), ncfg, cs);
    auto vocabulary = words_of(cs, ncfg);
    SemanticImportance ctr =
        ctextrank(corpus, vocabulary, seeds.words, cfg.textrank_window, cfg.pagerank, cfg.threads);
    ArtifactHeader h = header_with_corpus(cfg);
    write_importance_tsv(cfg.ctextrank_tsv(), ctr, h);
    for (const auto& m : effective_scorers(cfg)) {
        ScoredList base = read_scored_list_tsv(require_artifact(cfg.score_tsv(m), "score"));
        RevisedList revised = revise_with_ctextrank(base, ctr, cs, ncfg);
        write_revised_list_tsv(cfg.revised_tsv("adp-textrank", m), revised, h);
    }
    append_manifest(cfg.output_dir, "textrank", h);
    std::cerr << "textrank: revised " << effective_scorers(cfg).size() << " base rankings\n";
    if (!ctr.all_converged) {
        std::cerr << "textrank: warning: PageRank hit the iteration cap on some documents\n";
        return kExitConvergenceWarning;
    }
    return kExitOk;
}

int run_eval(const RunConfig& cfg) {
    NormalizeConfig ncfg = cfg.normalize();
    GroundTruth gt = GroundTruth::load(require_input(cfg.ground_truth_path, "eval.ground_truth"), ncfg);
    Corpus corpus = load_pipeline_corpus(cfg);
    ArtifactHeader h = header_with_corpus(cfg);

    bool any_zero_rtp = false;
    for (const auto& m : effective_scorers(cfg)) {
        ScoredList base = read_scored_list_tsv(require_artifact(cfg.score_tsv(m), "score"));
        write_eval_report_tsv(cfg.eval_tsv("base", m), evaluate(base, gt), h);

        // RTP terms in base-rank order; rare = every composing word below the
        // frequency cutoff.
        std::vector<std::string> rtp_terms, rare_terms;
        for (const auto& e : base.entries()) {
            if (!gt.contains(e.canonical)) continue;
            rtp_terms.push_back(e.canonical);
            bool rare = true;
            for (const auto& w : split(e.canonical, ' '))
                if (corpus.word_tf(w) >= cfg.rare_tf_below) {
                    rare = false;
                    break;
                }
            if (rare) rare_terms.push_back(e.canonical);
        }
        if (rtp_terms.empty()) {
            any_zero_rtp = true;
            std::cerr << "eval: warning: no recoverable true positives for " << m << "\n";
        }

        for (const std::string variant : {"semrerank", "adp-textrank"}) {
            std::string producer = variant == std::string("semrerank") ? "rerank" : "textrank";
            RevisedList revised =
                read_revised_list_tsv(require_artifact(cfg.revised_tsv(variant, m), producer));
            ScoredList revised_scored = revised.as_scored_list();
            write_eval_report_tsv(cfg.eval_tsv(variant, m), evaluate(revised_scored, gt), h);
            write_movement_tsv(cfg.movement_tsv(variant, m), movement(base, revised_scored, rtp_terms),
                               movement(base, revised_scored, rare_terms), h);
        }
    }
    append_manifest(cfg.output_dir, "eval", h);
    std::cerr << "eval: reports for " << effective_scorers(cfg).size()
              << " scorers x {base, semrerank, adp-textrank}"
              << (any_zero_rtp ? " (some with zero RTP)" : "") << "\n";
    return kExitOk;
}

int run_compare(const RunConfig& cfg) {
    fs::path eval_dir = fs::path(cfg.output_dir) / "eval";
    if (!fs::exists(eval_dir)) throw data_error("missing artifact " + eval_dir.string() + "; run `semrerank eval` first");

    std::vector<std::pair<std::string, EvalReport>> reports;  // file stem -> report
    std::string corpus_hash;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(eval_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".tsv" &&
            entry.path().filename().string().rfind("movement_", 0) != 0)
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw data_error("no eval reports under " + eval_dir.string());

    for (const auto& f : files) {
        ArtifactHeader fh;
        EvalReport report = read_eval_report_tsv(f.string(), &fh);
        auto it = fh.find("corpus");
        std::string this_hash = it == fh.end() ? "" : it->second;
        if (corpus_hash.empty()) corpus_hash = this_hash;
        else if (this_hash != corpus_hash)
            throw data_error("refusing to join eval reports from different corpora: " + f.string());
        reports.emplace_back(f.stem().string(), report);
    }

    ArtifactHeader h = base_header(cfg);
    h["corpus"] = corpus_hash;
    ArtifactWriter w(cfg.compare_csv(), h);
    w.raw_line("method,p@50,p@100,p@500,p@1000,p@2000,avg_p@k,rtp,p@rtp,r@rtp,f1@rtp");
    for (const auto& [stem, r] : reports) {
        std::string line = r.method;
        for (double p : r.p_at_k) line += "," + format_double(p);
        line += "," + format_double(r.avg_p) + "," + std::to_string(r.rtp.rtp) + "," +
                format_double(r.rtp.precision) + "," + format_double(r.rtp.recall) + "," +
                format_double(r.rtp.f1);
        w.raw_line(line);
    }
    w.commit();
    append_manifest(cfg.output_dir, "compare", h);
    std::cerr << "compare: " << reports.size() << " reports joined\n";
    return kExitOk;
}

int run_diagnose(const RunConfig& cfg) {
    EmbeddingModel model = EmbeddingModel::load(require_artifact(cfg.embeddings_txt(), "embed"));
    CandidateSet cs = load_pipeline_candidates(cfg);
    auto vocabulary = words_of(cs, cfg.normalize());
    std::vector<double> grid = {0.9, 0.8, 0.7, 0.6, 0.5};
    auto rows = pswa_stats(model, vocabulary, grid, cfg.threads);
    write_pswa_tsv(cfg.diagnostics_tsv(), rows, header_with_corpus(cfg));
    append_manifest(cfg.output_dir, "diagnose", header_with_corpus(cfg));
    std::cerr << "diagnose: PSWA over " << grid.size() << " thresholds\n";
    return kExitOk;
}

}  // namespace ate
