#include "ate/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ate/util.hpp"

namespace fs = std::filesystem;

namespace ate {

namespace {

void finalize_token(Token& tok, const NormalizeConfig& cfg) {
    tok.lemma = lemma_of(tok.surface, cfg);
    std::string lower = to_lower(tok.surface);
    tok.stop = cfg.stopwords.count(lower) > 0 || (!tok.lemma.empty() && cfg.stopwords.count(tok.lemma) > 0);
    auto norm = normalize_word(tok.surface, cfg);
    tok.norm = norm ? *norm : std::string();
}

Document load_plain_doc(const fs::path& file, const NormalizeConfig& cfg) {
    std::ifstream in(file);
    if (!in) throw data_error("cannot open document: " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    Document doc;
    doc.id = file.stem().string();
    auto surfaces = tokenize_plain(buf.str());
    doc.tokens.reserve(surfaces.size());
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
        Token tok;
        tok.surface = std::move(surfaces[i]);
        tok.position = i;
        finalize_token(tok, cfg);
        doc.tokens.push_back(std::move(tok));
    }
    return doc;
}

Document load_tagged_doc(const fs::path& file, const NormalizeConfig& cfg) {
    std::ifstream in(file);
    if (!in) throw data_error("cannot open document: " + file.string());
    Document doc;
    doc.id = file.stem().string();
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cols = split(line, '\t');
        if (cols.size() != 2 || trim(cols[0]).empty() || trim(cols[1]).empty())
            throw data_error("malformed tagged line at " + file.string() + ":" + std::to_string(lineno));
        Token tok;
        tok.surface = std::string(trim(cols[0]));
        tok.pos = std::string(trim(cols[1]));
        tok.position = doc.tokens.size();
        finalize_token(tok, cfg);
        doc.tokens.push_back(std::move(tok));
    }
    return doc;
}

void index_frequencies(Corpus& corpus) {
    for (const auto& doc : corpus.docs) {
        std::unordered_set<std::string> seen;
        for (const auto& tok : doc.tokens) {
            if (tok.lemma.empty()) continue;
            ++corpus.tf[tok.lemma];
            ++corpus.total_tokens;
            if (seen.insert(tok.lemma).second) ++corpus.df[tok.lemma];
        }
    }
}

}  // namespace

Corpus load_corpus(const std::string& path, CorpusFormat format, const NormalizeConfig& cfg) {
    fs::path root(path);
    if (!fs::exists(root)) throw data_error("corpus path does not exist: " + path);
    if (!fs::is_directory(root)) throw data_error("corpus path is not a directory: " + path);

    std::vector<fs::path> files;
    const std::string ext = format == CorpusFormat::plain ? ".txt" : ".tsv";
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ext) files.push_back(entry.path());
    }
    if (files.empty()) throw data_error("no " + ext + " documents under: " + path);
    std::sort(files.begin(), files.end());

    Corpus corpus;
    corpus.docs.reserve(files.size());
    for (const auto& file : files)
        corpus.docs.push_back(format == CorpusFormat::plain ? load_plain_doc(file, cfg)
                                                            : load_tagged_doc(file, cfg));
    for (std::size_t i = 1; i < corpus.docs.size(); ++i)
        if (corpus.docs[i].id == corpus.docs[i - 1].id)
            throw data_error("duplicate document id: " + corpus.docs[i].id);
    index_frequencies(corpus);
    return corpus;
}

Corpus finalize_corpus(std::vector<Document> docs, const NormalizeConfig& cfg) {
    Corpus corpus;
    corpus.docs = std::move(docs);
    std::sort(corpus.docs.begin(), corpus.docs.end(),
              [](const Document& a, const Document& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < corpus.docs.size(); ++i)
        if (corpus.docs[i].id == corpus.docs[i - 1].id)
            throw data_error("duplicate document id: " + corpus.docs[i].id);
    for (auto& doc : corpus.docs)
        for (auto& tok : doc.tokens) finalize_token(tok, cfg);
    index_frequencies(corpus);
    return corpus;
}

Corpus make_corpus(const std::vector<std::pair<std::string, std::vector<std::string>>>& docs,
                   const NormalizeConfig& cfg) {
    std::vector<Document> out;
    out.reserve(docs.size());
    for (const auto& [id, surfaces] : docs) {
        Document doc;
        doc.id = id;
        for (std::size_t i = 0; i < surfaces.size(); ++i) {
            Token tok;
            tok.surface = surfaces[i];
            tok.position = i;
            doc.tokens.push_back(std::move(tok));
        }
        out.push_back(std::move(doc));
    }
    return finalize_corpus(std::move(out), cfg);
}

std::unordered_set<std::string> words_of(const Document& doc) {
    std::unordered_set<std::string> words;
    for (const auto& tok : doc.tokens)
        if (!tok.norm.empty()) words.insert(tok.norm);
    return words;
}

std::vector<std::string> norm_stream(const Document& doc) {
    std::vector<std::string> stream;
    for (const auto& tok : doc.tokens)
        if (!tok.norm.empty()) stream.push_back(tok.norm);
    return stream;
}

}  // namespace ate
