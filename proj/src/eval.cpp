#include "ate/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ate/util.hpp"

namespace ate {

std::string canonicalize_term(std::string_view raw, const NormalizeConfig& cfg) {
    auto surfaces = tokenize_plain(raw);
    std::vector<std::string> lemmas;
    std::vector<bool> stop;
    for (const auto& s : surfaces) {
        std::string lemma = lemma_of(s, cfg);
        if (lemma.empty()) continue;
        std::string lower = to_lower(s);
        stop.push_back(cfg.stopwords.count(lower) > 0 || cfg.stopwords.count(lemma) > 0);
        lemmas.push_back(std::move(lemma));
    }
    std::size_t lo = 0, hi = lemmas.size();
    while (lo < hi && stop[lo]) ++lo;
    while (hi > lo && stop[hi - 1]) --hi;
    std::string out;
    for (std::size_t i = lo; i < hi; ++i) {
        if (i != lo) out += ' ';
        out += lemmas[i];
    }
    return out;
}

GroundTruth GroundTruth::load(const std::string& path, const NormalizeConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open ground truth: " + path);
    GroundTruth gt;
    gt.source = path;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::string canonical = canonicalize_term(t, cfg);
        if (!canonical.empty()) gt.terms.insert(std::move(canonical));
    }
    if (gt.terms.empty()) throw data_error("ground truth is empty: " + path);
    return gt;
}

GroundTruth GroundTruth::from_terms(const std::vector<std::string>& raw, const NormalizeConfig& cfg) {
    GroundTruth gt;
    gt.source = "<memory>";
    for (const auto& t : raw) {
        std::string canonical = canonicalize_term(t, cfg);
        if (!canonical.empty()) gt.terms.insert(std::move(canonical));
    }
    return gt;
}

double precision_at_k(const ScoredList& list, const GroundTruth& gt, std::size_t k) {
    if (k == 0) throw config_error("precision_at_k requires K >= 1");
    if (list.size() == 0) throw data_error("precision_at_k on an empty list");
    std::size_t hits = 0;
    std::size_t upto = std::min(k, list.size());
    for (std::size_t i = 0; i < upto; ++i)
        if (gt.contains(list.entries()[i].canonical)) ++hits;
    return static_cast<double>(hits) / static_cast<double>(k);
}

double avg_p_at_k(const ScoredList& list, const GroundTruth& gt) {
    double sum = 0.0;
    for (std::size_t k : kPrecisionCutoffs) sum += precision_at_k(list, gt, k);
    return sum / static_cast<double>(kPrecisionCutoffs.size());
}

RtpMetrics rtp_and_prf(const ScoredList& list, const GroundTruth& gt) {
    RtpMetrics m;
    for (const auto& e : list.entries())
        if (gt.contains(e.canonical)) ++m.rtp;
    if (m.rtp == 0) return m;  // all metrics 0; caller warns
    std::size_t tp_at_rtp = 0;
    for (std::size_t i = 0; i < m.rtp && i < list.size(); ++i)
        if (gt.contains(list.entries()[i].canonical)) ++tp_at_rtp;
    m.precision = static_cast<double>(tp_at_rtp) / static_cast<double>(m.rtp);
    m.recall = static_cast<double>(tp_at_rtp) / static_cast<double>(gt.terms.size());
    m.f1 = (m.precision + m.recall) > 0.0 ? 2.0 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    return m;
}

EvalReport evaluate(const ScoredList& list, const GroundTruth& gt) {
    EvalReport report;
    report.method = list.method();
    for (std::size_t i = 0; i < kPrecisionCutoffs.size(); ++i)
        report.p_at_k[i] = precision_at_k(list, gt, kPrecisionCutoffs[i]);
    report.avg_p = avg_p_at_k(list, gt);
    report.rtp = rtp_and_prf(list, gt);
    return report;
}

std::size_t MovementReport::bin_index(double mov) {
    if (mov == 0.0) return 20;
    if (mov > 0.0) {
        // (0, 0.05] -> 21, (0.05, 0.10] -> 22, ... (0.95, 1.00] -> 40
        auto bin = static_cast<std::size_t>(std::ceil(mov / 0.05));
        return 20 + std::min<std::size_t>(bin, 20);
    }
    auto bin = static_cast<std::size_t>(std::ceil(-mov / 0.05));
    return 20 - std::min<std::size_t>(bin, 20);
}

std::string MovementReport::bin_label(std::size_t index) {
    if (index == 20) return "0%";
    if (index > 20) {
        std::size_t hi = (index - 20) * 5;
        return "(" + std::to_string(hi - 5) + "%," + std::to_string(hi) + "%]";
    }
    std::size_t hi = (20 - index) * 5;
    std::string upper = hi == 5 ? "0%" : "-" + std::to_string(hi - 5) + "%";
    return "[-" + std::to_string(hi) + "%," + upper + ")";
}

MovementReport movement(const ScoredList& base, const ScoredList& revised,
                        const std::vector<std::string>& terms) {
    if (base.size() != revised.size()) throw data_error("movement requires lists over the same candidates");
    MovementReport report;
    double total = static_cast<double>(base.size());
    for (const auto& t : terms) {
        double mov = (static_cast<double>(base.rank(t)) - static_cast<double>(revised.rank(t))) / total;
        report.movements.emplace_back(t, mov);
        ++report.histogram[MovementReport::bin_index(mov)];
    }
    return report;
}

}  // namespace ate
