#pragma once

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

#include "ate/scored_list.hpp"
#include "ate/text.hpp"

namespace ate {

inline constexpr std::array<std::size_t, 5> kPrecisionCutoffs = {50, 100, 500, 1000, 2000};

// Ground-truth term list, canonicalized with the same pipeline as candidates
// (lowercase, lemmatize, trim edge stopwords).
struct GroundTruth {
    std::unordered_set<std::string> terms;
    std::string source;

    static GroundTruth load(const std::string& path, const NormalizeConfig& cfg);
    static GroundTruth from_terms(const std::vector<std::string>& raw, const NormalizeConfig& cfg);
    bool contains(const std::string& canonical) const { return terms.count(canonical) > 0; }
};

std::string canonicalize_term(std::string_view raw, const NormalizeConfig& cfg);

// Exact-match precision among the top K; the denominator stays K even when
// the list is shorter.
double precision_at_k(const ScoredList& list, const GroundTruth& gt, std::size_t k);

// Mean P@K over the standard cutoffs {50, 100, 500, 1000, 2000}.
double avg_p_at_k(const ScoredList& list, const GroundTruth& gt);

struct RtpMetrics {
    std::size_t rtp = 0;  // recoverable true positives: |candidates ∩ gt|
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

RtpMetrics rtp_and_prf(const ScoredList& list, const GroundTruth& gt);

struct EvalReport {
    std::string method;
    std::array<double, 5> p_at_k{};
    double avg_p = 0.0;
    RtpMetrics rtp;
};

EvalReport evaluate(const ScoredList& list, const GroundTruth& gt);

// Relative rank movement between a base and a revised ranking, histogrammed
// over 5% bins of [-100%, 100%] plus an exact-zero bin (index 20; negative
// bins 0..19, positive bins 21..40).
struct MovementReport {
    std::vector<std::pair<std::string, double>> movements;  // term -> mov
    std::array<std::size_t, 41> histogram{};

    std::size_t zero_bin() const { return histogram[20]; }
    static std::size_t bin_index(double mov);
    static std::string bin_label(std::size_t index);
};

MovementReport movement(const ScoredList& base, const ScoredList& revised,
                        const std::vector<std::string>& terms);

}  // namespace ate
