#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "ate/util.hpp"

namespace ate {

struct ScoredEntry {
    std::string canonical;
    double score = 0.0;
};

// Descending ranking of one method over one candidate set. Ordering is
// score-descending with ties broken by canonical ascending; ranks are 1-based.
class ScoredList {
  public:
    ScoredList() = default;
    ScoredList(std::string method, std::vector<ScoredEntry> entries);

    // Adopt an externally resolved ordering (a revised list carries its own
    // tie-breaking); scores must already be non-increasing.
    static ScoredList preordered(std::string method, std::vector<ScoredEntry> entries);

    const std::string& method() const { return method_; }
    const std::vector<ScoredEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    std::size_t rank(const std::string& canonical) const;  // throws data_error when absent
    bool contains(const std::string& canonical) const { return rank_.count(canonical) > 0; }
    double score(const std::string& canonical) const { return entries_[rank(canonical) - 1].score; }

  private:
    std::string method_;
    std::vector<ScoredEntry> entries_;
    std::unordered_map<std::string, std::size_t> rank_;
};

}  // namespace ate
