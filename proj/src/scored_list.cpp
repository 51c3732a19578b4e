#include "ate/scored_list.hpp"

#include <algorithm>
#include <cmath>

namespace ate {

ScoredList::ScoredList(std::string method, std::vector<ScoredEntry> entries)
    : method_(std::move(method)), entries_(std::move(entries)) {
    for (const auto& e : entries_)
        if (!std::isfinite(e.score))
            throw data_error("non-finite score for '" + e.canonical + "' in " + method_);
    std::sort(entries_.begin(), entries_.end(), [](const ScoredEntry& a, const ScoredEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.canonical < b.canonical;
    });
    rank_.reserve(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!rank_.emplace(entries_[i].canonical, i + 1).second)
            throw data_error("duplicate candidate '" + entries_[i].canonical + "' in " + method_);
    }
}

ScoredList ScoredList::preordered(std::string method, std::vector<ScoredEntry> entries) {
    ScoredList list;
    list.method_ = std::move(method);
    list.entries_ = std::move(entries);
    for (std::size_t i = 0; i < list.entries_.size(); ++i) {
        const auto& e = list.entries_[i];
        if (!std::isfinite(e.score))
            throw data_error("non-finite score for '" + e.canonical + "' in " + list.method_);
        if (i > 0 && list.entries_[i - 1].score < e.score)
            throw data_error("preordered entries not score-descending in " + list.method_);
        if (!list.rank_.emplace(e.canonical, i + 1).second)
            throw data_error("duplicate candidate '" + e.canonical + "' in " + list.method_);
    }
    return list;
}

std::size_t ScoredList::rank(const std::string& canonical) const {
    auto it = rank_.find(canonical);
    if (it == rank_.end()) throw data_error("candidate not in list '" + method_ + "': " + canonical);
    return it->second;
}

}  // namespace ate
