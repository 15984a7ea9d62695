#include <algorithm>
#include <cmath>

#include "bicross/error.hpp"
#include "bicross/ranked_list.hpp"

namespace bicross {

std::string_view to_string(Stage stage) noexcept {
    switch (stage) {
        case Stage::bm25: return "bm25";
        case Stage::refine: return "refine";
        case Stage::rerank: return "rerank";
        case Stage::fused: return "fused";
    }
    return "unknown";
}

Stage parse_stage(std::string_view name) {
    if (name == "bm25") return Stage::bm25;
    if (name == "refine") return Stage::refine;
    if (name == "rerank") return Stage::rerank;
    if (name == "fused") return Stage::fused;
    throw Error(ErrorCode::InvalidArgument, "unknown stage '" + std::string(name) + "'");
}

namespace {

// NaN sorts last; otherwise descending score then ascending doc_id.
bool ranks_before(const std::pair<std::string, double>& a, const std::pair<std::string, double>& b) {
    const bool an = std::isnan(a.second);
    const bool bn = std::isnan(b.second);
    if (an != bn) return bn;
    if (!an && a.second != b.second) return a.second > b.second;
    return a.first < b.first;
}

}  // namespace

RankedList make_ranked_list(std::string query_id, Stage stage, std::vector<std::pair<std::string, double>> scored,
                            std::size_t limit) {
    if (limit != 0 && limit < scored.size()) {
        std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(limit), scored.end(),
                          ranks_before);
        scored.resize(limit);
    } else {
        std::sort(scored.begin(), scored.end(), ranks_before);
    }
    RankedList out{std::move(query_id), stage, {}};
    out.entries.reserve(scored.size());
    for (std::size_t i = 0; i < scored.size(); ++i) {
        out.entries.push_back({std::move(scored[i].first), scored[i].second, i + 1});
    }
    return out;
}

RankedList truncate(const RankedList& list, std::size_t n) {
    RankedList out{list.query_id, list.stage, {}};
    const std::size_t m = std::min(n, list.entries.size());
    out.entries.assign(list.entries.begin(), list.entries.begin() + static_cast<std::ptrdiff_t>(m));
    return out;
}

void check_invariants(const RankedList& list) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
        const RankedEntry& e = list.entries[i];
        const std::string where = "query " + list.query_id + " (" + std::string(to_string(list.stage)) + ")";
        if (e.rank != i + 1) {
            throw Error(ErrorCode::InvariantViolation, where + ": rank gap at position " + std::to_string(i + 1));
        }
        if (i > 0 && e.score > list.entries[i - 1].score) {
            throw Error(ErrorCode::InvariantViolation, where + ": score increases at rank " + std::to_string(e.rank));
        }
        if (!seen.insert(e.doc_id).second) {
            throw Error(ErrorCode::InvariantViolation, where + ": duplicate doc_id " + e.doc_id);
        }
    }
}

std::unordered_set<std::string> doc_set(const RankedList& list) {
    std::unordered_set<std::string> out;
    out.reserve(list.entries.size());
    for (const RankedEntry& e : list.entries) out.insert(e.doc_id);
    return out;
}

}  // namespace bicross
