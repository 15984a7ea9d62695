#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace bicross {

enum class Stage { bm25, refine, rerank, fused };

std::string_view to_string(Stage stage) noexcept;
/// Throws InvalidArgument.
Stage parse_stage(std::string_view name);

struct RankedEntry {
    std::string doc_id;
    double score = 0.0;
    std::size_t rank = 0;

    bool operator==(const RankedEntry&) const = default;
};

struct RankedList {
    std::string query_id;
    Stage stage = Stage::bm25;
    std::vector<RankedEntry> entries;

    std::size_t size() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }
    bool operator==(const RankedList&) const = default;
};

/// Sorts by descending score, ties by ascending doc_id, assigns ranks 1..n and
/// keeps at most `limit` entries (0 keeps all).
RankedList make_ranked_list(std::string query_id, Stage stage, std::vector<std::pair<std::string, double>> scored,
                            std::size_t limit = 0);

/// First `n` entries of `list`, ranks unchanged.
RankedList truncate(const RankedList& list, std::size_t n);

/// Throws InvariantViolation when ranks are not 1..n, scores increase with
/// rank, or a doc_id repeats.
void check_invariants(const RankedList& list);

std::unordered_set<std::string> doc_set(const RankedList& list);

}  // namespace bicross
