#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/corpus.hpp"
#include "bicross/encoders.hpp"
#include "bicross/eval.hpp"
#include "bicross/ranked_list.hpp"

namespace bicross::ranking {

struct ScoredSentence {
    std::size_t sentence_index = 0;
    double score = 0.0;
};

/// Weights for the top-k sentence sum; strictly decreasing and positive.
struct AggregationWeights {
    std::vector<double> w{0.5, 0.3, 0.2};

    /// Throws InvariantViolation.
    void validate() const;
    std::string to_string() const;
    bool operator==(const AggregationWeights&) const = default;
};

/// Validated constructor. Throws InvariantViolation.
AggregationWeights make_weights(std::vector<double> w);

/// Sorts scores descending and returns sum_{i < min(k, n)} w_i * s_(i).
/// Throws EmptyScores, NonFiniteScore.
double aggregate_topk(std::span<const ScoredSentence> scores, const AggregationWeights& weights);
double aggregate_topk(std::span<const double> scores, const AggregationWeights& weights);

/// round(avg_sentences), at least 1.
std::size_t first_n_sentences(const corpus::CorpusStats& stats);

struct StageOptions {
    std::string lang = "en";
    AggregationWeights weights;
};

/// Bi-encoder stage: cosine between the query and each of the first N
/// sentences, aggregated per document. Documents without sentences score
/// -inf. Throws InvalidArgument if `candidates` is not a bm25 list.
RankedList refine(const RankedList& candidates, std::string_view query, const encoders::EmbeddingProvider& provider,
                  const corpus::DocumentLookup& docs, const corpus::CorpusStats& stats, const StageOptions& options = {});

/// Cross-encoder stage over a refine list, same sentence policy.
RankedList rerank(const RankedList& candidates, std::string_view query, const encoders::PairScorer& scorer,
                  const corpus::DocumentLookup& docs, const corpus::CorpusStats& stats, const StageOptions& options = {});

// ---------------------------------------------------------------------------
// Fusion

enum class FusionMethod { wcombsum, rrf, borda, none };
std::string_view to_string(FusionMethod m) noexcept;
FusionMethod parse_fusion_method(std::string_view name);

struct FusionConfig {
    double alpha = 0.5;
    double beta = 0.4;
    double rrf_k = 60.0;
    FusionMethod method = FusionMethod::wcombsum;
};

/// Empty when valid.
std::vector<std::string> fusion_diagnostics(const FusionConfig& cfg);

/// (s - min) / (max - min); a constant list maps to all 1.0. Throws
/// EmptyScores, NonFiniteScore.
std::vector<double> min_max_normalize(std::span<const double> scores);

/// alpha * norm(cross) + beta * norm(bi) + (1 - alpha - beta) * norm(bm25)
/// over the docs of `cross`; each stage normalized over that doc set.
/// -inf stage scores are raised to the stage's lowest finite score first.
/// Throws MissingStageScore.
RankedList wcombsum(const RankedList& bm25, const RankedList& bi, const RankedList& cross, const FusionConfig& cfg);

/// 1/(k + R_cross) + 1/(k + R_bi). Throws DocSetMismatch.
RankedList rrf(const RankedList& bi, const RankedList& cross, double rrf_k = 60.0);

/// (N - R_cross + 1)/N + (N - R_bi + 1)/N. Throws DocSetMismatch.
RankedList borda(const RankedList& bi, const RankedList& cross);

/// Applies cfg.method. `bi` is the refine list restricted to the docs that
/// were re-ranked; `none` returns the rerank order relabelled as fused.
RankedList fuse(const RankedList& bm25, const RankedList& bi, const RankedList& cross, const FusionConfig& cfg);

// ---------------------------------------------------------------------------
// Weight tuning

using DevRunFn = std::function<eval::Run(const AggregationWeights&)>;

/// Candidate with the highest mean `metric`; earlier candidates win ties.
/// Throws EmptyGrid, NoQrels, InvariantViolation.
AggregationWeights grid_search_weights(std::span<const AggregationWeights> grid, const eval::Qrels& qrels,
                                       const DevRunFn& dev_run, eval::Metric metric = eval::Metric::NDCG);

/// One candidate per line, weights separated by spaces or commas; '#'
/// comments. Throws InvariantViolation, MalformedRow.
std::vector<AggregationWeights> load_weight_grid(const std::filesystem::path& file);

}  // namespace bicross::ranking
