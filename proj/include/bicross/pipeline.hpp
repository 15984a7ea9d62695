#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bicross/encoders.hpp"
#include "bicross/queries.hpp"
#include "bicross/ranked_list.hpp"
#include "bicross/ranking.hpp"

namespace bicross::pipeline {

struct Cutoffs {
    std::size_t stage1 = 1000;
    std::size_t stage2 = 400;
    std::size_t final = 200;
};

/// Empty path = not configured.
struct RunPaths {
    std::filesystem::path corpus;  // directory holding <lang>.jsonl and <lang>.stats.json
    std::filesystem::path index;   // loaded if present, otherwise built from the corpus and saved here
    std::filesystem::path topics;
    std::filesystem::path expansions;
    std::filesystem::path translations;
    std::filesystem::path cache;
};

struct RunConfig {
    std::string run_tag;
    std::string query_lang = "en";
    std::string doc_lang = "en";
    queries::QueryType query_type = queries::QueryType::key_conv;
    std::string bi_provider = "hashing";
    std::string cross_provider = "overlap";
    std::string bi_endpoint;
    std::string cross_endpoint;
    std::size_t batch_size = 32;
    ranking::FusionConfig fusion;
    Cutoffs cutoffs;
    ranking::AggregationWeights weights;
    RunPaths paths;
    unsigned parallelism = 1;

    bool bilingual() const noexcept { return query_lang != doc_lang; }
};

/// `key = value` lines, '#' comments. Keys: run_tag, query_lang, doc_lang,
/// query_type, bi_provider, cross_provider, bi_endpoint, cross_endpoint,
/// batch_size, fusion.method, fusion.alpha, fusion.beta, fusion.rrf_k,
/// cutoffs.stage1, cutoffs.stage2, cutoffs.final, weights (comma separated),
/// paths.corpus, paths.index, paths.topics, paths.expansions,
/// paths.translations, paths.cache, parallelism. Relative paths resolve
/// against `base_dir`. Throws InvalidConfig for unknown keys or unparsable
/// values; range checks are left to validate_config.
RunConfig parse_run_config(std::string_view content, const std::filesystem::path& base_dir = {});

/// Reads a config file; BICROSS_BI_ENDPOINT / BICROSS_CROSS_ENDPOINT override
/// the endpoints when set.
RunConfig load_run_config(const std::filesystem::path& file);

std::string format_run_config(const RunConfig& cfg);

/// Every invariant violation found; empty means valid. Does not touch the
/// filesystem.
std::vector<std::string> validate_config(const RunConfig& cfg);

struct PipelineOptions {
    std::filesystem::path out;  // final run file; empty = do not write
    bool keep_stages = false;   // also write <out>.bm25/.refine/.rerank/.fused
    // Test hooks: used instead of the providers named in the config.
    std::shared_ptr<const encoders::EmbeddingProvider> bi_override;
    std::shared_ptr<const encoders::PairScorer> cross_override;
};

struct StageTiming {
    double seconds = 0.0;
    std::size_t docs = 0;
};

struct RunResult {
    std::vector<RankedList> final;  // completed topics, topic-file order
    std::map<Stage, std::vector<RankedList>> stages;
    std::vector<std::string> failed_topics;
    std::map<Stage, StageTiming> timing;

    bool ok() const noexcept { return failed_topics.empty(); }
};

/// Runs every topic through BM25 -> refine -> rerank -> fusion -> cutoff.
/// Topic failures are logged and recorded, the rest of the run continues.
/// Throws InvalidConfig when validate_config reports problems, and
/// module errors for missing shared inputs (corpus, index, topics).
RunResult run_pipeline(const RunConfig& cfg, const PipelineOptions& options = {});

}  // namespace bicross::pipeline
