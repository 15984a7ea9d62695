#include <atomic>
#include <chrono>
#include <mutex>
#include <optional>
#include <thread>

#include <spdlog/spdlog.h>

#include "bicross/error.hpp"
#include "bicross/eval.hpp"
#include "bicross/lexical.hpp"
#include "bicross/pipeline.hpp"

namespace bicross::pipeline {
namespace {

using Clock = std::chrono::steady_clock;

struct TopicOutcome {
    std::optional<RankedList> bm25, refine, rerank, fused, final;
    std::map<Stage, StageTiming> timing;
};

void require_subset(const RankedList& inner, const RankedList& outer) {
    const auto outer_docs = doc_set(outer);
    for (const RankedEntry& e : inner.entries) {
        if (!outer_docs.contains(e.doc_id)) {
            throw Error(ErrorCode::InvariantViolation, "query " + inner.query_id + ": " + e.doc_id + " in " +
                                                           std::string(to_string(inner.stage)) + " but not in " +
                                                           std::string(to_string(outer.stage)));
        }
    }
}

lexical::InvertedIndex open_index(const RunConfig& cfg) {
    if (!cfg.paths.index.empty() && std::filesystem::exists(cfg.paths.index)) {
        auto idx = lexical::InvertedIndex::load(cfg.paths.index);
        if (idx.lang() != cfg.doc_lang) {
            throw Error(ErrorCode::InvalidConfig, "index " + cfg.paths.index.string() + " is '" + idx.lang() +
                                                      "', doc_lang is '" + cfg.doc_lang + "'");
        }
        return idx;
    }
    auto idx = lexical::InvertedIndex::build_from_store(cfg.paths.corpus, cfg.doc_lang);
    if (!cfg.paths.index.empty()) idx.save(cfg.paths.index);
    return idx;
}

}  // namespace

RunResult run_pipeline(const RunConfig& cfg, const PipelineOptions& options) {
    if (const auto diags = validate_config(cfg); !diags.empty()) {
        std::string msg = "invalid run configuration:";
        for (const std::string& d : diags) msg += "\n  - " + d;
        throw Error(ErrorCode::InvalidConfig, msg);
    }

    std::vector<queries::QueryTopic> topics = queries::load_topics(cfg.paths.topics);
    if (!cfg.paths.expansions.empty()) queries::attach_expansions(topics, queries::load_expansions(cfg.paths.expansions));
    if (!cfg.paths.translations.empty()) {
        queries::attach_translations(topics, queries::load_translations(cfg.paths.translations));
    }

    const lexical::InvertedIndex index = open_index(cfg);
    const corpus::DocumentStore docs(corpus::store_file(cfg.paths.corpus, cfg.doc_lang));
    const corpus::CorpusStats stats = std::filesystem::exists(corpus::stats_file(cfg.paths.corpus, cfg.doc_lang))
                                          ? corpus::read_stats(cfg.paths.corpus, cfg.doc_lang)
                                          : index.stats();

    encoders::RemoteOptions bi_remote{.endpoint = cfg.bi_endpoint, .batch_size = cfg.batch_size};
    encoders::RemoteOptions cross_remote{.endpoint = cfg.cross_endpoint, .batch_size = cfg.batch_size};
    std::shared_ptr<const encoders::EmbeddingProvider> bi =
        options.bi_override ? options.bi_override : encoders::make_embedding_provider(cfg.bi_provider, bi_remote);
    const std::shared_ptr<const encoders::PairScorer> cross =
        options.cross_override ? options.cross_override : encoders::make_pair_scorer(cfg.cross_provider, cross_remote);
    if (!cfg.paths.cache.empty()) {
        bi = std::make_shared<encoders::CachedEmbeddingProvider>(
            bi, std::make_shared<encoders::EmbeddingCache>(cfg.paths.cache));
    }

    const ranking::StageOptions stage_opts{cfg.doc_lang, cfg.weights};
    spdlog::info("run {}: {} topics, {} -> {} docs ({}), N = {} sentences, fusion {}", cfg.run_tag, topics.size(),
                 cfg.query_lang, cfg.doc_lang, index.doc_count(), ranking::first_n_sentences(stats),
                 ranking::to_string(cfg.fusion.method));

    std::vector<TopicOutcome> outcomes(topics.size());
    std::vector<std::string> errors(topics.size());

    auto process = [&](std::size_t i) {
        const queries::QueryTopic& topic = topics[i];
        TopicOutcome& out = outcomes[i];
        auto timed = [&](Stage stage, auto&& fn) {
            const auto t0 = Clock::now();
            RankedList list = fn();
            out.timing[stage] = {std::chrono::duration<double>(Clock::now() - t0).count(), list.size()};
            check_invariants(list);
            return list;
        };
        if (topic.lang != cfg.query_lang) {
            throw Error(ErrorCode::InvalidArgument, "topic language '" + topic.lang + "' differs from query_lang '" +
                                                        cfg.query_lang + "'");
        }
        const queries::QueryTopic effective = cfg.bilingual() ? queries::translated_topic(topic, cfg.doc_lang) : topic;
        const std::string query = queries::derive_query(effective, cfg.query_type);

        RankedList bm25 = timed(Stage::bm25, [&] { return index.retrieve_topk(query, topic.topic_id, cfg.cutoffs.stage1); });
        RankedList refined = timed(Stage::refine, [&] { return ranking::refine(bm25, query, *bi, docs, stats, stage_opts); });
        const RankedList top2 = truncate(refined, cfg.cutoffs.stage2);
        RankedList reranked =
            timed(Stage::rerank, [&] { return ranking::rerank(top2, query, *cross, docs, stats, stage_opts); });
        RankedList fused = timed(Stage::fused, [&] { return ranking::fuse(bm25, top2, reranked, cfg.fusion); });
        RankedList final_list = truncate(fused, cfg.cutoffs.final);

        require_subset(refined, bm25);
        require_subset(reranked, refined);
        require_subset(fused, reranked);

        out.bm25 = std::move(bm25);
        out.refine = std::move(refined);
        out.rerank = std::move(reranked);
        out.fused = std::move(fused);
        out.final = std::move(final_list);
    };

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < topics.size(); i = next++) {
            try {
                process(i);
            } catch (const std::exception& e) {
                errors[i] = e.what();
                outcomes[i] = TopicOutcome{};
            }
        }
    };
    {
        const unsigned n = std::max(1u, std::min<unsigned>(cfg.parallelism, static_cast<unsigned>(topics.size())));
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
        worker();
    }

    RunResult result;
    for (std::size_t i = 0; i < topics.size(); ++i) {
        if (!errors[i].empty()) {
            spdlog::error("topic {} failed: {}", topics[i].topic_id, errors[i]);
            result.failed_topics.push_back(topics[i].topic_id);
            continue;
        }
        TopicOutcome& o = outcomes[i];
        result.final.push_back(std::move(*o.final));
        result.stages[Stage::bm25].push_back(std::move(*o.bm25));
        result.stages[Stage::refine].push_back(std::move(*o.refine));
        result.stages[Stage::rerank].push_back(std::move(*o.rerank));
        result.stages[Stage::fused].push_back(std::move(*o.fused));
        for (const auto& [stage, t] : o.timing) {
            result.timing[stage].seconds += t.seconds;
            result.timing[stage].docs += t.docs;
        }
    }
    for (const auto& [stage, t] : result.timing) {
        spdlog::info("stage {:<6} {:>8} docs in {:>8.3f} s ({:.0f} docs/s)", to_string(stage), t.docs, t.seconds,
                     t.seconds > 0 ? static_cast<double>(t.docs) / t.seconds : 0.0);
    }

    if (!options.out.empty()) {
        eval::write_run(std::span<const RankedList>(result.final), options.out, cfg.run_tag);
        if (options.keep_stages) {
            for (const auto& [stage, lists] : result.stages) {
                eval::write_run(std::span<const RankedList>(lists),
                                options.out.string() + "." + std::string(to_string(stage)), cfg.run_tag);
            }
        }
    }
    spdlog::info("run {}: {} topic(s) written, {} failed", cfg.run_tag, result.final.size(), result.failed_topics.size());
    return result;
}

}  // namespace bicross::pipeline
