#include <cmath>
#include <limits>

#include <spdlog/spdlog.h>

#include "bicross/error.hpp"
#include "bicross/ranking.hpp"

namespace bicross::ranking {
namespace {

struct SentenceBatch {
    std::vector<std::string> sentences;           // flattened, first N per document
    std::vector<std::pair<std::size_t, std::size_t>> ranges;  // per candidate: [begin, end)
};

SentenceBatch collect_sentences(const RankedList& candidates, const corpus::DocumentLookup& docs, std::size_t n) {
    SentenceBatch batch;
    batch.ranges.reserve(candidates.size());
    for (const RankedEntry& e : candidates.entries) {
        const std::size_t begin = batch.sentences.size();
        std::vector<std::string> sents = docs.sentences(e.doc_id);
        if (sents.size() > n) sents.resize(n);
        for (std::string& s : sents) {
            if (!s.empty()) batch.sentences.push_back(std::move(s));
        }
        batch.ranges.emplace_back(begin, batch.sentences.size());
    }
    return batch;
}

template <class ScoreAt>
RankedList assemble(const RankedList& candidates, Stage stage, const SentenceBatch& batch,
                    const AggregationWeights& weights, ScoreAt&& score_at) {
    std::vector<std::pair<std::string, double>> scored;
    scored.reserve(candidates.size());
    std::size_t empty_docs = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const auto [begin, end] = batch.ranges[i];
        double score = -std::numeric_limits<double>::infinity();
        if (begin == end) {
            ++empty_docs;
        } else {
            std::vector<ScoredSentence> sentence_scores;
            sentence_scores.reserve(end - begin);
            for (std::size_t s = begin; s < end; ++s) sentence_scores.push_back({s - begin, score_at(s)});
            score = aggregate_topk(sentence_scores, weights);
        }
        scored.emplace_back(candidates.entries[i].doc_id, score);
    }
    if (empty_docs > 0) {
        spdlog::warn("query {}: {} candidate(s) without sentences ranked last in {}", candidates.query_id, empty_docs,
                     to_string(stage));
    }
    return make_ranked_list(candidates.query_id, stage, std::move(scored));
}

}  // namespace

RankedList refine(const RankedList& candidates, std::string_view query, const encoders::EmbeddingProvider& provider,
                  const corpus::DocumentLookup& docs, const corpus::CorpusStats& stats, const StageOptions& options) {
    if (candidates.stage != Stage::bm25) {
        throw Error(ErrorCode::InvalidArgument, "refine expects a bm25 list, got " + std::string(to_string(candidates.stage)));
    }
    options.weights.validate();
    if (candidates.empty()) return RankedList{candidates.query_id, Stage::refine, {}};
    const SentenceBatch batch = collect_sentences(candidates, docs, first_n_sentences(stats));

    const std::string q(query);
    const encoders::Vector qvec = encoders::embed(provider, std::span<const std::string>(&q, 1), options.lang).front();
    std::vector<encoders::Vector> svecs;
    if (!batch.sentences.empty()) svecs = encoders::embed(provider, batch.sentences, options.lang);
    return assemble(candidates, Stage::refine, batch, options.weights,
                    [&](std::size_t s) { return encoders::cosine(qvec, svecs[s]); });
}

RankedList rerank(const RankedList& candidates, std::string_view query, const encoders::PairScorer& scorer,
                  const corpus::DocumentLookup& docs, const corpus::CorpusStats& stats, const StageOptions& options) {
    if (candidates.stage != Stage::refine) {
        throw Error(ErrorCode::InvalidArgument, "rerank expects a refine list, got " + std::string(to_string(candidates.stage)));
    }
    options.weights.validate();
    if (candidates.empty()) return RankedList{candidates.query_id, Stage::rerank, {}};
    const SentenceBatch batch = collect_sentences(candidates, docs, first_n_sentences(stats));
    std::vector<double> scores;
    if (!batch.sentences.empty()) scores = encoders::score_pairs(scorer, query, batch.sentences);
    return assemble(candidates, Stage::rerank, batch, options.weights, [&](std::size_t s) { return scores[s]; });
}

}  // namespace bicross::ranking
