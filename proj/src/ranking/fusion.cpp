#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "bicross/error.hpp"
#include "bicross/ranking.hpp"

namespace bicross::ranking {

std::string_view to_string(FusionMethod m) noexcept {
    switch (m) {
        case FusionMethod::wcombsum: return "wcombsum";
        case FusionMethod::rrf: return "rrf";
        case FusionMethod::borda: return "borda";
        case FusionMethod::none: return "none";
    }
    return "unknown";
}

FusionMethod parse_fusion_method(std::string_view name) {
    if (name == "wcombsum") return FusionMethod::wcombsum;
    if (name == "rrf") return FusionMethod::rrf;
    if (name == "borda") return FusionMethod::borda;
    if (name == "none") return FusionMethod::none;
    throw Error(ErrorCode::InvalidArgument, "unknown fusion method '" + std::string(name) + "'");
}

std::vector<std::string> fusion_diagnostics(const FusionConfig& cfg) {
    std::vector<std::string> out;
    if (!std::isfinite(cfg.alpha) || !std::isfinite(cfg.beta) || cfg.alpha <= 0.0 || cfg.beta <= 0.0) {
        out.emplace_back("alpha and beta must be positive");
    }
    if (!(cfg.alpha > cfg.beta)) out.emplace_back("alpha must exceed beta");
    if (!(cfg.alpha + cfg.beta < 1.0)) out.emplace_back("alpha + beta must be below 1");
    if (!std::isfinite(cfg.rrf_k) || cfg.rrf_k < 0.0) out.emplace_back("rrf_k must be non-negative");
    return out;
}

std::vector<double> min_max_normalize(std::span<const double> scores) {
    if (scores.empty()) throw Error(ErrorCode::EmptyScores, "nothing to normalize");
    for (double s : scores) {
        if (!std::isfinite(s)) throw Error(ErrorCode::NonFiniteScore, "cannot normalize a non-finite score");
    }
    const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
    const double min = *lo;
    const double range = *hi - *lo;
    std::vector<double> out(scores.size(), 1.0);
    if (range > 0.0) {
        for (std::size_t i = 0; i < scores.size(); ++i) out[i] = (scores[i] - min) / range;
    }
    return out;
}

namespace {

std::unordered_map<std::string_view, const RankedEntry*> by_doc(const RankedList& list) {
    std::unordered_map<std::string_view, const RankedEntry*> out;
    out.reserve(list.size());
    for (const RankedEntry& e : list.entries) out.emplace(e.doc_id, &e);
    return out;
}

// Scores of `list` for `docs`, with -inf raised to the lowest finite value.
std::vector<double> stage_scores(const RankedList& list, const std::vector<std::string_view>& docs) {
    const auto index = by_doc(list);
    std::vector<double> out;
    out.reserve(docs.size());
    double lowest = std::numeric_limits<double>::infinity();
    for (std::string_view d : docs) {
        const auto it = index.find(d);
        if (it == index.end()) {
            throw Error(ErrorCode::MissingStageScore, "document " + std::string(d) + " has no " +
                                                          std::string(to_string(list.stage)) + " score for query " +
                                                          list.query_id);
        }
        const double s = it->second->score;
        if (std::isnan(s) || s == std::numeric_limits<double>::infinity()) {
            throw Error(ErrorCode::NonFiniteScore, "non-finite " + std::string(to_string(list.stage)) + " score");
        }
        if (std::isfinite(s)) lowest = std::min(lowest, s);
        out.push_back(s);
    }
    if (!std::isfinite(lowest)) lowest = 0.0;
    for (double& s : out) {
        if (!std::isfinite(s)) s = lowest;
    }
    return out;
}

void require_same_docs(const RankedList& bi, const RankedList& cross) {
    if (bi.size() != cross.size()) {
        throw Error(ErrorCode::DocSetMismatch, "query " + cross.query_id + ": lists hold " + std::to_string(bi.size()) +
                                                   " and " + std::to_string(cross.size()) + " documents");
    }
    const auto bi_docs = by_doc(bi);
    for (const RankedEntry& e : cross.entries) {
        if (!bi_docs.contains(e.doc_id)) {
            throw Error(ErrorCode::DocSetMismatch, "query " + cross.query_id + ": " + e.doc_id + " missing from one list");
        }
    }
}

template <class Combine>
RankedList rank_fusion(const RankedList& bi, const RankedList& cross, Combine&& combine) {
    require_same_docs(bi, cross);
    const auto bi_docs = by_doc(bi);
    std::vector<std::pair<std::string, double>> scored;
    scored.reserve(cross.size());
    for (const RankedEntry& e : cross.entries) {
        scored.emplace_back(e.doc_id, combine(static_cast<double>(e.rank), static_cast<double>(bi_docs.at(e.doc_id)->rank)));
    }
    return make_ranked_list(cross.query_id, Stage::fused, std::move(scored));
}

}  // namespace

RankedList wcombsum(const RankedList& bm25, const RankedList& bi, const RankedList& cross, const FusionConfig& cfg) {
    std::vector<std::string_view> docs;
    docs.reserve(cross.size());
    for (const RankedEntry& e : cross.entries) docs.push_back(e.doc_id);
    if (docs.empty()) return RankedList{cross.query_id, Stage::fused, {}};

    const auto n_cross = min_max_normalize(stage_scores(cross, docs));
    const auto n_bi = min_max_normalize(stage_scores(bi, docs));
    const auto n_bm25 = min_max_normalize(stage_scores(bm25, docs));
    const double gamma = 1.0 - cfg.alpha - cfg.beta;
    std::vector<std::pair<std::string, double>> scored;
    scored.reserve(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) {
        scored.emplace_back(std::string(docs[i]), cfg.alpha * n_cross[i] + cfg.beta * n_bi[i] + gamma * n_bm25[i]);
    }
    return make_ranked_list(cross.query_id, Stage::fused, std::move(scored));
}

RankedList rrf(const RankedList& bi, const RankedList& cross, double rrf_k) {
    return rank_fusion(bi, cross, [rrf_k](double rc, double rb) { return 1.0 / (rrf_k + rc) + 1.0 / (rrf_k + rb); });
}

RankedList borda(const RankedList& bi, const RankedList& cross) {
    const double n = static_cast<double>(cross.size());
    return rank_fusion(bi, cross, [n](double rc, double rb) { return (n - rc + 1.0) / n + (n - rb + 1.0) / n; });
}

RankedList fuse(const RankedList& bm25, const RankedList& bi, const RankedList& cross, const FusionConfig& cfg) {
    switch (cfg.method) {
        case FusionMethod::wcombsum: return wcombsum(bm25, bi, cross, cfg);
        case FusionMethod::rrf: return rrf(bi, cross, cfg.rrf_k);
        case FusionMethod::borda: return borda(bi, cross);
        case FusionMethod::none: {
            RankedList out = cross;
            out.stage = Stage::fused;
            return out;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown fusion method");
}

}  // namespace bicross::ranking
