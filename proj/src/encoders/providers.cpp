#include <algorithm>
#include <cmath>
#include <set>

#include <spdlog/spdlog.h>

#include "bicross/encoders.hpp"
#include "bicross/error.hpp"
#include "bicross/text.hpp"

namespace bicross::encoders {

std::vector<Vector> embed(const EmbeddingProvider& provider, std::span<const std::string> texts, std::string_view lang) {
    if (texts.empty()) throw Error(ErrorCode::EmptyBatch, "embed called with no texts");
    for (const std::string& t : texts) {
        if (t.empty()) throw Error(ErrorCode::InvalidArgument, "embed called with an empty text");
    }
    std::vector<Vector> out = provider.embed_batch(texts, lang);
    if (out.size() != texts.size()) {
        throw Error(ErrorCode::DimensionMismatch, provider.name() + " returned " + std::to_string(out.size()) +
                                                      " vectors for " + std::to_string(texts.size()) + " texts");
    }
    for (const Vector& v : out) {
        if (v.size() != provider.dim()) {
            throw Error(ErrorCode::DimensionMismatch, provider.name() + " returned a vector of length " +
                                                          std::to_string(v.size()) + ", expected " +
                                                          std::to_string(provider.dim()));
        }
        for (float x : v) {
            if (!std::isfinite(x)) throw Error(ErrorCode::NonFiniteScore, provider.name() + " returned a non-finite component");
        }
    }
    return out;
}

std::vector<double> score_pairs(const PairScorer& scorer, std::string_view query, std::span<const std::string> sentences) {
    if (sentences.empty()) throw Error(ErrorCode::EmptyBatch, "score_pairs called with no sentences");
    std::vector<double> out = scorer.score_batch(query, sentences);
    if (out.size() != sentences.size()) {
        throw Error(ErrorCode::DimensionMismatch, scorer.name() + " returned " + std::to_string(out.size()) +
                                                      " scores for " + std::to_string(sentences.size()) + " sentences");
    }
    for (double& s : out) {
        if (std::isnan(s)) throw Error(ErrorCode::NonFiniteScore, scorer.name() + " returned NaN");
        if (s < 0.0 || s > 1.0) {
            spdlog::warn("{}: {} ({}), clamped to [0, 1]", to_string(ErrorCode::OutOfRangeScore), s, scorer.name());
            s = std::clamp(s, 0.0, 1.0);
        }
    }
    return out;
}

double cosine(std::span<const float> u, std::span<const float> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "cosine of vectors with lengths " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
    }
    double dot = 0.0;
    double nu = 0.0;
    double nv = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double a = u[i];
        const double b = v[i];
        dot += a * b;
        nu += a * a;
        nv += b * b;
    }
    if (nu == 0.0 || nv == 0.0) throw Error(ErrorCode::ZeroVector, "cosine with a zero vector");
    return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), -1.0, 1.0);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

HashingEmbedder::HashingEmbedder(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
    if (dim == 0) throw Error(ErrorCode::InvalidArgument, "embedding dim must be positive");
}

std::string HashingEmbedder::version() const {
    return "1-d" + std::to_string(dim_) + "-s" + std::to_string(seed_);
}

Vector HashingEmbedder::embed_one(std::string_view input) const {
    Vector v(dim_, 0.0f);
    for (const std::string& tok : text::word_tokens(text::to_lower(input))) {
        const std::uint64_t h = splitmix64(text::fnv1a64(tok) ^ seed_);
        v[h % dim_] += ((h >> 32) & 1U) ? -1.0f : 1.0f;
    }
    if (std::all_of(v.begin(), v.end(), [](float x) { return x == 0.0f; })) {
        v[splitmix64(text::fnv1a64(input) ^ seed_) % dim_] = 1.0f;
    }
    return v;
}

std::vector<Vector> HashingEmbedder::embed_batch(std::span<const std::string> texts, std::string_view) const {
    ++calls_;
    texts_ += texts.size();
    std::vector<Vector> out;
    out.reserve(texts.size());
    for (const std::string& t : texts) out.push_back(embed_one(t));
    return out;
}

double TokenOverlapScorer::jaccard(std::string_view a, std::string_view b) {
    const auto ta = text::word_tokens(text::to_lower(a));
    const auto tb = text::word_tokens(text::to_lower(b));
    const std::set<std::string> sa(ta.begin(), ta.end());
    const std::set<std::string> sb(tb.begin(), tb.end());
    if (sa.empty() && sb.empty()) return 0.0;
    std::size_t common = 0;
    for (const std::string& t : sa) common += sb.count(t);
    const std::size_t uni = sa.size() + sb.size() - common;
    return static_cast<double>(common) / static_cast<double>(uni);
}

std::vector<double> TokenOverlapScorer::score_batch(std::string_view query, std::span<const std::string> sentences) const {
    ++calls_;
    std::vector<double> out;
    out.reserve(sentences.size());
    for (const std::string& s : sentences) out.push_back(jaccard(query, s));
    return out;
}

std::shared_ptr<const EmbeddingProvider> make_embedding_provider(std::string_view name, const RemoteOptions& remote) {
    if (name == "hashing") return std::make_shared<HashingEmbedder>();
    if (name == "remote") return std::make_shared<RemoteEmbeddingProvider>(remote);
    throw Error(ErrorCode::InvalidArgument, "unknown embedding provider '" + std::string(name) + "'");
}

std::shared_ptr<const PairScorer> make_pair_scorer(std::string_view name, const RemoteOptions& remote) {
    if (name == "overlap") return std::make_shared<TokenOverlapScorer>();
    if (name == "remote") return std::make_shared<RemotePairScorer>(remote);
    throw Error(ErrorCode::InvalidArgument, "unknown pair scorer '" + std::string(name) + "'");
}

}  // namespace bicross::encoders
