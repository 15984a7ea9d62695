#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bicross::encoders {

using Vector = std::vector<float>;

/// Sentence embedding model (bi-encoder). Implementations must be safe for
/// concurrent calls and deterministic for a given name@version.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::string name() const = 0;
    virtual std::string version() const = 0;
    virtual std::size_t dim() const = 0;
    /// One vector per text, in order. Use embed() for validated calls.
    virtual std::vector<Vector> embed_batch(std::span<const std::string> texts, std::string_view lang) const = 0;

    std::string key() const { return name() + "@" + version(); }
};

/// Query/sentence relevance model (cross-encoder); scores in [0, 1].
class PairScorer {
public:
    virtual ~PairScorer() = default;
    virtual std::string name() const = 0;
    virtual std::string version() const = 0;
    virtual std::vector<double> score_batch(std::string_view query, std::span<const std::string> sentences) const = 0;
};

/// Throws EmptyBatch, InvalidArgument (empty text), DimensionMismatch,
/// NonFiniteScore; provider errors propagate.
std::vector<Vector> embed(const EmbeddingProvider& provider, std::span<const std::string> texts,
                          std::string_view lang = "en");

/// Out-of-range scores are clamped to [0, 1] with a warning. Throws
/// EmptyBatch, DimensionMismatch (wrong count), NonFiniteScore.
std::vector<double> score_pairs(const PairScorer& scorer, std::string_view query,
                                std::span<const std::string> sentences);

/// Dot product over norms, accumulated in double. Throws DimensionMismatch, ZeroVector.
double cosine(std::span<const float> u, std::span<const float> v);

// ---------------------------------------------------------------------------
// Offline providers

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Signed feature hashing of lowercased word tokens:
///   h = splitmix64(fnv1a64(token) ^ seed); v[h % dim] += (h >> 32) & 1 ? -1 : +1.
/// A text whose features cancel (or that has no word tokens) gets
/// v[splitmix64(fnv1a64(text) ^ seed) % dim] = 1 so the vector is never zero.
class HashingEmbedder final : public EmbeddingProvider {
public:
    explicit HashingEmbedder(std::size_t dim = 64, std::uint64_t seed = 42);

    std::string name() const override { return "hashing"; }
    std::string version() const override;
    std::size_t dim() const override { return dim_; }
    std::vector<Vector> embed_batch(std::span<const std::string> texts, std::string_view lang) const override;

    Vector embed_one(std::string_view text) const;
    std::size_t calls() const noexcept { return calls_.load(); }
    std::size_t texts_embedded() const noexcept { return texts_.load(); }

private:
    std::size_t dim_;
    std::uint64_t seed_;
    mutable std::atomic<std::size_t> calls_{0};
    mutable std::atomic<std::size_t> texts_{0};
};

/// Jaccard similarity of lowercased word-token sets.
class TokenOverlapScorer final : public PairScorer {
public:
    std::string name() const override { return "overlap"; }
    std::string version() const override { return "1"; }
    std::vector<double> score_batch(std::string_view query, std::span<const std::string> sentences) const override;

    static double jaccard(std::string_view a, std::string_view b);
    std::size_t calls() const noexcept { return calls_.load(); }

private:
    mutable std::atomic<std::size_t> calls_{0};
};

// ---------------------------------------------------------------------------
// Persistent embedding cache

/// Append-only log of (provider key, content hash, dim, float32 vector)
/// records, each with its own checksum. Damaged records are skipped on load,
/// so their texts are recomputed and re-appended. Readers share a lock;
/// writers are serialized.
class EmbeddingCache {
public:
    struct Stats {
        std::size_t live = 0;
        std::size_t dead = 0;     // superseded or damaged records in the file
        std::size_t corrupt = 0;  // damaged records seen at load
    };

    /// Opens (creating if needed). Compacts when dead records outnumber live ones.
    explicit EmbeddingCache(std::filesystem::path file);
    ~EmbeddingCache();
    EmbeddingCache(const EmbeddingCache&) = delete;
    EmbeddingCache& operator=(const EmbeddingCache&) = delete;

    std::optional<Vector> get(std::string_view provider_key, std::string_view text) const;
    void put(std::string_view provider_key, std::string_view text, const Vector& vec);
    void put_many(std::string_view provider_key, std::span<const std::string> texts, std::span<const Vector> vecs);

    /// Rewrites the file with live records only (temp file + rename).
    void compact();
    Stats stats() const;
    const std::filesystem::path& path() const noexcept { return file_; }

private:
    struct Key {
        std::string provider;
        std::uint64_t h1;
        std::uint64_t h2;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept;
    };
    static Key make_key(std::string_view provider, std::string_view text);
    static std::string encode(const Key& key, const Vector& vec);
    void load();
    void append_locked(const std::string& bytes);

    std::filesystem::path file_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Vector, KeyHash> entries_;
    std::ofstream out_;
    std::size_t dead_ = 0;
    std::size_t corrupt_ = 0;
};

/// Vectors for `texts`, computing and persisting misses in one provider call.
std::vector<Vector> cache_get_or_compute(EmbeddingCache& cache, const EmbeddingProvider& provider,
                                         std::span<const std::string> texts, std::string_view lang = "en");

/// Provider decorator that routes every call through a cache.
class CachedEmbeddingProvider final : public EmbeddingProvider {
public:
    CachedEmbeddingProvider(std::shared_ptr<const EmbeddingProvider> inner, std::shared_ptr<EmbeddingCache> cache);

    std::string name() const override { return inner_->name(); }
    std::string version() const override { return inner_->version(); }
    std::size_t dim() const override { return inner_->dim(); }
    std::vector<Vector> embed_batch(std::span<const std::string> texts, std::string_view lang) const override;

private:
    std::shared_ptr<const EmbeddingProvider> inner_;
    std::shared_ptr<EmbeddingCache> cache_;
};

// ---------------------------------------------------------------------------
// Remote providers (HTTP + JSON)

struct RemoteOptions {
    std::string endpoint;  // e.g. http://127.0.0.1:8080
    std::size_t batch_size = 32;
    int attempts = 3;
    std::chrono::milliseconds backoff{100};  // doubled after each failed attempt
    std::chrono::seconds timeout{60};
    std::size_t pool_size = 4;
};

class HttpPool;

/// POST /embed, GET /info. Construction fetches /info and throws
/// ProviderUnavailable when the service cannot be reached.
class RemoteEmbeddingProvider final : public EmbeddingProvider {
public:
    explicit RemoteEmbeddingProvider(RemoteOptions options);
    ~RemoteEmbeddingProvider() override;

    std::string name() const override { return name_; }
    std::string version() const override { return version_; }
    std::size_t dim() const override { return dim_; }
    std::vector<Vector> embed_batch(std::span<const std::string> texts, std::string_view lang) const override;

private:
    RemoteOptions options_;
    std::unique_ptr<HttpPool> pool_;
    std::string name_;
    std::string version_;
    std::size_t dim_ = 0;
};

/// POST /score_pairs, GET /info.
class RemotePairScorer final : public PairScorer {
public:
    explicit RemotePairScorer(RemoteOptions options);
    ~RemotePairScorer() override;

    std::string name() const override { return name_; }
    std::string version() const override { return version_; }
    std::vector<double> score_batch(std::string_view query, std::span<const std::string> sentences) const override;

private:
    RemoteOptions options_;
    std::unique_ptr<HttpPool> pool_;
    std::string name_;
    std::string version_;
};

/// "hashing" or "remote". Throws InvalidArgument.
std::shared_ptr<const EmbeddingProvider> make_embedding_provider(std::string_view name, const RemoteOptions& remote = {});
/// "overlap" or "remote". Throws InvalidArgument.
std::shared_ptr<const PairScorer> make_pair_scorer(std::string_view name, const RemoteOptions& remote = {});

}  // namespace bicross::encoders
