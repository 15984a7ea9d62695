#include <algorithm>
#include <cstring>
#include <mutex>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include <spdlog/spdlog.h>

#include "bicross/encoders.hpp"
#include "bicross/error.hpp"
#include "bicross/text.hpp"

namespace bicross::encoders {
namespace {

// Record: magic | u32 body length | body | u64 fnv1a64(body)
// Body:   u32 provider length | provider | u64 h1 | u64 h2 | u32 dim | f32 x dim
constexpr char kMagic[4] = {'B', 'X', 'C', '1'};
constexpr std::uint64_t kSecondBasis = 0x84222325cbf29ce4ULL;

template <class T>
void put_pod(std::string& out, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out.append(buf, sizeof(T));
}

template <class T>
bool get_pod(std::string_view in, std::size_t& pos, T& v) {
    if (in.size() - pos < sizeof(T)) return false;
    std::memcpy(&v, in.data() + pos, sizeof(T));
    pos += sizeof(T);
    return true;
}

}  // namespace

std::size_t EmbeddingCache::KeyHash::operator()(const Key& k) const noexcept {
    return static_cast<std::size_t>(k.h1 ^ (std::hash<std::string>{}(k.provider) * 0x9e3779b97f4a7c15ULL));
}

EmbeddingCache::Key EmbeddingCache::make_key(std::string_view provider, std::string_view txt) {
    return {std::string(provider), text::fnv1a64(txt), text::fnv1a64(txt, kSecondBasis)};
}

std::string EmbeddingCache::encode(const Key& key, const Vector& vec) {
    std::string body;
    put_pod(body, static_cast<std::uint32_t>(key.provider.size()));
    body.append(key.provider);
    put_pod(body, key.h1);
    put_pod(body, key.h2);
    put_pod(body, static_cast<std::uint32_t>(vec.size()));
    body.append(reinterpret_cast<const char*>(vec.data()), vec.size() * sizeof(float));
    std::string rec(kMagic, sizeof(kMagic));
    put_pod(rec, static_cast<std::uint32_t>(body.size()));
    rec.append(body);
    put_pod(rec, text::fnv1a64(body));
    return rec;
}

EmbeddingCache::EmbeddingCache(std::filesystem::path file) : file_(std::move(file)) {
    if (file_.has_parent_path()) std::filesystem::create_directories(file_.parent_path());
    load();
    if (dead_ > entries_.size()) {
        compact();
    } else {
        out_.open(file_, std::ios::binary | std::ios::app);
        if (!out_) throw Error(ErrorCode::IoError, "cannot open cache " + file_.string());
    }
}

EmbeddingCache::~EmbeddingCache() = default;

void EmbeddingCache::load() {
    std::ifstream in(file_, std::ios::binary);
    if (!in) return;
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();
    const std::string_view all(data);

    std::size_t pos = 0;
    bool in_garbage = false;
    while (pos < all.size()) {
        std::size_t p = pos;
        bool ok = all.compare(p, sizeof(kMagic), std::string_view(kMagic, sizeof(kMagic))) == 0;
        std::uint32_t body_len = 0;
        std::uint64_t checksum = 0;
        std::string_view body;
        if (ok) {
            p += sizeof(kMagic);
            ok = get_pod(all, p, body_len) && all.size() - p >= body_len;
        }
        if (ok) {
            body = all.substr(p, body_len);
            p += body_len;
            ok = get_pod(all, p, checksum) && checksum == text::fnv1a64(body);
        }
        Key key;
        Vector vec;
        if (ok) {
            std::size_t q = 0;
            std::uint32_t plen = 0;
            std::uint32_t dim = 0;
            ok = get_pod(body, q, plen) && body.size() - q >= plen;
            if (ok) {
                key.provider = std::string(body.substr(q, plen));
                q += plen;
                ok = get_pod(body, q, key.h1) && get_pod(body, q, key.h2) && get_pod(body, q, dim) &&
                     body.size() - q == static_cast<std::size_t>(dim) * sizeof(float);
            }
            if (ok) {
                vec.resize(dim);
                std::memcpy(vec.data(), body.data() + q, dim * sizeof(float));
            }
        }
        if (!ok) {
            if (!in_garbage) {
                ++corrupt_;
                ++dead_;
                in_garbage = true;
            }
            const std::size_t next = all.find(std::string_view(kMagic, sizeof(kMagic)), pos + 1);
            pos = next == std::string_view::npos ? all.size() : next;
            continue;
        }
        in_garbage = false;
        auto [it, inserted] = entries_.insert_or_assign(std::move(key), std::move(vec));
        (void)it;
        if (!inserted) ++dead_;
        pos = p;
    }
    if (corrupt_ > 0) {
        spdlog::warn("{}: {} damaged record(s) in {}; affected texts will be recomputed",
                     to_string(ErrorCode::CacheCorrupt), corrupt_, file_.string());
    }
}

std::optional<Vector> EmbeddingCache::get(std::string_view provider_key, std::string_view txt) const {
    const Key key = make_key(provider_key, txt);
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void EmbeddingCache::append_locked(const std::string& bytes) {
    out_.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out_.flush();
    if (!out_) throw Error(ErrorCode::IoError, "write failed for cache " + file_.string());
}

void EmbeddingCache::put(std::string_view provider_key, std::string_view txt, const Vector& vec) {
    Key key = make_key(provider_key, txt);
    const std::string rec = encode(key, vec);
    std::unique_lock lock(mutex_);
    append_locked(rec);
    if (!entries_.insert_or_assign(std::move(key), vec).second) ++dead_;
}

void EmbeddingCache::put_many(std::string_view provider_key, std::span<const std::string> texts,
                              std::span<const Vector> vecs) {
    if (texts.size() != vecs.size()) throw Error(ErrorCode::DimensionMismatch, "put_many: texts and vectors differ in count");
    std::vector<Key> keys;
    std::string bytes;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        keys.push_back(make_key(provider_key, texts[i]));
        bytes += encode(keys.back(), vecs[i]);
    }
    std::unique_lock lock(mutex_);
    append_locked(bytes);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (!entries_.insert_or_assign(std::move(keys[i]), vecs[i]).second) ++dead_;
    }
}

void EmbeddingCache::compact() {
    std::unique_lock lock(mutex_);
    if (out_.is_open()) out_.close();
    const auto tmp = std::filesystem::path(file_.string() + ".compact");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
        // Sorted so equal caches compact to equal bytes.
        std::vector<const std::pair<const Key, Vector>*> items;
        items.reserve(entries_.size());
        for (const auto& kv : entries_) items.push_back(&kv);
        std::sort(items.begin(), items.end(), [](auto* a, auto* b) {
            return std::tie(a->first.provider, a->first.h1, a->first.h2) <
                   std::tie(b->first.provider, b->first.h1, b->first.h2);
        });
        for (const auto* kv : items) {
            const std::string rec = encode(kv->first, kv->second);
            out.write(rec.data(), static_cast<std::streamsize>(rec.size()));
        }
        if (!out) throw Error(ErrorCode::IoError, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file_);
    dead_ = 0;
    out_.open(file_, std::ios::binary | std::ios::app);
    if (!out_) throw Error(ErrorCode::IoError, "cannot open cache " + file_.string());
}

EmbeddingCache::Stats EmbeddingCache::stats() const {
    std::shared_lock lock(mutex_);
    return {entries_.size(), dead_, corrupt_};
}

std::vector<Vector> cache_get_or_compute(EmbeddingCache& cache, const EmbeddingProvider& provider,
                                         std::span<const std::string> texts, std::string_view lang) {
    if (texts.empty()) throw Error(ErrorCode::EmptyBatch, "no texts to embed");
    const std::string key = provider.key();
    std::vector<Vector> out(texts.size());
    std::vector<std::string> missing;
    std::unordered_set<std::string_view> queued;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (auto hit = cache.get(key, texts[i]); hit && hit->size() == provider.dim()) {
            out[i] = std::move(*hit);
        } else if (queued.insert(texts[i]).second) {
            missing.push_back(texts[i]);
        }
    }
    if (missing.empty()) return out;
    const std::vector<Vector> fresh = embed(provider, missing, lang);
    cache.put_many(key, missing, fresh);
    std::unordered_map<std::string_view, const Vector*> by_text;
    for (std::size_t i = 0; i < missing.size(); ++i) by_text.emplace(missing[i], &fresh[i]);
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (out[i].empty()) out[i] = *by_text.at(texts[i]);
    }
    return out;
}

CachedEmbeddingProvider::CachedEmbeddingProvider(std::shared_ptr<const EmbeddingProvider> inner,
                                                 std::shared_ptr<EmbeddingCache> cache)
    : inner_(std::move(inner)), cache_(std::move(cache)) {
    if (!inner_ || !cache_) throw Error(ErrorCode::InvalidArgument, "cached provider needs a provider and a cache");
}

std::vector<Vector> CachedEmbeddingProvider::embed_batch(std::span<const std::string> texts, std::string_view lang) const {
    return cache_get_or_compute(*cache_, *inner_, texts, lang);
}

}  // namespace bicross::encoders
