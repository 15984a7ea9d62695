#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <thread>

#include "httplib.h"
#include "json.hpp"

#include "bicross/encoders.hpp"
#include "bicross/error.hpp"
#include "test_support.hpp"

using namespace bicross;
using namespace bicross::testing;
using nlohmann::json;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::IoError;
}

// Minimal stand-in for the encoder service: deterministic vectors and scores,
// with an optional number of 503 responses before success.
class MockService {
public:
    explicit MockService(int failures = 0) : failures_(failures) {
        server_.Get("/info", [](const httplib::Request&, httplib::Response& res) {
            res.set_content(R"({"name": "mock", "version": "7", "dim": 4})", "application/json");
        });
        server_.Post("/embed", [this](const httplib::Request& req, httplib::Response& res) {
            if (fail()) return;
            const json in = json::parse(req.body);
            ++embed_requests;
            max_batch = std::max<std::size_t>(max_batch, in["texts"].size());
            json rows = json::array();
            for (const auto& t : in["texts"]) {
                const auto s = t.get<std::string>();
                rows.push_back({static_cast<double>(s.size()), 1.0, in["lang"] == "es" ? 2.0 : 0.0, 0.5});
            }
            res.set_content(json{{"dim", 4}, {"vectors", rows}}.dump(), "application/json");
        });
        server_.Post("/score_pairs", [this](const httplib::Request& req, httplib::Response& res) {
            if (fail()) {
                res.status = 503;
                return;
            }
            const json in = json::parse(req.body);
            json scores = json::array();
            for (const auto& s : in["sentences"]) {
                scores.push_back(encoders::TokenOverlapScorer::jaccard(in["query"].get<std::string>(), s.get<std::string>()));
            }
            res.set_content(json{{"scores", scores}}.dump(), "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~MockService() {
        server_.stop();
        thread_.join();
    }
    std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }

    std::atomic<int> embed_requests{0};
    std::atomic<std::size_t> max_batch{0};

private:
    bool fail() {
        if (failures_.fetch_sub(1) > 0) return true;
        return false;
    }
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::atomic<int> failures_;
};

encoders::RemoteOptions fast(const std::string& endpoint) {
    encoders::RemoteOptions o;
    o.endpoint = endpoint;
    o.backoff = std::chrono::milliseconds(5);
    o.timeout = std::chrono::seconds(5);
    return o;
}

}  // namespace

TEST(Hashing, MatchesStandaloneRecomputation) {
    const auto j = json::parse(read_text(fixture("hashing_vectors.json")));
    const encoders::HashingEmbedder h(j["dim"], j["seed"]);
    EXPECT_EQ(h.version(), "1-d64-s42");
    for (const auto& [text, vec] : j["vectors"].items()) {
        const auto got = h.embed_one(text);
        const auto want = vec.get<std::vector<double>>();
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], static_cast<float>(want[i])) << text << " " << i;
    }
}

TEST(Hashing, DeterministicAndCounted) {
    const encoders::HashingEmbedder h;
    const std::vector<std::string> texts{"virus", "Virus!", "masks"};
    const auto a = encoders::embed(h, texts);
    EXPECT_EQ(a[0], a[1]);
    EXPECT_EQ(a, encoders::embed(h, texts));
    EXPECT_EQ(h.calls(), 2u);
    EXPECT_EQ(h.texts_embedded(), 6u);
    EXPECT_EQ(code_of([&] { encoders::embed(h, {}); }), ErrorCode::EmptyBatch);
    const std::vector<std::string> empty{""};
    EXPECT_EQ(code_of([&] { encoders::embed(h, empty); }), ErrorCode::InvalidArgument);
}

TEST(Cosine, KnownValueAndErrors) {
    const auto j = json::parse(read_text(fixture("cosine.json")));
    const std::vector<float> u{1, 2, 3};
    const std::vector<float> v{4, 5, 6};
    EXPECT_NEAR(encoders::cosine(u, v), j["cosine"].get<double>(), 1e-9);
    EXPECT_NEAR(encoders::cosine(u, v), 0.974631, 1e-6);
    EXPECT_DOUBLE_EQ(encoders::cosine(u, u), 1.0);
    const std::vector<float> neg{-1, -2, -3};
    EXPECT_DOUBLE_EQ(encoders::cosine(u, neg), -1.0);
    const std::vector<float> zero{0, 0, 0};
    const std::vector<float> two{1, 2};
    EXPECT_EQ(code_of([&] { encoders::cosine(u, zero); }), ErrorCode::ZeroVector);
    EXPECT_EQ(code_of([&] { encoders::cosine(u, two); }), ErrorCode::DimensionMismatch);
}

TEST(Overlap, MatchesSetArithmetic) {
    const auto pairs = json::parse(read_text(fixture("jaccard_pairs.json")));
    ASSERT_EQ(pairs.size(), 10u);
    for (const auto& p : pairs) {
        EXPECT_DOUBLE_EQ(encoders::TokenOverlapScorer::jaccard(p["a"].get<std::string>(), p["b"].get<std::string>()),
                         p["jaccard"].get<double>())
            << p["a"];
    }
    const encoders::TokenOverlapScorer s;
    const std::vector<std::string> sents{"uv light", "nothing"};
    const auto scores = encoders::score_pairs(s, "uv light", sents);
    EXPECT_EQ(scores, (std::vector<double>{1.0, 0.0}));
    EXPECT_EQ(code_of([&] { encoders::score_pairs(s, "q", {}); }), ErrorCode::EmptyBatch);
}

TEST(ScorePairs, ClampsAndValidates) {
    struct Wild final : encoders::PairScorer {
        std::vector<double> out;
        std::string name() const override { return "wild"; }
        std::string version() const override { return "0"; }
        std::vector<double> score_batch(std::string_view, std::span<const std::string>) const override { return out; }
    };
    Wild w;
    const std::vector<std::string> two{"a", "b"};
    w.out = {1.5, -0.25};
    EXPECT_EQ(encoders::score_pairs(w, "q", two), (std::vector<double>{1.0, 0.0}));
    w.out = {0.5};
    EXPECT_EQ(code_of([&] { encoders::score_pairs(w, "q", two); }), ErrorCode::DimensionMismatch);
    w.out = {0.5, std::nan("")};
    EXPECT_EQ(code_of([&] { encoders::score_pairs(w, "q", two); }), ErrorCode::NonFiniteScore);
}

TEST(Cache, PersistsAcrossReopen) {
    TempDir dir;
    const encoders::HashingEmbedder h;
    {
        encoders::EmbeddingCache cache(dir / "c.bin");
        cache.put(h.key(), "virus", h.embed_one("virus"));
        cache.put(h.key(), "mask", h.embed_one("mask"));
        EXPECT_EQ(cache.stats().live, 2u);
    }
    encoders::EmbeddingCache cache(dir / "c.bin");
    EXPECT_EQ(cache.get(h.key(), "virus"), h.embed_one("virus"));
    EXPECT_FALSE(cache.get("other@1", "virus").has_value());
    EXPECT_FALSE(cache.get(h.key(), "absent").has_value());
}

TEST(Cache, GetOrComputeBatchesMisses) {
    TempDir dir;
    const encoders::HashingEmbedder h;
    encoders::EmbeddingCache cache(dir / "c.bin");
    const std::vector<std::string> texts{"a b", "c d", "a b", "e"};
    const auto first = encoders::cache_get_or_compute(cache, h, texts);
    EXPECT_EQ(h.calls(), 1u);
    EXPECT_EQ(h.texts_embedded(), 3u);
    const auto second = encoders::cache_get_or_compute(cache, h, texts);
    EXPECT_EQ(h.calls(), 1u);
    EXPECT_EQ(first, second);
    EXPECT_EQ(first[0], h.embed_one("a b"));
}

TEST(Cache, DamagedRecordsAreRecomputed) {
    TempDir dir;
    auto h = std::make_shared<encoders::HashingEmbedder>();
    const std::vector<std::string> texts{"alpha", "beta", "gamma", "delta"};
    {
        encoders::EmbeddingCache cache(dir / "c.bin");
        encoders::cache_get_or_compute(cache, *h, texts);
    }
    std::string bytes = read_text(dir / "c.bin");
    bytes[bytes.size() / 3] ^= 0x40;  // hit one record
    write_text(dir / "c.bin", bytes);

    auto cache = std::make_shared<encoders::EmbeddingCache>(dir / "c.bin");
    EXPECT_EQ(cache->stats().corrupt, 1u);
    EXPECT_EQ(cache->stats().live, 3u);
    const encoders::CachedEmbeddingProvider cached(h, cache);
    const auto vecs = cached.embed_batch(texts, "en");
    for (std::size_t i = 0; i < texts.size(); ++i) EXPECT_EQ(vecs[i], h->embed_one(texts[i]));
    EXPECT_EQ(h->texts_embedded(), 5u);  // 4 cold + 1 recomputed
    EXPECT_EQ(cache->stats().live, 4u);
}

TEST(Cache, TruncatedTailAndCompaction) {
    TempDir dir;
    const encoders::HashingEmbedder h;
    {
        encoders::EmbeddingCache cache(dir / "c.bin");
        for (int i = 0; i < 10; ++i) cache.put(h.key(), "t" + std::to_string(i), h.embed_one("t" + std::to_string(i)));
        for (int i = 0; i < 10; ++i) cache.put(h.key(), "t" + std::to_string(i), h.embed_one("t" + std::to_string(i)));
        EXPECT_EQ(cache.stats().dead, 10u);
        cache.compact();
        EXPECT_EQ(cache.stats().dead, 0u);
        EXPECT_EQ(cache.stats().live, 10u);
    }
    std::string bytes = read_text(dir / "c.bin");
    write_text(dir / "c.bin", bytes.substr(0, bytes.size() - 7));
    encoders::EmbeddingCache cache(dir / "c.bin");
    EXPECT_EQ(cache.stats().live, 9u);
    EXPECT_EQ(cache.get(h.key(), "t3"), h.embed_one("t3"));
}

TEST(Cache, ConcurrentReadersAndWriters) {
    TempDir dir;
    const encoders::HashingEmbedder h;
    encoders::EmbeddingCache cache(dir / "c.bin");
    std::vector<std::jthread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (int i = 0; i < 200; ++i) {
                const std::string text = "w" + std::to_string((i * 7 + t) % 50);
                if (const auto v = cache.get(h.key(), text)) {
                    EXPECT_EQ(*v, h.embed_one(text));
                } else {
                    cache.put(h.key(), text, h.embed_one(text));
                }
            }
        });
    }
    threads.clear();
    EXPECT_EQ(cache.stats().live, 50u);
}

TEST(Remote, EmbedInBatchesOverHttp) {
    MockService svc;
    auto opts = fast(svc.endpoint());
    opts.batch_size = 3;
    const encoders::RemoteEmbeddingProvider p(opts);
    EXPECT_EQ(p.name(), "mock");
    EXPECT_EQ(p.version(), "7");
    EXPECT_EQ(p.dim(), 4u);
    EXPECT_EQ(p.key(), "mock@7");
    std::vector<std::string> texts;
    for (int i = 0; i < 10; ++i) texts.push_back(std::string(static_cast<std::size_t>(i + 1), 'x'));
    const auto v = encoders::embed(p, texts, "es");
    ASSERT_EQ(v.size(), 10u);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(v[i], (encoders::Vector{float(i + 1), 1.0f, 2.0f, 0.5f}));
    EXPECT_EQ(svc.embed_requests.load(), 4);
    EXPECT_EQ(svc.max_batch.load(), 3u);
}

TEST(Remote, ScorePairsAndConcurrency) {
    MockService svc;
    const encoders::RemotePairScorer s(fast(svc.endpoint()));
    const std::vector<std::string> sents{"uv light kills", "masks", "UV light"};
    std::vector<std::jthread> threads;
    for (int t = 0; t < 6; ++t) {
        threads.emplace_back([&] {
            const auto scores = encoders::score_pairs(s, "uv light", sents);
            EXPECT_EQ(scores, (std::vector<double>{2.0 / 3.0, 0.0, 1.0}));
        });
    }
}

TEST(Remote, RetriesTransientFailures) {
    MockService svc(2);
    const encoders::RemotePairScorer s(fast(svc.endpoint()));
    const std::vector<std::string> sents{"a"};
    EXPECT_EQ(s.score_batch("a", sents), std::vector<double>{1.0});
}

TEST(Remote, GivesUpAfterAttempts) {
    MockService svc(100);
    const encoders::RemotePairScorer s(fast(svc.endpoint()));
    const std::vector<std::string> sents{"a"};
    EXPECT_EQ(code_of([&] { s.score_batch("a", sents); }), ErrorCode::ProviderUnavailable);
}

TEST(Remote, UnreachableEndpoint) {
    auto opts = fast("http://127.0.0.1:1");
    opts.attempts = 2;
    EXPECT_EQ(code_of([&] { encoders::RemoteEmbeddingProvider p(opts); }), ErrorCode::ProviderUnavailable);
    EXPECT_EQ(code_of([&] { encoders::make_embedding_provider("remote", {}); }), ErrorCode::ProviderUnavailable);
    EXPECT_EQ(code_of([&] { encoders::make_pair_scorer("bert"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(encoders::make_embedding_provider("hashing")->key(), "hashing@1-d64-s42");
}
