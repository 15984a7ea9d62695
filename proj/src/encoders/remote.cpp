#include <condition_variable>
#include <mutex>
#include <thread>

#include <spdlog/spdlog.h>

#include "bicross/encoders.hpp"
#include "bicross/error.hpp"
#include "httplib.h"
#include "json.hpp"

namespace bicross::encoders {

using nlohmann::json;

// Fixed set of keep-alive clients handed out one request at a time.
class HttpPool {
public:
    explicit HttpPool(const RemoteOptions& options) : options_(options) {
        std::string ep = options.endpoint;
        if (ep.empty()) throw Error(ErrorCode::ProviderUnavailable, "no endpoint configured for remote provider");
        if (ep.find("://") == std::string::npos) ep = "http://" + ep;
        const std::size_t host_start = ep.find("://") + 3;
        const std::size_t slash = ep.find('/', host_start);
        base_ = slash == std::string::npos ? ep : ep.substr(0, slash);
        prefix_ = slash == std::string::npos ? "" : ep.substr(slash);
        while (!prefix_.empty() && prefix_.back() == '/') prefix_.pop_back();
        const std::size_t n = std::max<std::size_t>(1, options.pool_size);
        for (std::size_t i = 0; i < n; ++i) {
            auto c = std::make_unique<httplib::Client>(base_);
            if (!c->is_valid()) throw Error(ErrorCode::ProviderUnavailable, "invalid endpoint " + options.endpoint);
            c->set_keep_alive(true);
            c->set_connection_timeout(options.timeout);
            c->set_read_timeout(options.timeout);
            c->set_write_timeout(options.timeout);
            idle_.push_back(std::move(c));
        }
    }

    /// Issues a request with retries. `body` empty means GET.
    json request(const std::string& path, const std::string& body) {
        std::string last_error;
        auto delay = options_.backoff;
        const int attempts = std::max(1, options_.attempts);
        for (int attempt = 1; attempt <= attempts; ++attempt) {
            auto client = acquire();
            httplib::Result res = body.empty() ? client->Get(prefix_ + path)
                                               : client->Post(prefix_ + path, body, "application/json");
            release(std::move(client));
            if (res && res->status == 200) {
                try {
                    return json::parse(res->body);
                } catch (const json::exception& e) {
                    last_error = std::string("unparseable response: ") + e.what();
                }
            } else if (res) {
                last_error = "HTTP " + std::to_string(res->status);
            } else {
                last_error = httplib::to_string(res.error());
            }
            if (attempt < attempts) {
                spdlog::debug("{}{} attempt {} failed ({}), retrying", base_, path, attempt, last_error);
                std::this_thread::sleep_for(delay);
                delay *= 2;
            }
        }
        throw Error(ErrorCode::ProviderUnavailable, base_ + prefix_ + path + ": " + last_error + " after " +
                                                        std::to_string(attempts) + " attempt(s)");
    }

private:
    std::unique_ptr<httplib::Client> acquire() {
        std::unique_lock lock(mutex_);
        cv_.wait(lock, [&] { return !idle_.empty(); });
        auto c = std::move(idle_.back());
        idle_.pop_back();
        return c;
    }

    void release(std::unique_ptr<httplib::Client> c) {
        {
            std::lock_guard lock(mutex_);
            idle_.push_back(std::move(c));
        }
        cv_.notify_one();
    }

    RemoteOptions options_;
    std::string base_;
    std::string prefix_;
    std::mutex mutex_;
    std::condition_variable cv_;
    std::vector<std::unique_ptr<httplib::Client>> idle_;
};

namespace {

std::string info_string(const json& info, const char* key) {
    if (!info.contains(key)) return {};
    const json& v = info[key];
    return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace

RemoteEmbeddingProvider::RemoteEmbeddingProvider(RemoteOptions options)
    : options_(std::move(options)), pool_(std::make_unique<HttpPool>(options_)) {
    if (options_.batch_size == 0) throw Error(ErrorCode::InvalidArgument, "batch size must be positive");
    const json info = pool_->request("/info", "");
    name_ = info_string(info, "name");
    version_ = info_string(info, "version");
    if (!info.contains("dim") || !info["dim"].is_number_unsigned() || info["dim"].get<std::size_t>() == 0) {
        throw Error(ErrorCode::DimensionMismatch, "embedding service /info did not report a positive dim");
    }
    dim_ = info["dim"].get<std::size_t>();
    if (name_.empty()) name_ = "remote";
}

RemoteEmbeddingProvider::~RemoteEmbeddingProvider() = default;

std::vector<Vector> RemoteEmbeddingProvider::embed_batch(std::span<const std::string> texts, std::string_view lang) const {
    std::vector<Vector> out;
    out.reserve(texts.size());
    for (std::size_t start = 0; start < texts.size(); start += options_.batch_size) {
        const auto chunk = texts.subspan(start, std::min(options_.batch_size, texts.size() - start));
        json req;
        req["texts"] = std::vector<std::string>(chunk.begin(), chunk.end());
        req["lang"] = lang;
        const json res = pool_->request("/embed", req.dump(-1, ' ', false, json::error_handler_t::replace));
        if (!res.contains("vectors") || !res["vectors"].is_array() || res["vectors"].size() != chunk.size()) {
            throw Error(ErrorCode::DimensionMismatch, "/embed returned the wrong number of vectors");
        }
        if (res.contains("dim") && res["dim"] != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "/embed reported dim " + res["dim"].dump() + ", expected " +
                                                          std::to_string(dim_));
        }
        for (const json& row : res["vectors"]) {
            if (!row.is_array() || row.size() != dim_) {
                throw Error(ErrorCode::DimensionMismatch, "/embed returned a row of the wrong length");
            }
            Vector v;
            v.reserve(dim_);
            for (const json& x : row) {
                if (!x.is_number()) throw Error(ErrorCode::DimensionMismatch, "/embed returned a non-numeric component");
                v.push_back(x.get<float>());
            }
            out.push_back(std::move(v));
        }
    }
    return out;
}

RemotePairScorer::RemotePairScorer(RemoteOptions options)
    : options_(std::move(options)), pool_(std::make_unique<HttpPool>(options_)) {
    if (options_.batch_size == 0) throw Error(ErrorCode::InvalidArgument, "batch size must be positive");
    const json info = pool_->request("/info", "");
    name_ = info_string(info, "name");
    version_ = info_string(info, "version");
    if (name_.empty()) name_ = "remote";
}

RemotePairScorer::~RemotePairScorer() = default;

std::vector<double> RemotePairScorer::score_batch(std::string_view query, std::span<const std::string> sentences) const {
    std::vector<double> out;
    out.reserve(sentences.size());
    for (std::size_t start = 0; start < sentences.size(); start += options_.batch_size) {
        const auto chunk = sentences.subspan(start, std::min(options_.batch_size, sentences.size() - start));
        json req;
        req["query"] = query;
        req["sentences"] = std::vector<std::string>(chunk.begin(), chunk.end());
        const json res = pool_->request("/score_pairs", req.dump(-1, ' ', false, json::error_handler_t::replace));
        if (!res.contains("scores") || !res["scores"].is_array() || res["scores"].size() != chunk.size()) {
            throw Error(ErrorCode::DimensionMismatch, "/score_pairs returned the wrong number of scores");
        }
        for (const json& s : res["scores"]) {
            if (!s.is_number()) throw Error(ErrorCode::DimensionMismatch, "/score_pairs returned a non-numeric score");
            out.push_back(s.get<double>());
        }
    }
    return out;
}

}  // namespace bicross::encoders
