#ifndef SCALAR_SERVICE_HPP
#define SCALAR_SERVICE_HPP

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>

#include <httplib.h>
#include <json.hpp>

#include "scalar/cache.hpp"
#include "scalar/error.hpp"
#include "scalar/pipeline.hpp"
#include "scalar/tags.hpp"

namespace scalar {

struct ServiceResponse {
  int status = 200;
  std::string body;  // serialized JSON

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

inline std::string error_body(std::string_view code, std::string_view message) {
  return nlohmann::json{{"error", std::string(code)}, {"message", std::string(message)}}.dump();
}

/// TagResponse JSON for a cache entry. Written by hand: this sits on the
/// cache-hit path, and building a json tree first costs several times more.
inline std::string tag_response_body(const CacheEntry& e, bool cached) {
  const auto quoted = [](const std::string& s) { return nlohmann::json(s).dump(); };
  std::string out;
  out.reserve(160 + 64 * e.annotation.size());
  out += "{\"identifier\":";
  out += quoted(e.key.identifier);
  out += ",\"context\":\"";
  out += to_string(e.key.context);
  out += "\",\"words\":[";
  for (std::size_t i = 0; i < e.annotation.size(); ++i) {
    const auto& w = e.annotation[i];
    if (i) out += ',';
    out += "{\"word\":";
    out += quoted(w.word);
    out += ",\"tag\":\"";
    out += to_string(w.tag);
    out += "\",\"is_dictionary_word\":";
    out += w.is_dictionary_word ? "true" : "false";
    out += '}';
  }
  out += "],\"first_seen\":" + std::to_string(e.first_seen);
  out += ",\"last_seen\":" + std::to_string(e.last_seen);
  out += ",\"count\":" + std::to_string(e.count);
  out += ",\"cached\":";
  out += cached ? "true" : "false";
  out += '}';
  return out;
}

/// Transport-independent request handling: cache in front of the tagger.
class TaggingService {
 public:
  using Clock = std::function<Timestamp()>;

  TaggingService(std::shared_ptr<const Tagger> tagger, std::optional<std::filesystem::path> cache_file = std::nullopt,
                 Clock clock = unix_now)
      : tagger_(std::move(tagger)),
        cache_file_(std::move(cache_file)),
        cache_(open_cache(tagger_, cache_file_)),
        clock_(std::move(clock)),
        started_(std::chrono::steady_clock::now()) {}

  ServiceResponse handle_tag(std::string_view context_name, std::string_view identifier) {
    if (!tagger_) return {503, error_body("model-not-loaded", "no trained model is loaded")};
    const auto context = parse_context(context_name);
    if (!context) return {400, error_body("unknown-context", "unknown context '" + std::string(context_name) + "'")};
    const CacheKey key{std::string(identifier), *context};
    // Malformed identifiers are never stored, so only a miss needs validating.
    try {
      auto [entry, cached] =
          cache_.lookup_or_store(key, clock_(), [&] { return tagger_->tag_identifier(identifier, *context); });
      return {200, tag_response_body(entry, cached)};
    } catch (const MalformedIdentifier& e) {
      return {400, error_body("malformed-identifier", e.what())};
    }
  }

  ServiceResponse handle_health() const {
    const double uptime = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    return {200,
            nlohmann::json{{"status", tagger_ ? "ok" : "no-model"},
             {"model_version", tagger_ ? tagger_->version() : std::string()},
             {"cache_size", cache_.size()},
             {"uptime_seconds", uptime}}
                .dump()};
  }

  /// Persists the cache when a cache file is configured. Errors are reported, not thrown.
  bool flush() {
    if (!cache_file_) return true;
    try {
      cache_.persist(*cache_file_);
      return true;
    } catch (const CacheUnavailable& e) {
      std::cerr << "cache flush failed: " << e.what() << '\n';
      return false;
    }
  }

  bool cache_dirty() const { return cache_.dirty(); }
  const ResultCache& cache() const { return cache_; }
  const Tagger* tagger() const { return tagger_.get(); }

 private:
  static ResultCache open_cache(const std::shared_ptr<const Tagger>& tagger,
                                const std::optional<std::filesystem::path>& file) {
    const std::string version = tagger ? tagger->version() : std::string();
    if (!file) return ResultCache(version);
    try {
      return ResultCache::load(*file, version);
    } catch (const CacheUnavailable& e) {
      std::cerr << "starting with an empty cache: " << e.what() << '\n';
      return ResultCache(version);
    }
  }

  std::shared_ptr<const Tagger> tagger_;
  std::optional<std::filesystem::path> cache_file_;
  ResultCache cache_;
  Clock clock_;
  std::chrono::steady_clock::time_point started_;
};

/// HTTP front end:
///   GET  /tag/{context}/{identifier}
///   POST /tag   {"identifier": ..., "context": ...}
///   GET  /health
class HttpServer {
 public:
  explicit HttpServer(TaggingService& service, std::chrono::seconds flush_interval = std::chrono::seconds(30))
      : service_(service), flush_interval_(flush_interval) {
    server_.Get(R"(/tag/([^/]+)/(.+))", [this](const httplib::Request& req, httplib::Response& res) {
      reply(res, service_.handle_tag(req.matches[1].str(), req.matches[2].str()));
    });
    server_.Post("/tag", [this](const httplib::Request& req, httplib::Response& res) {
      const auto body = nlohmann::json::parse(req.body, nullptr, false);
      if (body.is_discarded() || !body.is_object() || !body.contains("identifier") || !body.contains("context") ||
          !body["identifier"].is_string() || !body["context"].is_string()) {
        reply(res, {400, error_body("bad-request", "expected {\"identifier\": string, \"context\": string}")});
        return;
      }
      reply(res, service_.handle_tag(body["context"].get<std::string>(), body["identifier"].get<std::string>()));
    });
    server_.Get("/health", [this](const httplib::Request&, httplib::Response& res) { reply(res, service_.handle_health()); });
    server_.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) {
        res.set_content(error_body("not-found", "no such route"), "application/json");
      }
    });
  }

  ~HttpServer() { stop(); }

  /// Binds; port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port) {
    if (port == 0) return server_.bind_to_any_port(host);
    return server_.bind_to_port(host, port) ? port : -1;
  }

  /// Serves until stop(); flushes the cache periodically and on exit.
  void run() {
    std::thread flusher([this] { flush_loop(); });
    server_.listen_after_bind();
    {
      std::lock_guard lock(flush_mutex_);
      stopping_ = true;
    }
    flush_cv_.notify_all();
    flusher.join();
    service_.flush();
  }

  void wait_until_ready() const { server_.wait_until_ready(); }

  void stop() {
    if (server_.is_running()) server_.stop();
  }

 private:
  static void reply(httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json");
  }

  void flush_loop() {
    std::unique_lock lock(flush_mutex_);
    while (!stopping_) {
      flush_cv_.wait_for(lock, flush_interval_, [this] { return stopping_; });
      if (stopping_) break;
      lock.unlock();
      if (service_.cache_dirty()) service_.flush();
      lock.lock();
    }
  }

  TaggingService& service_;
  httplib::Server server_;
  std::chrono::seconds flush_interval_;
  std::mutex flush_mutex_;
  std::condition_variable flush_cv_;
  bool stopping_ = false;
};

}  // namespace scalar

#endif  // SCALAR_SERVICE_HPP
