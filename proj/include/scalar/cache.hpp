#ifndef SCALAR_CACHE_HPP
#define SCALAR_CACHE_HPP

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include <json.hpp>

#include "scalar/error.hpp"
#include "scalar/pipeline.hpp"
#include "scalar/tags.hpp"

namespace scalar {

using Timestamp = std::int64_t;  // UNIX seconds

inline Timestamp unix_now() { return static_cast<Timestamp>(std::time(nullptr)); }

struct CacheKey {
  std::string identifier;
  IdentifierContext context = IdentifierContext::Declaration;

  std::string str() const { return std::string(to_string(context)) + ":" + identifier; }
  friend auto operator<=>(const CacheKey&, const CacheKey&) = default;
};

struct CacheEntry {
  CacheKey key;
  std::vector<AnnotatedWord> annotation;
  Timestamp first_seen = 0;
  Timestamp last_seen = 0;
  std::uint64_t count = 0;

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

inline nlohmann::json to_json(const AnnotatedWord& w) {
  return {{"word", w.word}, {"tag", std::string(to_string(w.tag))}, {"is_dictionary_word", w.is_dictionary_word}};
}

inline AnnotatedWord annotated_word_from_json(const nlohmann::json& j) {
  const auto tag = parse_scalar_tag(j.at("tag").get<std::string>());
  if (!tag) throw LoadError("unknown tag in cached annotation");
  return {j.at("word").get<std::string>(), *tag, j.at("is_dictionary_word").get<bool>()};
}

/// Memoized annotations with encounter bookkeeping. All operations are
/// thread-safe; persistence writes are serialized and atomic.
class ResultCache {
 public:
  static constexpr const char* kFormat = "scalar-cache";
  static constexpr int kFormatVersion = 1;

  explicit ResultCache(std::string model_version) : model_version_(std::move(model_version)) {}

  const std::string& model_version() const { return model_version_; }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
  }

  /// On a hit, records the encounter and returns the updated entry.
  std::optional<CacheEntry> lookup(const CacheKey& key, Timestamp now) {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    record_hit(it->second, now);
    return it->second;
  }

  /// Read-only lookup; does not count as an encounter.
  std::optional<CacheEntry> peek(const CacheKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  /// Creates a new entry; the key must not be present yet.
  CacheEntry store(const CacheKey& key, std::vector<AnnotatedWord> annotation, Timestamp now) {
    std::lock_guard lock(mutex_);
    if (entries_.contains(key)) throw ContractViolation("cache: duplicate store for " + key.str());
    return insert_locked(key, std::move(annotation), now);
  }

  /// Lookup that computes and stores on a miss. Concurrent misses on the same
  /// key compute more than once, but every call is counted exactly once.
  template <typename Compute>
  std::pair<CacheEntry, bool> lookup_or_store(const CacheKey& key, Timestamp now, Compute&& compute) {
    if (auto hit = lookup(key, now)) return {std::move(*hit), true};
    auto annotation = compute();
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end()) {
      record_hit(it->second, now);
      return {it->second, true};
    }
    return {insert_locked(key, std::move(annotation), now), false};
  }

  bool dirty() const {
    std::lock_guard lock(mutex_);
    return dirty_;
  }

  nlohmann::json to_json() const {
    std::lock_guard lock(mutex_);
    return to_json_locked();
  }

  /// Writes to `path` via a temporary file and rename.
  void persist(const std::filesystem::path& path) {
    std::lock_guard io(io_mutex_);
    nlohmann::json doc;
    {
      std::lock_guard lock(mutex_);
      doc = to_json_locked();
      dirty_ = false;
    }
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw CacheUnavailable("cannot write cache file " + tmp);
      out << doc.dump(2) << '\n';
      if (!out) throw CacheUnavailable("short write to cache file " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CacheUnavailable("cannot replace cache file " + path.string() + ": " + ec.message());
  }

  /// Loads a persisted cache. A missing file, or one written for a different
  /// model version, yields an empty cache.
  static ResultCache load(const std::filesystem::path& path, const std::string& model_version) {
    ResultCache cache(model_version);
    if (!std::filesystem::exists(path)) return cache;
    std::ifstream in(path);
    if (!in) throw CacheUnavailable("cannot read cache file " + path.string());
    try {
      const auto doc = nlohmann::json::parse(in);
      if (doc.at("format").get<std::string>() != kFormat || doc.at("version").get<int>() != kFormatVersion) {
        throw CacheUnavailable("unrecognized cache file format in " + path.string());
      }
      if (doc.at("model_version").get<std::string>() != model_version) return cache;
      for (const auto& [key_text, e] : doc.at("entries").items()) {
        CacheEntry entry;
        entry.key.identifier = e.at("identifier").get<std::string>();
        const auto ctx = parse_context(e.at("context").get<std::string>());
        if (!ctx) throw CacheUnavailable("unknown context in cache entry " + key_text);
        entry.key.context = *ctx;
        for (const auto& w : e.at("words")) entry.annotation.push_back(annotated_word_from_json(w));
        entry.first_seen = e.at("first_seen").get<Timestamp>();
        entry.last_seen = e.at("last_seen").get<Timestamp>();
        entry.count = e.at("count").get<std::uint64_t>();
        cache.entries_.emplace(entry.key, std::move(entry));
      }
    } catch (const nlohmann::json::exception& e) {
      throw CacheUnavailable("corrupt cache file " + path.string() + ": " + e.what());
    } catch (const LoadError& e) {
      throw CacheUnavailable("corrupt cache file " + path.string() + ": " + e.what());
    }
    return cache;
  }

  ResultCache(ResultCache&& other) noexcept
      : model_version_(std::move(other.model_version_)), entries_(std::move(other.entries_)), dirty_(other.dirty_) {}

 private:
  void record_hit(CacheEntry& e, Timestamp now) {
    e.last_seen = std::max(e.last_seen, now);
    ++e.count;
    dirty_ = true;
  }

  CacheEntry insert_locked(const CacheKey& key, std::vector<AnnotatedWord> annotation, Timestamp now) {
    CacheEntry e{key, std::move(annotation), now, now, 1};
    entries_.emplace(key, e);
    dirty_ = true;
    return e;
  }

  nlohmann::json to_json_locked() const {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, e] : entries_) {
      nlohmann::json words = nlohmann::json::array();
      for (const auto& w : e.annotation) words.push_back(scalar::to_json(w));
      entries[key.str()] = {{"identifier", key.identifier},
                            {"context", std::string(to_string(key.context))},
                            {"words", words},
                            {"first_seen", e.first_seen},
                            {"last_seen", e.last_seen},
                            {"count", e.count}};
    }
    return {{"format", kFormat}, {"version", kFormatVersion}, {"model_version", model_version_}, {"entries", entries}};
  }

  std::string model_version_;
  std::map<CacheKey, CacheEntry> entries_;
  bool dirty_ = false;
  mutable std::mutex mutex_;
  std::mutex io_mutex_;
};

}  // namespace scalar

#endif  // SCALAR_CACHE_HPP
