#pragma once

// Completion-style language model backends: greedy completion and per-token
// log-probability scoring, with a persistent record/replay cache and a
// deterministic lexical-overlap mock for tests and desk-scale training.

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "xricl/util.hpp"

namespace xricl {

class GeneratorError : public std::runtime_error {
 public:
  GeneratorError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;  // transport-error | api-error | cache-miss | io-error |
                      // backend-lacks-scoring | budget-exceeded
};

struct GenerationParams {
  double temperature = 0.0;
  int max_tokens = 256;
  std::vector<std::string> stop_sequences;
  std::string model_name;

  void validate() const {
    if (temperature < 0.0) throw GeneratorError("api-error", "temperature must be >= 0");
    if (max_tokens < 1) throw GeneratorError("api-error", "max_tokens must be >= 1");
  }
};

enum class FinishReason { stop, length, error };

struct Completion {
  std::string text;
  FinishReason finish_reason = FinishReason::stop;
};

struct TokenScore {
  std::string token;
  double logprob = 0.0;  // finite, <= 0
};

inline double sequence_loglik(const std::vector<TokenScore>& scores) {
  double sum = 0.0;
  for (const auto& s : scores) sum += s.logprob;
  return sum;
}

class GeneratorBackend {
 public:
  virtual ~GeneratorBackend() = default;
  virtual Completion complete(const std::string& prompt, const GenerationParams& params) = 0;
  virtual std::vector<TokenScore> score_continuation(const std::string& prompt,
                                                     const std::string& continuation) = 0;
  virtual std::string name() const = 0;
};

using GeneratorPtr = std::shared_ptr<GeneratorBackend>;

namespace detail {

inline std::string truncate_at_stop(std::string text, const std::vector<std::string>& stops,
                                    FinishReason& reason) {
  std::size_t cut = std::string::npos;
  for (const auto& stop : stops) {
    if (stop.empty()) continue;
    const auto pos = text.find(stop);
    if (pos != std::string::npos && pos < cut) cut = pos;
  }
  if (cut != std::string::npos) {
    text.resize(cut);
    reason = FinishReason::stop;
  }
  return text;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// MockGenerator: deterministic lexical-overlap backend.
//
// Scoring: every continuation token (whitespace-split) gets
// logprob = ln(0.1 + 0.9 * J) where J is the character-3-gram Jaccard between
// the concatenation of the prompt's question lines and the continuation.
// Completion: returns the SQL line of the prompt exemplar whose question has
// the highest J with the test question (the prompt's last question line),
// first occurrence winning ties.
// ---------------------------------------------------------------------------

class MockGenerator : public GeneratorBackend {
 public:
  explicit MockGenerator(std::string question_marker = "Question:",
                         std::string sql_marker = "SQL:",
                         std::string translation_marker = "Translate into English:")
      : question_marker_(std::move(question_marker)),
        sql_marker_(std::move(sql_marker)),
        translation_marker_(std::move(translation_marker)) {}

  std::string name() const override { return "mock"; }

  std::vector<TokenScore> score_continuation(const std::string& prompt,
                                             const std::string& continuation) override {
    calls_.fetch_add(1);
    std::vector<TokenScore> out;
    const std::vector<std::string> tokens = whitespace_tokens(continuation);
    if (tokens.empty()) return out;
    const double j = trigram_jaccard(joined_question_lines(prompt), continuation);
    const double logprob = std::log(0.1 + 0.9 * j);
    out.reserve(tokens.size());
    for (const auto& token : tokens) out.push_back({token, logprob});
    return out;
  }

  Completion complete(const std::string& prompt, const GenerationParams& params) override {
    calls_.fetch_add(1);
    params.validate();
    const auto lines = split_lines(prompt);

    struct Block {
      std::string question;
      std::string english;  // translation line, when present
      std::string sql;
    };
    std::vector<Block> exemplars;
    std::string test_question;
    Block current;
    for (const auto& line : lines) {
      std::string rest;
      if (line_after_marker(line, question_marker_, rest)) {
        current = Block{};
        current.question = rest;
        test_question = rest;
      } else if (line_after_marker(line, translation_marker_, rest)) {
        current.english = rest;
      } else if (line_after_marker(line, sql_marker_, rest)) {
        if (!rest.empty() && !current.question.empty()) {
          current.sql = rest;
          exemplars.push_back(current);
        }
      }
    }
    if (exemplars.empty())
      return {"", FinishReason::error};

    std::size_t best = 0;
    double best_j = -1.0;
    for (std::size_t i = 0; i < exemplars.size(); ++i) {
      const double j = trigram_jaccard(exemplars[i].question, test_question);
      if (j > best_j) {
        best_j = j;
        best = i;
      }
    }

    // Cue-aware output: a prompt ending in the bare translation marker gets a
    // translation line before the SQL marker line.
    std::string text;
    const std::string tail = last_nonempty_line(lines);
    if (tail == translation_marker_) {
      const std::string english =
          exemplars[best].english.empty() ? exemplars[best].question : exemplars[best].english;
      text = " " + english + "\n" + sql_marker_ + " " + exemplars[best].sql;
    } else {
      text = " " + exemplars[best].sql;
    }
    FinishReason reason = FinishReason::stop;
    text = detail::truncate_at_stop(std::move(text), params.stop_sequences, reason);
    return {text, reason};
  }

  std::uint64_t call_count() const { return calls_.load(); }

 private:
  static std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> out;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) out.push_back(line);
    return out;
  }

  static std::vector<std::string> whitespace_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
  }

  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }

  bool line_after_marker(const std::string& line, const std::string& marker,
                         std::string& rest) const {
    const std::string t = trim(line);
    if (t.rfind(marker, 0) != 0) return false;
    rest = trim(t.substr(marker.size()));
    return true;
  }

  std::string joined_question_lines(const std::string& prompt) const {
    std::string joined;
    std::string rest;
    for (const auto& line : split_lines(prompt)) {
      if (line_after_marker(line, question_marker_, rest)) {
        if (!joined.empty()) joined += " ";
        joined += rest;
      }
    }
    return joined;
  }

  std::string last_nonempty_line(const std::vector<std::string>& lines) const {
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
      const std::string t = trim(*it);
      if (!t.empty()) return t;
    }
    return "";
  }

  std::string question_marker_;
  std::string sql_marker_;
  std::string translation_marker_;
  std::atomic<std::uint64_t> calls_{0};
};

// ---------------------------------------------------------------------------
// Record/replay cache wrapper
// ---------------------------------------------------------------------------

enum class CacheMode { record, replay_strict, replay_fallthrough };

inline const char* cache_mode_name(CacheMode m) {
  switch (m) {
    case CacheMode::record: return "record";
    case CacheMode::replay_strict: return "replay-strict";
    case CacheMode::replay_fallthrough: return "replay-fallthrough";
  }
  return "record";
}

inline CacheMode cache_mode_from_string(const std::string& s) {
  if (s == "record") return CacheMode::record;
  if (s == "replay-strict") return CacheMode::replay_strict;
  if (s == "replay-fallthrough") return CacheMode::replay_fallthrough;
  throw GeneratorError("io-error", "unknown cache mode '" + s + "'");
}

class CachingBackend : public GeneratorBackend {
 public:
  CachingBackend(GeneratorPtr inner, std::string path, CacheMode mode)
      : inner_(std::move(inner)), path_(std::move(path)), mode_(mode) {
    if (mode_ != CacheMode::replay_strict && !inner_)
      throw GeneratorError("io-error", "record modes need an upstream backend");
    load_existing();
  }

  std::string name() const override { return inner_ ? inner_->name() : "replay"; }

  Completion complete(const std::string& prompt, const GenerationParams& params) override {
    const std::string key = cache_key("complete", params.model_name, prompt, "", params);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return completion_from_json(it->second);
    }
    if (mode_ == CacheMode::replay_strict)
      throw GeneratorError("cache-miss", "no cached completion for key " + key);
    const Completion result = inner_->complete(prompt, params);
    store(key, "complete", completion_to_json(result));
    return result;
  }

  std::vector<TokenScore> score_continuation(const std::string& prompt,
                                             const std::string& continuation) override {
    // scoring has no sampling parameters, and the model component must be
    // recomputable in replay mode where no upstream backend exists
    const std::string key = cache_key("score", "", prompt, continuation, GenerationParams{});
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = entries_.find(key);
      if (it != entries_.end()) return scores_from_json(it->second);
    }
    if (mode_ == CacheMode::replay_strict)
      throw GeneratorError("cache-miss", "no cached scores for key " + key);
    const std::vector<TokenScore> result = inner_->score_continuation(prompt, continuation);
    store(key, "score", scores_to_json(result));
    return result;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return entries_.size();
  }

 private:
  static std::string cache_key(const std::string& mode, const std::string& model,
                               const std::string& prompt, const std::string& continuation,
                               const GenerationParams& params) {
    std::ostringstream os;
    os << model << '\x1f' << mode << '\x1f' << prompt << '\x1f' << continuation << '\x1f'
       << params.temperature << '\x1f' << params.max_tokens;
    for (const auto& stop : params.stop_sequences) os << '\x1f' << stop;
    return sha256_hex(os.str());
  }

  static nlohmann::json completion_to_json(const Completion& c) {
    const char* reason = c.finish_reason == FinishReason::stop
                             ? "stop"
                             : c.finish_reason == FinishReason::length ? "length" : "error";
    return nlohmann::json{{"text", c.text}, {"finish_reason", reason}};
  }

  static Completion completion_from_json(const nlohmann::json& j) {
    Completion c;
    c.text = j.at("text").get<std::string>();
    const std::string reason = j.at("finish_reason").get<std::string>();
    c.finish_reason = reason == "stop" ? FinishReason::stop
                                       : reason == "length" ? FinishReason::length
                                                            : FinishReason::error;
    return c;
  }

  static nlohmann::json scores_to_json(const std::vector<TokenScore>& scores) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : scores) arr.push_back({s.token, s.logprob});
    return arr;
  }

  static std::vector<TokenScore> scores_from_json(const nlohmann::json& j) {
    std::vector<TokenScore> out;
    for (const auto& pair : j) out.push_back({pair[0].get<std::string>(), pair[1].get<double>()});
    return out;
  }

  void load_existing() {
    std::ifstream in(path_);
    if (!in) {
      if (mode_ == CacheMode::replay_strict)
        throw GeneratorError("io-error", "cache file missing: " + path_);
      return;
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      nlohmann::json entry;
      try {
        entry = nlohmann::json::parse(line);
        entries_[entry.at("key").get<std::string>()] = entry.at("value");
      } catch (const nlohmann::json::exception& e) {
        throw GeneratorError("io-error",
                             path_ + " line " + std::to_string(lineno) + ": " + e.what());
      }
    }
  }

  void store(const std::string& key, const std::string& mode, nlohmann::json value) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (entries_.count(key)) return;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw GeneratorError("io-error", "cannot append to " + path_);
    nlohmann::json line{{"key", key}, {"mode", mode}, {"value", value}};
    out << line.dump() << "\n";
    if (!out) throw GeneratorError("io-error", "short write to " + path_);
    entries_[key] = std::move(value);
  }

  GeneratorPtr inner_;
  std::string path_;
  CacheMode mode_;
  mutable std::mutex mutex_;
  std::map<std::string, nlohmann::json> entries_;
};

inline GeneratorPtr with_cache(GeneratorPtr backend, const std::string& cache_path,
                               CacheMode mode) {
  return std::make_shared<CachingBackend>(std::move(backend), cache_path, mode);
}

// ---------------------------------------------------------------------------
// OpenAI-style completions HTTP backend
// ---------------------------------------------------------------------------

struct HttpBackendConfig {
  std::string base_url;              // e.g. "http://localhost:8080"
  std::string model;                 // forwarded verbatim
  std::string api_key_env;           // environment variable holding the bearer token
  std::uint64_t request_budget = 10000;
  int timeout_seconds = 120;
};

class HttpCompletionBackend : public GeneratorBackend {
 public:
  explicit HttpCompletionBackend(HttpBackendConfig config) : config_(std::move(config)) {
    if (config_.base_url.empty())
      throw GeneratorError("transport-error", "http backend needs a base_url");
  }

  std::string name() const override { return config_.model; }

  Completion complete(const std::string& prompt, const GenerationParams& params) override {
    params.validate();
    nlohmann::json body{
        {"model", params.model_name.empty() ? config_.model : params.model_name},
        {"prompt", prompt},
        {"temperature", params.temperature},
        {"max_tokens", params.max_tokens},
        {"logprobs", nullptr},
        {"echo", false},
    };
    if (!params.stop_sequences.empty()) body["stop"] = params.stop_sequences;
    const nlohmann::json doc = post(body);
    const auto& choice = first_choice(doc);
    Completion out;
    out.text = choice.value("text", "");
    const std::string reason = choice.value("finish_reason", "stop");
    out.finish_reason = reason == "length" ? FinishReason::length
                                           : reason == "stop" ? FinishReason::stop
                                                              : FinishReason::error;
    FinishReason truncated = out.finish_reason;
    out.text = detail::truncate_at_stop(std::move(out.text), params.stop_sequences, truncated);
    out.finish_reason = truncated;
    return out;
  }

  std::vector<TokenScore> score_continuation(const std::string& prompt,
                                             const std::string& continuation) override {
    // echo mode: send prompt+continuation, read logprobs for the continuation span
    nlohmann::json body{
        {"model", config_.model}, {"prompt", prompt + continuation}, {"temperature", 0.0},
        {"max_tokens", 0},        {"logprobs", 0},                   {"echo", true},
    };
    const nlohmann::json doc = post(body);
    const auto& choice = first_choice(doc);
    if (!choice.contains("logprobs") || choice["logprobs"].is_null())
      throw GeneratorError("backend-lacks-scoring", "no logprobs in response");
    const auto& lp = choice["logprobs"];
    if (!lp.contains("tokens") || !lp.contains("token_logprobs") || !lp.contains("text_offset"))
      throw GeneratorError("backend-lacks-scoring", "logprobs lack tokens/offsets");
    const auto& tokens = lp["tokens"];
    const auto& logprobs = lp["token_logprobs"];
    const auto& offsets = lp["text_offset"];
    std::vector<TokenScore> out;
    for (std::size_t i = 0; i < tokens.size() && i < logprobs.size() && i < offsets.size(); ++i) {
      if (offsets[i].get<std::size_t>() < prompt.size()) continue;  // prompt span
      if (logprobs[i].is_null()) continue;  // first token of the document has no score
      out.push_back({tokens[i].get<std::string>(), logprobs[i].get<double>()});
    }
    return out;
  }

  std::uint64_t requests_made() const { return requests_.load(); }

 private:
  const nlohmann::json& first_choice(const nlohmann::json& doc) const {
    if (!doc.contains("choices") || !doc["choices"].is_array() || doc["choices"].empty())
      throw GeneratorError("api-error", "response has no choices: " + doc.dump());
    return doc["choices"][0];
  }

  nlohmann::json post(const nlohmann::json& body) {
    if (requests_.fetch_add(1) >= config_.request_budget)
      throw GeneratorError("budget-exceeded",
                           "request budget of " + std::to_string(config_.request_budget) +
                               " upstream calls exhausted");
    httplib::Client client(config_.base_url);
    client.set_read_timeout(config_.timeout_seconds, 0);
    httplib::Headers headers;
    if (!config_.api_key_env.empty()) {
      if (const char* key = std::getenv(config_.api_key_env.c_str()); key && *key)
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    auto res = client.Post("/v1/completions", headers, body.dump(), "application/json");
    if (!res)
      throw GeneratorError("transport-error",
                           "completions endpoint unreachable: " + httplib::to_string(res.error()));
    if (res->status != 200)
      throw GeneratorError("api-error", "status " + std::to_string(res->status) + ": " + res->body);
    try {
      return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw GeneratorError("api-error", std::string("unparseable response body: ") + e.what());
    }
  }

  HttpBackendConfig config_;
  std::atomic<std::uint64_t> requests_{0};
};

}  // namespace xricl
