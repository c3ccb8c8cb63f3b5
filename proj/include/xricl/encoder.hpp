#pragma once

// Utterance embedding encoders behind one interface: a deterministic hashed
// character-n-gram encoder, a trainable linear projection over those features,
// and external providers (precomputed files or an HTTP embedding endpoint).

#include <cmath>
#include <condition_variable>
#include <filesystem>
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

class EncoderError : public std::runtime_error {
 public:
  EncoderError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;  // unknown-text | transport-error | protocol-error |
                      // io-error | dimension-header-mismatch | bad-config
};

enum class EncoderKind { hashed, projected, external_file, external_endpoint };

inline const char* encoder_kind_name(EncoderKind k) {
  switch (k) {
    case EncoderKind::hashed: return "hashed";
    case EncoderKind::projected: return "projected";
    case EncoderKind::external_file: return "external-file";
    case EncoderKind::external_endpoint: return "external-endpoint";
  }
  return "hashed";
}

struct EncoderConfig {
  EncoderKind kind = EncoderKind::hashed;
  int d_base = 256;
  int d = 256;
  int ngram_min = 2;
  int ngram_max = 4;
  std::uint64_t seed = 0;
  bool normalize_output = false;  // L2-normalize embeddings before the dot product
  std::string embeddings_path;    // external-file
  std::string endpoint_url;       // external-endpoint
  int max_concurrent_requests = 4;

  void validate() const {
    if (ngram_min < 1 || ngram_min > ngram_max || ngram_max > 5)
      throw EncoderError("bad-config", "ngram range must satisfy 1 <= min <= max <= 5");
    if (d < 8 || d_base < 8) throw EncoderError("bad-config", "d and d_base must be >= 8");
    if (kind == EncoderKind::external_file && embeddings_path.empty())
      throw EncoderError("bad-config", "external-file encoder needs embeddings_path");
    if (kind == EncoderKind::external_endpoint && endpoint_url.empty())
      throw EncoderError("bad-config", "external-endpoint encoder needs endpoint_url");
  }
};

struct EmbeddingVector {
  std::vector<double> values;
  std::size_t dim() const { return values.size(); }
};

struct FeatureVector {
  std::vector<double> values;
  std::size_t dim() const { return values.size(); }
};

struct ProjectionWeights {
  std::size_t d_base = 0;
  std::size_t d = 0;
  std::vector<double> values;  // row-major d_base x d

  double& at(std::size_t i, std::size_t j) { return values[i * d + j]; }
  double at(std::size_t i, std::size_t j) const { return values[i * d + j]; }

  static ProjectionWeights zero(std::size_t d_base, std::size_t d) {
    return ProjectionWeights{d_base, d, std::vector<double>(d_base * d, 0.0)};
  }
  static ProjectionWeights identity(std::size_t n) {
    ProjectionWeights w = zero(n, n);
    for (std::size_t i = 0; i < n; ++i) w.at(i, i) = 1.0;
    return w;
  }
  static ProjectionWeights random(std::size_t d_base, std::size_t d, std::uint64_t seed,
                                  double lo = -0.1, double hi = 0.1) {
    ProjectionWeights w = zero(d_base, d);
    SplitMixRng rng(seed);
    for (auto& v : w.values) v = rng.uniform(lo, hi);
    return w;
  }
};

// ---------------------------------------------------------------------------
// Hashed character n-gram features
// ---------------------------------------------------------------------------

inline FeatureVector hashed_features(std::string_view text, const EncoderConfig& config) {
  config.validate();
  FeatureVector out;
  out.values.assign(static_cast<std::size_t>(config.d_base), 0.0);
  const auto grams = char_ngrams(text, config.ngram_min, config.ngram_max);
  if (grams.empty()) return out;  // empty or too-short text stays all-zero
  for (const auto& gram : grams) {
    const std::uint64_t h = fnv1a64(gram, config.seed);
    out.values[h % static_cast<std::uint64_t>(config.d_base)] += 1.0;
  }
  double norm = 0.0;
  for (double v : out.values) norm += v * v;
  norm = std::sqrt(norm);
  if (norm > 0.0)
    for (double& v : out.values) v /= norm;
  return out;
}

// W^T f for an arbitrary weight matrix; the projected encoder's core map.
inline EmbeddingVector project_features(const ProjectionWeights& weights,
                                        const FeatureVector& features) {
  if (features.dim() != weights.d_base)
    throw EncoderError("dimension-mismatch", "feature dim " + std::to_string(features.dim()) +
                                                 " vs weights d_base " +
                                                 std::to_string(weights.d_base));
  EmbeddingVector out;
  out.values.assign(weights.d, 0.0);
  for (std::size_t i = 0; i < weights.d_base; ++i) {
    const double f = features.values[i];
    if (f == 0.0) continue;
    const double* row = weights.values.data() + i * weights.d;
    for (std::size_t j = 0; j < weights.d; ++j) out.values[j] += f * row[j];
  }
  return out;
}

inline double similarity(const EmbeddingVector& a, const EmbeddingVector& b) {
  if (a.dim() != b.dim())
    throw EncoderError("dimension-mismatch", std::to_string(a.dim()) + " vs " +
                                                 std::to_string(b.dim()));
  double dot = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) dot += a.values[i] * b.values[i];
  return dot;
}

// ---------------------------------------------------------------------------
// Projection weights persistence (bit-exact round trip)
// ---------------------------------------------------------------------------

namespace detail {
inline constexpr char kWeightsMagic[9] = "XRIWGT01";
}

inline void save_weights(const ProjectionWeights& weights, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw EncoderError("io-error", "cannot write " + path);
  out.write(detail::kWeightsMagic, 8);
  const std::uint64_t dims[2] = {weights.d_base, weights.d};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  out.write(reinterpret_cast<const char*>(weights.values.data()),
            static_cast<std::streamsize>(weights.values.size() * sizeof(double)));
  if (!out) throw EncoderError("io-error", "short write to " + path);
}

inline ProjectionWeights load_weights(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EncoderError("io-error", "cannot read " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::string_view(magic, 8) != std::string_view(detail::kWeightsMagic, 8))
    throw EncoderError("io-error", path + " is not a weights file");
  std::uint64_t dims[2];
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  if (!in) throw EncoderError("io-error", "truncated header in " + path);
  ProjectionWeights weights;
  weights.d_base = dims[0];
  weights.d = dims[1];
  weights.values.resize(weights.d_base * weights.d);
  in.read(reinterpret_cast<char*>(weights.values.data()),
          static_cast<std::streamsize>(weights.values.size() * sizeof(double)));
  if (!in || in.gcount() != static_cast<std::streamsize>(weights.values.size() * sizeof(double)))
    throw EncoderError("dimension-header-mismatch",
                       path + " payload does not match header dimensions");
  return weights;
}

// ---------------------------------------------------------------------------
// Encoder
// ---------------------------------------------------------------------------

class Encoder {
 public:
  static Encoder hashed(EncoderConfig config) {
    config.kind = EncoderKind::hashed;
    config.validate();
    Encoder enc(std::move(config));
    return enc;
  }

  static Encoder projected(EncoderConfig config, ProjectionWeights weights) {
    config.kind = EncoderKind::projected;
    config.validate();
    if (weights.d_base != static_cast<std::size_t>(config.d_base) ||
        weights.d != static_cast<std::size_t>(config.d))
      throw EncoderError("dimension-mismatch", "weights shape does not match config");
    Encoder enc(std::move(config));
    enc.weights_ = std::make_shared<const ProjectionWeights>(std::move(weights));
    return enc;
  }

  static Encoder external_file(EncoderConfig config) {
    config.kind = EncoderKind::external_file;
    config.validate();
    Encoder enc(config);
    enc.load_embedding_file(config.embeddings_path);
    return enc;
  }

  static Encoder external_endpoint(EncoderConfig config) {
    config.kind = EncoderKind::external_endpoint;
    config.validate();
    Encoder enc(std::move(config));
    enc.request_slots_ = std::make_shared<RequestSlots>(enc.config_.max_concurrent_requests);
    return enc;
  }

  // Builds the encoder named by the config, reading projection weights from
  // weights_path when given (fresh seeded weights otherwise).
  static Encoder from_config(const EncoderConfig& config, const std::string& weights_path = "") {
    switch (config.kind) {
      case EncoderKind::hashed:
        return hashed(config);
      case EncoderKind::projected: {
        ProjectionWeights w =
            weights_path.empty()
                ? ProjectionWeights::random(static_cast<std::size_t>(config.d_base),
                                            static_cast<std::size_t>(config.d), config.seed)
                : load_weights(weights_path);
        return projected(config, std::move(w));
      }
      case EncoderKind::external_file:
        return external_file(config);
      case EncoderKind::external_endpoint:
        return external_endpoint(config);
    }
    throw EncoderError("bad-config", "unknown encoder kind");
  }

  const EncoderConfig& config() const { return config_; }
  const ProjectionWeights* weights() const { return weights_ ? weights_.get() : nullptr; }

  std::size_t dim() const {
    switch (config_.kind) {
      case EncoderKind::hashed: return static_cast<std::size_t>(config_.d_base);
      default: return static_cast<std::size_t>(config_.d);
    }
  }

  EmbeddingVector encode(const std::string& text) const {
    EmbeddingVector out;
    switch (config_.kind) {
      case EncoderKind::hashed:
        out.values = hashed_features(text, config_).values;
        break;
      case EncoderKind::projected:
        out = project(hashed_features(text, config_));
        break;
      case EncoderKind::external_file: {
        const std::string key = sha256_hex(normalize_text(text));
        auto it = stored_.find(key);
        if (it == stored_.end())
          throw EncoderError("unknown-text", "no stored embedding for digest " + key);
        out.values = it->second;
        break;
      }
      case EncoderKind::external_endpoint:
        out.values = fetch_batch({text})[0];
        break;
    }
    if (config_.normalize_output) l2_normalize(out.values);
    return out;
  }

  // Same projection applied to an externally supplied feature vector.
  EmbeddingVector project(const FeatureVector& features) const {
    if (config_.kind != EncoderKind::projected || !weights_)
      throw EncoderError("bad-config", "project requires the projected encoder kind");
    return project_features(*weights_, features);
  }

  // Digest of config plus weights/source; identifies the encoder that built an index.
  std::string fingerprint() const {
    std::ostringstream os;
    os << encoder_kind_name(config_.kind) << '|' << config_.d_base << '|' << config_.d << '|'
       << config_.ngram_min << '|' << config_.ngram_max << '|' << config_.seed << '|'
       << (config_.normalize_output ? 1 : 0);
    if (config_.kind == EncoderKind::projected && weights_) {
      os << '|';
      const auto& v = weights_->values;
      os.write(reinterpret_cast<const char*>(v.data()),
               static_cast<std::streamsize>(v.size() * sizeof(double)));
    } else if (config_.kind == EncoderKind::external_file) {
      os << '|' << stored_digest_;
    } else if (config_.kind == EncoderKind::external_endpoint) {
      os << '|' << config_.endpoint_url;
    }
    return sha256_hex(os.str());
  }

 private:
  explicit Encoder(EncoderConfig config) : config_(std::move(config)) {}

  static void l2_normalize(std::vector<double>& values) {
    double norm = 0.0;
    for (double v : values) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double& v : values) v /= norm;
  }

  void load_embedding_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EncoderError("io-error", "cannot read " + path);
    std::string header;
    std::getline(in, header);
    if (header.rfind("dim=", 0) != 0)
      throw EncoderError("io-error", path + ": missing dim= header");
    const std::size_t dim = std::stoul(header.substr(4));
    if (dim != static_cast<std::size_t>(config_.d))
      throw EncoderError("dimension-header-mismatch",
                         path + " header dim " + std::to_string(dim) + " != config d " +
                             std::to_string(config_.d));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string digest;
      ls >> digest;
      std::vector<double> values(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(ls >> values[i]))
          throw EncoderError("io-error", path + ": record for " + digest + " is truncated");
      }
      stored_[digest] = std::move(values);
    }
    std::ifstream raw(path, std::ios::binary);
    std::ostringstream buf;
    buf << raw.rdbuf();
    stored_digest_ = sha256_hex(buf.str());
  }

  struct RequestSlots {
    explicit RequestSlots(int cap) : available(cap > 0 ? cap : 1) {}
    std::mutex mutex;
    std::condition_variable cv;
    int available;

    struct Guard {
      RequestSlots& slots;
      explicit Guard(RequestSlots& s) : slots(s) {
        std::unique_lock<std::mutex> lock(slots.mutex);
        slots.cv.wait(lock, [&] { return slots.available > 0; });
        --slots.available;
      }
      ~Guard() {
        {
          std::lock_guard<std::mutex> lock(slots.mutex);
          ++slots.available;
        }
        slots.cv.notify_one();
      }
    };
  };

  std::vector<std::vector<double>> fetch_batch(const std::vector<std::string>& texts) const {
    RequestSlots::Guard guard(*request_slots_);
    // split "http://host:port/path" into client target and request path
    std::string url = config_.endpoint_url;
    std::string scheme_host = url;
    std::string path = "/embed";
    const auto scheme_end = url.find("://");
    const auto path_start = url.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    if (path_start != std::string::npos) {
      scheme_host = url.substr(0, path_start);
      path = url.substr(path_start);
    }
    httplib::Client client(scheme_host);
    client.set_read_timeout(30, 0);
    nlohmann::json body;
    body["texts"] = texts;
    auto res = client.Post(path, body.dump(), "application/json");
    if (!res)
      throw EncoderError("transport-error",
                         "embedding endpoint unreachable: " + httplib::to_string(res.error()));
    if (res->status != 200)
      throw EncoderError("protocol-error",
                         "embedding endpoint returned status " + std::to_string(res->status));
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
      throw EncoderError("protocol-error", std::string("bad endpoint response: ") + e.what());
    }
    if (!doc.contains("embeddings") || !doc["embeddings"].is_array() ||
        doc["embeddings"].size() != texts.size())
      throw EncoderError("protocol-error", "endpoint response shape mismatch");
    std::vector<std::vector<double>> out;
    for (const auto& row : doc["embeddings"]) {
      std::vector<double> values = row.get<std::vector<double>>();
      if (values.size() != static_cast<std::size_t>(config_.d))
        throw EncoderError("protocol-error", "endpoint embedding dim mismatch");
      out.push_back(std::move(values));
    }
    return out;
  }

  EncoderConfig config_;
  std::shared_ptr<const ProjectionWeights> weights_;
  std::map<std::string, std::vector<double>> stored_;
  std::string stored_digest_;
  std::shared_ptr<RequestSlots> request_slots_;
};

// Precomputed-embedding file writer; records are keyed by the digest of the
// normalized text.
inline void write_embedding_file(const std::string& path, int dim,
                                 const std::vector<std::pair<std::string, std::vector<double>>>&
                                     text_embedding_pairs) {
  std::ofstream out(path);
  if (!out) throw EncoderError("io-error", "cannot write " + path);
  out << "dim=" << dim << "\n";
  out.precision(17);
  for (const auto& [text, values] : text_embedding_pairs) {
    if (values.size() != static_cast<std::size_t>(dim))
      throw EncoderError("dimension-mismatch", "embedding for '" + text + "' has wrong dim");
    out << sha256_hex(normalize_text(text));
    for (double v : values) out << ' ' << v;
    out << "\n";
  }
}

}  // namespace xricl
