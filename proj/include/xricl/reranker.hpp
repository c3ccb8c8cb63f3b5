#pragma once

// Pointwise exemplar reranker: a small two-layer scorer over query/candidate
// interaction features, trained with sigmoid cross-entropy against generator
// contribution targets.

#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "xricl/retriever.hpp"

namespace xricl {

class RerankerError : public std::runtime_error {
 public:
  RerankerError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;  // dimension-mismatch | io-error | non-finite-loss | bad-config
};

inline constexpr std::size_t kInteractionFeatureCount = 7;

struct InteractionFeatures {
  // [dot, cosine, trigram jaccard, |u|/100, |u_z|/100, |len diff|/100, retrieval sim]
  std::array<double, kInteractionFeatureCount> values{};
};

inline InteractionFeatures interaction_features(const std::string& query_text,
                                                const std::string& candidate_text,
                                                const Encoder& encoder,
                                                double retrieval_similarity) {
  const EmbeddingVector eq = encoder.encode(query_text);
  const EmbeddingVector ec = encoder.encode(candidate_text);
  const double dot = similarity(eq, ec);
  double nq = 0.0, nc = 0.0;
  for (double v : eq.values) nq += v * v;
  for (double v : ec.values) nc += v * v;
  const double cosine = (nq > 0.0 && nc > 0.0) ? dot / std::sqrt(nq * nc) : 0.0;
  const double jaccard = trigram_jaccard(query_text, candidate_text);
  const double len_q = static_cast<double>(utf8_to_codepoints(query_text).size());
  const double len_c = static_cast<double>(utf8_to_codepoints(candidate_text).size());
  InteractionFeatures f;
  f.values = {dot,          cosine,       jaccard,
              len_q / 100., len_c / 100., std::abs(len_q - len_c) / 100.,
              retrieval_similarity};
  return f;
}

// ---------------------------------------------------------------------------
// Scorer
// ---------------------------------------------------------------------------

struct RerankerWeights {
  std::size_t hidden = 16;
  std::vector<double> w1;  // kInteractionFeatureCount x hidden, row-major
  std::vector<double> b1;  // hidden
  std::vector<double> w2;  // hidden
  double b2 = 0.0;

  static RerankerWeights init(std::size_t hidden, std::uint64_t seed) {
    RerankerWeights w;
    w.hidden = hidden;
    w.w1.resize(kInteractionFeatureCount * hidden);
    w.b1.assign(hidden, 0.0);
    w.w2.resize(hidden);
    SplitMixRng rng(seed);
    for (auto& v : w.w1) v = rng.uniform(-0.1, 0.1);
    for (auto& v : w.w2) v = rng.uniform(-0.1, 0.1);
    w.b2 = rng.uniform(-0.1, 0.1);
    return w;
  }
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// sigmoid(w2 . tanh(W1^T f + b1) + b2), strictly inside (0, 1)
inline double rerank_score(const RerankerWeights& weights, const InteractionFeatures& features) {
  if (weights.w1.size() != kInteractionFeatureCount * weights.hidden ||
      weights.b1.size() != weights.hidden || weights.w2.size() != weights.hidden)
    throw RerankerError("dimension-mismatch", "weight shapes are inconsistent");
  double z = weights.b2;
  for (std::size_t h = 0; h < weights.hidden; ++h) {
    double pre = weights.b1[h];
    for (std::size_t i = 0; i < kInteractionFeatureCount; ++i)
      pre += weights.w1[i * weights.hidden + h] * features.values[i];
    z += weights.w2[h] * std::tanh(pre);
  }
  return sigmoid(z);
}

struct ScoredExemplar {
  std::string exemplar_id;
  double retrieval_similarity = 0.0;
  double rerank_probability = 0.5;
  std::optional<double> generator_contribution;
};

inline std::vector<ScoredExemplar> select_top_k(std::vector<ScoredExemplar> scored,
                                                std::size_t k) {
  if (k < 1) throw RerankerError("bad-config", "k must be >= 1");
  std::sort(scored.begin(), scored.end(), [](const ScoredExemplar& a, const ScoredExemplar& b) {
    if (a.rerank_probability != b.rerank_probability)
      return a.rerank_probability > b.rerank_probability;
    if (a.retrieval_similarity != b.retrieval_similarity)
      return a.retrieval_similarity > b.retrieval_similarity;
    return a.exemplar_id < b.exemplar_id;
  });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

// ---------------------------------------------------------------------------
// BCE loss and gradient over one query's candidate batch
// ---------------------------------------------------------------------------

struct RerankerGradient {
  std::vector<double> w1;
  std::vector<double> b1;
  std::vector<double> w2;
  double b2 = 0.0;
};

inline double bce_loss(const RerankerWeights& weights,
                       const std::vector<InteractionFeatures>& features,
                       std::span<const double> targets) {
  if (features.size() != targets.size())
    throw RerankerError("dimension-mismatch", "one target per candidate");
  double loss = 0.0;
  for (std::size_t j = 0; j < features.size(); ++j) {
    const double s = rerank_score(weights, features[j]);
    loss += -targets[j] * std::log(s) - (1.0 - targets[j]) * std::log(1.0 - s);
  }
  return loss / static_cast<double>(features.size());
}

inline RerankerGradient bce_gradient(const RerankerWeights& weights,
                                     const std::vector<InteractionFeatures>& features,
                                     std::span<const double> targets) {
  if (features.size() != targets.size())
    throw RerankerError("dimension-mismatch", "one target per candidate");
  const std::size_t H = weights.hidden;
  RerankerGradient grad;
  grad.w1.assign(kInteractionFeatureCount * H, 0.0);
  grad.b1.assign(H, 0.0);
  grad.w2.assign(H, 0.0);
  const double scale = 1.0 / static_cast<double>(features.size());
  std::vector<double> h(H);
  for (std::size_t j = 0; j < features.size(); ++j) {
    double z = weights.b2;
    for (std::size_t k = 0; k < H; ++k) {
      double pre = weights.b1[k];
      for (std::size_t i = 0; i < kInteractionFeatureCount; ++i)
        pre += weights.w1[i * H + k] * features[j].values[i];
      h[k] = std::tanh(pre);
      z += weights.w2[k] * h[k];
    }
    const double s = sigmoid(z);
    const double dz = (s - targets[j]) * scale;  // dL/dz for mean BCE
    grad.b2 += dz;
    for (std::size_t k = 0; k < H; ++k) {
      grad.w2[k] += dz * h[k];
      const double da = dz * weights.w2[k] * (1.0 - h[k] * h[k]);
      grad.b1[k] += da;
      for (std::size_t i = 0; i < kInteractionFeatureCount; ++i)
        grad.w1[i * H + k] += da * features[j].values[i];
    }
  }
  return grad;
}

// ---------------------------------------------------------------------------
// Training
// ---------------------------------------------------------------------------

enum class TargetMode { direct, per_query_max };

inline const char* target_mode_name(TargetMode m) {
  return m == TargetMode::direct ? "direct" : "per-query-max";
}

inline TargetMode target_mode_from_string(const std::string& s) {
  if (s == "direct") return TargetMode::direct;
  if (s == "per-query-max") return TargetMode::per_query_max;
  throw RerankerError("bad-config", "unknown target mode '" + s + "'");
}

struct RerankTrainConfig {
  std::size_t n = 16;
  std::size_t epochs = 1;
  double learning_rate = 0.1;
  std::uint64_t seed = 0;
  std::size_t hidden = 16;
  TargetMode target_mode = TargetMode::direct;
  TargetTransform transform = TargetTransform::paper_literal;

  static RerankTrainConfig from_json(const nlohmann::json& j) {
    RerankTrainConfig c;
    if (j.contains("n")) c.n = j["n"].get<std::size_t>();
    if (j.contains("epochs")) c.epochs = j["epochs"].get<std::size_t>();
    if (j.contains("learning_rate")) c.learning_rate = j["learning_rate"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("hidden")) c.hidden = j["hidden"].get<std::size_t>();
    if (j.contains("target_mode"))
      c.target_mode = target_mode_from_string(j["target_mode"].get<std::string>());
    if (j.contains("transform"))
      c.transform = target_transform_from_string(j["transform"].get<std::string>());
    return c;
  }
};

inline std::pair<RerankerWeights, TrainReport> train_reranker(
    const ExemplarPool& pool, const ExemplarIndex& index, const Encoder& encoder,
    GeneratorBackend& generator, const RerankTrainConfig& config,
    const PromptConfig& prompt_config = {}) {
  if (pool.exemplars.empty()) throw RerankerError("bad-config", "exemplar pool is empty");
  const auto start = std::chrono::steady_clock::now();

  RerankerWeights weights = RerankerWeights::init(config.hidden, config.seed);
  TrainReport report;
  if (config.epochs == 0) return {weights, report};

  // Retrieval, features, and targets are all fixed across epochs (the encoder
  // does not move here); compute them once per query.
  struct QueryBatch {
    std::vector<InteractionFeatures> features;
    std::vector<double> targets;
  };
  std::map<std::string, const Exemplar*> by_id;
  for (const auto& ex : pool.exemplars) by_id[ex.id] = &ex;

  std::vector<QueryBatch> batches;
  batches.reserve(pool.exemplars.size());
  for (const auto& query : pool.exemplars) {
    const EmbeddingVector qvec = encoder.encode(query.utterance);
    const auto retrieved = retrieve_top_n(index, qvec, config.n, query.id);
    QueryBatch batch;
    std::vector<const Exemplar*> candidates;
    for (const auto& r : retrieved) {
      const Exemplar* ex = by_id.at(r.exemplar_id);
      candidates.push_back(ex);
      batch.features.push_back(
          interaction_features(query.utterance, ex->utterance, encoder, r.similarity));
    }
    std::vector<double> q;
    try {
      q = contribution_targets(candidates, query.utterance, *query.schema, query.sql, generator,
                               config.transform, prompt_config);
    } catch (const std::exception& e) {
      throw RerankerError("bad-config",
                          "generator failed for query '" + query.id + "': " + e.what());
    }
    if (config.target_mode == TargetMode::per_query_max) {
      const double max_q = *std::max_element(q.begin(), q.end());
      if (max_q > 0.0)
        for (double& v : q) v /= max_q;
    }
    batch.targets = std::move(q);
    batches.push_back(std::move(batch));
  }

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    double epoch_loss = 0.0;
    const auto order = detail::shuffled_order(batches.size(), config.seed + epoch);
    for (const std::size_t qi : order) {
      const QueryBatch& batch = batches[qi];
      const double loss = bce_loss(weights, batch.features, batch.targets);
      if (!std::isfinite(loss)) throw RerankerError("non-finite-loss", "during training");
      epoch_loss += loss;
      const RerankerGradient grad = bce_gradient(weights, batch.features, batch.targets);
      for (std::size_t i = 0; i < weights.w1.size(); ++i)
        weights.w1[i] -= config.learning_rate * grad.w1[i];
      for (std::size_t i = 0; i < weights.b1.size(); ++i)
        weights.b1[i] -= config.learning_rate * grad.b1[i];
      for (std::size_t i = 0; i < weights.w2.size(); ++i)
        weights.w2[i] -= config.learning_rate * grad.w2[i];
      weights.b2 -= config.learning_rate * grad.b2;
      ++report.steps;
    }
    report.per_epoch_mean.push_back(epoch_loss / static_cast<double>(batches.size()));
  }
  report.initial_loss = report.per_epoch_mean.front();
  report.final_loss = report.per_epoch_mean.back();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {weights, report};
}

// ---------------------------------------------------------------------------
// Persistence (JSON with config echo and fingerprint)
// ---------------------------------------------------------------------------

inline void save_reranker_weights(const RerankerWeights& weights, const std::string& path,
                                  const std::string& encoder_fingerprint = "") {
  nlohmann::ordered_json doc;
  doc["feature_dim"] = kInteractionFeatureCount;
  doc["hidden"] = weights.hidden;
  doc["w1"] = weights.w1;
  doc["b1"] = weights.b1;
  doc["w2"] = weights.w2;
  doc["b2"] = weights.b2;
  doc["encoder_fingerprint"] = encoder_fingerprint;
  std::ofstream out(path);
  if (!out) throw RerankerError("io-error", "cannot write " + path);
  out << doc.dump(1) << "\n";
}

inline RerankerWeights load_reranker_weights(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RerankerError("io-error", "cannot read " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw RerankerError("io-error", path + ": " + e.what());
  }
  RerankerWeights weights;
  weights.hidden = doc.at("hidden").get<std::size_t>();
  weights.w1 = doc.at("w1").get<std::vector<double>>();
  weights.b1 = doc.at("b1").get<std::vector<double>>();
  weights.w2 = doc.at("w2").get<std::vector<double>>();
  weights.b2 = doc.at("b2").get<double>();
  if (weights.w1.size() != kInteractionFeatureCount * weights.hidden ||
      weights.b1.size() != weights.hidden || weights.w2.size() != weights.hidden)
    throw RerankerError("dimension-mismatch", path + " weight shapes are inconsistent");
  return weights;
}

}  // namespace xricl
