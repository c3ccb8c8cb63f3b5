#pragma once

// Dense exemplar retrieval: exact brute-force index over encoder embeddings,
// softmax distributions on both the retriever and generator sides, KL
// distillation loss, its analytic gradient through the bilinear similarity,
// and the distillation training loop.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "xricl/corpus.hpp"
#include "xricl/encoder.hpp"
#include "xricl/generator.hpp"
#include "xricl/prompt.hpp"

namespace xricl {

class RetrieverError : public std::runtime_error {
 public:
  RetrieverError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;  // dimension-mismatch | io-error | fingerprint-mismatch |
                      // encode-failure | empty-input | non-finite-loss | bad-config
};

// ---------------------------------------------------------------------------
// Index
// ---------------------------------------------------------------------------

struct ExemplarIndex {
  std::size_t dim = 0;
  std::vector<double> vectors;  // row-major size() x dim
  std::vector<std::string> ids;
  std::string encoder_fingerprint;

  std::size_t size() const { return ids.size(); }
  std::span<const double> row(std::size_t i) const {
    return {vectors.data() + i * dim, dim};
  }
};

struct RetrievalResult {
  std::string exemplar_id;
  double similarity = 0.0;
  int rank = 0;  // 1-based
};

inline ExemplarIndex build_index(const ExemplarPool& pool, const Encoder& encoder) {
  if (pool.exemplars.empty()) throw RetrieverError("empty-input", "exemplar pool is empty");
  ExemplarIndex index;
  index.dim = encoder.dim();
  index.encoder_fingerprint = encoder.fingerprint();
  index.vectors.reserve(pool.exemplars.size() * index.dim);
  index.ids.reserve(pool.exemplars.size());
  for (const auto& ex : pool.exemplars) {
    EmbeddingVector vec;
    try {
      vec = encoder.encode(ex.utterance);
    } catch (const std::exception& e) {
      throw RetrieverError("encode-failure",
                           "exemplar '" + ex.id + "': " + e.what());
    }
    if (vec.dim() != index.dim)
      throw RetrieverError("dimension-mismatch", "exemplar '" + ex.id + "' embedding dim");
    index.vectors.insert(index.vectors.end(), vec.values.begin(), vec.values.end());
    index.ids.push_back(ex.id);
  }
  return index;
}

inline std::vector<RetrievalResult> retrieve_top_n(const ExemplarIndex& index,
                                                   const EmbeddingVector& query, std::size_t n,
                                                   const std::optional<std::string>& exclude_id =
                                                       std::nullopt) {
  if (n < 1) throw RetrieverError("bad-config", "n must be >= 1");
  if (query.dim() != index.dim)
    throw RetrieverError("dimension-mismatch", "query dim " + std::to_string(query.dim()) +
                                                   " vs index dim " + std::to_string(index.dim));
  std::vector<std::size_t> order;
  order.reserve(index.size());
  std::vector<double> sims(index.size());
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (exclude_id && index.ids[i] == *exclude_id) continue;
    const auto row = index.row(i);
    double dot = 0.0;
    for (std::size_t k = 0; k < index.dim; ++k) dot += row[k] * query.values[k];
    sims[i] = dot;
    order.push_back(i);
  }
  auto better = [&](std::size_t a, std::size_t b) {
    if (sims[a] != sims[b]) return sims[a] > sims[b];
    return index.ids[a] < index.ids[b];
  };
  const std::size_t keep = std::min(n, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    better);
  order.resize(keep);
  std::vector<RetrievalResult> out;
  out.reserve(keep);
  for (std::size_t r = 0; r < keep; ++r)
    out.push_back({index.ids[order[r]], sims[order[r]], static_cast<int>(r + 1)});
  return out;
}

// ---------------------------------------------------------------------------
// Index persistence
// ---------------------------------------------------------------------------

namespace detail {
inline constexpr char kIndexMagic[9] = "XRIIDX01";

inline void write_string(std::ofstream& out, const std::string& s) {
  const std::uint32_t len = static_cast<std::uint32_t>(s.size());
  out.write(reinterpret_cast<const char*>(&len), sizeof(len));
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline std::string read_string(std::ifstream& in) {
  std::uint32_t len = 0;
  in.read(reinterpret_cast<char*>(&len), sizeof(len));
  std::string s(len, '\0');
  in.read(s.data(), len);
  return s;
}
}  // namespace detail

inline void save_index(const ExemplarIndex& index, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw RetrieverError("io-error", "cannot write " + path);
  out.write(detail::kIndexMagic, 8);
  const std::uint64_t dims[2] = {index.dim, index.size()};
  out.write(reinterpret_cast<const char*>(dims), sizeof(dims));
  detail::write_string(out, index.encoder_fingerprint);
  out.write(reinterpret_cast<const char*>(index.vectors.data()),
            static_cast<std::streamsize>(index.vectors.size() * sizeof(double)));
  for (const auto& id : index.ids) detail::write_string(out, id);
  if (!out) throw RetrieverError("io-error", "short write to " + path);
}

inline ExemplarIndex load_index(const std::string& path, const std::string& expected_fingerprint) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RetrieverError("io-error", "cannot read " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::string_view(magic, 8) != std::string_view(detail::kIndexMagic, 8))
    throw RetrieverError("io-error", path + " is not an index file");
  std::uint64_t dims[2];
  in.read(reinterpret_cast<char*>(dims), sizeof(dims));
  ExemplarIndex index;
  index.dim = dims[0];
  index.encoder_fingerprint = detail::read_string(in);
  if (index.encoder_fingerprint != expected_fingerprint)
    throw RetrieverError("fingerprint-mismatch",
                         "index was built by a different encoder configuration");
  index.vectors.resize(dims[0] * dims[1]);
  in.read(reinterpret_cast<char*>(index.vectors.data()),
          static_cast<std::streamsize>(index.vectors.size() * sizeof(double)));
  index.ids.reserve(dims[1]);
  for (std::uint64_t i = 0; i < dims[1]; ++i) index.ids.push_back(detail::read_string(in));
  if (!in) throw RetrieverError("io-error", path + " is truncated");
  return index;
}

// ---------------------------------------------------------------------------
// Distributions
// ---------------------------------------------------------------------------

inline std::vector<double> softmax(std::span<const double> logits) {
  if (logits.empty()) throw RetrieverError("empty-input", "softmax over empty logits");
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  std::vector<double> out(logits.size());
  double denom = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - max_logit);
    denom += out[i];
  }
  for (double& v : out) v /= denom;
  return out;
}

inline std::vector<double> retriever_distribution(const std::vector<RetrievalResult>& results) {
  if (results.empty()) throw RetrieverError("empty-input", "no retrieval results");
  std::vector<double> sims;
  sims.reserve(results.size());
  for (const auto& r : results) sims.push_back(r.similarity);
  return softmax(sims);
}

enum class TargetTransform { paper_literal, log_space, length_normalized };

inline const char* target_transform_name(TargetTransform t) {
  switch (t) {
    case TargetTransform::paper_literal: return "paper-literal";
    case TargetTransform::log_space: return "log-space";
    case TargetTransform::length_normalized: return "length-normalized";
  }
  return "paper-literal";
}

inline TargetTransform target_transform_from_string(const std::string& s) {
  if (s == "paper-literal") return TargetTransform::paper_literal;
  if (s == "log-space") return TargetTransform::log_space;
  if (s == "length-normalized") return TargetTransform::length_normalized;
  throw RetrieverError("bad-config", "unknown transform '" + s + "'");
}

// Generator-side contribution distribution over the retrieved exemplars.
// paper-literal softmaxes the exponentiated sequence probabilities exp(loglik);
// log-space softmaxes the log-likelihoods directly; length-normalized divides
// each log-likelihood by its continuation token count first.
inline std::vector<double> target_distribution(std::span<const double> loglikelihoods,
                                               TargetTransform transform,
                                               std::span<const std::size_t> token_counts = {}) {
  if (loglikelihoods.empty()) throw RetrieverError("empty-input", "no log-likelihoods");
  std::vector<double> logits(loglikelihoods.begin(), loglikelihoods.end());
  switch (transform) {
    case TargetTransform::paper_literal:
      for (double& v : logits) v = std::exp(v);
      break;
    case TargetTransform::log_space:
      break;
    case TargetTransform::length_normalized:
      if (token_counts.size() != loglikelihoods.size())
        throw RetrieverError("bad-config", "length-normalized needs one token count per entry");
      for (std::size_t i = 0; i < logits.size(); ++i)
        logits[i] /= static_cast<double>(std::max<std::size_t>(1, token_counts[i]));
      break;
  }
  return softmax(logits);
}

struct DistributionPair {
  std::vector<double> target;     // q, generator side (constant under training)
  std::vector<double> predicted;  // p, retriever side
};

// KL(q || p) with 0 ln 0 = 0.
inline double kl_loss(const DistributionPair& pair) {
  if (pair.target.size() != pair.predicted.size())
    throw RetrieverError("dimension-mismatch", "distribution sizes differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < pair.target.size(); ++i) {
    const double q = pair.target[i];
    if (q <= 0.0) continue;
    sum += q * (std::log(q) - std::log(pair.predicted[i]));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Analytic distillation gradient
// ---------------------------------------------------------------------------

// Gradient of KL(q || softmax(s)) w.r.t. W where s_n = (W^T f_x) . (W^T f_n):
//   dL/ds_n = p_n - q_n
//   ds_n/dW = f_x e_n^T + f_n e_x^T        (e = W^T f)
inline ProjectionWeights distill_gradient(const FeatureVector& query_features,
                                          const std::vector<FeatureVector>& retrieved_features,
                                          std::span<const double> target,
                                          const ProjectionWeights& weights) {
  const std::size_t d_base = weights.d_base;
  const std::size_t d = weights.d;
  if (query_features.dim() != d_base)
    throw RetrieverError("dimension-mismatch", "query feature dim");
  if (retrieved_features.size() != target.size())
    throw RetrieverError("dimension-mismatch", "one target entry per retrieved exemplar");

  const std::vector<double> e_x = project_features(weights, query_features).values;
  std::vector<std::vector<double>> e_n(retrieved_features.size());
  std::vector<double> logits(retrieved_features.size());
  for (std::size_t n = 0; n < retrieved_features.size(); ++n) {
    if (retrieved_features[n].dim() != d_base)
      throw RetrieverError("dimension-mismatch", "retrieved feature dim");
    e_n[n] = project_features(weights, retrieved_features[n]).values;
    logits[n] = std::inner_product(e_x.begin(), e_x.end(), e_n[n].begin(), 0.0);
  }
  const std::vector<double> predicted = softmax(logits);

  ProjectionWeights grad = ProjectionWeights::zero(d_base, d);
  for (std::size_t n = 0; n < retrieved_features.size(); ++n) {
    const double g = predicted[n] - target[n];
    if (g == 0.0) continue;
    const auto& f_n = retrieved_features[n].values;
    const auto& f_x = query_features.values;
    for (std::size_t i = 0; i < d_base; ++i) {
      const double gx = g * f_x[i];
      const double gn = g * f_n[i];
      if (gx == 0.0 && gn == 0.0) continue;
      double* row = grad.values.data() + i * d;
      for (std::size_t j = 0; j < d; ++j) row[j] += gx * e_n[n][j] + gn * e_x[j];
    }
  }
  return grad;
}

// ---------------------------------------------------------------------------
// Distillation training
// ---------------------------------------------------------------------------

struct TrainConfig {
  std::size_t n = 16;
  std::size_t epochs = 1;
  double learning_rate = 0.05;
  std::uint64_t seed = 0;
  TargetTransform transform = TargetTransform::paper_literal;

  static TrainConfig from_json(const nlohmann::json& j) {
    TrainConfig c;
    if (j.contains("n")) c.n = j["n"].get<std::size_t>();
    if (j.contains("epochs")) c.epochs = j["epochs"].get<std::size_t>();
    if (j.contains("learning_rate")) c.learning_rate = j["learning_rate"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("transform"))
      c.transform = target_transform_from_string(j["transform"].get<std::string>());
    return c;
  }
};

struct TrainReport {
  std::size_t steps = 0;
  double initial_loss = 0.0;
  double final_loss = 0.0;
  std::vector<double> per_epoch_mean;
  double wall_seconds = 0.0;
};

namespace detail {

// One-exemplar scoring prompt: exemplar block then the test block ending in
// the bare SQL cue; the scored continuation is the gold SQL.
inline std::pair<std::string, std::string> scoring_prompt(const Exemplar& candidate,
                                                          const std::string& utterance,
                                                          const SchemaDesc& schema,
                                                          const std::string& gold_sql,
                                                          const PromptConfig& prompt_config) {
  std::string prompt = linearize_exemplar(candidate, prompt_config);
  prompt += linearize_schema(schema, prompt_config) + "\n";
  prompt += prompt_config.question_marker + " " + utterance + "\n";
  prompt += prompt_config.sql_marker;
  return {prompt, " " + flatten_whitespace(gold_sql)};
}

inline std::vector<std::size_t> shuffled_order(std::size_t count, std::uint64_t seed) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  SplitMixRng rng(seed);
  for (std::size_t i = count; i > 1; --i) {
    const std::size_t j = rng.next_u64() % i;
    std::swap(order[i - 1], order[j]);
  }
  return order;
}

}  // namespace detail

// Per-query distillation targets: contribution of each retrieved exemplar to
// the gold SQL under the generator.
inline std::vector<double> contribution_targets(const std::vector<const Exemplar*>& candidates,
                                                const std::string& utterance,
                                                const SchemaDesc& schema,
                                                const std::string& gold_sql,
                                                GeneratorBackend& generator,
                                                TargetTransform transform,
                                                const PromptConfig& prompt_config) {
  std::vector<double> logliks;
  std::vector<std::size_t> token_counts;
  logliks.reserve(candidates.size());
  for (const auto* candidate : candidates) {
    auto [prompt, continuation] =
        detail::scoring_prompt(*candidate, utterance, schema, gold_sql, prompt_config);
    const auto scores = generator.score_continuation(prompt, continuation);
    logliks.push_back(sequence_loglik(scores));
    token_counts.push_back(scores.size());
  }
  return target_distribution(logliks, transform, token_counts);
}

inline std::pair<ProjectionWeights, TrainReport> train_retriever(
    const ExemplarPool& pool, const Encoder& encoder, GeneratorBackend& generator,
    const TrainConfig& config, const PromptConfig& prompt_config = {}) {
  if (encoder.config().kind != EncoderKind::projected || encoder.weights() == nullptr)
    throw RetrieverError("bad-config", "training requires the projected encoder kind");
  if (pool.exemplars.empty()) throw RetrieverError("empty-input", "exemplar pool is empty");

  const auto start = std::chrono::steady_clock::now();
  ProjectionWeights weights = *encoder.weights();

  // Base features are fixed; embeddings are recomputed from the live weights.
  std::vector<FeatureVector> features;
  features.reserve(pool.exemplars.size());
  for (const auto& ex : pool.exemplars)
    features.push_back(hashed_features(ex.utterance, encoder.config()));

  TrainReport report;
  if (config.epochs == 0) return {weights, report};

  auto project_all = [&](const ProjectionWeights& w) {
    std::vector<std::vector<double>> embeddings(features.size());
    for (std::size_t i = 0; i < features.size(); ++i)
      embeddings[i] = project_features(w, features[i]).values;
    return embeddings;
  };

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    double epoch_loss = 0.0;
    const auto order = detail::shuffled_order(pool.exemplars.size(), config.seed + epoch);
    for (const std::size_t qi : order) {
      const Exemplar& query = pool.exemplars[qi];

      // retrieve top-N under the current weights, excluding the query itself
      const auto embeddings = project_all(weights);
      std::vector<std::size_t> candidates;
      std::vector<double> sims(pool.exemplars.size(), 0.0);
      for (std::size_t i = 0; i < pool.exemplars.size(); ++i) {
        if (i == qi) continue;
        sims[i] = std::inner_product(embeddings[qi].begin(), embeddings[qi].end(),
                                     embeddings[i].begin(), 0.0);
        candidates.push_back(i);
      }
      auto better = [&](std::size_t a, std::size_t b) {
        if (sims[a] != sims[b]) return sims[a] > sims[b];
        return pool.exemplars[a].id < pool.exemplars[b].id;
      };
      const std::size_t keep = std::min(config.n, candidates.size());
      std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(keep),
                        candidates.end(), better);
      candidates.resize(keep);

      std::vector<const Exemplar*> retrieved;
      std::vector<FeatureVector> retrieved_features;
      std::vector<double> logits;
      for (const std::size_t c : candidates) {
        retrieved.push_back(&pool.exemplars[c]);
        retrieved_features.push_back(features[c]);
        logits.push_back(sims[c]);
      }

      std::vector<double> target;
      try {
        target = contribution_targets(retrieved, query.utterance, *query.schema, query.sql,
                                      generator, config.transform, prompt_config);
      } catch (const std::exception& e) {
        throw RetrieverError("encode-failure",
                             "generator failed for query '" + query.id + "': " + e.what());
      }

      const std::vector<double> predicted = softmax(logits);
      const double loss = kl_loss({target, predicted});
      if (!std::isfinite(loss))
        throw RetrieverError("non-finite-loss", "query '" + query.id + "'");
      epoch_loss += loss;

      const ProjectionWeights grad =
          distill_gradient(features[qi], retrieved_features, target, weights);
      for (std::size_t i = 0; i < weights.values.size(); ++i)
        weights.values[i] -= config.learning_rate * grad.values[i];
      ++report.steps;
    }
    report.per_epoch_mean.push_back(epoch_loss / static_cast<double>(pool.exemplars.size()));
  }
  report.initial_loss = report.per_epoch_mean.front();
  report.final_loss = report.per_epoch_mean.back();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {weights, report};
}

}  // namespace xricl
