#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <numeric>

#include "xricl/retriever.hpp"

using namespace xricl;
namespace fs = std::filesystem;

namespace {

std::string fixture(const char* name) {
  return std::string(XRICL_TEST_DATA_DIR) + "/" + name;
}

EncoderConfig bench_encoder_config() {
  EncoderConfig config;
  config.kind = EncoderKind::hashed;
  config.d_base = 128;
  config.d = 128;
  config.ngram_min = 2;
  config.ngram_max = 3;
  config.seed = 13;
  return config;
}

ExemplarIndex random_index(std::size_t rows, std::size_t dim, std::uint64_t seed) {
  ExemplarIndex index;
  index.dim = dim;
  SplitMixRng rng(seed);
  for (std::size_t i = 0; i < rows; ++i) {
    index.ids.push_back("ex" + std::to_string(i));
    for (std::size_t j = 0; j < dim; ++j) index.vectors.push_back(rng.uniform(-1, 1));
  }
  return index;
}

// Brute-force argsort oracle with the documented tie-break.
std::vector<std::string> argsort_oracle(const ExemplarIndex& index, const EmbeddingVector& query,
                                        std::size_t n,
                                        const std::optional<std::string>& exclude = {}) {
  struct Entry {
    std::string id;
    double sim;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (exclude && index.ids[i] == *exclude) continue;
    double dot = 0;
    for (std::size_t k = 0; k < index.dim; ++k)
      dot += index.vectors[i * index.dim + k] * query.values[k];
    entries.push_back({index.ids[i], dot});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.sim != b.sim) return a.sim > b.sim;
    return a.id < b.id;
  });
  if (entries.size() > n) entries.resize(n);
  std::vector<std::string> ids;
  for (const auto& e : entries) ids.push_back(e.id);
  return ids;
}

}  // namespace

TEST_CASE("build_index rows equal per-exemplar encodings") {
  const ExemplarPool pool = load_exemplar_pool(fixture("pool.json"), fixture("tables.json"));
  const Encoder encoder = Encoder::hashed(bench_encoder_config());
  const ExemplarIndex index = build_index(pool, encoder);
  REQUIRE(index.size() == pool.exemplars.size());
  CHECK(index.dim == encoder.dim());
  CHECK(index.encoder_fingerprint == encoder.fingerprint());
  for (std::size_t i = 0; i < pool.exemplars.size(); ++i) {
    const EmbeddingVector expected = encoder.encode(pool.exemplars[i].utterance);
    const auto row = index.row(i);
    REQUIRE(row.size() == expected.values.size());
    for (std::size_t j = 0; j < row.size(); ++j) CHECK(row[j] == expected.values[j]);
  }
  // bitwise determinism across rebuilds
  const ExemplarIndex again = build_index(pool, encoder);
  CHECK(std::memcmp(again.vectors.data(), index.vectors.data(),
                    index.vectors.size() * sizeof(double)) == 0);
}

TEST_CASE("single-exemplar index") {
  ExemplarPool pool = load_exemplar_pool(fixture("pool.json"), fixture("tables.json"));
  pool.exemplars.resize(1);
  const Encoder encoder = Encoder::hashed(bench_encoder_config());
  const ExemplarIndex index = build_index(pool, encoder);
  CHECK(index.size() == 1);
  CHECK(index.vectors.size() == index.dim);
}

TEST_CASE("retrieve_top_n equals the argsort oracle") {
  const ExemplarIndex index = random_index(1000, 32, 99);
  SplitMixRng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    EmbeddingVector query;
    for (int j = 0; j < 32; ++j) query.values.push_back(rng.uniform(-1, 1));
    const auto results = retrieve_top_n(index, query, 16);
    const auto expected = argsort_oracle(index, query, 16);
    REQUIRE(results.size() == expected.size());
    for (std::size_t i = 0; i < results.size(); ++i) {
      CHECK(results[i].exemplar_id == expected[i]);
      CHECK(results[i].rank == static_cast<int>(i + 1));
    }
  }
}

TEST_CASE("retrieval edge cases") {
  const ExemplarIndex index = random_index(5, 8, 3);
  EmbeddingVector query;
  query.values.assign(8, 0.5);

  SECTION("n covers the whole pool") {
    const auto all = retrieve_top_n(index, query, 50);
    CHECK(all.size() == 5);
    for (std::size_t i = 1; i < all.size(); ++i)
      CHECK(all[i - 1].similarity >= all[i].similarity);
  }
  SECTION("orthogonal query ties break by ascending id") {
    EmbeddingVector zero;
    zero.values.assign(8, 0.0);
    const auto results = retrieve_top_n(index, zero, 5);
    for (const auto& r : results) CHECK(r.similarity == 0.0);
    for (std::size_t i = 1; i < results.size(); ++i)
      CHECK(results[i - 1].exemplar_id < results[i].exemplar_id);
  }
  SECTION("excluded id never appears") {
    const auto results = retrieve_top_n(index, query, 5, std::optional<std::string>("ex2"));
    CHECK(results.size() == 4);
    for (const auto& r : results) CHECK(r.exemplar_id != "ex2");
  }
  SECTION("dimension mismatch") {
    EmbeddingVector bad;
    bad.values.assign(7, 1.0);
    CHECK_THROWS_AS(retrieve_top_n(index, bad, 3), RetrieverError);
  }
}

TEST_CASE("index persists and refuses a fingerprint mismatch") {
  const fs::path dir = fs::temp_directory_path() / "xricl_retriever_test";
  fs::create_directories(dir);
  const ExemplarPool pool = load_exemplar_pool(fixture("pool.json"), fixture("tables.json"));
  const Encoder encoder = Encoder::hashed(bench_encoder_config());
  const ExemplarIndex index = build_index(pool, encoder);
  const std::string path = (dir / "index.bin").string();
  save_index(index, path);
  const ExemplarIndex loaded = load_index(path, encoder.fingerprint());
  CHECK(loaded.ids == index.ids);
  CHECK(std::memcmp(loaded.vectors.data(), index.vectors.data(),
                    index.vectors.size() * sizeof(double)) == 0);
  CHECK_THROWS_AS(load_index(path, "different-fingerprint"), RetrieverError);
}

TEST_CASE("retriever distribution closed forms") {
  auto result = [](std::vector<double> sims) {
    std::vector<RetrievalResult> rs;
    int rank = 1;
    for (double s : sims) rs.push_back({"id" + std::to_string(rank), s, rank++});
    return retriever_distribution(rs);
  };
  SECTION("equal similarities give the uniform distribution") {
    const auto p = result({2.5, 2.5, 2.5, 2.5});
    for (double v : p) CHECK(v == Catch::Approx(0.25).epsilon(1e-12));
  }
  SECTION("(ln 2, 0) gives (2/3, 1/3)") {
    const auto p = result({std::log(2.0), 0.0});
    CHECK(p[0] == Catch::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p[1] == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SECTION("matches an arbitrary-precision evaluation") {
    // softmax(1.0, 0.5, -0.5) computed with 30-digit arithmetic
    const auto p = result({1.0, 0.5, -0.5});
    CHECK(p[0] == Catch::Approx(0.54654938726617963770).epsilon(1e-14));
    CHECK(p[1] == Catch::Approx(0.33149896042409150508).epsilon(1e-14));
    CHECK(p[2] == Catch::Approx(0.12195165230972885720).epsilon(1e-14));
  }
}

TEST_CASE("target distribution transforms") {
  SECTION("identical log-likelihoods are uniform under every transform") {
    const std::vector<double> logliks(5, -2.0);
    const std::vector<std::size_t> counts(5, 7);
    for (auto transform : {TargetTransform::paper_literal, TargetTransform::log_space,
                           TargetTransform::length_normalized}) {
      const auto q = target_distribution(logliks, transform, counts);
      for (double v : q) CHECK(v == Catch::Approx(0.2).epsilon(1e-12));
    }
  }
  SECTION("paper-literal softmaxes the sequence probabilities") {
    // logliks (ln .5, ln .25) -> probabilities (.5, .25) -> softmax
    const std::vector<double> logliks = {std::log(0.5), std::log(0.25)};
    const auto q = target_distribution(logliks, TargetTransform::paper_literal);
    CHECK(q[0] == Catch::Approx(0.562176500885798104).epsilon(1e-12));
    CHECK(q[1] == Catch::Approx(0.437823499114201896).epsilon(1e-12));
  }
  SECTION("log-space softmaxes the log-likelihoods directly") {
    const std::vector<double> logliks = {0.0, -std::log(2.0)};
    const auto q = target_distribution(logliks, TargetTransform::log_space);
    CHECK(q[0] == Catch::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(q[1] == Catch::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  SECTION("length-normalized divides by token counts first") {
    const std::vector<double> logliks = {-4.0, -8.0};
    const std::vector<std::size_t> counts = {2, 4};
    const auto q = target_distribution(logliks, TargetTransform::length_normalized, counts);
    CHECK(q[0] == Catch::Approx(0.5).epsilon(1e-12));  // both normalize to -2
    CHECK(q[1] == Catch::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(target_distribution(logliks, TargetTransform::length_normalized),
                    RetrieverError);
  }
  SECTION("empty input is an error") {
    CHECK_THROWS_AS(target_distribution({}, TargetTransform::log_space), RetrieverError);
  }
}

TEST_CASE("distributions always sum to one with positive entries") {
  SplitMixRng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 15;
    std::vector<double> logliks;
    std::vector<std::size_t> counts;
    for (std::size_t i = 0; i < n; ++i) {
      logliks.push_back(-20.0 * rng.next_double());
      counts.push_back(1 + rng.next_u64() % 30);
    }
    for (auto transform : {TargetTransform::paper_literal, TargetTransform::log_space,
                           TargetTransform::length_normalized}) {
      const auto q = target_distribution(logliks, transform, counts);
      double sum = 0;
      for (double v : q) {
        CHECK(v > 0.0);
        sum += v;
      }
      CHECK(sum == Catch::Approx(1.0).margin(1e-9));
    }
  }
}

TEST_CASE("kl_loss hand values and non-negativity") {
  CHECK(kl_loss({{0.3, 0.7}, {0.3, 0.7}}) == 0.0);
  CHECK(kl_loss({{1.0, 0.0}, {0.5, 0.5}}) == Catch::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(kl_loss({{0.75, 0.25}, {0.25, 0.75}}) ==
        Catch::Approx(0.5 * std::log(3.0)).epsilon(1e-12));

  SplitMixRng rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.next_u64() % 8;
    std::vector<double> q(n), p(n);
    double qs = 0, ps = 0;
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = rng.next_double() + 1e-6;
      p[i] = rng.next_double() + 1e-6;
      qs += q[i];
      ps += p[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      q[i] /= qs;
      p[i] /= ps;
    }
    const double kl = kl_loss({q, p});
    CHECK(kl >= -1e-15);
    CHECK(kl_loss({q, q}) == 0.0);
  }
}

TEST_CASE("distill gradient is zero at the stationary point and permutation-consistent") {
  const std::size_t d_base = 6, d = 4, n = 3;
  const ProjectionWeights weights = ProjectionWeights::random(d_base, d, 8);
  SplitMixRng rng(9);
  FeatureVector query;
  for (std::size_t i = 0; i < d_base; ++i) query.values.push_back(rng.uniform(-1, 1));
  std::vector<FeatureVector> retrieved(n);
  for (auto& f : retrieved)
    for (std::size_t i = 0; i < d_base; ++i) f.values.push_back(rng.uniform(-1, 1));

  // q == p exactly: recompute p and feed it back as the target
  std::vector<double> logits;
  const auto e_x = project_features(weights, query);
  for (const auto& f : retrieved)
    logits.push_back(similarity(e_x, project_features(weights, f)));
  const auto p = softmax(logits);
  const ProjectionWeights zero_grad = distill_gradient(query, retrieved, p, weights);
  for (double g : zero_grad.values) CHECK(std::abs(g) < 1e-12);

  // permuting the retrieved exemplars and targets together leaves the gradient unchanged
  const std::vector<double> q = {0.6, 0.3, 0.1};
  const ProjectionWeights g1 = distill_gradient(query, retrieved, q, weights);
  const std::vector<FeatureVector> permuted = {retrieved[2], retrieved[0], retrieved[1]};
  const std::vector<double> q_permuted = {q[2], q[0], q[1]};
  const ProjectionWeights g2 = distill_gradient(query, permuted, q_permuted, weights);
  for (std::size_t i = 0; i < g1.values.size(); ++i)
    CHECK(g1.values[i] == Catch::Approx(g2.values[i]).margin(1e-12));
}

namespace {

double kl_at(const ProjectionWeights& weights, const FeatureVector& query,
             const std::vector<FeatureVector>& retrieved, const std::vector<double>& target) {
  std::vector<double> logits;
  const auto e_x = project_features(weights, query);
  for (const auto& f : retrieved)
    logits.push_back(similarity(e_x, project_features(weights, f)));
  return kl_loss({target, softmax(logits)});
}

}  // namespace

TEST_CASE("distill gradient matches central finite differences") {
  SplitMixRng rng(271828);
  double max_rel_err = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d_base = 6, d = 4, n = 3;
    const ProjectionWeights weights =
        ProjectionWeights::random(d_base, d, 1000 + static_cast<std::uint64_t>(trial), -0.5, 0.5);
    FeatureVector query;
    for (std::size_t i = 0; i < d_base; ++i) query.values.push_back(rng.uniform(-1, 1));
    std::vector<FeatureVector> retrieved(n);
    for (auto& f : retrieved)
      for (std::size_t i = 0; i < d_base; ++i) f.values.push_back(rng.uniform(-1, 1));
    std::vector<double> target(n);
    double sum = 0;
    for (auto& t : target) {
      t = rng.next_double() + 0.05;
      sum += t;
    }
    for (auto& t : target) t /= sum;

    const ProjectionWeights grad = distill_gradient(query, retrieved, target, weights);
    const double h = 1e-5;
    for (std::size_t idx = 0; idx < weights.values.size(); ++idx) {
      ProjectionWeights plus = weights, minus = weights;
      plus.values[idx] += h;
      minus.values[idx] -= h;
      const double numeric =
          (kl_at(plus, query, retrieved, target) - kl_at(minus, query, retrieved, target)) /
          (2 * h);
      const double analytic = grad.values[idx];
      const double scale = std::max({std::abs(numeric), std::abs(analytic), 1e-8});
      max_rel_err = std::max(max_rel_err, std::abs(numeric - analytic) / scale);
    }
  }
  CHECK(max_rel_err <= 1e-5);
}

TEST_CASE("a small gradient step never increases the loss") {
  SplitMixRng rng(55);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d_base = 8, d = 5, n = 4;
    const ProjectionWeights weights =
        ProjectionWeights::random(d_base, d, 500 + static_cast<std::uint64_t>(trial), -0.5, 0.5);
    FeatureVector query;
    for (std::size_t i = 0; i < d_base; ++i) query.values.push_back(rng.uniform(-1, 1));
    std::vector<FeatureVector> retrieved(n);
    for (auto& f : retrieved)
      for (std::size_t i = 0; i < d_base; ++i) f.values.push_back(rng.uniform(-1, 1));
    std::vector<double> target(n);
    double sum = 0;
    for (auto& t : target) {
      t = rng.next_double() + 0.05;
      sum += t;
    }
    for (auto& t : target) t /= sum;

    const double before = kl_at(weights, query, retrieved, target);
    const ProjectionWeights grad = distill_gradient(query, retrieved, target, weights);
    ProjectionWeights stepped = weights;
    for (std::size_t i = 0; i < stepped.values.size(); ++i)
      stepped.values[i] -= 1e-4 * grad.values[i];
    const double after = kl_at(stepped, query, retrieved, target);
    CHECK(after <= before + 1e-12);
  }
}

TEST_CASE("train_retriever contract") {
  const ExemplarPool pool = load_exemplar_pool(fixture("pool.json"), fixture("tables.json"));
  EncoderConfig config = bench_encoder_config();
  config.kind = EncoderKind::projected;
  config.d = 32;
  const ProjectionWeights init = ProjectionWeights::random(config.d_base, config.d, 42);
  const Encoder encoder = Encoder::projected(config, init);
  MockGenerator generator;

  SECTION("zero epochs returns the weights unchanged") {
    TrainConfig train;
    train.epochs = 0;
    const auto [weights, report] = train_retriever(pool, encoder, generator, train);
    CHECK(report.steps == 0);
    CHECK(std::memcmp(weights.values.data(), init.values.data(),
                      init.values.size() * sizeof(double)) == 0);
  }
  SECTION("training is deterministic and reduces the loss") {
    TrainConfig train;
    train.n = 8;
    train.epochs = 6;
    train.learning_rate = 0.5;
    train.seed = 3;
    train.transform = TargetTransform::log_space;
    const auto [w1, r1] = train_retriever(pool, encoder, generator, train);
    const auto [w2, r2] = train_retriever(pool, encoder, generator, train);
    CHECK(std::memcmp(w1.values.data(), w2.values.data(), w1.values.size() * sizeof(double)) ==
          0);
    CHECK(r1.per_epoch_mean == r2.per_epoch_mean);
    CHECK(r1.steps == pool.exemplars.size() * train.epochs);
    CHECK(r1.final_loss < r1.initial_loss);
    // the excluded query never retrieves itself: training would otherwise
    // degenerate to a self-match; spot-check via a one-epoch report being finite
    for (double loss : r1.per_epoch_mean) CHECK(std::isfinite(loss));
  }
}
