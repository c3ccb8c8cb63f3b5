// Command-line front end for the cross-lingual text-to-SQL pipeline.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "xricl/xricl.hpp"

namespace fs = std::filesystem;
using namespace xricl;

namespace {

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> cache_mode;
};

RunConfig load_config(const GlobalOptions& opts) {
  if (opts.config_path.empty()) throw PipelineError("bad-config", "--config is required");
  RunConfig config = RunConfig::from_file(opts.config_path);
  if (opts.seed) config.seed = *opts.seed;
  if (opts.cache_mode) config.cache_mode = cache_mode_from_string(*opts.cache_mode);
  return config;
}

GeneratorPtr make_generator(const RunConfig& config, std::optional<CacheMode> force_mode = {}) {
  GeneratorPtr backend;
  if (config.backend == "mock") {
    backend = std::make_shared<MockGenerator>(config.prompt.question_marker,
                                              config.prompt.sql_marker,
                                              config.prompt.translation_marker);
  } else {
    HttpBackendConfig http = config.http;
    if (http.model.empty()) http.model = config.gen_params.model_name;
    backend = std::make_shared<HttpCompletionBackend>(http);
  }
  if (!config.paths.cache.empty()) {
    const CacheMode mode = force_mode.value_or(config.cache_mode);
    GeneratorPtr upstream = mode == CacheMode::replay_strict ? nullptr : backend;
    return with_cache(upstream, config.paths.cache, mode);
  }
  return backend;
}

Encoder make_encoder(const RunConfig& config) {
  std::string weights_path;
  if (config.encoder.kind == EncoderKind::projected &&
      !config.paths.retriever_weights.empty() && fs::exists(config.paths.retriever_weights))
    weights_path = config.paths.retriever_weights;
  return Encoder::from_config(config.encoder, weights_path);
}

ExemplarIndex obtain_index(const RunConfig& config, const ExemplarPool& pool,
                           const Encoder& encoder) {
  if (!config.paths.index.empty() && fs::exists(config.paths.index))
    return load_index(config.paths.index, encoder.fingerprint());
  ExemplarIndex index = build_index(pool, encoder);
  if (!config.paths.index.empty()) save_index(index, config.paths.index);
  return index;
}

int cmd_ingest(const GlobalOptions& opts) {
  const RunConfig config = load_config(opts);
  const ExemplarPool pool = load_exemplar_pool(config.paths.pool, config.paths.tables);
  std::cout << "pool: " << pool.exemplars.size() << " exemplars, " << pool.schemas.size()
            << " schemas\n";
  const auto issues = validate_pool(pool);
  for (const auto& issue : issues)
    std::cout << "issue exemplar=" << issue.exemplar_id << " kind=" << issue.kind << " "
              << issue.detail << "\n";
  std::cout << "issues: " << issues.size() << "\n";

  std::ostringstream digest_input;
  for (const auto& ex : pool.exemplars)
    digest_input << ex.id << '\x1f' << ex.utterance << '\x1f' << ex.sql << '\x1e';
  std::cout << "pool_digest: " << sha256_hex(digest_input.str()) << "\n";

  if (!config.paths.eval.empty()) {
    const auto instances =
        load_eval_set(config.paths.eval, config.paths.tables,
                      config.language.empty() ? "en" : config.language);
    std::size_t with_gold = 0;
    for (const auto& inst : instances) with_gold += inst.gold_sql ? 1 : 0;
    std::cout << "eval: " << instances.size() << " instances, " << with_gold << " with gold SQL\n";
  }
  return issues.empty() ? 0 : 1;
}

int cmd_build_index(const GlobalOptions& opts) {
  const RunConfig config = load_config(opts);
  if (config.paths.index.empty())
    throw PipelineError("bad-config", "config needs an 'index' output path");
  const ExemplarPool pool = load_exemplar_pool(config.paths.pool, config.paths.tables);
  const Encoder encoder = make_encoder(config);
  const ExemplarIndex index = build_index(pool, encoder);
  save_index(index, config.paths.index);
  std::cout << "index: " << index.size() << " x " << index.dim << " -> " << config.paths.index
            << "\nfingerprint: " << index.encoder_fingerprint << "\n";
  return 0;
}

void print_train_report(const TrainReport& report) {
  std::cout << "steps: " << report.steps << "\ninitial_loss: " << report.initial_loss
            << "\nfinal_loss: " << report.final_loss << "\nwall_seconds: " << report.wall_seconds
            << "\n";
}

void write_train_report(const TrainReport& report, const std::string& output_dir,
                        const std::string& name) {
  fs::create_directories(output_dir);
  nlohmann::ordered_json j;
  j["steps"] = report.steps;
  j["initial_loss"] = report.initial_loss;
  j["final_loss"] = report.final_loss;
  j["per_epoch_mean"] = report.per_epoch_mean;
  j["wall_seconds"] = report.wall_seconds;
  std::ofstream out(fs::path(output_dir) / name);
  out << j.dump(1) << "\n";
}

int cmd_train_retriever(const GlobalOptions& opts) {
  RunConfig config = load_config(opts);
  if (config.paths.retriever_weights.empty())
    throw PipelineError("bad-config", "config needs a 'retriever_weights' output path");
  const ExemplarPool pool = load_exemplar_pool(config.paths.pool, config.paths.tables);
  EncoderConfig enc_config = config.encoder;
  enc_config.kind = EncoderKind::projected;
  const Encoder encoder = Encoder::from_config(enc_config);
  GeneratorPtr generator = make_generator(config);
  auto [weights, report] = train_retriever(pool, encoder, *generator, config.train, config.prompt);
  save_weights(weights, config.paths.retriever_weights);
  print_train_report(report);
  write_train_report(report, config.paths.output_dir, "train_retriever_report.json");
  std::cout << "weights -> " << config.paths.retriever_weights << "\n";
  return 0;
}

int cmd_train_reranker(const GlobalOptions& opts) {
  RunConfig config = load_config(opts);
  if (config.paths.reranker_weights.empty())
    throw PipelineError("bad-config", "config needs a 'reranker_weights' output path");
  const ExemplarPool pool = load_exemplar_pool(config.paths.pool, config.paths.tables);
  const Encoder encoder = make_encoder(config);
  const ExemplarIndex index = obtain_index(config, pool, encoder);
  GeneratorPtr generator = make_generator(config);
  auto [weights, report] =
      train_reranker(pool, index, encoder, *generator, config.rerank_train, config.prompt);
  save_reranker_weights(weights, config.paths.reranker_weights, encoder.fingerprint());
  print_train_report(report);
  write_train_report(report, config.paths.output_dir, "train_reranker_report.json");
  std::cout << "weights -> " << config.paths.reranker_weights << "\n";
  return 0;
}

int run_pipeline(RunConfig config) {
  config.validate();
  const ExemplarPool pool = load_exemplar_pool(config.paths.pool, config.paths.tables);
  const auto instances =
      load_eval_set(config.paths.eval, config.paths.tables, config.language);

  std::map<std::string, TranslationExemplar> translations;
  if (!config.paths.translations.empty())
    translations = load_translation_exemplars(config.paths.translations, pool.schemas);

  std::optional<Encoder> encoder;
  std::optional<ExemplarIndex> index;
  if (config.oracle_mode == OracleMode::none) {
    encoder.emplace(make_encoder(config));
    index.emplace(obtain_index(config, pool, *encoder));
  }

  std::optional<RerankerWeights> reranker;
  if (config.reranker_enabled && !config.paths.reranker_weights.empty() &&
      fs::exists(config.paths.reranker_weights))
    reranker = load_reranker_weights(config.paths.reranker_weights);

  GeneratorPtr generator = make_generator(config);

  PipelineComponents components;
  components.pool = &pool;
  components.index = index ? &*index : nullptr;
  components.encoder = encoder ? &*encoder : nullptr;
  components.generator = generator.get();
  components.reranker = reranker ? &*reranker : nullptr;
  components.translations = translations.empty() ? nullptr : &translations;

  auto [report, traces] = run_eval(config, instances, components);
  write_run_artifacts(report, traces, config.paths.output_dir);

  std::cout << "count: " << report.count << "\nem_accuracy: " << report.em_accuracy << "\n";
  if (report.execution_accuracy)
    std::cout << "execution_accuracy: " << *report.execution_accuracy << "\n";
  std::cout << "parse_failure_rate: " << report.parse_failure_rate
            << "\nruntime_seconds: " << report.runtime_seconds << "\nreport -> "
            << (fs::path(config.paths.output_dir) / "report.json").string() << "\n";
  return 0;
}

int cmd_run(const GlobalOptions& opts) { return run_pipeline(load_config(opts)); }

int cmd_oracle_run(const GlobalOptions& opts, const std::string& mode) {
  RunConfig config = load_config(opts);
  config.oracle_mode = oracle_mode_from_string(mode);
  if (config.oracle_mode == OracleMode::none)
    throw PipelineError("bad-config", "oracle-run needs --mode template|template-generator");
  return run_pipeline(std::move(config));
}

int cmd_evaluate(const GlobalOptions& opts) {
  const RunConfig config = load_config(opts);
  const fs::path traces_path = fs::path(config.paths.output_dir) / "traces.jsonl";
  std::ifstream in(traces_path);
  if (!in) throw PipelineError("io-error", "cannot read " + traces_path.string());

  std::vector<QueryTrace> traces;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const nlohmann::json j = nlohmann::json::parse(line);
    QueryTrace trace;
    trace.test_id = j.value("test_id", "");
    trace.predicted_sql = j.value("predicted_sql", "");
    if (j.contains("gold_sql")) trace.gold_sql = j["gold_sql"].get<std::string>();
    trace.prompt_digest = j.value("prompt_digest", "");
    trace.raw_completion = j.value("raw_completion", "");
    if (!trace.gold_sql) {
      traces.push_back(std::move(trace));
      continue;
    }
    trace.verdict = sql::exact_match(*trace.gold_sql, trace.predicted_sql);
    traces.push_back(std::move(trace));
  }
  MetricsReport report = aggregate_metrics(traces, config, false);
  write_run_artifacts(report, traces, config.paths.output_dir);
  std::cout << "count: " << report.count << "\nem_accuracy: " << report.em_accuracy << "\n";
  return 0;
}

int cmd_score_cache(const GlobalOptions& opts) {
  RunConfig config = load_config(opts);
  if (config.paths.cache.empty())
    throw PipelineError("bad-config", "score-cache needs a 'cache' path");
  const ExemplarPool pool = load_exemplar_pool(config.paths.pool, config.paths.tables);
  const Encoder encoder = make_encoder(config);
  const ExemplarIndex index = obtain_index(config, pool, encoder);
  GeneratorPtr generator = make_generator(config, CacheMode::record);

  std::map<std::string, const Exemplar*> by_id;
  for (const auto& ex : pool.exemplars) by_id[ex.id] = &ex;

  std::size_t calls = 0;
  for (const auto& query : pool.exemplars) {
    const EmbeddingVector qvec = encoder.encode(query.utterance);
    const auto retrieved = retrieve_top_n(index, qvec, config.n, query.id);
    std::vector<const Exemplar*> candidates;
    for (const auto& r : retrieved) candidates.push_back(by_id.at(r.exemplar_id));
    contribution_targets(candidates, query.utterance, *query.schema, query.sql, *generator,
                         config.train.transform, config.prompt);
    calls += candidates.size();
  }
  std::cout << "scored " << calls << " (prompt, continuation) pairs into " << config.paths.cache
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-lingual text-to-SQL via retrieved in-context exemplars"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "Path to the run configuration JSON");
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Override the config seed");
  std::string cache_mode_value;
  auto* cache_opt =
      app.add_option("--cache-mode", cache_mode_value,
                     "Override the cache mode: record|replay-strict|replay-fallthrough");

  auto* ingest = app.add_subcommand("ingest", "Validate and fingerprint the data files");
  auto* build_index_cmd = app.add_subcommand("build-index", "Encode the pool and save the index");
  auto* train_retriever_cmd =
      app.add_subcommand("train-retriever", "Distill the generator into the retriever");
  auto* train_reranker_cmd =
      app.add_subcommand("train-reranker", "Train the exemplar reranker");
  auto* run = app.add_subcommand("run", "Run the full pipeline over the eval set");
  auto* oracle_run = app.add_subcommand("oracle-run", "Run an oracle pipeline over the eval set");
  std::string oracle_mode = "template";
  oracle_run->add_option("--mode", oracle_mode, "template or template-generator");
  auto* evaluate = app.add_subcommand("evaluate", "Re-score existing traces");
  auto* score_cache = app.add_subcommand("score-cache", "Pre-populate the generator cache");

  // global flags may follow the subcommand name
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) opts.seed = seed_value;
  if (*cache_opt) opts.cache_mode = cache_mode_value;

  try {
    if (ingest->parsed()) return cmd_ingest(opts);
    if (build_index_cmd->parsed()) return cmd_build_index(opts);
    if (train_retriever_cmd->parsed()) return cmd_train_retriever(opts);
    if (train_reranker_cmd->parsed()) return cmd_train_reranker(opts);
    if (run->parsed()) return cmd_run(opts);
    if (oracle_run->parsed()) return cmd_oracle_run(opts, oracle_mode);
    if (evaluate->parsed()) return cmd_evaluate(opts);
    if (score_cache->parsed()) return cmd_score_cache(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
