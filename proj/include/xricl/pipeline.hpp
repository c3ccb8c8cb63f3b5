#pragma once

// End-to-end orchestration: retrieve, rerank, build prompt, generate, parse,
// evaluate; the two oracle pipelines; metric aggregation and run artifacts.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "xricl/corpus.hpp"
#include "xricl/encoder.hpp"
#include "xricl/generator.hpp"
#include "xricl/prompt.hpp"
#include "xricl/reranker.hpp"
#include "xricl/retriever.hpp"
#include "xricl/sqleval.hpp"

namespace xricl {

class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;  // bad-config | gold-parse-error | io-error | missing-component
};

enum class OracleMode { none, template_only, template_generator };

inline const char* oracle_mode_name(OracleMode m) {
  switch (m) {
    case OracleMode::none: return "none";
    case OracleMode::template_only: return "template";
    case OracleMode::template_generator: return "template-generator";
  }
  return "none";
}

inline OracleMode oracle_mode_from_string(const std::string& s) {
  if (s == "none") return OracleMode::none;
  if (s == "template") return OracleMode::template_only;
  if (s == "template-generator") return OracleMode::template_generator;
  throw PipelineError("bad-config", "unknown oracle mode '" + s + "'");
}

// ---------------------------------------------------------------------------
// Run configuration
// ---------------------------------------------------------------------------

struct RunPaths {
  std::string pool;
  std::string tables;
  std::string eval;
  std::string translations;
  std::string index;
  std::string retriever_weights;
  std::string reranker_weights;
  std::string cache;
  std::string db_dir;
  std::string output_dir = ".";
};

struct RunConfig {
  RunPaths paths;
  std::size_t n = 16;
  std::size_t k = 8;
  PromptConfig prompt;
  std::string language;
  GenerationParams gen_params;
  std::string backend = "mock";  // mock | http
  HttpBackendConfig http;
  CacheMode cache_mode = CacheMode::record;
  bool reranker_enabled = false;
  bool prompt_order_by_reranker = true;
  OracleMode oracle_mode = OracleMode::none;
  std::uint64_t seed = 0;
  EncoderConfig encoder;
  TrainConfig train;
  RerankTrainConfig rerank_train;

  void validate() const {
    if (k < 1 || n < 1 || k > n) throw PipelineError("bad-config", "need 1 <= k <= n");
    prompt.validate();
    if (backend != "mock" && backend != "http")
      throw PipelineError("bad-config", "backend must be 'mock' or 'http'");
    if (prompt.mode == PromptMode::translation && paths.translations.empty())
      throw PipelineError("bad-config", "translation mode needs a translation exemplar file");
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["pool"] = paths.pool;
    j["tables"] = paths.tables;
    j["eval"] = paths.eval;
    j["translations"] = paths.translations;
    j["index"] = paths.index;
    j["retriever_weights"] = paths.retriever_weights;
    j["reranker_weights"] = paths.reranker_weights;
    j["cache"] = paths.cache;
    j["db_dir"] = paths.db_dir;
    j["output_dir"] = paths.output_dir;
    j["n"] = n;
    j["k"] = k;
    j["language"] = language;
    j["prompt"] = {{"mode", prompt_mode_name(prompt.mode)},
                   {"delimiter", prompt.exemplar_delimiter},
                   {"sql_marker", prompt.sql_marker},
                   {"translation_marker", prompt.translation_marker},
                   {"question_marker", prompt.question_marker},
                   {"schema_marker", prompt.schema_marker}};
    j["backend"] = backend;
    j["cache_mode"] = cache_mode_name(cache_mode);
    j["reranker_enabled"] = reranker_enabled;
    j["prompt_order_by_reranker"] = prompt_order_by_reranker;
    j["oracle_mode"] = oracle_mode_name(oracle_mode);
    j["seed"] = seed;
    j["encoder"] = {{"kind", encoder_kind_name(encoder.kind)},
                    {"d_base", encoder.d_base},
                    {"d", encoder.d},
                    {"ngram_min", encoder.ngram_min},
                    {"ngram_max", encoder.ngram_max},
                    {"seed", encoder.seed},
                    {"normalize", encoder.normalize_output}};
    j["generator"] = {{"model", gen_params.model_name},
                      {"temperature", gen_params.temperature},
                      {"max_tokens", gen_params.max_tokens},
                      {"stop", gen_params.stop_sequences}};
    return j;
  }

  static RunConfig from_json(const nlohmann::json& j) {
    RunConfig c;
    auto str = [&](const char* key, std::string& out) {
      if (j.contains(key)) out = j[key].get<std::string>();
    };
    str("pool", c.paths.pool);
    str("tables", c.paths.tables);
    str("eval", c.paths.eval);
    str("translations", c.paths.translations);
    str("index", c.paths.index);
    str("retriever_weights", c.paths.retriever_weights);
    str("reranker_weights", c.paths.reranker_weights);
    str("cache", c.paths.cache);
    str("db_dir", c.paths.db_dir);
    str("output_dir", c.paths.output_dir);
    if (j.contains("n")) c.n = j["n"].get<std::size_t>();
    if (j.contains("k")) c.k = j["k"].get<std::size_t>();
    str("language", c.language);
    if (j.contains("prompt")) {
      const auto& p = j["prompt"];
      if (p.contains("mode"))
        c.prompt.mode = p["mode"].get<std::string>() == "translation" ? PromptMode::translation
                                                                      : PromptMode::vanilla;
      if (p.contains("delimiter")) c.prompt.exemplar_delimiter = p["delimiter"].get<std::string>();
      if (p.contains("sql_marker")) c.prompt.sql_marker = p["sql_marker"].get<std::string>();
      if (p.contains("translation_marker"))
        c.prompt.translation_marker = p["translation_marker"].get<std::string>();
      if (p.contains("question_marker"))
        c.prompt.question_marker = p["question_marker"].get<std::string>();
      if (p.contains("schema_marker"))
        c.prompt.schema_marker = p["schema_marker"].get<std::string>();
      if (p.contains("max_bytes")) c.prompt.max_bytes = p["max_bytes"].get<std::size_t>();
    }
    if (j.contains("backend")) c.backend = j["backend"].get<std::string>();
    if (j.contains("cache_mode"))
      c.cache_mode = cache_mode_from_string(j["cache_mode"].get<std::string>());
    if (j.contains("reranker_enabled")) c.reranker_enabled = j["reranker_enabled"].get<bool>();
    if (j.contains("prompt_order_by_reranker"))
      c.prompt_order_by_reranker = j["prompt_order_by_reranker"].get<bool>();
    if (j.contains("oracle_mode"))
      c.oracle_mode = oracle_mode_from_string(j["oracle_mode"].get<std::string>());
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("encoder")) {
      const auto& e = j["encoder"];
      if (e.contains("kind")) {
        const std::string kind = e["kind"].get<std::string>();
        if (kind == "hashed") c.encoder.kind = EncoderKind::hashed;
        else if (kind == "projected") c.encoder.kind = EncoderKind::projected;
        else if (kind == "external-file") c.encoder.kind = EncoderKind::external_file;
        else if (kind == "external-endpoint") c.encoder.kind = EncoderKind::external_endpoint;
        else throw PipelineError("bad-config", "unknown encoder kind '" + kind + "'");
      }
      if (e.contains("d_base")) c.encoder.d_base = e["d_base"].get<int>();
      if (e.contains("d")) c.encoder.d = e["d"].get<int>();
      if (e.contains("ngram_min")) c.encoder.ngram_min = e["ngram_min"].get<int>();
      if (e.contains("ngram_max")) c.encoder.ngram_max = e["ngram_max"].get<int>();
      if (e.contains("seed")) c.encoder.seed = e["seed"].get<std::uint64_t>();
      if (e.contains("normalize")) c.encoder.normalize_output = e["normalize"].get<bool>();
      if (e.contains("embeddings_path"))
        c.encoder.embeddings_path = e["embeddings_path"].get<std::string>();
      if (e.contains("endpoint_url"))
        c.encoder.endpoint_url = e["endpoint_url"].get<std::string>();
    }
    if (j.contains("generator")) {
      const auto& g = j["generator"];
      if (g.contains("model")) c.gen_params.model_name = g["model"].get<std::string>();
      if (g.contains("temperature")) c.gen_params.temperature = g["temperature"].get<double>();
      if (g.contains("max_tokens")) c.gen_params.max_tokens = g["max_tokens"].get<int>();
      if (g.contains("stop"))
        c.gen_params.stop_sequences = g["stop"].get<std::vector<std::string>>();
      if (g.contains("base_url")) c.http.base_url = g["base_url"].get<std::string>();
      if (g.contains("api_key_env")) c.http.api_key_env = g["api_key_env"].get<std::string>();
      if (g.contains("request_budget"))
        c.http.request_budget = g["request_budget"].get<std::uint64_t>();
      c.http.model = c.gen_params.model_name;
    }
    if (j.contains("train")) c.train = TrainConfig::from_json(j["train"]);
    if (j.contains("rerank_train"))
      c.rerank_train = RerankTrainConfig::from_json(j["rerank_train"]);
    return c;
  }

  static RunConfig from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PipelineError("io-error", "cannot read config " + path);
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw PipelineError("bad-config", path + ": " + e.what());
    }
    return from_json(j);
  }
};

// ---------------------------------------------------------------------------
// Traces and metrics
// ---------------------------------------------------------------------------

struct QueryTrace {
  std::string test_id;
  std::vector<ScoredExemplar> retrieved;
  std::vector<ScoredExemplar> reranked;
  std::string prompt_digest;
  std::string raw_completion;
  std::optional<std::string> translation;
  std::string predicted_sql;
  std::optional<std::string> gold_sql;
  sql::EvalVerdict verdict;
  std::string error;
};

struct MetricsReport {
  std::size_t count = 0;
  bool empty_eval_set = false;
  double em_accuracy = 0.0;
  std::optional<double> execution_accuracy;
  double parse_failure_rate = 0.0;
  std::map<std::string, std::size_t> verdict_breakdown;
  nlohmann::ordered_json config_echo;
  double runtime_seconds = 0.0;  // reported to the caller; kept out of the
                                 // canonical report file so replay runs are
                                 // byte-identical
};

inline nlohmann::ordered_json trace_to_json(const QueryTrace& trace) {
  nlohmann::ordered_json j;
  j["test_id"] = trace.test_id;
  auto scored_array = [](const std::vector<ScoredExemplar>& items, bool with_prob) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& s : items) {
      nlohmann::ordered_json entry;
      entry["id"] = s.exemplar_id;
      entry["similarity"] = s.retrieval_similarity;
      if (with_prob) entry["probability"] = s.rerank_probability;
      if (s.generator_contribution) entry["contribution"] = *s.generator_contribution;
      arr.push_back(std::move(entry));
    }
    return arr;
  };
  j["retrieved"] = scored_array(trace.retrieved, false);
  j["reranked"] = scored_array(trace.reranked, true);
  j["prompt_digest"] = trace.prompt_digest;
  j["raw_completion"] = trace.raw_completion;
  if (trace.translation) j["translation"] = *trace.translation;
  j["predicted_sql"] = trace.predicted_sql;
  if (trace.gold_sql) j["gold_sql"] = *trace.gold_sql;
  j["exact_match"] = trace.verdict.exact_match;
  if (trace.verdict.execution_match) j["execution_match"] = *trace.verdict.execution_match;
  j["failure_reason"] = sql::failure_reason_name(trace.verdict.failure_reason);
  if (!trace.error.empty()) j["error"] = trace.error;
  return j;
}

// ---------------------------------------------------------------------------
// Oracle pipelines
// ---------------------------------------------------------------------------

inline std::vector<Exemplar> template_oracle_retrieve(const ExemplarPool& pool,
                                                      const std::string& gold_sql,
                                                      std::size_t n) {
  sql::SqlTemplate gold_template;
  try {
    gold_template = sql::extract_template(gold_sql);
  } catch (const std::exception& e) {
    throw PipelineError("gold-parse-error", e.what());
  }
  std::vector<Exemplar> out;
  for (const auto& ex : pool.exemplars) {
    try {
      if (sql::extract_template(ex.sql) == gold_template) out.push_back(ex);
    } catch (const std::exception&) {
      // unparseable exemplar SQL can never share the template
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Exemplar& a, const Exemplar& b) { return a.id < b.id; });
  if (out.size() > n) out.resize(n);
  return out;
}

inline std::vector<ScoredExemplar> tg_oracle_rerank(const std::vector<Exemplar>& candidates,
                                                    const TestInstance& test,
                                                    const std::string& gold_sql,
                                                    GeneratorBackend& generator, std::size_t k,
                                                    const PromptConfig& prompt_config = {}) {
  std::vector<ScoredExemplar> scored;
  scored.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    auto [prompt, continuation] =
        detail::scoring_prompt(candidate, test.utterance, *test.schema, gold_sql, prompt_config);
    double contribution = 0.0;
    try {
      contribution = sequence_loglik(generator.score_continuation(prompt, continuation));
    } catch (const std::exception& e) {
      throw PipelineError("bad-config",
                          "generator failed for candidate '" + candidate.id + "': " + e.what());
    }
    ScoredExemplar s;
    s.exemplar_id = candidate.id;
    s.generator_contribution = contribution;
    scored.push_back(std::move(s));
  }
  std::sort(scored.begin(), scored.end(), [](const ScoredExemplar& a, const ScoredExemplar& b) {
    if (*a.generator_contribution != *b.generator_contribution)
      return *a.generator_contribution > *b.generator_contribution;
    return a.exemplar_id < b.exemplar_id;
  });
  if (scored.size() > k) scored.resize(k);
  return scored;
}

// ---------------------------------------------------------------------------
// Single-query pipeline
// ---------------------------------------------------------------------------

struct PipelineComponents {
  const ExemplarPool* pool = nullptr;
  const ExemplarIndex* index = nullptr;
  const Encoder* encoder = nullptr;
  GeneratorBackend* generator = nullptr;
  const RerankerWeights* reranker = nullptr;
  const std::map<std::string, TranslationExemplar>* translations = nullptr;
};

inline std::string resolve_db_path(const std::string& db_dir, const std::string& db_id) {
  namespace fs = std::filesystem;
  const fs::path nested = fs::path(db_dir) / db_id / (db_id + ".sqlite");
  if (fs::exists(nested)) return nested.string();
  return (fs::path(db_dir) / (db_id + ".sqlite")).string();
}

inline QueryTrace run_query(const TestInstance& test, const PipelineComponents& components,
                            const RunConfig& config) {
  if (!components.pool || !components.generator)
    throw PipelineError("missing-component", "pipeline needs a pool and a generator");
  QueryTrace trace;
  trace.test_id = test.id;
  trace.gold_sql = test.gold_sql;

  std::map<std::string, const Exemplar*> by_id;
  for (const auto& ex : components.pool->exemplars) by_id[ex.id] = &ex;

  std::vector<ScoredExemplar> selected;  // feeds the prompt, already ordered
  try {
    if (config.oracle_mode != OracleMode::none) {
      if (!test.gold_sql)
        throw PipelineError("bad-config", "oracle modes need gold SQL for '" + test.id + "'");
      const auto candidates = template_oracle_retrieve(*components.pool, *test.gold_sql, config.n);
      for (const auto& c : candidates) {
        ScoredExemplar s;
        s.exemplar_id = c.id;
        trace.retrieved.push_back(s);
      }
      if (config.oracle_mode == OracleMode::template_generator) {
        selected = tg_oracle_rerank(candidates, test, *test.gold_sql, *components.generator,
                                    config.k, config.prompt);
        trace.reranked = selected;
      } else {
        for (const auto& c : candidates) {
          if (selected.size() >= config.k) break;
          ScoredExemplar s;
          s.exemplar_id = c.id;
          selected.push_back(s);
        }
      }
    } else {
      if (!components.index || !components.encoder)
        throw PipelineError("missing-component", "retrieval needs an index and an encoder");
      const EmbeddingVector qvec = components.encoder->encode(test.utterance);
      const auto retrieved = retrieve_top_n(*components.index, qvec, config.n);
      for (const auto& r : retrieved) {
        ScoredExemplar s;
        s.exemplar_id = r.exemplar_id;
        s.retrieval_similarity = r.similarity;
        trace.retrieved.push_back(s);
      }
      if (config.reranker_enabled && components.reranker) {
        std::vector<ScoredExemplar> scored;
        for (const auto& r : retrieved) {
          const Exemplar* ex = by_id.at(r.exemplar_id);
          ScoredExemplar s;
          s.exemplar_id = r.exemplar_id;
          s.retrieval_similarity = r.similarity;
          s.rerank_probability = rerank_score(
              *components.reranker, interaction_features(test.utterance, ex->utterance,
                                                         *components.encoder, r.similarity));
          scored.push_back(std::move(s));
        }
        selected = select_top_k(scored, config.k);
        trace.reranked = selected;
        if (!config.prompt_order_by_reranker) {
          // keep the reranker's selection but present exemplars in retrieval order
          std::map<std::string, std::size_t> retrieval_rank;
          for (std::size_t i = 0; i < retrieved.size(); ++i)
            retrieval_rank[retrieved[i].exemplar_id] = i;
          std::sort(selected.begin(), selected.end(),
                    [&](const ScoredExemplar& a, const ScoredExemplar& b) {
                      return retrieval_rank[a.exemplar_id] < retrieval_rank[b.exemplar_id];
                    });
        }
      } else {
        for (const auto& r : retrieved) {
          if (selected.size() >= config.k) break;
          ScoredExemplar s;
          s.exemplar_id = r.exemplar_id;
          s.retrieval_similarity = r.similarity;
          selected.push_back(std::move(s));
        }
        trace.reranked = selected;
      }
    }

    std::vector<Exemplar> prompt_exemplars;
    for (const auto& s : selected) prompt_exemplars.push_back(*by_id.at(s.exemplar_id));

    PromptText prompt;
    if (config.prompt.mode == PromptMode::translation) {
      if (!components.translations)
        throw PipelineError("missing-component", "translation mode needs translation exemplars");
      auto it = components.translations->find(test.language);
      if (it == components.translations->end())
        throw PipelineError("bad-config",
                            "no translation exemplar for language '" + test.language + "'");
      prompt = build_translation_prompt(it->second, prompt_exemplars, test, config.prompt);
    } else {
      prompt = build_vanilla_prompt(prompt_exemplars, test, config.prompt);
    }
    trace.prompt_digest = sha256_hex(prompt.text);

    GenerationParams params = config.gen_params;
    if (std::find(params.stop_sequences.begin(), params.stop_sequences.end(),
                  "\n" + config.prompt.exemplar_delimiter) == params.stop_sequences.end())
      params.stop_sequences.push_back("\n" + config.prompt.exemplar_delimiter);
    const Completion completion = components.generator->complete(prompt.text, params);
    trace.raw_completion = completion.text;

    ParsedCompletion parsed;
    try {
      parsed = parse_completion(completion.text, config.prompt.mode, config.prompt);
    } catch (const PromptError& e) {
      trace.error = e.what();
    }
    trace.translation = parsed.translation;
    trace.predicted_sql = parsed.sql;
  } catch (const PipelineError&) {
    throw;  // configuration problems abort the batch
  } catch (const std::exception& e) {
    trace.error = e.what();  // generator failures score as non-matches
  }

  if (test.gold_sql) {
    trace.verdict = sql::exact_match(*test.gold_sql, trace.predicted_sql);
    if (!config.paths.db_dir.empty()) {
      const std::string db_path = resolve_db_path(config.paths.db_dir, test.schema->db_id);
      try {
        const auto exec_verdict =
            sql::execution_match(db_path, *test.gold_sql, trace.predicted_sql);
        trace.verdict.execution_match = exec_verdict.execution_match;
        if (exec_verdict.failure_reason != sql::FailureReason::none &&
            trace.verdict.failure_reason == sql::FailureReason::none)
          trace.verdict.failure_reason = exec_verdict.failure_reason;
      } catch (const sql::GoldExecutionError& e) {
        trace.error = trace.error.empty() ? e.what() : trace.error + "; " + e.what();
      }
    }
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Batch evaluation
// ---------------------------------------------------------------------------

inline MetricsReport aggregate_metrics(const std::vector<QueryTrace>& traces,
                                       const RunConfig& config, bool with_execution) {
  MetricsReport report;
  report.count = traces.size();
  report.empty_eval_set = traces.empty();
  report.config_echo = config.to_json();
  if (traces.empty()) return report;
  std::size_t em = 0, exec = 0, parse_failures = 0;
  for (const auto& trace : traces) {
    if (trace.verdict.exact_match) ++em;
    if (trace.verdict.execution_match && *trace.verdict.execution_match) ++exec;
    if (trace.verdict.failure_reason == sql::FailureReason::pred_parse_error) ++parse_failures;
    ++report.verdict_breakdown[trace.verdict.exact_match ? "exact_match" : "no_match"];
    if (trace.verdict.failure_reason != sql::FailureReason::none)
      ++report.verdict_breakdown[sql::failure_reason_name(trace.verdict.failure_reason)];
    if (!trace.error.empty()) ++report.verdict_breakdown["generator-error"];
  }
  report.em_accuracy = static_cast<double>(em) / static_cast<double>(traces.size());
  report.parse_failure_rate =
      static_cast<double>(parse_failures) / static_cast<double>(traces.size());
  if (with_execution)
    report.execution_accuracy = static_cast<double>(exec) / static_cast<double>(traces.size());
  return report;
}

inline nlohmann::ordered_json report_to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["count"] = report.count;
  j["empty_eval_set"] = report.empty_eval_set;
  j["em_accuracy"] = report.em_accuracy;
  if (report.execution_accuracy) j["execution_accuracy"] = *report.execution_accuracy;
  j["parse_failure_rate"] = report.parse_failure_rate;
  j["verdict_breakdown"] = report.verdict_breakdown;
  j["config"] = report.config_echo;
  return j;
}

inline std::pair<MetricsReport, std::vector<QueryTrace>> run_eval(
    const RunConfig& config, const std::vector<TestInstance>& instances,
    const PipelineComponents& components) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<QueryTrace> traces;
  traces.reserve(instances.size());
  for (const auto& test : instances) traces.push_back(run_query(test, components, config));
  MetricsReport report = aggregate_metrics(traces, config, !config.paths.db_dir.empty());
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {report, std::move(traces)};
}

inline void write_run_artifacts(const MetricsReport& report, const std::vector<QueryTrace>& traces,
                                const std::string& output_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(output_dir);
  {
    std::ofstream out(fs::path(output_dir) / "report.json");
    if (!out) throw PipelineError("io-error", "cannot write report.json under " + output_dir);
    out << report_to_json(report).dump(1) << "\n";
  }
  {
    std::ofstream out(fs::path(output_dir) / "traces.jsonl");
    if (!out) throw PipelineError("io-error", "cannot write traces.jsonl under " + output_dir);
    for (const auto& trace : traces) out << trace_to_json(trace).dump() << "\n";
  }
}

}  // namespace xricl
