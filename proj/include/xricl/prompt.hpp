#pragma once

// Prompt construction (Vanilla-P and Translation-P) and completion parsing.
// Builders are pure; identical inputs produce byte-identical prompts.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "xricl/corpus.hpp"
#include "xricl/util.hpp"

namespace xricl {

class PromptError : public std::runtime_error {
 public:
  PromptError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;  // language-mismatch | missing-sql | prompt-too-long | bad-config
};

enum class PromptMode { vanilla, translation };

inline const char* prompt_mode_name(PromptMode m) {
  return m == PromptMode::vanilla ? "vanilla" : "translation";
}

struct PromptConfig {
  PromptMode mode = PromptMode::vanilla;
  std::string exemplar_delimiter = "---";
  std::string sql_marker = "SQL:";
  std::string translation_marker = "Translate into English:";
  std::string question_marker = "Question:";
  std::string schema_marker = "Tables:";
  std::size_t max_bytes = 1 << 20;

  void validate() const {
    const std::vector<const std::string*> markers = {&exemplar_delimiter, &sql_marker,
                                                     &translation_marker, &question_marker,
                                                     &schema_marker};
    for (const auto* m : markers)
      if (m->empty()) throw PromptError("bad-config", "markers must be non-empty");
    for (std::size_t i = 0; i < markers.size(); ++i)
      for (std::size_t j = i + 1; j < markers.size(); ++j)
        if (*markers[i] == *markers[j])
          throw PromptError("bad-config", "markers must be pairwise distinct: " + *markers[i]);
  }
};

struct PromptText {
  std::string text;
  std::vector<std::string> exemplar_ids;  // appearance order
  PromptMode mode = PromptMode::vanilla;
  std::size_t byte_length = 0;
};

struct ParsedCompletion {
  std::optional<std::string> translation;
  std::string sql;
};

// ---------------------------------------------------------------------------
// Linearization
// ---------------------------------------------------------------------------

inline std::string linearize_schema(const SchemaDesc& schema, const PromptConfig& config = {}) {
  std::string out = config.schema_marker + " ";
  for (std::size_t t = 0; t < schema.tables.size(); ++t) {
    if (t) out += " ; ";
    out += schema.tables[t].name + "(";
    for (std::size_t c = 0; c < schema.tables[t].columns.size(); ++c) {
      if (c) out += ", ";
      out += schema.tables[t].columns[c].name;
    }
    out += ")";
  }
  return out;
}

inline std::string linearize_exemplar(const Exemplar& ex, const PromptConfig& config = {}) {
  std::string out = linearize_schema(*ex.schema, config);
  out += "\n" + config.question_marker + " " + ex.utterance;
  out += "\n" + config.sql_marker + " " + flatten_whitespace(ex.sql);
  out += "\n" + config.exemplar_delimiter + "\n";
  return out;
}

namespace detail {

inline std::string test_block_header(const TestInstance& test, const PromptConfig& config) {
  return linearize_schema(*test.schema, config) + "\n" + config.question_marker + " " +
         test.utterance + "\n";
}

inline void check_length(const std::string& text, const PromptConfig& config) {
  if (text.size() > config.max_bytes)
    throw PromptError("prompt-too-long", std::to_string(text.size()) + " bytes exceeds max of " +
                                             std::to_string(config.max_bytes));
}

}  // namespace detail

inline PromptText build_vanilla_prompt(const std::vector<Exemplar>& exemplars,
                                       const TestInstance& test, const PromptConfig& config = {}) {
  config.validate();
  PromptText prompt;
  prompt.mode = PromptMode::vanilla;
  for (const auto& ex : exemplars) {
    prompt.text += linearize_exemplar(ex, config);
    prompt.exemplar_ids.push_back(ex.id);
  }
  prompt.text += detail::test_block_header(test, config);
  prompt.text += config.sql_marker;  // bare generation cue
  prompt.byte_length = prompt.text.size();
  detail::check_length(prompt.text, config);
  return prompt;
}

inline PromptText build_translation_prompt(const TranslationExemplar& trans,
                                           const std::vector<Exemplar>& exemplars,
                                           const TestInstance& test,
                                           const PromptConfig& config = {}) {
  config.validate();
  if (trans.language != test.language)
    throw PromptError("language-mismatch", "translation exemplar is '" + trans.language +
                                               "' but test instance is '" + test.language + "'");
  PromptText prompt;
  prompt.mode = PromptMode::translation;
  prompt.text = linearize_schema(*trans.schema, config);
  prompt.text += "\n" + config.question_marker + " " + trans.target_question;
  prompt.text += "\n" + config.translation_marker + " " + trans.english_question;
  prompt.text += "\n" + config.sql_marker + " " + flatten_whitespace(trans.sql);
  prompt.text += "\n" + config.exemplar_delimiter + "\n";
  for (const auto& ex : exemplars) {
    prompt.text += linearize_exemplar(ex, config);
    prompt.exemplar_ids.push_back(ex.id);
  }
  prompt.text += detail::test_block_header(test, config);
  prompt.text += config.translation_marker;  // bare cue: model translates, then emits SQL
  prompt.byte_length = prompt.text.size();
  detail::check_length(prompt.text, config);
  return prompt;
}

// ---------------------------------------------------------------------------
// Completion parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string trim_line(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> completion_lines(const std::string& text,
                                                 const PromptConfig& config) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim_line(line) == config.exemplar_delimiter) break;
    lines.push_back(line);
  }
  return lines;
}

inline bool starts_with_select(const std::string& line) {
  const std::string t = trim_line(line);
  if (t.size() < 6) return false;
  static const char* kw = "select";
  for (int i = 0; i < 6; ++i)
    if (std::tolower(static_cast<unsigned char>(t[static_cast<std::size_t>(i)])) != kw[i])
      return false;
  return t.size() == 6 || t[6] == ' ' || t[6] == '\t';
}

}  // namespace detail

inline ParsedCompletion parse_completion(const std::string& text, PromptMode mode,
                                         const PromptConfig& config = {}) {
  const auto lines = detail::completion_lines(text, config);
  auto join = [](const std::vector<std::string>& ls, std::size_t begin, std::size_t end) {
    std::string out;
    for (std::size_t i = begin; i < end; ++i) {
      if (!out.empty()) out += " ";
      out += ls[i];
    }
    return flatten_whitespace(out);
  };

  ParsedCompletion parsed;
  if (mode == PromptMode::vanilla) {
    parsed.sql = join(lines, 0, lines.size());
    return parsed;
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string t = detail::trim_line(lines[i]);
    if (t.rfind(config.sql_marker, 0) == 0) {
      parsed.translation = join(lines, 0, i);
      std::string sql = t.substr(config.sql_marker.size());
      for (std::size_t j = i + 1; j < lines.size(); ++j) sql += " " + lines[j];
      parsed.sql = flatten_whitespace(sql);
      return parsed;
    }
  }
  // No marker: accept a trailing bare SELECT as the SQL if one exists.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::starts_with_select(lines[i])) {
      parsed.translation = join(lines, 0, i);
      parsed.sql = join(lines, i, lines.size());
      return parsed;
    }
  }
  throw PromptError("missing-sql", "translation-mode completion has no SQL marker line");
}

}  // namespace xricl
