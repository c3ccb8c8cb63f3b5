#pragma once

// Exemplar pool, evaluation sets, schemas, and per-language translation
// exemplars, loaded from Spider-layout JSON files.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "xricl/sqleval.hpp"

namespace xricl {

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;  // file-missing | malformed-record | dangling-db-id |
                      // duplicate-id | duplicate-language | missing-field
};

enum class ColumnType { text, number, time, boolean, others };

inline ColumnType column_type_from_string(const std::string& s) {
  if (s == "text") return ColumnType::text;
  if (s == "number") return ColumnType::number;
  if (s == "time") return ColumnType::time;
  if (s == "boolean") return ColumnType::boolean;
  return ColumnType::others;
}

inline const char* column_type_name(ColumnType t) {
  switch (t) {
    case ColumnType::text: return "text";
    case ColumnType::number: return "number";
    case ColumnType::time: return "time";
    case ColumnType::boolean: return "boolean";
    case ColumnType::others: return "others";
  }
  return "others";
}

struct ColumnDesc {
  std::string name;
  ColumnType type = ColumnType::others;
};

struct TableDesc {
  std::string name;
  std::vector<ColumnDesc> columns;
};

struct ForeignKey {
  std::string from_table, from_column, to_table, to_column;
};

struct PrimaryKey {
  std::string table, column;
};

struct SchemaDesc {
  std::string db_id;
  std::vector<TableDesc> tables;
  std::vector<ForeignKey> foreign_keys;
  std::vector<PrimaryKey> primary_keys;
};

using SchemaPtr = std::shared_ptr<const SchemaDesc>;

struct Exemplar {
  std::string id;
  std::string utterance;
  SchemaPtr schema;
  std::string sql;
  std::string db_id;
};

struct TestInstance {
  std::string id;
  std::string utterance;
  std::string language;
  SchemaPtr schema;
  std::optional<std::string> gold_sql;
};

struct TranslationExemplar {
  std::string language;
  std::string target_question;
  std::string english_question;
  SchemaPtr schema;
  std::string sql;
};

struct ExemplarPool {
  std::vector<Exemplar> exemplars;
  std::map<std::string, SchemaPtr> schemas;
};

struct ValidationIssue {
  std::string exemplar_id;
  std::string kind;  // sql-parse-error | dangling-db-id | empty-utterance
  std::string detail;
};

// ---------------------------------------------------------------------------
// Loading
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json load_json_file(const std::string& path) {
  if (!std::filesystem::exists(path)) throw CorpusError("file-missing", path);
  std::ifstream in(path);
  if (!in) throw CorpusError("file-missing", path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError("malformed-record", path + ": " + e.what());
  }
}

inline std::string record_field_error(const std::string& path, std::size_t index,
                                      const std::string& field) {
  return path + " record " + std::to_string(index) + " field '" + field + "'";
}

}  // namespace detail

inline std::map<std::string, SchemaPtr> load_schemas(const std::string& tables_path) {
  const nlohmann::json doc = detail::load_json_file(tables_path);
  if (!doc.is_array())
    throw CorpusError("malformed-record", tables_path + ": top level is not an array");
  std::map<std::string, SchemaPtr> out;
  for (std::size_t rec = 0; rec < doc.size(); ++rec) {
    const auto& entry = doc[rec];
    auto require = [&](const char* key) -> const nlohmann::json& {
      if (!entry.contains(key))
        throw CorpusError("malformed-record", detail::record_field_error(tables_path, rec, key));
      return entry[key];
    };
    SchemaDesc schema;
    schema.db_id = require("db_id").get<std::string>();

    const auto& table_names = require("table_names_original");
    const auto& column_names = require("column_names_original");
    const auto& column_types = require("column_types");
    schema.tables.resize(table_names.size());
    for (std::size_t t = 0; t < table_names.size(); ++t)
      schema.tables[t].name = table_names[t].get<std::string>();

    // flattened column index -> (table index, column name); index 0 is the
    // synthetic "*" column with table index -1
    std::vector<std::pair<int, std::string>> flat;
    flat.reserve(column_names.size());
    for (std::size_t c = 0; c < column_names.size(); ++c) {
      const auto& pair = column_names[c];
      if (!pair.is_array() || pair.size() != 2)
        throw CorpusError("malformed-record",
                          detail::record_field_error(tables_path, rec, "column_names_original"));
      const int table_index = pair[0].get<int>();
      const std::string name = pair[1].get<std::string>();
      flat.emplace_back(table_index, name);
      if (table_index < 0) continue;  // "*" column
      if (static_cast<std::size_t>(table_index) >= schema.tables.size())
        throw CorpusError("malformed-record",
                          detail::record_field_error(tables_path, rec, "column_names_original"));
      ColumnDesc col;
      col.name = name;
      if (c < column_types.size())
        col.type = column_type_from_string(column_types[c].get<std::string>());
      schema.tables[static_cast<std::size_t>(table_index)].columns.push_back(std::move(col));
    }

    auto resolve_column = [&](int flat_index, const char* key) -> std::pair<std::string, std::string> {
      if (flat_index < 0 || static_cast<std::size_t>(flat_index) >= flat.size() ||
          flat[static_cast<std::size_t>(flat_index)].first < 0)
        throw CorpusError("malformed-record", detail::record_field_error(tables_path, rec, key));
      const auto& [tidx, cname] = flat[static_cast<std::size_t>(flat_index)];
      return {schema.tables[static_cast<std::size_t>(tidx)].name, cname};
    };

    if (entry.contains("foreign_keys")) {
      for (const auto& fk : entry["foreign_keys"]) {
        if (!fk.is_array() || fk.size() != 2)
          throw CorpusError("malformed-record",
                            detail::record_field_error(tables_path, rec, "foreign_keys"));
        auto [ft, fc] = resolve_column(fk[0].get<int>(), "foreign_keys");
        auto [tt, tc] = resolve_column(fk[1].get<int>(), "foreign_keys");
        schema.foreign_keys.push_back({ft, fc, tt, tc});
      }
    }
    if (entry.contains("primary_keys")) {
      for (const auto& pk : entry["primary_keys"]) {
        auto [t, c] = resolve_column(pk.get<int>(), "primary_keys");
        schema.primary_keys.push_back({t, c});
      }
    }

    std::set<std::string> seen_tables;
    bool any_column = false;
    for (const auto& table : schema.tables) {
      if (!seen_tables.insert(table.name).second)
        throw CorpusError("malformed-record", tables_path + ": duplicate table name '" +
                                                  table.name + "' in " + schema.db_id);
      any_column = any_column || !table.columns.empty();
    }
    if (schema.tables.empty() || !any_column)
      throw CorpusError("malformed-record",
                        tables_path + ": schema " + schema.db_id + " has no populated table");

    const std::string db_id = schema.db_id;
    out[db_id] = std::make_shared<const SchemaDesc>(std::move(schema));
  }
  return out;
}

inline ExemplarPool load_exemplar_pool(const std::string& examples_path,
                                       const std::string& tables_path) {
  ExemplarPool pool;
  pool.schemas = load_schemas(tables_path);
  const nlohmann::json doc = detail::load_json_file(examples_path);
  if (!doc.is_array())
    throw CorpusError("malformed-record", examples_path + ": top level is not an array");
  std::set<std::string> seen_ids;
  for (std::size_t rec = 0; rec < doc.size(); ++rec) {
    const auto& entry = doc[rec];
    auto require = [&](const char* key) -> std::string {
      if (!entry.contains(key) || !entry[key].is_string())
        throw CorpusError("malformed-record", detail::record_field_error(examples_path, rec, key));
      return entry[key].get<std::string>();
    };
    Exemplar ex;
    ex.id = entry.contains("id") ? entry["id"].get<std::string>() : std::to_string(rec);
    ex.db_id = require("db_id");
    ex.utterance = require("question");
    ex.sql = require("query");
    if (ex.utterance.empty())
      throw CorpusError("malformed-record",
                        detail::record_field_error(examples_path, rec, "question") + " is empty");
    if (!seen_ids.insert(ex.id).second)
      throw CorpusError("duplicate-id", "exemplar id '" + ex.id + "' appears more than once");
    auto schema_it = pool.schemas.find(ex.db_id);
    if (schema_it == pool.schemas.end())
      throw CorpusError("dangling-db-id",
                        "exemplar '" + ex.id + "' references unknown db_id '" + ex.db_id + "'");
    ex.schema = schema_it->second;
    pool.exemplars.push_back(std::move(ex));
  }
  return pool;
}

inline std::vector<TestInstance> load_eval_set(const std::string& path,
                                               const std::string& tables_path,
                                               const std::string& language) {
  if (language.empty()) throw CorpusError("missing-field", "language code is empty");
  const auto schemas = load_schemas(tables_path);
  const nlohmann::json doc = detail::load_json_file(path);
  if (!doc.is_array())
    throw CorpusError("malformed-record", path + ": top level is not an array");
  std::vector<TestInstance> out;
  for (std::size_t rec = 0; rec < doc.size(); ++rec) {
    const auto& entry = doc[rec];
    auto require = [&](const char* key) -> std::string {
      if (!entry.contains(key) || !entry[key].is_string())
        throw CorpusError("malformed-record", detail::record_field_error(path, rec, key));
      return entry[key].get<std::string>();
    };
    TestInstance inst;
    inst.id = entry.contains("id") ? entry["id"].get<std::string>() : std::to_string(rec);
    inst.utterance = require("question");
    inst.language = language;
    const std::string db_id = require("db_id");
    auto schema_it = schemas.find(db_id);
    if (schema_it == schemas.end())
      throw CorpusError("dangling-db-id",
                        "instance '" + inst.id + "' references unknown db_id '" + db_id + "'");
    inst.schema = schema_it->second;
    if (entry.contains("query") && entry["query"].is_string())
      inst.gold_sql = entry["query"].get<std::string>();
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::map<std::string, TranslationExemplar> load_translation_exemplars(
    const std::string& path, const std::map<std::string, SchemaPtr>& schemas) {
  const nlohmann::json doc = detail::load_json_file(path);
  if (!doc.is_array())
    throw CorpusError("malformed-record", path + ": top level is not an array");
  std::map<std::string, TranslationExemplar> out;
  for (std::size_t rec = 0; rec < doc.size(); ++rec) {
    const auto& entry = doc[rec];
    auto require = [&](const char* key) -> std::string {
      if (!entry.contains(key) || !entry[key].is_string() ||
          entry[key].get<std::string>().empty())
        throw CorpusError("missing-field", detail::record_field_error(path, rec, key));
      return entry[key].get<std::string>();
    };
    TranslationExemplar trans;
    trans.language = require("language");
    trans.target_question = require("target_question");
    trans.english_question = require("english_question");
    trans.sql = require("sql");
    const std::string db_id = require("db_id");
    auto schema_it = schemas.find(db_id);
    if (schema_it == schemas.end())
      throw CorpusError("dangling-db-id",
                        "translation exemplar for '" + trans.language +
                            "' references unknown db_id '" + db_id + "'");
    trans.schema = schema_it->second;
    if (out.count(trans.language))
      throw CorpusError("duplicate-language",
                        "more than one translation exemplar for '" + trans.language + "'");
    out[trans.language] = std::move(trans);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Validation and re-serialization
// ---------------------------------------------------------------------------

inline std::vector<ValidationIssue> validate_pool(const ExemplarPool& pool) {
  std::vector<ValidationIssue> issues;
  std::set<std::string> seen_ids;
  for (const auto& ex : pool.exemplars) {
    if (!seen_ids.insert(ex.id).second)
      issues.push_back({ex.id, "duplicate-id", "exemplar id repeated"});
    if (ex.utterance.empty()) issues.push_back({ex.id, "empty-utterance", "utterance is empty"});
    if (!pool.schemas.count(ex.db_id))
      issues.push_back({ex.id, "dangling-db-id", "unknown db_id '" + ex.db_id + "'"});
    else if (ex.schema && ex.schema->db_id != ex.db_id)
      issues.push_back({ex.id, "dangling-db-id", "schema/db_id mismatch"});
    try {
      sql::parse_sql(ex.sql);
    } catch (const std::exception& e) {
      issues.push_back({ex.id, "sql-parse-error", e.what()});
    }
  }
  return issues;
}

inline nlohmann::ordered_json schema_to_json(const SchemaDesc& schema) {
  nlohmann::ordered_json entry;
  entry["db_id"] = schema.db_id;
  nlohmann::ordered_json table_names = nlohmann::ordered_json::array();
  nlohmann::ordered_json column_names = nlohmann::ordered_json::array();
  nlohmann::ordered_json column_types = nlohmann::ordered_json::array();
  column_names.push_back({-1, "*"});
  column_types.push_back("text");
  std::map<std::string, std::map<std::string, int>> flat_index;  // table -> col -> index
  int next = 1;
  for (std::size_t t = 0; t < schema.tables.size(); ++t) {
    table_names.push_back(schema.tables[t].name);
    for (const auto& col : schema.tables[t].columns) {
      column_names.push_back({static_cast<int>(t), col.name});
      column_types.push_back(column_type_name(col.type));
      flat_index[schema.tables[t].name][col.name] = next++;
    }
  }
  nlohmann::ordered_json fks = nlohmann::ordered_json::array();
  for (const auto& fk : schema.foreign_keys)
    fks.push_back({flat_index.at(fk.from_table).at(fk.from_column),
                   flat_index.at(fk.to_table).at(fk.to_column)});
  nlohmann::ordered_json pks = nlohmann::ordered_json::array();
  for (const auto& pk : schema.primary_keys) pks.push_back(flat_index.at(pk.table).at(pk.column));
  entry["table_names_original"] = std::move(table_names);
  entry["column_names_original"] = std::move(column_names);
  entry["column_types"] = std::move(column_types);
  entry["foreign_keys"] = std::move(fks);
  entry["primary_keys"] = std::move(pks);
  return entry;
}

// Spider-layout re-serialization; load(save(pool)) reproduces the pool.
inline void save_exemplar_pool(const ExemplarPool& pool, const std::string& examples_path,
                               const std::string& tables_path) {
  nlohmann::ordered_json tables = nlohmann::ordered_json::array();
  for (const auto& [db_id, schema] : pool.schemas) tables.push_back(schema_to_json(*schema));
  nlohmann::ordered_json examples = nlohmann::ordered_json::array();
  for (const auto& ex : pool.exemplars) {
    nlohmann::ordered_json entry;
    entry["id"] = ex.id;
    entry["db_id"] = ex.db_id;
    entry["question"] = ex.utterance;
    entry["query"] = ex.sql;
    examples.push_back(std::move(entry));
  }
  std::ofstream tout(tables_path);
  if (!tout) throw CorpusError("file-missing", "cannot write " + tables_path);
  tout << tables.dump(1) << "\n";
  std::ofstream eout(examples_path);
  if (!eout) throw CorpusError("file-missing", "cannot write " + examples_path);
  eout << examples.dump(1) << "\n";
}

inline bool pools_equal(const ExemplarPool& a, const ExemplarPool& b) {
  if (a.exemplars.size() != b.exemplars.size() || a.schemas.size() != b.schemas.size())
    return false;
  for (std::size_t i = 0; i < a.exemplars.size(); ++i) {
    const auto& x = a.exemplars[i];
    const auto& y = b.exemplars[i];
    if (x.id != y.id || x.utterance != y.utterance || x.sql != y.sql || x.db_id != y.db_id)
      return false;
  }
  for (const auto& [db_id, schema] : a.schemas) {
    auto it = b.schemas.find(db_id);
    if (it == b.schemas.end()) return false;
    const SchemaDesc& s = *schema;
    const SchemaDesc& t = *it->second;
    if (s.tables.size() != t.tables.size() || s.foreign_keys.size() != t.foreign_keys.size() ||
        s.primary_keys.size() != t.primary_keys.size())
      return false;
    for (std::size_t i = 0; i < s.tables.size(); ++i) {
      if (s.tables[i].name != t.tables[i].name ||
          s.tables[i].columns.size() != t.tables[i].columns.size())
        return false;
      for (std::size_t c = 0; c < s.tables[i].columns.size(); ++c)
        if (s.tables[i].columns[c].name != t.tables[i].columns[c].name ||
            s.tables[i].columns[c].type != t.tables[i].columns[c].type)
          return false;
    }
  }
  return true;
}

}  // namespace xricl
