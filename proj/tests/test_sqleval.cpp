#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>
#include <sqlite3.h>

#include "xricl/sqleval.hpp"
#include "xricl/util.hpp"

using namespace xricl::sql;

namespace {

std::string fixture(const char* name) {
  return std::string(XRICL_TEST_DATA_DIR) + "/" + name;
}

// Small random query generator for grammar-closure properties.
std::string random_query(xricl::SplitMixRng& rng, int depth = 0) {
  static const char* tables[] = {"singer", "concert", "stadium", "people"};
  static const char* cols[] = {"name", "age", "capacity", "year", "city"};
  auto table = [&] { return tables[rng.next_u64() % 4]; };
  auto col = [&] { return cols[rng.next_u64() % 5]; };
  auto agg = [&]() -> std::string {
    static const char* aggs[] = {"max", "min", "count", "sum", "avg"};
    return aggs[rng.next_u64() % 5];
  };
  const std::string t1 = table();
  std::string q = "SELECT ";
  if (rng.next_double() < 0.2) q += "DISTINCT ";
  const int items = 1 + static_cast<int>(rng.next_u64() % 2);
  for (int i = 0; i < items; ++i) {
    if (i) q += ", ";
    const double roll = rng.next_double();
    if (roll < 0.3) q += agg() + "(" + col() + ")";
    else if (roll < 0.4) q += "count(*)";
    else q += col();
  }
  q += " FROM " + t1;
  if (rng.next_double() < 0.3) {
    const std::string t2 = table();
    q += " JOIN " + t2 + " ON " + t1 + ".id = " + t2 + ".id";
  }
  if (rng.next_double() < 0.6) {
    q += " WHERE ";
    const int conds = 1 + static_cast<int>(rng.next_u64() % 2);
    for (int i = 0; i < conds; ++i) {
      if (i) q += rng.next_double() < 0.5 ? " AND " : " OR ";
      const double roll = rng.next_double();
      if (roll < 0.15 && depth < 1) {
        q += std::string(col()) + " IN (" + random_query(rng, depth + 1) + ")";
      } else if (roll < 0.3) {
        q += std::string(col()) + " BETWEEN 1 AND 10";
      } else if (roll < 0.4) {
        q += std::string(col()) + " LIKE 'x%'";
      } else {
        static const char* ops[] = {"=", "!=", "<", "<=", ">", ">="};
        q += std::string(col()) + " " + ops[rng.next_u64() % 6] + " " +
             std::to_string(rng.next_u64() % 100);
      }
    }
  }
  if (rng.next_double() < 0.3) {
    q += " GROUP BY " + std::string(col());
    if (rng.next_double() < 0.5) q += " HAVING count(*) > 3";
  }
  if (rng.next_double() < 0.3) {
    q += " ORDER BY " + std::string(col());
    q += rng.next_double() < 0.5 ? " DESC" : " ASC";
  }
  if (rng.next_double() < 0.2) q += " LIMIT 5";
  if (depth == 0 && rng.next_double() < 0.15) {
    static const char* setops[] = {"UNION", "INTERSECT", "EXCEPT"};
    q += " " + std::string(setops[rng.next_u64() % 3]) + " " + random_query(rng, depth + 1);
  }
  return q;
}

}  // namespace

TEST_CASE("parse recognizes the core spider shapes") {
  const SqlAst ast = parse_sql("SELECT count(*) FROM head WHERE age > 56");
  REQUIRE(ast.core.select_items.size() == 1);
  CHECK(ast.core.select_items[0].agg == AggOp::count);
  CHECK(ast.core.select_items[0].lhs.ref.column == "*");
  REQUIRE(ast.core.from_tables.size() == 1);
  CHECK(ast.core.from_tables[0].table == "head");
  REQUIRE(ast.core.where.has_value());
  CHECK(ast.core.where->kind == Condition::Kind::pred);
  CHECK(ast.core.where->pred.op == CmpOp::gt);

  const SqlAst u = parse_sql("SELECT a FROM t1 UNION SELECT a FROM t2");
  CHECK(u.set_op == SetOp::union_all_of);
  REQUIRE(u.rhs != nullptr);
  CHECK(u.rhs->core.from_tables[0].table == "t2");
}

TEST_CASE("parse error carries offset and expectation") {
  try {
    parse_sql("SELEC x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.begin() == 0);
    CHECK(e.end() == 5);
    CHECK(!e.expected().empty());
  }
  CHECK_THROWS_AS(parse_sql("SELECT FROM t"), ParseError);
  CHECK_THROWS_AS(parse_sql("SELECT a FROM t WHERE"), ParseError);
  CHECK_THROWS_AS(parse_sql("SELECT a FROM t extra junk"), ParseError);
}

TEST_CASE("decompose canonicalizes per the documented rules") {
  auto components = [](const char* q) { return decompose(parse_sql(q)); };
  CHECK(components("SELECT a, b FROM t") == components("SELECT b, a FROM t"));
  CHECK(components("SELECT a FROM t WHERE x = 1") == components("SELECT a FROM t WHERE x = 2"));
  CHECK(components("SELECT a FROM t ORDER BY a DESC, b ASC") !=
        components("SELECT a FROM t ORDER BY b ASC, a DESC"));
  // alias resolution
  CHECK(components("SELECT T1.a FROM t AS T1") == components("SELECT a FROM t"));
  CHECK_THROWS_AS(components("SELECT zz.a FROM t"), UnresolvedAliasError);
}

TEST_CASE("exact match spec examples") {
  CHECK(exact_match("SELECT a FROM t", "SELECT a FROM t").exact_match);
  CHECK(exact_match("SELECT count(*) FROM t WHERE a > 5",
                    "select COUNT(*) from t where a > 100")
            .exact_match);
  CHECK_FALSE(exact_match("SELECT count(*) FROM t WHERE a > 5",
                          "SELECT count(*) FROM t WHERE a > 5 GROUP BY b")
                  .exact_match);
  const auto bad_pred = exact_match("SELECT a FROM t", "SELEC x");
  CHECK_FALSE(bad_pred.exact_match);
  CHECK(bad_pred.failure_reason == FailureReason::pred_parse_error);
  const auto bad_gold = exact_match("SELEC x", "SELECT a FROM t");
  CHECK(bad_gold.failure_reason == FailureReason::gold_parse_error);
}

TEST_CASE("exact match is reflexive and symmetric on the corpus") {
  std::ifstream in(fixture("em_verdicts.jsonl"));
  REQUIRE(in.good());
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto entry = nlohmann::json::parse(line);
    const std::string gold = entry["gold"];
    const std::string pred = entry["pred"];
    // reflexivity on every parseable query
    for (const auto& q : {gold, pred}) {
      try {
        parse_sql(q);
      } catch (const std::exception&) {
        continue;
      }
      CHECK(exact_match(q, q).exact_match);
    }
    // symmetry when both parse
    try {
      parse_sql(gold);
      parse_sql(pred);
    } catch (const std::exception&) {
      continue;
    }
    CHECK(exact_match(gold, pred).exact_match == exact_match(pred, gold).exact_match);
  }
}

TEST_CASE("verdict corpus agrees verbatim") {
  std::ifstream in(fixture("em_verdicts.jsonl"));
  REQUIRE(in.good());
  std::string line;
  std::size_t cases = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto entry = nlohmann::json::parse(line);
    const auto verdict = exact_match(entry["gold"].get<std::string>(),
                                     entry["pred"].get<std::string>());
    INFO(entry.value("note", "") << ": " << entry["gold"] << " vs " << entry["pred"]);
    CHECK(verdict.exact_match == entry["expected_em"].get<bool>());
    if (entry.contains("expected_reason"))
      CHECK(failure_reason_name(verdict.failure_reason) ==
            entry["expected_reason"].get<std::string>());
    ++cases;
  }
  CHECK(cases >= 30);
}

TEST_CASE("decompose-print-decompose is a fixed point") {
  xricl::SplitMixRng rng(2024);
  for (int i = 0; i < 300; ++i) {
    const std::string q = random_query(rng);
    SqlComponents d1;
    try {
      d1 = decompose(parse_sql(q));
    } catch (const UnresolvedAliasError&) {
      continue;  // generator may qualify a column with a table not in FROM
    }
    const std::string printed = print_components(d1);
    INFO(q << "\n -> " << printed);
    const SqlComponents d2 = decompose(parse_sql(printed));
    CHECK(d1 == d2);
  }
}

TEST_CASE("template extraction follows the substitution rules") {
  CHECK(extract_template("SELECT name FROM head WHERE age > 56").skeleton ==
        "SELECT _col_ FROM _tab_ WHERE _col_ > _val_");
  CHECK(extract_template("SELECT count(*) FROM t").skeleton == "SELECT count(*) FROM _tab_");
  // identifier- and literal-insensitive
  CHECK(extract_template("SELECT name FROM head WHERE age > 56").skeleton ==
        extract_template("SELECT title FROM course WHERE credits > 3").skeleton);
}

TEST_CASE("template extraction is idempotent") {
  xricl::SplitMixRng rng(77);
  for (int i = 0; i < 200; ++i) {
    const std::string q = random_query(rng);
    const std::string t = extract_template(q).skeleton;
    INFO(q << "\n -> " << t);
    CHECK(extract_template(t).skeleton == t);
  }
}

TEST_CASE("exact match implies equal templates") {
  std::ifstream in(fixture("em_verdicts.jsonl"));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto entry = nlohmann::json::parse(line);
    const std::string gold = entry["gold"];
    const std::string pred = entry["pred"];
    if (!exact_match(gold, pred).exact_match) continue;
    CHECK(extract_template(gold) == extract_template(pred));
  }
}

TEST_CASE("value insensitivity holds under literal rewriting") {
  const std::pair<const char*, const char*> rewrites[] = {
      {"SELECT a FROM t WHERE b = 1 AND c LIKE 'x%'",
       "SELECT a FROM t WHERE b = 987 AND c LIKE 'totally-different%'"},
      {"SELECT a FROM t WHERE b BETWEEN 1 AND 5 LIMIT 3",
       "SELECT a FROM t WHERE b BETWEEN 100 AND 500 LIMIT 99"},
      {"SELECT a FROM t WHERE b IN (SELECT b FROM u WHERE c = 'v')",
       "SELECT a FROM t WHERE b IN (SELECT b FROM u WHERE c = 'w')"},
  };
  for (const auto& [gold, pred] : rewrites) {
    INFO(gold);
    CHECK(exact_match(gold, pred).exact_match);
  }
}

TEST_CASE("execution match against a sqlite fixture") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "xricl_sqleval_test";
  fs::create_directories(dir);
  const std::string db_path = (dir / "bench.sqlite").string();
  std::remove(db_path.c_str());
  sqlite3* db = nullptr;
  REQUIRE(sqlite3_open(db_path.c_str(), &db) == SQLITE_OK);
  const char* ddl =
      "CREATE TABLE head (head_id INTEGER, name TEXT, age REAL);"
      "INSERT INTO head VALUES (1,'Alice',60),(2,'Bob',50),(3,'Carol',58);"
      "CREATE TABLE department (dept_id INTEGER, name TEXT);"
      "INSERT INTO department VALUES (1,'HR'),(2,'Ops');"
      "CREATE TABLE budget (dept_id INTEGER, amount REAL);"
      "INSERT INTO budget VALUES (1, 10.5),(2, 20.25);";
  REQUIRE(sqlite3_exec(db, ddl, nullptr, nullptr, nullptr) == SQLITE_OK);
  sqlite3_close(db);

  SECTION("pred equals gold") {
    const auto v = execution_match(db_path, "SELECT count(*) FROM head WHERE age > 56",
                                   "SELECT count(*) FROM head WHERE age > 56");
    REQUIRE(v.execution_match.has_value());
    CHECK(*v.execution_match);
  }
  SECTION("same rows different order without gold ORDER BY") {
    const auto v = execution_match(db_path, "SELECT name FROM head",
                                   "SELECT name FROM head ORDER BY age");
    REQUIRE(v.execution_match.has_value());
    CHECK(*v.execution_match);
  }
  SECTION("unknown column in pred") {
    const auto v = execution_match(db_path, "SELECT name FROM head",
                                   "SELECT nonexistent FROM head");
    REQUIRE(v.execution_match.has_value());
    CHECK_FALSE(*v.execution_match);
    CHECK(v.failure_reason == FailureReason::pred_exec_error);
  }
  SECTION("gold ORDER BY forces ordered comparison") {
    const auto v = execution_match(db_path, "SELECT name FROM head ORDER BY age",
                                   "SELECT name FROM head ORDER BY age DESC");
    REQUIRE(v.execution_match.has_value());
    CHECK_FALSE(*v.execution_match);
  }
  SECTION("missing database") {
    const auto v = execution_match((dir / "missing.sqlite").string(), "SELECT name FROM head",
                                   "SELECT name FROM head");
    CHECK_FALSE(v.execution_match.has_value());
    CHECK(v.failure_reason == FailureReason::db_missing);
  }
  SECTION("gold execution failure surfaces") {
    CHECK_THROWS_AS(execution_match(db_path, "SELECT nope FROM head", "SELECT name FROM head"),
                    GoldExecutionError);
  }
  SECTION("float cells compare with relative tolerance") {
    const auto v = execution_match(db_path, "SELECT amount FROM budget",
                                   "SELECT amount + 0.0000001 FROM budget");
    REQUIRE(v.execution_match.has_value());
    CHECK(*v.execution_match);
  }
}
