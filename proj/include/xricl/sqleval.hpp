#pragma once

// Spider-dialect SQL: parser, canonical clause decomposition, value-insensitive
// exact match, template extraction, and execution comparison over SQLite files.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <sqlite3.h>

#include "xricl/util.hpp"

namespace xricl::sql {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t begin, std::size_t end, std::vector<std::string> expected,
             const std::string& found)
      : std::runtime_error("SQL parse error at offset " + std::to_string(begin) + "-" +
                           std::to_string(end) + ": found '" + found + "', expected " +
                           join_expected(expected)),
        begin_(begin),
        end_(end),
        expected_(std::move(expected)) {}

  std::size_t begin() const { return begin_; }
  std::size_t end() const { return end_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string join_expected(const std::vector<std::string>& ex) {
    std::string out = "{";
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (i) out += ", ";
      out += ex[i];
    }
    return out + "}";
  }

  std::size_t begin_;
  std::size_t end_;
  std::vector<std::string> expected_;
};

class UnresolvedAliasError : public std::runtime_error {
 public:
  explicit UnresolvedAliasError(const std::string& alias)
      : std::runtime_error("unresolvable table or alias: " + alias) {}
};

class GoldExecutionError : public std::runtime_error {
 public:
  explicit GoldExecutionError(const std::string& what)
      : std::runtime_error("gold query failed to execute: " + what) {}
};

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

enum class AggOp { none, max, min, count, sum, avg };
enum class ArithOp { none, add, sub, mul, div };
enum class SetOp { none, union_all_of, intersect, except };
enum class CmpOp { eq, ne, lt, le, gt, ge, between, not_between, in, not_in, like, not_like, exists, not_exists };
enum class OrderDir { asc, desc };

struct ColumnRef {
  std::string table;   // alias or table name, may be empty; lowercased
  std::string column;  // lowercased; "*" for star
};

struct ColumnTerm {
  AggOp agg = AggOp::none;
  bool distinct = false;
  ColumnRef ref;
};

struct SelectStmt;

// col_unit, optionally an arithmetic combination of two, optionally aggregated.
struct ValueExpr {
  AggOp agg = AggOp::none;
  bool distinct = false;
  ColumnTerm lhs;
  ArithOp arith = ArithOp::none;
  ColumnTerm rhs;  // valid iff arith != none
};

struct Operand {
  enum class Kind { literal, column, subquery, literal_list };
  Kind kind = Kind::literal;
  std::string literal;                     // raw literal text
  ValueExpr column;                        // kind == column
  std::shared_ptr<SelectStmt> subquery;    // kind == subquery
  std::vector<std::string> literal_list;   // kind == literal_list (IN lists)
};

struct Predicate {
  ValueExpr lhs;   // unused for exists
  CmpOp op = CmpOp::eq;
  Operand rhs1;
  Operand rhs2;    // BETWEEN upper bound
};

struct Condition {
  enum class Kind { pred, conj, disj };
  Kind kind = Kind::pred;
  Predicate pred;
  std::vector<Condition> children;
};

struct TableSource {
  std::string table;                     // empty for derived tables
  std::string alias;                     // may be empty
  std::shared_ptr<SelectStmt> subquery;  // derived table
};

struct OrderItem {
  ValueExpr expr;
  OrderDir dir = OrderDir::asc;
};

struct SelectCore {
  bool distinct = false;
  std::vector<ValueExpr> select_items;
  std::vector<TableSource> from_tables;
  bool from_uses_join = false;
  std::vector<Predicate> join_conditions;  // ON clauses
  std::optional<Condition> where;
  std::vector<ColumnRef> group_by;
  std::optional<Condition> having;
  std::vector<OrderItem> order_by;
  std::optional<std::string> limit;  // literal text
};

struct SelectStmt {
  SelectCore core;
  SetOp set_op = SetOp::none;
  std::shared_ptr<SelectStmt> rhs;  // right side of the set operation
};

using SqlAst = SelectStmt;

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  enum class Kind { word, number, string, symbol, end };
  Kind kind = Kind::end;
  std::string text;  // lowercased for words, verbatim otherwise
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto is_ident_start = [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           static_cast<unsigned char>(c) >= 0x80;
  };
  auto is_ident = [&](char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
  };
  while (i < n) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    if (is_ident_start(c)) {
      while (i < n && is_ident(text[i])) ++i;
      out.push_back({Token::Kind::word, ascii_lower(text.substr(begin, i - begin)), begin, i});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
      out.push_back({Token::Kind::number, std::string(text.substr(begin, i - begin)), begin, i});
      continue;
    }
    if (c == '\'' || c == '"' || c == '`') {
      const char quote = c;
      ++i;
      std::string value;
      bool closed = false;
      while (i < n) {
        if (text[i] == quote) {
          if (i + 1 < n && text[i + 1] == quote) {  // doubled quote escape
            value.push_back(quote);
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        value.push_back(text[i]);
        ++i;
      }
      if (!closed) throw ParseError(begin, n, {"closing quote"}, std::string(1, quote));
      if (quote == '`') {  // backquoted identifier
        out.push_back({Token::Kind::word, ascii_lower(value), begin, i});
      } else {
        out.push_back({Token::Kind::string, value, begin, i});
      }
      continue;
    }
    // multi-char operators first
    auto two = text.substr(begin, 2);
    if (two == "!=" || two == "<>" || two == "<=" || two == ">=") {
      i += 2;
      out.push_back({Token::Kind::symbol, two == "<>" ? "!=" : std::string(two), begin, i});
      continue;
    }
    if (std::string_view("(),.*+-/=<>;").find(c) != std::string_view::npos) {
      ++i;
      out.push_back({Token::Kind::symbol, std::string(1, c), begin, i});
      continue;
    }
    throw ParseError(begin, begin + 1, {"token"}, std::string(1, c));
  }
  out.push_back({Token::Kind::end, "", n, n});
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Parser (recursive descent)
// ---------------------------------------------------------------------------

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text), tokens_(tokenize(text)) {}

  SelectStmt parse_query() {
    SelectStmt stmt = parse_select_stmt();
    while (peek().text == ";") advance();
    if (peek().kind != Token::Kind::end) fail({"end of query", "UNION", "INTERSECT", "EXCEPT"});
    return stmt;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t idx = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[idx];
  }
  const Token& advance() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }

  bool accept_word(std::string_view w) {
    if (peek().kind == Token::Kind::word && peek().text == w) {
      advance();
      return true;
    }
    return false;
  }
  bool accept_symbol(std::string_view s) {
    if (peek().kind == Token::Kind::symbol && peek().text == s) {
      advance();
      return true;
    }
    return false;
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail({std::string(w)});
  }
  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail({std::string(s)});
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found =
        t.kind == Token::Kind::end ? "<end>" : std::string(text_.substr(t.begin, t.end - t.begin));
    throw ParseError(t.begin, t.end, std::move(expected), found);
  }

  static bool is_clause_boundary(const Token& t) {
    if (t.kind == Token::Kind::end) return true;
    if (t.kind != Token::Kind::word) return false;
    static const std::set<std::string> kBoundaries = {
        "from", "where", "group", "having", "order", "limit",
        "union", "intersect", "except", "on", "and", "or", "join", "as"};
    return kBoundaries.count(t.text) > 0;
  }

  SelectStmt parse_select_stmt() {
    SelectStmt stmt;
    stmt.core = parse_select_core();
    if (accept_word("union")) {
      accept_word("all");  // UNION ALL folds to union for comparison purposes
      stmt.set_op = SetOp::union_all_of;
      stmt.rhs = std::make_shared<SelectStmt>(parse_select_stmt());
    } else if (accept_word("intersect")) {
      stmt.set_op = SetOp::intersect;
      stmt.rhs = std::make_shared<SelectStmt>(parse_select_stmt());
    } else if (accept_word("except")) {
      stmt.set_op = SetOp::except;
      stmt.rhs = std::make_shared<SelectStmt>(parse_select_stmt());
    }
    return stmt;
  }

  SelectCore parse_select_core() {
    SelectCore core;
    expect_word("select");
    core.distinct = accept_word("distinct");
    core.select_items.push_back(parse_value_expr());
    while (accept_symbol(",")) core.select_items.push_back(parse_value_expr());
    expect_word("from");
    parse_from(core);
    if (accept_word("where")) core.where = parse_condition();
    if (accept_word("group")) {
      expect_word("by");
      core.group_by.push_back(parse_column_ref());
      while (accept_symbol(",")) core.group_by.push_back(parse_column_ref());
      if (accept_word("having")) core.having = parse_condition();
    }
    if (accept_word("order")) {
      expect_word("by");
      core.order_by.push_back(parse_order_item());
      while (accept_symbol(",")) core.order_by.push_back(parse_order_item());
    }
    if (accept_word("limit")) {
      const Token& t = peek();
      if (t.kind == Token::Kind::number ||
          (t.kind == Token::Kind::word && t.text == "_val_")) {
        core.limit = t.text;
        advance();
      } else {
        fail({"number"});
      }
    }
    return core;
  }

  void parse_from(SelectCore& core) {
    core.from_tables.push_back(parse_table_source());
    for (;;) {
      if (accept_symbol(",")) {
        core.from_tables.push_back(parse_table_source());
        continue;
      }
      // INNER/LEFT/RIGHT/FULL/CROSS [OUTER] JOIN all read as a plain join
      std::size_t save = pos_;
      if (accept_word("inner") || accept_word("left") || accept_word("right") ||
          accept_word("full") || accept_word("cross")) {
        accept_word("outer");
        if (!accept_word("join")) {
          pos_ = save;
          break;
        }
      } else if (!accept_word("join")) {
        break;
      }
      core.from_uses_join = true;
      core.from_tables.push_back(parse_table_source());
      if (accept_word("on")) {
        core.join_conditions.push_back(parse_predicate());
        while (accept_word("and")) core.join_conditions.push_back(parse_predicate());
      }
    }
  }

  TableSource parse_table_source() {
    TableSource src;
    if (accept_symbol("(")) {
      src.subquery = std::make_shared<SelectStmt>(parse_select_stmt());
      expect_symbol(")");
    } else {
      const Token& t = peek();
      if (t.kind != Token::Kind::word) fail({"table name", "("});
      src.table = t.text;
      advance();
    }
    if (accept_word("as")) {
      const Token& t = peek();
      if (t.kind != Token::Kind::word) fail({"alias"});
      src.alias = t.text;
      advance();
    } else if (peek().kind == Token::Kind::word && !is_clause_boundary(peek())) {
      src.alias = peek().text;
      advance();
    }
    return src;
  }

  static std::optional<AggOp> agg_from_word(const std::string& w) {
    if (w == "max") return AggOp::max;
    if (w == "min") return AggOp::min;
    if (w == "count") return AggOp::count;
    if (w == "sum") return AggOp::sum;
    if (w == "avg") return AggOp::avg;
    return std::nullopt;
  }

  ColumnRef parse_column_ref() {
    ColumnRef ref;
    if (accept_symbol("*")) {
      ref.column = "*";
      return ref;
    }
    const Token& t = peek();
    if (t.kind != Token::Kind::word) fail({"column name", "*"});
    ref.column = t.text;
    advance();
    if (accept_symbol(".")) {
      ref.table = ref.column;
      if (accept_symbol("*")) {
        ref.column = "*";
        return ref;
      }
      const Token& c = peek();
      if (c.kind != Token::Kind::word) fail({"column name", "*"});
      ref.column = c.text;
      advance();
    }
    return ref;
  }

  ColumnTerm parse_column_term() {
    ColumnTerm term;
    const Token& t = peek();
    if (t.kind == Token::Kind::word) {
      auto agg = agg_from_word(t.text);
      if (agg && peek(1).kind == Token::Kind::symbol && peek(1).text == "(") {
        term.agg = *agg;
        advance();
        expect_symbol("(");
        term.distinct = accept_word("distinct");
        term.ref = parse_column_ref();
        expect_symbol(")");
        return term;
      }
    }
    term.ref = parse_column_ref();
    return term;
  }

  ValueExpr parse_value_expr() {
    ValueExpr expr;
    const Token& t = peek();
    if (t.kind == Token::Kind::word) {
      auto agg = agg_from_word(t.text);
      if (agg && peek(1).kind == Token::Kind::symbol && peek(1).text == "(") {
        // Could be agg(col) or agg(col op col); parse the inside as a unit.
        advance();
        expect_symbol("(");
        expr.agg = *agg;
        expr.distinct = accept_word("distinct");
        expr.lhs = parse_column_term();
        if (auto op = peek_arith()) {
          expr.arith = *op;
          advance();
          expr.rhs = parse_column_term();
        }
        expect_symbol(")");
        return expr;
      }
    }
    expr.lhs = parse_column_term();
    if (auto op = peek_arith()) {
      expr.arith = *op;
      advance();
      expr.rhs = parse_column_term();
    }
    return expr;
  }

  std::optional<ArithOp> peek_arith() const {
    const Token& t = peek();
    if (t.kind != Token::Kind::symbol) return std::nullopt;
    if (t.text == "+") return ArithOp::add;
    if (t.text == "-") return ArithOp::sub;
    if (t.text == "*") return ArithOp::mul;
    if (t.text == "/") return ArithOp::div;
    return std::nullopt;
  }

  OrderItem parse_order_item() {
    OrderItem item;
    item.expr = parse_value_expr();
    if (accept_word("desc")) item.dir = OrderDir::desc;
    else if (accept_word("asc")) item.dir = OrderDir::asc;
    return item;
  }

  Condition parse_condition() { return parse_or(); }

  Condition parse_or() {
    Condition left = parse_and();
    if (peek().kind != Token::Kind::word || peek().text != "or") return left;
    Condition node;
    node.kind = Condition::Kind::disj;
    node.children.push_back(std::move(left));
    while (accept_word("or")) node.children.push_back(parse_and());
    return node;
  }

  Condition parse_and() {
    Condition left = parse_cond_atom();
    if (peek().kind != Token::Kind::word || peek().text != "and") return left;
    Condition node;
    node.kind = Condition::Kind::conj;
    node.children.push_back(std::move(left));
    while (accept_word("and")) node.children.push_back(parse_cond_atom());
    return node;
  }

  bool looks_like_subquery() const {
    return peek().kind == Token::Kind::symbol && peek().text == "(" &&
           peek(1).kind == Token::Kind::word && peek(1).text == "select";
  }

  bool looks_like_grouped_condition() const {
    // '(' that does not open a subquery starts a parenthesized condition
    // only in condition position; value expressions never start with '('.
    return peek().kind == Token::Kind::symbol && peek().text == "(" && !looks_like_subquery();
  }

  Condition parse_cond_atom() {
    if (looks_like_grouped_condition()) {
      advance();
      Condition inner = parse_condition();
      expect_symbol(")");
      return inner;
    }
    Condition node;
    node.kind = Condition::Kind::pred;
    node.pred = parse_predicate();
    return node;
  }

  Predicate parse_predicate() {
    Predicate pred;
    bool negated = false;
    if (peek().kind == Token::Kind::word && peek().text == "not" &&
        peek(1).kind == Token::Kind::word && peek(1).text == "exists") {
      advance();
      negated = true;
    }
    if (accept_word("exists")) {
      pred.op = negated ? CmpOp::not_exists : CmpOp::exists;
      pred.rhs1 = parse_subquery_operand();
      return pred;
    }
    pred.lhs = parse_value_expr();
    negated = accept_word("not");
    if (accept_word("between")) {
      pred.op = negated ? CmpOp::not_between : CmpOp::between;
      pred.rhs1 = parse_operand();
      expect_word("and");
      pred.rhs2 = parse_operand();
      return pred;
    }
    if (accept_word("in")) {
      pred.op = negated ? CmpOp::not_in : CmpOp::in;
      if (looks_like_subquery()) {
        pred.rhs1 = parse_subquery_operand();
      } else {
        expect_symbol("(");
        Operand list;
        list.kind = Operand::Kind::literal_list;
        list.literal_list.push_back(parse_literal_text());
        while (accept_symbol(",")) list.literal_list.push_back(parse_literal_text());
        expect_symbol(")");
        pred.rhs1 = std::move(list);
      }
      return pred;
    }
    if (accept_word("like")) {
      pred.op = negated ? CmpOp::not_like : CmpOp::like;
      pred.rhs1 = parse_operand();
      return pred;
    }
    if (negated) fail({"BETWEEN", "IN", "LIKE"});
    const Token& t = peek();
    if (t.kind != Token::Kind::symbol) fail({"comparison operator"});
    if (t.text == "=") pred.op = CmpOp::eq;
    else if (t.text == "!=") pred.op = CmpOp::ne;
    else if (t.text == "<") pred.op = CmpOp::lt;
    else if (t.text == "<=") pred.op = CmpOp::le;
    else if (t.text == ">") pred.op = CmpOp::gt;
    else if (t.text == ">=") pred.op = CmpOp::ge;
    else fail({"=", "!=", "<", "<=", ">", ">="});
    advance();
    pred.rhs1 = parse_operand();
    return pred;
  }

  Operand parse_subquery_operand() {
    expect_symbol("(");
    Operand op;
    op.kind = Operand::Kind::subquery;
    op.subquery = std::make_shared<SelectStmt>(parse_select_stmt());
    expect_symbol(")");
    return op;
  }

  std::string parse_literal_text() {
    const Token& t = peek();
    if (t.kind == Token::Kind::number) {
      advance();
      return t.text;
    }
    if (t.kind == Token::Kind::string) {
      advance();
      return "'" + t.text + "'";
    }
    if (t.kind == Token::Kind::symbol && (t.text == "-" || t.text == "+")) {
      const std::string sign = t.text;
      advance();
      const Token& num = peek();
      if (num.kind != Token::Kind::number) fail({"number"});
      advance();
      return (sign == "-" ? "-" : "") + num.text;
    }
    if (t.kind == Token::Kind::word && t.text == "_val_") {
      advance();
      return "_val_";
    }
    fail({"literal"});
  }

  Operand parse_operand() {
    const Token& t = peek();
    if (looks_like_subquery()) return parse_subquery_operand();
    if (t.kind == Token::Kind::number || t.kind == Token::Kind::string ||
        (t.kind == Token::Kind::symbol && (t.text == "-" || t.text == "+")) ||
        (t.kind == Token::Kind::word && t.text == "_val_")) {
      Operand op;
      op.kind = Operand::Kind::literal;
      op.literal = parse_literal_text();
      return op;
    }
    if (t.kind == Token::Kind::word) {
      Operand op;
      op.kind = Operand::Kind::column;
      op.column = parse_value_expr();
      return op;
    }
    fail({"literal", "column", "subquery"});
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SqlAst parse_sql(std::string_view text) {
  detail::Parser parser(text);
  return parser.parse_query();
}

// ---------------------------------------------------------------------------
// Canonical decomposition
// ---------------------------------------------------------------------------

struct CondCanon {
  enum class Kind { pred, conj, disj };
  Kind kind = Kind::pred;
  std::string pred;
  std::vector<CondCanon> children;

  std::string render() const {
    if (kind == Kind::pred) return pred;
    std::string out = kind == Kind::conj ? "and(" : "or(";
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) out += " & ";
      out += children[i].render();
    }
    return out + ")";
  }

  bool operator==(const CondCanon& other) const { return render() == other.render(); }
};

struct SqlComponents {
  bool distinct = false;
  std::set<std::string> select_items;
  std::set<std::string> from_tables;
  std::set<std::string> join_conditions;
  std::optional<CondCanon> where;
  std::set<std::string> group_by;
  std::optional<CondCanon> having;
  std::vector<std::string> order_by;
  bool has_limit = false;
  SetOp set_op = SetOp::none;
  std::shared_ptr<SqlComponents> set_rhs;

  bool operator==(const SqlComponents& other) const {
    auto opt_render = [](const std::optional<CondCanon>& c) {
      return c ? c->render() : std::string();
    };
    if (distinct != other.distinct || select_items != other.select_items ||
        from_tables != other.from_tables || join_conditions != other.join_conditions ||
        opt_render(where) != opt_render(other.where) || group_by != other.group_by ||
        opt_render(having) != opt_render(other.having) || order_by != other.order_by ||
        has_limit != other.has_limit || set_op != other.set_op)
      return false;
    if ((set_rhs == nullptr) != (other.set_rhs == nullptr)) return false;
    return set_rhs == nullptr || *set_rhs == *other.set_rhs;
  }
  bool operator!=(const SqlComponents& other) const { return !(*this == other); }
};

inline SqlComponents decompose(const SqlAst& ast);
inline std::string print_components(const SqlComponents& c);

namespace detail {

inline const char* agg_name(AggOp op) {
  switch (op) {
    case AggOp::max: return "max";
    case AggOp::min: return "min";
    case AggOp::count: return "count";
    case AggOp::sum: return "sum";
    case AggOp::avg: return "avg";
    default: return "";
  }
}

inline const char* arith_symbol(ArithOp op) {
  switch (op) {
    case ArithOp::add: return "+";
    case ArithOp::sub: return "-";
    case ArithOp::mul: return "*";
    case ArithOp::div: return "/";
    default: return "";
  }
}

// Alias environment for one select core.
struct Scope {
  std::map<std::string, std::string> alias_to_table;  // includes identity entries
  std::string sole_table;                             // set when exactly one named table
};

inline Scope make_scope(const SelectCore& core) {
  Scope scope;
  int named = 0;
  for (const auto& src : core.from_tables) {
    std::string canonical;
    if (src.subquery) {
      canonical = src.alias.empty() ? "(derived)" : src.alias;
    } else {
      canonical = src.table;
      scope.alias_to_table[src.table] = src.table;
      ++named;
      scope.sole_table = src.table;
    }
    if (!src.alias.empty()) scope.alias_to_table[src.alias] = canonical;
  }
  if (named != 1 || core.from_tables.size() != 1) scope.sole_table.clear();
  return scope;
}

inline ColumnRef resolve_ref(const ColumnRef& ref, const Scope& scope) {
  ColumnRef out = ref;
  if (!out.table.empty()) {
    auto it = scope.alias_to_table.find(out.table);
    if (it == scope.alias_to_table.end()) throw UnresolvedAliasError(out.table);
    out.table = it->second;
  } else if (!scope.sole_table.empty() && out.column != "*") {
    out.table = scope.sole_table;  // unambiguous: single-table FROM
  }
  return out;
}

inline std::string canon_ref(const ColumnRef& ref, const Scope& scope) {
  const ColumnRef r = resolve_ref(ref, scope);
  if (r.column == "*") return "*";
  return r.table.empty() ? r.column : r.table + "." + r.column;
}

inline std::string canon_term(const ColumnTerm& term, const Scope& scope) {
  const std::string inner = canon_ref(term.ref, scope);
  if (term.agg == AggOp::none) return inner;
  return std::string(agg_name(term.agg)) + "(" + (term.distinct ? "distinct " : "") + inner + ")";
}

inline std::string canon_value_expr(const ValueExpr& expr, const Scope& scope) {
  std::string inner = canon_term(expr.lhs, scope);
  if (expr.arith != ArithOp::none)
    inner += std::string(" ") + arith_symbol(expr.arith) + " " + canon_term(expr.rhs, scope);
  if (expr.agg == AggOp::none) return inner;
  return std::string(agg_name(expr.agg)) + "(" + (expr.distinct ? "distinct " : "") + inner + ")";
}

inline std::string canon_operand(const Operand& op, const Scope& scope) {
  switch (op.kind) {
    case Operand::Kind::literal:
      return "_val_";
    case Operand::Kind::column:
      return canon_value_expr(op.column, scope);
    case Operand::Kind::subquery:
      return "(" + print_components(decompose(*op.subquery)) + ")";
    case Operand::Kind::literal_list: {
      std::string out = "(";
      for (std::size_t i = 0; i < op.literal_list.size(); ++i) {
        if (i) out += ", ";
        out += "_val_";
      }
      return out + ")";
    }
  }
  return "";
}

inline const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::eq: return "=";
    case CmpOp::ne: return "!=";
    case CmpOp::lt: return "<";
    case CmpOp::le: return "<=";
    case CmpOp::gt: return ">";
    case CmpOp::ge: return ">=";
    case CmpOp::in: return "in";
    case CmpOp::not_in: return "not in";
    case CmpOp::like: return "like";
    case CmpOp::not_like: return "not like";
    case CmpOp::between: return "between";
    case CmpOp::not_between: return "not between";
    case CmpOp::exists: return "exists";
    case CmpOp::not_exists: return "not exists";
  }
  return "";
}

// Canonical predicate; BETWEEN expands to a conjunction, handled by the caller.
inline std::string canon_simple_pred(const Predicate& pred, const Scope& scope) {
  if (pred.op == CmpOp::exists || pred.op == CmpOp::not_exists)
    return std::string(cmp_text(pred.op)) + " " + canon_operand(pred.rhs1, scope);
  const std::string lhs = canon_value_expr(pred.lhs, scope);
  std::string rhs = canon_operand(pred.rhs1, scope);
  if (pred.op == CmpOp::in || pred.op == CmpOp::not_in) {
    if (pred.rhs1.kind == Operand::Kind::subquery)
      return lhs + " " + cmp_text(pred.op) + " " + rhs;
    return lhs + " " + cmp_text(pred.op) + " " + rhs;  // literal list already parenthesized
  }
  if (pred.op == CmpOp::not_between)
    return lhs + " not between " + rhs + " and " + canon_operand(pred.rhs2, scope);
  if (pred.op == CmpOp::eq && pred.rhs1.kind == Operand::Kind::column) {
    // symmetric operator: order the two sides canonically
    if (rhs < lhs) return rhs + " = " + lhs;
  }
  return lhs + " " + cmp_text(pred.op) + " " + rhs;
}

inline CondCanon canon_predicate(const Predicate& pred, const Scope& scope) {
  if (pred.op == CmpOp::between) {
    CondCanon node;
    node.kind = CondCanon::Kind::conj;
    const std::string lhs = canon_value_expr(pred.lhs, scope);
    CondCanon lo, hi;
    lo.pred = lhs + " >= " + canon_operand(pred.rhs1, scope);
    hi.pred = lhs + " <= " + canon_operand(pred.rhs2, scope);
    node.children = {lo, hi};
    return node;
  }
  CondCanon node;
  node.pred = canon_simple_pred(pred, scope);
  return node;
}

inline CondCanon canon_condition(const Condition& cond, const Scope& scope) {
  if (cond.kind == Condition::Kind::pred) return canon_predicate(cond.pred, scope);
  CondCanon node;
  node.kind = cond.kind == Condition::Kind::conj ? CondCanon::Kind::conj : CondCanon::Kind::disj;
  for (const auto& child : cond.children) node.children.push_back(canon_condition(child, scope));
  return node;
}

// Flatten same-kind nesting, drop single-child wrappers, sort children.
inline CondCanon normalize_canon(CondCanon node) {
  if (node.kind == CondCanon::Kind::pred) return node;
  std::vector<CondCanon> flat;
  for (auto& child : node.children) {
    CondCanon c = normalize_canon(std::move(child));
    if (c.kind == node.kind) {
      for (auto& grand : c.children) flat.push_back(std::move(grand));
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.size() == 1) return flat[0];
  std::sort(flat.begin(), flat.end(),
            [](const CondCanon& a, const CondCanon& b) { return a.render() < b.render(); });
  node.children = std::move(flat);
  return node;
}

}  // namespace detail

inline SqlComponents decompose(const SqlAst& ast) {
  using namespace detail;
  const SelectCore& core = ast.core;
  const Scope scope = make_scope(core);
  SqlComponents out;
  out.distinct = core.distinct;
  for (const auto& item : core.select_items)
    out.select_items.insert(canon_value_expr(item, scope));
  for (const auto& src : core.from_tables) {
    if (src.subquery) {
      out.from_tables.insert("(" + print_components(decompose(*src.subquery)) + ")");
    } else {
      out.from_tables.insert(src.table);
    }
  }
  for (const auto& join : core.join_conditions)
    out.join_conditions.insert(canon_simple_pred(join, scope));
  if (core.where) out.where = normalize_canon(canon_condition(*core.where, scope));
  for (const auto& col : core.group_by) out.group_by.insert(canon_ref(col, scope));
  if (core.having) out.having = normalize_canon(canon_condition(*core.having, scope));
  for (const auto& item : core.order_by)
    out.order_by.push_back(canon_value_expr(item.expr, scope) +
                           (item.dir == OrderDir::desc ? " desc" : " asc"));
  out.has_limit = core.limit.has_value();
  out.set_op = ast.set_op;
  if (ast.rhs) out.set_rhs = std::make_shared<SqlComponents>(decompose(*ast.rhs));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical printer: emits SQL that re-decomposes to the same components.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string print_cond_sql(const CondCanon& node, bool parenthesize) {
  if (node.kind == CondCanon::Kind::pred) return node.pred;
  const char* joiner = node.kind == CondCanon::Kind::conj ? " and " : " or ";
  std::string out;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += joiner;
    const CondCanon& child = node.children[i];
    const bool child_parens = child.kind != CondCanon::Kind::pred;
    out += print_cond_sql(child, child_parens);
  }
  if (parenthesize) return "(" + out + ")";
  return out;
}

}  // namespace detail

inline std::string print_components(const SqlComponents& c) {
  std::string out = "select ";
  if (c.distinct) out += "distinct ";
  std::size_t i = 0;
  for (const auto& item : c.select_items) out += (i++ ? ", " : "") + item;
  out += " from ";
  const bool as_joins = !c.join_conditions.empty();
  i = 0;
  for (const auto& table : c.from_tables) out += (i++ ? (as_joins ? " join " : ", ") : "") + table;
  // a self-join collapses to one table in the set; re-emit a join so the ON
  // clause stays parseable
  if (as_joins && c.from_tables.size() == 1) out += " join " + *c.from_tables.begin();
  if (as_joins) {
    out += " on ";
    i = 0;
    for (const auto& cond : c.join_conditions) out += (i++ ? " and " : "") + cond;
  }
  if (c.where) out += " where " + detail::print_cond_sql(*c.where, false);
  if (!c.group_by.empty()) {
    out += " group by ";
    i = 0;
    for (const auto& col : c.group_by) out += (i++ ? ", " : "") + col;
  }
  if (c.having) out += " having " + detail::print_cond_sql(*c.having, false);
  if (!c.order_by.empty()) {
    out += " order by ";
    i = 0;
    for (const auto& item : c.order_by) out += (i++ ? ", " : "") + item;
  }
  if (c.has_limit) out += " limit _val_";
  if (c.set_rhs) {
    switch (c.set_op) {
      case SetOp::union_all_of: out += " union "; break;
      case SetOp::intersect: out += " intersect "; break;
      case SetOp::except: out += " except "; break;
      case SetOp::none: break;
    }
    out += print_components(*c.set_rhs);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Exact match
// ---------------------------------------------------------------------------

enum class FailureReason { none, gold_parse_error, pred_parse_error, pred_exec_error, db_missing };

struct EvalVerdict {
  bool exact_match = false;
  std::optional<bool> execution_match;
  FailureReason failure_reason = FailureReason::none;
};

inline const char* failure_reason_name(FailureReason r) {
  switch (r) {
    case FailureReason::none: return "none";
    case FailureReason::gold_parse_error: return "gold-parse-error";
    case FailureReason::pred_parse_error: return "pred-parse-error";
    case FailureReason::pred_exec_error: return "pred-exec-error";
    case FailureReason::db_missing: return "db-missing";
  }
  return "none";
}

inline EvalVerdict exact_match(std::string_view gold, std::string_view pred) {
  EvalVerdict verdict;
  SqlComponents gold_components;
  try {
    gold_components = decompose(parse_sql(gold));
  } catch (const std::exception&) {
    verdict.failure_reason = FailureReason::gold_parse_error;
    return verdict;
  }
  SqlComponents pred_components;
  try {
    pred_components = decompose(parse_sql(pred));
  } catch (const std::exception&) {
    verdict.failure_reason = FailureReason::pred_parse_error;
    return verdict;
  }
  verdict.exact_match = gold_components == pred_components;
  return verdict;
}

// ---------------------------------------------------------------------------
// Template extraction: identifiers and literals abstracted, clause-internal
// structure normalized the same way decompose normalizes, so queries that
// exact-match always share a template.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string template_ref(const ColumnRef& ref) {
  if (ref.column == "*") return "*";
  if (ref.column == "_val_" && ref.table.empty()) return "_val_";
  return "_col_";
}

inline std::string template_term(const ColumnTerm& term) {
  const std::string inner = template_ref(term.ref);
  if (term.agg == AggOp::none) return inner;
  return std::string(agg_name(term.agg)) + "(" + (term.distinct ? "DISTINCT " : "") + inner + ")";
}

inline std::string template_value_expr(const ValueExpr& expr) {
  std::string inner = template_term(expr.lhs);
  if (expr.arith != ArithOp::none)
    inner += std::string(" ") + arith_symbol(expr.arith) + " " + template_term(expr.rhs);
  if (expr.agg == AggOp::none) return inner;
  return std::string(agg_name(expr.agg)) + "(" + (expr.distinct ? "DISTINCT " : "") + inner + ")";
}

inline std::string template_stmt(const SelectStmt& stmt);

inline std::string template_operand(const Operand& op) {
  switch (op.kind) {
    case Operand::Kind::literal: return "_val_";
    case Operand::Kind::column: return template_value_expr(op.column);
    case Operand::Kind::subquery: return "(" + template_stmt(*op.subquery) + ")";
    case Operand::Kind::literal_list: {
      std::string out = "(";
      for (std::size_t i = 0; i < op.literal_list.size(); ++i) out += (i ? ", _val_" : "_val_");
      return out + ")";
    }
  }
  return "";
}

inline std::string template_simple_pred(const Predicate& pred) {
  switch (pred.op) {
    case CmpOp::exists: return "EXISTS " + template_operand(pred.rhs1);
    case CmpOp::not_exists: return "NOT EXISTS " + template_operand(pred.rhs1);
    case CmpOp::not_between:
      return template_value_expr(pred.lhs) + " NOT BETWEEN " + template_operand(pred.rhs1) +
             " AND " + template_operand(pred.rhs2);
    case CmpOp::in:
      return template_value_expr(pred.lhs) + " IN " + template_operand(pred.rhs1);
    case CmpOp::not_in:
      return template_value_expr(pred.lhs) + " NOT IN " + template_operand(pred.rhs1);
    case CmpOp::like:
      return template_value_expr(pred.lhs) + " LIKE " + template_operand(pred.rhs1);
    case CmpOp::not_like:
      return template_value_expr(pred.lhs) + " NOT LIKE " + template_operand(pred.rhs1);
    default:
      return template_value_expr(pred.lhs) + " " + cmp_text(pred.op) + " " +
             template_operand(pred.rhs1);
  }
}

inline CondCanon template_predicate_node(const Predicate& pred) {
  if (pred.op == CmpOp::between) {
    CondCanon node;
    node.kind = CondCanon::Kind::conj;
    const std::string lhs = template_value_expr(pred.lhs);
    CondCanon lo, hi;
    lo.pred = lhs + " >= " + template_operand(pred.rhs1);
    hi.pred = lhs + " <= " + template_operand(pred.rhs2);
    node.children = {lo, hi};
    return node;
  }
  CondCanon node;
  node.pred = template_simple_pred(pred);
  return node;
}

inline CondCanon template_condition_node(const Condition& cond) {
  if (cond.kind == Condition::Kind::pred) return template_predicate_node(cond.pred);
  CondCanon node;
  node.kind = cond.kind == Condition::Kind::conj ? CondCanon::Kind::conj : CondCanon::Kind::disj;
  for (const auto& child : cond.children) node.children.push_back(template_condition_node(child));
  return node;
}

inline std::string template_cond_sql(const CondCanon& node, bool parenthesize) {
  if (node.kind == CondCanon::Kind::pred) return node.pred;
  const char* joiner = node.kind == CondCanon::Kind::conj ? " AND " : " OR ";
  std::string out;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i) out += joiner;
    out += template_cond_sql(node.children[i], node.children[i].kind != CondCanon::Kind::pred);
  }
  return parenthesize ? "(" + out + ")" : out;
}

inline std::string template_stmt(const SelectStmt& stmt) {
  const SelectCore& core = stmt.core;
  std::string out = "SELECT ";
  if (core.distinct) out += "DISTINCT ";

  std::vector<std::string> items;
  for (const auto& item : core.select_items) items.push_back(template_value_expr(item));
  std::sort(items.begin(), items.end());
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];

  std::vector<std::string> sources;
  for (const auto& src : core.from_tables)
    sources.push_back(src.subquery ? "(" + template_stmt(*src.subquery) + ")" : "_tab_");
  std::sort(sources.begin(), sources.end());
  std::vector<std::string> joins;
  for (const auto& join : core.join_conditions) joins.push_back(template_simple_pred(join));
  std::sort(joins.begin(), joins.end());

  out += " FROM ";
  for (std::size_t i = 0; i < sources.size(); ++i)
    out += (i ? (joins.empty() ? ", " : " JOIN ") : "") + sources[i];
  if (!joins.empty()) {
    if (sources.size() == 1) out += " JOIN " + sources[0];
    out += " ON ";
    for (std::size_t i = 0; i < joins.size(); ++i) out += (i ? " AND " : "") + joins[i];
  }

  if (core.where)
    out += " WHERE " +
           template_cond_sql(normalize_canon(template_condition_node(*core.where)), false);
  if (!core.group_by.empty()) {
    std::vector<std::string> groups;
    for (const auto& col : core.group_by) groups.push_back(template_ref(col));
    std::sort(groups.begin(), groups.end());
    out += " GROUP BY ";
    for (std::size_t i = 0; i < groups.size(); ++i) out += (i ? ", " : "") + groups[i];
  }
  if (core.having)
    out += " HAVING " +
           template_cond_sql(normalize_canon(template_condition_node(*core.having)), false);
  if (!core.order_by.empty()) {
    out += " ORDER BY ";
    for (std::size_t i = 0; i < core.order_by.size(); ++i)
      out += (i ? ", " : "") + template_value_expr(core.order_by[i].expr) +
             (core.order_by[i].dir == OrderDir::desc ? " DESC" : " ASC");
  }
  if (core.limit) out += " LIMIT _val_";
  if (stmt.rhs) {
    switch (stmt.set_op) {
      case SetOp::union_all_of: out += " UNION "; break;
      case SetOp::intersect: out += " INTERSECT "; break;
      case SetOp::except: out += " EXCEPT "; break;
      case SetOp::none: break;
    }
    out += template_stmt(*stmt.rhs);
  }
  return out;
}

}  // namespace detail

struct SqlTemplate {
  std::string skeleton;
  bool operator==(const SqlTemplate& other) const { return skeleton == other.skeleton; }
  bool operator!=(const SqlTemplate& other) const { return skeleton != other.skeleton; }
};

inline SqlTemplate extract_template(std::string_view sql) {
  const SqlAst ast = parse_sql(sql);
  return SqlTemplate{detail::template_stmt(ast)};
}

// ---------------------------------------------------------------------------
// Execution match against a SQLite database file
// ---------------------------------------------------------------------------

namespace detail {

struct Cell {
  enum class Type { null, integer, real, text, blob };
  Type type = Type::null;
  std::int64_t int_value = 0;
  double real_value = 0.0;
  std::string text_value;
};

using Row = std::vector<Cell>;

inline bool cells_equal(const Cell& a, const Cell& b) {
  const bool a_num = a.type == Cell::Type::integer || a.type == Cell::Type::real;
  const bool b_num = b.type == Cell::Type::integer || b.type == Cell::Type::real;
  if (a_num && b_num) {
    const double x = a.type == Cell::Type::integer ? static_cast<double>(a.int_value) : a.real_value;
    const double y = b.type == Cell::Type::integer ? static_cast<double>(b.int_value) : b.real_value;
    if (x == y) return true;
    const double scale = std::max(std::abs(x), std::abs(y));
    return std::abs(x - y) <= 1e-6 * scale;
  }
  if (a.type != b.type) return false;
  switch (a.type) {
    case Cell::Type::null: return true;
    case Cell::Type::text: case Cell::Type::blob: return a.text_value == b.text_value;
    default: return false;  // numeric handled above
  }
}

inline bool cell_less(const Cell& a, const Cell& b) {
  auto rank = [](const Cell& c) {
    switch (c.type) {
      case Cell::Type::null: return 0;
      case Cell::Type::integer: case Cell::Type::real: return 1;
      case Cell::Type::text: return 2;
      case Cell::Type::blob: return 3;
    }
    return 4;
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  switch (a.type) {
    case Cell::Type::null: return false;
    case Cell::Type::integer:
    case Cell::Type::real: {
      const double x = a.type == Cell::Type::integer ? static_cast<double>(a.int_value) : a.real_value;
      const double y = b.type == Cell::Type::integer ? static_cast<double>(b.int_value) : b.real_value;
      return x < y;
    }
    default: return a.text_value < b.text_value;
  }
}

inline bool row_less(const Row& a, const Row& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), cell_less);
}

struct SqliteCloser {
  void operator()(sqlite3* db) const { sqlite3_close(db); }
};

inline std::vector<Row> run_query(sqlite3* db, std::string_view sql, std::string& error) {
  sqlite3_stmt* stmt = nullptr;
  std::vector<Row> rows;
  if (sqlite3_prepare_v2(db, sql.data(), static_cast<int>(sql.size()), &stmt, nullptr) !=
      SQLITE_OK) {
    error = sqlite3_errmsg(db);
    return rows;
  }
  int rc;
  while ((rc = sqlite3_step(stmt)) == SQLITE_ROW) {
    const int cols = sqlite3_column_count(stmt);
    Row row;
    row.reserve(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
      Cell cell;
      switch (sqlite3_column_type(stmt, c)) {
        case SQLITE_INTEGER:
          cell.type = Cell::Type::integer;
          cell.int_value = sqlite3_column_int64(stmt, c);
          break;
        case SQLITE_FLOAT:
          cell.type = Cell::Type::real;
          cell.real_value = sqlite3_column_double(stmt, c);
          break;
        case SQLITE_TEXT:
          cell.type = Cell::Type::text;
          cell.text_value =
              reinterpret_cast<const char*>(sqlite3_column_text(stmt, c));
          break;
        case SQLITE_BLOB: {
          cell.type = Cell::Type::blob;
          const auto* data = static_cast<const char*>(sqlite3_column_blob(stmt, c));
          cell.text_value.assign(data ? data : "", static_cast<std::size_t>(sqlite3_column_bytes(stmt, c)));
          break;
        }
        default:
          cell.type = Cell::Type::null;
      }
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  if (rc != SQLITE_DONE) {
    error = sqlite3_errmsg(db);
    sqlite3_finalize(stmt);
    return rows;
  }
  sqlite3_finalize(stmt);
  return rows;
}

inline bool result_sets_equal(std::vector<Row> gold, std::vector<Row> pred, bool ordered) {
  if (gold.size() != pred.size()) return false;
  if (!gold.empty() && gold[0].size() != (pred.empty() ? 0 : pred[0].size())) return false;
  if (!ordered) {
    std::sort(gold.begin(), gold.end(), row_less);
    std::sort(pred.begin(), pred.end(), row_less);
  }
  for (std::size_t r = 0; r < gold.size(); ++r) {
    if (gold[r].size() != pred[r].size()) return false;
    for (std::size_t c = 0; c < gold[r].size(); ++c) {
      if (!cells_equal(gold[r][c], pred[r][c])) return false;
    }
  }
  return true;
}

}  // namespace detail

inline EvalVerdict execution_match(const std::string& db_path, std::string_view gold,
                                   std::string_view pred) {
  EvalVerdict verdict = exact_match(gold, pred);

  sqlite3* raw = nullptr;
  if (sqlite3_open_v2(db_path.c_str(), &raw, SQLITE_OPEN_READONLY, nullptr) != SQLITE_OK) {
    if (raw) sqlite3_close(raw);
    verdict.failure_reason = FailureReason::db_missing;
    return verdict;
  }
  std::unique_ptr<sqlite3, detail::SqliteCloser> db(raw);

  std::string gold_error;
  std::vector<detail::Row> gold_rows = detail::run_query(db.get(), gold, gold_error);
  if (!gold_error.empty()) throw GoldExecutionError(gold_error);

  std::string pred_error;
  std::vector<detail::Row> pred_rows = detail::run_query(db.get(), pred, pred_error);
  if (!pred_error.empty()) {
    verdict.execution_match = false;
    verdict.failure_reason = FailureReason::pred_exec_error;
    return verdict;
  }

  bool ordered = false;
  try {
    ordered = !parse_sql(gold).core.order_by.empty();
  } catch (const std::exception&) {
    ordered = false;  // gold executed fine; order comparison falls back to multiset
  }
  verdict.execution_match =
      detail::result_sets_equal(std::move(gold_rows), std::move(pred_rows), ordered);
  return verdict;
}

}  // namespace xricl::sql
