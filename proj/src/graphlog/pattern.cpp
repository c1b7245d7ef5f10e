#include "graphlog/pattern.hpp"

#include "graphlog/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace graphlog {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Pattern parse() {
    keyword("MATCH");
    parse_path();
    while (try_consume(',')) parse_path();
    skip_ws();
    if (try_keyword("WHERE")) {
      parse_condition();
      while (try_keyword("AND")) parse_condition();
    }
    skip_ws();
    if (try_keyword("ANCHOR")) {
      std::string var = identifier("anchor variable");
      if (!declared(var)) fail("a declared variable (got '" + var + "')");
      pattern_.anchor = var;
    } else {
      pattern_.anchor = pattern_.nodes.front().var;
    }
    skip_ws();
    if (pos_ != text_.size()) fail("end of pattern");
    return pattern_;
  }

 private:
  void parse_path() {
    std::string var = parse_node();
    skip_ws();
    while (peek() == '-') {
      expect('-');
      expect('[');
      expect(':');
      std::string rel = identifier("relation type");
      expect(']');
      expect('-');
      expect('>');
      skip_ws();
      if (peek() != '(') fail("a node '(var[:Type])' after the edge");
      std::string to = parse_node();
      pattern_.edges.push_back(EdgePattern{var, rel, to});
      var = to;
      skip_ws();
    }
  }

  // Returns the node's var. Re-mentioning a var is allowed; a repeated type
  // annotation must agree with the first mention.
  std::string parse_node() {
    skip_ws();
    expect('(');
    std::string var = identifier("variable name");
    std::optional<std::string> type;
    if (try_consume(':')) type = identifier("object type");
    expect(')');
    for (const NodePattern& n : pattern_.nodes) {
      if (n.var == var) {
        if (type && n.type && *type != *n.type) {
          fail("consistent type for variable '" + var + "'");
        }
        return var;
      }
    }
    pattern_.nodes.push_back(NodePattern{var, type});
    return var;
  }

  void parse_condition() {
    skip_ws();
    std::size_t mark = pos_;
    std::string head = identifier("a condition");
    if (head == "exists" || head == "missing") {
      expect('(');
      auto [var, path] = parse_var_path();
      expect(')');
      pattern_.predicates.push_back(
          Predicate{var, path,
                    head == "exists" ? Comparator::Exists : Comparator::Missing,
                    Value()});
      return;
    }
    pos_ = mark;
    auto [var, path] = parse_var_path();
    skip_ws();
    Comparator op;
    if (try_consume('=')) {
      op = Comparator::Eq;
    } else if (peek() == '!' && peek(1) == '=') {
      pos_ += 2;
      op = Comparator::Ne;
    } else {
      fail("'=' or '!='");
    }
    pattern_.predicates.push_back(Predicate{var, path, op, parse_literal()});
  }

  std::pair<std::string, std::vector<std::string>> parse_var_path() {
    std::string var = identifier("variable name");
    if (!declared(var)) fail("a declared variable (got '" + var + "')");
    expect('.');
    std::vector<std::string> path;
    path.push_back(identifier("property key"));
    while (peek() == '.') {
      ++pos_;
      path.push_back(identifier("property key"));
    }
    return {var, path};
  }

  Value parse_literal() {
    skip_ws();
    char c = peek();
    if (c == '\'') {
      ++pos_;
      std::string s;
      while (true) {
        if (pos_ >= text_.size()) fail("closing quote");
        char ch = text_[pos_++];
        if (ch == '\'') {
          if (peek() == '\'') {  // doubled quote escape
            s.push_back('\'');
            ++pos_;
            continue;
          }
          break;
        }
        s.push_back(ch);
      }
      return Value(s);
    }
    if (c == 't' || c == 'f') {
      std::string word = identifier("literal");
      if (word == "true") return Value(true);
      if (word == "false") return Value(false);
      fail("'true' or 'false'");
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      bool is_float = false;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.')) {
        if (text_[pos_] == '.') is_float = true;
        ++pos_;
      }
      std::string num = text_.substr(start, pos_ - start);
      if (num.empty() || num == "-") fail("a number");
      if (is_float) return Value(std::stod(num));
      return Value(static_cast<std::int64_t>(std::stoll(num)));
    }
    fail("a literal (string, number, or boolean)");
  }

  bool declared(const std::string& var) const {
    return std::any_of(pattern_.nodes.begin(), pattern_.nodes.end(),
                       [&](const NodePattern& n) { return n.var == var; });
  }

  std::string identifier(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '_')) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
    }
    if (pos_ == start) fail(what);
    return text_.substr(start, pos_ - start);
  }

  void keyword(const std::string& kw) {
    if (!try_keyword(kw)) fail("'" + kw + "'");
  }

  bool try_keyword(const std::string& kw) {
    skip_ws();
    if (text_.compare(pos_, kw.size(), kw) != 0) return false;
    std::size_t after = pos_ + kw.size();
    if (after < text_.size() &&
        (std::isalnum(static_cast<unsigned char>(text_[after])) ||
         text_[after] == '_')) {
      return false;
    }
    pos_ = after;
    return true;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(pos_, expected);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  Pattern pattern_;
};

std::string quote_literal(const Value& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::string out = "'";
    for (char c : s) {
      out.push_back(c);
      if (c == '\'') out.push_back('\'');
    }
    out.push_back('\'');
    return out;
  }
  return v.dump();
}

}  // namespace

Pattern parse_pattern(const std::string& text) { return Parser(text).parse(); }

std::string pretty_print(const Pattern& p) {
  // Nodes first in declaration order (types on the first mention), then each
  // edge as its own atom re-mentioning bare vars. Not the tersest spelling,
  // but it reparses to exactly the same AST.
  std::string out = "MATCH ";
  std::vector<std::string> atoms;
  for (const NodePattern& n : p.nodes) {
    atoms.push_back(n.type ? "(" + n.var + ":" + *n.type + ")" : "(" + n.var + ")");
  }
  for (const EdgePattern& e : p.edges) {
    atoms.push_back("(" + e.from_var + ")-[:" + e.rel_type + "]->(" + e.to_var +
                    ")");
  }
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += ", ";
    out += atoms[i];
  }

  if (!p.predicates.empty()) {
    out += " WHERE ";
    for (std::size_t i = 0; i < p.predicates.size(); ++i) {
      const Predicate& pr = p.predicates[i];
      if (i) out += " AND ";
      std::string path = pr.var;
      for (const std::string& k : pr.path) path += "." + k;
      switch (pr.op) {
        case Comparator::Eq: out += path + " = " + quote_literal(pr.literal); break;
        case Comparator::Ne: out += path + " != " + quote_literal(pr.literal); break;
        case Comparator::Exists: out += "exists(" + path + ")"; break;
        case Comparator::Missing: out += "missing(" + path + ")"; break;
      }
    }
  }
  out += " ANCHOR " + p.anchor;
  return out;
}

// -- matching -----------------------------------------------------------------

namespace {

bool predicate_holds(const Predicate& pr, const Graph& graph, const ObjectId& id) {
  const GraphObject* obj = graph.find_object(id);
  if (!obj) return false;
  const Value* v = value_at_path(obj->properties, pr.path);
  switch (pr.op) {
    case Comparator::Exists: return v != nullptr;
    case Comparator::Missing: return v == nullptr;
    case Comparator::Eq: return v != nullptr && *v == pr.literal;
    case Comparator::Ne: return v != nullptr && *v != pr.literal;
  }
  return false;
}

bool node_constraints_ok(const Pattern& p, const Graph& graph,
                         const std::string& var, const ObjectId& id) {
  const GraphObject* obj = graph.find_object(id);
  if (!obj) return false;
  for (const NodePattern& n : p.nodes) {
    if (n.var == var && n.type && obj->type != *n.type) return false;
  }
  for (const Predicate& pr : p.predicates) {
    if (pr.var == var && !predicate_holds(pr, graph, id)) return false;
  }
  return true;
}

bool edge_exists(const Graph& graph, const ObjectId& from,
                 const std::string& rel_type, const ObjectId& to) {
  return !graph.find_relations(rel_type, from, to).empty();
}

void search(const Pattern& p, const Graph& graph,
            const std::vector<std::string>& var_order, std::size_t depth,
            Binding& partial, std::vector<Binding>& out) {
  if (depth == var_order.size()) {
    for (const EdgePattern& e : p.edges) {
      if (!edge_exists(graph, partial.at(e.from_var), e.rel_type,
                       partial.at(e.to_var))) {
        return;
      }
    }
    out.push_back(partial);
    return;
  }
  const std::string& var = var_order[depth];

  // Prune with edges whose endpoints are already bound.
  auto consistent = [&](const ObjectId& candidate) {
    for (const EdgePattern& e : p.edges) {
      bool from_known = e.from_var == var || partial.count(e.from_var);
      bool to_known = e.to_var == var || partial.count(e.to_var);
      if (!from_known || !to_known) continue;
      const ObjectId& f = e.from_var == var ? candidate : partial.at(e.from_var);
      const ObjectId& t = e.to_var == var ? candidate : partial.at(e.to_var);
      if (!edge_exists(graph, f, e.rel_type, t)) return false;
    }
    return true;
  };

  for (const auto& [id, obj] : graph.objects) {
    if (!node_constraints_ok(p, graph, var, id)) continue;
    if (!consistent(id)) continue;
    partial[var] = id;
    search(p, graph, var_order, depth + 1, partial, out);
    partial.erase(var);
  }
}

}  // namespace

std::vector<Binding> match_pattern(const Graph& graph, const Pattern& pattern,
                                   const ObjectId& anchor_object) {
  std::vector<Binding> out;
  if (!graph.find_object(anchor_object)) return out;
  if (!node_constraints_ok(pattern, graph, pattern.anchor, anchor_object)) {
    return out;
  }

  std::vector<std::string> free_vars;
  for (const NodePattern& n : pattern.nodes) {
    if (n.var != pattern.anchor) free_vars.push_back(n.var);
  }

  Binding partial;
  partial[pattern.anchor] = anchor_object;
  search(pattern, graph, free_vars, 0, partial, out);

  // Deterministic order: lexicographic by bound ids in var declaration order.
  std::sort(out.begin(), out.end(), [&](const Binding& a, const Binding& b) {
    for (const NodePattern& n : pattern.nodes) {
      const ObjectId& x = a.at(n.var);
      const ObjectId& y = b.at(n.var);
      if (x != y) return x < y;
    }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace graphlog
