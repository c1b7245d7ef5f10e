#pragma once

// The graph-shape subscription language: a small Cypher-like subset.
//
//   pattern  := MATCH path ("," path)* [WHERE cond (AND cond)*] [ANCHOR var]
//   path     := node (-[:RelType]-> node)*
//   node     := "(" var [":" Type] ")"
//   cond     := var.key.path (= | !=) literal
//             | exists(var.key.path) | missing(var.key.path)
//   literal  := 'single-quoted string' | number | true | false
//
// Forward edges only; no variable-length paths, no OR, no aggregation.
// String literals escape a quote by doubling it. The anchor var defaults to
// the first declared var.

#include "graphlog/graph.hpp"
#include "graphlog/value.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphlog {

struct NodePattern {
  std::string var;
  std::optional<std::string> type;

  bool operator==(const NodePattern&) const = default;
};

struct EdgePattern {
  std::string from_var;
  std::string rel_type;
  std::string to_var;

  bool operator==(const EdgePattern&) const = default;
};

enum class Comparator { Eq, Ne, Exists, Missing };

struct Predicate {
  std::string var;
  std::vector<std::string> path;
  Comparator op = Comparator::Eq;
  Value literal;  // unused for Exists/Missing

  bool operator==(const Predicate&) const = default;
};

struct Pattern {
  std::vector<NodePattern> nodes;  // declaration order; first mention wins
  std::vector<EdgePattern> edges;
  std::vector<Predicate> predicates;
  std::string anchor;

  bool operator==(const Pattern&) const = default;
};

Pattern parse_pattern(const std::string& text);

// Round-trips: parse_pattern(pretty_print(p)) == p.
std::string pretty_print(const Pattern& p);

// var -> bound object id. Every pattern var is bound.
using Binding = std::map<std::string, ObjectId>;

// All bindings with the anchor var bound to anchor_object, in lexicographic
// order of bound ids (var declaration order). A missing anchor object or a
// failed anchor type constraint yields an empty list.
std::vector<Binding> match_pattern(const Graph& graph, const Pattern& pattern,
                                   const ObjectId& anchor_object);

}  // namespace graphlog
