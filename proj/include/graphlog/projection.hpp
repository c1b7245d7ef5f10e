#pragma once

#include "graphlog/event_log.hpp"
#include "graphlog/graph.hpp"

#include <filesystem>

namespace graphlog {

// What one event did to the graph. Non-graph events fold to an empty delta.
struct GraphDelta {
  std::vector<ObjectId> objects_created;
  std::vector<ObjectId> relations_created;
  std::vector<ObjectId> objects_patched;

  bool empty() const {
    return objects_created.empty() && relations_created.empty() &&
           objects_patched.empty();
  }
};

Provenance provenance_from_value(const Value& v);
Value provenance_to_value(const Provenance& p);

std::vector<PatchOp> patch_ops_from_value(const Value& v);
Value patch_ops_to_value(const std::vector<PatchOp>& ops);

// Applies the next event in seq order. Graph-effecting types are
// object.created, object.patched, relation.created; everything else is a
// no-op delta.
GraphDelta apply_event(Graph& graph, const Event& event, const TypeSet& types);

// Left-fold of apply_event over the whole log from the empty graph.
Graph project(const EventLog& log);
Graph project(const EventLog& log, const TypeSet& types);

// Debug export: canonical-serializable view of the graph, objects and
// relations sorted by id. Tests and the diff oracle consume this.
Value export_graph(const Graph& graph);

void write_graph_export(const Graph& graph, const std::filesystem::path& path);

}  // namespace graphlog
