#pragma once

// The typed property graph: a deterministic left-fold over the event log.
// Nothing mutates a Graph except apply_event.

#include "graphlog/event.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace graphlog {

using ObjectId = std::string;

// Who made this artifact, and which events did it. caused_by_event is the
// event that triggered the creating fire; for user-created objects it is the
// creating event itself. model_request_event points at the llm.requested
// event whose response produced the artifact, when there was one.
struct Provenance {
  std::string behavior;
  EventId caused_by_event;
  std::optional<EventId> model_request_event;

  bool operator==(const Provenance&) const = default;
};

struct GraphObject {
  ObjectId id;
  std::string type;
  Value properties;
  Provenance provenance;
  EventId created_by_event;

  bool operator==(const GraphObject&) const = default;
};

struct Relation {
  ObjectId id;
  std::string type;
  ObjectId from;
  ObjectId to;
  Value properties;
  Provenance provenance;
  EventId created_by_event;

  bool operator==(const Relation&) const = default;
};

struct PatchOp {
  std::vector<std::string> path;
  enum class Kind { Set, Remove } op = Kind::Set;
  Value value;  // ignored for Remove

  bool operator==(const PatchOp&) const = default;
};

struct Graph {
  std::map<ObjectId, GraphObject> objects;
  std::map<ObjectId, Relation> relations;
  // Ids in creation (seq) order, per type.
  std::map<std::string, std::vector<ObjectId>> objects_by_type;
  std::map<std::string, std::vector<ObjectId>> relations_by_type;

  const GraphObject* find_object(const ObjectId& id) const;
  const Relation* find_relation(const ObjectId& id) const;

  // Objects of a type in creation order.
  std::vector<const GraphObject*> objects_of_type(const std::string& type) const;

  // Relations filtered by any combination of type/from/to, creation order.
  std::vector<const Relation*> find_relations(
      const std::optional<std::string>& type = std::nullopt,
      const std::optional<ObjectId>& from = std::nullopt,
      const std::optional<ObjectId>& to = std::nullopt) const;

  std::size_t object_count() const { return objects.size(); }
  std::size_t relation_count() const { return relations.size(); }
};

// Structural equality: ids, types, properties, provenance. Index internals
// are derived and excluded.
bool graphs_equal(const Graph& a, const Graph& b);

}  // namespace graphlog
