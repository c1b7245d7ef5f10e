#include "graphlog/graph.hpp"

#include <algorithm>

namespace graphlog {

const GraphObject* Graph::find_object(const ObjectId& id) const {
  auto it = objects.find(id);
  return it == objects.end() ? nullptr : &it->second;
}

const Relation* Graph::find_relation(const ObjectId& id) const {
  auto it = relations.find(id);
  return it == relations.end() ? nullptr : &it->second;
}

std::vector<const GraphObject*> Graph::objects_of_type(const std::string& type) const {
  std::vector<const GraphObject*> out;
  auto it = objects_by_type.find(type);
  if (it == objects_by_type.end()) return out;
  out.reserve(it->second.size());
  for (const ObjectId& id : it->second) out.push_back(&objects.at(id));
  return out;
}

std::vector<const Relation*> Graph::find_relations(
    const std::optional<std::string>& type, const std::optional<ObjectId>& from,
    const std::optional<ObjectId>& to) const {
  std::vector<const Relation*> out;
  if (type) {
    auto it = relations_by_type.find(*type);
    if (it == relations_by_type.end()) return out;
    for (const ObjectId& id : it->second) {
      const Relation& r = relations.at(id);
      if (from && r.from != *from) continue;
      if (to && r.to != *to) continue;
      out.push_back(&r);
    }
    return out;
  }
  // No type filter: scan all relations in creation order.
  std::vector<const Relation*> all;
  all.reserve(relations.size());
  for (const auto& [id, r] : relations) all.push_back(&r);
  std::sort(all.begin(), all.end(), [](const Relation* a, const Relation* b) {
    return a->created_by_event.seq < b->created_by_event.seq;
  });
  for (const Relation* r : all) {
    if (from && r->from != *from) continue;
    if (to && r->to != *to) continue;
    out.push_back(r);
  }
  return out;
}

bool graphs_equal(const Graph& a, const Graph& b) {
  return a.objects == b.objects && a.relations == b.relations;
}

}  // namespace graphlog
