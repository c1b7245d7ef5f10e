#include "graphlog/projection.hpp"

#include "graphlog/canonical.hpp"
#include "graphlog/errors.hpp"

#include <fstream>

namespace graphlog {

Value provenance_to_value(const Provenance& p) {
  Value v{
      {"behavior", p.behavior},
      {"caused_by_event", event_id_to_value(p.caused_by_event)},
  };
  if (p.model_request_event) {
    v["model_request_event"] = event_id_to_value(*p.model_request_event);
  }
  return v;
}

Provenance provenance_from_value(const Value& v) {
  Provenance p;
  p.behavior = v.at("behavior").get<std::string>();
  p.caused_by_event = event_id_from_value(v.at("caused_by_event"));
  if (v.contains("model_request_event")) {
    p.model_request_event = event_id_from_value(v.at("model_request_event"));
  }
  return p;
}

Value patch_ops_to_value(const std::vector<PatchOp>& ops) {
  Value arr = Value::array();
  for (const PatchOp& op : ops) {
    Value o{{"path", op.path},
            {"op", op.op == PatchOp::Kind::Set ? "set" : "remove"}};
    if (op.op == PatchOp::Kind::Set) o["value"] = op.value;
    arr.push_back(std::move(o));
  }
  return arr;
}

std::vector<PatchOp> patch_ops_from_value(const Value& v) {
  std::vector<PatchOp> ops;
  for (const Value& o : v) {
    PatchOp op;
    op.path = o.at("path").get<std::vector<std::string>>();
    const std::string kind = o.at("op").get<std::string>();
    if (kind == "set") {
      op.op = PatchOp::Kind::Set;
      op.value = o.at("value");
    } else if (kind == "remove") {
      op.op = PatchOp::Kind::Remove;
    } else {
      throw Error("unknown patch op: " + kind);
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

namespace {

// Last-writer-wins per key path; set creates intermediate maps, remove of an
// absent path is a silent no-op.
void apply_patch_op(Value& properties, const PatchOp& op) {
  if (op.path.empty()) throw Error("patch op with empty path");
  Value* cur = &properties;
  for (std::size_t i = 0; i + 1 < op.path.size(); ++i) {
    if (!cur->is_object()) return;  // can't descend; remove is a no-op
    auto it = cur->find(op.path[i]);
    if (it == cur->end()) {
      if (op.op == PatchOp::Kind::Remove) return;
      (*cur)[op.path[i]] = Value::object();
      it = cur->find(op.path[i]);
    }
    cur = &*it;
    if (!cur->is_object()) {
      if (op.op == PatchOp::Kind::Remove) return;
      *cur = Value::object();
    }
  }
  const std::string& leaf = op.path.back();
  if (op.op == PatchOp::Kind::Set) {
    (*cur)[leaf] = op.value;
  } else if (cur->is_object()) {
    cur->erase(leaf);
  }
}

void index_insert(std::map<std::string, std::vector<ObjectId>>& index,
                  const std::string& type, const ObjectId& id) {
  index[type].push_back(id);
}

}  // namespace

GraphDelta apply_event(Graph& graph, const Event& event, const TypeSet& types) {
  GraphDelta delta;

  if (event.type == "object.created") {
    const Value& obj = event.payload.at("object");
    GraphObject o;
    o.id = obj.at("id").get<std::string>();
    o.type = obj.at("type").get<std::string>();
    o.properties = obj.value("properties", Value::object());
    o.provenance = provenance_from_value(event.payload.at("provenance"));
    o.created_by_event = event.id;
    if (!types.object_type_ok(o.type)) {
      throw UnknownObjectTypeError("object type not declared: " + o.type);
    }
    if (graph.objects.count(o.id) || graph.relations.count(o.id)) {
      throw Error("duplicate object id: " + o.id);
    }
    index_insert(graph.objects_by_type, o.type, o.id);
    delta.objects_created.push_back(o.id);
    graph.objects.emplace(o.id, std::move(o));
    return delta;
  }

  if (event.type == "relation.created") {
    const Value& rel = event.payload.at("relation");
    Relation r;
    r.id = rel.at("id").get<std::string>();
    r.type = rel.at("type").get<std::string>();
    r.from = rel.at("from").get<std::string>();
    r.to = rel.at("to").get<std::string>();
    r.properties = rel.value("properties", Value::object());
    r.provenance = provenance_from_value(event.payload.at("provenance"));
    r.created_by_event = event.id;
    if (!types.relation_type_ok(r.type)) {
      throw UnknownObjectTypeError("relation type not declared: " + r.type);
    }
    if (!graph.objects.count(r.from)) {
      throw DanglingReferenceError("relation " + r.id + " from missing object " +
                                   r.from);
    }
    if (!graph.objects.count(r.to)) {
      throw DanglingReferenceError("relation " + r.id + " to missing object " +
                                   r.to);
    }
    if (graph.relations.count(r.id) || graph.objects.count(r.id)) {
      throw Error("duplicate relation id: " + r.id);
    }
    index_insert(graph.relations_by_type, r.type, r.id);
    delta.relations_created.push_back(r.id);
    graph.relations.emplace(r.id, std::move(r));
    return delta;
  }

  if (event.type == "object.patched") {
    const ObjectId target = event.payload.at("target").get<std::string>();
    auto it = graph.objects.find(target);
    if (it == graph.objects.end()) {
      throw PatchTargetMissingError("patch target missing: " + target);
    }
    for (const PatchOp& op : patch_ops_from_value(event.payload.at("ops"))) {
      apply_patch_op(it->second.properties, op);
    }
    delta.objects_patched.push_back(target);
    return delta;
  }

  // All other event types fold to an empty delta.
  return delta;
}

Graph project(const EventLog& log, const TypeSet& types) {
  Graph graph;
  for (const Event& e : log.events()) {
    try {
      apply_event(graph, e, types);
    } catch (const Error& ex) {
      throw Error("projection failed at seq " + std::to_string(e.id.seq) + ": " +
                  ex.what());
    }
  }
  return graph;
}

Graph project(const EventLog& log) { return project(log, log.types()); }

Value export_graph(const Graph& graph) {
  Value objects = Value::array();
  for (const auto& [id, o] : graph.objects) {
    objects.push_back(Value{{"id", o.id},
                            {"type", o.type},
                            {"properties", o.properties},
                            {"provenance", provenance_to_value(o.provenance)},
                            {"created_by_event", event_id_to_value(o.created_by_event)}});
  }
  Value relations = Value::array();
  for (const auto& [id, r] : graph.relations) {
    relations.push_back(Value{{"id", r.id},
                              {"type", r.type},
                              {"from", r.from},
                              {"to", r.to},
                              {"properties", r.properties},
                              {"provenance", provenance_to_value(r.provenance)},
                              {"created_by_event", event_id_to_value(r.created_by_event)}});
  }
  return Value{{"objects", objects}, {"relations", relations}};
}

void write_graph_export(const Graph& graph, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << canonicalize(export_graph(graph)) << "\n";
}

}  // namespace graphlog
