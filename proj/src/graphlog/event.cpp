#include "graphlog/event.hpp"

#include "graphlog/errors.hpp"

#include <chrono>

namespace graphlog {

Value event_id_to_value(const EventId& id) {
  return Value{{"run", id.run}, {"seq", id.seq}};
}

EventId event_id_from_value(const Value& v) {
  if (!v.is_object() || !v.contains("run") || !v.contains("seq")) {
    throw Error("event id must be a {run, seq} map");
  }
  return EventId{v.at("run").get<std::string>(), v.at("seq").get<std::uint64_t>()};
}

Value event_to_value(const Event& e) {
  Value v{
      {"id", event_id_to_value(e.id)},
      {"type", e.type},
      {"payload", e.payload},
      {"actor", e.actor},
      {"ts", e.ts},
  };
  v["caused_by"] = e.caused_by ? event_id_to_value(*e.caused_by) : Value(nullptr);
  return v;
}

Event event_from_value(const Value& v) {
  Event e;
  e.id = event_id_from_value(v.at("id"));
  e.type = v.at("type").get<std::string>();
  e.payload = v.at("payload");
  e.actor = v.at("actor").get<std::string>();
  e.ts = v.at("ts").get<TimestampUs>();
  const Value& cause = v.at("caused_by");
  if (!cause.is_null()) e.caused_by = event_id_from_value(cause);
  return e;
}

TimestampUs SystemClock::next_timestamp() {
  using namespace std::chrono;
  return duration_cast<microseconds>(system_clock::now().time_since_epoch()).count();
}

}  // namespace graphlog
