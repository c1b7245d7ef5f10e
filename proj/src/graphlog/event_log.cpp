#include "graphlog/event_log.hpp"

#include "graphlog/canonical.hpp"
#include "graphlog/errors.hpp"

#include <fstream>
#include <sstream>

namespace graphlog {

const std::set<std::string>& core_event_types() {
  static const std::set<std::string> kTypes = {
      "run.started",     "run.finished",     "pack.loaded",
      "object.created",  "object.patched",   "relation.created",
      "behavior.started", "behavior.finished", "behavior.failed",
      "llm.requested",   "llm.responded",    "llm.failed",
      "tool.requested",  "tool.responded",   "tool.failed",
      "budget.exceeded",
  };
  return kTypes;
}

TypeSet TypeSet::core() {
  TypeSet t;
  t.event_types = core_event_types();
  return t;
}

EventLog::EventLog(std::string run_id, TypeSet types)
    : run_(std::move(run_id)), types_(std::move(types)) {}

void EventLog::seed_fork_prefix(std::span<const Event> parent_events,
                                ForkOrigin origin) {
  if (!events_.empty()) throw Error("fork prefix must seed an empty log");
  if (origin.cutoff < 1 || origin.cutoff > parent_events.size()) {
    throw CutoffOutOfRangeError("cutoff " + std::to_string(origin.cutoff) +
                                " outside 1.." +
                                std::to_string(parent_events.size()));
  }
  events_.reserve(origin.cutoff);
  for (std::uint64_t i = 0; i < origin.cutoff; ++i) {
    events_.push_back(parent_events[i]);
  }
  origin_ = std::move(origin);
}

const Event& EventLog::push(Event e) {
  if (sealed_) throw LogSealedError("log " + run_ + " is sealed");
  if (!types_.event_type_ok(e.type)) {
    throw UnknownEventTypeError("event type not declared: " + e.type);
  }
  const std::uint64_t next_seq = size() + 1;
  if (e.caused_by) {
    const EventId& c = *e.caused_by;
    bool in_range = c.seq >= 1 && c.seq < next_seq;
    bool run_ok = in_range && at(c.seq).id.run == c.run;
    if (!in_range || !run_ok) {
      throw DanglingCauseError("caused_by " + c.to_string() +
                               " does not reference an earlier event");
    }
  }
  e.id = EventId{run_, next_seq};
  events_.push_back(std::move(e));
  return events_.back();
}

const Event& EventLog::append(const std::string& type, Value payload,
                              const std::string& actor,
                              std::optional<EventId> caused_by,
                              TimestampSource& ts_source) {
  Event e;
  e.type = type;
  e.payload = std::move(payload);
  e.actor = actor;
  e.caused_by = std::move(caused_by);
  e.ts = ts_source.next_timestamp();
  return push(std::move(e));
}

const Event& EventLog::append_stamped(const std::string& type, Value payload,
                                      const std::string& actor,
                                      std::optional<EventId> caused_by,
                                      TimestampUs ts) {
  Event e;
  e.type = type;
  e.payload = std::move(payload);
  e.actor = actor;
  e.caused_by = std::move(caused_by);
  e.ts = ts;
  return push(std::move(e));
}

const Event& EventLog::append_copy(const Event& src) {
  if (sealed_) throw LogSealedError("log " + run_ + " is sealed");
  const std::uint64_t next_seq = size() + 1;
  if (src.id.seq != next_seq) {
    throw Error("copied event breaks seq continuity");
  }
  events_.push_back(src);
  return events_.back();
}

const Event& EventLog::at(std::uint64_t seq) const {
  if (seq < 1 || seq > size()) {
    throw Error("event seq out of range: " + std::to_string(seq));
  }
  return events_[seq - 1];
}

// -- persistence ------------------------------------------------------------

std::string serialize_event_line(const Event& e) {
  return canonicalize(event_to_value(e));
}

std::string serialize_log(const EventLog& log) {
  Value header{
      {"format", kLogFormatVersion},
      {"hash", kHashFunctionName},
      {"run", log.run()},
  };
  if (log.fork_origin()) {
    header["parent"] = log.fork_origin()->parent_run;
    header["cutoff"] = log.fork_origin()->cutoff;
    if (!log.fork_origin()->overrides.empty()) {
      header["overrides"] = log.fork_origin()->overrides;
    }
  }
  std::string out = canonicalize(header);
  out.push_back('\n');
  for (const Event& e : log.events()) {
    out += serialize_event_line(e);
    out.push_back('\n');
  }
  return out;
}

void save_log(const EventLog& log, const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error("cannot open " + path.string() + " for writing");
  f << serialize_log(log);
  if (!f.good()) throw Error("write failed: " + path.string());
}

EventLog load_log(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());

  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(f, line)) throw MalformedLogError(1, "missing header");

  Value header;
  try {
    header = Value::parse(line);
  } catch (const std::exception& ex) {
    throw MalformedLogError(1, ex.what());
  }
  if (!header.is_object() || !header.contains("format")) {
    throw MalformedLogError(1, "header is not a log header map");
  }
  if (header.at("format").get<int>() != kLogFormatVersion) {
    throw VersionMismatchError("unknown log format version " +
                               header.at("format").dump());
  }
  const std::string run = header.at("run").get<std::string>();

  EventLog log(run, TypeSet::permissive());
  std::optional<ForkOrigin> origin;
  if (header.contains("parent")) {
    ForkOrigin o;
    o.parent_run = header.at("parent").get<std::string>();
    o.cutoff = header.at("cutoff").get<std::uint64_t>();
    if (header.contains("overrides")) o.overrides = header.at("overrides");
    origin = o;
  }

  std::vector<Event> events;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    Event e;
    try {
      e = event_from_value(Value::parse(line));
    } catch (const std::exception& ex) {
      throw MalformedLogError(line_no, ex.what());
    }
    const std::uint64_t expect_seq = events.size() + 1;
    if (e.id.seq != expect_seq) {
      throw MalformedLogError(line_no, "seq " + std::to_string(e.id.seq) +
                                           ", expected " +
                                           std::to_string(expect_seq));
    }
    const bool prefix = origin && expect_seq <= origin->cutoff;
    const std::string& expect_run = prefix ? origin->parent_run : run;
    if (e.id.run != expect_run) {
      throw MalformedLogError(line_no, "event run '" + e.id.run +
                                           "', expected '" + expect_run + "'");
    }
    events.push_back(std::move(e));
  }

  if (origin) {
    if (origin->cutoff > events.size()) {
      throw MalformedLogError(1, "cutoff beyond log length");
    }
    log.seed_fork_prefix(std::span<const Event>(events.data(), origin->cutoff),
                         *origin);
    for (std::size_t i = origin->cutoff; i < events.size(); ++i) {
      log.append_copy(events[i]);
    }
  } else {
    for (const Event& e : events) log.append_copy(e);
  }
  log.seal();  // loaded logs are read-only history
  return log;
}

}  // namespace graphlog
