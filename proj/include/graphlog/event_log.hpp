#pragma once

// The append-only event sequence and its file persistence. All state changes
// in the system happen by appending here; everything else is a projection.

#include "graphlog/event.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace graphlog {

inline constexpr int kLogFormatVersion = 1;

// Core event vocabulary the runtime itself emits. Packs extend this set via
// their manifest; appending an undeclared type is an error.
const std::set<std::string>& core_event_types();

struct TypeSet {
  std::set<std::string> event_types;
  std::set<std::string> object_types;
  std::set<std::string> relation_types;
  bool allow_all = false;

  // For inspection of trusted history (diff, lineage, show) where no pack
  // manifest is at hand.
  static TypeSet permissive() { return TypeSet{{}, {}, {}, true}; }

  // Core events only; packs merge their declarations on top.
  static TypeSet core();

  bool event_type_ok(const std::string& t) const {
    return allow_all || event_types.count(t) > 0;
  }
  bool object_type_ok(const std::string& t) const {
    return allow_all || object_types.count(t) > 0;
  }
  bool relation_type_ok(const std::string& t) const {
    return allow_all || relation_types.count(t) > 0;
  }
};

struct ForkOrigin {
  std::string parent_run;
  std::uint64_t cutoff = 0;
  // Config/prompt/budget edits applied to the fork's pack before resumption,
  // recorded so a strict replay of the fork can reconstruct the same pack.
  Value overrides = Value::object();
};

class EventLog {
 public:
  EventLog(std::string run_id, TypeSet types);

  // Copies parent events 1..cutoff field-for-field, ids included. Only valid
  // on an empty log.
  void seed_fork_prefix(std::span<const Event> parent_events, ForkOrigin origin);

  const Event& append(const std::string& type, Value payload,
                      const std::string& actor, std::optional<EventId> caused_by,
                      TimestampSource& ts_source);

  // Appends with an explicit timestamp (replay serves recorded stamps).
  const Event& append_stamped(const std::string& type, Value payload,
                              const std::string& actor,
                              std::optional<EventId> caused_by, TimestampUs ts);

  // Verbatim copy of an existing event record (fork prefixes, replay inputs).
  // Still validated for seq continuity.
  const Event& append_copy(const Event& e);

  void seal() { sealed_ = true; }
  bool sealed() const { return sealed_; }

  const std::string& run() const { return run_; }
  std::uint64_t size() const { return static_cast<std::uint64_t>(events_.size()); }
  const std::vector<Event>& events() const { return events_; }
  // seq is 1-based.
  const Event& at(std::uint64_t seq) const;
  const std::optional<ForkOrigin>& fork_origin() const { return origin_; }
  const TypeSet& types() const { return types_; }

 private:
  const Event& push(Event e);

  std::string run_;
  TypeSet types_;
  std::vector<Event> events_;
  std::optional<ForkOrigin> origin_;
  bool sealed_ = false;
};

// Line-delimited file format: one canonical-serialized header map, then one
// canonical-serialized event per line. Re-saving a loaded log is
// byte-identical.
void save_log(const EventLog& log, const std::filesystem::path& path);
EventLog load_log(const std::filesystem::path& path);

// The exact bytes save_log writes, for byte-level comparisons.
std::string serialize_log(const EventLog& log);
std::string serialize_event_line(const Event& e);

}  // namespace graphlog
