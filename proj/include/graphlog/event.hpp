#pragma once

#include "graphlog/value.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace graphlog {

// Microseconds since the Unix epoch, UTC.
using TimestampUs = std::int64_t;

struct EventId {
  std::string run;
  std::uint64_t seq = 0;

  bool operator==(const EventId&) const = default;
  auto operator<=>(const EventId&) const = default;

  std::string to_string() const { return run + "/" + std::to_string(seq); }
};

// One immutable record in the append-only log. Nothing in the system mutates
// state except by appending these.
struct Event {
  EventId id;
  std::string type;          // dotted name, e.g. "object.created"
  Value payload;
  std::string actor;         // "user", "system", or a behavior name
  std::optional<EventId> caused_by;
  TimestampUs ts = 0;

  bool operator==(const Event&) const = default;
};

Value event_id_to_value(const EventId& id);
EventId event_id_from_value(const Value& v);

Value event_to_value(const Event& e);
Event event_from_value(const Value& v);

// Where append() gets its timestamps. Live runs use the wall clock; offline
// packs and replays use deterministic sources so logs are byte-reproducible.
class TimestampSource {
 public:
  virtual ~TimestampSource() = default;
  virtual TimestampUs next_timestamp() = 0;
};

class SystemClock final : public TimestampSource {
 public:
  TimestampUs next_timestamp() override;
};

// epoch + step * n. The bundled demo pins its clock here so that two runs of
// the same pack produce byte-identical logs.
class FixedStepClock final : public TimestampSource {
 public:
  explicit FixedStepClock(TimestampUs epoch_us, TimestampUs step_us = 1000)
      : next_(epoch_us), step_(step_us) {}

  TimestampUs next_timestamp() override {
    TimestampUs t = next_;
    next_ += step_;
    return t;
  }

 private:
  TimestampUs next_;
  TimestampUs step_;
};

// 2026-01-01T00:00:00Z; the demo pack's fixed time base.
inline constexpr TimestampUs kDemoEpochUs = 1767225600000000;

}  // namespace graphlog
