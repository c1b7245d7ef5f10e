#pragma once

// Canonical serialization and content hashing.
//
// Every persisted line, cache key, and file hash in the system goes through
// canonicalize(): structurally equal values must produce identical bytes on
// every platform and in every process. The rules:
//
//   - map keys sorted lexicographically by code point (no duplicates possible)
//   - no insignificant whitespace
//   - strings UTF-8, minimally escaped
//   - integers rendered without exponent or leading zeros; integral-valued
//     floats collapse to their integer spelling (2.0 and 2 are the same value)
//   - NaN and infinities are rejected
//   - with integers_only set, any non-integral number is rejected; cache keys
//     for model and tool calls use this mode so no platform float formatting
//     can ever leak into a hash

#include "graphlog/value.hpp"

#include <string>
#include <string_view>

namespace graphlog {

struct CanonicalOptions {
  bool integers_only = false;
};

// Hash function fixed for the whole artifact; recorded in every log header.
inline constexpr const char* kHashFunctionName = "sha256";

// Lowercase hex of a 256-bit digest; always 64 characters.
struct Digest {
  std::string hex;

  bool operator==(const Digest&) const = default;
};

std::string canonicalize(const Value& value, const CanonicalOptions& opts = {});

Digest digest(std::string_view bytes);

// digest(canonicalize(value)) in one step.
Digest canonical_digest(const Value& value, const CanonicalOptions& opts = {});

}  // namespace graphlog
