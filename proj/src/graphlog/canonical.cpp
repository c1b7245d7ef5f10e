#include "graphlog/canonical.hpp"

#include "graphlog/errors.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace graphlog {

namespace {

void write_escaped_string(std::string& out, const std::string& s) {
  out.push_back('"');
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(static_cast<char>(c));
        }
    }
  }
  out.push_back('"');
}

void write_number(std::string& out, const Value& v, const CanonicalOptions& opts) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      out += std::to_string(v.get<std::uint64_t>());
    } else {
      out += std::to_string(v.get<std::int64_t>());
    }
    return;
  }
  double d = v.get<double>();
  if (!std::isfinite(d)) {
    throw NonCanonicalizableError("non-finite number is not canonicalizable");
  }
  // Integral-valued floats collapse to the integer spelling so semantically
  // identical numbers canonicalize identically.
  if (d == std::trunc(d) && std::abs(d) < 9.007199254740992e15) {
    out += std::to_string(static_cast<std::int64_t>(d));
    return;
  }
  if (opts.integers_only) {
    throw NonCanonicalizableError(
        "non-integer number rejected in hash-relevant payload");
  }
  // Shortest round-trip spelling; pure integer arithmetic underneath, so the
  // bytes are stable across platforms.
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), d);
  out.append(buf.data(), ptr);
}

void write_canonical(std::string& out, const Value& v, const CanonicalOptions& opts) {
  switch (v.type()) {
    case Value::value_t::null:
      out += "null";
      break;
    case Value::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case Value::value_t::number_integer:
    case Value::value_t::number_unsigned:
    case Value::value_t::number_float:
      write_number(out, v, opts);
      break;
    case Value::value_t::string:
      write_escaped_string(out, v.get_ref<const std::string&>());
      break;
    case Value::value_t::array: {
      out.push_back('[');
      bool first = true;
      for (const auto& item : v) {
        if (!first) out.push_back(',');
        first = false;
        write_canonical(out, item, opts);
      }
      out.push_back(']');
      break;
    }
    case Value::value_t::object: {
      // Default object_t is std::map<std::string, ...>: iteration is already
      // sorted by code point.
      out.push_back('{');
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        write_escaped_string(out, it.key());
        out.push_back(':');
        write_canonical(out, it.value(), opts);
      }
      out.push_back('}');
      break;
    }
    default:
      throw NonCanonicalizableError("binary/discarded value is not canonicalizable");
  }
}

}  // namespace

std::string canonicalize(const Value& value, const CanonicalOptions& opts) {
  std::string out;
  out.reserve(64);
  write_canonical(out, value, opts);
  return out;
}

Digest digest(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int md_len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &md_len, EVP_sha256(),
                 nullptr) != 1) {
    throw Error("sha256 digest failed");
  }
  static const char* hexdigits = "0123456789abcdef";
  std::string hex;
  hex.reserve(md_len * 2);
  for (unsigned int i = 0; i < md_len; ++i) {
    hex.push_back(hexdigits[md[i] >> 4]);
    hex.push_back(hexdigits[md[i] & 0x0f]);
  }
  return Digest{hex};
}

Digest canonical_digest(const Value& value, const CanonicalOptions& opts) {
  return digest(canonicalize(value, opts));
}

}  // namespace graphlog
