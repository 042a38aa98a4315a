#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace godgraph {

// Raised for malformed family spec strings, bad files, or schema violations.
struct SpecError : std::runtime_error {
  explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a state-space expansion would exceed the configured cap.
struct StateCapExceeded : std::runtime_error {
  StateCapExceeded(const std::string& spec, std::uint64_t cap)
      : std::runtime_error("state cap exceeded for \"" + spec + "\" (cap " +
                           std::to_string(cap) + "; set GODGRAPH_STATE_CAP to raise)"),
        spec_name(spec), cap_value(cap) {}
  std::string spec_name;
  std::uint64_t cap_value;
};

// Global state cap, overridable via the GODGRAPH_STATE_CAP environment variable.
inline std::uint64_t state_cap() {
  static const std::uint64_t cap = [] {
    const char* env = std::getenv("GODGRAPH_STATE_CAP");
    if (env != nullptr && *env != '\0') {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != nullptr && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    }
    return static_cast<std::uint64_t>(20000000);
  }();
  return cap;
}

inline void check_cap(std::uint64_t count, const std::string& spec) {
  if (count > state_cap()) throw StateCapExceeded(spec, state_cap());
}

}  // namespace godgraph
