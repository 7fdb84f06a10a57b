#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace crdsa {

namespace detail {

inline std::size_t env_limit(const char* name, std::size_t dflt, std::size_t hard_max) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return dflt;
  }
  char* end    = nullptr;
  long  parsed = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed < 1) {
    return dflt;
  }
  auto value = static_cast<std::size_t>(parsed);
  return value > hard_max ? hard_max : value;
}

}  // namespace detail

// Node sets default to at most 12 labels (3^12 elements in C_3^J);
// CRDSA_MAX_NODES raises the cap up to the bitmask limit.
inline std::size_t node_cap() {
  return detail::env_limit("CRDSA_MAX_NODES", 12, 32);
}

// Carrier cap for the exhaustive finite-algebra operations
// (subuniverse enumeration, prime filters, spectra).
inline std::size_t carrier_cap() {
  return detail::env_limit("CRDSA_MAX_CARRIER", 81, 4096);
}

}  // namespace crdsa
