#pragma once

#include <cstdint>
#include <string_view>

namespace rbu {

inline constexpr std::uint64_t kDefaultSeed = 42;

// SplitMix64 finalizer; a bijective mix of 64 bits.
std::uint64_t mix64(std::uint64_t x);

// Deterministic child seed derived from a parent seed and a sequence of keys.
// Independent of call order across threads, so parallel and serial schedules
// draw identical streams.
std::uint64_t derive_seed(std::uint64_t parent, std::string_view key);
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t key);

template <typename First, typename Second, typename... Rest>
std::uint64_t derive_seed(std::uint64_t parent, First first, Second second, Rest... rest) {
  return derive_seed(derive_seed(parent, first), second, rest...);
}

}  // namespace rbu
