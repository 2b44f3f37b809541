#pragma once

#include <cstdint>
#include <random>

namespace beamsched {

// Named random substreams. Every stream is reseeded per epoch from
// (root seed, stream id, epoch), so toggling a feature that consumes one
// stream never shifts the draws of another, and runs that share a root seed
// see identical fading/selection sequences regardless of protocol
// (common random numbers across sweep points).
enum class Stream : std::uint64_t {
  placement = 1,
  fading = 2,
  selection = 3,
  contention = 4,
  estimation = 5,
  power_init = 6,
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

inline std::uint64_t derive_seed(std::uint64_t root_seed, Stream stream,
                                 std::uint64_t epoch = 0) {
  std::uint64_t state = root_seed;
  std::uint64_t h = detail::splitmix64(state);
  state ^= static_cast<std::uint64_t>(stream) * 0xd1342543de82ef95ULL;
  h ^= detail::splitmix64(state);
  state ^= (epoch + 1) * 0x2545f4914f6cdd1dULL;
  h ^= detail::splitmix64(state);
  return h;
}

inline std::mt19937_64 substream(std::uint64_t root_seed, Stream stream,
                                 std::uint64_t epoch = 0) {
  return std::mt19937_64(derive_seed(root_seed, stream, epoch));
}

}  // namespace beamsched
