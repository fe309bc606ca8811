#pragma once

#include <cstdint>
#include <string_view>

namespace fsrs {

/// Counter-based random stream (splitmix64). Streams are derived, not
/// advanced, from a master seed: key = (seed, purpose tag, indices), so
/// every stochastic operation owns an independent reproducible stream.
/// Value type; copying snapshots the stream state.
class RngStream {
 public:
  explicit RngStream(std::uint64_t raw_state) : state_(raw_state) {}

  static RngStream derive(std::uint64_t master_seed, std::string_view tag,
                          std::uint64_t a = 0, std::uint64_t b = 0,
                          std::uint64_t c = 0);

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer in [0, n); n must be > 0.
  std::uint64_t uniform_int(std::uint64_t n);
  /// Standard normal (Box-Muller, pinned arithmetic; second value cached).
  double normal();

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// FNV-1a 64-bit over a byte string; also used for artifact checksums.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace fsrs
