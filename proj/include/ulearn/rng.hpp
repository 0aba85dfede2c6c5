#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace ulearn {

/// One SplitMix64 step; advances `state` and returns the next 64-bit word.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed of a named substream of `master`. Labels keep the streams of a run
/// (evidence, signals, graph, trial, ...) independent: perturbing one stream
/// leaves draws from the others untouched. Extra indices select per-trial or
/// per-agent substreams of a labeled stream.
std::uint64_t stream_seed(std::uint64_t master, std::string_view label);
std::uint64_t stream_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);
std::uint64_t stream_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t i, std::uint64_t j);

/// mt19937_64 wrapper. All derived draws (uniform01, uniform_int) are built
/// directly from raw engine words so that streams are reproducible across
/// standard library implementations, not just across runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer on the inclusive range [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace ulearn
