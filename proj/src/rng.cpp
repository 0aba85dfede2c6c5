#include "ulearn/rng.hpp"

#include <stdexcept>

namespace ulearn {
namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t state = a ^ (b + 0x9e3779b97f4a7c15ULL);
  return splitmix64(state);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::string_view label) {
  return mix(master, fnv1a(label));
}

std::uint64_t stream_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index) {
  return mix(stream_seed(master, label), index);
}

std::uint64_t stream_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t i, std::uint64_t j) {
  return mix(stream_seed(master, label, i), j);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // rejection sampling keeps the draw unbiased and engine-portable
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t raw;
  do {
    raw = engine_();
  } while (raw >= limit);
  return lo + static_cast<std::int64_t>(raw % span);
}

}  // namespace ulearn
