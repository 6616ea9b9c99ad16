#pragma once

#include <cstdint>
#include <random>

namespace hetcache {

// splitmix64 step; the de-facto standard seed mixer.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Sub-seed for stream (tag, index) of a master seed. Order-independent:
// depends only on the three inputs, never on call sequence.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
  std::uint64_t s = master;
  std::uint64_t a = splitmix64(s);
  s = a ^ (tag * 0xd1342543de82ef95ull);
  std::uint64_t b = splitmix64(s);
  s = b ^ (index * 0xaf251af3b0f025b5ull);
  return splitmix64(s);
}

// Uniform draw from [0, n) by rejection; avoids modulo bias.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

}  // namespace hetcache
