#pragma once

#include <cstdint>

namespace dgalab {

// 64-bit linear congruential generator (Knuth's constants). Used everywhere
// randomness is needed so corpora and conjugations are reproducible across
// platforms; never use std::mt19937 here, its stream is not part of the
// output contract.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }
  std::uint64_t next_below(std::uint64_t k) { return k ? (next() >> 16) % k : 0; }
  long long next_int(long long lo, long long hi) {  // inclusive range
    return lo + static_cast<long long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace dgalab
