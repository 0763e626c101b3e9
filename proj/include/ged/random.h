// Seed derivation and sampling helpers with a fixed algorithm, so that a
// given seed reproduces the same draws on every standard library.

#ifndef GED_RANDOM_H_
#define GED_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace ged {

using Rng = std::mt19937_64;

std::uint64_t SplitMix64(std::uint64_t x);

// FNV-1a over the bytes of `text`.
std::uint64_t HashString(std::string_view text);

// Seed for a named sub-stream of `seed` (a sentence id, an error type, ...).
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view stream);

// Uniform integer in [0, n). n must be positive.
std::size_t UniformIndex(Rng& rng, std::size_t n);

template <typename T>
void Shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = UniformIndex(rng, i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace ged

#endif  // GED_RANDOM_H_
