// generate.hpp -- seeded, reproducible random partitions
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "roughmatroid/caps.hpp"
#include "roughmatroid/errors.hpp"
#include "roughmatroid/rough.hpp"

namespace roughmatroid {

namespace detail {

/// mt19937_64 with rejection-sampled bounded draws. The raw engine is
/// bit-exact across implementations; std::uniform_int_distribution is
/// not, so it is avoided.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i)
      std::swap(values[i - 1], values[static_cast<std::size_t>(below(i))]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// A seeded partition of {0..n-1} into exactly `num_blocks` blocks:
/// block sizes are a uniform composition of n (a uniform choice of
/// num_blocks-1 cut points), elements are assigned by a seeded shuffle.
/// Same (n, num_blocks, seed) always yields the same partition.
inline std::vector<std::vector<ElementId>> random_blocks(int n, int num_blocks,
                                                         std::uint64_t seed) {
  if (n < 1 || n > caps::construction || num_blocks < 1 || num_blocks > n)
    throw InvalidParameterError("need 1 <= blocks <= n <= " +
                                std::to_string(caps::construction) + ", got n=" +
                                std::to_string(n) + " blocks=" +
                                std::to_string(num_blocks));
  detail::SeededRng rng(seed);

  std::vector<int> gaps(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int i = 0; i < n - 1; ++i) gaps[static_cast<std::size_t>(i)] = i + 1;
  rng.shuffle(gaps);
  std::vector<int> cuts(gaps.begin(), gaps.begin() + (num_blocks - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::vector<ElementId> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);

  std::vector<std::vector<ElementId>> blocks;
  int start = 0;
  for (int cut : cuts) {
    blocks.emplace_back(order.begin() + start, order.begin() + cut);
    start = cut;
  }
  return blocks;
}

/// Block count drawn from a uniform composition of n (each of the n-1
/// gaps becomes a cut independently), then as random_blocks.
inline std::vector<std::vector<ElementId>> random_blocks(int n, std::uint64_t seed) {
  if (n < 1 || n > caps::construction)
    throw InvalidParameterError("need 1 <= n <= " +
                                std::to_string(caps::construction));
  detail::SeededRng rng(seed);
  int num_blocks = 1;
  for (int i = 0; i < n - 1; ++i) num_blocks += static_cast<int>(rng.next() & 1u);
  return random_blocks(n, num_blocks, rng.next());
}

inline Partition partition_from_index_blocks(Universe universe,
                                             const std::vector<std::vector<ElementId>>& blocks) {
  std::vector<Subset> sets;
  sets.reserve(blocks.size());
  for (const auto& block : blocks) {
    Subset s(universe.size());
    for (ElementId e : block) s = s.with(e);
    sets.push_back(s);
  }
  return Partition(std::move(universe), sets);
}

inline Partition random_partition(int n, int num_blocks, std::uint64_t seed) {
  return partition_from_index_blocks(Universe(n), random_blocks(n, num_blocks, seed));
}

inline Partition random_partition(int n, std::uint64_t seed) {
  return partition_from_index_blocks(Universe(n), random_blocks(n, seed));
}

}  // namespace roughmatroid
