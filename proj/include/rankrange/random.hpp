#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rankrange/profile.hpp"

namespace rankrange {

/// Keeps each pair of a hidden random ranking with probability `density`, so
/// the result is always acyclic.
template <typename Rng>
PartialOrder random_partial_order(int m, double density, Rng& rng) {
  std::vector<Cand> hidden(static_cast<std::size_t>(m));
  std::iota(hidden.begin(), hidden.end(), 0);
  std::shuffle(hidden.begin(), hidden.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<std::pair<Cand, Cand>> pairs;
  for (std::size_t i = 0; i < hidden.size(); ++i)
    for (std::size_t j = i + 1; j < hidden.size(); ++j)
      if (keep(rng)) pairs.emplace_back(hidden[i], hidden[j]);
  return PartialOrder::from_pairs(m, pairs);
}

template <typename Rng>
PartialProfile random_partial_profile(int m, int n, double density, Rng& rng) {
  std::vector<PartialOrder> voters;
  for (int v = 0; v < n; ++v) voters.push_back(random_partial_order(m, density, rng));
  return PartialProfile(m, std::move(voters));
}

template <typename Rng>
LinearOrder random_linear_order(int m, Rng& rng) {
  std::vector<Cand> seq(static_cast<std::size_t>(m));
  std::iota(seq.begin(), seq.end(), 0);
  std::shuffle(seq.begin(), seq.end(), rng);
  return LinearOrder(std::move(seq));
}

}  // namespace rankrange
