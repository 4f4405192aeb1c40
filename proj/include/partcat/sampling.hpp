#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <vector>

#include "partcat/prob_vec.hpp"

namespace partcat {

/// Uniformly random composition of `denominator` into n positive parts,
/// returned as the probability vector parts / denominator (unsorted).
template <class Rng>
ProbVec random_composition(Rng& rng, std::size_t n, long denominator) {
  std::vector<long> cuts(static_cast<std::size_t>(denominator - 1));
  for (std::size_t i = 0; i < cuts.size(); ++i) cuts[i] = static_cast<long>(i) + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(n - 1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Rat> comps;
  long prev = 0;
  for (long c : cuts) {
    comps.push_back(rat(c - prev, denominator));
    prev = c;
  }
  comps.push_back(rat(denominator - prev, denominator));
  return ProbVec(std::move(comps));
}

/// Random strictly positive probability vector with components k/d, d <= max_den, d >= n.
template <class Rng>
ProbVec random_prob_vec(Rng& rng, std::size_t n, long max_den) {
  std::uniform_int_distribution<long> den(static_cast<long>(n), std::max<long>(static_cast<long>(n), max_den));
  return random_composition(rng, n, den(rng));
}

}  // namespace partcat
