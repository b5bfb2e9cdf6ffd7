#pragma once

#include <random>
#include <utility>
#include <vector>

#include "coxlab/int_matrix.hpp"
#include "coxlab/poset.hpp"

namespace coxlab::test {

// Random poset on k elements: each pair i < j becomes a relation with
// probability p, then from_covers closes and reduces.
inline Poset random_poset(std::mt19937_64& rng, std::size_t k, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::pair<Element, Element>> rel;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (coin(rng)) rel.emplace_back(i, j);
  return Poset::from_covers(labels, rel);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace coxlab::test
