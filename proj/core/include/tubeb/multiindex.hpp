#pragma once

#include <vector>

namespace tubeb {

/**
 * Derivative multi-index gamma = (gamma_1, ..., gamma_n) with the anisotropic
 * weights of the domain: the last coordinate counts double.
 *
 *   angular_weight  <gamma> = gamma_n + |gamma'| / 2
 *   size_weight     |gamma| = <gamma> + |gamma'| / 2 = gamma_n + |gamma'|
 */
struct MultiIndex {
  std::vector<int> k;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> orders) : k(std::move(orders)) {}
  /** gamma = m * e_j in dimension n (0-based j). */
  static MultiIndex unit(int n, int j, int m = 1);

  int n() const { return static_cast<int>(k.size()); }
  int order() const;            // sum of entries
  int prime_order() const;      // |gamma'| = sum over the first n-1 entries
  double angular_weight() const;
  double size_weight() const;
};

}  // namespace tubeb
