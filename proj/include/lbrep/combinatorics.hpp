#pragma once

/**
 * Compositions: ordered tuples (e_1, ..., e_l) of non-negative integers
 * summing to m. The set of them, E_{l,m}, indexes every basis in the library.
 *
 * Enumeration order is colexicographic: tuples are compared by their last
 * part first. For (l = 2, m = 2) this gives (2,0), (1,1), (0,2).
 */

#include <cstdint>
#include <string>
#include <vector>

namespace lbrep {

class Composition {
 public:
  /// Throws std::invalid_argument if parts is empty or has a negative part.
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int total() const { return total_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool operator==(const Composition&) const = default;

  /// e.g. "[2,0,1]".
  std::string str() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

/// Binomial coefficient; throws std::overflow_error past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// |E_{l,m}| = C(m + l - 1, m).
std::uint64_t composition_count(int l, int m);

/// All of E_{l,m} in colex order.
std::vector<Composition> enumerate_compositions(int l, int m);

/// Position of e in enumerate_compositions(e.length(), e.total()).
std::uint64_t rank(const Composition& e);

/// Inverse of rank. Throws std::out_of_range when index >= |E_{l,m}|.
Composition unrank(std::uint64_t index, int l, int m);

/// Number of inversions of a permutation of {0, ..., n-1}.
int inversion_count(const std::vector<int>& permutation);

}  // namespace lbrep
