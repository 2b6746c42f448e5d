#include "lbrep/combinatorics.hpp"

#include <stdexcept>

namespace lbrep {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be non-negative");
    total_ += p;
  }
}

std::string Composition::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t composition_count(int l, int m) {
  if (l < 1 || m < 0) throw std::invalid_argument("compositions need l >= 1 and m >= 0");
  return binomial(static_cast<std::uint64_t>(m + l - 1), static_cast<std::uint64_t>(m));
}

std::vector<Composition> enumerate_compositions(int l, int m) {
  std::vector<Composition> out;
  out.reserve(composition_count(l, m));
  // Odometer over colex order: the last part increases slowest.
  std::vector<int> parts(l, 0);
  parts[0] = m;
  while (true) {
    out.emplace_back(parts);
    // Find the first position j >= 1 that can be incremented by pulling one
    // unit out of the prefix; reset the prefix to (rest, 0, ..., 0).
    int prefix = 0;
    std::size_t j = 0;
    for (; j + 1 < parts.size(); ++j) {
      prefix += parts[j];
      if (prefix > 0) break;
    }
    if (j + 1 >= parts.size()) break;
    // prefix = parts[0..j], positive; move one unit to j + 1.
    parts[j + 1] += 1;
    for (std::size_t i = 0; i <= j; ++i) parts[i] = 0;
    parts[0] = prefix - 1;
  }
  return out;
}

std::uint64_t rank(const Composition& e) {
  const int l = static_cast<int>(e.length());
  int remaining = e.total();
  std::uint64_t r = 0;
  for (int j = l - 1; j >= 1; --j) {
    // Compositions agreeing on positions > j with a smaller part at j.
    for (int v = 0; v < e[j]; ++v) r += composition_count(j, remaining - v);
    remaining -= e[j];
  }
  return r;
}

Composition unrank(std::uint64_t index, int l, int m) {
  const auto count = composition_count(l, m);
  if (index >= count) {
    throw std::out_of_range("index " + std::to_string(index) + " outside E_{" + std::to_string(l) + "," +
                            std::to_string(m) + "} of size " + std::to_string(count));
  }
  std::vector<int> parts(l, 0);
  int remaining = m;
  for (int j = l - 1; j >= 1; --j) {
    int v = 0;
    while (true) {
      auto block = composition_count(j, remaining - v);
      if (index < block) break;
      index -= block;
      ++v;
    }
    parts[j] = v;
    remaining -= v;
  }
  parts[0] = remaining;
  return Composition(std::move(parts));
}

int inversion_count(const std::vector<int>& permutation) {
  int inv = 0;
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    for (std::size_t j = i + 1; j < permutation.size(); ++j) {
      if (permutation[i] > permutation[j]) ++inv;
    }
  }
  return inv;
}

}  // namespace lbrep
