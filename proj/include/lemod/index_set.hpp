#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

namespace lemod {

using Index = std::size_t;

// Sorted, duplicate-free list of indices. Every finite subset handled by the
// library (ideal members, point subsets, closed sets) uses this form, so
// equality of subsets is plain vector equality.
using IndexSet = std::vector<Index>;

inline IndexSet make_set(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline IndexSet full_set(std::size_t n) {
  IndexSet s(n);
  std::iota(s.begin(), s.end(), Index{0});
  return s;
}

inline bool contains(const IndexSet& s, Index i) {
  return std::binary_search(s.begin(), s.end(), i);
}

// a ⊆ b
inline bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Subset of {0..n-1} selected by the bits of `mask`.
inline IndexSet subset_from_mask(std::uint64_t mask, std::size_t n) {
  IndexSet s;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) s.push_back(i);
  return s;
}

// Same, but picking from an arbitrary ground list.
inline IndexSet subset_from_mask(std::uint64_t mask, const std::vector<Index>& ground) {
  IndexSet s;
  for (std::size_t i = 0; i < ground.size(); ++i)
    if (mask >> i & 1U) s.push_back(ground[i]);
  return make_set(std::move(s));
}

inline std::string to_string(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace lemod
