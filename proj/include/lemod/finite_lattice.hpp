#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lemod/error.hpp"
#include "lemod/index_set.hpp"

namespace lemod {

using Relation = std::vector<std::vector<bool>>;

class FiniteBoundedLattice;
FiniteBoundedLattice make_lattice(std::size_t size, const Relation& leq,
                                  std::vector<std::string> labels);

// A finite poset with all binary joins and meets; top plays the role of e.
// Finite plus bounded plus binary lubs/glbs is the same as complete.
class FiniteBoundedLattice {
 public:
  std::size_t size() const noexcept { return size_; }
  Index top() const noexcept { return top_; }
  Index bottom() const noexcept { return bottom_; }

  bool leq(Index a, Index b) const { return leq_[a * size_ + b] != 0; }
  Index join(Index a, Index b) const { return join_[a * size_ + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size_ + b]; }

  // Folds of the binary tables; the family must be nonempty.
  Index join(std::span<const Index> family) const {
    if (family.empty()) throw Error(ErrorKind::EmptyFamily, "join of an empty family");
    Index acc = family.front();
    for (Index x : family.subspan(1)) acc = join(acc, x);
    return acc;
  }
  Index meet(std::span<const Index> family) const {
    if (family.empty()) throw Error(ErrorKind::EmptyFamily, "meet of an empty family");
    Index acc = family.front();
    for (Index x : family.subspan(1)) acc = meet(acc, x);
    return acc;
  }

  const std::string& label(Index a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  Relation leq_table() const {
    Relation r(size_, std::vector<bool>(size_));
    for (Index a = 0; a < size_; ++a)
      for (Index b = 0; b < size_; ++b) r[a][b] = leq(a, b);
    return r;
  }

  // Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<Index, Index>> hasse_edges() const {
    std::vector<std::pair<Index, Index>> edges;
    for (Index a = 0; a < size_; ++a)
      for (Index b = 0; b < size_; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool cover = true;
        for (Index c = 0; c < size_ && cover; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
        if (cover) edges.emplace_back(a, b);
      }
    return edges;
  }

  friend bool operator==(const FiniteBoundedLattice&, const FiniteBoundedLattice&) = default;

 private:
  friend FiniteBoundedLattice make_lattice(std::size_t, const Relation&, std::vector<std::string>);
  FiniteBoundedLattice() = default;

  std::size_t size_ = 0;
  Index top_ = 0;
  Index bottom_ = 0;
  std::vector<char> leq_;
  std::vector<Index> join_;
  std::vector<Index> meet_;
  std::vector<std::string> labels_;
};

namespace detail {

// Least element of the upper-bound set, if any.
inline std::optional<Index> least_of(const Relation& leq, const std::vector<Index>& candidates) {
  for (Index c : candidates) {
    bool least = true;
    for (Index d : candidates)
      if (!leq[c][d]) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

}  // namespace detail

inline FiniteBoundedLattice make_lattice(std::size_t size, const Relation& leq,
                                         std::vector<std::string> labels = {}) {
  if (size == 0) throw Error(ErrorKind::Unbounded, "empty lattice");
  if (leq.size() != size) throw Error(ErrorKind::NotAPoset, "leq table has wrong row count");
  for (const auto& row : leq)
    if (row.size() != size) throw Error(ErrorKind::NotAPoset, "leq table has a short row");

  for (Index a = 0; a < size; ++a)
    if (!leq[a][a]) throw Error(ErrorKind::NotAPoset, "reflexivity fails at " + std::to_string(a));
  for (Index a = 0; a < size; ++a)
    for (Index b = a + 1; b < size; ++b)
      if (leq[a][b] && leq[b][a])
        throw Error(ErrorKind::NotAPoset, "antisymmetry fails at (" + std::to_string(a) + "," +
                                              std::to_string(b) + ")");
  for (Index a = 0; a < size; ++a)
    for (Index b = 0; b < size; ++b)
      for (Index c = 0; c < size; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c])
          throw Error(ErrorKind::NotAPoset, "transitivity fails at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");

  std::optional<Index> top, bottom;
  for (Index a = 0; a < size; ++a) {
    bool is_top = true, is_bottom = true;
    for (Index b = 0; b < size; ++b) {
      is_top = is_top && leq[b][a];
      is_bottom = is_bottom && leq[a][b];
    }
    if (is_top) top = a;
    if (is_bottom) bottom = a;
  }
  if (!top) throw Error(ErrorKind::Unbounded, "no greatest element");
  if (!bottom) throw Error(ErrorKind::Unbounded, "no least element");

  FiniteBoundedLattice L;
  L.size_ = size;
  L.top_ = *top;
  L.bottom_ = *bottom;
  L.leq_.resize(size * size);
  L.join_.resize(size * size);
  L.meet_.resize(size * size);
  Relation geq(size, std::vector<bool>(size));
  for (Index a = 0; a < size; ++a)
    for (Index b = 0; b < size; ++b) {
      L.leq_[a * size + b] = leq[a][b] ? 1 : 0;
      geq[a][b] = leq[b][a];
    }
  for (Index a = 0; a < size; ++a)
    for (Index b = 0; b < size; ++b) {
      std::vector<Index> upper, lower;
      for (Index c = 0; c < size; ++c) {
        if (leq[a][c] && leq[b][c]) upper.push_back(c);
        if (leq[c][a] && leq[c][b]) lower.push_back(c);
      }
      auto lub = detail::least_of(leq, upper);
      auto glb = detail::least_of(geq, lower);
      if (!lub || !glb)
        throw Error(ErrorKind::NotALattice, std::string(lub ? "no glb" : "no lub") + " for (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
      L.join_[a * size + b] = *lub;
      L.meet_[a * size + b] = *glb;
    }
  if (labels.empty())
    for (Index a = 0; a < size; ++a) labels.push_back(std::to_string(a));
  if (labels.size() != size) throw Error(ErrorKind::NotAPoset, "label count differs from size");
  L.labels_ = std::move(labels);
  return L;
}

// Lattice of a finite family of sets ordered by inclusion. The family must
// already be closed under the lattice operations it needs.
inline FiniteBoundedLattice inclusion_lattice(const std::vector<IndexSet>& family) {
  const std::size_t n = family.size();
  Relation leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (Index a = 0; a < n; ++a) {
    labels.push_back(to_string(family[a]));
    for (Index b = 0; b < n; ++b) leq[a][b] = is_subset(family[a], family[b]);
  }
  return make_lattice(n, leq, std::move(labels));
}

// Chain 0 < 1 < ... < n-1.
inline FiniteBoundedLattice chain_lattice(std::size_t n) {
  Relation leq(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) leq[a][b] = a <= b;
  return make_lattice(n, leq);
}

}  // namespace lemod
