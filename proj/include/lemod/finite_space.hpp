#pragma once

// Finite topological spaces given by their family of closed sets, and the
// point-set notions used on prime spectra: closures, irreducibility, generic
// points, separation, connectedness, spectrality, continuity of maps.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lemod/error.hpp"
#include "lemod/index_set.hpp"

namespace lemod {

class FiniteSpace {
 public:
  // Sorts and deduplicates the family, then checks that it contains ∅ and the
  // whole space and is closed under binary unions and intersections.
  static FiniteSpace from_closed_sets(std::size_t n, std::vector<IndexSet> closed) {
    for (auto& c : closed) {
      c = make_set(std::move(c));
      if (!c.empty() && c.back() >= n)
        throw Error(ErrorKind::TopologyAxiomViolation, "closed set " + to_string(c) +
                                                           " leaves the space");
    }
    std::sort(closed.begin(), closed.end());
    closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
    FiniteSpace X(n, std::move(closed));
    if (!X.is_closed({})) throw Error(ErrorKind::TopologyAxiomViolation, "∅ is not closed");
    if (!X.is_closed(full_set(n)))
      throw Error(ErrorKind::TopologyAxiomViolation, "the whole space is not closed");
    for (const auto& a : X.closed_)
      for (const auto& b : X.closed_) {
        if (!X.is_closed(set_union(a, b)))
          throw Error(ErrorKind::TopologyAxiomViolation,
                      "union of " + to_string(a) + " and " + to_string(b) + " is not closed");
        if (!X.is_closed(set_intersection(a, b)))
          throw Error(ErrorKind::TopologyAxiomViolation, "intersection of " + to_string(a) +
                                                             " and " + to_string(b) +
                                                             " is not closed");
      }
    return X;
  }

  std::size_t size() const noexcept { return size_; }
  IndexSet points() const { return full_set(size_); }
  const std::vector<IndexSet>& closed_sets() const noexcept { return closed_; }

  std::vector<IndexSet> open_sets() const {
    std::vector<IndexSet> out;
    for (const auto& c : closed_) out.push_back(complement(c));
    std::sort(out.begin(), out.end());
    return out;
  }

  IndexSet complement(const IndexSet& y) const { return set_difference(points(), y); }

  bool is_closed(const IndexSet& y) const {
    return std::binary_search(closed_.begin(), closed_.end(), y);
  }
  bool is_open(const IndexSet& y) const { return is_closed(complement(y)); }

  // Smallest closed set containing y.
  IndexSet closure(const IndexSet& y) const {
    IndexSet best = points();
    for (const auto& c : closed_)
      if (c.size() < best.size() && is_subset(y, c)) best = c;
    return best;
  }
  IndexSet point_closure(Index p) const { return closure({p}); }

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  FiniteSpace(std::size_t n, std::vector<IndexSet> closed) : size_(n), closed_(std::move(closed)) {}

  std::size_t size_;
  std::vector<IndexSet> closed_;
};

// Calls fn on every subset of {0..n-1}, empty set first.
template <typename Fn>
void for_each_subset(std::size_t n, Fn&& fn) {
  if (n > 24) throw std::length_error("subset enumeration beyond 24 points");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) fn(subset_from_mask(mask, n));
}

// ---------------------------------------------------------------------------
// Irreducibility and generic points
// ---------------------------------------------------------------------------

// Y (nonempty) is irreducible when it is not covered by two closed sets
// neither of which contains it.
inline bool is_irreducible(const FiniteSpace& X, const IndexSet& y) {
  if (y.empty()) throw Error(ErrorKind::EmptyFamily, "irreducibility of the empty set");
  const auto& closed = X.closed_sets();
  for (const auto& c1 : closed) {
    if (is_subset(y, c1)) continue;
    for (const auto& c2 : closed) {
      if (is_subset(y, c2)) continue;
      if (is_subset(y, set_union(c1, c2))) return false;
    }
  }
  return true;
}

inline std::vector<IndexSet> maximal_sets(std::vector<IndexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<IndexSet> out;
  for (const auto& a : family) {
    bool maximal = true;
    for (const auto& b : family)
      if (a != b && is_subset(a, b)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

// Components of a finite space are the closures of points that are maximal
// under inclusion.
inline std::vector<IndexSet> irreducible_components(const FiniteSpace& X) {
  std::vector<IndexSet> closures;
  for (Index p = 0; p < X.size(); ++p) closures.push_back(X.point_closure(p));
  return maximal_sets(std::move(closures));
}

// Maximal irreducible subsets by scanning every subset.
inline std::vector<IndexSet> irreducible_components_brute_force(const FiniteSpace& X) {
  std::vector<IndexSet> irreducible;
  for_each_subset(X.size(), [&](const IndexSet& y) {
    if (!y.empty() && is_irreducible(X, y)) irreducible.push_back(y);
  });
  return maximal_sets(std::move(irreducible));
}

inline std::vector<IndexSet> irreducible_closed_sets(const FiniteSpace& X) {
  std::vector<IndexSet> out;
  for (const auto& c : X.closed_sets())
    if (!c.empty() && is_irreducible(X, c)) out.push_back(c);
  return out;
}

// Points y of Y with closure({y}) = Y. Empty when Y is not closed.
inline std::vector<Index> generic_points(const FiniteSpace& X, const IndexSet& y) {
  if (y.empty()) throw Error(ErrorKind::EmptyFamily, "generic points of the empty set");
  std::vector<Index> out;
  for (Index p : y)
    if (X.point_closure(p) == y) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Point-set properties
// ---------------------------------------------------------------------------

inline bool is_t0(const FiniteSpace& X) {
  for (Index p = 0; p < X.size(); ++p)
    for (Index q = p + 1; q < X.size(); ++q)
      if (X.point_closure(p) == X.point_closure(q)) return false;
  return true;
}

inline bool is_t1(const FiniteSpace& X) {
  for (Index p = 0; p < X.size(); ++p)
    if (!X.is_closed({p})) return false;
  return true;
}

// No closed set other than ∅ and X has a closed complement.
inline bool is_connected(const FiniteSpace& X) {
  for (const auto& c : X.closed_sets()) {
    if (c.empty() || c.size() == X.size()) continue;
    if (X.is_open(c)) return false;
  }
  return true;
}

struct QuasiCompactness {
  bool holds = false;
  // A finite subfamily of the open sets covering the subset.
  std::vector<IndexSet> subcover;
  std::string note;
};

// Covers Y greedily from the (finite) family of all open sets and keeps the
// subcover. Every open cover of a subset of a finite space is already finite,
// so this always succeeds; the subcover is returned as evidence.
inline QuasiCompactness quasi_compact(const FiniteSpace& X, const IndexSet& y) {
  QuasiCompactness out;
  out.note = "finite space: every open cover is finite";
  const auto opens = X.open_sets();
  IndexSet uncovered = y;
  while (!uncovered.empty()) {
    const IndexSet* best = nullptr;
    std::size_t best_gain = 0;
    for (const auto& u : opens) {
      const auto gain = set_intersection(u, uncovered).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = &u;
      }
    }
    if (!best) return out;
    out.subcover.push_back(*best);
    uncovered = set_difference(uncovered, *best);
  }
  out.holds = true;
  return out;
}

struct SpectralClauses {
  bool t0 = false;
  bool quasi_compact = false;
  bool compact_opens_closed_under_intersection = false;
  bool compact_opens_form_basis = false;
  bool generic_points = false;

  bool all() const {
    return t0 && quasi_compact && compact_opens_closed_under_intersection &&
           compact_opens_form_basis && generic_points;
  }
};

// Every clause of the definition of a spectral space, evaluated directly.
inline SpectralClauses spectral_clauses(const FiniteSpace& X) {
  SpectralClauses s;
  s.t0 = is_t0(X);
  s.quasi_compact = quasi_compact(X, X.points()).holds;

  std::vector<IndexSet> compact_opens;
  for (const auto& u : X.open_sets())
    if (quasi_compact(X, u).holds) compact_opens.push_back(u);
  auto is_compact_open = [&](const IndexSet& u) {
    return std::find(compact_opens.begin(), compact_opens.end(), u) != compact_opens.end();
  };

  s.compact_opens_closed_under_intersection = true;
  for (const auto& u : compact_opens)
    for (const auto& v : compact_opens)
      if (!is_compact_open(set_intersection(u, v))) s.compact_opens_closed_under_intersection = false;

  // Each open set is the union of the compact opens it contains.
  s.compact_opens_form_basis = true;
  for (const auto& u : X.open_sets()) {
    IndexSet covered;
    for (const auto& v : compact_opens)
      if (is_subset(v, u)) covered = set_union(covered, v);
    if (covered != u) s.compact_opens_form_basis = false;
  }

  s.generic_points = true;
  for (const auto& c : irreducible_closed_sets(X))
    if (generic_points(X, c).empty()) s.generic_points = false;
  return s;
}

inline bool is_spectral(const FiniteSpace& X) { return spectral_clauses(X).all(); }

struct PointSetProperties {
  bool t0 = false;
  bool t1 = false;
  bool connected = false;
  bool quasi_compact = false;
  bool spectral = false;
  std::string note;
};

inline PointSetProperties point_set_properties(const FiniteSpace& X) {
  PointSetProperties p;
  p.t0 = is_t0(X);
  p.t1 = is_t1(X);
  p.connected = is_connected(X);
  const auto qc = quasi_compact(X, X.points());
  p.quasi_compact = qc.holds;
  p.note = qc.note;
  p.spectral = is_spectral(X);
  return p;
}

// Edges p -> q with q in the closure of {p}, p != q.
inline std::vector<std::pair<Index, Index>> specialization_edges(const FiniteSpace& X) {
  std::vector<std::pair<Index, Index>> edges;
  for (Index p = 0; p < X.size(); ++p)
    for (Index q : X.point_closure(p))
      if (q != p) edges.emplace_back(p, q);
  return edges;
}

// ---------------------------------------------------------------------------
// Maps between finite spaces, given as tables f[x] for x in the domain.
// ---------------------------------------------------------------------------

inline IndexSet image(std::span<const Index> f, const IndexSet& a) {
  std::vector<Index> out;
  for (Index x : a) out.push_back(f[x]);
  return make_set(std::move(out));
}

inline IndexSet preimage(std::span<const Index> f, const IndexSet& b) {
  IndexSet out;
  for (Index x = 0; x < f.size(); ++x)
    if (contains(b, f[x])) out.push_back(x);
  return out;
}

inline bool is_injective(std::span<const Index> f) {
  return make_set(std::vector<Index>(f.begin(), f.end())).size() == f.size();
}

inline bool is_surjective(std::span<const Index> f, std::size_t codomain_size) {
  return make_set(std::vector<Index>(f.begin(), f.end())).size() == codomain_size;
}

inline bool is_continuous(const FiniteSpace& domain, const FiniteSpace& codomain,
                          std::span<const Index> f) {
  for (const auto& c : codomain.closed_sets())
    if (!domain.is_closed(preimage(f, c))) return false;
  return true;
}

inline bool is_closed_map(const FiniteSpace& domain, const FiniteSpace& codomain,
                          std::span<const Index> f) {
  for (const auto& c : domain.closed_sets())
    if (!codomain.is_closed(image(f, c))) return false;
  return true;
}

inline bool is_open_map(const FiniteSpace& domain, const FiniteSpace& codomain,
                        std::span<const Index> f) {
  for (const auto& u : domain.open_sets())
    if (!codomain.is_open(image(f, u))) return false;
  return true;
}

inline bool is_homeomorphism(const FiniteSpace& domain, const FiniteSpace& codomain,
                             std::span<const Index> f) {
  return f.size() == domain.size() && is_injective(f) && is_surjective(f, codomain.size()) &&
         is_continuous(domain, codomain, f) && is_closed_map(domain, codomain, f);
}

namespace detail {

inline bool extend_homeomorphism(const std::vector<IndexSet>& cx, const std::vector<IndexSet>& cy,
                                 std::vector<Index>& f, std::vector<char>& used, Index next) {
  const std::size_t n = cx.size();
  if (next == n) return true;
  for (Index target = 0; target < n; ++target) {
    if (used[target]) continue;
    bool consistent = true;
    for (Index p = 0; p < next && consistent; ++p)
      consistent = contains(cx[p], next) == contains(cy[f[p]], target) &&
                   contains(cx[next], p) == contains(cy[target], f[p]);
    if (!consistent || cx[next].size() != cy[target].size()) continue;
    f[next] = target;
    used[target] = 1;
    if (extend_homeomorphism(cx, cy, f, used, next + 1)) return true;
    used[target] = 0;
  }
  return false;
}

}  // namespace detail

// A finite topology is determined by its specialization preorder, so a
// homeomorphism is a bijection preserving "q in closure{p}" both ways.
inline bool are_homeomorphic(const FiniteSpace& X, const FiniteSpace& Y) {
  if (X.size() != Y.size() || X.closed_sets().size() != Y.closed_sets().size()) return false;
  std::vector<IndexSet> cx, cy;
  for (Index p = 0; p < X.size(); ++p) {
    cx.push_back(X.point_closure(p));
    cy.push_back(Y.point_closure(p));
  }
  std::vector<Index> f(X.size());
  std::vector<char> used(X.size(), 0);
  return detail::extend_homeomorphism(cx, cy, f, used, 0);
}

}  // namespace lemod
