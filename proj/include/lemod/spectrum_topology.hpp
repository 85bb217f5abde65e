#pragma once

// The prime spectrum X^M of an le-module with its varieties V(n), V*(n),
// the three closed-set families and the basic opens X_r.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lemod/check.hpp"
#include "lemod/error.hpp"
#include "lemod/finite_ring.hpp"
#include "lemod/finite_space.hpp"
#include "lemod/index_set.hpp"
#include "lemod/le_module.hpp"

namespace lemod {

// An le-module together with everything derived from it that the topology
// code needs: Spec(M), the colon ideal of each point, the submodule elements,
// and the ideals and prime spectrum of the ring. Points are addressed by
// their position in points(); positions follow lattice index order.
class ModuleSpectrum {
 public:
  explicit ModuleSpectrum(LeModule module)
      : module_(std::move(module)),
        points_(spec(module_)),
        submodules_(lemod::submodule_elements(module_)),
        ring_ideals_(all_ideals(module_.ring())),
        ring_spectrum_(spec_ring(module_.ring())) {
    for (Index p : points_) colons_.push_back(colon(module_, p));
  }

  const LeModule& module() const noexcept { return module_; }
  const FiniteRing& ring() const noexcept { return module_.ring(); }
  const std::vector<Index>& points() const noexcept { return points_; }
  const std::vector<Ideal>& colons() const noexcept { return colons_; }
  const std::vector<Index>& submodule_elements() const noexcept { return submodules_; }
  const std::vector<Ideal>& ring_ideals() const noexcept { return ring_ideals_; }
  const RingSpectrum& ring_spectrum() const noexcept { return ring_spectrum_; }

  std::size_t size() const noexcept { return points_.size(); }
  IndexSet all() const { return full_set(points_.size()); }

  std::optional<Index> position(Index lattice_element) const {
    auto it = std::find(points_.begin(), points_.end(), lattice_element);
    if (it == points_.end()) return std::nullopt;
    return static_cast<Index>(it - points_.begin());
  }

  // Lattice elements of a set of positions.
  std::vector<Index> elements_of(const IndexSet& positions) const {
    std::vector<Index> out;
    for (Index k : positions) out.push_back(points_[k]);
    return out;
  }

 private:
  LeModule module_;
  std::vector<Index> points_;
  std::vector<Ideal> colons_;
  std::vector<Index> submodules_;
  std::vector<Ideal> ring_ideals_;
  RingSpectrum ring_spectrum_;
};

// V(n) = { p : n <= p }.
inline IndexSet variety(const ModuleSpectrum& S, Index n) {
  IndexSet out;
  for (Index k = 0; k < S.size(); ++k)
    if (S.module().leq(n, S.points()[k])) out.push_back(k);
  return out;
}

// V*(n) = { p : (n:e) ⊆ (p:e) }.
inline IndexSet variety_star(const ModuleSpectrum& S, Index n) {
  const Ideal I = colon(S.module(), n);
  IndexSet out;
  for (Index k = 0; k < S.size(); ++k)
    if (is_subset(I, S.colons()[k])) out.push_back(k);
  return out;
}

// Spec_P(M) as positions; P need not be prime here.
inline IndexSet spec_P_positions(const ModuleSpectrum& S, const Ideal& P) {
  IndexSet out;
  for (Index k = 0; k < S.size(); ++k)
    if (S.colons()[k] == P) out.push_back(k);
  return out;
}

// X_r = X^M - V*(re).
inline IndexSet basic_open(const ModuleSpectrum& S, Index r) {
  return set_difference(S.all(), variety_star(S, S.module().act(r, S.module().top())));
}

// ℑ(Y): meet of the points in Y.
inline Index im_meet(const ModuleSpectrum& S, const IndexSet& y) {
  if (y.empty()) throw Error(ErrorKind::EmptyFamily, "meet over an empty set of points");
  return S.module().lattice().meet(S.elements_of(y));
}

// ---------------------------------------------------------------------------
// Closed-set families and topologies
// ---------------------------------------------------------------------------

enum class TopologyKind { Quasi, Star, Prime };

inline std::string_view to_string(TopologyKind k) {
  switch (k) {
    case TopologyKind::Quasi: return "quasi";
    case TopologyKind::Star: return "star";
    case TopologyKind::Prime: return "prime";
  }
  return "?";
}

namespace detail {
inline std::vector<IndexSet> canonical(std::set<IndexSet> family) {
  return {family.begin(), family.end()};
}
}  // namespace detail

// {V(n) : n submodule element}
inline std::vector<IndexSet> family_V(const ModuleSpectrum& S) {
  std::set<IndexSet> f;
  for (Index n : S.submodule_elements()) f.insert(variety(S, n));
  return detail::canonical(std::move(f));
}

// {V*(n) : n submodule element}
inline std::vector<IndexSet> family_V_star(const ModuleSpectrum& S) {
  std::set<IndexSet> f;
  for (Index n : S.submodule_elements()) f.insert(variety_star(S, n));
  return detail::canonical(std::move(f));
}

// {V(Ie) : I ideal of R}
inline std::vector<IndexSet> family_V_prime(const ModuleSpectrum& S) {
  std::set<IndexSet> f;
  for (const auto& I : S.ring_ideals()) f.insert(variety(S, ideal_action(S.module(), I)));
  return detail::canonical(std::move(f));
}

// V(n1) ∪ V(n2) is again some V(n) for every pair.
inline bool is_top_le_module(const ModuleSpectrum& S) {
  const auto family = family_V(S);
  for (const auto& a : family)
    for (const auto& b : family)
      if (!std::binary_search(family.begin(), family.end(), set_union(a, b))) return false;
  return true;
}

struct SpectrumTopology {
  TopologyKind kind;
  std::vector<Index> points;  // lattice indices of the points
  FiniteSpace space;
};

struct Topologies {
  SpectrumTopology star;
  SpectrumTopology prime;
  std::optional<SpectrumTopology> quasi;
};

inline SpectrumTopology make_topology(const ModuleSpectrum& S, TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Star:
      return {kind, S.points(), FiniteSpace::from_closed_sets(S.size(), family_V_star(S))};
    case TopologyKind::Prime:
      return {kind, S.points(), FiniteSpace::from_closed_sets(S.size(), family_V_prime(S))};
    case TopologyKind::Quasi:
      if (!is_top_le_module(S))
        throw Error(ErrorKind::NotTopLeModule, "the varieties V(n) are not closed under unions");
      return {kind, S.points(), FiniteSpace::from_closed_sets(S.size(), family_V(S))};
  }
  throw Error(ErrorKind::TopologyAxiomViolation, "unknown topology kind");
}

// τ*, τ' and (for top le-modules) τ. The star and prime families must agree.
inline Topologies build_topologies(const ModuleSpectrum& S) {
  auto star = make_topology(S, TopologyKind::Star);
  auto prime = make_topology(S, TopologyKind::Prime);
  if (star.space.closed_sets() != prime.space.closed_sets())
    throw Error(ErrorKind::TopologyAxiomViolation, "V* family differs from the V(Ie) family");
  std::optional<SpectrumTopology> quasi;
  if (is_top_le_module(S)) quasi = make_topology(S, TopologyKind::Quasi);
  return {std::move(star), std::move(prime), std::move(quasi)};
}

// The Zariski topology τ*(M).
inline FiniteSpace zariski_space(const ModuleSpectrum& S) {
  return FiniteSpace::from_closed_sets(S.size(), family_V_star(S));
}

// ---------------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------------

// V(Ie) ∪ V(Je) = V((I∩J)e) = V((IJ)e), and the same with V*.
inline Check union_intersection_check(const ModuleSpectrum& S, const Ideal& I, const Ideal& J) {
  Check c;
  const auto& M = S.module();
  const auto& R = S.ring();
  const Index ie = ideal_action(M, I), je = ideal_action(M, J);
  const Index cap = ideal_action(M, ideal_intersect(I, J));
  const Index prod = ideal_action(M, ideal_product(R, I, J));
  const std::string w = "I=" + to_string(I) + " J=" + to_string(J);
  const auto u = set_union(variety(S, ie), variety(S, je));
  if (u != variety(S, cap) || u != variety(S, prod)) c.fail("V form, " + w);
  const auto us = set_union(variety_star(S, ie), variety_star(S, je));
  if (us != variety_star(S, cap) || us != variety_star(S, prod)) c.fail("V* form, " + w);
  return c;
}

// V*(re) ∪ V*(se) = V*((rs)e).
inline Check union_element_check(const ModuleSpectrum& S, Index r, Index s) {
  Check c;
  const auto& M = S.module();
  const auto lhs =
      set_union(variety_star(S, M.act(r, M.top())), variety_star(S, M.act(s, M.top())));
  if (lhs != variety_star(S, M.act(S.ring().mul(r, s), M.top())))
    c.fail("r=" + std::to_string(r) + " s=" + std::to_string(s));
  return c;
}

// V*(n) = ∪_{P ⊇ (n:e)} Spec_P(M) = V*((n:e)e) = V((n:e)e), and
// V(Ie) = V*(Ie) for I = (n:e).
inline Check vstar_decomposition_check(const ModuleSpectrum& S, Index n) {
  Check c;
  const auto& M = S.module();
  const Ideal I = colon(M, n);
  const auto vs = variety_star(S, n);
  IndexSet by_primes;
  for (const auto& P : S.ring_spectrum().points)
    if (is_subset(I, P)) by_primes = set_union(by_primes, spec_P_positions(S, P));
  const std::string w = "n=" + std::to_string(n);
  if (vs != by_primes) c.fail("union of Spec_P, " + w);
  const Index ie = ideal_action(M, I);
  if (vs != variety_star(S, ie)) c.fail("V*((n:e)e), " + w);
  if (vs != variety(S, ie)) c.fail("V((n:e)e), " + w);
  if (variety(S, ie) != variety_star(S, ie)) c.fail("V(Ie)=V*(Ie), " + w);
  return c;
}

struct BasisReport {
  Check product_rule;         // X_{rs} = X_r ∩ X_s
  Check ideal_intersection;   // V*(Ie) = ∩_{a∈I} V*(ae)
  Check opens_are_unions;     // every τ*-open is a union of basic opens
  Check basic_opens_are_open;

  bool ok() const { return product_rule.ok && ideal_intersection.ok && opens_are_unions.ok &&
                           basic_opens_are_open.ok; }
};

inline BasisReport basis_checks(const ModuleSpectrum& S) {
  BasisReport rep;
  const auto& M = S.module();
  const auto& R = S.ring();
  const auto X = zariski_space(S);
  std::vector<IndexSet> basis;
  for (Index r = 0; r < R.order(); ++r) basis.push_back(basic_open(S, r));

  for (Index r = 0; r < R.order(); ++r) {
    if (!X.is_open(basis[r])) rep.basic_opens_are_open.fail("r=" + std::to_string(r));
    for (Index s = 0; s < R.order(); ++s)
      if (basis[R.mul(r, s)] != set_intersection(basis[r], basis[s]))
        rep.product_rule.fail("r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
  for (const auto& I : S.ring_ideals()) {
    IndexSet meet = S.all();
    for (Index a : I.members) meet = set_intersection(meet, variety_star(S, M.act(a, M.top())));
    if (variety_star(S, ideal_action(M, I)) != meet) rep.ideal_intersection.fail("I=" + to_string(I));
  }
  for (const auto& u : X.open_sets()) {
    IndexSet covered;
    for (const auto& b : basis)
      if (is_subset(b, u)) covered = set_union(covered, b);
    if (covered != u) rep.opens_are_unions.fail("U=" + to_string(u));
  }
  return rep;
}

// closure(Y) computed from the closed-set family agrees with V*(ℑ(Y)).
inline Check closure_check(const ModuleSpectrum& S, const FiniteSpace& X, const IndexSet& y) {
  Check c;
  if (X.closure(y) != variety_star(S, im_meet(S, y))) c.fail("Y=" + to_string(y));
  return c;
}

// T1 <=> (a) every (p:e) is maximal in Φ = {(p:e)} and (b) |Spec_P(M)| <= 1.
struct T1Report {
  std::vector<Clause> clauses;  // "T1", "(a)&(b)"
  bool holds() const { return all_equal(clauses); }
};

inline T1Report phi_and_T1_check(const ModuleSpectrum& S) {
  const auto X = zariski_space(S);
  bool maximal = true;
  for (const auto& P : S.colons())
    for (const auto& Q : S.colons())
      if (P != Q && is_subset(P, Q)) maximal = false;
  bool at_most_one = true;
  for (const auto& P : S.ring_spectrum().points)
    if (spec_P_positions(S, P).size() > 1) at_most_one = false;
  return {{{"T1", is_t1(X)}, {"(a)&(b)", maximal && at_most_one}}};
}

// Each implication about irreducibility of Y ⊆ X^M, with its hypothesis and
// conclusion evaluated on the instance.
inline std::vector<Implication> irreducibility_criteria(const ModuleSpectrum& S,
                                                        const FiniteSpace& X, const IndexSet& y) {
  const auto& M = S.module();
  const auto& R = S.ring();
  const bool irreducible = is_irreducible(X, y);
  const Index meet = im_meet(S, y);
  const Ideal meet_colon = colon(M, meet);

  std::vector<Ideal> psi;
  for (Index k : y) psi.push_back(S.colons()[k]);
  const Ideal psi_meet = intersect_primes(psi);

  bool chain = true;
  for (Index a : y)
    for (Index b : y)
      if (!M.leq(S.points()[a], S.points()[b]) && !M.leq(S.points()[b], S.points()[a]))
        chain = false;

  const bool colon_prime = is_prime_ideal(R, meet_colon);
  return {
      {"prime meet => irreducible", is_prime_submodule_element(M, meet), irreducible},
      {"irreducible => (meet:e) = ∩(p:e) is prime", irreducible,
       psi_meet == meet_colon && is_prime_ideal(R, psi_meet)},
      {"chain => irreducible", chain, irreducible},
      {"(meet:e) prime with Spec_P nonempty => irreducible",
       colon_prime && !spec_P_positions(S, meet_colon).empty(), irreducible},
  };
}

}  // namespace lemod
