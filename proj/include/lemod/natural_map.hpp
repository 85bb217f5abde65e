#pragma once

// The natural map ψ: X^M -> Spec(R/Ann(M)), p ↦ image of (p:e), and the
// properties of ψ that tie the topology of X^M to the quotient ring.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lemod/check.hpp"
#include "lemod/error.hpp"
#include "lemod/finite_ring.hpp"
#include "lemod/finite_space.hpp"
#include "lemod/le_module.hpp"
#include "lemod/spectrum_topology.hpp"

namespace lemod {

class NaturalMap;
NaturalMap build_natural_map(ModuleSpectrum S);

class NaturalMap {
 public:
  const ModuleSpectrum& spectrum() const noexcept { return spectrum_; }
  const Ideal& annihilator() const noexcept { return annihilator_; }
  const QuotientRing& quotient() const noexcept { return quotient_; }
  const RingSpectrum& quotient_spectrum() const noexcept { return quotient_spectrum_; }

  // table()[k] is the position in quotient_spectrum() of ψ(point k).
  const std::vector<Index>& table() const noexcept { return table_; }

  // X^M with τ*, and Spec(R̄) with its Zariski topology.
  const FiniteSpace& domain() const noexcept { return domain_; }
  const FiniteSpace& codomain() const noexcept { return codomain_; }

  bool injective() const { return is_injective(table_); }
  bool surjective() const { return is_surjective(table_, quotient_spectrum_.size()); }
  bool bijective() const { return injective() && surjective(); }

  // Ī for an ideal I ⊇ Ann(M).
  Ideal bar(const Ideal& I) const { return quotient_.image(I); }

 private:
  friend NaturalMap build_natural_map(ModuleSpectrum S);
  NaturalMap(ModuleSpectrum S, Ideal ann, QuotientRing q, RingSpectrum qs, FiniteSpace dom,
             FiniteSpace cod)
      : spectrum_(std::move(S)),
        annihilator_(std::move(ann)),
        quotient_(std::move(q)),
        quotient_spectrum_(std::move(qs)),
        domain_(std::move(dom)),
        codomain_(std::move(cod)) {}

  ModuleSpectrum spectrum_;
  Ideal annihilator_;
  QuotientRing quotient_;
  RingSpectrum quotient_spectrum_;
  FiniteSpace domain_;
  FiniteSpace codomain_;
  std::vector<Index> table_;
};

// Throws DegenerateModule when Ann(M) = R: then e = 0_M, X^M is empty and the
// quotient would be the zero ring.
inline NaturalMap build_natural_map(ModuleSpectrum S) {
  const auto& R = S.ring();
  Ideal ann = annihilator(S.module());
  if (!is_proper(R, ann))
    throw Error(ErrorKind::DegenerateModule, "Ann(M) = R, so the quotient ring is zero");
  QuotientRing q = quotient_ring(R, ann);
  RingSpectrum qs = spec_ring(q.ring);
  FiniteSpace dom = zariski_space(S);
  FiniteSpace cod = FiniteSpace::from_closed_sets(qs.size(), zariski_closed_sets(q.ring, qs));
  std::vector<Index> table;
  for (std::size_t k = 0; k < S.size(); ++k) {
    const Ideal image = q.image(S.colons()[k]);
    auto pos = qs.position(image);
    if (!pos)
      throw Error(ErrorKind::NotPrimeIdeal,
                  "image " + to_string(image) + " of a colon ideal is not prime in R/Ann(M)");
    table.push_back(*pos);
  }
  NaturalMap nm(std::move(S), std::move(ann), std::move(q), std::move(qs), std::move(dom),
                std::move(cod));
  nm.table_ = std::move(table);
  return nm;
}

// Spec(R̄) computed on the quotient matches the primes of R containing Ann(M).
inline Check correspondence_check(const NaturalMap& nm) {
  Check c;
  std::vector<Ideal> over;
  for (const auto& P : nm.spectrum().ring_spectrum().points)
    if (is_subset(nm.annihilator(), P)) over.push_back(nm.bar(P));
  std::sort(over.begin(), over.end());
  auto direct = nm.quotient_spectrum().points;
  std::sort(direct.begin(), direct.end());
  if (over != direct) c.fail("primes over Ann(M) do not match Spec(R/Ann(M))");
  for (const auto& Q : direct)
    if (nm.bar(nm.quotient().preimage(Q)) != Q) c.fail("preimage of " + to_string(Q));
  return c;
}

// ψ^{-1}(V(Ī)) = V(Ie) for every ideal I ⊇ Ann(M); also ψ^{-1} of every
// closed set is closed.
inline Check continuity_check(const NaturalMap& nm) {
  Check c;
  const auto& S = nm.spectrum();
  for (const auto& I : S.ring_ideals()) {
    if (!is_subset(nm.annihilator(), I)) continue;
    const auto lhs = preimage(nm.table(), variety_ring(nm.quotient_spectrum(), nm.bar(I)));
    if (lhs != variety(S, ideal_action(S.module(), I))) c.fail("I=" + to_string(I));
  }
  if (!is_continuous(nm.domain(), nm.codomain(), nm.table()))
    c.fail("preimage of a closed set is not closed");
  return c;
}

// ψ^{-1}(D_r̄) = X_r, ψ(X_r) ⊆ D_r̄, with equality when ψ is surjective.
inline Check basic_open_check(const NaturalMap& nm) {
  Check c;
  const auto& S = nm.spectrum();
  const auto& Rb = nm.quotient().ring;
  for (Index r = 0; r < S.ring().order(); ++r) {
    const auto d = basic_open_ring(Rb, nm.quotient_spectrum(), nm.quotient().projection[r]);
    const auto xr = basic_open(S, r);
    const std::string w = "r=" + std::to_string(r);
    if (preimage(nm.table(), d) != xr) c.fail("preimage, " + w);
    const auto img = image(nm.table(), xr);
    if (!is_subset(img, d)) c.fail("image inclusion, " + w);
    if (nm.surjective() && img != d) c.fail("image equality, " + w);
  }
  return c;
}

// An equivalence (or implication) evaluated clause by clause. When a
// hypothesis is named and not met, the clauses are still computed but carry
// no obligation.
struct EquivalenceReport {
  std::string hypothesis;
  bool hypothesis_met = true;
  std::vector<Clause> clauses;

  bool consistent() const { return !hypothesis_met || all_equal(clauses); }
};

inline bool at_most_one_per_prime(const ModuleSpectrum& S) {
  for (const auto& P : S.ring_spectrum().points)
    if (spec_P_positions(S, P).size() > 1) return false;
  return true;
}

inline bool vstar_separates_points(const ModuleSpectrum& S) {
  for (Index p = 0; p < S.size(); ++p)
    for (Index q = p + 1; q < S.size(); ++q)
      if (variety_star(S, S.points()[p]) == variety_star(S, S.points()[q])) return false;
  return true;
}

inline EquivalenceReport injectivity_battery(const NaturalMap& nm) {
  const auto& S = nm.spectrum();
  return {"",
          true,
          {{"(i) psi injective", nm.injective()},
           {"(ii) V*(p)=V*(q) implies p=q", vstar_separates_points(S)},
           {"(iii) |Spec_P(M)|<=1 for all P", at_most_one_per_prime(S)}}};
}

struct OpenClosedReport {
  bool surjective = false;
  Check identities;  // only evaluated when surjective
  bool closed_map = false;
  bool open_map = false;

  bool consistent() const { return !surjective || (identities.ok && closed_map && open_map); }
};

// When ψ is surjective: ψ(V*(n)) = V(overline{(n:e)}) and
// ψ(X^M - V*(n)) = Spec(R̄) - V(overline{(n:e)}) for every submodule element n.
inline OpenClosedReport surjectivity_and_openclosed(const NaturalMap& nm) {
  OpenClosedReport rep;
  rep.surjective = nm.surjective();
  rep.closed_map = is_closed_map(nm.domain(), nm.codomain(), nm.table());
  rep.open_map = is_open_map(nm.domain(), nm.codomain(), nm.table());
  if (!rep.surjective) return rep;
  const auto& S = nm.spectrum();
  const auto& qs = nm.quotient_spectrum();
  for (Index n : S.submodule_elements()) {
    const auto vs = variety_star(S, n);
    const auto target = variety_ring(qs, nm.bar(colon(S.module(), n)));
    const std::string w = "n=" + std::to_string(n);
    if (image(nm.table(), vs) != target) rep.identities.fail("closed image, " + w);
    if (image(nm.table(), set_difference(S.all(), vs)) != set_difference(full_set(qs.size()), target))
      rep.identities.fail("open image, " + w);
  }
  return rep;
}

// bijective <=> homeomorphism, both evaluated directly on the finite spaces.
inline EquivalenceReport homeomorphism_check(const NaturalMap& nm) {
  return {"",
          true,
          {{"bijective", nm.bijective()},
           {"homeomorphic", is_homeomorphism(nm.domain(), nm.codomain(), nm.table())}}};
}

struct ConnectednessReport {
  EquivalenceReport equivalence;
  Implication consequence;  // (R quasi-local or Ann(M) prime) => both connected

  bool consistent() const {
    return equivalence.consistent() && (!equivalence.hypothesis_met || consequence.holds());
  }
};

inline bool only_trivial_idempotents(const FiniteRing& R) {
  return idempotents(R) == make_set({R.zero(), R.one()});
}

inline ConnectednessReport connectedness_equivalence(const NaturalMap& nm) {
  const bool dom = is_connected(nm.domain());
  const bool cod = is_connected(nm.codomain());
  ConnectednessReport rep;
  rep.equivalence = {"psi surjective",
                     nm.surjective(),
                     {{"(i) X^M connected", dom},
                      {"(ii) Spec(R/Ann) connected", cod},
                      {"(iii) R/Ann has only trivial idempotents",
                       only_trivial_idempotents(nm.quotient().ring)}}};
  const auto& R = nm.spectrum().ring();
  rep.consequence = {"quasi-local or Ann prime => connected",
                     is_quasi_local(R) || is_prime_ideal(R, nm.annihilator()), dom && cod};
  return rep;
}

struct GenericPointReport {
  bool hypothesis_met = false;  // ψ surjective
  Check irreducible_closed_are_point_closures;  // (i) and (ii)
  Check components_to_minimal_primes;           // (iii)
  std::size_t components = 0;
  std::size_t minimal_primes = 0;

  bool consistent() const {
    return !hypothesis_met ||
           (irreducible_closed_are_point_closures.ok && components_to_minimal_primes.ok);
  }
};

inline GenericPointReport component_minimal_prime_bijection(const NaturalMap& nm) {
  GenericPointReport rep;
  rep.hypothesis_met = nm.surjective();
  const auto& S = nm.spectrum();
  const auto& X = nm.domain();

  std::vector<IndexSet> point_varieties;
  for (Index p : S.points()) point_varieties.push_back(variety_star(S, p));

  for (const auto& y : X.closed_sets()) {
    if (y.empty()) continue;
    const bool irreducible = is_irreducible(X, y);
    const bool is_vstar =
        std::find(point_varieties.begin(), point_varieties.end(), y) != point_varieties.end();
    if (irreducible != is_vstar) rep.irreducible_closed_are_point_closures.fail("Y=" + to_string(y));
    if (irreducible && generic_points(X, y).empty())
      rep.irreducible_closed_are_point_closures.fail("no generic point, Y=" + to_string(y));
  }

  const auto components = irreducible_components(X);
  rep.components = components.size();
  std::vector<Index> minimal;
  for (const auto& P : minimal_primes(nm.quotient().ring))
    minimal.push_back(*nm.quotient_spectrum().position(P));
  std::sort(minimal.begin(), minimal.end());
  rep.minimal_primes = minimal.size();

  std::vector<Index> images;
  for (const auto& comp : components) {
    std::optional<Index> value;
    for (Index k = 0; k < S.size(); ++k) {
      if (point_varieties[k] != comp) continue;
      if (value && *value != nm.table()[k])
        rep.components_to_minimal_primes.fail("not well defined on " + to_string(comp));
      value = nm.table()[k];
    }
    if (!value) {
      rep.components_to_minimal_primes.fail("component " + to_string(comp) + " is not a V*(p)");
      continue;
    }
    images.push_back(*value);
  }
  auto distinct = make_set(images);
  if (distinct.size() != images.size()) rep.components_to_minimal_primes.fail("not injective");
  if (distinct != minimal) rep.components_to_minimal_primes.fail("image is not the minimal primes");
  return rep;
}

inline EquivalenceReport spectral_battery(const NaturalMap& nm) {
  const auto& S = nm.spectrum();
  const auto& X = nm.domain();
  return {"psi surjective",
          nm.surjective(),
          {{"(i) spectral", is_spectral(X)},
           {"(ii) T0", is_t0(X)},
           {"(iii) V*(p)=V*(q) implies p=q", vstar_separates_points(S)},
           {"(iv) |Spec_P(M)|<=1 for all P", at_most_one_per_prime(S)},
           {"(v) psi injective", nm.injective()},
           {"(vi) X^M homeomorphic to Spec(R/Ann)", are_homeomorphic(X, nm.codomain())}}};
}

// multiplication le-module and ψ surjective => X^M spectral.
inline Implication multiplication_spectral_check(const NaturalMap& nm) {
  return {"multiplication and surjective => spectral",
          is_multiplication_le_module(nm.spectrum().module()) && nm.surjective(),
          is_spectral(nm.domain())};
}

// Im ψ closed => (spectral <=> ψ injective).
inline EquivalenceReport image_closed_criterion(const NaturalMap& nm) {
  const auto img = image(nm.table(), full_set(nm.table().size()));
  return {"image of psi closed",
          nm.codomain().is_closed(img),
          {{"spectral", is_spectral(nm.domain())}, {"psi injective", nm.injective()}}};
}

// For nonempty Spec(M): spectral <=> |Spec_P(M)| <= 1 for every P ∈ Spec(R).
inline EquivalenceReport finite_spec_criterion(const ModuleSpectrum& S) {
  if (S.size() == 0) throw Error(ErrorKind::EmptySpectrum, "Spec(M) is empty");
  return {"Spec(M) nonempty",
          true,
          {{"spectral", is_spectral(zariski_space(S))},
           {"|Spec_P(M)|<=1 for all P", at_most_one_per_prime(S)}}};
}

}  // namespace lemod
