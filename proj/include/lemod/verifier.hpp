#pragma once

// Every numbered statement about Spec(M) as an executable check, run over a
// list of instances.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lemod/check.hpp"
#include "lemod/error.hpp"
#include "lemod/finite_space.hpp"
#include "lemod/le_module.hpp"
#include "lemod/natural_map.hpp"
#include "lemod/spectrum_topology.hpp"

namespace lemod {

enum class Verdict { Verified, Falsified, HypothesisNotMet, NotApplicable };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "verified";
    case Verdict::Falsified: return "falsified";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct Statement {
  std::string id;
  std::string description;
};

struct Entry {
  std::string statement;
  std::string instance;
  Verdict verdict = Verdict::Verified;
  std::string witness;           // first counterexample, when falsified
  std::vector<Clause> clauses;   // truth vector for equivalences
  std::string note;
  double millis = 0;
};

struct NamedInstance {
  std::string name;
  LeModule module;
};

struct VerificationReport {
  std::vector<Entry> entries;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(entries.begin(), entries.end(), [&](const Entry& e) { return e.verdict == v; }));
  }
  std::size_t falsified() const { return count(Verdict::Falsified); }
};

// Everything computed once per instance and shared by the checks.
struct InstanceContext {
  std::string name;
  ModuleSpectrum S;
  FiniteSpace X;                     // τ*
  std::optional<NaturalMap> psi;     // empty when Ann(M) = R
  std::vector<IndexSet> subfamilies; // nonempty families of submodule elements
  std::vector<IndexSet> point_sets;  // nonempty subsets of the points

  explicit InstanceContext(const NamedInstance& inst)
      : name(inst.name), S(inst.module), X(zariski_space(S)) {
    try {
      psi.emplace(build_natural_map(S));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateModule) throw;
    }
    const auto& subs = S.submodule_elements();
    const std::size_t k = subs.size();
    if (k <= 12) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask)
        subfamilies.push_back(subset_from_mask(mask, subs));
    } else {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a; b < k; ++b) {
          subfamilies.push_back(make_set({subs[a], subs[b]}));
          for (std::size_t c = b + 1; c < k; ++c)
            subfamilies.push_back(make_set({subs[a], subs[b], subs[c]}));
        }
    }
    if (S.size() <= 16) {
      for (std::size_t mask = 1; mask < (std::size_t{1} << S.size()); ++mask)
        point_sets.push_back(subset_from_mask(mask, S.size()));
    } else {
      for (Index p = 0; p < S.size(); ++p)
        for (Index q = p; q < S.size(); ++q) point_sets.push_back(make_set({p, q}));
    }
  }
};

namespace detail {

struct Outcome {
  Verdict verdict = Verdict::Verified;
  std::string witness;
  std::vector<Clause> clauses;
  std::string note;
};

inline Outcome from_check(const Check& c) {
  Outcome o;
  if (!c.ok) {
    o.verdict = Verdict::Falsified;
    o.witness = c.witness;
  }
  return o;
}

inline Outcome from_equivalence(const EquivalenceReport& r) {
  Outcome o;
  o.clauses = r.clauses;
  if (!r.hypothesis_met) {
    o.verdict = Verdict::HypothesisNotMet;
    o.note = "hypothesis: " + r.hypothesis;
  } else if (!all_equal(r.clauses)) {
    o.verdict = Verdict::Falsified;
    o.witness = first_disagreement(r.clauses);
  }
  return o;
}

inline Outcome from_implication(const Implication& i) {
  Outcome o;
  o.clauses = {{"hypothesis", i.hypothesis}, {"conclusion", i.conclusion}};
  if (!i.hypothesis) {
    o.verdict = Verdict::HypothesisNotMet;
    o.note = "hypothesis: " + i.name;
  } else if (!i.conclusion) {
    o.verdict = Verdict::Falsified;
    o.witness = i.name;
  }
  return o;
}

inline Outcome needs_psi() {
  return {Verdict::NotApplicable, "", {}, "Ann(M) = R: Spec(M) is empty and R/Ann(M) is zero"};
}

inline std::string elt(Index n) { return std::to_string(n); }

using Runner = std::function<Outcome(const InstanceContext&)>;

// --- checks by statement ----------------------------------------------------

inline Outcome galois(const InstanceContext& c) {
  Check chk;
  const auto& M = c.S.module();
  for (const auto& I : c.S.ring_ideals())
    for (Index n : c.S.submodule_elements())
      if (!lemma_galois_check(M, I, n)) chk.fail("I=" + to_string(I) + " n=" + elt(n));
  return from_check(chk);
}

inline Outcome colon_is_prime(const InstanceContext& c) {
  Check chk;
  for (std::size_t k = 0; k < c.S.size(); ++k)
    if (!is_prime_ideal(c.S.ring(), c.S.colons()[k]))
      chk.fail("p=" + elt(c.S.points()[k]) + " (p:e)=" + to_string(c.S.colons()[k]));
  return from_check(chk);
}

inline Outcome variety_basics(const InstanceContext& c) {
  Check chk;
  const auto& S = c.S;
  const auto& M = S.module();
  const auto X = S.all();
  if (variety_star(S, M.zero()) != X || variety(S, M.zero()) != X) chk.fail("(i) at 0_M");
  if (!variety_star(S, M.top()).empty() || !variety(S, M.top()).empty()) chk.fail("(ii) at e");
  for (const auto& fam : c.subfamilies) {
    IndexSet meet_star = X, meet = X;
    std::vector<Index> ie;
    for (Index n : fam) {
      meet_star = set_intersection(meet_star, variety_star(S, n));
      meet = set_intersection(meet, variety(S, n));
      ie.push_back(ideal_action(M, colon(M, n)));
    }
    if (meet_star != variety_star(S, sum_submodule_elements(M, ie)))
      chk.fail("(iii)(a) family " + to_string(fam));
    if (meet != variety(S, sum_submodule_elements(M, fam)))
      chk.fail("(iii)(b) family " + to_string(fam));
  }
  for (Index n : S.submodule_elements())
    for (Index l : S.submodule_elements()) {
      const Index m = M.lattice().meet(n, l);
      const std::string w = " n=" + elt(n) + " l=" + elt(l);
      if (set_union(variety_star(S, n), variety_star(S, l)) != variety_star(S, m)) chk.fail("(iv)(a)" + w);
      if (!is_subset(set_union(variety(S, n), variety(S, l)), variety(S, m))) chk.fail("(iv)(b)" + w);
    }
  return from_check(chk);
}

inline Outcome union_intersection(const InstanceContext& c) {
  Check chk;
  for (const auto& I : c.S.ring_ideals())
    for (const auto& J : c.S.ring_ideals()) chk.merge(union_intersection_check(c.S, I, J));
  for (Index r = 0; r < c.S.ring().order(); ++r)
    for (Index s = 0; s < c.S.ring().order(); ++s) chk.merge(union_element_check(c.S, r, s));
  return from_check(chk);
}

inline Outcome equal_colons(const InstanceContext& c) {
  Check chk;
  const auto& S = c.S;
  const auto& M = S.module();
  for (Index n : S.submodule_elements())
    for (Index l : S.submodule_elements()) {
      const bool same_colon = colon(M, n) == colon(M, l);
      const bool same_variety = variety_star(S, n) == variety_star(S, l);
      const std::string w = "n=" + elt(n) + " l=" + elt(l);
      if (same_colon && !same_variety) chk.fail("equal colons, different V*: " + w);
      if (same_variety && !same_colon && S.position(n) && S.position(l))
        chk.fail("primes with equal V*, different colons: " + w);
    }
  return from_check(chk);
}

inline Outcome vstar_decomposition(const InstanceContext& c) {
  Check chk;
  for (Index n : c.S.submodule_elements()) chk.merge(vstar_decomposition_check(c.S, n));
  for (const auto& I : c.S.ring_ideals()) {
    const Index ie = ideal_action(c.S.module(), I);
    if (variety(c.S, ie) != variety_star(c.S, ie)) chk.fail("V(Ie)!=V*(Ie) I=" + to_string(I));
  }
  return from_check(chk);
}

inline Outcome star_equals_prime(const InstanceContext& c) {
  Check chk;
  const auto star = family_V_star(c.S);
  const auto prime = family_V_prime(c.S);
  for (const auto& y : star)
    if (!std::binary_search(prime.begin(), prime.end(), y)) chk.fail("V* set " + to_string(y) + " missing from V'");
  for (const auto& y : prime)
    if (!std::binary_search(star.begin(), star.end(), y)) chk.fail("V' set " + to_string(y) + " missing from V*");
  return from_check(chk);
}

inline Outcome quasi_finer(const InstanceContext& c) {
  if (!is_top_le_module(c.S))
    return {Verdict::HypothesisNotMet, "", {}, "hypothesis: top le-module"};
  Check chk;
  const auto quasi = family_V(c.S);
  for (const auto& y : family_V_star(c.S))
    if (!std::binary_search(quasi.begin(), quasi.end(), y)) chk.fail("V* set " + to_string(y) + " not in V");
  try {
    (void)make_topology(c.S, TopologyKind::Quasi);
  } catch (const Error& e) {
    chk.fail(std::string("quasi topology: ") + e.what());
  }
  return from_check(chk);
}

inline Outcome continuity(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  Check chk = correspondence_check(*c.psi);
  chk.merge(continuity_check(*c.psi));
  return from_check(chk);
}

inline Outcome injectivity(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  return from_equivalence(injectivity_battery(*c.psi));
}

inline Outcome open_closed(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  const auto rep = surjectivity_and_openclosed(*c.psi);
  Outcome o;
  o.clauses = {{"surjective", rep.surjective}, {"closed map", rep.closed_map}, {"open map", rep.open_map}};
  if (!rep.surjective) {
    o.verdict = Verdict::HypothesisNotMet;
    o.note = "hypothesis: psi surjective";
  } else if (!rep.consistent()) {
    o.verdict = Verdict::Falsified;
    o.witness = !rep.identities.ok ? rep.identities.witness
                                   : (!rep.closed_map ? "psi not closed" : "psi not open");
  }
  return o;
}

inline Outcome bijective_homeomorphic(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  return from_equivalence(homeomorphism_check(*c.psi));
}

inline Outcome connectedness(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  const auto rep = connectedness_equivalence(*c.psi);
  Outcome o = from_equivalence(rep.equivalence);
  if (rep.consequence.hypothesis) o.note = "R quasi-local or Ann(M) prime";
  if (o.verdict == Verdict::Verified && !rep.consequence.holds()) {
    o.verdict = Verdict::Falsified;
    o.witness = rep.consequence.name;
  }
  return o;
}

inline Outcome basic_open_preimage(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  return from_check(basic_open_check(*c.psi));
}

inline Outcome basic_open_rules(const InstanceContext& c) {
  const auto rep = basis_checks(c.S);
  Check chk = rep.product_rule;
  chk.merge(rep.ideal_intersection);
  return from_check(chk);
}

inline Outcome basis(const InstanceContext& c) {
  const auto rep = basis_checks(c.S);
  Check chk = rep.basic_opens_are_open;
  chk.merge(rep.opens_are_unions);
  return from_check(chk);
}

inline Outcome compact_opens(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  if (!c.psi->surjective()) return {Verdict::HypothesisNotMet, "", {}, "hypothesis: psi surjective"};
  Check chk;
  for (Index r = 0; r < c.S.ring().order(); ++r)
    if (!quasi_compact(c.X, basic_open(c.S, r)).holds) chk.fail("X_r not quasi-compact, r=" + elt(r));
  const auto sc = spectral_clauses(c.X);
  if (!sc.quasi_compact) chk.fail("X^M not quasi-compact");
  if (!sc.compact_opens_closed_under_intersection) chk.fail("compact opens not closed under intersection");
  if (!sc.compact_opens_form_basis) chk.fail("compact opens do not form a base");
  return from_check(chk);
}

inline Outcome closure_formula(const InstanceContext& c) {
  Check chk;
  for (const auto& y : c.point_sets) {
    chk.merge(closure_check(c.S, c.X, y));
    if (c.X.is_closed(y) != (variety_star(c.S, im_meet(c.S, y)) == y))
      chk.fail("closedness criterion, Y=" + to_string(y));
  }
  return from_check(chk);
}

inline Outcome point_closures(const InstanceContext& c) {
  Check chk;
  const auto& S = c.S;
  for (Index p = 0; p < S.size(); ++p) {
    const auto vp = variety_star(S, S.points()[p]);
    if (c.X.point_closure(p) != vp) chk.fail("(i) p=" + elt(S.points()[p]));
    for (Index q = 0; q < S.size(); ++q) {
      const bool in = contains(c.X.point_closure(p), q);
      const bool by_colon = is_subset(S.colons()[p], S.colons()[q]);
      const bool by_variety = is_subset(variety_star(S, S.points()[q]), vp);
      if (in != by_colon || in != by_variety)
        chk.fail("(ii) p=" + elt(S.points()[p]) + " q=" + elt(S.points()[q]));
    }
    bool maximal = true;
    for (const auto& Q : S.colons())
      if (Q != S.colons()[p] && is_subset(S.colons()[p], Q)) maximal = false;
    const bool alone = spec_P_positions(S, S.colons()[p]).size() == 1;
    if (c.X.is_closed({p}) != (maximal && alone)) chk.fail("(iii) p=" + elt(S.points()[p]));
  }
  const auto t1 = phi_and_T1_check(S);
  Outcome o = from_check(chk);
  o.clauses = t1.clauses;
  if (o.verdict == Verdict::Verified && !t1.holds()) {
    o.verdict = Verdict::Falsified;
    o.witness = "(iv) " + first_disagreement(t1.clauses);
  }
  return o;
}

inline Outcome point_variety_irreducible(const InstanceContext& c) {
  Check chk;
  for (Index p = 0; p < c.S.size(); ++p) {
    const auto vp = variety_star(c.S, c.S.points()[p]);
    if (!c.X.is_closed(vp) || !is_irreducible(c.X, vp)) chk.fail("p=" + elt(c.S.points()[p]));
  }
  return from_check(chk);
}

inline Outcome irreducible_prime(const InstanceContext& c) {
  Check chk;
  std::size_t met = 0;
  for (const auto& y : c.point_sets) {
    const auto crit = irreducibility_criteria(c.S, c.X, y);
    for (std::size_t i : {0u, 1u}) {
      met += crit[i].hypothesis;
      if (!crit[i].holds()) chk.fail(crit[i].name + ", Y=" + to_string(y));
    }
  }
  Outcome o = from_check(chk);
  o.note = std::to_string(met) + " subsets met a hypothesis";
  return o;
}

inline Outcome irreducible_criteria(const InstanceContext& c) {
  Check chk;
  const auto& S = c.S;
  for (const auto& y : c.point_sets) {
    const auto crit = irreducibility_criteria(S, c.X, y);
    for (std::size_t i : {2u, 3u})
      if (!crit[i].holds()) chk.fail(crit[i].name + ", Y=" + to_string(y));
  }
  for (const auto& P : S.ring_spectrum().points) {
    const auto sp = spec_P_positions(S, P);
    if (sp.empty()) continue;
    if (!is_irreducible(c.X, sp)) chk.fail("Spec_P not irreducible, P=" + to_string(P));
    if (is_maximal_ideal(S.ring(), P) &&
        (!c.X.is_closed(sp) || sp != variety_star(S, ideal_action(S.module(), P))))
      chk.fail("Spec_P not closed for maximal P=" + to_string(P));
  }
  return from_check(chk);
}

inline Outcome generic_point_bijection(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  const auto rep = component_minimal_prime_bijection(*c.psi);
  Outcome o;
  o.note = std::to_string(rep.components) + " components, " + std::to_string(rep.minimal_primes) +
           " minimal primes";
  if (!rep.hypothesis_met) {
    o.verdict = Verdict::HypothesisNotMet;
    o.note += "; hypothesis: psi surjective";
  } else if (!rep.consistent()) {
    o.verdict = Verdict::Falsified;
    o.witness = !rep.irreducible_closed_are_point_closures.ok
                    ? rep.irreducible_closed_are_point_closures.witness
                    : rep.components_to_minimal_primes.witness;
  }
  return o;
}

inline Outcome spectral_equivalences(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  return from_equivalence(spectral_battery(*c.psi));
}

inline Outcome multiplication_spectral(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  return from_implication(multiplication_spectral_check(*c.psi));
}

inline Outcome closed_image(const InstanceContext& c) {
  if (!c.psi) return needs_psi();
  return from_equivalence(image_closed_criterion(*c.psi));
}

inline Outcome finite_spectral(const InstanceContext& c) {
  if (c.S.size() == 0) return {Verdict::HypothesisNotMet, "", {}, "hypothesis: Spec(M) nonempty"};
  return from_equivalence(finite_spec_criterion(c.S));
}

struct StatementCheck {
  Statement statement;
  Runner run;
};

inline const std::vector<StatementCheck>& statement_checks() {
  static const std::vector<StatementCheck> checks = {
      {{"L2.1", "Ie <= n iff I is contained in (n:e)"}, galois},
      {{"L2.2", "(p:e) is a prime ideal for every prime submodule element p"}, colon_is_prime},
      {{"P3.1", "V and V* at 0_M and e, on sums of families, and on meets of pairs"}, variety_basics},
      {{"L3.2", "V(Ie) u V(Je) = V((I n J)e) = V((IJ)e), likewise for V*, and V*(re) u V*(se) = V*((rs)e)"},
       union_intersection},
      {{"P3.3", "equal colon ideals give equal V*; for primes the converse holds"}, equal_colons},
      {{"P3.4", "V*(n) = union of Spec_P(M) over P containing (n:e) = V*((n:e)e) = V((n:e)e); V(Ie) = V*(Ie)"},
       vstar_decomposition},
      {{"T3.5", "the closed-set families of tau* and tau' coincide"}, star_equals_prime},
      {{"T3.6", "for a top le-module every tau*-closed set is closed in the quasi topology"}, quasi_finer},
      {{"P4.1", "psi^-1(V(I/Ann)) = V(Ie) for every I containing Ann(M); psi is continuous"}, continuity},
      {{"P4.2", "psi injective iff V* separates points iff |Spec_P(M)| <= 1 for all P"}, injectivity},
      {{"T4.3", "psi surjective: psi(V*(n)) = V((n:e)/Ann) and the complement identity; psi closed and open"},
       open_closed},
      {{"C4.4", "psi bijective iff psi is a homeomorphism"}, bijective_homeomorphic},
      {{"T4.5", "psi surjective: X^M connected iff Spec(R/Ann) connected iff R/Ann has no nontrivial idempotent"},
       connectedness},
      {{"P5.1", "psi^-1(D_r) = X_r and psi(X_r) is contained in D_r, with equality when psi is surjective"},
       basic_open_preimage},
      {{"L5.2", "X_rs = X_r n X_s and V*(Ie) is the intersection of the V*(ae) for a in I"}, basic_open_rules},
      {{"T5.3", "the sets X_r form a base of tau*"}, basis},
      {{"T5.4", "psi surjective: each X_r is quasi-compact and compact opens are closed under intersection and form a base"},
       compact_opens},
      {{"P6.1", "closure of Y = V*(meet of Y); Y closed iff V*(meet of Y) = Y"}, closure_formula},
      {{"P6.2", "closure of {p} = V*(p); specialization by colon ideals; closed points; T1 criterion"},
       point_closures},
      {{"C6.3", "V*(p) is an irreducible closed set"}, point_variety_irreducible},
      {{"P6.4", "prime meet gives irreducible Y; irreducible Y has prime colon of its meet"}, irreducible_prime},
      {{"P6.5", "chains are irreducible; Spec_P(M) is irreducible, and closed for maximal P; prime colon of the meet with Spec_P nonempty gives irreducible Y"},
       irreducible_criteria},
      {{"T6.6", "psi surjective: irreducible closed sets are the V*(p), and components match minimal primes of R/Ann"},
       generic_point_bijection},
      {{"T7.1", "psi surjective: spectral iff T0 iff V* separates points iff |Spec_P(M)| <= 1 iff psi injective iff X^M homeomorphic to Spec(R/Ann)"},
       spectral_equivalences},
      {{"T7.2", "multiplication le-module with psi surjective is spectral"}, multiplication_spectral},
      {{"T7.3", "Im psi closed: spectral iff psi injective"}, closed_image},
      {{"T7.4", "Spec(M) finite and nonempty: spectral iff |Spec_P(M)| <= 1 for all P"}, finite_spectral},
  };
  return checks;
}

}  // namespace detail

inline std::vector<Statement> statements() {
  std::vector<Statement> out;
  for (const auto& c : detail::statement_checks()) out.push_back(c.statement);
  return out;
}

// All statements on one instance, in statement order.
inline std::vector<Entry> run_instance(const NamedInstance& inst) {
  const InstanceContext ctx(inst);
  std::vector<Entry> out;
  for (const auto& sc : detail::statement_checks()) {
    const auto t0 = std::chrono::steady_clock::now();
    auto o = sc.run(ctx);
    const auto t1 = std::chrono::steady_clock::now();
    out.push_back({sc.statement.id, inst.name, o.verdict, std::move(o.witness), std::move(o.clauses),
                   std::move(o.note), std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }
  return out;
}

// Instances run concurrently; entries come back ordered by instance, then
// statement, whatever the scheduling.
inline VerificationReport run_all(std::span<const NamedInstance> instances) {
  std::vector<std::future<std::vector<Entry>>> jobs;
  for (const auto& inst : instances)
    jobs.push_back(std::async(std::launch::async, [&inst] { return run_instance(inst); }));
  VerificationReport rep;
  for (auto& j : jobs) {
    auto entries = j.get();
    rep.entries.insert(rep.entries.end(), std::make_move_iterator(entries.begin()),
                       std::make_move_iterator(entries.end()));
  }
  return rep;
}

}  // namespace lemod
