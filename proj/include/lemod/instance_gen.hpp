#pragma once

// Generators for validated le-module instances and the default catalog.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lemod/error.hpp"
#include "lemod/finite_lattice.hpp"
#include "lemod/finite_ring.hpp"
#include "lemod/index_set.hpp"
#include "lemod/le_module.hpp"

namespace lemod {

namespace detail {

inline Index index_of(const std::vector<IndexSet>& family, const IndexSet& s) {
  auto it = std::lower_bound(family.begin(), family.end(), s,
                             [](const IndexSet& a, const IndexSet& b) {
                               if (a.size() != b.size()) return a.size() < b.size();
                               return a < b;
                             });
  if (it == family.end() || *it != s)
    throw Error(ErrorKind::ModuleAxiomViolation, "set " + to_string(s) + " is not in the lattice");
  return static_cast<Index>(it - family.begin());
}

// Builds the le-module on a family of sets ordered by inclusion, given how to
// add two members and how a ring element acts on one. The family is sorted
// by (size, members), so the smallest set comes first.
template <typename Sum, typename Act>
LeModule set_lattice_module(const FiniteRing& R, std::vector<IndexSet> family, Sum&& sum,
                            Act&& act) {
  std::sort(family.begin(), family.end(), [](const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  const std::size_t L = family.size();
  Table add(L, std::vector<Index>(L));
  Table action(R.order(), std::vector<Index>(L));
  for (Index a = 0; a < L; ++a)
    for (Index b = 0; b < L; ++b) add[a][b] = index_of(family, sum(family[a], family[b]));
  for (Index r = 0; r < R.order(); ++r)
    for (Index a = 0; a < L; ++a) action[r][a] = index_of(family, act(r, family[a]));
  return make_le_module(R, inclusion_lattice(family), add, 0, action);
}

}  // namespace detail

// Lattice of all ideals under inclusion, with ideal sum as addition and
// r·N = {ra : a ∈ N}. 0_M is the zero ideal, e is R.
inline LeModule ideal_lattice_le_module(const FiniteRing& R) {
  std::vector<IndexSet> family;
  for (auto& I : all_ideals(R)) family.push_back(std::move(I.members));
  return detail::set_lattice_module(
      R, std::move(family),
      [&](const IndexSet& a, const IndexSet& b) { return ideal_sum(R, {a}, {b}).members; },
      [&](Index r, const IndexSet& a) {
        std::vector<Index> out;
        for (Index x : a) out.push_back(R.mul(r, x));
        return generate_ideal(R, make_set(std::move(out))).members;
      });
}

// ---------------------------------------------------------------------------
// Finite modules over a ring (abelian group + action tables)
// ---------------------------------------------------------------------------

struct FiniteModule {
  std::size_t order = 0;
  Table add;     // order × order
  Table action;  // ring order × order
  Index zero = 0;
};

inline FiniteModule make_finite_module(const FiniteRing& R, std::size_t order, Table add,
                                       Table action) {
  auto fail = [](const std::string& axiom, std::vector<std::size_t> w) {
    return AxiomViolation(axiom, std::move(w), ErrorKind::ModuleAxiomViolation);
  };
  if (order == 0) throw fail("group-total", {0});
  if (add.size() != order) throw fail("group-total", {add.size()});
  for (Index x = 0; x < order; ++x) {
    if (add[x].size() != order) throw fail("group-total", {x});
    for (Index y = 0; y < order; ++y)
      if (add[x][y] >= order) throw fail("group-total", {x, y});
  }
  if (action.size() != R.order()) throw fail("action-total", {action.size()});
  for (Index r = 0; r < R.order(); ++r) {
    if (action[r].size() != order) throw fail("action-total", {r});
    for (Index x = 0; x < order; ++x)
      if (action[r][x] >= order) throw fail("action-total", {r, x});
  }
  std::optional<Index> zero;
  for (Index z = 0; z < order && !zero; ++z) {
    bool ok = true;
    for (Index x = 0; x < order && ok; ++x) ok = add[z][x] == x && add[x][z] == x;
    if (ok) zero = z;
  }
  if (!zero) throw fail("group-identity", {});
  for (Index x = 0; x < order; ++x) {
    if (std::find(add[x].begin(), add[x].end(), *zero) == add[x].end())
      throw fail("group-inverse", {x});
    for (Index y = 0; y < order; ++y) {
      if (add[x][y] != add[y][x]) throw fail("group-comm", {x, y});
      for (Index z = 0; z < order; ++z)
        if (add[add[x][y]][z] != add[x][add[y][z]]) throw fail("group-assoc", {x, y, z});
    }
  }
  for (Index x = 0; x < order; ++x)
    if (action[R.one()][x] != x) throw fail("unit-action", {x});
  for (Index r = 0; r < R.order(); ++r)
    for (Index x = 0; x < order; ++x)
      for (Index y = 0; y < order; ++y)
        if (action[r][add[x][y]] != add[action[r][x]][action[r][y]])
          throw fail("action-additive", {r, x, y});
  for (Index r = 0; r < R.order(); ++r)
    for (Index s = 0; s < R.order(); ++s)
      for (Index x = 0; x < order; ++x) {
        if (action[R.add(r, s)][x] != add[action[r][x]][action[s][x]])
          throw fail("ring-additive", {r, s, x});
        if (action[R.mul(r, s)][x] != action[r][action[s][x]])
          throw fail("ring-multiplicative", {r, s, x});
      }
  return FiniteModule{order, std::move(add), std::move(action), *zero};
}

// R acting on itself.
inline FiniteModule regular_module(const FiniteRing& R) {
  return make_finite_module(R, R.order(), R.add_table(), R.mul_table());
}

// Z_{m1} ⊕ ... ⊕ Z_{mk} over Z_n, each m_i dividing n; the element with
// coordinates (x1..xk) is stored in mixed radix, last coordinate fastest.
inline FiniteModule cyclic_sum_module(const FiniteRing& R, const std::vector<std::size_t>& moduli) {
  if (!(R == make_zn(R.order())))
    throw AxiomViolation("cyclic-over-Zn", {}, ErrorKind::ModuleAxiomViolation);
  std::size_t order = 1;
  for (std::size_t m : moduli) {
    if (m == 0 || R.order() % m != 0)
      throw AxiomViolation("modulus-divides-n", {m}, ErrorKind::ModuleAxiomViolation);
    order *= m;
  }
  auto decode = [&](Index x) {
    std::vector<std::size_t> c(moduli.size());
    for (std::size_t i = moduli.size(); i-- > 0;) {
      c[i] = x % moduli[i];
      x /= moduli[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    Index x = 0;
    for (std::size_t i = 0; i < moduli.size(); ++i) x = x * moduli[i] + c[i];
    return x;
  };
  Table add(order, std::vector<Index>(order));
  Table action(R.order(), std::vector<Index>(order));
  for (Index x = 0; x < order; ++x) {
    const auto cx = decode(x);
    for (Index y = 0; y < order; ++y) {
      const auto cy = decode(y);
      std::vector<std::size_t> s(moduli.size());
      for (std::size_t i = 0; i < moduli.size(); ++i) s[i] = (cx[i] + cy[i]) % moduli[i];
      add[x][y] = encode(s);
    }
    for (Index r = 0; r < R.order(); ++r) {
      std::vector<std::size_t> s(moduli.size());
      for (std::size_t i = 0; i < moduli.size(); ++i) s[i] = (r * cx[i]) % moduli[i];
      action[r][x] = encode(s);
    }
  }
  return make_finite_module(R, order, std::move(add), std::move(action));
}

// Smallest submodule of A containing the generators.
inline IndexSet generate_submodule(const FiniteRing& R, const FiniteModule& A,
                                   const IndexSet& generators) {
  std::vector<char> in(A.order, 0);
  std::vector<Index> members, queue;
  auto insert = [&](Index x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  insert(A.zero);
  for (Index g : generators) insert(g);
  while (!queue.empty()) {
    const Index x = queue.back();
    queue.pop_back();
    for (Index r = 0; r < R.order(); ++r) insert(A.action[r][x]);
    for (std::size_t i = 0; i < members.size(); ++i) insert(A.add[x][members[i]]);
  }
  return make_set(std::move(members));
}

// All submodules, grown from cyclic ones by adding one generator at a time
// until nothing new appears.
inline std::vector<IndexSet> all_submodules(const FiniteRing& R, const FiniteModule& A) {
  std::set<IndexSet> found;
  std::vector<IndexSet> frontier;
  for (Index x = 0; x < A.order; ++x) {
    auto N = generate_submodule(R, A, {x});
    if (found.insert(N).second) frontier.push_back(std::move(N));
  }
  while (!frontier.empty()) {
    std::vector<IndexSet> next;
    for (const auto& N : frontier)
      for (Index g = 0; g < A.order; ++g) {
        if (contains(N, g)) continue;
        auto gens = N;
        gens.push_back(g);
        auto K = generate_submodule(R, A, make_set(std::move(gens)));
        if (found.insert(K).second) next.push_back(std::move(K));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

// Lattice of submodules of A with submodule sum as addition and
// r·N = submodule generated by {r x : x ∈ N}.
inline LeModule submodule_lattice_le_module(const FiniteRing& R, const FiniteModule& A) {
  return detail::set_lattice_module(
      R, all_submodules(R, A),
      [&](const IndexSet& a, const IndexSet& b) {
        return generate_submodule(R, A, set_union(a, b));
      },
      [&](Index r, const IndexSet& a) {
        std::vector<Index> out;
        for (Index x : a) out.push_back(A.action[r][x]);
        return generate_submodule(R, A, make_set(std::move(out)));
      });
}

// ---------------------------------------------------------------------------
// Descriptors and the catalog
// ---------------------------------------------------------------------------

struct RingSpec {
  enum class Kind { Zn, Product, Explicit };
  Kind kind = Kind::Zn;
  std::size_t n = 0;               // Zn
  std::vector<RingSpec> factors;   // Product, at least two
  std::size_t order = 0;           // Explicit
  Table add;
  Table mul;

  static RingSpec zn(std::size_t n) { return {Kind::Zn, n, {}, 0, {}, {}}; }
  static RingSpec product(std::vector<RingSpec> f) { return {Kind::Product, 0, std::move(f), 0, {}, {}}; }
  static RingSpec explicit_tables(std::size_t order, Table add, Table mul) {
    return {Kind::Explicit, 0, {}, order, std::move(add), std::move(mul)};
  }
};

struct ModuleSpec {
  enum class Kind { IdealLattice, SubmoduleRegular, SubmoduleCyclic, SubmoduleExplicit, Explicit };
  Kind kind = Kind::IdealLattice;
  std::vector<std::size_t> moduli;  // SubmoduleCyclic
  std::size_t order = 0;            // SubmoduleExplicit: group order; Explicit: lattice size
  Table add;                        // group addition, or le-module addition
  Table action;
  Relation leq;                     // Explicit
  Index zero = 0;                   // Explicit: 0_M
};

struct InstanceDescriptor {
  std::string name;
  RingSpec ring;
  ModuleSpec module;
};

inline FiniteRing build_ring(const RingSpec& spec) {
  switch (spec.kind) {
    case RingSpec::Kind::Zn:
      return make_zn(spec.n);
    case RingSpec::Kind::Product: {
      if (spec.factors.empty()) throw Error(ErrorKind::ZeroRing, "empty product");
      FiniteRing acc = build_ring(spec.factors.front());
      for (std::size_t i = 1; i < spec.factors.size(); ++i)
        acc = product_ring(acc, build_ring(spec.factors[i]));
      return acc;
    }
    case RingSpec::Kind::Explicit:
      return make_ring(spec.order, spec.add, spec.mul);
  }
  throw Error(ErrorKind::ZeroRing, "unknown ring kind");
}

inline LeModule build_instance(const InstanceDescriptor& d) {
  const FiniteRing R = build_ring(d.ring);
  const auto& m = d.module;
  switch (m.kind) {
    case ModuleSpec::Kind::IdealLattice:
      return ideal_lattice_le_module(R);
    case ModuleSpec::Kind::SubmoduleRegular:
      return submodule_lattice_le_module(R, regular_module(R));
    case ModuleSpec::Kind::SubmoduleCyclic:
      return submodule_lattice_le_module(R, cyclic_sum_module(R, m.moduli));
    case ModuleSpec::Kind::SubmoduleExplicit:
      return submodule_lattice_le_module(R, make_finite_module(R, m.order, m.add, m.action));
    case ModuleSpec::Kind::Explicit:
      return make_le_module(R, make_lattice(m.order, m.leq), m.add, m.zero, m.action);
  }
  throw Error(ErrorKind::ModuleAxiomViolation, "unknown module kind");
}

namespace detail {

inline InstanceDescriptor ideal_lattice_of(std::string name, RingSpec ring) {
  return {std::move(name), std::move(ring), ModuleSpec{}};
}

inline InstanceDescriptor submodules_of(std::string name, std::size_t n,
                                        std::vector<std::size_t> moduli) {
  ModuleSpec m;
  m.kind = ModuleSpec::Kind::SubmoduleCyclic;
  m.moduli = std::move(moduli);
  return {std::move(name), RingSpec::zn(n), std::move(m)};
}

// The field with four elements {0, 1, a, a+1} stored as 0, 1, 2, 3;
// addition is XOR of the bit patterns.
inline RingSpec gf4() {
  Table add(4, std::vector<Index>(4)), mul = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) add[a][b] = a ^ b;
  return RingSpec::explicit_tables(4, std::move(add), std::move(mul));
}

// Chain 0 < a < e over Z_2 whose addition saturates: a + a = e. Here the
// addition is not the join, a is not a submodule element, and e + e = e has
// to come out of the table.
inline InstanceDescriptor saturating_chain() {
  ModuleSpec m;
  m.kind = ModuleSpec::Kind::Explicit;
  m.order = 3;
  m.leq = {{true, true, true}, {false, true, true}, {false, false, true}};
  m.add = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  m.zero = 0;
  m.action = {{0, 0, 0}, {0, 1, 2}};
  return {"chain3-saturating-over-Z2", RingSpec::zn(2), std::move(m)};
}

}  // namespace detail

// The default verification catalog, in a fixed order.
inline std::vector<InstanceDescriptor> catalog() {
  std::vector<InstanceDescriptor> out;
  for (std::size_t n : {2, 3, 4, 5, 6, 8, 9, 12, 30})
    out.push_back(detail::ideal_lattice_of("Z" + std::to_string(n) + "-ideal-lattice",
                                           RingSpec::zn(n)));
  out.push_back(detail::ideal_lattice_of(
      "Z2xZ3-ideal-lattice", RingSpec::product({RingSpec::zn(2), RingSpec::zn(3)})));
  out.push_back(detail::ideal_lattice_of(
      "Z2xZ2-ideal-lattice", RingSpec::product({RingSpec::zn(2), RingSpec::zn(2)})));
  out.push_back(detail::ideal_lattice_of("GF4-ideal-lattice", detail::gf4()));
  out.push_back(detail::submodules_of("Z2xZ2-over-Z2-submodules", 2, {2, 2}));
  out.push_back(detail::submodules_of("Z4-over-Z4-submodules", 4, {4}));
  out.push_back(detail::submodules_of("Z6-over-Z6-submodules", 6, {6}));
  out.push_back(detail::submodules_of("Z2xZ4-over-Z4-submodules", 4, {2, 4}));
  out.push_back(detail::submodules_of("zero-module-over-Z2", 2, {1}));
  out.push_back(detail::saturating_chain());
  return out;
}

inline std::optional<InstanceDescriptor> find_in_catalog(const std::string& name) {
  for (auto& d : catalog())
    if (d.name == name) return d;
  return std::nullopt;
}

}  // namespace lemod
