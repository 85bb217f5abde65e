#pragma once

// le-modules: a finite bounded lattice with a commutative monoid addition
// that distributes over joins, and an action of a finite commutative ring.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lemod/error.hpp"
#include "lemod/finite_lattice.hpp"
#include "lemod/finite_ring.hpp"
#include "lemod/index_set.hpp"

namespace lemod {

class LeModule;
LeModule make_le_module(FiniteRing ring, FiniteBoundedLattice lattice, const Table& add,
                        Index zero_m, const Table& action);

class LeModule {
 public:
  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteBoundedLattice& lattice() const noexcept { return lattice_; }

  std::size_t size() const noexcept { return lattice_.size(); }
  Index zero() const noexcept { return zero_; }
  Index top() const noexcept { return lattice_.top(); }

  Index add(Index a, Index b) const { return add_[a * size() + b]; }
  Index act(Index r, Index m) const { return action_[r * size() + m]; }
  bool leq(Index a, Index b) const { return lattice_.leq(a, b); }

  Table add_table() const { return unflatten(add_, size(), size()); }
  Table action_table() const { return unflatten(action_, ring_.order(), size()); }

 private:
  friend LeModule make_le_module(FiniteRing, FiniteBoundedLattice, const Table&, Index,
                                 const Table&);
  LeModule(FiniteRing ring, FiniteBoundedLattice lattice)
      : ring_(std::move(ring)), lattice_(std::move(lattice)) {}

  static Table unflatten(const std::vector<Index>& flat, std::size_t rows, std::size_t cols) {
    Table t(rows, std::vector<Index>(cols));
    for (std::size_t a = 0; a < rows; ++a)
      for (std::size_t b = 0; b < cols; ++b) t[a][b] = flat[a * cols + b];
    return t;
  }

  FiniteRing ring_;
  FiniteBoundedLattice lattice_;
  Index zero_ = 0;
  std::vector<Index> add_;
  std::vector<Index> action_;
};

// Checks every axiom exhaustively in the order: table shape, monoid, S, M4,
// M1, M2, M3, M5. The first failure is reported with its witness. S and M5
// are checked on pairs, which covers every finite nonempty family.
inline LeModule make_le_module(FiniteRing ring, FiniteBoundedLattice lattice, const Table& add,
                               Index zero_m, const Table& action) {
  const std::size_t L = lattice.size(), n = ring.order();
  if (add.size() != L) throw AxiomViolation("table", {add.size()});
  for (Index a = 0; a < L; ++a) {
    if (add[a].size() != L) throw AxiomViolation("table", {a});
    for (Index b = 0; b < L; ++b)
      if (add[a][b] >= L) throw AxiomViolation("table", {a, b});
  }
  if (action.size() != n) throw AxiomViolation("table", {action.size()});
  for (Index r = 0; r < n; ++r) {
    if (action[r].size() != L) throw AxiomViolation("table", {r});
    for (Index m = 0; m < L; ++m)
      if (action[r][m] >= L) throw AxiomViolation("table", {r, m});
  }
  if (zero_m >= L) throw AxiomViolation("table", {zero_m});

  const auto& A = add;
  const auto& act = action;
  auto join = [&](Index a, Index b) { return lattice.join(a, b); };

  for (Index a = 0; a < L; ++a) {
    if (A[zero_m][a] != a) throw AxiomViolation("monoid", {zero_m, a});
    for (Index b = 0; b < L; ++b)
      if (A[a][b] != A[b][a]) throw AxiomViolation("monoid", {a, b});
  }
  for (Index a = 0; a < L; ++a)
    for (Index b = 0; b < L; ++b)
      for (Index c = 0; c < L; ++c)
        if (A[A[a][b]][c] != A[a][A[b][c]]) throw AxiomViolation("monoid", {a, b, c});

  for (Index m = 0; m < L; ++m)
    for (Index x = 0; x < L; ++x)
      for (Index y = 0; y < L; ++y)
        if (A[m][join(x, y)] != join(A[m][x], A[m][y])) throw AxiomViolation("S", {m, x, y});

  for (Index m = 0; m < L; ++m) {
    if (act[ring.one()][m] != m) throw AxiomViolation("M4", {ring.one(), m});
    if (act[ring.zero()][m] != zero_m) throw AxiomViolation("M4", {ring.zero(), m});
  }
  for (Index r = 0; r < n; ++r)
    if (act[r][zero_m] != zero_m) throw AxiomViolation("M4", {r, zero_m});

  for (Index r = 0; r < n; ++r)
    for (Index a = 0; a < L; ++a)
      for (Index b = 0; b < L; ++b)
        if (act[r][A[a][b]] != A[act[r][a]][act[r][b]]) throw AxiomViolation("M1", {r, a, b});

  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s)
      for (Index m = 0; m < L; ++m)
        if (!lattice.leq(act[ring.add(r, s)][m], A[act[r][m]][act[s][m]]))
          throw AxiomViolation("M2", {r, s, m});

  for (Index r = 0; r < n; ++r)
    for (Index s = 0; s < n; ++s)
      for (Index m = 0; m < L; ++m)
        if (act[ring.mul(r, s)][m] != act[r][act[s][m]]) throw AxiomViolation("M3", {r, s, m});

  for (Index r = 0; r < n; ++r)
    for (Index x = 0; x < L; ++x)
      for (Index y = 0; y < L; ++y)
        if (act[r][join(x, y)] != join(act[r][x], act[r][y]))
          throw AxiomViolation("M5", {r, x, y});

  LeModule M(std::move(ring), std::move(lattice));
  M.zero_ = zero_m;
  M.add_.reserve(L * L);
  for (const auto& row : A) M.add_.insert(M.add_.end(), row.begin(), row.end());
  M.action_.reserve(n * L);
  for (const auto& row : act) M.action_.insert(M.action_.end(), row.begin(), row.end());
  return M;
}

// ---------------------------------------------------------------------------
// Submodule elements and their arithmetic
// ---------------------------------------------------------------------------

// n + n <= n and r n <= n for every r.
inline bool is_submodule_element(const LeModule& M, Index n) {
  if (!M.leq(M.add(n, n), n)) return false;
  for (Index r = 0; r < M.ring().order(); ++r)
    if (!M.leq(M.act(r, n), n)) return false;
  return true;
}

inline std::vector<Index> submodule_elements(const LeModule& M) {
  std::vector<Index> out;
  for (Index n = 0; n < M.size(); ++n)
    if (is_submodule_element(M, n)) out.push_back(n);
  return out;
}

// Closure of a set of lattice elements under +; the set of all finite sums.
inline IndexSet additive_closure(const LeModule& M, IndexSet seed) {
  std::vector<char> in(M.size(), 0);
  for (Index x : seed) in[x] = 1;
  std::vector<Index> queue(seed.begin(), seed.end());
  while (!queue.empty()) {
    const Index x = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < seed.size(); ++i) {
      const Index y = M.add(x, seed[i]);
      if (!in[y]) {
        in[y] = 1;
        seed.push_back(y);
        queue.push_back(y);
      }
    }
  }
  return make_set(std::move(seed));
}

// Join of all finite sums n_{i1} + ... + n_{ik} drawn from the family.
inline Index sum_submodule_elements(const LeModule& M, std::span<const Index> family) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "sum of an empty family");
  const auto sums = additive_closure(M, make_set(std::vector<Index>(family.begin(), family.end())));
  return M.lattice().join(sums);
}

// (n:e) = { r : r e <= n }.
inline Ideal colon(const LeModule& M, Index n) {
  IndexSet out;
  for (Index r = 0; r < M.ring().order(); ++r)
    if (M.leq(M.act(r, M.top()), n)) out.push_back(r);
  return Ideal{std::move(out)};
}

inline Ideal annihilator(const LeModule& M) { return colon(M, M.zero()); }

// Ie: join of all finite sums a_1 e + ... + a_k e with a_i in I.
inline Index ideal_action(const LeModule& M, const Ideal& I) {
  IndexSet generators;
  for (Index a : I.members) generators.push_back(M.act(a, M.top()));
  return M.lattice().join(additive_closure(M, make_set(std::move(generators))));
}

// Ie <= n  <=>  I ⊆ (n:e).
inline bool lemma_galois_check(const LeModule& M, const Ideal& I, Index n) {
  return M.leq(ideal_action(M, I), n) == is_subset(I, colon(M, n));
}

// Proper submodule element p with: r n <= p implies r ∈ (p:e) or n <= p,
// for every ring element r and every lattice element n.
inline bool is_prime_submodule_element(const LeModule& M, Index p) {
  if (p == M.top() || !is_submodule_element(M, p)) return false;
  const Ideal P = colon(M, p);
  for (Index r = 0; r < M.ring().order(); ++r) {
    if (P.contains(r)) continue;
    for (Index n = 0; n < M.size(); ++n)
      if (M.leq(M.act(r, n), p) && !M.leq(n, p)) return false;
  }
  return true;
}

inline std::vector<Index> spec(const LeModule& M) {
  std::vector<Index> out;
  for (Index p = 0; p < M.size(); ++p)
    if (is_prime_submodule_element(M, p)) out.push_back(p);
  return out;
}

inline std::vector<Index> spec_P(const LeModule& M, const Ideal& P) {
  if (!is_ideal(M.ring(), P.members) || !is_prime_ideal(M.ring(), P))
    throw Error(ErrorKind::NotPrimeIdeal, to_string(P));
  std::vector<Index> out;
  for (Index p : spec(M))
    if (colon(M, p) == P) out.push_back(p);
  return out;
}

// Every submodule element has the form Ie; found by searching all ideals.
inline bool is_multiplication_le_module(const LeModule& M) {
  std::vector<Index> products;
  for (const auto& I : all_ideals(M.ring())) products.push_back(ideal_action(M, I));
  products = make_set(std::move(products));
  for (Index n : submodule_elements(M))
    if (!contains(products, n)) return false;
  return true;
}

// The same property through the identity (n:e)e = n.
inline bool is_multiplication_by_colon(const LeModule& M) {
  for (Index n : submodule_elements(M))
    if (ideal_action(M, colon(M, n)) != n) return false;
  return true;
}

}  // namespace lemod
