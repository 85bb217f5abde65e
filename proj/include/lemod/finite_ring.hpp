#pragma once

// Finite commutative rings with unity given by explicit Cayley tables,
// together with their ideals, prime spectrum, quotients and Zariski opens.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lemod/error.hpp"
#include "lemod/index_set.hpp"

namespace lemod {

using Table = std::vector<std::vector<Index>>;

class FiniteRing;
FiniteRing make_ring(std::size_t order, const Table& add_table, const Table& mul_table);

class FiniteRing {
 public:
  std::size_t order() const noexcept { return order_; }
  Index zero() const noexcept { return zero_; }
  Index one() const noexcept { return one_; }

  Index add(Index a, Index b) const { return add_[a * order_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * order_ + b]; }
  Index neg(Index a) const { return neg_[a]; }

  IndexSet elements() const { return full_set(order_); }

  Table add_table() const { return unflatten(add_); }
  Table mul_table() const { return unflatten(mul_); }

  friend bool operator==(const FiniteRing&, const FiniteRing&) = default;

 private:
  friend FiniteRing make_ring(std::size_t, const Table&, const Table&);
  FiniteRing() = default;

  Table unflatten(const std::vector<Index>& flat) const {
    Table t(order_, std::vector<Index>(order_));
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b) t[a][b] = flat[a * order_ + b];
    return t;
  }

  std::size_t order_ = 0;
  Index zero_ = 0;
  Index one_ = 0;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
};

namespace detail {

inline void check_table_shape(std::size_t order, const Table& t, const char* name) {
  if (t.size() != order) throw AxiomViolation(std::string(name) + "-total", {t.size()});
  for (std::size_t a = 0; a < order; ++a) {
    if (t[a].size() != order) throw AxiomViolation(std::string(name) + "-total", {a});
    for (std::size_t b = 0; b < order; ++b)
      if (t[a][b] >= order) throw AxiomViolation(std::string(name) + "-total", {a, b});
  }
}

inline std::optional<Index> find_identity(std::size_t order, const Table& t) {
  for (Index z = 0; z < order; ++z) {
    bool ok = true;
    for (Index a = 0; a < order && ok; ++a) ok = t[z][a] == a && t[a][z] == a;
    if (ok) return z;
  }
  return std::nullopt;
}

}  // namespace detail

// Validates the tables exhaustively. Zero and one are located by search.
inline FiniteRing make_ring(std::size_t order, const Table& add_table, const Table& mul_table) {
  if (order == 1) throw Error(ErrorKind::ZeroRing, "the ring with one element is excluded");
  if (order == 0) throw AxiomViolation("add-total", {0});
  detail::check_table_shape(order, add_table, "add");
  detail::check_table_shape(order, mul_table, "mul");
  const auto& A = add_table;
  const auto& M = mul_table;

  for (Index a = 0; a < order; ++a)
    for (Index b = a + 1; b < order; ++b)
      if (A[a][b] != A[b][a]) throw AxiomViolation("add-comm", {a, b});
  auto zero = detail::find_identity(order, A);
  if (!zero) throw AxiomViolation("add-identity", {});
  for (Index a = 0; a < order; ++a)
    for (Index b = 0; b < order; ++b)
      for (Index c = 0; c < order; ++c)
        if (A[A[a][b]][c] != A[a][A[b][c]]) throw AxiomViolation("add-assoc", {a, b, c});

  std::vector<Index> neg(order);
  for (Index a = 0; a < order; ++a) {
    auto it = std::find(A[a].begin(), A[a].end(), *zero);
    if (it == A[a].end()) throw AxiomViolation("add-inverse", {a});
    neg[a] = static_cast<Index>(it - A[a].begin());
  }

  for (Index a = 0; a < order; ++a)
    for (Index b = a + 1; b < order; ++b)
      if (M[a][b] != M[b][a]) throw AxiomViolation("mul-comm", {a, b});
  auto one = detail::find_identity(order, M);
  if (!one) throw AxiomViolation("mul-identity", {});
  for (Index a = 0; a < order; ++a)
    for (Index b = 0; b < order; ++b)
      for (Index c = 0; c < order; ++c) {
        if (M[M[a][b]][c] != M[a][M[b][c]]) throw AxiomViolation("mul-assoc", {a, b, c});
        if (M[a][A[b][c]] != A[M[a][b]][M[a][c]])
          throw AxiomViolation("distributivity", {a, b, c});
      }
  if (*zero == *one) throw Error(ErrorKind::ZeroRing, "zero equals one");

  FiniteRing r;
  r.order_ = order;
  r.zero_ = *zero;
  r.one_ = *one;
  r.add_.reserve(order * order);
  r.mul_.reserve(order * order);
  for (Index a = 0; a < order; ++a)
    for (Index b = 0; b < order; ++b) {
      r.add_.push_back(A[a][b]);
      r.mul_.push_back(M[a][b]);
    }
  r.neg_ = std::move(neg);
  return r;
}

// Integers mod n with their natural tables; element i is the residue i.
inline FiniteRing make_zn(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::ZeroRing, "Z_n needs n >= 2, got " + std::to_string(n));
  Table add(n, std::vector<Index>(n)), mul(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      add[a][b] = (a + b) % n;
      mul[a][b] = (a * b) % n;
    }
  return make_ring(n, add, mul);
}

// Componentwise product. The pair (a, b) is stored at index a * |R2| + b.
inline FiniteRing product_ring(const FiniteRing& r1, const FiniteRing& r2) {
  const std::size_t n1 = r1.order(), n2 = r2.order(), n = n1 * n2;
  Table add(n, std::vector<Index>(n)), mul(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      const Index a1 = x / n2, b1 = x % n2, a2 = y / n2, b2 = y % n2;
      add[x][y] = r1.add(a1, a2) * n2 + r2.add(b1, b2);
      mul[x][y] = r1.mul(a1, a2) * n2 + r2.mul(b1, b2);
    }
  return make_ring(n, add, mul);
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

struct Ideal {
  IndexSet members;

  bool contains(Index r) const { return lemod::contains(members, r); }
  std::size_t size() const noexcept { return members.size(); }

  friend bool operator==(const Ideal&, const Ideal&) = default;
  // Canonical order: by cardinality, then lexicographically.
  friend std::strong_ordering operator<=>(const Ideal& a, const Ideal& b) {
    if (auto c = a.members.size() <=> b.members.size(); c != 0) return c;
    return a.members <=> b.members;
  }
};

inline std::string to_string(const Ideal& i) { return to_string(i.members); }

inline bool is_subset(const Ideal& a, const Ideal& b) { return is_subset(a.members, b.members); }

inline bool is_ideal(const FiniteRing& R, const IndexSet& subset) {
  if (!contains(subset, R.zero())) return false;
  for (Index a : subset) {
    if (a >= R.order()) return false;
    for (Index b : subset)
      if (!contains(subset, R.add(a, b))) return false;
    for (Index r = 0; r < R.order(); ++r)
      if (!contains(subset, R.mul(r, a))) return false;
  }
  return true;
}

// Smallest ideal containing `generators`.
inline Ideal generate_ideal(const FiniteRing& R, const IndexSet& generators) {
  std::vector<char> in(R.order(), 0);
  std::vector<Index> members, queue;
  auto insert = [&](Index x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      queue.push_back(x);
    }
  };
  insert(R.zero());
  for (Index g : generators) insert(g);
  while (!queue.empty()) {
    const Index x = queue.back();
    queue.pop_back();
    for (Index r = 0; r < R.order(); ++r) insert(R.mul(r, x));
    for (std::size_t i = 0; i < members.size(); ++i) insert(R.add(x, members[i]));
  }
  return Ideal{make_set(std::move(members))};
}

inline Ideal zero_ideal(const FiniteRing& R) { return Ideal{{R.zero()}}; }
inline Ideal unit_ideal(const FiniteRing& R) { return Ideal{R.elements()}; }
inline Ideal principal_ideal(const FiniteRing& R, Index r) { return generate_ideal(R, {r}); }

inline Ideal ideal_sum(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  return generate_ideal(R, set_union(I.members, J.members));
}

inline Ideal ideal_product(const FiniteRing& R, const Ideal& I, const Ideal& J) {
  std::vector<Index> products;
  for (Index a : I.members)
    for (Index b : J.members) products.push_back(R.mul(a, b));
  return generate_ideal(R, make_set(std::move(products)));
}

inline Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  return Ideal{set_intersection(I.members, J.members)};
}

inline bool is_proper(const FiniteRing& R, const Ideal& I) { return I.size() < R.order(); }

inline bool is_prime_ideal(const FiniteRing& R, const Ideal& I) {
  if (!is_proper(R, I)) return false;
  for (Index a = 0; a < R.order(); ++a) {
    if (I.contains(a)) continue;
    for (Index b = 0; b < R.order(); ++b)
      if (!I.contains(b) && I.contains(R.mul(a, b))) return false;
  }
  return true;
}

// All ideals, in canonical order. Ideals generated by at most k elements are
// produced level by level (level k+1 = level-k ideals plus one generator)
// until a level adds nothing new.
inline std::vector<Ideal> all_ideals(const FiniteRing& R) {
  std::set<Ideal> found;
  std::vector<Ideal> frontier;
  for (Index r = 0; r < R.order(); ++r) {
    auto I = principal_ideal(R, r);
    if (found.insert(I).second) frontier.push_back(std::move(I));
  }
  while (!frontier.empty()) {
    std::vector<Ideal> next;
    for (const auto& I : frontier)
      for (Index g = 0; g < R.order(); ++g) {
        if (I.contains(g)) continue;
        auto members = I.members;
        members.push_back(g);
        auto J = generate_ideal(R, make_set(std::move(members)));
        if (found.insert(J).second) next.push_back(std::move(J));
      }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

inline std::vector<Ideal> maximal_ideals(const FiniteRing& R) {
  const auto ideals = all_ideals(R);
  std::vector<Ideal> out;
  for (const auto& I : ideals) {
    if (!is_proper(R, I)) continue;
    bool maximal = true;
    for (const auto& J : ideals)
      if (is_proper(R, J) && J != I && is_subset(I, J)) maximal = false;
    if (maximal) out.push_back(I);
  }
  return out;
}

inline bool is_maximal_ideal(const FiniteRing& R, const Ideal& I) {
  const auto maximal = maximal_ideals(R);
  return std::find(maximal.begin(), maximal.end(), I) != maximal.end();
}

// Exactly one maximal ideal.
inline bool is_quasi_local(const FiniteRing& R) { return maximal_ideals(R).size() == 1; }

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

struct RingSpectrum {
  std::vector<Ideal> points;

  std::size_t size() const noexcept { return points.size(); }
  std::optional<Index> position(const Ideal& P) const {
    auto it = std::find(points.begin(), points.end(), P);
    if (it == points.end()) return std::nullopt;
    return static_cast<Index>(it - points.begin());
  }
};

inline RingSpectrum spec_ring(const FiniteRing& R) {
  RingSpectrum s;
  for (auto& I : all_ideals(R))
    if (is_prime_ideal(R, I)) s.points.push_back(std::move(I));
  return s;
}

// V^R(I), as positions into `spec.points`.
inline IndexSet variety_ring(const RingSpectrum& spec, const Ideal& I) {
  IndexSet out;
  for (Index k = 0; k < spec.size(); ++k)
    if (is_subset(I, spec.points[k])) out.push_back(k);
  return out;
}

// D_r = Spec(R) - V^R(rR).
inline IndexSet basic_open_ring(const FiniteRing& R, const RingSpectrum& spec, Index r) {
  return set_difference(full_set(spec.size()), variety_ring(spec, principal_ideal(R, r)));
}

// Zariski closed sets {V^R(I)} in canonical order.
inline std::vector<IndexSet> zariski_closed_sets(const FiniteRing& R, const RingSpectrum& spec) {
  std::set<IndexSet> family;
  for (const auto& I : all_ideals(R)) family.insert(variety_ring(spec, I));
  return {family.begin(), family.end()};
}

// ---------------------------------------------------------------------------
// Quotients, idempotents, minimal primes
// ---------------------------------------------------------------------------

struct QuotientRing {
  FiniteRing ring;
  // projection[r] is the coset index of r.
  std::vector<Index> projection;
  // representative[c] is the least element of coset c.
  std::vector<Index> representative;

  Ideal image(const Ideal& I) const {
    std::vector<Index> out;
    for (Index a : I.members) out.push_back(projection[a]);
    return Ideal{make_set(std::move(out))};
  }
  Ideal preimage(const Ideal& J) const {
    IndexSet out;
    for (Index r = 0; r < projection.size(); ++r)
      if (J.contains(projection[r])) out.push_back(r);
    return Ideal{std::move(out)};
  }
};

// Cosets are numbered by their least member.
inline QuotientRing quotient_ring(const FiniteRing& R, const Ideal& I) {
  if (!is_proper(R, I)) throw Error(ErrorKind::ImproperIdeal, "quotient by the unit ideal");
  const std::size_t n = R.order();
  std::vector<Index> rep(n);
  for (Index r = 0; r < n; ++r) {
    Index least = r;
    for (Index a : I.members) least = std::min(least, R.add(r, a));
    rep[r] = least;
  }
  std::vector<Index> reps = make_set(rep);
  std::vector<Index> projection(n);
  for (Index r = 0; r < n; ++r)
    projection[r] =
        static_cast<Index>(std::lower_bound(reps.begin(), reps.end(), rep[r]) - reps.begin());
  const std::size_t m = reps.size();
  Table add(m, std::vector<Index>(m)), mul(m, std::vector<Index>(m));
  for (Index c = 0; c < m; ++c)
    for (Index d = 0; d < m; ++d) {
      add[c][d] = projection[R.add(reps[c], reps[d])];
      mul[c][d] = projection[R.mul(reps[c], reps[d])];
    }
  return QuotientRing{make_ring(m, add, mul), std::move(projection), std::move(reps)};
}

inline IndexSet idempotents(const FiniteRing& R) {
  IndexSet out;
  for (Index x = 0; x < R.order(); ++x)
    if (R.mul(x, x) == x) out.push_back(x);
  return out;
}

inline std::vector<Ideal> minimal_primes(const FiniteRing& R) {
  const auto spec = spec_ring(R);
  std::vector<Ideal> out;
  for (const auto& P : spec.points) {
    bool minimal = true;
    for (const auto& Q : spec.points)
      if (Q != P && is_subset(Q, P)) minimal = false;
    if (minimal) out.push_back(P);
  }
  return out;
}

inline Ideal intersect_primes(std::span<const Ideal> family) {
  if (family.empty()) throw Error(ErrorKind::EmptyFamily, "intersection of no prime ideals");
  Ideal out = family.front();
  for (const auto& P : family.subspan(1)) out = ideal_intersect(out, P);
  return out;
}

}  // namespace lemod
