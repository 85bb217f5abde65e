#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "test_support.hpp"

using namespace lemod;

namespace {

// Every finite topology is the down-set topology of a preorder.
FiniteSpace random_space(std::mt19937& rng, std::size_t n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(0.3);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) le[a][b] = a == b || coin(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = true;
  std::vector<IndexSet> closed;
  for_each_subset(n, [&](const IndexSet& c) {
    for (Index p : c)
      for (Index q = 0; q < n; ++q)
        if (le[q][p] && !std::binary_search(c.begin(), c.end(), q)) return;
    closed.push_back(c);
  });
  return FiniteSpace::from_closed_sets(n, closed);
}

std::vector<oracle::Mask> masks(const std::vector<IndexSet>& v) {
  std::vector<oracle::Mask> out;
  for (const auto& s : v) out.push_back(support::mask(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> d;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

LeModule random_module(std::mt19937& rng) {
  static const std::vector<std::size_t> rings = {2, 3, 4, 6, 8, 9, 10, 12};
  const std::size_t n = rings[rng() % rings.size()];
  const auto R = make_zn(n);
  switch (rng() % 3) {
    case 0:
      return ideal_lattice_le_module(make_zn(2 + rng() % 59));
    case 1:
      return submodule_lattice_le_module(R, regular_module(R));
    default: {
      const auto ds = divisors(n);
      std::vector<std::size_t> moduli = {ds[rng() % ds.size()], ds[rng() % ds.size()]};
      if (moduli[0] * moduli[1] > 36) moduli.pop_back();
      return submodule_lattice_le_module(R, cyclic_sum_module(R, moduli));
    }
  }
}

}  // namespace

TEST(Properties, RandomSpacesAgreeWithOracle) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto X = random_space(rng, 1 + rng() % 6);
    const auto T = support::topology(X);
    EXPECT_EQ(is_t0(X), oracle::t0(T));
    EXPECT_EQ(is_t1(X), oracle::t1(T));
    EXPECT_EQ(is_connected(X), oracle::connected(T));
    EXPECT_EQ(is_spectral(X), is_t0(X));
    EXPECT_EQ(masks(irreducible_components(X)), oracle::components_by_subset_scan(T));
    for_each_subset(X.size(), [&](const IndexSet& y) {
      const auto c = X.closure(y);
      EXPECT_EQ(support::mask(c), T.closure(support::mask(y)));
      EXPECT_EQ(X.closure(c), c);
      if (!y.empty()) {
        EXPECT_EQ(is_irreducible(X, y), oracle::irreducible(T, support::mask(y)));
      }
    });
  }
}

TEST(Properties, RelabellingIsAHomeomorphism) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto X = random_space(rng, n);
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<IndexSet> moved;
    for (const auto& c : X.closed_sets()) moved.push_back(image(perm, c));
    const auto Y = FiniteSpace::from_closed_sets(n, moved);
    EXPECT_TRUE(is_homeomorphism(X, Y, perm));
    EXPECT_TRUE(are_homeomorphic(X, Y));
    EXPECT_EQ(point_set_properties(X).t0, point_set_properties(Y).t0);
    EXPECT_EQ(irreducible_components(X).size(), irreducible_components(Y).size());
  }
}

TEST(Properties, RandomModulesAgreeWithOracle) {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 60; ++trial) {
    const auto M = random_module(rng);
    const auto raw = support::raw(M);
    ASSERT_TRUE(oracle::failing_axioms(raw).empty());
    EXPECT_EQ(spec(M), oracle::prime_elements(raw));
    for (Index n = 0; n < M.size(); ++n) {
      EXPECT_EQ(is_submodule_element(M, n), oracle::is_submodule_element(raw, n));
      if (is_submodule_element(M, n)) {
        EXPECT_EQ(colon(M, n).members, oracle::colon(raw, n));
      }
    }
    const auto ideals = all_ideals(M.ring());
    for (const auto& I : ideals) {
      const Index ie = ideal_action(M, I);
      EXPECT_EQ(ie, oracle::ideal_times_e(raw, I.members));
      for (Index n : submodule_elements(M)) EXPECT_EQ(M.leq(ie, n), is_subset(I, colon(M, n)));
    }
  }
}

TEST(Properties, ClosureIsVarietyOfMeet) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const ModuleSpectrum S(random_module(rng));
    if (S.size() == 0) continue;
    const auto X = zariski_space(S);
    for (int k = 0; k < 20; ++k) {
      IndexSet y;
      for (Index p = 0; p < S.size(); ++p)
        if (rng() % 2) y.push_back(p);
      if (y.empty()) y.push_back(rng() % S.size());
      EXPECT_EQ(X.closure(y), variety_star(S, im_meet(S, y)));
    }
    for (Index n : S.submodule_elements()) EXPECT_TRUE(vstar_decomposition_check(S, n).ok);
    EXPECT_TRUE(is_t0(X) == (std::set<Ideal>(S.colons().begin(), S.colons().end()).size() == S.size()));
  }
}

TEST(Properties, MutationsReportAFailingAxiom) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 400; ++trial) {
    const auto M = random_module(rng);
    auto add = M.add_table();
    auto act = M.action_table();
    const Index v = rng() % M.size();
    if (rng() % 2)
      add[rng() % M.size()][rng() % M.size()] = v;
    else
      act[rng() % act.size()][rng() % M.size()] = v;
    auto raw = support::raw(M);
    raw.add = add;
    raw.act = act;
    const auto failing = oracle::failing_axioms(raw);
    try {
      make_le_module(M.ring(), M.lattice(), add, M.zero(), act);
      EXPECT_TRUE(failing.empty());
    } catch (const AxiomViolation& e) {
      EXPECT_NE(std::find(failing.begin(), failing.end(), e.axiom()), failing.end()) << e.what();
    }
  }
}
