#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lemod;

namespace {

std::vector<IndexSet> sorted(std::vector<IndexSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string axiom_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AxiomViolation& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ModuleAxiomViolation);
    return e.axiom();
  }
  return "";
}

}  // namespace

TEST(InstanceGen, ChainForPrimePower) {
  const auto M = ideal_lattice_le_module(make_zn(8));
  ASSERT_EQ(M.size(), 4u);
  for (Index a = 0; a + 1 < M.size(); ++a) EXPECT_TRUE(M.lattice().leq(a, a + 1));
  EXPECT_EQ(M.lattice().hasse_edges().size(), 3u);
}

TEST(InstanceGen, DiamondForZ6) {
  const auto M = ideal_lattice_le_module(make_zn(6));
  EXPECT_EQ(M.size(), 4u);
  EXPECT_FALSE(M.lattice().leq(1, 2));
  EXPECT_FALSE(M.lattice().leq(2, 1));
  EXPECT_EQ(M.lattice().label(1), "{0,3}");
}

TEST(InstanceGen, IdealLatticeAddIsIdealSum) {
  const auto R = make_zn(12);
  const auto M = ideal_lattice_le_module(R);
  const auto ideals = all_ideals(R);
  ASSERT_EQ(M.size(), ideals.size());
  for (Index a = 0; a < M.size(); ++a)
    for (Index b = 0; b < M.size(); ++b) EXPECT_EQ(M.add(a, b), M.lattice().join(a, b));
}

TEST(InstanceGen, SubmodulesMatchSubgroupScan) {
  const auto F2 = make_zn(2);
  const auto V = cyclic_sum_module(F2, {2, 2});
  EXPECT_EQ(V.order, 4u);
  EXPECT_EQ(sorted(all_submodules(F2, V)), sorted(oracle::subgroups_by_scan(V.add)));
  EXPECT_EQ(all_submodules(F2, V).size(), 5u);

  const auto Z4 = make_zn(4);
  const auto W = cyclic_sum_module(Z4, {2, 4});
  EXPECT_EQ(sorted(all_submodules(Z4, W)), sorted(oracle::subgroups_by_scan(W.add)));

  const auto reg = regular_module(make_zn(6));
  EXPECT_EQ(sorted(all_submodules(make_zn(6), reg)), sorted(support::members(all_ideals(make_zn(6)))));
}

TEST(InstanceGen, VectorSpaceLattice) {
  const auto M = support::catalog_instance("Z2xZ2-over-Z2-submodules");
  EXPECT_EQ(M.size(), 5u);
  EXPECT_EQ(spec(M).size(), 4u);
  EXPECT_TRUE(oracle::failing_axioms(support::raw(M)).empty());
}

TEST(InstanceGen, ZeroModule) {
  const auto M = support::catalog_instance("zero-module-over-Z2");
  EXPECT_EQ(M.size(), 1u);
  EXPECT_EQ(M.zero(), M.top());
  EXPECT_TRUE(spec(M).empty());
}

TEST(InstanceGen, CatalogValidates) {
  const auto cat = catalog();
  EXPECT_GE(cat.size(), 14u);
  std::set<std::string> names;
  for (const auto& d : cat) {
    EXPECT_TRUE(names.insert(d.name).second) << d.name;
    const auto M = build_instance(d);
    EXPECT_TRUE(oracle::failing_axioms(support::raw(M)).empty()) << d.name;
  }
  EXPECT_TRUE(find_in_catalog("Z30-ideal-lattice").has_value());
  EXPECT_FALSE(find_in_catalog("Z7-ideal-lattice").has_value());
}

TEST(InstanceGen, SpectrumSizes) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"Z4-ideal-lattice", 1}, {"Z6-ideal-lattice", 2}, {"Z12-ideal-lattice", 2},
      {"Z30-ideal-lattice", 3}, {"GF4-ideal-lattice", 1}, {"Z2xZ2-ideal-lattice", 2}};
  for (const auto& [name, n] : expected) EXPECT_EQ(spec(support::catalog_instance(name)).size(), n) << name;
}

TEST(InstanceGen, IdealLatticeColonIsItself) {
  for (const auto& d : catalog()) {
    if (d.module.kind != ModuleSpec::Kind::IdealLattice) continue;
    const auto M = build_instance(d);
    const auto ideals = all_ideals(M.ring());
    for (Index p : spec(M)) EXPECT_EQ(colon(M, p), ideals[p]) << d.name;
    EXPECT_TRUE(build_natural_map(ModuleSpectrum(M)).bijective()) << d.name;
  }
}

TEST(InstanceGen, GF4IsAField) {
  const auto M = support::catalog_instance("GF4-ideal-lattice");
  EXPECT_EQ(M.ring().order(), 4u);
  EXPECT_EQ(M.size(), 2u);
  EXPECT_EQ(idempotents(M.ring()), (IndexSet{0, 1}));
  EXPECT_FALSE(oracle::rings_isomorphic(M.ring().add_table(), M.ring().mul_table(), oracle::zn_add(4),
                                        oracle::zn_mul(4)));
}

TEST(InstanceGen, CyclicSumRequiresDivisors) {
  EXPECT_THROW(cyclic_sum_module(make_zn(4), {3}), Error);
  EXPECT_THROW(cyclic_sum_module(product_ring(make_zn(2), make_zn(2)), {2}), Error);
}

TEST(InstanceGen, FiniteModuleErrors) {
  const auto R = make_zn(2);
  const auto good = cyclic_sum_module(R, {2});
  EXPECT_EQ(axiom_of([&] { make_finite_module(R, 2, {{0, 1}}, good.action); }), "group-total");
  EXPECT_EQ(axiom_of([&] { make_finite_module(R, 2, good.add, {{0, 0}}); }), "action-total");
  EXPECT_EQ(axiom_of([&] { make_finite_module(R, 2, {{1, 1}, {1, 1}}, good.action); }), "group-identity");
  EXPECT_EQ(axiom_of([&] { make_finite_module(R, 2, {{0, 1}, {1, 1}}, good.action); }), "group-inverse");
  EXPECT_EQ(axiom_of([&] { make_finite_module(R, 2, good.add, {{0, 0}, {0, 0}}); }), "unit-action");
  EXPECT_EQ(axiom_of([&] { make_finite_module(R, 2, good.add, {{1, 1}, {0, 1}}); }), "action-additive");
  EXPECT_EQ(axiom_of([&] { make_finite_module(R, 2, good.add, {{0, 1}, {0, 1}}); }), "ring-additive");
  EXPECT_NO_THROW(make_finite_module(R, 2, good.add, good.action));
}
