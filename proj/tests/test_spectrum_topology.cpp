#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lemod;

namespace {

// Z_6 ideal lattice: elements {0}, {0,3}, {0,2,4}, Z_6; points at positions
// 0 -> {0,3} and 1 -> {0,2,4}.
ModuleSpectrum z6() { return ModuleSpectrum(ideal_lattice_le_module(make_zn(6))); }
constexpr Index kThree = 1, kTwo = 2;

}  // namespace

TEST(SpectrumTopology, Z6Points) {
  const auto S = z6();
  EXPECT_EQ(S.points(), (std::vector<Index>{kThree, kTwo}));
  EXPECT_EQ(S.position(kTwo), 1u);
  EXPECT_FALSE(S.position(0).has_value());
}

TEST(SpectrumTopology, VarietiesAtExtremes) {
  for (const auto& d : catalog()) {
    const ModuleSpectrum S(build_instance(d));
    const auto& M = S.module();
    EXPECT_EQ(variety_star(S, M.zero()), S.all()) << d.name;
    EXPECT_EQ(variety(S, M.zero()), S.all()) << d.name;
    EXPECT_TRUE(variety_star(S, M.top()).empty()) << d.name;
    EXPECT_TRUE(variety(S, M.top()).empty()) << d.name;
  }
}

TEST(SpectrumTopology, Z6Varieties) {
  const auto S = z6();
  EXPECT_EQ(variety(S, kTwo), IndexSet{1});
  EXPECT_EQ(variety_star(S, kTwo), IndexSet{1});
  EXPECT_EQ(variety_star(S, kThree), IndexSet{0});
}

TEST(SpectrumTopology, Z6IsDiscrete) {
  const auto S = z6();
  const auto tops = build_topologies(S);
  EXPECT_EQ(tops.star.space.closed_sets(), (std::vector<IndexSet>{{}, {0}, {0, 1}, {1}}));
  EXPECT_EQ(tops.star.space, tops.prime.space);
  ASSERT_TRUE(tops.quasi.has_value());
  EXPECT_TRUE(is_top_le_module(S));
}

TEST(SpectrumTopology, SinglePointTopologies) {
  const ModuleSpectrum S(ideal_lattice_le_module(make_zn(4)));
  ASSERT_EQ(S.size(), 1u);
  const auto tops = build_topologies(S);
  EXPECT_EQ(tops.star.space.closed_sets(), (std::vector<IndexSet>{{}, {0}}));
  EXPECT_EQ(tops.prime.space.closed_sets(), (std::vector<IndexSet>{{}, {0}}));
  EXPECT_TRUE(is_top_le_module(S));
}

TEST(SpectrumTopology, StarEqualsPrimeFamilyOnCatalog) {
  for (const auto& d : catalog()) {
    const ModuleSpectrum S(build_instance(d));
    EXPECT_EQ(family_V_star(S), family_V_prime(S)) << d.name;
  }
}

TEST(SpectrumTopology, QuasiUnavailableWhenNotTop) {
  const ModuleSpectrum S(support::catalog_instance("Z2xZ2-over-Z2-submodules"));
  EXPECT_FALSE(is_top_le_module(S));
  try {
    make_topology(S, TopologyKind::Quasi);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTopLeModule);
  }
}

TEST(SpectrumTopology, QuasiRefinesStarWhenTop) {
  for (const auto& d : catalog()) {
    const ModuleSpectrum S(build_instance(d));
    if (!is_top_le_module(S)) continue;
    const auto quasi = family_V(S);
    for (const auto& y : family_V_star(S))
      EXPECT_TRUE(std::binary_search(quasi.begin(), quasi.end(), y)) << d.name;
  }
}

TEST(SpectrumTopology, UnionIntersection) {
  const auto S = z6();
  const auto& R = S.ring();
  const auto I = principal_ideal(R, 2), J = principal_ideal(R, 3);
  EXPECT_TRUE(union_intersection_check(S, I, I).ok);
  EXPECT_TRUE(union_intersection_check(S, zero_ideal(R), J).ok);
  EXPECT_TRUE(union_intersection_check(S, I, J).ok);
  const auto& M = S.module();
  EXPECT_EQ(set_union(variety(S, ideal_action(M, I)), variety(S, ideal_action(M, J))), S.all());
  EXPECT_EQ(variety(S, ideal_action(M, ideal_product(R, I, J))), S.all());
}

TEST(SpectrumTopology, VStarDecomposition) {
  const auto S = z6();
  EXPECT_TRUE(vstar_decomposition_check(S, S.module().zero()).ok);
  EXPECT_TRUE(vstar_decomposition_check(S, S.module().top()).ok);
  const ModuleSpectrum S12(ideal_lattice_le_module(make_zn(12)));
  for (Index n : S12.submodule_elements()) EXPECT_TRUE(vstar_decomposition_check(S12, n).ok) << n;
}

TEST(SpectrumTopology, BasicOpens) {
  const auto S = z6();
  EXPECT_TRUE(basic_open(S, 0).empty());
  EXPECT_EQ(basic_open(S, 1), S.all());
  EXPECT_EQ(basic_open(S, 2), IndexSet{0});
  EXPECT_EQ(set_intersection(basic_open(S, 2), basic_open(S, 3)), basic_open(S, 0));
  EXPECT_EQ(basic_open(S, 1), set_intersection(basic_open(S, 1), basic_open(S, 1)));
}

TEST(SpectrumTopology, BasisOnZ12) {
  const ModuleSpectrum S(ideal_lattice_le_module(make_zn(12)));
  const auto rep = basis_checks(S);
  EXPECT_TRUE(rep.ok());
}

TEST(SpectrumTopology, ClosureFormula) {
  const auto S = z6();
  const auto X = zariski_space(S);
  EXPECT_EQ(X.closure(S.all()), S.all());
  EXPECT_EQ(X.closure({1}), IndexSet{1});
  for (Index p = 0; p < S.size(); ++p) EXPECT_EQ(X.point_closure(p), variety_star(S, S.points()[p]));
  EXPECT_TRUE(closure_check(S, X, {0, 1}).ok);
}

TEST(SpectrumTopology, Components) {
  const auto S = z6();
  const auto X = zariski_space(S);
  EXPECT_EQ(irreducible_components(X), (std::vector<IndexSet>{{0}, {1}}));
  EXPECT_TRUE(is_irreducible(X, {0}));
  for (Index p = 0; p < S.size(); ++p) {
    const auto v = variety_star(S, S.points()[p]);
    EXPECT_TRUE(X.is_closed(v));
    EXPECT_TRUE(is_irreducible(X, v));
  }
}

TEST(SpectrumTopology, PointSetFlags) {
  const auto p6 = point_set_properties(zariski_space(z6()));
  EXPECT_TRUE(p6.t0);
  EXPECT_TRUE(p6.t1);
  EXPECT_FALSE(p6.connected);
  EXPECT_TRUE(p6.quasi_compact);
  EXPECT_TRUE(p6.spectral);
  const auto p4 = point_set_properties(zariski_space(ModuleSpectrum(ideal_lattice_le_module(make_zn(4)))));
  EXPECT_TRUE(p4.connected);
  EXPECT_TRUE(p4.spectral);
}

TEST(SpectrumTopology, T1Criterion) {
  auto clauses = [](const std::string& name) {
    return phi_and_T1_check(ModuleSpectrum(support::catalog_instance(name))).clauses;
  };
  for (const auto& c : clauses("Z6-ideal-lattice")) EXPECT_TRUE(c.value) << c.name;
  for (const auto& c : clauses("Z4-ideal-lattice")) EXPECT_TRUE(c.value) << c.name;
  // four points sharing the colon ideal {0}: (b) fails and the space is not T1
  for (const auto& c : clauses("Z2xZ2-over-Z2-submodules")) EXPECT_FALSE(c.value) << c.name;
}

TEST(SpectrumTopology, IrreducibilityImplications) {
  const auto S = z6();
  const auto X = zariski_space(S);
  const auto crit = irreducibility_criteria(S, X, {0, 1});
  ASSERT_EQ(crit.size(), 4u);
  EXPECT_FALSE(crit[0].hypothesis);  // meet is 0_M, not prime
  EXPECT_FALSE(crit[1].hypothesis);  // not irreducible
  EXPECT_FALSE(crit[2].hypothesis);  // not a chain
  EXPECT_FALSE(crit[3].hypothesis);  // colon {0} is not prime
  for (const auto& i : crit) EXPECT_TRUE(i.holds());
  const auto single = irreducibility_criteria(S, X, {1});
  EXPECT_TRUE(single[0].hypothesis && single[0].conclusion);
  EXPECT_TRUE(single[2].hypothesis && single[2].conclusion);
}

TEST(SpectrumTopology, SpecPIsIrreducible) {
  const ModuleSpectrum S(support::catalog_instance("Z2xZ2-over-Z2-submodules"));
  const auto X = zariski_space(S);
  const auto sp = spec_P_positions(S, Ideal{{0}});
  EXPECT_EQ(sp.size(), 4u);
  EXPECT_TRUE(is_irreducible(X, sp));
}

TEST(SpectrumTopology, EmptyMeetRejected) {
  EXPECT_THROW(im_meet(z6(), {}), Error);
}
