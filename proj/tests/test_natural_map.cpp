#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lemod;

namespace {

NaturalMap psi_of(const std::string& name) {
  return build_natural_map(ModuleSpectrum(support::catalog_instance(name)));
}

LeModule two_chain() {
  return make_le_module(make_zn(2), chain_lattice(2), {{0, 1}, {1, 1}}, 0, {{0, 0}, {0, 1}});
}

void expect_all(const std::vector<Clause>& cs, bool v) {
  for (const auto& c : cs) EXPECT_EQ(c.value, v) << c.name;
}

}  // namespace

TEST(NaturalMap, Z6IsHomeomorphism) {
  const auto nm = psi_of("Z6-ideal-lattice");
  EXPECT_EQ(nm.annihilator(), (Ideal{{0}}));
  EXPECT_EQ(nm.quotient().ring.order(), 6u);
  EXPECT_TRUE(nm.bijective());
  // colon(p) = p here, so ψ follows the point order of both spectra
  for (Index k = 0; k < nm.table().size(); ++k)
    EXPECT_EQ(nm.quotient_spectrum().points[nm.table()[k]], colon(nm.spectrum().module(), nm.spectrum().points()[k]));
  expect_all(homeomorphism_check(nm).clauses, true);
  EXPECT_TRUE(is_continuous(nm.domain(), nm.codomain(), nm.table()));
}

TEST(NaturalMap, Z4SinglePoint) {
  const auto nm = psi_of("Z4-ideal-lattice");
  EXPECT_EQ(nm.table(), (std::vector<Index>{0}));
  EXPECT_TRUE(nm.bijective());
  const auto conn = connectedness_equivalence(nm);
  EXPECT_TRUE(conn.equivalence.hypothesis_met);
  expect_all(conn.equivalence.clauses, true);
  EXPECT_TRUE(conn.consequence.hypothesis);
  EXPECT_TRUE(conn.consistent());
}

TEST(NaturalMap, TwoChain) {
  const auto nm = build_natural_map(ModuleSpectrum(two_chain()));
  EXPECT_EQ(nm.annihilator(), (Ideal{{0}}));
  EXPECT_TRUE(nm.bijective());
  EXPECT_TRUE(correspondence_check(nm).ok);
}

TEST(NaturalMap, ZeroModuleIsDegenerate) {
  const ModuleSpectrum S(support::catalog_instance("zero-module-over-Z2"));
  try {
    build_natural_map(S);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateModule);
  }
  try {
    finite_spec_criterion(S);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptySpectrum);
  }
}

TEST(NaturalMap, VectorSpaceCollapsesPoints) {
  const auto nm = psi_of("Z2xZ2-over-Z2-submodules");
  EXPECT_EQ(nm.spectrum().size(), 4u);
  EXPECT_EQ(nm.quotient_spectrum().size(), 1u);
  EXPECT_EQ(nm.table(), (std::vector<Index>(4, 0)));
  EXPECT_TRUE(nm.surjective());
  EXPECT_FALSE(nm.injective());

  const auto inj = injectivity_battery(nm);
  ASSERT_EQ(inj.clauses.size(), 3u);
  expect_all(inj.clauses, false);
  EXPECT_TRUE(inj.consistent());

  const auto sp = spectral_battery(nm);
  ASSERT_EQ(sp.clauses.size(), 6u);
  EXPECT_TRUE(sp.hypothesis_met);
  expect_all(sp.clauses, false);

  expect_all(homeomorphism_check(nm).clauses, false);
  const auto fin = finite_spec_criterion(nm.spectrum());
  expect_all(fin.clauses, false);
}

TEST(NaturalMap, ConnectednessOnZ6) {
  const auto conn = connectedness_equivalence(psi_of("Z6-ideal-lattice"));
  EXPECT_TRUE(conn.equivalence.hypothesis_met);
  expect_all(conn.equivalence.clauses, false);
  EXPECT_FALSE(conn.consequence.hypothesis);
  EXPECT_TRUE(conn.consistent());
}

TEST(NaturalMap, ComponentsMatchMinimalPrimes) {
  const auto rep = component_minimal_prime_bijection(psi_of("Z6-ideal-lattice"));
  EXPECT_TRUE(rep.hypothesis_met);
  EXPECT_EQ(rep.components, 2u);
  EXPECT_EQ(rep.minimal_primes, 2u);
  EXPECT_TRUE(rep.consistent());
  const auto v = component_minimal_prime_bijection(psi_of("Z2xZ2-over-Z2-submodules"));
  EXPECT_EQ(v.components, 1u);
  EXPECT_EQ(v.minimal_primes, 1u);
  EXPECT_TRUE(v.consistent());
}

TEST(NaturalMap, BatteriesConsistentOnCatalog) {
  for (const auto& d : catalog()) {
    const ModuleSpectrum S(build_instance(d));
    if (annihilator(S.module()) == unit_ideal(S.ring())) continue;
    const auto nm = build_natural_map(S);
    EXPECT_TRUE(correspondence_check(nm).ok) << d.name;
    EXPECT_TRUE(continuity_check(nm).ok) << d.name;
    EXPECT_TRUE(basic_open_check(nm).ok) << d.name;
    EXPECT_TRUE(injectivity_battery(nm).consistent()) << d.name;
    EXPECT_TRUE(surjectivity_and_openclosed(nm).consistent()) << d.name;
    EXPECT_TRUE(homeomorphism_check(nm).consistent()) << d.name;
    EXPECT_TRUE(connectedness_equivalence(nm).consistent()) << d.name;
    EXPECT_TRUE(spectral_battery(nm).consistent()) << d.name;
    EXPECT_TRUE(multiplication_spectral_check(nm).holds()) << d.name;
    EXPECT_TRUE(image_closed_criterion(nm).consistent()) << d.name;
    // every catalog instance turns out to have surjective ψ
    EXPECT_TRUE(nm.surjective()) << d.name;
  }
}

TEST(NaturalMap, IdealLatticesHaveBijectivePsi) {
  for (std::size_t n : {2, 3, 5, 8, 9, 12, 30}) {
    const auto nm = build_natural_map(ModuleSpectrum(ideal_lattice_le_module(make_zn(n))));
    EXPECT_TRUE(nm.bijective()) << n;
    EXPECT_TRUE(is_homeomorphism(nm.domain(), nm.codomain(), nm.table())) << n;
  }
}
