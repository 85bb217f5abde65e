// Walks through a few catalog instances and prints their spectra, closed
// sets and natural maps.
//
//   spectrum_tour [instance-name ...]

#include <iostream>
#include <string>
#include <vector>

#include "lemod/lemod.hpp"

using namespace lemod;

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

void tour(const InstanceDescriptor& d) {
  const ModuleSpectrum S(build_instance(d));
  const auto& M = S.module();
  std::cout << "== " << d.name << "\n";
  std::cout << "lattice of " << M.size() << " elements over a ring of order " << S.ring().order() << "\n";

  std::cout << "Spec(M):";
  if (S.size() == 0) std::cout << " empty";
  for (std::size_t k = 0; k < S.size(); ++k)
    std::cout << "  p" << k << "=" << M.lattice().label(S.points()[k]) << " (colon " << to_string(S.colons()[k])
              << ")";
  std::cout << "\n";

  const auto X = zariski_space(S);
  std::cout << "closed sets:";
  for (const auto& c : X.closed_sets()) std::cout << " " << to_string(c);
  std::cout << "\n";
  const auto p = point_set_properties(X);
  std::cout << "T0 " << yn(p.t0) << ", T1 " << yn(p.t1) << ", connected " << yn(p.connected) << ", spectral "
            << yn(p.spectral) << ", top le-module " << yn(is_top_le_module(S)) << "\n";
  const auto comps = irreducible_components(X);
  std::cout << "irreducible components:";
  for (const auto& c : comps) std::cout << " " << to_string(c);
  std::cout << "\n";

  if (annihilator(M) == unit_ideal(S.ring())) {
    std::cout << "Ann(M) = R, no natural map\n\n";
    return;
  }
  const auto nm = build_natural_map(S);
  std::cout << "Ann(M) = " << to_string(nm.annihilator()) << ", psi:";
  for (std::size_t k = 0; k < nm.table().size(); ++k)
    std::cout << " p" << k << "->" << to_string(nm.quotient_spectrum().points[nm.table()[k]]);
  std::cout << "\npsi injective " << yn(nm.injective()) << ", surjective " << yn(nm.surjective())
            << ", homeomorphism " << yn(is_homeomorphism(nm.domain(), nm.codomain(), nm.table())) << "\n\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> names(argv + 1, argv + argc);
  if (names.empty())
    names = {"Z6-ideal-lattice", "Z12-ideal-lattice", "Z2xZ2-over-Z2-submodules", "zero-module-over-Z2"};
  for (const auto& n : names) {
    const auto d = find_in_catalog(n);
    if (!d) {
      std::cerr << "unknown instance: " << n << "\n";
      return 1;
    }
    tour(*d);
  }
}
