// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lemod/cli.hpp"
#include "lemod/lemod.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace lemod;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  std::string id;
  double limit_seconds;  // 0 = no limit
  std::function<Result()> run;
};

std::vector<NamedInstance> catalog_instances() {
  std::vector<NamedInstance> out;
  for (const auto& d : catalog()) out.push_back({d.name, build_instance(d)});
  return out;
}

// Runs the named verifier checks on every catalog instance and counts falsified outcomes.
Result run_statements(const std::vector<std::string>& ids) {
  std::size_t checked = 0, falsified = 0, hnm = 0, na = 0;
  std::string first;
  for (const auto& inst : catalog_instances()) {
    const InstanceContext ctx(inst);
    for (const auto& sc : detail::statement_checks()) {
      if (std::find(ids.begin(), ids.end(), sc.statement.id) == ids.end()) continue;
      const auto o = sc.run(ctx);
      ++checked;
      if (o.verdict == Verdict::Falsified) {
        ++falsified;
        if (first.empty()) first = sc.statement.id + " on " + inst.name + ": " + o.witness;
      }
      hnm += o.verdict == Verdict::HypothesisNotMet;
      na += o.verdict == Verdict::NotApplicable;
    }
  }
  std::ostringstream s;
  s << checked << " checks, falsified " << falsified << ", hypothesis-not-met " << hnm << ", not-applicable "
    << na;
  if (!first.empty()) s << "; first: " << first;
  return {falsified == 0 && checked > 0, s.str()};
}

Result ac1_axiom_gate() {
  for (const auto& d : catalog()) {
    try {
      build_instance(d);
    } catch (const std::exception& e) {
      return {false, d.name + " rejected: " + e.what()};
    }
  }
  const auto M = ideal_lattice_le_module(make_zn(6));
  std::mt19937 rng(6);
  std::size_t violations = 0, preserved = 0, attempts = 0;
  while (violations < 60 && attempts < 10000) {
    ++attempts;
    auto add = M.add_table();
    auto act = M.action_table();
    const Index v = rng() % M.size();
    Index* cell = rng() % 2 ? &add[rng() % M.size()][rng() % M.size()]
                            : &act[rng() % act.size()][rng() % M.size()];
    if (*cell == v) continue;
    *cell = v;
    auto raw = support::raw(M);
    raw.add = add;
    raw.act = act;
    const auto failing = oracle::failing_axioms(raw);
    try {
      make_le_module(M.ring(), M.lattice(), add, M.zero(), act);
      if (!failing.empty()) return {false, "mutation accepted but oracle reports " + failing.front()};
      ++preserved;
    } catch (const AxiomViolation& e) {
      if (std::find(failing.begin(), failing.end(), e.axiom()) == failing.end())
        return {false, std::string("reported axiom not violated: ") + e.what()};
      ++violations;
    }
  }
  return {violations >= 50, std::to_string(catalog().size()) + " instances valid; " + std::to_string(violations) +
                                " mutations rejected with a violated axiom, " + std::to_string(preserved) +
                                " preserving mutations skipped"};
}

Result ac2_galois() {
  std::size_t checks = 0, bad = 0;
  for (const auto& inst : catalog_instances()) {
    const auto& M = inst.module;
    const auto raw = support::raw(M);
    for (const auto& I : all_ideals(M.ring())) {
      const Index ie = ideal_action(M, I);
      if (ie != oracle::ideal_times_e(raw, I.members)) ++bad;
      for (Index n : submodule_elements(M)) {
        ++checks;
        const bool lhs = M.leq(ie, n);
        const auto col = oracle::colon(raw, n);
        const bool rhs = std::includes(col.begin(), col.end(), I.members.begin(), I.members.end());
        if (lhs != rhs) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(checks) + " (I, n) pairs, " + std::to_string(bad) + " violations"};
}

Result ac4_basis() {
  std::size_t bad = 0, opens = 0;
  for (const auto& inst : catalog_instances()) {
    const ModuleSpectrum S(inst.module);
    const auto X = zariski_space(S);
    const auto& R = S.ring();
    std::vector<IndexSet> basic(R.order());
    for (Index r = 0; r < R.order(); ++r) basic[r] = basic_open(S, r);
    for (const auto& U : X.open_sets()) {
      ++opens;
      IndexSet cover;
      for (const auto& B : basic)
        if (is_subset(B, U)) cover = set_union(cover, B);
      if (cover != U) ++bad;
    }
    for (Index r = 0; r < R.order(); ++r)
      for (Index s = 0; s < R.order(); ++s)
        if (basic[R.mul(r, s)] != set_intersection(basic[r], basic[s])) ++bad;
    for (const auto& I : all_ideals(R)) {
      IndexSet meet = S.all();
      for (Index a : I.members) meet = set_intersection(meet, variety_star(S, ideal_action(S.module(), principal_ideal(R, a))));
      if (variety_star(S, ideal_action(S.module(), I)) != meet) ++bad;
    }
  }
  return {bad == 0, std::to_string(opens) + " open sets covered by basic opens, " + std::to_string(bad) + " violations"};
}

Result ac7_generic_points() {
  auto r = run_statements({"C6.3", "T6.6"});
  std::size_t spectra = 0, mismatches = 0;
  for (const auto& inst : catalog_instances()) {
    const ModuleSpectrum S(inst.module);
    if (S.size() > 12) continue;
    ++spectra;
    const auto X = zariski_space(S);
    const auto fast = irreducible_components(X);
    std::vector<oracle::Mask> fm;
    for (const auto& c : fast) fm.push_back(support::mask(c));
    std::sort(fm.begin(), fm.end());
    if (fast != irreducible_components_brute_force(X) || fm != oracle::components_by_subset_scan(support::topology(X)))
      ++mismatches;
  }
  r.pass = r.pass && mismatches == 0;
  r.detail += "; component finder agrees with brute force on " + std::to_string(spectra - mismatches) + "/" +
              std::to_string(spectra) + " spectra";
  return r;
}

Result ac8_concrete() {
  const std::vector<std::pair<std::size_t, std::size_t>> expected = {{4, 1}, {6, 2}, {12, 2}, {30, 3}};
  std::ostringstream s;
  bool ok = true;
  for (const auto& [n, size] : expected) {
    const auto M = ideal_lattice_le_module(make_zn(n));
    const auto got = spec(M).size();
    const auto scan = oracle::prime_elements(support::raw(M)).size();
    ok = ok && got == size && scan == size;
    s << "|Spec| Z" << n << " = " << got << " ";
  }
  const auto p6 = point_set_properties(zariski_space(ModuleSpectrum(ideal_lattice_le_module(make_zn(6)))));
  const auto X6 = zariski_space(ModuleSpectrum(ideal_lattice_le_module(make_zn(6))));
  const bool discrete = X6.closed_sets().size() == (std::size_t{1} << X6.size());
  const auto p4 = point_set_properties(zariski_space(ModuleSpectrum(ideal_lattice_le_module(make_zn(4)))));
  ok = ok && discrete && !p6.connected && p4.connected && p4.spectral;
  s << "; Z6 discrete " << discrete << ", connected " << p6.connected << "; Z4 connected " << p4.connected
    << ", spectral " << p4.spectral;
  return {ok, s.str()};
}

Result ac9_determinism() {
  const auto a = cli::cmd_verify({}, true, cli::Format::Structured);
  const auto b = cli::cmd_verify({}, true, cli::Format::Structured);
  const auto j = cli::json::parse(a.output);
  std::ostringstream s;
  s << a.output.size() << " bytes, identical " << (a.output == b.output) << ", exit " << a.exit_code
    << ", falsified " << j["counts"]["falsified"] << ", hypothesis-not-met " << j["counts"]["hypothesis-not-met"];
  return {a.output == b.output && a.exit_code == cli::exit_code::ok, s.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1 axiom gate", 5, ac1_axiom_gate},
      {"AC2 Galois property", 10, ac2_galois},
      {"AC3 topology identities", 30,
       [] { return run_statements({"P3.1", "L3.2", "P3.3", "P3.4", "T3.5"}); }},
      {"AC4 basis", 0, ac4_basis},
      {"AC5 natural map", 0, [] { return run_statements({"P4.1", "P5.1", "T4.3"}); }},
      {"AC6 equivalence batteries", 0, [] { return run_statements({"P4.2", "T4.5", "T7.1", "P6.2", "T7.4"}); }},
      {"AC7 generic points and components", 0, ac7_generic_points},
      {"AC8 concrete spectra", 0, ac8_concrete},
      {"AC9 determinism", 120, ac9_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      r.pass = false;
      r.detail += "; over time limit";
    }
    std::printf("%s %s  (%.2f s) %s\n", r.pass ? "PASS" : "FAIL", c.id.c_str(), secs, r.detail.c_str());
    failed += !r.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
