#pragma once

// Command implementations behind tools/lemod. Each returns the exit code and
// the text to emit; argument parsing lives in the tool.

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lemod/descriptor.hpp"
#include "lemod/error.hpp"
#include "lemod/instance_gen.hpp"
#include "lemod/natural_map.hpp"
#include "lemod/spectrum_topology.hpp"
#include "lemod/verifier.hpp"

namespace lemod::cli {

using json = nlohmann::ordered_json;

enum class Format { Text, Structured, Dot };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 1;
inline constexpr int axiom_violation = 2;
inline constexpr int falsified = 3;
}  // namespace exit_code

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string output;
};

// A path to a descriptor file, or the name of a catalog instance.
inline InstanceDescriptor resolve_input(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_descriptor_file(arg);
  if (auto d = find_in_catalog(arg)) return *d;
  throw ParseError(0, "file", "cannot read '" + arg + "' and no catalog instance has that name");
}

// Runs a command body and maps errors to exit codes.
inline CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {exit_code::input_error, std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    const bool input = e.kind() == ErrorKind::NotTopLeModule;
    return {input ? exit_code::input_error : exit_code::axiom_violation,
            std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {exit_code::input_error, std::string("error: ") + e.what() + "\n"};
  }
}

namespace detail {

inline json to_json(const IndexSet& s) { return json(s); }

inline json labelled_points(const ModuleSpectrum& S) {
  json pts = json::array();
  for (std::size_t k = 0; k < S.size(); ++k)
    pts.push_back({{"position", k},
                   {"element", S.points()[k]},
                   {"label", S.module().lattice().label(S.points()[k])},
                   {"colon", S.colons()[k].members}});
  return pts;
}

inline std::string flag(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline CommandResult cmd_validate(const std::string& input, Format format) {
  return guarded([&] {
    const auto d = resolve_input(input);
    const auto M = build_instance(d);
    if (format == Format::Structured) {
      json j = {{"instance", d.name},
                {"valid", true},
                {"ring_order", M.ring().order()},
                {"lattice_size", M.size()}};
      return CommandResult{exit_code::ok, j.dump(2) + "\n"};
    }
    std::ostringstream out;
    out << "ok: " << d.name << " (ring order " << M.ring().order() << ", lattice size "
        << M.size() << ")\n";
    return CommandResult{exit_code::ok, out.str()};
  });
}

inline CommandResult cmd_spec(const std::string& input, Format format) {
  return guarded([&] {
    const auto d = resolve_input(input);
    ModuleSpectrum S(build_instance(d));
    const Ideal ann = annihilator(S.module());
    std::optional<NaturalMap> psi;
    if (is_proper(S.ring(), ann)) psi.emplace(build_natural_map(S));

    if (format == Format::Structured) {
      json j;
      j["instance"] = d.name;
      j["points"] = detail::labelled_points(S);
      j["annihilator"] = ann.members;
      json qspec = json::array();
      json table = json::array();
      if (psi) {
        for (const auto& Q : psi->quotient_spectrum().points)
          qspec.push_back({{"ideal", Q.members}, {"preimage", psi->quotient().preimage(Q).members}});
        for (Index t : psi->table()) table.push_back(t);
      }
      j["quotient_spectrum"] = qspec;
      j["psi"] = table;
      j["psi_injective"] = psi ? json(psi->injective()) : json(nullptr);
      j["psi_surjective"] = psi ? json(psi->surjective()) : json(nullptr);
      return CommandResult{exit_code::ok, j.dump(2) + "\n"};
    }

    std::ostringstream out;
    out << "instance: " << d.name << "\n";
    if (S.size() == 0) {
      out << "Spec(M) is empty\n";
    } else {
      out << "Spec(M): " << S.size() << " point(s)\n";
      for (std::size_t k = 0; k < S.size(); ++k)
        out << "  p" << k << " = " << S.module().lattice().label(S.points()[k])
            << "  (p:e) = " << to_string(S.colons()[k]) << "\n";
    }
    out << "Ann(M) = " << to_string(ann) << "\n";
    if (!psi) {
      out << "R/Ann(M) is the zero ring; psi is not defined\n";
      return CommandResult{exit_code::ok, out.str()};
    }
    out << "Spec(R/Ann(M)): " << psi->quotient_spectrum().size() << " point(s)\n";
    for (std::size_t k = 0; k < psi->quotient_spectrum().size(); ++k) {
      const auto& Q = psi->quotient_spectrum().points[k];
      out << "  P" << k << " = " << to_string(Q) << "  preimage " << to_string(psi->quotient().preimage(Q))
          << "\n";
    }
    out << "psi:";
    for (std::size_t k = 0; k < psi->table().size(); ++k) out << " p" << k << "->P" << psi->table()[k];
    out << "\npsi injective: " << detail::flag(psi->injective())
        << ", surjective: " << detail::flag(psi->surjective()) << "\n";
    return CommandResult{exit_code::ok, out.str()};
  });
}

inline CommandResult cmd_topology(const std::string& input, TopologyKind which, Format format) {
  return guarded([&] {
    const auto d = resolve_input(input);
    ModuleSpectrum S(build_instance(d));
    const auto top = make_topology(S, which);
    const auto& X = top.space;
    const auto props = point_set_properties(X);
    if (format == Format::Structured) {
      json j;
      j["instance"] = d.name;
      j["topology"] = std::string(to_string(which));
      j["points"] = detail::labelled_points(S);
      json closed = json::array();
      for (const auto& c : X.closed_sets()) closed.push_back(c);
      j["closed_sets"] = closed;
      j["t0"] = props.t0;
      j["t1"] = props.t1;
      j["connected"] = props.connected;
      j["quasi_compact"] = props.quasi_compact;
      j["spectral"] = props.spectral;
      return CommandResult{exit_code::ok, j.dump(2) + "\n"};
    }
    std::ostringstream out;
    out << "instance: " << d.name << "\ntopology: " << to_string(which) << "\npoints: " << S.size()
        << "\nclosed sets (" << X.closed_sets().size() << "):\n";
    for (const auto& c : X.closed_sets()) out << "  " << to_string(c) << "\n";
    out << "T0: " << detail::flag(props.t0) << "\nT1: " << detail::flag(props.t1)
        << "\nconnected: " << detail::flag(props.connected)
        << "\nquasi-compact: " << detail::flag(props.quasi_compact)
        << "\nspectral: " << detail::flag(props.spectral) << "\n";
    return CommandResult{exit_code::ok, out.str()};
  });
}

inline json report_to_json(const VerificationReport& rep, bool timing) {
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json j = {{"statement", e.statement}, {"instance", e.instance}, {"verdict", to_string(e.verdict)}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    if (!e.clauses.empty()) {
      json cl = json::array();
      for (const auto& c : e.clauses) cl.push_back({{"clause", c.name}, {"value", c.value}});
      j["clauses"] = cl;
    }
    if (!e.note.empty()) j["note"] = e.note;
    if (timing) j["millis"] = e.millis;
    entries.push_back(j);
  }
  json stmts = json::array();
  for (const auto& s : statements()) stmts.push_back({{"id", s.id}, {"description", s.description}});
  return {{"statements", stmts},
          {"entries", entries},
          {"counts",
           {{"verified", rep.count(Verdict::Verified)},
            {"falsified", rep.count(Verdict::Falsified)},
            {"hypothesis-not-met", rep.count(Verdict::HypothesisNotMet)},
            {"not-applicable", rep.count(Verdict::NotApplicable)}}}};
}

inline std::string report_to_text(const VerificationReport& rep, bool timing) {
  std::ostringstream out;
  for (const auto& e : rep.entries) {
    out << e.statement << "  " << e.instance << "  " << to_string(e.verdict);
    if (!e.witness.empty()) out << "  witness: " << e.witness;
    if (!e.note.empty()) out << "  (" << e.note << ")";
    if (timing) out << "  " << e.millis << " ms";
    out << "\n";
  }
  out << "verified " << rep.count(Verdict::Verified) << ", falsified " << rep.count(Verdict::Falsified)
      << ", hypothesis-not-met " << rep.count(Verdict::HypothesisNotMet) << ", not-applicable "
      << rep.count(Verdict::NotApplicable) << "\n";
  return out.str();
}

inline CommandResult cmd_verify(const std::vector<std::string>& inputs, bool use_catalog,
                                Format format, bool timing = false) {
  return guarded([&] {
    std::vector<InstanceDescriptor> descs;
    if (use_catalog) descs = catalog();
    for (const auto& in : inputs) descs.push_back(resolve_input(in));
    std::vector<NamedInstance> instances;
    for (const auto& d : descs) instances.push_back({d.name, build_instance(d)});
    const auto rep = run_all(instances);
    const int code = rep.falsified() ? exit_code::falsified : exit_code::ok;
    if (format == Format::Structured) return CommandResult{code, report_to_json(rep, timing).dump(2) + "\n"};
    return CommandResult{code, report_to_text(rep, timing)};
  });
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// target: "lattice" (Hasse diagram, covers point upward) or "specialization"
// (edge p -> q when q lies in the closure of {p}).
inline CommandResult cmd_export_dot(const std::string& input, const std::string& target) {
  return guarded([&] {
    const auto d = resolve_input(input);
    std::ostringstream out;
    if (target == "lattice") {
      const auto M = build_instance(d);
      const auto& L = M.lattice();
      out << "digraph lattice {\n  rankdir=BT;\n";
      for (Index a = 0; a < L.size(); ++a) out << "  n" << a << " [label=" << dot_quote(L.label(a)) << "];\n";
      for (const auto& [a, b] : L.hasse_edges()) out << "  n" << a << " -> n" << b << ";\n";
      out << "}\n";
    } else if (target == "specialization") {
      ModuleSpectrum S(build_instance(d));
      const auto X = zariski_space(S);
      out << "digraph specialization {\n";
      for (Index k = 0; k < S.size(); ++k)
        out << "  p" << k << " [label=" << dot_quote(S.module().lattice().label(S.points()[k])) << "];\n";
      for (const auto& [p, q] : specialization_edges(X)) out << "  p" << p << " -> p" << q << ";\n";
      out << "}\n";
    } else {
      throw ParseError(0, "which", "expected 'lattice' or 'specialization', got '" + target + "'");
    }
    return CommandResult{exit_code::ok, out.str()};
  });
}

inline CommandResult cmd_catalog_list(Format format) {
  if (format == Format::Structured) {
    json j = json::array();
    for (const auto& d : catalog()) j.push_back(d.name);
    return {exit_code::ok, j.dump(2) + "\n"};
  }
  std::string out;
  for (const auto& d : catalog()) out += d.name + "\n";
  return {exit_code::ok, out};
}

inline CommandResult cmd_catalog_show(const std::string& name) {
  return guarded([&] {
    auto d = find_in_catalog(name);
    if (!d) throw ParseError(0, "name", "no catalog instance named '" + name + "'");
    return CommandResult{exit_code::ok, to_text(*d)};
  });
}

// Writes the output to `path` when given, otherwise leaves it for stdout.
inline CommandResult emit(CommandResult r, const std::string& path) {
  if (path.empty() || r.exit_code == exit_code::input_error || r.exit_code == exit_code::axiom_violation)
    return r;
  std::ofstream f(path, std::ios::binary);
  if (!f) return {exit_code::input_error, "error: cannot write '" + path + "'\n"};
  f << r.output;
  return {r.exit_code, ""};
}

}  // namespace lemod::cli
