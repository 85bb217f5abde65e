#pragma once

// Text descriptor format: `key: value` lines, with table rows of
// whitespace-separated integers following a table key. See
// docs/descriptor-format.md for the grammar.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lemod/error.hpp"
#include "lemod/instance_gen.hpp"

namespace lemod {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

inline std::size_t parse_count(const std::string& word, std::size_t line, const std::string& field) {
  std::size_t v = 0;
  const auto* end = word.data() + word.size();
  auto [p, ec] = std::from_chars(word.data(), end, v);
  if (ec != std::errc{} || p != end) throw ParseError(line, field, "expected a number, got '" + word + "'");
  return v;
}

struct RawTable {
  std::size_t line = 0;
  std::vector<std::vector<std::size_t>> rows;
};

struct RawField {
  std::size_t line = 0;
  std::string value;
};

inline const std::map<std::string, bool>& known_keys() {
  // key -> is a table
  static const std::map<std::string, bool> keys = {
      {"name", false},      {"ring", false},         {"ring-add", true}, {"ring-mul", true},
      {"module", false},    {"module-add", true},    {"module-action", true},
      {"leq", true},        {"add", true},           {"zero", false},    {"action", true},
  };
  return keys;
}

inline Table take_table(std::map<std::string, RawTable>& tables, const std::string& key,
                        std::size_t rows, std::size_t cols, std::size_t bound, std::size_t line) {
  auto it = tables.find(key);
  if (it == tables.end()) throw ParseError(line, key, "missing table");
  auto& t = it->second;
  if (t.rows.size() != rows)
    throw ParseError(t.line, key,
                     "expected " + std::to_string(rows) + " rows, got " + std::to_string(t.rows.size()));
  for (std::size_t i = 0; i < rows; ++i) {
    if (t.rows[i].size() != cols)
      throw ParseError(t.line + 1 + i, key, "expected " + std::to_string(cols) + " entries");
    for (std::size_t v : t.rows[i])
      if (v >= bound)
        throw ParseError(t.line + 1 + i, key, "entry " + std::to_string(v) + " out of range");
  }
  Table out = std::move(t.rows);
  tables.erase(it);
  return out;
}

inline std::size_t ring_order(const RingSpec& r) {
  switch (r.kind) {
    case RingSpec::Kind::Zn: return r.n;
    case RingSpec::Kind::Explicit: return r.order;
    case RingSpec::Kind::Product: {
      std::size_t o = 1;
      for (const auto& f : r.factors) o *= ring_order(f);
      return o;
    }
  }
  return 0;
}

}  // namespace detail

inline InstanceDescriptor parse_descriptor(std::string_view text) {
  using namespace detail;
  std::map<std::string, RawField> fields;
  std::map<std::string, RawTable> tables;
  std::string current_table;
  std::size_t line_no = 0, last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto line = trim(raw);
    if (line.empty()) continue;
    last_line = line_no;

    const auto colon = line.find(':');
    if (colon != std::string_view::npos) {
      const std::string key(trim(line.substr(0, colon)));
      const auto value = trim(line.substr(colon + 1));
      auto k = known_keys().find(key);
      if (k == known_keys().end()) throw ParseError(line_no, key, "unknown key");
      if (fields.count(key) || tables.count(key)) throw ParseError(line_no, key, "duplicate key");
      if (k->second) {
        if (!value.empty()) throw ParseError(line_no, key, "table rows go on the following lines");
        tables[key].line = line_no;
        current_table = key;
      } else {
        fields[key] = {line_no, std::string(value)};
        current_table.clear();
      }
      continue;
    }
    if (current_table.empty()) throw ParseError(line_no, "", "row outside a table");
    std::vector<std::size_t> row;
    for (const auto& w : split_words(line)) row.push_back(parse_count(w, line_no, current_table));
    tables[current_table].rows.push_back(std::move(row));
  }

  auto field = [&](const std::string& key) -> RawField& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(last_line, key, "missing field");
    return it->second;
  };

  InstanceDescriptor d;
  if (fields.count("name")) d.name = fields["name"].value;

  // ring
  {
    const auto& f = field("ring");
    const auto w = split_words(f.value);
    if (w.size() == 2 && w[0] == "explicit") {
      const std::size_t n = parse_count(w[1], f.line, "ring");
      auto add = take_table(tables, "ring-add", n, n, n, f.line);
      auto mul = take_table(tables, "ring-mul", n, n, n, f.line);
      d.ring = RingSpec::explicit_tables(n, std::move(add), std::move(mul));
    } else {
      // Z n (x Z m)*
      std::vector<RingSpec> factors;
      std::size_t i = 0;
      while (true) {
        if (i + 1 >= w.size() || w[i] != "Z")
          throw ParseError(f.line, "ring", "expected 'Z <n>' or 'explicit <order>'");
        factors.push_back(RingSpec::zn(parse_count(w[i + 1], f.line, "ring")));
        i += 2;
        if (i == w.size()) break;
        if (w[i] != "x") throw ParseError(f.line, "ring", "expected 'x' between factors");
        ++i;
      }
      d.ring = factors.size() == 1 ? factors.front() : RingSpec::product(std::move(factors));
    }
  }
  const std::size_t rn = ring_order(d.ring);

  // module
  {
    const auto& f = field("module");
    const auto w = split_words(f.value);
    ModuleSpec& m = d.module;
    if (w.size() == 1 && w[0] == "ideal-lattice") {
      m.kind = ModuleSpec::Kind::IdealLattice;
    } else if (w.size() == 2 && w[0] == "submodule-lattice" && w[1] == "regular") {
      m.kind = ModuleSpec::Kind::SubmoduleRegular;
    } else if (w.size() >= 3 && w[0] == "submodule-lattice" && w[1] == "cyclic") {
      m.kind = ModuleSpec::Kind::SubmoduleCyclic;
      for (std::size_t i = 2; i < w.size(); ++i) m.moduli.push_back(parse_count(w[i], f.line, "module"));
    } else if (w.size() == 3 && w[0] == "submodule-lattice" && w[1] == "explicit") {
      m.kind = ModuleSpec::Kind::SubmoduleExplicit;
      m.order = parse_count(w[2], f.line, "module");
      m.add = take_table(tables, "module-add", m.order, m.order, m.order, f.line);
      m.action = take_table(tables, "module-action", rn, m.order, m.order, f.line);
    } else if (w.size() == 2 && w[0] == "explicit") {
      m.kind = ModuleSpec::Kind::Explicit;
      m.order = parse_count(w[1], f.line, "module");
      const auto leq = take_table(tables, "leq", m.order, m.order, 2, f.line);
      m.leq.assign(m.order, std::vector<bool>(m.order));
      for (std::size_t a = 0; a < m.order; ++a)
        for (std::size_t b = 0; b < m.order; ++b) m.leq[a][b] = leq[a][b] == 1;
      m.add = take_table(tables, "add", m.order, m.order, m.order, f.line);
      m.action = take_table(tables, "action", rn, m.order, m.order, f.line);
      const auto& z = field("zero");
      m.zero = parse_count(std::string(trim(z.value)), z.line, "zero");
      if (m.zero >= m.order) throw ParseError(z.line, "zero", "out of range");
      fields.erase("zero");
    } else {
      throw ParseError(f.line, "module", "unrecognised module form '" + f.value + "'");
    }
  }
  if (fields.count("zero")) throw ParseError(fields["zero"].line, "zero", "only used by explicit modules");
  if (!tables.empty()) {
    const auto& [key, t] = *tables.begin();
    throw ParseError(t.line, key, "table not used by this ring/module form");
  }
  return d;
}

inline InstanceDescriptor read_descriptor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "file", "cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  auto d = parse_descriptor(buf.str());
  if (d.name.empty()) {
    const auto slash = path.find_last_of('/');
    d.name = path.substr(slash == std::string::npos ? 0 : slash + 1);
  }
  return d;
}

namespace detail {

inline void write_table(std::ostream& out, const std::string& key, const Table& t) {
  out << key << ":\n";
  for (const auto& row : t) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "  ") << row[i];
    out << "\n";
  }
}

inline bool all_zn(const RingSpec& r) {
  if (r.kind == RingSpec::Kind::Zn) return true;
  if (r.kind == RingSpec::Kind::Explicit) return false;
  for (const auto& f : r.factors)
    if (f.kind != RingSpec::Kind::Zn) return false;
  return true;
}

}  // namespace detail

// Inverse of parse_descriptor. Products with non-Z_n factors are written out
// as explicit tables.
inline std::string to_text(const InstanceDescriptor& d) {
  std::ostringstream out;
  if (!d.name.empty()) out << "name: " << d.name << "\n";
  const auto& r = d.ring;
  if (detail::all_zn(r)) {
    out << "ring: ";
    if (r.kind == RingSpec::Kind::Zn) {
      out << "Z " << r.n;
    } else {
      for (std::size_t i = 0; i < r.factors.size(); ++i) out << (i ? " x Z " : "Z ") << r.factors[i].n;
    }
    out << "\n";
  } else {
    const FiniteRing R = build_ring(r);
    out << "ring: explicit " << R.order() << "\n";
    detail::write_table(out, "ring-add", R.add_table());
    detail::write_table(out, "ring-mul", R.mul_table());
  }
  const auto& m = d.module;
  switch (m.kind) {
    case ModuleSpec::Kind::IdealLattice:
      out << "module: ideal-lattice\n";
      break;
    case ModuleSpec::Kind::SubmoduleRegular:
      out << "module: submodule-lattice regular\n";
      break;
    case ModuleSpec::Kind::SubmoduleCyclic:
      out << "module: submodule-lattice cyclic";
      for (auto q : m.moduli) out << " " << q;
      out << "\n";
      break;
    case ModuleSpec::Kind::SubmoduleExplicit:
      out << "module: submodule-lattice explicit " << m.order << "\n";
      detail::write_table(out, "module-add", m.add);
      detail::write_table(out, "module-action", m.action);
      break;
    case ModuleSpec::Kind::Explicit: {
      out << "module: explicit " << m.order << "\n";
      Table leq(m.order, std::vector<Index>(m.order));
      for (std::size_t a = 0; a < m.order; ++a)
        for (std::size_t b = 0; b < m.order; ++b) leq[a][b] = m.leq[a][b] ? 1 : 0;
      detail::write_table(out, "leq", leq);
      detail::write_table(out, "add", m.add);
      out << "zero: " << m.zero << "\n";
      detail::write_table(out, "action", m.action);
      break;
    }
  }
  return out.str();
}

}  // namespace lemod
