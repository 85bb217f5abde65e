#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lemod {

// Outcome of an exhaustive identity check. Keeps the first counterexample
// found in scan order.
struct Check {
  bool ok = true;
  std::string witness;

  void fail(std::string w) {
    if (ok) {
      ok = false;
      witness = std::move(w);
    }
  }
  void merge(const Check& other) {
    if (!other.ok) fail(other.witness);
  }
  explicit operator bool() const noexcept { return ok; }
};

// One clause of an equivalence with its computed truth value.
struct Clause {
  std::string name;
  bool value = false;
};

inline bool all_equal(const std::vector<Clause>& clauses) {
  for (const auto& c : clauses)
    if (c.value != clauses.front().value) return false;
  return true;
}

// First pair of clauses with different truth values, as "a != b".
inline std::string first_disagreement(const std::vector<Clause>& clauses) {
  for (const auto& c : clauses)
    if (c.value != clauses.front().value)
      return clauses.front().name + "=" + (clauses.front().value ? "true" : "false") + " but " +
             c.name + "=" + (c.value ? "true" : "false");
  return {};
}

struct Implication {
  std::string name;
  bool hypothesis = false;
  bool conclusion = false;

  bool holds() const noexcept { return !hypothesis || conclusion; }
};

}  // namespace lemod
