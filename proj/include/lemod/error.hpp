#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lemod {

enum class ErrorKind {
  AxiomViolation,
  ZeroRing,
  ImproperIdeal,
  NotAPoset,
  NotALattice,
  Unbounded,
  EmptyFamily,
  NotPrimeIdeal,
  DegenerateModule,
  EmptySpectrum,
  TopologyAxiomViolation,
  ModuleAxiomViolation,
  NotTopLeModule,
  ParseError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::ZeroRing: return "ZeroRing";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::NotAPoset: return "NotAPoset";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::EmptyFamily: return "EmptyFamily";
    case ErrorKind::NotPrimeIdeal: return "NotPrimeIdeal";
    case ErrorKind::DegenerateModule: return "DegenerateModule";
    case ErrorKind::EmptySpectrum: return "EmptySpectrum";
    case ErrorKind::TopologyAxiomViolation: return "TopologyAxiomViolation";
    case ErrorKind::ModuleAxiomViolation: return "ModuleAxiomViolation";
    case ErrorKind::NotTopLeModule: return "NotTopLeModule";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// A table failed one of the structure axioms. `axiom` is a short id such as
// "M3" or "add-assoc"; `witness` holds the element indices that break it.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::size_t> witness,
                 ErrorKind kind = ErrorKind::AxiomViolation)
      : Error(kind, describe(axiom, witness)),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(const std::string& axiom, const std::vector<std::size_t>& w) {
    std::string s = "axiom " + axiom + " fails at (";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w[i]);
    }
    return s + ")";
  }

  std::string axiom_;
  std::vector<std::size_t> witness_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + (field.empty() ? "" : " [" + field + "]") +
                  ": " + message),
        line_(line),
        field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace lemod
