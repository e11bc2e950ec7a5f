#pragma once

#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cwb/module.hpp"

namespace cwb {

struct Failure {
  std::string law;
  std::vector<std::string> at;      // basis labels of the failing tuple
  Element residual;                 // LHS - RHS, nonzero
  std::vector<std::string> names;   // basis of the residual; empty for scalar laws

  std::string to_string() const;
};

struct CheckReport {
  std::vector<Failure> failures;

  bool passed() const { return failures.empty(); }
  std::set<std::string> failed_laws() const;
  bool failed(std::string_view law) const;
  void merge(const CheckReport& other);
  std::string to_text() const;
};

using IndexTuple = std::span<const std::size_t>;

// One identity bound to its input tables. The residual is evaluated on basis
// tuples drawn from the slots (one label list per index).
struct Law {
  std::string name;
  std::vector<std::vector<std::string>> slots;
  std::vector<std::string> target;
  std::function<Element(IndexTuple)> residual;
};

using LawSet = std::vector<Law>;

// Evaluates every law on every tuple (lexicographic order, laws in set order).
CheckReport run_laws(const LawSet& laws);

// LHS - RHS of one law at one tuple; throws std::invalid_argument for a law
// name that is not registered or not present in the set.
Element residual(const LawSet& laws, std::string_view law, IndexTuple indices);

// Every law name the workbench knows.
const std::vector<std::string>& registered_laws();
bool is_registered_law(std::string_view name);

}  // namespace cwb

namespace cwb {

// Raised when an operation's precondition is an identity check that failed.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, CheckReport report)
      : std::runtime_error(what), report(std::move(report)) {}
  CheckReport report;
};

// Common spectral expressions.
inline Poly lam_plus_mu() { return lam_() + mu_(); }
inline Poly neg_lam_d() { return -lam_() - d_(); }
inline Poly neg_mu_d() { return -mu_() - d_(); }
inline Poly neg_lam_mu_d() { return -lam_() - mu_() - d_(); }

}  // namespace cwb
