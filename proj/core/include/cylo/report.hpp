#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cylo {

/// One axiom verdict. Failing checks carry the lexicographically least
/// witness tuple found by the exhaustive scan, rendered with user names.
struct CheckResult {
  std::string axiom;
  bool pass = true;
  std::vector<std::string> witness;
  std::string detail;
};

class ValidationReport {
 public:
  ValidationReport() = default;
  explicit ValidationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void pass(std::string axiom, std::string detail = "") {
    checks_.push_back({std::move(axiom), true, {}, std::move(detail)});
  }
  void fail(std::string axiom, std::vector<std::string> witness, std::string detail = "") {
    checks_.push_back({std::move(axiom), false, std::move(witness), std::move(detail)});
  }

  /// Appends another report's checks under "prefix.".
  void merge(const std::string& prefix, const ValidationReport& sub) {
    for (const auto& c : sub.checks_) {
      CheckResult copy = c;
      copy.axiom = prefix + "." + copy.axiom;
      checks_.push_back(std::move(copy));
    }
  }

  /// Appends another report's checks with their axiom ids unchanged.
  void append(const ValidationReport& sub) {
    for (const auto& c : sub.checks_) checks_.push_back(c);
  }

  bool ok() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  const std::vector<CheckResult>& checks() const { return checks_; }

  const CheckResult* find(std::string_view axiom) const {
    for (const auto& c : checks_)
      if (c.axiom == axiom) return &c;
    return nullptr;
  }

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input text that cannot be understood at all (bad JSON, missing fields,
/// dangling names, a leq that is not a lattice order).
struct ParseError : Error {
  using Error::Error;
};

/// A structure that parses but is internally inconsistent in a way that
/// precludes computing with it (for example conflicting operation tables).
struct StructuralError : Error {
  using Error::Error;
};

/// A caller-supplied argument outside an operation's domain.
struct ArgumentError : Error {
  using Error::Error;
};

/// A precondition stated for an operation does not hold for the input.
struct ContractError : Error {
  using Error::Error;
};

/// An enumeration would exceed the configured size guard.
struct ResourceGuardError : Error {
  std::size_t limit;
  ResourceGuardError(const std::string& what, std::size_t lim) : Error(what), limit(lim) {}
};

/// Size guards for the enumerating operations. `max_family` bounds closure
/// and topology families, `max_lattice` bounds carriers of derived algebras,
/// `max_scan` bounds brute-force cross-check scans (counted in subsets).
struct Limits {
  std::size_t max_family = std::size_t{1} << 20;
  std::size_t max_lattice = 4096;
  std::size_t max_scan = std::size_t{1} << 20;
};

}  // namespace cylo
