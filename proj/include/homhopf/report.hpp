#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "homhopf/linear.hpp"

namespace homhopf {

inline constexpr std::size_t kDefaultViolationCap = 32;

struct CheckOptions {
  std::size_t max_violations = kDefaultViolationCap;
};

struct Violation {
  std::string identity;
  std::vector<std::size_t> witness;  // basis indices of the failing tuple
  SparseVec lhs, rhs;
};

struct IdentityTally {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
};

/// Outcome of an exhaustive identity check. `violations` is capped;
/// `violation_count` is the uncapped total, so the list is empty exactly
/// when the verdict is pass.
struct AxiomReport {
  std::string subject;
  std::vector<IdentityTally> identities;
  std::vector<Violation> violations;
  std::size_t violation_count = 0;
  std::size_t cap = kDefaultViolationCap;

  bool passed() const { return violation_count == 0; }
  const IdentityTally* find(const std::string& identity) const;
  bool identity_passed(const std::string& identity) const;
  /// Appends another report's tallies and violations (respecting this cap),
  /// optionally prefixing its identity names.
  void absorb(const AxiomReport& other, const std::string& prefix = "");
};

/// Collects comparisons into an AxiomReport.
class ReportBuilder {
public:
  explicit ReportBuilder(std::string subject, const CheckOptions& opts = {});

  /// Registers the identity even if no instance is ever compared.
  void declare(const std::string& identity);
  void compare(const std::string& identity, std::initializer_list<std::size_t> witness, const SparseVec& lhs,
               const SparseVec& rhs);
  void compare(const std::string& identity, std::initializer_list<std::size_t> witness, const Vec& lhs, const Vec& rhs);
  void compare(const std::string& identity, std::initializer_list<std::size_t> witness, const Scalar& lhs, const Scalar& rhs);
  void absorb(const AxiomReport& other, const std::string& prefix = "") { report_.absorb(other, prefix); }

  const AxiomReport& current() const { return report_; }
  AxiomReport finish() && { return std::move(report_); }

private:
  IdentityTally& tally(const std::string& identity);
  AxiomReport report_;
};

/// Base for failures that carry a report of the violated identities.
struct AxiomFailure : std::runtime_error {
  AxiomFailure(std::string kind, const std::string& what, AxiomReport r)
      : std::runtime_error(kind + ": " + what), kind(std::move(kind)), report(std::move(r)) {}
  std::string kind;
  AxiomReport report;
};

#define HOMHOPF_FAILURE(Name)                                               \
  struct Name : AxiomFailure {                                              \
    Name(const std::string& what, AxiomReport r)                            \
        : AxiomFailure(#Name, what, std::move(r)) {}                        \
  }

HOMHOPF_FAILURE(InvalidInput);
HOMHOPF_FAILURE(DualAxiomFailure);
HOMHOPF_FAILURE(OpAxiomFailure);
HOMHOPF_FAILURE(IncompatibleAction);
HOMHOPF_FAILURE(IncompatibleCoaction);
HOMHOPF_FAILURE(BicrossConditionFailure);
HOMHOPF_FAILURE(MatchedPairFailure);
HOMHOPF_FAILURE(ConstructionFailure);
HOMHOPF_FAILURE(MirrorMismatch);
HOMHOPF_FAILURE(DoubleMismatch);

#undef HOMHOPF_FAILURE

struct NoAntipode : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonUniqueAntipode : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingDoubleTag : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Human-readable report: one line per identity, then the recorded
/// violations with witnesses and both sides.
std::string format_report(const AxiomReport& r, const std::vector<std::string>& basis_names = {});

}  // namespace homhopf
