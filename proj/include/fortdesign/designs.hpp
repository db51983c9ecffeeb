#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fortdesign/cardinal.hpp"
#include "fortdesign/descriptors.hpp"

namespace fortdesign {

/// Which of the block conditions and which of the multiplicity conditions a
/// design must meet.
///
///   type 1: blocks ~ D with complements ~ X\D; every copy E of C lies in λ blocks
///   type 2: blocks ~ D;                         every copy E of C lies in λ blocks
///   type 3: blocks ~ D with complements ~ X\D; copies E with X\E ~ X\C only
///   type 4: blocks ~ D;                         copies E with X\E ~ X\C only
enum class DesignType : std::uint8_t { kType1 = 1, kType2 = 2, kType3 = 3, kType4 = 4 };

/// Blocks must also have complements homeomorphic to X\D.
constexpr bool requires_block_complement(DesignType t) {
  return t == DesignType::kType1 || t == DesignType::kType3;
}
/// Only copies of C whose complements are homeomorphic to X\C are counted.
constexpr bool requires_probe_complement(DesignType t) {
  return t == DesignType::kType3 || t == DesignType::kType4;
}

/// Throws std::invalid_argument outside 1..4.
DesignType design_type_from_int(int t);

/// Block families used as witnesses.
struct ClassW {
  SubsetDescriptor d;  ///< {E : E ~ D and X\E ~ X\D}
  bool operator==(const ClassW&) const = default;
};
struct ClassL {
  SubsetDescriptor d;  ///< {E : E ~ D}
  bool operator==(const ClassL&) const = default;
};
/// {X \ {p_(2k+1) : k >= s} : s >= 1} with D = {p_(2n)} ∪ {b} in a countable X.
struct OddTail {
  bool operator==(const OddTail&) const = default;
};
struct Singleton {
  SubsetDescriptor member;
  bool operator==(const Singleton&) const = default;
};

using FamilyDescriptor = std::variant<ClassW, ClassL, OddTail, Singleton>;

std::string to_string(const FamilyDescriptor& f);

/// Broken validity conditions of a witness family for the given D and X.
std::vector<std::string> family_violations(const FamilyDescriptor& f, const SubsetDescriptor& d,
                                           const SpaceDescriptor& x);

/// The clause of the case analysis that produced a verdict.
enum class CaseTag : std::uint8_t {
  kCardExceeds,
  kA1,
  kA2,
  kA3,
  kB,
  kC1Bound,
  kC1Case1,
  kC1Case2,
  kC1Case3,
  kC1Case4,
  kC1Case5,
  kC2,
  kC3,
  kT2Finite,
  kT2Small,
  kT2Full,
  kT3,
  kT4,
  kT3Case1,
  kT3Case2,
  kT3Case3,
  kT3Case4,
};

std::string_view to_string(CaseTag tag);

class Verdict {
 public:
  static Verdict exists(LambdaValue lambda, FamilyDescriptor witness, CaseTag tag,
                        std::string reason);
  static Verdict not_exists(CaseTag tag, std::string reason);

  bool is_exists() const { return lambda_.has_value(); }
  /// Precondition: is_exists().
  const LambdaValue& lambda() const { return *lambda_; }
  /// Precondition: is_exists().
  const FamilyDescriptor& witness() const { return *witness_; }
  CaseTag case_tag() const { return tag_; }
  const std::string& reason() const { return reason_; }

  bool operator==(const Verdict&) const = default;

 private:
  Verdict(std::optional<LambdaValue> lambda, std::optional<FamilyDescriptor> witness, CaseTag tag,
          std::string reason)
      : lambda_(std::move(lambda)), witness_(std::move(witness)), tag_(tag),
        reason_(std::move(reason)) {}

  std::optional<LambdaValue> lambda_;
  std::optional<FamilyDescriptor> witness_;
  CaseTag tag_;
  std::string reason_;
};

/// Key: value lines for exists, lambda, witness, case_tag and reason.
std::string to_record(const Verdict& v);
/// One human-readable sentence.
std::string to_text(const Verdict& v);

// Each decide_* validates its inputs (C and D nonempty and valid in X) and
// throws InvalidDescriptor otherwise.
Verdict decide_type1(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x);
Verdict decide_type2(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x);
Verdict decide_type3(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x);
Verdict decide_type4(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x);
Verdict decide(DesignType type, const SubsetDescriptor& c, const SubsetDescriptor& d,
               const SpaceDescriptor& x);

/// The four statements that must agree for every C, D: no type-2 design,
/// no type-4 design, "C infinite and b in C\D or card(C) > card(D)", and
/// C not embeddable in D.
struct EquivalenceReport {
  bool no_type2 = false;
  bool no_type4 = false;
  bool cardinal_condition = false;
  bool not_embeddable = false;

  bool consistent() const;
  /// Names of statement pairs that disagree, e.g. "no_type2/not_embeddable".
  std::vector<std::string> divergent_pairs() const;
};

EquivalenceReport crosscheck_embedding(const SubsetDescriptor& c, const SubsetDescriptor& d,
                                       const SpaceDescriptor& x);

struct SweepOptions {
  std::uint64_t max_finite = 6;
  std::uint32_t max_aleph = 1;  ///< card(X) ranges over aleph_0..aleph_max_aleph
  bool finite_only = false;     ///< restrict C and D to finite sizes
  bool inject_fault = false;    ///< test hook: corrupt one statement to exercise the harness
};

struct SweepViolation {
  SpaceDescriptor x;
  SubsetDescriptor c;
  SubsetDescriptor d;
  std::string what;
};

struct SweepSummary {
  std::uint64_t cases = 0;
  std::uint64_t equivalence_violations = 0;
  std::uint64_t monotonicity_violations = 0;
  std::uint64_t cardinality_violations = 0;
  std::uint64_t witness_violations = 0;
  std::vector<SweepViolation> examples;  ///< first few violations, for diagnostics

  std::uint64_t total_violations() const {
    return equivalence_violations + monotonicity_violations + cardinality_violations +
           witness_violations;
  }
};

/// Runs every decision procedure over the descriptor grid and checks the
/// cross-type properties on each case.
SweepSummary sweep_grid(const SweepOptions& options);

}  // namespace fortdesign
