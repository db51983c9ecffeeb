#pragma once

// Brute-force design checking on finite Fort spaces. A finite Fort space is
// discrete, so homeomorphism reduces to equal cardinality and the design
// conditions become those of a classical t-(n, k, λ) design.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fortdesign/designs.hpp"

namespace fortdesign::finitebrute {

/// Subsets of {0..n-1} as bitmasks.
using Mask = std::uint64_t;

inline constexpr std::uint32_t kMaxGroundSize = 24;

struct FiniteInstance {
  std::uint32_t n = 0;
  std::vector<Mask> blocks;
  std::uint32_t c_size = 0;
  std::uint32_t d_size = 0;
};

/// Broken instance invariants; empty means valid.
std::vector<std::string> validate(const FiniteInstance& inst);

struct Uniform {
  std::uint64_t lambda = 0;
};
struct NonUniform {
  Mask first = 0;
  std::uint64_t first_count = 0;
  Mask second = 0;
  std::uint64_t second_count = 0;
};
/// A block that is not homeomorphic to D (or whose complement is not
/// homeomorphic to X\D when the type requires it).
struct BlockViolation {
  std::size_t block_index = 0;
};

using BruteResult = std::variant<Uniform, NonUniform, BlockViolation>;

/// Checks every block against the block condition and counts, for every
/// subset E that the multiplicity condition ranges over, the blocks that
/// contain it. Throws std::invalid_argument for invalid instances.
BruteResult brute_lambda(const FiniteInstance& inst, DesignType type);

/// binomial(n - t, k - t): λ of the design made of all k-subsets of an
/// n-set. Requires 1 <= t < k < n; throws std::invalid_argument otherwise.
std::uint64_t all_k_subsets_lambda(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// Every k-subset of {0..n-1} as a block, with C_size = t and D_size = k.
FiniteInstance all_k_subsets_instance(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// "{0,3,5}".
std::string mask_to_string(Mask m);
/// "Exactly(5)", "NonUniform({0,1}: 2, {2,3}: 1)" or "BlockViolation(#3 {0,1})".
std::string to_string(const BruteResult& r, const FiniteInstance& inst);

/// Text format: n, C_size, D_size on their own lines, then one block per
/// line as comma-separated indices. Blank lines and '#' comments are
/// skipped. Throws std::invalid_argument with the offending line number.
FiniteInstance parse_instance(std::istream& in);
std::string format_instance(const FiniteInstance& inst);

}  // namespace fortdesign::finitebrute
