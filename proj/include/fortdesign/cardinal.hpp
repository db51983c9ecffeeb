#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace fortdesign {

/// Largest aleph index accepted when parsing cardinals unless a caller
/// asks for a different ladder.
inline constexpr std::uint32_t kDefaultMaxAlephIndex = 3;

/// A symbolic cardinal: either a natural number or aleph_i for a small i.
///
/// Ordering is Finite(n) < Finite(m) iff n < m, every finite cardinal is
/// below every aleph, and alephs are ordered by index. Only the operations
/// needed to decide design existence are provided; there is no
/// exponentiation and no cofinality.
class Cardinal {
 public:
  enum class Kind : std::uint8_t { kFinite, kAleph };

  constexpr Cardinal() = default;

  static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(Kind::kFinite, n); }
  static constexpr Cardinal aleph(std::uint32_t index) { return Cardinal(Kind::kAleph, index); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr bool is_infinite() const { return kind_ == Kind::kAleph; }

  /// Natural value; only meaningful for finite cardinals.
  constexpr std::uint64_t value() const { return value_; }
  /// Aleph index; only meaningful for infinite cardinals.
  constexpr std::uint32_t aleph_index() const { return static_cast<std::uint32_t>(value_); }

  constexpr bool operator==(const Cardinal&) const = default;
  constexpr std::strong_ordering operator<=>(const Cardinal& other) const {
    if (kind_ != other.kind_) {
      return kind_ == Kind::kFinite ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return value_ <=> other.value_;
  }

 private:
  constexpr Cardinal(Kind kind, std::uint64_t value) : kind_(kind), value_(value) {}

  Kind kind_ = Kind::kFinite;
  std::uint64_t value_ = 0;
};

inline constexpr Cardinal kAleph0 = Cardinal::aleph(0);
inline constexpr Cardinal kAleph1 = Cardinal::aleph(1);

std::strong_ordering compare(const Cardinal& a, const Cardinal& b);

/// Cardinal sum: natural addition for two finite values, max otherwise.
/// Throws std::overflow_error if a finite sum does not fit in 64 bits.
Cardinal csum(const Cardinal& a, const Cardinal& b);

/// 2·a, which equals a for infinite a.
Cardinal cdouble(const Cardinal& a);

/// Cardinality of the set of finite subsets of a set of size a. Defined for
/// infinite a only (where it equals a); throws std::domain_error otherwise.
Cardinal pfin_card(const Cardinal& a);

/// "3", "aleph0", "aleph1", ...
std::string to_string(const Cardinal& c);
std::ostream& operator<<(std::ostream& os, const Cardinal& c);

/// Inverse of to_string. Rejects signs, leading zeros, whitespace and aleph
/// indices above max_aleph_index with std::invalid_argument.
Cardinal parse_cardinal(std::string_view text,
                        std::uint32_t max_aleph_index = kDefaultMaxAlephIndex);

/// Names a family whose size is carried symbolically instead of evaluated.
enum class FamilySize : std::uint8_t {
  kClassW,            ///< card(W), W = {E : E ~ D and X\E ~ X\D}
  kClassL,            ///< card(L), L = {E : E ~ D}
  kClassWContainingC  ///< card({E in W : C subset E})
};

/// The λ of a design: an exact nonzero cardinal or a named family size.
class LambdaValue {
 public:
  /// Throws std::invalid_argument for c < 1.
  static LambdaValue exact(const Cardinal& c);
  static LambdaValue family_size(FamilySize f) { return LambdaValue(f); }

  bool is_exact() const { return std::holds_alternative<Cardinal>(value_); }
  const Cardinal& cardinal() const { return std::get<Cardinal>(value_); }
  FamilySize family() const { return std::get<FamilySize>(value_); }

  bool operator==(const LambdaValue&) const = default;

 private:
  explicit LambdaValue(std::variant<Cardinal, FamilySize> v) : value_(v) {}

  std::variant<Cardinal, FamilySize> value_;
};

/// Cardinal string for exact values, "card(W)", "card(L)" or
/// "card({E in W : C subset E})" for symbolic ones.
std::string to_string(const LambdaValue& l);
LambdaValue parse_lambda(std::string_view text);

}  // namespace fortdesign
