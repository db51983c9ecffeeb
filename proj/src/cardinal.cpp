#include "fortdesign/cardinal.hpp"

#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace fortdesign {

namespace {

constexpr std::string_view kAlephPrefix = "aleph";
constexpr std::string_view kCardW = "card(W)";
constexpr std::string_view kCardL = "card(L)";
constexpr std::string_view kCardWContainingC = "card({E in W : C subset E})";

// Strict decimal: non-empty, digits only, no leading zero unless "0".
bool parse_decimal(std::string_view digits, std::uint64_t& out) {
  if (digits.empty() || (digits.size() > 1 && digits.front() == '0')) {
    return false;
  }
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      return false;
    }
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

}  // namespace

std::strong_ordering compare(const Cardinal& a, const Cardinal& b) { return a <=> b; }

Cardinal csum(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) {
    if (a.value() > std::numeric_limits<std::uint64_t>::max() - b.value()) {
      throw std::overflow_error("finite cardinal sum overflows 64 bits");
    }
    return Cardinal::finite(a.value() + b.value());
  }
  return a < b ? b : a;
}

Cardinal cdouble(const Cardinal& a) { return csum(a, a); }

Cardinal pfin_card(const Cardinal& a) {
  if (a.is_finite()) {
    throw std::domain_error("pfin_card is only defined for infinite cardinals, got " +
                            to_string(a));
  }
  return a;
}

std::string to_string(const Cardinal& c) {
  if (c.is_finite()) {
    return std::to_string(c.value());
  }
  return std::string(kAlephPrefix) + std::to_string(c.aleph_index());
}

std::ostream& operator<<(std::ostream& os, const Cardinal& c) { return os << to_string(c); }

Cardinal parse_cardinal(std::string_view text, std::uint32_t max_aleph_index) {
  std::uint64_t n = 0;
  if (text.starts_with(kAlephPrefix)) {
    if (!parse_decimal(text.substr(kAlephPrefix.size()), n)) {
      throw std::invalid_argument("malformed aleph cardinal '" + std::string(text) + "'");
    }
    if (n > max_aleph_index) {
      throw std::invalid_argument("aleph index " + std::to_string(n) +
                                  " exceeds the configured ladder bound " +
                                  std::to_string(max_aleph_index));
    }
    return Cardinal::aleph(static_cast<std::uint32_t>(n));
  }
  if (!parse_decimal(text, n)) {
    throw std::invalid_argument("malformed cardinal '" + std::string(text) + "'");
  }
  return Cardinal::finite(n);
}

LambdaValue LambdaValue::exact(const Cardinal& c) {
  if (c < Cardinal::finite(1)) {
    throw std::invalid_argument("design multiplicity must be a nonzero cardinal");
  }
  return LambdaValue(c);
}

std::string to_string(const LambdaValue& l) {
  if (l.is_exact()) {
    return to_string(l.cardinal());
  }
  switch (l.family()) {
    case FamilySize::kClassW:
      return std::string(kCardW);
    case FamilySize::kClassL:
      return std::string(kCardL);
    case FamilySize::kClassWContainingC:
      return std::string(kCardWContainingC);
  }
  return {};
}

LambdaValue parse_lambda(std::string_view text) {
  if (text == kCardW) return LambdaValue::family_size(FamilySize::kClassW);
  if (text == kCardL) return LambdaValue::family_size(FamilySize::kClassL);
  if (text == kCardWContainingC) return LambdaValue::family_size(FamilySize::kClassWContainingC);
  return LambdaValue::exact(parse_cardinal(text));
}

}  // namespace fortdesign
