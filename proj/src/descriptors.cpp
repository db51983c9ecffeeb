#include "fortdesign/descriptors.hpp"

#include <algorithm>
#include <map>

namespace fortdesign {

namespace {

constexpr Cardinal kZero = Cardinal::finite(0);
constexpr Cardinal kOne = Cardinal::finite(1);

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_bool(std::string_view text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw std::invalid_argument("expected true or false, got '" + std::string(text) + "'");
}

}  // namespace

SpaceDescriptor::SpaceDescriptor(Cardinal size) : size_(size) {
  if (!size.is_infinite()) {
    throw std::invalid_argument("a Fort space descriptor needs an infinite size, got " +
                                to_string(size));
  }
}

InvalidDescriptor::InvalidDescriptor(std::vector<std::string> violations)
    : std::invalid_argument(join(violations, "; ")), violations_(std::move(violations)) {}

std::vector<std::string> validate(const SubsetDescriptor& s, const SpaceDescriptor& x) {
  std::vector<std::string> out;
  const Cardinal& card_x = x.size();
  if (s.size > card_x) {
    out.push_back("size " + to_string(s.size) + " exceeds card(X) = " + to_string(card_x));
  }
  if (s.cosize > card_x) {
    out.push_back("cosize " + to_string(s.cosize) + " exceeds card(X) = " + to_string(card_x));
  }
  if (std::max(s.size, s.cosize) != card_x) {
    out.push_back("max(size, cosize) = " + to_string(std::max(s.size, s.cosize)) +
                  " but a subset and its complement must cover card(X) = " + to_string(card_x));
  }
  if (s.size < card_x && s.cosize != card_x) {
    out.push_back("size < card(X) requires cosize = card(X)");
  }
  if (s.cosize < card_x && s.size != card_x) {
    out.push_back("cosize < card(X) requires size = card(X)");
  }
  if (s.size == kZero && s.contains_b) {
    out.push_back("an empty set cannot contain b");
  }
  if (s.cosize == kZero && !s.contains_b) {
    out.push_back("a set with empty complement must contain b");
  }
  return out;
}

void require_nonempty_valid(const SubsetDescriptor& s, const SpaceDescriptor& x,
                            std::string_view role) {
  auto violations = validate(s, x);
  if (s.is_empty()) {
    violations.push_back("must be nonempty");
  }
  if (!violations.empty()) {
    for (auto& v : violations) {
      v = std::string(role) + ": " + v;
    }
    throw InvalidDescriptor(std::move(violations));
  }
}

SubsetDescriptor complement(const SubsetDescriptor& s, const SpaceDescriptor& /*x*/) {
  return {s.cosize, !s.contains_b, s.size};
}

Cardinal size_minus_b(const SubsetDescriptor& s) {
  if (s.contains_b && s.size.is_finite() && s.size > kZero) {
    return Cardinal::finite(s.size.value() - 1);
  }
  return s.size;
}

Cardinal cosize_minus_b(const SubsetDescriptor& s) {
  if (!s.contains_b && s.cosize.is_finite() && s.cosize > kZero) {
    return Cardinal::finite(s.cosize.value() - 1);
  }
  return s.cosize;
}

bool subspace_homeomorphic(const SubsetDescriptor& u, const SubsetDescriptor& v) {
  if (u.size != v.size) return false;
  return u.size.is_finite() || u.contains_b == v.contains_b;
}

bool pair_equivalent(const SubsetDescriptor& u, const SubsetDescriptor& v,
                     const SpaceDescriptor& /*x*/) {
  return u.size == v.size && u.cosize == v.cosize && u.contains_b == v.contains_b;
}

bool embeddable(const SubsetDescriptor& c, const SubsetDescriptor& d) {
  const bool b_in_c_minus_d = c.contains_b && !d.contains_b;
  return (c.is_finite() || !b_in_c_minus_d) && c.size <= d.size;
}

SubsetDescriptor whole_space(const SpaceDescriptor& x) { return {x.size(), true, kZero}; }

SubsetDescriptor whole_space_minus_b(const SpaceDescriptor& x) { return {x.size(), false, kOne}; }

std::vector<SubsetDescriptor> descriptor_grid(const SpaceDescriptor& x, std::uint64_t max_finite,
                                              bool include_empty) {
  std::vector<Cardinal> ladder;
  for (std::uint64_t n = 0; n <= max_finite; ++n) {
    ladder.push_back(Cardinal::finite(n));
  }
  for (std::uint32_t i = 0; i <= x.size().aleph_index(); ++i) {
    ladder.push_back(Cardinal::aleph(i));
  }
  std::vector<SubsetDescriptor> out;
  for (const auto& size : ladder) {
    for (bool b : {false, true}) {
      for (const auto& cosize : ladder) {
        SubsetDescriptor s{size, b, cosize};
        if (!validate(s, x).empty()) continue;
        if (s.is_empty() && !include_empty) continue;
        out.push_back(s);
      }
    }
  }
  return out;
}

SubsetDescriptor descriptor_from_fields(std::optional<std::string_view> size,
                                        std::optional<std::string_view> contains_b,
                                        std::optional<std::string_view> cosize,
                                        const SpaceDescriptor& x) {
  if (!size) throw std::invalid_argument("missing field 'size'");
  if (!contains_b) throw std::invalid_argument("missing field 'contains_b'");
  SubsetDescriptor s;
  s.size = parse_cardinal(*size);
  s.contains_b = parse_bool(*contains_b);
  if (cosize) {
    s.cosize = parse_cardinal(*cosize);
  } else if (s.size < x.size()) {
    s.cosize = x.size();
  } else {
    throw std::invalid_argument("missing field 'cosize': it is required when size = card(X)");
  }
  return s;
}

std::string to_record(const SubsetDescriptor& s) {
  return "{size: " + to_string(s.size) + ", contains_b: " + (s.contains_b ? "true" : "false") +
         ", cosize: " + to_string(s.cosize) + "}";
}

SubsetDescriptor parse_descriptor_record(std::string_view text, const SpaceDescriptor& x) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("descriptor record must be enclosed in braces: '" +
                                std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::map<std::string, std::string_view, std::less<>> fields;
  while (!trim(text).empty()) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("expected 'key: value' in descriptor record, got '" +
                                  std::string(item) + "'");
    }
    std::string key(trim(item.substr(0, colon)));
    if (key == "b") key = "contains_b";
    if (key != "size" && key != "contains_b" && key != "cosize") {
      throw std::invalid_argument("unknown descriptor field '" + key + "'");
    }
    if (!fields.emplace(key, trim(item.substr(colon + 1))).second) {
      throw std::invalid_argument("duplicate descriptor field '" + key + "'");
    }
  }
  auto get = [&](std::string_view k) -> std::optional<std::string_view> {
    if (auto it = fields.find(k); it != fields.end()) return it->second;
    return std::nullopt;
  };
  return descriptor_from_fields(get("size"), get("contains_b"), get("cosize"), x);
}

}  // namespace fortdesign
