#include "fortdesign/query.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>

namespace fortdesign {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

class Fields {
 public:
  void add(std::string key, std::string value, std::size_t line) {
    if (key.ends_with(".b")) key.replace(key.size() - 2, 2, ".contains_b");
    if (auto [it, inserted] = entries_.emplace(key, Entry{std::move(value), line}); !inserted) {
      throw QueryError("line " + std::to_string(line) + ": duplicate key '" + key +
                       "' (first given on line " + std::to_string(it->second.line) + ")");
    }
  }

  std::optional<std::string_view> get(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.push_back(key);
    return it->second.value;
  }

  const Entry* entry(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  void reject_unused() const {
    for (const auto& [key, e] : entries_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw QueryError("line " + std::to_string(e.line) + ": unknown key '" + key + "'");
      }
    }
  }

 private:
  std::map<std::string, Entry> entries_;
  std::vector<std::string> used_;
};

SubsetDescriptor read_subset(Fields& fields, const std::string& role, const SpaceDescriptor& x) {
  if (const Entry* inline_record = fields.entry(role)) {
    for (const char* field : {".size", ".contains_b", ".cosize"}) {
      if (fields.entry(role + field)) {
        throw QueryError("line " + std::to_string(inline_record->line) + ": " + role +
                         " is given both inline and field by field");
      }
    }
    fields.get(role);
    try {
      return parse_descriptor_record(inline_record->value, x);
    } catch (const std::invalid_argument& e) {
      throw QueryError("line " + std::to_string(inline_record->line) + ": " + role + ": " +
                       e.what());
    }
  }
  try {
    return descriptor_from_fields(fields.get(role + ".size"), fields.get(role + ".contains_b"),
                                  fields.get(role + ".cosize"), x);
  } catch (const std::invalid_argument& e) {
    throw QueryError(role + ": " + e.what());
  }
}

}  // namespace

Query parse_query(std::istream& in) {
  Fields fields;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw QueryError("line " + std::to_string(line_no) + ": expected 'key: value'");
    }
    std::string key(trim(text.substr(0, colon)));
    std::string value(trim(text.substr(colon + 1)));
    if (key.empty() || value.empty()) {
      throw QueryError("line " + std::to_string(line_no) + ": empty key or value");
    }
    fields.add(std::move(key), std::move(value), line_no);
  }

  const auto space_size = fields.get("space.size");
  if (!space_size) throw QueryError("missing key 'space.size'");
  std::optional<SpaceDescriptor> x;
  try {
    x.emplace(parse_cardinal(*space_size));
  } catch (const std::invalid_argument& e) {
    throw QueryError(std::string("space.size: ") + e.what());
  }

  const auto type_text = fields.get("type");
  if (!type_text) throw QueryError("missing key 'type'");
  if (type_text->size() != 1) throw QueryError("type: expected 1, 2, 3 or 4");
  DesignType type;
  try {
    type = design_type_from_int((*type_text)[0] - '0');
  } catch (const std::invalid_argument& e) {
    throw QueryError(std::string("type: ") + e.what());
  }

  const SubsetDescriptor c = read_subset(fields, "C", *x);
  const SubsetDescriptor d = read_subset(fields, "D", *x);
  fields.reject_unused();

  std::string problems;
  for (auto [s, role] : {std::pair{&c, "C"}, std::pair{&d, "D"}}) {
    try {
      require_nonempty_valid(*s, *x, role);
    } catch (const InvalidDescriptor& e) {
      for (const auto& v : e.violations()) problems += (problems.empty() ? "" : "; ") + v;
    }
  }
  if (!problems.empty()) throw QueryError("invalid descriptor: " + problems);
  return Query{*x, c, d, type};
}

std::string format_query(const Query& q) {
  return "space.size: " + to_string(q.x.size()) + "\ntype: " +
         std::to_string(static_cast<int>(q.type)) + "\nC: " + to_record(q.c) +
         "\nD: " + to_record(q.d) + "\n";
}

}  // namespace fortdesign
