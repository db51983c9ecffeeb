#include "fortdesign/concrete.hpp"

#include <array>
#include <algorithm>
#include <charconv>
#include <iterator>
#include <span>
#include <stdexcept>

namespace fortdesign::concrete {

namespace {

constexpr std::string_view kFinitePrefix = "fin:";
constexpr std::string_view kCofinitePrefix = "cofin:";
constexpr std::string_view kOddTailPrefix = "oddtail:";

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Point> normalized(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool sorted_contains(const std::vector<Point>& v, Point p) {
  return std::binary_search(v.begin(), v.end(), p);
}

std::string join_points(const std::vector<Point>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Point parse_point(std::string_view text) {
  Point p = 0;
  if (text.empty() || (text.size() > 1 && text.front() == '0')) {
    throw std::invalid_argument("malformed point '" + std::string(text) + "'");
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed point '" + std::string(text) + "'");
  }
  return p;
}

// Comma-separated, strictly increasing.
std::vector<Point> parse_point_list(std::string_view text) {
  std::vector<Point> out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_point(text.substr(0, comma)));
    if (out.size() > 1 && out[out.size() - 2] >= out.back()) {
      throw std::invalid_argument("point list must be strictly increasing");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

// The n-th (0-based) element of s \ removed, if any. `removed` is sorted.
std::optional<Point> nth_element_avoiding(const ConcreteSet& s, std::span<const Point> removed,
                                          std::uint64_t n) {
  const auto& l = s.listed();
  if (s.is_finite()) {
    for (Point p : l) {
      if (std::binary_search(removed.begin(), removed.end(), p)) continue;
      if (n == 0) return p;
      --n;
    }
    return std::nullopt;
  }
  // The answer is the least fixed point of x -> n + #(points <= x missing
  // from s \ removed); iterating from n climbs to it.
  Point x = n;
  while (true) {
    auto gaps = static_cast<std::uint64_t>(std::upper_bound(l.begin(), l.end(), x) - l.begin());
    for (Point r : removed) {
      if (r > x) break;
      if (s.contains(r)) ++gaps;
    }
    if (n + gaps == x) return x;
    x = n + gaps;
  }
}

// Visits the k-subsets of a sorted pool in lexicographic order until visit
// returns false.
template <class Visit>
void for_each_combination(const std::vector<Point>& pool, std::size_t k, Visit&& visit) {
  if (k > pool.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<Point> combo(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) combo[i] = pool[idx[i]];
    if (!visit(combo)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Point> range_without(Point first, Point last, const std::vector<Point>& skip) {
  std::vector<Point> out;
  for (Point p = first; p <= last; ++p) {
    if (!sorted_contains(skip, p)) out.push_back(p);
  }
  return out;
}

std::vector<Point> merged(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ClassW(D) over the countable model, D finite or cofinite.
struct ClassWModel {
  SubsetDescriptor d;
  bool finite_blocks = true;
  std::uint64_t listed_size = 0;  // block size, or number of exclusions
  std::vector<Point> required;    // points every block lists ({b} or nothing)

  Block block_from(const std::vector<Point>& combo) const {
    auto listed = merged(required, combo);
    return finite_blocks ? ConcreteSet::finite(std::move(listed))
                         : ConcreteSet::cofinite(std::move(listed));
  }
};

ClassWModel class_w_model(const SubsetDescriptor& d) {
  const auto violations = validate(d, model_space());
  if (!violations.empty() || d.is_empty()) {
    throw std::invalid_argument("ClassW parameter " + to_record(d) +
                                " is not a nonempty subset of the countable model");
  }
  ClassWModel m;
  m.d = d;
  if (d.size.is_finite()) {
    m.finite_blocks = true;
    m.listed_size = d.size.value();
    if (d.contains_b) m.required = {kB};
  } else if (d.cosize.is_finite()) {
    m.finite_blocks = false;
    m.listed_size = d.cosize.value();
    if (!d.contains_b) m.required = {kB};
  } else {
    throw std::invalid_argument("ClassW over an infinite, coinfinite D is not enumerable");
  }
  return m;
}

Point max_listed(const ConcreteSet& s) { return s.listed().empty() ? 0 : s.listed().back(); }

BlockCount count_class_w(const ClassWModel& m, const ConcreteSet& probe, std::uint64_t cutoff) {
  // Blocks list `required` plus `free` further points drawn from `pool`.
  std::vector<Point> pool;
  std::vector<Point> required = m.required;
  if (m.finite_blocks) {
    if (probe.is_cofinite()) return {0, false, std::nullopt};
    if (!m.d.contains_b && probe.contains_b()) return {0, false, std::nullopt};
    required = merged(required, probe.listed());
    if (required.size() > m.listed_size) return {0, false, std::nullopt};
    pool = range_without(1, max_listed(probe) + cutoff + m.listed_size + 1, required);
  } else {
    if (!m.d.contains_b && probe.contains_b()) return {0, false, std::nullopt};
    if (probe.is_finite()) {
      pool = range_without(1, max_listed(probe) + cutoff + m.listed_size + 1, probe.listed());
    } else {
      pool = probe.listed();
      std::erase(pool, kB);
    }
  }
  const std::size_t free = m.listed_size - required.size();
  // The pool holds at least `cutoff` points whenever free > 0 and the probe
  // is finite, so any count below the cutoff is exact.
  std::uint64_t count = 0;
  ClassWModel anchored = m;
  anchored.required = required;
  for_each_combination(pool, free, [&](const std::vector<Point>& combo) {
    const Block block = anchored.block_from(combo);
    if (includes(block, probe) && pair_equivalent(extract_descriptor(block), m.d, model_space())) {
      ++count;
    }
    return count < cutoff;
  });
  return {count, count >= cutoff, std::nullopt};
}

}  // namespace

SpaceDescriptor model_space() { return SpaceDescriptor(kAleph0); }

ConcreteSet ConcreteSet::finite(std::vector<Point> elements) {
  return ConcreteSet(true, normalized(std::move(elements)));
}

ConcreteSet ConcreteSet::cofinite(std::vector<Point> excluded) {
  return ConcreteSet(false, normalized(std::move(excluded)));
}

bool ConcreteSet::contains(Point p) const { return sorted_contains(listed_, p) == finite_; }

std::string to_string(const ConcreteSet& s) {
  return std::string(s.is_finite() ? kFinitePrefix : kCofinitePrefix) + join_points(s.listed());
}

ConcreteSet parse_concrete_set(std::string_view text) {
  if (text.starts_with(kFinitePrefix)) {
    return ConcreteSet::finite(parse_point_list(text.substr(kFinitePrefix.size())));
  }
  if (text.starts_with(kCofinitePrefix)) {
    return ConcreteSet::cofinite(parse_point_list(text.substr(kCofinitePrefix.size())));
  }
  throw std::invalid_argument("concrete set must start with 'fin:' or 'cofin:', got '" +
                              std::string(text) + "'");
}

SubsetDescriptor extract_descriptor(const ConcreteSet& s) {
  const auto n = Cardinal::finite(s.listed().size());
  if (s.is_finite()) return {n, s.contains_b(), kAleph0};
  return {kAleph0, s.contains_b(), n};
}

ConcreteSet canonical_representative(const SubsetDescriptor& d) {
  if (!validate(d, model_space()).empty()) {
    throw std::invalid_argument(to_record(d) + " is not a subset of the countable model");
  }
  auto first_points = [](Point from, std::uint64_t n) {
    std::vector<Point> v(n);
    for (std::uint64_t i = 0; i < n; ++i) v[i] = from + i;
    return v;
  };
  if (d.size.is_finite()) {
    return ConcreteSet::finite(first_points(d.contains_b ? 0 : 1, d.size.value()));
  }
  if (d.cosize.is_finite()) {
    return ConcreteSet::cofinite(first_points(d.contains_b ? 1 : 0, d.cosize.value()));
  }
  throw std::invalid_argument(to_record(d) + " is neither finite nor cofinite");
}

bool is_subset(const ConcreteSet& a, const ConcreteSet& b) {
  if (a.is_finite()) {
    return std::all_of(a.listed().begin(), a.listed().end(),
                       [&](Point p) { return b.contains(p); });
  }
  if (b.is_finite()) return false;
  return std::includes(a.listed().begin(), a.listed().end(), b.listed().begin(),
                       b.listed().end());
}

ConcreteSet intersection(const ConcreteSet& a, const ConcreteSet& b) {
  if (a.is_cofinite() && b.is_cofinite()) {
    return ConcreteSet::cofinite(merged(a.listed(), b.listed()));
  }
  const ConcreteSet& fin = a.is_finite() ? a : b;
  const ConcreteSet& other = a.is_finite() ? b : a;
  std::vector<Point> out;
  std::copy_if(fin.listed().begin(), fin.listed().end(), std::back_inserter(out),
               [&](Point p) { return other.contains(p); });
  return ConcreteSet::finite(std::move(out));
}

ConcreteSet set_union(const ConcreteSet& a, const ConcreteSet& b) {
  return intersection(a.complement(), b.complement()).complement();
}

bool is_open(const ConcreteSet& u) { return !u.contains_b() || u.is_cofinite(); }

ConcreteSet limit_points(const ConcreteSet& s) {
  return s.is_cofinite() ? ConcreteSet::finite({kB}) : ConcreteSet::finite({});
}

std::optional<Point> PointMap::apply(Point p, const ConcreteSet& source,
                                     const ConcreteSet& target) const {
  const auto& l = source.listed();
  const auto at = std::lower_bound(l.begin(), l.end(), p);
  const bool listed = at != l.end() && *at == p;
  if (listed != source.is_finite()) return std::nullopt;
  for (const auto& [from, to] : exceptions) {
    if (from == p) return to;
  }
  if (!aligned) return std::nullopt;
  const auto listed_below = static_cast<std::uint64_t>(at - l.begin());
  const std::uint64_t below = source.is_finite() ? listed_below : p - listed_below;

  const bool fix_b = source.contains_b() && target.contains_b();
  if (fix_b && p == kB) return kB;
  if (exceptions.empty()) {
    const std::array<Point, 1> just_b{kB};
    const std::uint64_t rank = below - (fix_b ? 1 : 0);
    const auto removed = fix_b ? std::span<const Point>(just_b) : std::span<const Point>();
    return nth_element_avoiding(target, removed, rank);
  }
  std::vector<Point> removed_source;
  std::vector<Point> removed_target;
  for (const auto& [from, to] : exceptions) {
    removed_source.push_back(from);
    removed_target.push_back(to);
  }
  if (fix_b) {
    removed_source.push_back(kB);
    removed_target.push_back(kB);
  }
  removed_source = normalized(std::move(removed_source));
  removed_target = normalized(std::move(removed_target));

  std::uint64_t rank = below;
  for (Point r : removed_source) {
    if (r < p && source.contains(r)) --rank;
  }
  return nth_element_avoiding(target, removed_target, rank);
}

std::optional<std::vector<Point>> PointMap::apply_below(Point bound, const ConcreteSet& source,
                                                      const ConcreteSet& target) const {
  const bool fix_b = aligned && source.contains_b() && target.contains_b();
  std::vector<Point> taken;
  for (const auto& pair : exceptions) taken.push_back(pair.second);
  if (fix_b) taken.push_back(kB);
  taken = normalized(std::move(taken));

  // Cursor over target \ taken, in increasing order.
  const auto& tl = target.listed();
  auto t_listed = tl.begin();
  auto t_taken = taken.begin();
  Point t_next = 0;
  auto next_target = [&]() -> std::optional<Point> {
    if (target.is_finite()) {
      for (; t_listed != tl.end(); ++t_listed) {
        if (!std::binary_search(taken.begin(), taken.end(), *t_listed)) return *t_listed++;
      }
      return std::nullopt;
    }
    while (true) {
      while (t_listed != tl.end() && *t_listed < t_next) ++t_listed;
      while (t_taken != taken.end() && *t_taken < t_next) ++t_taken;
      const bool skip = (t_listed != tl.end() && *t_listed == t_next) ||
                        (t_taken != taken.end() && *t_taken == t_next);
      if (!skip) return t_next++;
      ++t_next;
    }
  };

  std::vector<Point> images;
  images.reserve(source.is_finite() ? source.listed().size() : bound);
  auto visit = [&](Point p) -> bool {
    for (const auto& [from, to] : exceptions) {
      if (from == p) {
        images.push_back(to);
        return true;
      }
    }
    if (!aligned) return false;
    if (fix_b && p == kB) {
      images.push_back(kB);
      return true;
    }
    const auto q = next_target();
    if (!q) return false;
    images.push_back(*q);
    return true;
  };

  const auto& sl = source.listed();
  if (source.is_finite()) {
    for (Point p : sl) {
      if (p >= bound) break;
      if (!visit(p)) return std::nullopt;
    }
  } else {
    auto gap = sl.begin();
    for (Point p = 0; p < bound; ++p) {
      if (gap != sl.end() && *gap == p) {
        ++gap;
        continue;
      }
      if (!visit(p)) return std::nullopt;
    }
  }
  return images;
}

std::string to_string(const PointMap& m) {
  std::string out = m.aligned ? "aligned=true pairs=" : "aligned=false pairs=";
  for (std::size_t i = 0; i < m.exceptions.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(m.exceptions[i].first) + ":" + std::to_string(m.exceptions[i].second);
  }
  return out;
}

PointMap parse_point_map(std::string_view text) {
  PointMap m;
  constexpr std::string_view kTrue = "aligned=true pairs=";
  constexpr std::string_view kFalse = "aligned=false pairs=";
  if (text.starts_with(kTrue)) {
    m.aligned = true;
    text.remove_prefix(kTrue.size());
  } else if (text.starts_with(kFalse)) {
    text.remove_prefix(kFalse.size());
  } else {
    throw std::invalid_argument("malformed point map '" + std::string(text) + "'");
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("malformed point pair '" + std::string(item) + "'");
    }
    m.exceptions.emplace_back(parse_point(item.substr(0, colon)),
                              parse_point(item.substr(colon + 1)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return m;
}

std::optional<PointMap> canonical_homeomorphism(const ConcreteSet& u, const ConcreteSet& v) {
  if (u.is_finite() && v.is_finite()) {
    if (u.listed().size() != v.listed().size()) return std::nullopt;
    PointMap m;
    m.exceptions.reserve(u.listed().size());
    for (std::size_t i = 0; i < u.listed().size(); ++i) {
      m.exceptions.emplace_back(u.listed()[i], v.listed()[i]);
    }
    return m;
  }
  if (u.is_cofinite() && v.is_cofinite() && u.contains_b() == v.contains_b()) {
    return PointMap{{}, true};
  }
  return std::nullopt;
}

bool check_homeomorphism(const PointMap& m, const ConcreteSet& u, const ConcreteSet& v) {
  if (u.is_finite() != v.is_finite()) return false;
  std::vector<Point> images;
  images.reserve(64);

  if (u.is_finite()) {
    if (u.listed().size() != v.listed().size()) return false;
    for (Point p : u.listed()) {
      const auto q = m.apply(p, u, v);
      if (!q || !v.contains(*q)) return false;
      images.push_back(*q);
    }
    std::sort(images.begin(), images.end());
    return std::adjacent_find(images.begin(), images.end()) == images.end();
  }

  // b is the only limit point of an infinite subspace, so it must be fixed.
  if (u.contains_b() != v.contains_b()) return false;
  if (u.contains_b() && m.apply(kB, u, v) != kB) return false;

  Point largest = std::max(max_listed(u), max_listed(v));
  for (const auto& [from, to] : m.exceptions) largest = std::max({largest, from, to});
  const Point window = 2 * (largest + 1) + 16;
  auto mapped = m.apply_below(window, u, v);
  if (!mapped) return false;
  images = std::move(*mapped);
  for (Point q : images) {
    if (!v.contains(q)) return false;
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  auto gap = v.listed().begin();
  auto image = images.begin();
  for (Point q = 0; q < window / 2; ++q) {
    if (gap != v.listed().end() && *gap == q) {
      ++gap;
      continue;
    }
    while (image != images.end() && *image < q) ++image;
    if (image == images.end() || *image != q) return false;
  }
  return true;
}

bool contains(const Block& block, Point p) {
  return std::visit(Overloaded{
                        [&](const ConcreteSet& s) { return s.contains(p); },
                        [&](const OddTailBlock& t) { return p % 2 == 0 || (p - 1) / 2 < t.s; },
                    },
                    block);
}

bool includes(const Block& block, const ConcreteSet& probe) {
  return std::visit(Overloaded{
                        [&](const ConcreteSet& s) { return is_subset(probe, s); },
                        [&](const OddTailBlock&) {
                          // A cofinite probe holds every large odd point; no block does.
                          return probe.is_finite() &&
                                 std::all_of(probe.listed().begin(), probe.listed().end(),
                                             [&](Point p) { return contains(block, p); });
                        },
                    },
                    block);
}

SubsetDescriptor extract_descriptor(const Block& block) {
  return std::visit(Overloaded{
                        [](const ConcreteSet& s) { return extract_descriptor(s); },
                        [](const OddTailBlock&) {
                          return SubsetDescriptor{kAleph0, true, kAleph0};
                        },
                    },
                    block);
}

std::string to_string(const Block& block) {
  return std::visit(Overloaded{
                        [](const ConcreteSet& s) { return to_string(s); },
                        [](const OddTailBlock& t) {
                          return std::string(kOddTailPrefix) + std::to_string(t.s);
                        },
                    },
                    block);
}

Block realize(const FamilyDescriptor& family, std::uint64_t index) {
  return std::visit(
      Overloaded{
          [&](const OddTail&) -> Block {
            if (index < 1) throw std::invalid_argument("odd-tail blocks are indexed from 1");
            return OddTailBlock{index};
          },
          [&](const Singleton& s) -> Block { return canonical_representative(s.member); },
          [&](const auto&) -> Block {
            throw std::invalid_argument(to_string(family) +
                                        " is a symbolic family and cannot be realized blockwise");
          },
      },
      family);
}

std::string to_string(const BlockCount& c) {
  return (c.saturated ? "AtLeast(" : "Exactly(") + std::to_string(c.count) + ")";
}

bool is_enumerable(const FamilyDescriptor& family) {
  return std::visit(Overloaded{
                        [](const OddTail&) { return true; },
                        [](const Singleton& s) {
                          try {
                            canonical_representative(s.member);
                            return true;
                          } catch (const std::invalid_argument&) {
                            return false;
                          }
                        },
                        [](const ClassW& w) {
                          try {
                            class_w_model(w.d);
                            return true;
                          } catch (const std::invalid_argument&) {
                            return false;
                          }
                        },
                        [](const ClassL&) { return false; },
                    },
                    family);
}

BlockCount blocks_containing(const FamilyDescriptor& family, const ConcreteSet& probe,
                             std::uint64_t cutoff) {
  if (cutoff == 0) throw std::invalid_argument("cutoff must be positive");
  return std::visit(
      Overloaded{
          [&](const OddTail&) {
            // Block s holds every finite probe once s exceeds half its largest
            // point, and containment only grows with s, so scanning this far
            // makes any unsaturated count exact.
            const std::uint64_t limit =
                cutoff + (probe.is_finite() ? max_listed(probe) / 2 + 1 : 0);
            std::uint64_t count = 0;
            std::uint64_t scanned = 0;
            for (std::uint64_t s = 1; s <= limit && count < cutoff; ++s) {
              ++scanned;
              if (includes(OddTailBlock{s}, probe)) ++count;
            }
            return BlockCount{count, count >= cutoff, scanned - count};
          },
          [&](const Singleton& s) {
            const std::uint64_t hit = includes(canonical_representative(s.member), probe) ? 1 : 0;
            return BlockCount{hit, false, 1 - hit};
          },
          [&](const ClassW& w) { return count_class_w(class_w_model(w.d), probe, cutoff); },
          [&](const ClassL&) -> BlockCount {
            throw std::invalid_argument(to_string(family) + " is not enumerable");
          },
      },
      family);
}

void enumerate_blocks(const FamilyDescriptor& family, std::uint64_t limit,
                      const std::function<bool(const Block&)>& visit) {
  std::visit(Overloaded{
                 [&](const OddTail&) {
                   for (std::uint64_t s = 1; s <= limit; ++s) {
                     if (!visit(OddTailBlock{s})) return;
                   }
                 },
                 [&](const Singleton& s) {
                   if (limit > 0) visit(canonical_representative(s.member));
                 },
                 [&](const ClassW& w) {
                   const ClassWModel m = class_w_model(w.d);
                   const auto pool = range_without(1, m.listed_size + limit, {});
                   std::uint64_t seen = 0;
                   for_each_combination(pool, m.listed_size - m.required.size(),
                                        [&](const std::vector<Point>& combo) {
                                          if (seen++ >= limit) return false;
                                          return visit(m.block_from(combo));
                                        });
                 },
                 [&](const ClassL&) {
                   throw std::invalid_argument(to_string(family) + " is not enumerable");
                 },
             },
             family);
}

bool DesignCheckReport::has_rejected_probe() const {
  return std::any_of(probes.begin(), probes.end(),
                     [](const ProbeResult& p) { return !p.accepted; });
}

DesignCheckReport local_design_check(const FamilyDescriptor& family, DesignType type,
                                     const SubsetDescriptor& c, const SubsetDescriptor& d,
                                     const std::vector<ConcreteSet>& probes, std::uint64_t cutoff,
                                     const std::optional<LambdaValue>& expected_lambda) {
  const SpaceDescriptor x = model_space();
  require_nonempty_valid(c, x, "C");
  require_nonempty_valid(d, x, "D");
  const SubsetDescriptor d_complement = complement(d, x);
  const SubsetDescriptor c_complement = complement(c, x);

  DesignCheckReport report;
  enumerate_blocks(family, cutoff, [&](const Block& block) {
    const SubsetDescriptor bd = extract_descriptor(block);
    BlockCheck check{block, subspace_homeomorphic(bd, d),
                     subspace_homeomorphic(complement(bd, x), d_complement)};
    const bool complement_ok = !requires_block_complement(type) || check.complement_homeomorphic;
    if (!check.homeomorphic || !complement_ok) {
      report.blocks_ok = false;
    }
    report.blocks.push_back(std::move(check));
    return true;
  });

  for (const auto& probe : probes) {
    ProbeResult r{probe, false, {}, {}};
    const SubsetDescriptor pd = extract_descriptor(probe);
    if (!subspace_homeomorphic(pd, c)) {
      r.rejection = "not homeomorphic to C";
    } else if (requires_probe_complement(type) &&
               !subspace_homeomorphic(complement(pd, x), c_complement)) {
      r.rejection = "complement not homeomorphic to X\\C";
    } else {
      r.accepted = true;
      r.count = blocks_containing(family, probe, cutoff);
    }
    report.probes.push_back(std::move(r));
  }

  std::vector<std::size_t> accepted;
  for (std::size_t i = 0; i < report.probes.size(); ++i) {
    if (report.probes[i].accepted) accepted.push_back(i);
  }
  // An unsaturated count is exact and below the cutoff, so it differs
  // provably from any other exact count and from any saturated one.
  for (std::size_t i = 0; i < accepted.size() && !report.refutation; ++i) {
    for (std::size_t j = i + 1; j < accepted.size(); ++j) {
      const BlockCount& a = report.probes[accepted[i]].count;
      const BlockCount& b = report.probes[accepted[j]].count;
      if (a.saturated != b.saturated || (!a.saturated && a.count != b.count)) {
        report.refutation = std::pair{accepted[i], accepted[j]};
        break;
      }
    }
  }

  if (expected_lambda && expected_lambda->is_exact()) {
    const Cardinal& lambda = expected_lambda->cardinal();
    for (std::size_t i : accepted) {
      const BlockCount& count = report.probes[i].count;
      const bool matches = lambda.is_infinite()
                               ? count.saturated
                               : (count.saturated ? lambda.value() >= cutoff
                                                  : count.count == lambda.value());
      if (!matches) report.lambda_mismatches.push_back(i);
    }
  }
  return report;
}

}  // namespace fortdesign::concrete
