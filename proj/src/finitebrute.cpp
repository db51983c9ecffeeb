#include "fortdesign/finitebrute.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <optional>
#include <set>
#include <stdexcept>

namespace fortdesign::finitebrute {

namespace {

std::uint32_t popcount(Mask m) { return static_cast<std::uint32_t>(std::popcount(m)); }

// Next larger mask with the same popcount.
Mask next_same_popcount(Mask v) {
  const Mask t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint32_t parse_index(std::string_view text, std::size_t line_no) {
  text = trim(text);
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected a natural, got '" +
                                std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> validate(const FiniteInstance& inst) {
  std::vector<std::string> out;
  if (inst.n < 2) out.push_back("ground size n must be at least 2");
  if (inst.n > kMaxGroundSize) {
    out.push_back("ground size n exceeds " + std::to_string(kMaxGroundSize));
  }
  if (inst.c_size < 1) out.push_back("C_size must be at least 1");
  if (inst.c_size > inst.d_size) out.push_back("C_size must not exceed D_size");
  if (inst.d_size > inst.n) out.push_back("D_size must not exceed n");
  const Mask ground = inst.n >= 64 ? ~Mask{0} : (Mask{1} << inst.n) - 1;
  std::set<Mask> seen;
  for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
    if ((inst.blocks[i] & ~ground) != 0) {
      out.push_back("block #" + std::to_string(i) + " leaves the ground set");
    }
    if (!seen.insert(inst.blocks[i]).second) {
      out.push_back("block #" + std::to_string(i) + " repeats an earlier block");
    }
  }
  return out;
}

BruteResult brute_lambda(const FiniteInstance& inst, DesignType type) {
  if (const auto problems = validate(inst); !problems.empty()) {
    throw std::invalid_argument("invalid instance: " + problems.front());
  }
  // In a discrete space S ≈ T iff card(S) = card(T).
  const auto homeomorphic = [](std::uint32_t a, std::uint32_t b) { return a == b; };

  for (std::size_t i = 0; i < inst.blocks.size(); ++i) {
    const std::uint32_t size = popcount(inst.blocks[i]);
    bool ok = homeomorphic(size, inst.d_size);
    if (requires_block_complement(type)) {
      ok = ok && homeomorphic(inst.n - size, inst.n - inst.d_size);
    }
    if (!ok) return BlockViolation{i};
  }

  // Every E with E ≈ C has exactly c_size points; the complement condition
  // adds card(X\E) = card(X\C), which then holds as well.
  std::optional<std::pair<Mask, std::uint64_t>> reference;
  const Mask limit = Mask{1} << inst.n;
  for (Mask e = (Mask{1} << inst.c_size) - 1; e < limit; e = next_same_popcount(e)) {
    if (requires_probe_complement(type) &&
        !homeomorphic(inst.n - popcount(e), inst.n - inst.c_size)) {
      continue;
    }
    std::uint64_t count = 0;
    for (Mask b : inst.blocks) {
      if ((e & b) == e) ++count;
    }
    if (!reference) {
      reference = std::pair{e, count};
    } else if (reference->second != count) {
      return NonUniform{reference->first, reference->second, e, count};
    }
  }
  return Uniform{reference ? reference->second : 0};
}

std::uint64_t all_k_subsets_lambda(std::uint32_t n, std::uint32_t k, std::uint32_t t) {
  if (!(1 <= t && t < k && k < n)) {
    throw std::invalid_argument("all_k_subsets_lambda requires 1 <= t < k < n");
  }
  const std::uint64_t top = n - t;
  const std::uint64_t choose = k - t;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= choose; ++i) {
    result = result * (top - choose + i) / i;
  }
  return result;
}

FiniteInstance all_k_subsets_instance(std::uint32_t n, std::uint32_t k, std::uint32_t t) {
  FiniteInstance inst{n, {}, t, k};
  if (k == 0 || k > n) return inst;
  const Mask limit = Mask{1} << n;
  for (Mask m = (Mask{1} << k) - 1; m < limit; m = next_same_popcount(m)) {
    inst.blocks.push_back(m);
  }
  return inst;
}

std::string mask_to_string(Mask m) {
  std::string out = "{";
  bool first = true;
  for (std::uint32_t i = 0; m != 0; ++i, m >>= 1) {
    if ((m & 1) == 0) continue;
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

std::string to_string(const BruteResult& r, const FiniteInstance& inst) {
  if (const auto* u = std::get_if<Uniform>(&r)) {
    return "Exactly(" + std::to_string(u->lambda) + ")";
  }
  if (const auto* nu = std::get_if<NonUniform>(&r)) {
    return "NonUniform(" + mask_to_string(nu->first) + ": " + std::to_string(nu->first_count) +
           ", " + mask_to_string(nu->second) + ": " + std::to_string(nu->second_count) + ")";
  }
  const auto& v = std::get<BlockViolation>(r);
  return "BlockViolation(#" + std::to_string(v.block_index) + " " +
         mask_to_string(inst.blocks.at(v.block_index)) + ")";
}

FiniteInstance parse_instance(std::istream& in) {
  FiniteInstance inst;
  std::uint32_t header[3] = {0, 0, 0};
  std::size_t header_seen = 0;
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
    if (header_seen < 3) {
      header[header_seen++] = parse_index(text, line_no);
      if (header_seen == 1 && header[0] > kMaxGroundSize) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": ground size exceeds " +
                                    std::to_string(kMaxGroundSize));
      }
      continue;
    }
    Mask block = 0;
    while (true) {
      const auto comma = text.find(',');
      const std::uint32_t idx = parse_index(text.substr(0, comma), line_no);
      if (idx >= header[0]) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": index " +
                                    std::to_string(idx) + " outside the ground set");
      }
      block |= Mask{1} << idx;
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    inst.blocks.push_back(block);
  }
  if (header_seen < 3) {
    throw std::invalid_argument("instance needs n, C_size and D_size before the blocks");
  }
  inst.n = header[0];
  inst.c_size = header[1];
  inst.d_size = header[2];
  if (const auto problems = validate(inst); !problems.empty()) {
    throw std::invalid_argument(problems.front());
  }
  return inst;
}

std::string format_instance(const FiniteInstance& inst) {
  std::string out = std::to_string(inst.n) + "\n" + std::to_string(inst.c_size) + "\n" +
                    std::to_string(inst.d_size) + "\n";
  for (Mask b : inst.blocks) {
    std::string s = mask_to_string(b);
    out += s.substr(1, s.size() - 2) + "\n";
  }
  return out;
}

}  // namespace fortdesign::finitebrute
