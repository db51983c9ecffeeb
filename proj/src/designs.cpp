#include "fortdesign/designs.hpp"

#include <array>
#include <stdexcept>

namespace fortdesign {

namespace {

constexpr Cardinal kZero = Cardinal::finite(0);
constexpr Cardinal kTwo = Cardinal::finite(2);

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_inputs(const SubsetDescriptor& c, const SubsetDescriptor& d,
                    const SpaceDescriptor& x) {
  std::vector<std::string> violations;
  for (auto [s, role] : {std::pair{&c, "C"}, std::pair{&d, "D"}}) {
    try {
      require_nonempty_valid(*s, x, role);
    } catch (const InvalidDescriptor& e) {
      violations.insert(violations.end(), e.violations().begin(), e.violations().end());
    }
  }
  if (!violations.empty()) {
    throw InvalidDescriptor(std::move(violations));
  }
}

std::string embedding_failure(const SubsetDescriptor& c, const SubsetDescriptor& d) {
  if (c.size > d.size) {
    return "C cannot be embedded into D: card(C) > card(D)";
  }
  return "C cannot be embedded into D: C is infinite and b in C\\D";
}

}  // namespace

DesignType design_type_from_int(int t) {
  if (t < 1 || t > 4) {
    throw std::invalid_argument("design type must be 1, 2, 3 or 4, got " + std::to_string(t));
  }
  return static_cast<DesignType>(t);
}

std::string to_string(const FamilyDescriptor& f) {
  return std::visit(Overloaded{
                        [](const ClassW& w) { return "ClassW" + to_record(w.d); },
                        [](const ClassL& l) { return "ClassL" + to_record(l.d); },
                        [](const OddTail&) { return std::string("OddTail"); },
                        [](const Singleton& s) { return "Singleton" + to_record(s.member); },
                    },
                    f);
}

std::vector<std::string> family_violations(const FamilyDescriptor& f, const SubsetDescriptor& d,
                                           const SpaceDescriptor& x) {
  std::vector<std::string> out;
  auto check_parameter = [&](const SubsetDescriptor& p, std::string_view name) {
    for (auto& v : validate(p, x)) out.push_back(std::string(name) + ": " + v);
    if (p.is_empty()) out.push_back(std::string(name) + ": parameter must be nonempty");
    if (p != d) out.push_back(std::string(name) + ": parameter differs from D");
  };
  std::visit(Overloaded{
                 [&](const ClassW& w) { check_parameter(w.d, "ClassW"); },
                 [&](const ClassL& l) { check_parameter(l.d, "ClassL"); },
                 [&](const OddTail&) {
                   if (x.size() != kAleph0) out.push_back("OddTail: X must be countable");
                   if (!d.contains_b) out.push_back("OddTail: D must contain b");
                   if (d.size != kAleph0) out.push_back("OddTail: D must be countably infinite");
                   if (d.cosize != kAleph0) {
                     out.push_back("OddTail: X\\D must be countably infinite");
                   }
                 },
                 [&](const Singleton& s) {
                   for (auto& v : validate(s.member, x)) out.push_back("Singleton: " + v);
                   if (!subspace_homeomorphic(s.member, d)) {
                     out.push_back("Singleton: block is not homeomorphic to D");
                   }
                 },
             },
             f);
  return out;
}

std::string_view to_string(CaseTag tag) {
  static constexpr std::array<std::string_view, 22> kNames = {
      "remark-card", "a1",       "a2",       "a3",       "b",         "c1-bound",
      "c1-case1",    "c1-case2", "c1-case3", "c1-case4", "c1-case5",  "c2",
      "c3",          "t2-finite", "t2-small", "t2-full", "t3",        "t4",
      "t3-case1",    "t3-case2", "t3-case3", "t3-case4"};
  return kNames.at(static_cast<std::size_t>(tag));
}

Verdict Verdict::exists(LambdaValue lambda, FamilyDescriptor witness, CaseTag tag,
                        std::string reason) {
  return Verdict(std::move(lambda), std::move(witness), tag, std::move(reason));
}

Verdict Verdict::not_exists(CaseTag tag, std::string reason) {
  return Verdict(std::nullopt, std::nullopt, tag, std::move(reason));
}

std::string to_record(const Verdict& v) {
  std::string out;
  out += "exists: ";
  out += v.is_exists() ? "true" : "false";
  out += "\nlambda: ";
  out += v.is_exists() ? to_string(v.lambda()) : "none";
  out += "\nwitness: ";
  out += v.is_exists() ? to_string(v.witness()) : "none";
  out += "\ncase_tag: ";
  out += to_string(v.case_tag());
  out += "\nreason: ";
  out += v.reason();
  out += '\n';
  return out;
}

std::string to_text(const Verdict& v) {
  std::string out;
  if (v.is_exists()) {
    out = "design exists with lambda = " + to_string(v.lambda()) + ", witness " +
          to_string(v.witness());
  } else {
    out = "no design exists";
  }
  out += " [";
  out += to_string(v.case_tag());
  out += "]: " + v.reason() + "\n";
  return out;
}

Verdict decide_type1(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x) {
  require_inputs(c, d, x);
  const Cardinal& card_x = x.size();
  const auto card_w = LambdaValue::family_size(FamilySize::kClassW);

  if (c.size > d.size) {
    return Verdict::not_exists(CaseTag::kCardExceeds,
                               "card(C) > card(D), so no block homeomorphic to D contains C");
  }
  if (c.contains_b && !d.contains_b) {
    return Verdict::not_exists(CaseTag::kB,
                               "b in C\\D, and no block pair-equivalent to D contains b");
  }

  if (!d.contains_b) {
    // Here b is in neither C nor D.
    if (c.is_finite()) {
      return Verdict::not_exists(
          CaseTag::kA1, "b outside C and D with C finite: copies of C through b lie in no block");
    }
    if (c.size < card_x) {
      return Verdict::exists(card_w, ClassW{d}, CaseTag::kA2,
                             "C infinite with card(C) < card(X): W is a design");
    }
    if (d == whole_space_minus_b(x)) {
      return Verdict::exists(LambdaValue::exact(Cardinal::finite(1)),
                             Singleton{whole_space_minus_b(x)}, CaseTag::kA3,
                             "card(C) = card(D) = card(X) and D = X\\{b}");
    }
    return Verdict::not_exists(CaseTag::kA3, "card(C) = card(D) = card(X) but D != X\\{b}");
  }

  if (c.is_finite()) {
    if (!(csum(c.size, kTwo) <= d.size)) {
      return Verdict::not_exists(CaseTag::kC1Bound,
                                 "b in D with C finite requires card(C) + 2 <= card(D)");
    }
    if (d.is_finite()) {
      return Verdict::exists(LambdaValue::exact(pfin_card(card_x)), ClassW{d}, CaseTag::kC1Case5,
                             "D finite with card(C) + 2 <= card(D): W is a design");
    }
    if (card_x == kAleph0) {
      if (d.cosize == kZero) {
        return Verdict::exists(LambdaValue::exact(Cardinal::finite(1)),
                               Singleton{whole_space(x)}, CaseTag::kC1Case4,
                               "D = X countable: {X} is a design");
      }
      if (d.cosize.is_finite()) {
        return Verdict::exists(LambdaValue::exact(kAleph0), ClassW{d}, CaseTag::kC1Case3,
                               "X, D countable with X\\D finite nonempty: W is countable");
      }
      return Verdict::exists(LambdaValue::exact(kAleph0), OddTail{}, CaseTag::kC1Case2,
                             "X, D and X\\D countably infinite: odd-tail family");
    }
    return Verdict::exists(card_w, ClassW{d}, CaseTag::kC1Case1,
                           "X uncountable and D infinite: W is a design");
  }

  if (c.size < card_x) {
    return Verdict::exists(card_w, ClassW{d}, CaseTag::kC2,
                           "b in D, C infinite with card(C) < card(X): W is a design");
  }
  if (d == whole_space(x)) {
    return Verdict::exists(LambdaValue::exact(Cardinal::finite(1)), Singleton{whole_space(x)},
                           CaseTag::kC3, "card(C) = card(D) = card(X) and D = X");
  }
  return Verdict::not_exists(CaseTag::kC3, "card(C) = card(D) = card(X) but D != X");
}

Verdict decide_type2(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x) {
  require_inputs(c, d, x);
  const CaseTag region = c.is_finite()        ? CaseTag::kT2Finite
                         : c.size < x.size() ? CaseTag::kT2Small
                                             : CaseTag::kT2Full;
  if (!embeddable(c, d)) {
    return Verdict::not_exists(region, embedding_failure(c, d));
  }
  switch (region) {
    case CaseTag::kT2Finite: {
      auto lambda = c.size == d.size ? LambdaValue::exact(Cardinal::finite(1))
                                     : LambdaValue::family_size(FamilySize::kClassL);
      return Verdict::exists(lambda, ClassL{d}, region, "C finite and embeddable: L is a design");
    }
    case CaseTag::kT2Small: {
      const Verdict first = decide_type1(c, d, x);
      if (!first.is_exists()) {
        throw std::logic_error("type-1 design missing for infinite embeddable C");
      }
      return Verdict::exists(first.lambda(), first.witness(), region,
                             "the type-1 design (" + std::string(to_string(first.case_tag())) +
                                 ") is also of type 2");
    }
    default: {
      const SubsetDescriptor block{x.size(), d.contains_b,
                                   Cardinal::finite(d.contains_b ? 0 : 1)};
      return Verdict::exists(LambdaValue::exact(Cardinal::finite(1)), Singleton{block}, region,
                             "card(C) = card(X): the single block (X\\{b}) ∪ (D ∩ {b})");
    }
  }
}

Verdict decide_type3(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x) {
  require_inputs(c, d, x);
  if (c.contains_b && !d.contains_b) {
    return Verdict::not_exists(CaseTag::kT3Case1, "b in C\\D");
  }
  if (size_minus_b(c) > size_minus_b(d)) {
    if (c.contains_b == d.contains_b) {
      return Verdict::not_exists(CaseTag::kT3Case2,
                                 "card(C\\{b}) > card(D\\{b}), so card(C) > card(D)");
    }
    return Verdict::not_exists(CaseTag::kT3Case3,
                               "b in D\\C and card(C) > card(D\\{b}): C fits in no block");
  }
  if (cosize_minus_b(d) > cosize_minus_b(c)) {
    return Verdict::not_exists(CaseTag::kT3Case4, "card(X\\(D ∪ {b})) > card(X\\(C ∪ {b}))");
  }
  return Verdict::exists(LambdaValue::family_size(FamilySize::kClassWContainingC), ClassW{d},
                         CaseTag::kT3, "W is a design with lambda = card({E in W : C subset E})");
}

Verdict decide_type4(const SubsetDescriptor& c, const SubsetDescriptor& d,
                     const SpaceDescriptor& x) {
  require_inputs(c, d, x);
  if (!embeddable(c, d)) {
    return Verdict::not_exists(CaseTag::kT4, embedding_failure(c, d));
  }
  const Verdict second = decide_type2(c, d, x);
  return Verdict::exists(second.lambda(), second.witness(), CaseTag::kT4,
                         "the type-2 design (" + std::string(to_string(second.case_tag())) +
                             ") is also of type 4");
}

Verdict decide(DesignType type, const SubsetDescriptor& c, const SubsetDescriptor& d,
               const SpaceDescriptor& x) {
  switch (type) {
    case DesignType::kType1:
      return decide_type1(c, d, x);
    case DesignType::kType2:
      return decide_type2(c, d, x);
    case DesignType::kType3:
      return decide_type3(c, d, x);
    case DesignType::kType4:
      return decide_type4(c, d, x);
  }
  throw std::invalid_argument("unknown design type");
}

bool EquivalenceReport::consistent() const {
  return no_type2 == no_type4 && no_type4 == cardinal_condition &&
         cardinal_condition == not_embeddable;
}

std::vector<std::string> EquivalenceReport::divergent_pairs() const {
  const std::array<std::pair<const char*, bool>, 4> statements = {{
      {"no_type2", no_type2},
      {"no_type4", no_type4},
      {"cardinal_condition", cardinal_condition},
      {"not_embeddable", not_embeddable},
  }};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    for (std::size_t j = i + 1; j < statements.size(); ++j) {
      if (statements[i].second != statements[j].second) {
        out.push_back(std::string(statements[i].first) + "/" + statements[j].first);
      }
    }
  }
  return out;
}

EquivalenceReport crosscheck_embedding(const SubsetDescriptor& c, const SubsetDescriptor& d,
                                       const SpaceDescriptor& x) {
  EquivalenceReport r;
  r.no_type2 = !decide_type2(c, d, x).is_exists();
  r.no_type4 = !decide_type4(c, d, x).is_exists();
  r.cardinal_condition =
      (c.size.is_infinite() && c.contains_b && !d.contains_b) || c.size > d.size;
  r.not_embeddable = !embeddable(c, d);
  return r;
}

SweepSummary sweep_grid(const SweepOptions& options) {
  constexpr std::size_t kMaxExamples = 10;
  SweepSummary summary;
  auto record = [&](std::uint64_t& counter, const SpaceDescriptor& x, const SubsetDescriptor& c,
                    const SubsetDescriptor& d, std::string what) {
    ++counter;
    if (summary.examples.size() < kMaxExamples) {
      summary.examples.push_back({x, c, d, std::move(what)});
    }
  };

  for (std::uint32_t k = 0; k <= options.max_aleph; ++k) {
    const SpaceDescriptor x(Cardinal::aleph(k));
    auto grid = descriptor_grid(x, options.max_finite);
    if (options.finite_only) {
      std::erase_if(grid, [](const SubsetDescriptor& s) { return !s.is_finite(); });
    }
    for (const auto& c : grid) {
      for (const auto& d : grid) {
        const std::uint64_t index = summary.cases++;
        EquivalenceReport eq = crosscheck_embedding(c, d, x);
        if (options.inject_fault && index % 97 == 0) {
          eq.not_embeddable = !eq.not_embeddable;
        }
        if (!eq.consistent()) {
          std::string what = "equivalence:";
          for (const auto& p : eq.divergent_pairs()) what += " " + p;
          record(summary.equivalence_violations, x, c, d, what);
        }

        const std::array<Verdict, 4> verdicts = {decide_type1(c, d, x), decide_type2(c, d, x),
                                                 decide_type3(c, d, x), decide_type4(c, d, x)};
        if (verdicts[0].is_exists() && !verdicts[1].is_exists()) {
          record(summary.monotonicity_violations, x, c, d, "type 1 exists but type 2 does not");
        }
        if (verdicts[2].is_exists() && !verdicts[3].is_exists()) {
          record(summary.monotonicity_violations, x, c, d, "type 3 exists but type 4 does not");
        }
        for (std::size_t t = 0; t < verdicts.size(); ++t) {
          const Verdict& v = verdicts[t];
          if (!v.is_exists()) continue;
          const std::string type_name = "type " + std::to_string(t + 1);
          if (c.size > d.size) {
            record(summary.cardinality_violations, x, c, d,
                   type_name + " exists with card(C) > card(D)");
          }
          auto problems = family_violations(v.witness(), d, x);
          const auto* single = std::get_if<Singleton>(&v.witness());
          if (single && requires_block_complement(static_cast<DesignType>(t + 1)) &&
              !pair_equivalent(single->member, d, x)) {
            problems.push_back("Singleton: block complement not homeomorphic to X\\D");
          }
          for (const auto& p : problems) {
            record(summary.witness_violations, x, c, d, type_name + " witness: " + p);
          }
        }
      }
    }
  }
  return summary;
}

}  // namespace fortdesign
