#include "doctest.h"
#include "fortdesign/designs.hpp"

using namespace fortdesign;

namespace {

const SpaceDescriptor kX0{kAleph0};
const SpaceDescriptor kX1{kAleph1};
const Cardinal kOne = Cardinal::finite(1);

SubsetDescriptor fin(std::uint64_t n, bool b, const SpaceDescriptor& x = kX0) {
  return {Cardinal::finite(n), b, x.size()};
}
SubsetDescriptor inf(Cardinal size, bool b, Cardinal cosize) { return {size, b, cosize}; }

std::vector<SpaceDescriptor> spaces() { return {kX0, kX1}; }

}  // namespace

TEST_CASE("type 1: worked examples") {
  auto v = decide_type1(fin(3, false), fin(7, false), kX0);
  CHECK_FALSE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kA1);

  v = decide_type1(fin(2, true), inf(kAleph0, true, kAleph0), kX0);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC1Case2);
  CHECK(v.lambda() == LambdaValue::exact(kAleph0));
  CHECK(v.witness() == FamilyDescriptor{OddTail{}});

  v = decide_type1(fin(3, true), fin(4, true), kX0);
  CHECK_FALSE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC1Bound);

  const auto x_minus_b = inf(kAleph0, false, kOne);
  v = decide_type1(x_minus_b, x_minus_b, kX0);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kA3);
  CHECK(v.lambda() == LambdaValue::exact(kOne));
  CHECK(v.witness() == FamilyDescriptor{Singleton{whole_space_minus_b(kX0)}});

  v = decide_type1(fin(3, true, kX1), fin(6, true, kX1), kX1);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC1Case5);
  CHECK(v.lambda() == LambdaValue::exact(kAleph1));
  CHECK(v.witness() == FamilyDescriptor{ClassW{fin(6, true, kX1)}});
}

TEST_CASE("type 1: remaining clauses") {
  // card(C) > card(D) is caught before any clause.
  CHECK(decide_type1(fin(5, true), fin(3, true), kX0).case_tag() == CaseTag::kCardExceeds);
  CHECK(decide_type1(fin(1, true), fin(3, false), kX0).case_tag() == CaseTag::kB);

  auto v = decide_type1(inf(kAleph0, false, kAleph1), inf(kAleph1, false, kAleph0), kX1);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kA2);
  CHECK(v.lambda() == LambdaValue::family_size(FamilySize::kClassW));

  v = decide_type1(inf(kAleph0, false, kAleph0), inf(kAleph0, false, kAleph0), kX0);
  CHECK_FALSE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kA3);

  v = decide_type1(fin(1, false, kX1), inf(kAleph0, true, kAleph1), kX1);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC1Case1);
  CHECK(v.lambda() == LambdaValue::family_size(FamilySize::kClassW));

  v = decide_type1(fin(1, false), inf(kAleph0, true, Cardinal::finite(4)), kX0);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC1Case3);
  CHECK(v.lambda() == LambdaValue::exact(kAleph0));

  v = decide_type1(fin(1, false), whole_space(kX0), kX0);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC1Case4);
  CHECK(v.witness() == FamilyDescriptor{Singleton{whole_space(kX0)}});

  // Uncountable X with D = X goes to case 1, not case 4.
  CHECK(decide_type1(fin(1, false, kX1), whole_space(kX1), kX1).case_tag() == CaseTag::kC1Case1);

  v = decide_type1(inf(kAleph0, true, kAleph1), inf(kAleph0, true, kAleph1), kX1);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC2);

  v = decide_type1(inf(kAleph1, true, kAleph1), whole_space(kX1), kX1);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC3);

  v = decide_type1(inf(kAleph1, true, kAleph1), inf(kAleph1, true, kOne), kX1);
  CHECK_FALSE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kC3);
}

TEST_CASE("type 2") {
  auto v = decide_type2(fin(5, false), fin(5, true), kX0);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kT2Finite);
  CHECK(v.lambda() == LambdaValue::exact(kOne));
  CHECK(v.witness() == FamilyDescriptor{ClassL{fin(5, true)}});

  v = decide_type2(inf(kAleph0, true, kAleph0), fin(9, false), kX0);
  CHECK_FALSE(v.is_exists());

  const auto c = inf(kAleph1, true, kAleph1);
  v = decide_type2(c, whole_space(kX1), kX1);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kT2Full);
  CHECK(v.lambda() == LambdaValue::exact(kOne));
  CHECK(v.witness() == FamilyDescriptor{Singleton{whole_space(kX1)}});

  v = decide_type2(fin(2, true), fin(5, false), kX0);
  REQUIRE(v.is_exists());
  CHECK(v.lambda() == LambdaValue::family_size(FamilySize::kClassL));

  v = decide_type2(inf(kAleph0, false, kAleph1), inf(kAleph0, true, kAleph1), kX1);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kT2Small);
  CHECK(v.witness() == FamilyDescriptor{ClassW{inf(kAleph0, true, kAleph1)}});
}

TEST_CASE("type 3") {
  auto v = decide_type3(fin(1, true), inf(kAleph0, true, kAleph0), kX0);
  REQUIRE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kT3);
  CHECK(v.lambda() == LambdaValue::family_size(FamilySize::kClassWContainingC));

  v = decide_type3(inf(kAleph0, true, Cardinal::finite(2)), inf(kAleph0, true, kAleph0), kX0);
  CHECK_FALSE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kT3Case4);

  v = decide_type3(fin(2, true), fin(10, false), kX0);
  CHECK_FALSE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kT3Case1);

  CHECK(decide_type3(fin(4, false), fin(3, false), kX0).case_tag() == CaseTag::kT3Case2);
  CHECK(decide_type3(fin(3, false), fin(3, true), kX0).case_tag() == CaseTag::kT3Case3);
}

TEST_CASE("type 4") {
  const auto c = inf(kAleph0, true, kAleph0);
  auto v = decide_type4(c, inf(kAleph0, false, kAleph0), kX0);
  CHECK_FALSE(v.is_exists());
  CHECK(v.case_tag() == CaseTag::kT4);

  v = decide_type4(fin(1, false), fin(1, false), kX0);
  REQUIRE(v.is_exists());
  CHECK(v.lambda() == LambdaValue::exact(kOne));
  CHECK(v.witness() == FamilyDescriptor{ClassL{fin(1, false)}});

  for (const auto& x : spaces()) {
    const auto g = descriptor_grid(x, 6);
    for (const auto& cc : g) {
      for (const auto& d : g) {
        const auto t2 = decide_type2(cc, d, x);
        const auto t4 = decide_type4(cc, d, x);
        REQUIRE(t2.is_exists() == t4.is_exists());
        if (t2.is_exists()) {
          CHECK(t2.lambda() == t4.lambda());
          CHECK(t2.witness() == t4.witness());
        }
      }
    }
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(decide_type1(fin(0, false), fin(3, true), kX0), InvalidDescriptor);
  CHECK_THROWS_AS(decide_type2(fin(3, false), inf(kAleph1, true, kAleph0), kX0),
                  InvalidDescriptor);
  try {
    decide_type3(fin(3, false, kX1), fin(2, true), kX1);
    FAIL("expected InvalidDescriptor");
  } catch (const InvalidDescriptor& e) {
    REQUIRE_FALSE(e.violations().empty());
    for (const auto& v : e.violations()) CHECK(v.starts_with("D: "));
  }
}

TEST_CASE("crosscheck examples") {
  auto r = crosscheck_embedding(inf(kAleph0, true, kAleph0), fin(3, true), kX0);
  CHECK(r.consistent());
  CHECK(r.no_type2);
  CHECK(r.not_embeddable);

  r = crosscheck_embedding(fin(2, true), fin(4, false), kX0);
  CHECK(r.consistent());
  CHECK_FALSE(r.no_type2);

  EquivalenceReport broken{true, true, true, false};
  CHECK_FALSE(broken.consistent());
  CHECK(broken.divergent_pairs() == std::vector<std::string>{"no_type2/not_embeddable",
                                                             "no_type4/not_embeddable",
                                                             "cardinal_condition/not_embeddable"});
}

TEST_CASE("grid properties") {
  for (const auto& x : spaces()) {
    const auto g = descriptor_grid(x, 6);
    for (const auto& c : g) {
      for (const auto& d : g) {
        CAPTURE(to_record(c));
        CAPTURE(to_record(d));
        const Verdict t1 = decide_type1(c, d, x);
        const Verdict t3 = decide_type3(c, d, x);
        // Counting every copy of C is stricter than counting only those with matching complements.
        if (t1.is_exists()) CHECK(t3.is_exists());
        // Deterministic.
        CHECK(decide_type1(c, d, x) == t1);
        CHECK(decide_type3(c, d, x) == t3);
        // Every witness is a valid family for this D.
        for (const auto& v : {t1, t3}) {
          if (v.is_exists()) CHECK(family_violations(v.witness(), d, x).empty());
        }
      }
    }
  }
}

TEST_CASE("sweep over the default grid is clean") {
  const SweepSummary s = sweep_grid({});
  CHECK(s.cases > 0);
  CHECK(s.total_violations() == 0);
  CHECK(s.examples.empty());
}

TEST_CASE("sweep reports injected faults") {
  SweepOptions options;
  options.inject_fault = true;
  const SweepSummary s = sweep_grid(options);
  CHECK(s.equivalence_violations > 0);
  CHECK_FALSE(s.examples.empty());
}

TEST_CASE("finite-only sweep") {
  SweepOptions options;
  options.finite_only = true;
  const SweepSummary s = sweep_grid(options);
  CHECK(s.total_violations() == 0);
  // 12 finite descriptors per space (sizes 1..6, both b flags) squared, two spaces.
  CHECK(s.cases == 2 * 12 * 12);
}

TEST_CASE("verdict records") {
  const auto v = decide_type1(fin(2, true), inf(kAleph0, true, kAleph0), kX0);
  CHECK(to_record(v) ==
        "exists: true\n"
        "lambda: aleph0\n"
        "witness: OddTail\n"
        "case_tag: c1-case2\n"
        "reason: X, D and X\\D countably infinite: odd-tail family\n");
  const auto n = decide_type1(fin(3, false), fin(7, false), kX0);
  CHECK(to_record(n).starts_with("exists: false\nlambda: none\nwitness: none\ncase_tag: a1\n"));
  CHECK(to_string(FamilyDescriptor{ClassL{fin(5, true)}}) ==
        "ClassL{size: 5, contains_b: true, cosize: aleph0}");
}
