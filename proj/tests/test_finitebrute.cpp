#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fortdesign/finitebrute.hpp"

using namespace fortdesign;
using namespace fortdesign::finitebrute;

namespace {

// Pascal's triangle, independent of the closed form under test.
std::uint64_t pascal(std::uint32_t n, std::uint32_t k) {
  std::vector<std::vector<std::uint64_t>> row(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::uint32_t i = 0; i <= n; ++i) {
    row[i][0] = 1;
    for (std::uint32_t j = 1; j <= i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
  }
  return k <= n ? row[n][k] : 0;
}

FiniteInstance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

std::uint64_t lambda_of(const BruteResult& r) {
  REQUIRE(std::holds_alternative<Uniform>(r));
  return std::get<Uniform>(r).lambda;
}

}  // namespace

TEST_CASE("all 3-subsets") {
  CHECK(lambda_of(brute_lambda(all_k_subsets_instance(7, 3, 2), DesignType::kType2)) == 5);
  CHECK(lambda_of(brute_lambda(all_k_subsets_instance(6, 3, 2), DesignType::kType2)) == 4);
}

TEST_CASE("perfect matching on four points") {
  const FiniteInstance inst{4, {0b0011, 0b1100}, 1, 2};
  CHECK(lambda_of(brute_lambda(inst, DesignType::kType1)) == 1);
  CHECK(to_string(brute_lambda(inst, DesignType::kType1), inst) == "Exactly(1)");
}

TEST_CASE("all_k_subsets_lambda") {
  CHECK(all_k_subsets_lambda(7, 3, 2) == 5);
  CHECK(all_k_subsets_lambda(8, 4, 1) == 35);
  CHECK(all_k_subsets_lambda(5, 4, 3) == 2);
  CHECK_THROWS_AS(all_k_subsets_lambda(5, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(all_k_subsets_lambda(5, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(all_k_subsets_lambda(5, 3, 0), std::invalid_argument);
}

TEST_CASE("brute force matches binomial(n-t, k-t) for n <= 8") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    for (std::uint32_t k = 2; k < n; ++k) {
      for (std::uint32_t t = 1; t < k; ++t) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(t);
        const auto inst = all_k_subsets_instance(n, k, t);
        CHECK(inst.blocks.size() == pascal(n, k));
        CHECK(lambda_of(brute_lambda(inst, DesignType::kType2)) == pascal(n - t, k - t));
        CHECK(all_k_subsets_lambda(n, k, t) == pascal(n - t, k - t));
      }
    }
  }
}

TEST_CASE("removing a block breaks uniformity") {
  auto inst = all_k_subsets_instance(7, 3, 2);
  const Mask removed = inst.blocks.back();
  inst.blocks.pop_back();
  const auto r = brute_lambda(inst, DesignType::kType2);
  REQUIRE(std::holds_alternative<NonUniform>(r));
  const auto& w = std::get<NonUniform>(r);
  CHECK(w.first_count != w.second_count);
  // Recount the witness pair directly.
  for (const auto& [subset, count] : {std::pair{w.first, w.first_count},
                                      std::pair{w.second, w.second_count}}) {
    CHECK(std::popcount(subset) == 2);
    std::uint64_t direct = 0;
    for (Mask b : inst.blocks) direct += (b & subset) == subset;
    CHECK(direct == count);
  }
  // Only pairs inside the removed block lost a block.
  CHECK((((w.first & removed) == w.first) != ((w.second & removed) == w.second)));
}

TEST_CASE("blocks of the wrong size are reported") {
  const FiniteInstance inst{5, {0b00111, 0b01111}, 1, 3};
  const auto r = brute_lambda(inst, DesignType::kType1);
  REQUIRE(std::holds_alternative<BlockViolation>(r));
  CHECK(std::get<BlockViolation>(r).block_index == 1);
  CHECK(to_string(r, inst) == "BlockViolation(#1 {0,1,2,3})");
}

TEST_CASE("design types collapse in pairs on random instances") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    FiniteInstance inst;
    inst.n = 3 + static_cast<std::uint32_t>(rng() % 6);
    inst.d_size = 1 + static_cast<std::uint32_t>(rng() % inst.n);
    inst.c_size = 1 + static_cast<std::uint32_t>(rng() % inst.d_size);
    std::vector<Mask> blocks;
    const int count = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
      Mask m = rng() & ((Mask{1} << inst.n) - 1);
      // Mostly blocks of the right size, some not.
      if (rng() % 4 != 0) {
        m = 0;
        while (static_cast<std::uint32_t>(std::popcount(m)) < inst.d_size) {
          m |= Mask{1} << (rng() % inst.n);
        }
      }
      if (std::find(blocks.begin(), blocks.end(), m) == blocks.end()) blocks.push_back(m);
    }
    inst.blocks = blocks;
    CAPTURE(format_instance(inst));
    const auto t1 = to_string(brute_lambda(inst, DesignType::kType1), inst);
    const auto t2 = to_string(brute_lambda(inst, DesignType::kType2), inst);
    const auto t3 = to_string(brute_lambda(inst, DesignType::kType3), inst);
    const auto t4 = to_string(brute_lambda(inst, DesignType::kType4), inst);
    CHECK(t1 == t2);
    CHECK(t3 == t4);
    CHECK(t1 == t3);
  }
}

TEST_CASE("instance validation") {
  CHECK(validate(FiniteInstance{4, {0b0011}, 1, 2}).empty());
  CHECK_FALSE(validate(FiniteInstance{1, {0b1}, 1, 1}).empty());
  CHECK_FALSE(validate(FiniteInstance{4, {0b0011, 0b0011}, 1, 2}).empty());
  CHECK_FALSE(validate(FiniteInstance{4, {0b10011}, 1, 2}).empty());
  CHECK_FALSE(validate(FiniteInstance{4, {0b0011}, 3, 2}).empty());
  CHECK_FALSE(validate(FiniteInstance{4, {0b0011}, 0, 2}).empty());
  CHECK_THROWS_AS(brute_lambda(FiniteInstance{4, {0b0011, 0b0011}, 1, 2}, DesignType::kType1),
                  std::invalid_argument);
}

TEST_CASE("instance text format") {
  const auto inst = parse("# matching\n4\n1\n2\n0,1\n\n2,3\n");
  CHECK(inst.n == 4);
  CHECK(inst.c_size == 1);
  CHECK(inst.d_size == 2);
  CHECK(inst.blocks == std::vector<Mask>{0b0011, 0b1100});
  CHECK(parse(format_instance(inst)).blocks == inst.blocks);
  CHECK(mask_to_string(0b101001) == "{0,3,5}");

  CHECK_THROWS_AS(parse("4\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("4\n1\n2\n0,x\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("4\n1\n2\n0,4\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse("99\n1\n2\n0,1\n"), std::invalid_argument);
  try {
    parse("4\n1\n2\n0,1\n1,,2\n");
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}
