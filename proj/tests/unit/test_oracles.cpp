#include <doctest.h>

#include <set>

#include "sij/mt_sgt.hpp"
#include "sij/oracles.hpp"

using namespace sij;

TEST_CASE("operator formula") {
  CHECK(operator_formula({1, 2, 3}) == 7);
  CHECK(operator_formula({1, 2, 3, 4, 5}) == 429);
  CHECK(operator_formula({4}) == 1);
  CHECK(operator_formula({}) == 1);
  CHECK(operator_formula({1, 2, 3, 4, 5, 6}) == 7436);
  CHECK_THROWS_AS(operator_formula({1, 2, 3}, {.cap = 2}), std::invalid_argument);

  OperatorOptions ref{.reference = true};
  for (Int a = -3; a <= 3; ++a)
    for (Int b = -3; b <= 3; ++b) {
      CHECK(operator_formula({a, b}) == mt_counts({a, b}).size());
      for (Int c = -3; c <= 3; ++c) {
        std::vector<Int> k{a, b, c};
        Count v = operator_formula(k);
        CHECK(v == operator_formula(k, ref));
        CHECK(v == mt_counts(k).size());
        CHECK(v == sgt_counts(k).size());
      }
    }
  CHECK(operator_formula({1, 3, 4, 6}, ref) == operator_formula({1, 3, 4, 6}));
  CHECK(operator_formula({1, 3, 4, 6}) == mt_counts({1, 3, 4, 6}).size());
  OperatorOptions par{.reference = true, .jobs = 3};
  CHECK(operator_formula({2, -1, 0, 5}, par) == operator_formula({2, -1, 0, 5}));
}

TEST_CASE("asm formula") {
  CHECK(asm_formula(1) == 1);
  CHECK(asm_formula(2) == 2);
  CHECK(asm_formula(3) == 7);
  CHECK(asm_formula(4) == 42);
  CHECK(asm_formula(5) == 429);
  CHECK(asm_formula(6) == 7436);
  CHECK(asm_formula(7) == 218348);
  for (int n = 1; n <= 6; ++n) {
    std::vector<Int> k;
    for (int i = 1; i <= n; ++i) k.push_back(i);
    CHECK(operator_formula(k) == asm_formula(n));
  }
  CHECK_THROWS_AS(asm_formula(0), std::invalid_argument);
}

TEST_CASE("asm to monotone triangle") {
  Matrix fig{{0, 0, 0, 1, 0, 0},  {0, 1, 0, -1, 1, 0}, {1, -1, 0, 1, -1, 1},
             {0, 1, 0, -1, 1, 0}, {0, 0, 0, 1, 0, 0},  {0, 0, 1, 0, 0, 0}};
  Rows want{{4}, {2, 5}, {1, 4, 6}, {1, 2, 5, 6}, {1, 2, 4, 5, 6}, {1, 2, 3, 4, 5, 6}};
  CHECK(asm_violations(fig).empty());
  CHECK(asm_to_mt(fig) == want);
  CHECK(mt_to_asm(want) == fig);

  Matrix id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(asm_to_mt(id) == Rows{{1}, {1, 2}, {1, 2, 3}});

  Matrix bad{{0, 1, 0}, {1, 1, 0}, {0, -1, 1}};
  auto v = asm_violations(bad);
  REQUIRE(v.size() == 3);
  CHECK(v[0].rfind("row 2", 0) == 0);
  CHECK(v[1].rfind("row 3", 0) == 0);
  CHECK(v[2].rfind("column 2", 0) == 0);
  CHECK_THROWS_AS(asm_to_mt(bad), std::invalid_argument);
  CHECK_THROWS_AS(mt_to_asm(Rows{{3}, {1, 2}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(mt_to_asm(Rows{{1}, {2, 2}}), std::invalid_argument);

  const std::size_t sizes[] = {1, 1, 2, 7, 42};
  for (int n = 0; n <= 4; ++n) {
    auto asms = all_asms(n);
    CHECK(asms.size() == sizes[n]);
    std::vector<Int> k;
    for (int i = 1; i <= n; ++i) k.push_back(i);
    std::set<Rows> seen;
    for (const auto& a : asms) {
      Rows t = asm_to_mt(a);
      CHECK(mt_to_asm(t) == a);
      if (n > 0) CHECK(mt_set(k).sign_of(mt_encode(t)) == 1);
      seen.insert(t);
    }
    CHECK(seen.size() == asms.size());
    if (n > 0) CHECK(mt_counts(k).pos == asms.size());
  }
}

TEST_CASE("matrix input") {
  Matrix a{{0, 1}, {1, 0}};
  CHECK(matrix_from_text("[[0,1],[1,0]]") == a);
  CHECK(matrix_from_text("0 1\n 1 0\n\n") == a);
  CHECK_THROWS_AS(matrix_from_text("0 x\n1 0"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text("[[0,1],[1,0]"), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_text("[[0,1.5]]"), std::invalid_argument);
}
