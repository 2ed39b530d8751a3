#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "menichetti/census.hpp"
#include "menichetti/division.hpp"

using namespace menichetti;

TEST_CASE("GF(9) census") {
  auto K = fixtures::gf9();
  CensusOptions opt;
  auto res = census(K, {0, 1}, opt);
  CHECK(res.m == 2);
  CHECK(res.rows.size() == 64);
  CHECK(res.division_count == 48);
  CHECK(res.violations == 0);
  // k_0 varies slowest in element order.
  CHECK(res.rows.front().k[0] == K->element_at(1));
  CHECK(res.rows.front().k[1] == K->element_at(1));
  CHECK(res.rows[1].k[1] == K->element_at(2));
  CHECK(res.rows.back().k[0] == K->element_at(8));
}

TEST_CASE("census rows agree with direct checks") {
  auto K = fixtures::gf8();
  auto res = census(K, {0, 1, 2}, {});
  REQUIRE(res.rows.size() == 343);
  CHECK(res.division_count == 126);
  for (std::size_t i = 0; i < res.rows.size(); i += 17) {
    const auto& row = res.rows[i];
    auto spec = MenichettiSpec(K, {0, 1, 2}, row.k);
    CHECK(pair_scan(spec).fired() == row.is_division);
    if (!row.is_division) {
      REQUIRE(row.witness_x.has_value());
      CHECK(verify_zero_divisor(spec, *row.witness_x, *row.witness_y));
    }
  }
}

TEST_CASE("parallel census output is identical") {
  auto K = fixtures::gf27();
  CensusOptions one;
  CensusOptions four;
  four.jobs = 4;
  std::ostringstream a, b;
  write_census_csv(census(K, {0, 1, 2}, one), a);
  write_census_csv(census(K, {0, 1, 2}, four), b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("k_0,k_1,k_2,is_division,witness_x,witness_y,criteria\n", 0) == 0);
}

TEST_CASE("special pattern census size") {
  auto K = fixtures::gf27();
  CHECK(census_size(*K, 3, CensusPattern::Special) == 676);
  CHECK(census_size(*K, 3, CensusPattern::Full) == 17576);
  CensusOptions opt;
  opt.pattern = CensusPattern::Special;
  auto res = census(K, {0, 1, 2}, opt);
  CHECK(res.rows.size() == 676);
  for (const auto& row : res.rows) CHECK(row.k[0].is_one());
}

TEST_CASE("census errors") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  CensusOptions small;
  small.budget = 100;
  CHECK(code_of([&] { census(fixtures::gf27(), {0, 1, 2}, small); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { census(fixtures::cubic(), {0, 1, 2}, {}); }) == ErrorCode::InfiniteField);
  CHECK(code_of([&] { census(fixtures::gf27(), {0, 1}, {}); }) == ErrorCode::DimensionMismatch);
}
