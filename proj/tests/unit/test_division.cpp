#include "doctest.h"

#include "fixtures.hpp"
#include "menichetti/division.hpp"
#include "menichetti/fast_field.hpp"
#include "oracles.hpp"

using namespace menichetti;

namespace {

// Every tuple (1, k_1, ..., k_{m-1}) with nonzero entries.
std::vector<MenichettiSpec> normalized_specs(const ExtensionPtr& K) {
  std::vector<FieldElement> nonzero;
  for (const auto& a : K->elements())
    if (!a.is_zero()) nonzero.push_back(a);
  const std::size_t m = K->degree();
  std::vector<MenichettiSpec> out;
  std::vector<std::size_t> idx(m - 1, 0);
  for (;;) {
    std::vector<FieldElement> k{K->one()};
    for (auto i : idx) k.push_back(nonzero[i]);
    out.push_back(MenichettiSpec(K, fixtures::identity_tau(m), k));
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == nonzero.size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return out;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("determinant scan agrees with the product scan") {
  for (auto K : {fixtures::gf8(), fixtures::gf9()}) {
    auto fast = std::make_shared<const FastField>(*K);
    std::size_t division = 0;
    for (const auto& spec : normalized_specs(K)) {
      auto a = exhaustive_check(spec, fast);
      auto b = pair_scan(spec);
      CHECK(a.status == b.status);
      division += a.fired();
      for (const auto* v : {&a, &b}) {
        if (v->status != DivisionStatus::NotDivision) continue;
        REQUIRE(v->witness_x.has_value());
        REQUIRE(v->witness_y.has_value());
        CHECK(oracle::product_by_rule(spec, *v->witness_x, *v->witness_y).is_zero());
        CHECK_FALSE(v->witness_x->is_zero());
        CHECK_FALSE(v->witness_y->is_zero());
      }
    }
    CHECK(division == (K->order() == 9 ? 6u : 18u));
  }
}

TEST_CASE("right annihilator") {
  auto K = fixtures::gf8();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->one(), K->one()});
  auto v = exhaustive_check(spec);
  REQUIRE(v.status == DivisionStatus::NotDivision);
  auto y = right_annihilator(spec, *v.witness_x);
  REQUIRE(y.has_value());
  CHECK(verify_zero_divisor(spec, *v.witness_x, *y));
  CHECK_FALSE(right_annihilator(spec, spec.one()).has_value());
  CHECK_FALSE(verify_zero_divisor(spec, spec.one(), spec.one()));
}

TEST_CASE("division checks refuse what they cannot do") {
  auto Q = fixtures::cubic();
  auto qspec = MenichettiSpec::cyclic(Q, {Q->one(), Q->one(), Q->one()});
  CHECK(code_of([&] { exhaustive_check(qspec); }) == ErrorCode::InfiniteField);
  CHECK(code_of([&] { pair_scan(qspec); }) == ErrorCode::InfiniteField);
  auto K = fixtures::gf27();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->one(), K->one()});
  CHECK(code_of([&] { exhaustive_check(spec, 1000); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { pair_scan(spec, 1000); }) == ErrorCode::BudgetExceeded);
  CHECK(code_of([&] { height_search(spec, 1); }) == ErrorCode::Unsupported);
  auto wrong = std::make_shared<const FastField>(*fixtures::gf8());
  CHECK(code_of([&] { exhaustive_check(spec, wrong); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("height search: grid and sieve agree") {
  auto K = fixtures::cubic();
  auto assoc = MenichettiSpec::cyclic(K, {K->one(), K->one(), K->one()});
  auto division = MenichettiSpec::cyclic(K, {K->one(), K->parse("1 + t"), K->parse("t + t^2")});
  // The grid evaluates exact determinants, so keep it at height 1 where a division algebra needs every point.
  for (int h : {1}) {
    auto g = height_search(assoc, h, HeightMethod::Grid);
    auto s = height_search(assoc, h, HeightMethod::Sieve);
    CHECK(g.found);
    CHECK(s.found);
    for (const auto* r : {&g, &s}) {
      REQUIRE(r->x.has_value());
      REQUIRE(r->y.has_value());
      CHECK(verify_zero_divisor(assoc, *r->x, *r->y));
    }
    auto g2 = height_search(division, h, HeightMethod::Grid);
    auto s2 = height_search(division, h, HeightMethod::Sieve);
    CHECK_FALSE(g2.found);
    CHECK_FALSE(s2.found);
    CHECK(g2.method == "grid");
    CHECK(s2.method.rfind("sieve", 0) == 0);
    CHECK(g2.examined > 0);
  }
  auto s3 = height_search(division, 2, HeightMethod::Sieve);
  CHECK_FALSE(s3.found);
  auto s4 = height_search(assoc, 2, HeightMethod::Sieve);
  CHECK(s4.found);
}

TEST_CASE("the sufficient condition on the cubic example") {
  auto K = fixtures::cubic();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->parse("1 + t"), K->parse("t + t^2")});
  auto v = criterion_thm_main1(spec);
  CHECK(v.fired());
  CHECK(v.certificate == "Thm3.2");
}

TEST_CASE("the sufficient condition never fires on a non-division algebra over GF(27)") {
  auto K = fixtures::gf27();
  auto fast = std::make_shared<const FastField>(*K);
  std::size_t fired = 0;
  for (const auto& spec : normalized_specs(K)) {
    std::optional<DivisionVerdict> v;
    try {
      v = criterion_thm_main1(spec);
    } catch (const Error&) {
      continue;
    }
    if (!v->fired()) continue;
    ++fired;
    CHECK(exhaustive_check(spec, fast).fired());
  }
  CHECK(fired > 0);
}

TEST_CASE("criteria bookkeeping") {
  auto K = fixtures::gf8();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->gen(), K->one()});
  auto runs = run_criteria(spec);
  std::vector<std::string> names;
  for (const auto& r : runs) names.push_back(r.name);
  CHECK(names == std::vector<std::string>{"Thm3.2", "Cor3.3i", "Cor3.3ii", "Prop4.LinIndep", "Thm.div1", "Thm.div2"});
  for (const auto& r : runs)
    if (r.verdict.fired()) CHECK_FALSE(r.verdict.certificate.empty());
  CHECK(code_of([&] { criterion_m4(spec, M4Rule::Steele); }) == ErrorCode::WrongDegree);
  auto K4 = fixtures::gf16();
  auto spec4 = MenichettiSpec::cyclic(K4, {K4->one(), K4->one(), K4->one(), K4->one()});
  CHECK(code_of([&] { criterion_m3(spec4, M3Rule::Div1); }) == ErrorCode::WrongDegree);
  CHECK(status_name(DivisionStatus::Division) == "Division");
}

TEST_CASE("d1d clauses hold for every d outside F") {
  auto K = fixtures::gf8();
  for (const auto& d : K->elements()) {
    if (K->in_base(d)) continue;
    auto spec = MenichettiSpec::cyclic(K, {d, K->one(), d});
    auto rep = example_d1d_check(spec);
    CHECK(rep.clause_a());
    CHECK(rep.clause_b());
    CHECK(rep.clause_a_vectors > 0);
  }
}
