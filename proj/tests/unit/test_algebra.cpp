#include "doctest.h"

#include "fixtures.hpp"
#include "menichetti/matrix.hpp"
#include "oracles.hpp"

using namespace menichetti;

namespace {

std::vector<ExtensionPtr> fields() {
  return {fixtures::gf9(), fixtures::gf8(), fixtures::gf27(), fixtures::gf16(), fixtures::cubic(),
          fixtures::cyclic_quartic(), fixtures::biquadratic()};
}

}  // namespace

TEST_CASE("product matches the defining rule") {
  std::mt19937_64 rng(101);
  for (const auto& ext : fields()) {
    for (int rep = 0; rep < 5; ++rep) {
      auto spec = fixtures::random_spec(ext, rng);
      auto x = spec.random(rng, 2), y = spec.random(rng, 2);
      CHECK(multiply(spec, x, y) == oracle::product_by_rule(spec, x, y));
    }
  }
}

TEST_CASE("z_0 is a two-sided unit and K sits in the nucleus") {
  std::mt19937_64 rng(5);
  for (const auto& ext : fields()) {
    if (!ext->is_cyclic()) continue;
    auto spec = fixtures::random_spec(ext, rng);
    auto x = spec.random(rng, 2), y = spec.random(rng, 2);
    CHECK(multiply(spec, spec.one(), x) == x);
    CHECK(multiply(spec, x, spec.one()) == x);
    auto l = spec.embed(ext->random(rng, 2));
    CHECK(associator(spec, l, x, y).is_zero());
    CHECK(associator(spec, x, l, y).is_zero());
    CHECK(associator(spec, x, y, l).is_zero());
  }
}

TEST_CASE("product is biadditive and K-linear in the right factor") {
  std::mt19937_64 rng(6);
  for (const auto& ext : fields()) {
    auto spec = fixtures::random_spec(ext, rng);
    auto x = spec.random(rng, 2), y = spec.random(rng, 2), w = spec.random(rng, 2);
    auto l = ext->random(rng, 2);
    CHECK(multiply(spec, x + w, y) == multiply(spec, x, y) + multiply(spec, w, y));
    CHECK(multiply(spec, x, y + w) == multiply(spec, x, y) + multiply(spec, x, w));
    CHECK(multiply(spec, x, l * y) == l * multiply(spec, x, y));
    CHECK(multiply(spec, y, spec.embed(l)) == l * y);
  }
}

TEST_CASE("multiplication matrix columns are products with basis elements") {
  std::mt19937_64 rng(8);
  auto spec = fixtures::random_spec(fixtures::cubic(), rng);
  auto x = spec.random(rng, 2);
  auto M = mult_matrix(spec, x);
  for (std::size_t j = 0; j < spec.m(); ++j) {
    auto col = multiply(spec, x, spec.basis_z(j));
    for (std::size_t r = 0; r < spec.m(); ++r) CHECK(M(r, j) == col[r]);
  }
}

TEST_CASE("boundary products for m = 3") {
  auto K = fixtures::cubic();
  auto a = K->parse("2"), b = K->parse("t"), c = K->parse("1 + t");
  auto spec = MenichettiSpec::cyclic(K, {a, b, c});
  auto z = spec.basis_z(1), z2 = spec.basis_z(2);
  CHECK(multiply(spec, z, z) == (b / a) * z2);
  CHECK(multiply(spec, z2, z) == (c / a) * spec.one());
  CHECK(multiply(spec, z, z2) == (c / a) * spec.one());
  CHECK(multiply(spec, z2, z2) == (c / b) * z);
}

TEST_CASE("equal parameters give an associative algebra") {
  auto K = fixtures::cubic();
  auto k = K->parse("1 + t");
  auto spec = MenichettiSpec::cyclic(K, {k, k, k});
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 5; ++rep) {
    auto x = spec.random(rng, 2), y = spec.random(rng, 2), w = spec.random(rng, 2);
    CHECK(associator(spec, x, y, w).is_zero());
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(spec.cocycle(i, j).is_one());
}

TEST_CASE("scaling all parameters leaves the cocycle unchanged") {
  std::mt19937_64 rng(10);
  for (const auto& ext : fields()) {
    auto spec = fixtures::random_spec(ext, rng);
    auto lambda = fixtures::random_nonzero(*ext, rng);
    auto k = spec.k();
    for (auto& e : k) e = lambda * e;
    auto scaled = spec.with_k(k);
    for (std::size_t i = 0; i < spec.m(); ++i)
      for (std::size_t j = 0; j < spec.m(); ++j) CHECK(scaled.cocycle(i, j) == spec.cocycle(i, j));
    CHECK(spec.normalized().k()[0].is_one());
  }
}

TEST_CASE("special family cocycles") {
  auto K = fixtures::gf27();
  auto k = K->parse("t"), kp = K->parse("1 + t");
  auto spec = MenichettiSpec::cyclic(K, {K->one(), k, k * kp});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      auto expected = K->one();
      for (std::size_t s = 0; s < j; ++s) expected = expected * spec.k()[(i + s) % 3] / spec.k()[s];
      CHECK(spec.cocycle(i, j) == expected);
    }
  CHECK(spec.cocycle(1, 1) == k);
  CHECK(spec.cocycle(1, 2) == k * kp);
  CHECK(spec.cocycle(2, 1) == k * kp);
  CHECK(spec.cocycle(2, 2) == kp);
}

TEST_CASE("constructor validation") {
  auto K = fixtures::cubic();
  auto code = [&](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Parse;
  };
  CHECK(code([&] { MenichettiSpec(K, {0, 1, 2}, {K->one(), K->zero(), K->one()}); }) == ErrorCode::ZeroParameter);
  CHECK(code([&] { MenichettiSpec(K, {0, 1}, {K->one(), K->one()}); }) == ErrorCode::DimensionMismatch);
  CHECK(code([&] { MenichettiSpec(K, {1, 0, 2}, {K->one(), K->one(), K->one()}); }) == ErrorCode::IndexOutOfRange);
  CHECK(code([&] { MenichettiSpec(K, {0, 1, 1}, {K->one(), K->one(), K->one()}); }) == ErrorCode::IndexOutOfRange);
  auto other = fixtures::gf27();
  CHECK(code([&] { MenichettiSpec(K, {0, 1, 2}, {K->one(), other->one(), K->one()}); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("element parsing round trip") {
  auto K = fixtures::cubic();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->parse("t"), K->parse("2")});
  auto x = spec.parse("1 + t; 0; -1/3*t^2");
  CHECK(x[0] == K->parse("1 + t"));
  CHECK(x[1].is_zero());
  CHECK(spec.parse(x.to_string()) == x);
  CHECK_THROWS_AS(spec.parse("1; 2"), Error);
}

TEST_CASE("biquadratic: K leaves the left nucleus") {
  // (l z_0 . a z_i) . b z_j picks up tau_j tau_i(l), while l . (a z_i . b z_j) picks up tau_{i+j mod 4}(l).
  auto K = fixtures::biquadratic();
  auto one = K->one();
  auto spec = MenichettiSpec(K, {0, 1, 2, 3}, {one, one, one, one});
  auto l = spec.embed(K->gen());
  auto z1 = spec.basis_z(1);
  CHECK_FALSE(associator(spec, l, z1, z1).is_zero());
  CHECK(associator(spec, l, spec.basis_z(2), spec.basis_z(2)).is_zero());
  CHECK(K->compose(1, 1) == 0);
  auto zz = multiply(spec, z1, z1);
  CHECK(multiply(spec, multiply(spec, l, z1), z1) == K->apply_aut(K->compose(1, 1), K->gen()) * zz);
  CHECK(multiply(spec, l, zz) == K->apply_aut(2, K->gen()) * zz);
  CHECK_THROWS_AS(ke_faithful(spec), Error);
}

TEST_CASE("structure facts") {
  std::mt19937_64 rng(12);
  for (const auto& ext : {fixtures::gf8(), fixtures::gf27(), fixtures::cubic()}) {
    auto spec = fixtures::random_spec(ext, rng);
    auto faith = ke_faithful(spec);
    CHECK(faith.faithful);
    CHECK(faith.rank == spec.m() * spec.m());
    CHECK(centralizer_of_k(spec).size() == spec.m());
    auto kspace = embedded_k(spec);
    auto left = nucleus(spec, NucleusPart::Left);
    for (const auto& v : kspace) CHECK(in_subspace(left, v));
  }
}

TEST_CASE("table nucleus against brute force") {
  auto K = fixtures::gf9();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->parse("t")});
  auto table = structure_table(spec);
  auto center = center_by_enumeration(table);
  auto sub = nucleus(table, NucleusPart::Center);
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < sub.size(); ++i) expected *= 3;
  CHECK(center.size() == expected);
  for (const auto& v : center) CHECK(in_subspace(sub, v));
  CHECK_FALSE(is_associative(table));
}
