#include "doctest.h"

#include "fixtures.hpp"
#include "menichetti/matrix.hpp"
#include "menichetti/poly.hpp"
#include "menichetti/spec_file.hpp"
#include "oracles.hpp"

using namespace menichetti;

TEST_CASE("prime field arithmetic") {
  auto f = BaseField::prime(7);
  CHECK(f->order() == 7);
  CHECK(f->from_int(3) * f->from_int(5) == f->from_int(1));
  CHECK(f->from_int(3).inv() == f->from_int(5));
  CHECK(f->from_int(-1) == f->from_int(6));
  CHECK_THROWS_AS(BaseField::prime(9), Error);
}

TEST_CASE("GF(4) as a base field") {
  auto f = BaseField::galois(2, {1, 1, 1});
  CHECK(f->order() == 4);
  auto s = f->generator();
  CHECK(s * s == s + f->one());
  CHECK(s.pow(3) == f->one());
  for (const auto& a : f->elements())
    if (!a.is_zero()) CHECK(a * a.inv() == f->one());
}

TEST_CASE("extension arithmetic by hand") {
  auto gf9 = fixtures::gf9();
  auto t = gf9->gen();
  CHECK(t.inv() == gf9->from_int(2) * t);
  CHECK(t * t == gf9->from_int(-1));

  auto k = fixtures::cubic();
  auto u = k->gen();
  CHECK(u * (u * u) == k->from_int(3) * u + k->one());
  CHECK(k->parse("t^3") == k->parse("3*t + 1"));
}

TEST_CASE("canonical printing is ascending") {
  auto k = fixtures::cubic();
  CHECK(k->parse("t^2 + 1").to_string() == "1 + t^2");
  CHECK(k->parse("-t^2 - t").to_string() == "-t - t^2");
  CHECK(k->parse("t/2").to_string() == "1/2*t");
  CHECK(k->zero().to_string() == "0");
}

TEST_CASE("reducible modulus is rejected") {
  auto f3 = BaseField::prime(3);
  auto check = [&](const char* text) {
    try {
      GaloisExtension::ring(f3, "t", parse_poly(f3, "t", text));
      return false;
    } catch (const Error& e) {
      return e.code() == ErrorCode::NotIrreducible;
    }
  };
  CHECK(check("t^2 + 2"));
  CHECK(check("t^3 + t^2 + t + 1"));
  CHECK_FALSE(check("t^2 + 1"));
  auto q = BaseField::rationals();
  CHECK_THROWS_AS(GaloisExtension::ring(q, "t", parse_poly(q, "t", "t^4 - 4")), Error);
  CHECK_THROWS_AS(GaloisExtension::ring(q, "t", parse_poly(q, "t", "t^4 + 4")), Error);
}

TEST_CASE("a non-root image is not an automorphism") {
  auto k = GaloisExtension::ring(BaseField::rationals(), "t",
                                 parse_poly(BaseField::rationals(), "t", "t^3 - 3*t - 1"));
  try {
    k->with_cyclic_generator(k->parse("1 + t"));
    FAIL("accepted a bad automorphism");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAnAutomorphism);
  }
}

TEST_CASE("automorphisms compose as maps") {
  for (auto ext : {fixtures::gf27(), fixtures::gf16(), fixtures::cubic(), fixtures::cyclic_quartic(), fixtures::biquadratic()}) {
    std::mt19937_64 rng(7);
    const std::size_t n = ext->aut_count();
    REQUIRE(n == ext->degree());
    CHECK(ext->apply_aut(0, ext->gen()) == ext->gen());
    for (int rep = 0; rep < 5; ++rep) {
      auto a = ext->random(rng, 3), b = ext->random(rng, 3);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(ext->apply_aut(i, a * b) == ext->apply_aut(i, a) * ext->apply_aut(i, b));
        CHECK(ext->apply_aut(i, a + b) == ext->apply_aut(i, a) + ext->apply_aut(i, b));
        CHECK(ext->apply_aut(ext->aut_inverse(i), ext->apply_aut(i, a)) == a);
        for (std::size_t j = 0; j < n; ++j)
          CHECK(ext->apply_aut(ext->compose(i, j), a) == ext->apply_aut(i, ext->apply_aut(j, a)));
      }
    }
  }
}

TEST_CASE("norm is multiplicative on all of GF(9) and GF(8)") {
  for (auto ext : {fixtures::gf9(), fixtures::gf8()}) {
    auto els = ext->elements();
    CHECK(els.size() == ext->order());
    for (const auto& a : els)
      for (const auto& b : els) CHECK(ext->norm(a * b) == ext->norm(a) * ext->norm(b));
  }
}

TEST_CASE("norm equals the determinant of multiplication") {
  std::mt19937_64 rng(11);
  for (auto ext : {fixtures::gf27(), fixtures::gf81(), fixtures::gf64_over_gf4(), fixtures::cubic(),
                   fixtures::cyclic_quartic(), fixtures::biquadratic()}) {
    for (int rep = 0; rep < 20; ++rep) {
      auto a = ext->random(rng, 3);
      CHECK(ext->norm(a) == oracle::norm_by_matrix(a));
      FieldElement conj = ext->one();
      for (std::size_t i = 0; i < ext->aut_count(); ++i) conj = conj * ext->apply_aut(i, a);
      REQUIRE(ext->in_base(conj));
      CHECK(ext->to_base(conj) == ext->norm(a));
    }
  }
}

TEST_CASE("generic determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(3);
  auto k = fixtures::cubic();
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::vector<FieldElement>> rows(n, std::vector<FieldElement>(n, k->zero()));
    for (auto& r : rows)
      for (auto& e : r) e = k->random(rng, 2);
    CHECK(determinant(Matrix<FieldElement>::from_rows(rows)) == oracle::leibniz(rows, k->zero()));
  }
  auto f = BaseField::prime(5);
  std::vector<std::vector<Scalar>> sing{{f->from_int(1), f->from_int(2)}, {f->from_int(3), f->from_int(1)}};
  CHECK(determinant(Matrix<Scalar>::from_rows(sing)).is_zero());
}
