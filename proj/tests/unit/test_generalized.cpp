#include "doctest.h"

#include "fixtures.hpp"
#include "menichetti/generalized.hpp"
#include "oracles.hpp"

using namespace menichetti;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Parse;
}

GenElement lift(const AlgElement& x) {
  GenElement out;
  for (const auto& c : x.coords()) out.push_back({c});
  return out;
}

}  // namespace

TEST_CASE("D = K reduces to the ordinary product") {
  std::mt19937_64 rng(31);
  for (auto K : {fixtures::gf27(), fixtures::cubic(), fixtures::biquadratic()}) {
    auto spec = fixtures::random_spec(K, rng);
    auto gen = GeneralizedSpec::from_menichetti(spec);
    CHECK(gen.f_dimension() == spec.m() * spec.m());
    for (int rep = 0; rep < 10; ++rep) {
      auto x = spec.random(rng, 2), y = spec.random(rng, 2);
      CHECK(gen_multiply(gen, lift(x), lift(y)) == lift(multiply(spec, x, y)));
    }
  }
}

TEST_CASE("matrix and quaternion algebras are associative with a unit") {
  auto K = fixtures::cubic();
  auto m2 = CSA::matrix_algebra(K, 2);
  CHECK(m2.dim() == 4);
  auto q = CSA::quaternion(K, K->from_int(-1), K->parse("t"));
  CHECK(q.dim() == 4);
  auto i = q.basis(1), j = q.basis(2), ij = q.basis(3);
  CHECK(q.multiply(i, j) == ij);
  CHECK(q.multiply(j, i) == q.scale(K->from_int(-1), ij));
  CHECK(q.multiply(i, i) == q.scale(K->from_int(-1), q.one()));
  CHECK(q.multiply(j, j) == q.scale(K->parse("t"), q.one()));
  CHECK(q.multiply(ij, ij) == q.scale(K->parse("t"), q.one()));
  CHECK(code_of([&] { CSA::quaternion(K, K->zero(), K->one()); }) == ErrorCode::ZeroParameter);
}

TEST_CASE("bad structure tables are rejected") {
  auto C = GaloisExtension::trivial(BaseField::prime(3));
  auto e = [&](int a, int b, int c) { return CSA::Elem{C->from_int(a), C->from_int(b), C->from_int(c)}; };
  // basis 1, u, v with u u = v, u v = 0, v u = 1
  std::vector<std::vector<CSA::Elem>> table{
      {e(1, 0, 0), e(0, 1, 0), e(0, 0, 1)},
      {e(0, 1, 0), e(0, 0, 1), e(0, 0, 0)},
      {e(0, 0, 1), e(1, 0, 0), e(0, 0, 0)}};
  CHECK(code_of([&] { CSA(C, 0, table); }) == ErrorCode::NotAssociative);
  auto no_unit = table;
  no_unit[0][1] = e(0, 0, 0);
  CHECK(code_of([&] { CSA(C, 0, no_unit); }) == ErrorCode::NoUnit);
  auto ragged = table;
  ragged[1].pop_back();
  CHECK(code_of([&] { CSA(C, 0, ragged); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("automorphism lists are validated") {
  auto K = fixtures::gf9();
  auto q = CSA::quaternion(K, K->from_int(-1), K->from_int(-1));
  std::vector<FieldElement> k{K->one(), K->gen()};
  auto ident = [&](std::size_t r) { return q.basis(r); };
  DAutomorphism id{{ident(0), ident(1), ident(2), ident(3)}, 0};
  DAutomorphism frob{{ident(0), ident(1), ident(2), ident(3)}, 1};
  CHECK_NOTHROW(GeneralizedSpec(q, {id, frob}, k));

  DAutomorphism collapse{{ident(0), ident(1), ident(1), ident(3)}, 1};
  CHECK(code_of([&] { GeneralizedSpec(q, {id, collapse}, k); }) == ErrorCode::NotAHomomorphism);
  DAutomorphism moves_unit{{q.scale(K->from_int(2), ident(0)), ident(1), ident(2), ident(3)}, 1};
  CHECK(code_of([&] { GeneralizedSpec(q, {id, moves_unit}, k); }) == ErrorCode::NotAHomomorphism);
  CHECK(code_of([&] { GeneralizedSpec(q, {frob, id}, k); }) == ErrorCode::BadAutomorphism);
  CHECK(code_of([&] { GeneralizedSpec(q, {id, id}, k); }) == ErrorCode::NotAGroup);
  CHECK(code_of([&] { GeneralizedSpec(q, {id, frob}, {K->one(), K->zero()}); }) == ErrorCode::ZeroParameter);
}

TEST_CASE("tensor products match the generalized construction") {
  auto gf3 = GaloisExtension::trivial(BaseField::prime(3));
  auto K9 = fixtures::gf9();
  auto spec9 = MenichettiSpec::cyclic(K9, {K9->one(), K9->gen()});
  auto r1 = tensor_check(CSA::matrix_algebra(gf3, 2), spec9);
  CHECK(r1.isomorphic);
  CHECK(r1.pairs == 256);
  CHECK(r1.mismatches == 0);

  auto Q = GaloisExtension::trivial(BaseField::rationals());
  auto K = fixtures::cubic();
  auto spec = MenichettiSpec::cyclic(K, {K->from_int(2), K->gen(), K->parse("1 + t")});
  auto r2 = tensor_check(CSA::quaternion(Q, Q->one(), Q->one()), spec);
  CHECK(r2.isomorphic);
  CHECK(r2.pairs == 1296);
}

TEST_CASE("extending scalars needs a central algebra over the base") {
  auto K = fixtures::gf9();
  auto q = CSA::quaternion(K, K->one(), K->one());
  CHECK(code_of([&] { q.extend_scalars(fixtures::gf27()); }) == ErrorCode::CenterMismatch);
  auto m2 = CSA::matrix_algebra(GaloisExtension::trivial(BaseField::prime(3)), 2);
  auto ext = m2.extend_scalars(K);
  CHECK(ext.dim() == 4);
  CHECK(ext.center()->same_as(*K));
}
