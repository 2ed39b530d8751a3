#include "doctest.h"

#include "fixtures.hpp"
#include "menichetti/determinant.hpp"
#include "oracles.hpp"

using namespace menichetti;

TEST_CASE("det_general against the permutation expansion") {
  std::mt19937_64 rng(21);
  for (const auto& cfg : fixtures::det_configs()) {
    CAPTURE(cfg.name);
    for (int rep = 0; rep < 8; ++rep) {
      auto spec = fixtures::random_spec(cfg.ext, rng);
      auto x = spec.random(rng, 2);
      CHECK(det_general(spec, x) == oracle::det_by_products(spec, x));
    }
  }
}

TEST_CASE("det of z_0 scaled by l is the norm power") {
  std::mt19937_64 rng(22);
  for (const auto& cfg : fixtures::det_configs()) {
    auto spec = fixtures::random_spec(cfg.ext, rng);
    auto l = fixtures::random_nonzero(*cfg.ext, rng);
    FieldElement conj = cfg.ext->one();
    for (std::size_t i = 0; i < cfg.ext->aut_count(); ++i) conj = conj * cfg.ext->apply_aut(i, l);
    CHECK(det_general(spec, spec.embed(l)) == conj);
  }
}

TEST_CASE("closed forms agree with det_general") {
  std::mt19937_64 rng(23);
  for (const auto& cfg : fixtures::det_configs()) {
    if (!cfg.ext->is_cyclic()) continue;
    CAPTURE(cfg.name);
    for (int rep = 0; rep < 10; ++rep) {
      auto spec = fixtures::random_spec(cfg.ext, rng);
      auto x = spec.random(rng, 2);
      auto general = det_general(spec, x);
      CHECK((cfg.ext->degree() == 3 ? det_m3(spec, x) : det_m4_cyclic(spec, x)) == general);
    }
  }
}

TEST_CASE("cyclic groups: substitution invariance, and det in F for parameters in F") {
  std::mt19937_64 rng(24);
  for (const auto& cfg : fixtures::det_configs()) {
    if (!cfg.ext->is_cyclic()) continue;
    CAPTURE(cfg.name);
    auto spec = fixtures::random_spec(cfg.ext, rng);
    auto x = spec.random(rng, 2);
    for (std::size_t a = 0; a < cfg.ext->aut_count(); ++a) CHECK(galois_substitution_invariance(spec, x, a));
    std::vector<FieldElement> k;
    for (std::size_t i = 0; i < spec.m(); ++i) k.push_back(cfg.ext->from_int(i % 2 ? -1 : 1));
    auto base_spec = spec.with_k(k);
    CHECK(cfg.ext->in_base(det_general(base_spec, x)));
  }
}

TEST_CASE("biquadratic: det is not invariant under sigma") {
  // Column j holds tau_j(x_i) in row i + j mod 4, but the twists compose by the Klein law.
  auto K = fixtures::biquadratic();
  auto one = K->one();
  auto spec = MenichettiSpec(K, {0, 1, 2, 3}, {one, one, one, one});
  auto x = spec.parse("1; t; 0; 1 + t^2");
  auto subst = [&](std::size_t a) {
    std::vector<FieldElement> c;
    for (const auto& xi : x.coords()) c.push_back(K->apply_aut(a, xi));
    return oracle::det_by_products(spec, AlgElement(c));
  };
  auto d = oracle::det_by_products(spec, x);
  CHECK(d == det_general(spec, x));
  CHECK(subst(2) == d);
  CHECK(subst(1) != d);
  CHECK_FALSE(galois_substitution_invariance(spec, x, 1));
  CHECK(det_m4_biquadratic(spec, spec.one()).is_one());
}

TEST_CASE("det report on a fixed m = 3 example") {
  auto K = fixtures::cubic();
  auto spec = MenichettiSpec::cyclic(K, {K->parse("2"), K->parse("t"), K->parse("1 + t")});
  auto rep = det_report(spec, spec.one(), DetFormula::M3);
  CHECK(rep.match);
  CHECK(rep.general.is_one());
  auto z = spec.basis_z(1);
  // det of z is the product of the cocycle entries around the cycle.
  CHECK(det_general(spec, z) == oracle::det_by_products(spec, z));
  CHECK_FALSE(det_general(spec, z).is_zero());
}

TEST_CASE("closed forms reject the wrong shape") {
  auto K = fixtures::cubic();
  auto spec = MenichettiSpec::cyclic(K, {K->one(), K->one(), K->one()});
  CHECK_THROWS_AS(det_m4_cyclic(spec, spec.one()), Error);
  CHECK_THROWS_AS(det_m4_biquadratic(spec, spec.one()), Error);
}

TEST_CASE("special pattern detection and decomposition") {
  auto K = fixtures::gf27();
  auto lambda = K->parse("2 + t");
  std::size_t tried = 0;
  for (const auto& kp : K->elements()) {
    if (K->in_base(kp)) continue;
    auto k = K->one() + kp;
    auto spec = MenichettiSpec::cyclic(K, {lambda, lambda * k, lambda * k * kp});
    auto pat = special_pattern(spec);
    REQUIRE(pat.has_value());
    CHECK(pat->k == k);
    CHECK(pat->kprime == kp);
    auto alpha = solve_alpha(k, kp);
    REQUIRE(alpha.has_value());
    CHECK(K->from_base(alpha->first) + K->from_base(alpha->second) * kp == k);
    if (!K->linearly_independent({K->one(), k * kp, k * kp * kp})) {
      CHECK_THROWS_AS(special_decomposition(spec, spec.one()), Error);
      continue;
    }
    ++tried;
    std::mt19937_64 rng(25);
    for (int rep = 0; rep < 5; ++rep) {
      auto x = spec.random(rng, 2);
      auto d = special_decomposition(spec, x);
      CHECK(d.recombines);
      CHECK(d.f0_is_norm);
      CHECK(d.boundary_ok);
    }
  }
  CHECK(tried > 0);
  auto K4 = fixtures::gf16();
  auto plain = MenichettiSpec::cyclic(K4, {K4->one(), K4->parse("t"), K4->parse("1 + t"), K4->one()});
  CHECK_FALSE(special_pattern(plain).has_value());
}
