#include "fixtures.hpp"

#include <numeric>

#include "menichetti/poly.hpp"

namespace menichetti::fixtures {

namespace {

Poly poly(const BaseFieldPtr& f, const std::vector<long long>& c) {
  std::vector<Rep> r;
  for (auto v : c) r.push_back(f->rep_from_int(v));
  return Poly(f, std::move(r));
}

}  // namespace

ExtensionPtr galois_field(std::uint32_t p, const std::vector<long long>& modulus) {
  auto f = BaseField::prime(p);
  return GaloisExtension::ring(f, "t", poly(f, modulus))->with_frobenius();
}

ExtensionPtr gf9() {
  static const auto k = galois_field(3, {1, 0, 1});
  return k;
}
ExtensionPtr gf8() {
  static const auto k = galois_field(2, {1, 1, 0, 1});
  return k;
}
ExtensionPtr gf27() {
  static const auto k = galois_field(3, {1, 2, 0, 1});
  return k;
}
ExtensionPtr gf16() {
  static const auto k = galois_field(2, {1, 1, 0, 0, 1});
  return k;
}
ExtensionPtr gf81() {
  static const auto k = galois_field(3, {2, 1, 0, 0, 1});
  return k;
}

ExtensionPtr gf64_over_gf4() {
  static const auto k = [] {
    auto f4 = BaseField::galois(2, {1, 1, 1});
    Poly m(f4, {f4->generator().rep(), f4->zero_rep(), f4->zero_rep(), f4->one_rep()});
    return GaloisExtension::ring(f4, "t", m)->with_frobenius();
  }();
  return k;
}

ExtensionPtr cubic() {
  static const auto k = [] {
    auto q = BaseField::rationals();
    auto r = GaloisExtension::ring(q, "t", poly(q, {-1, -3, 0, 1}));
    return r->with_cyclic_generator(r->parse("2 - t^2"));
  }();
  return k;
}

ExtensionPtr cyclic_quartic() {
  static const auto k = [] {
    auto q = BaseField::rationals();
    auto r = GaloisExtension::ring(q, "t", poly(q, {2, 0, -4, 0, 1}));
    return r->with_cyclic_generator(r->parse("t^3 - 3*t"));
  }();
  return k;
}

ExtensionPtr biquadratic() {
  static const auto k = [] {
    auto q = BaseField::rationals();
    auto r = GaloisExtension::ring(q, "t", poly(q, {1, 0, -10, 0, 1}));
    return r->with_automorphisms({r->parse("t"), r->parse("t^3 - 10*t"), r->parse("-t^3 + 10*t"), r->parse("-t")});
  }();
  return k;
}

std::vector<Config> det_configs() {
  return {{"GF(8)/GF(2)", gf8()},       {"GF(27)/GF(3)", gf27()},          {"GF(16)/GF(2)", gf16()},
          {"cubic cyclic", cubic()},    {"cyclic quartic", cyclic_quartic()}, {"Q(sqrt2,sqrt3)", biquadratic()}};
}

std::vector<std::size_t> identity_tau(std::size_t m) {
  std::vector<std::size_t> t(m);
  std::iota(t.begin(), t.end(), 0);
  return t;
}

FieldElement random_nonzero(const GaloisExtension& k, std::mt19937_64& rng, int height) {
  for (;;) {
    auto x = k.random(rng, height);
    if (!x.is_zero()) return x;
  }
}

MenichettiSpec random_spec(const ExtensionPtr& k, std::mt19937_64& rng, int height) {
  std::vector<FieldElement> ks;
  for (std::size_t i = 0; i < k->degree(); ++i) ks.push_back(random_nonzero(*k, rng, height));
  return MenichettiSpec(k, identity_tau(k->degree()), ks);
}

}  // namespace menichetti::fixtures
