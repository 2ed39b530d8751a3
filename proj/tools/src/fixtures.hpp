#pragma once

#include <random>
#include <string>
#include <vector>

#include "menichetti/algebra.hpp"

namespace menichetti::fixtures {

// GF(p^m)/GF(p) with the Frobenius group; modulus coefficients low degree first.
ExtensionPtr galois_field(std::uint32_t p, const std::vector<long long>& modulus);
ExtensionPtr gf9();
ExtensionPtr gf8();
ExtensionPtr gf27();
ExtensionPtr gf16();
ExtensionPtr gf81();
ExtensionPtr gf64_over_gf4();
// Q[t]/(t^3 - 3t - 1), sigma(t) = 2 - t^2.
ExtensionPtr cubic();
// Q[t]/(t^4 - 4t^2 + 2), sigma(t) = t^3 - 3t.
ExtensionPtr cyclic_quartic();
// Q(sqrt2, sqrt3) = Q[t]/(t^4 - 10t^2 + 1), listed as (id, sigma, tau, sigma tau).
ExtensionPtr biquadratic();

struct Config {
  std::string name;
  ExtensionPtr ext;
};
std::vector<Config> det_configs();

std::vector<std::size_t> identity_tau(std::size_t m);
FieldElement random_nonzero(const GaloisExtension& k, std::mt19937_64& rng, int height = 2);
MenichettiSpec random_spec(const ExtensionPtr& k, std::mt19937_64& rng, int height = 2);

}  // namespace menichetti::fixtures
