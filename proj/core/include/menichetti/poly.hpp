#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "menichetti/base_field.hpp"

namespace menichetti {

// Dense univariate polynomial over a base field, coefficients low degree first.
class Poly {
 public:
  explicit Poly(BaseFieldPtr field) : field_(std::move(field)) {}
  Poly(BaseFieldPtr field, std::vector<Rep> coeffs);
  Poly(const Scalar& constant);

  static Poly variable(const BaseFieldPtr& field);
  static Poly monomial(const Scalar& c, std::size_t degree);

  const BaseFieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rep>& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const;
  Scalar leading() const;
  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  std::string to_string(std::string_view var = "x") const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator%(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  BaseFieldPtr field_;
  std::vector<Rep> c_;

  void trim();
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);

struct ExtendedGcd {
  Poly g, s, t;  // g = s*a + t*b, g monic
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod);

// Finite base: Rabin test. Q: complete for degree <= 4, Unsupported above.
bool is_irreducible(const Poly& f);

// Monic irreducible factors of a squarefree polynomial over a finite field of odd order.
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t seed = 1);

}  // namespace menichetti
