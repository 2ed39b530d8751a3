#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "menichetti/error.hpp"

namespace menichetti {

// Finite-field elements are small integer codes, rationals are GMP values.
using Rep = std::variant<std::uint32_t, mpq_class>;

class BaseField;
class Scalar;
using BaseFieldPtr = std::shared_ptr<const BaseField>;

// The base field F: either Q or a finite field GF(p^e) given by a prime and an
// irreducible monic modulus over GF(p).
class BaseField : public std::enable_shared_from_this<BaseField> {
  struct Token {};

 public:
  static BaseFieldPtr rationals();
  static BaseFieldPtr prime(std::uint32_t p);
  // modulus lists coefficients of a monic irreducible polynomial over GF(p), low degree first.
  static BaseFieldPtr galois(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string var = "s");

  BaseField(Token, std::uint32_t p, std::vector<std::uint32_t> modulus, std::string var);

  bool is_rational() const { return p_ == 0; }
  bool is_finite() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return e_; }
  std::uint64_t order() const { return q_; }
  const std::string& var() const { return var_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string name() const;
  bool same_as(const BaseField& other) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_rational(const mpq_class& v) const;
  // The adjoined generator s of GF(p^e); throws Unsupported for prime fields and Q.
  Scalar generator() const;
  Scalar element(std::uint64_t code) const;
  std::uint32_t code(const Scalar& s) const;
  std::vector<Scalar> elements() const;

  Rep zero_rep() const;
  Rep one_rep() const;
  Rep rep_from_int(long long v) const;
  Rep add(const Rep& a, const Rep& b) const;
  Rep sub(const Rep& a, const Rep& b) const;
  Rep mul(const Rep& a, const Rep& b) const;
  Rep neg(const Rep& a) const;
  Rep inv(const Rep& a) const;
  bool is_zero(const Rep& a) const;
  bool equal(const Rep& a, const Rep& b) const;
  std::string format(const Rep& a) const;
  // Digits of a GF(p^e) code over GF(p), low first.
  std::vector<std::uint32_t> digits(std::uint32_t code) const;

 private:
  std::uint32_t p_ = 0;
  std::uint32_t e_ = 1;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::string var_;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;

  void build_tables();
};

class Scalar {
 public:
  Scalar(BaseFieldPtr field, Rep rep) : field_(std::move(field)), rep_(std::move(rep)) {}

  const BaseFieldPtr& field() const { return field_; }
  const Rep& rep() const { return rep_; }

  bool is_zero() const { return field_->is_zero(rep_); }
  bool is_one() const { return field_->equal(rep_, field_->one_rep()); }
  Scalar inv() const { return {field_, field_->inv(rep_)}; }
  Scalar pow(long long e) const;
  std::string to_string() const { return field_->format(rep_); }
  // Only meaningful over Q.
  const mpq_class& rational() const;

  Scalar operator-() const { return {field_, field_->neg(rep_)}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  BaseFieldPtr field_;
  Rep rep_;

  void check(const Scalar& o) const;
};

inline Scalar zero_like(const Scalar& s) { return s.field()->zero(); }
inline Scalar one_like(const Scalar& s) { return s.field()->one(); }

bool is_prime(std::uint64_t n);

}  // namespace menichetti
