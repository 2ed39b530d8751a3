#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "menichetti/base_field.hpp"
#include "menichetti/poly.hpp"

namespace menichetti {

class GaloisExtension;
class FieldElement;
using ExtensionPtr = std::shared_ptr<const GaloisExtension>;

// K = F[t]/(f) together with an abelian Galois group G = {tau_0 = id, ..., tau_{m-1}},
// each automorphism given by the image of t.
class GaloisExtension : public std::enable_shared_from_this<GaloisExtension> {
  struct Token {};

 public:
  // The field K alone; its automorphism list only contains the identity until one
  // of the with_* builders is used.
  static ExtensionPtr ring(BaseFieldPtr base, std::string var, const Poly& modulus);
  static ExtensionPtr trivial(BaseFieldPtr base, std::string var = "t");

  ExtensionPtr with_automorphisms(const std::vector<FieldElement>& images) const;
  ExtensionPtr with_cyclic_generator(const FieldElement& image) const;
  ExtensionPtr with_frobenius() const;

  GaloisExtension(Token, BaseFieldPtr base, std::string var, Poly modulus);

  const BaseFieldPtr& base() const { return base_; }
  const std::string& var() const { return var_; }
  const Poly& modulus() const { return modulus_; }
  std::size_t degree() const { return m_; }
  bool has_group() const { return images_.size() == m_; }
  bool is_finite() const { return base_->is_finite(); }
  std::uint64_t order() const;
  bool same_as(const GaloisExtension& other) const;
  std::string describe() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement gen() const;
  FieldElement from_int(long long v) const;
  FieldElement from_base(const Scalar& s) const;
  FieldElement from_coeffs(const std::vector<Scalar>& c) const;
  FieldElement from_reps(std::vector<Rep> c) const;
  FieldElement from_poly(const Poly& p) const;
  FieldElement parse(std::string_view text) const;
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(const FieldElement& a) const;
  std::vector<FieldElement> elements() const;
  FieldElement random(std::mt19937_64& rng, int height = 3) const;

  std::size_t aut_count() const { return images_.size(); }
  const FieldElement& aut_image(std::size_t i) const;
  FieldElement apply_aut(std::size_t i, const FieldElement& a) const;
  std::size_t compose(std::size_t i, std::size_t j) const;  // index of tau_i o tau_j
  std::size_t aut_inverse(std::size_t i) const;
  std::size_t aut_order(std::size_t i) const;
  std::size_t aut_power(std::size_t i, long e) const;
  bool is_cyclic() const;

  Scalar norm(const FieldElement& a) const;
  Scalar trace(const FieldElement& a) const;
  // Sum of tau_r(a) over coset representatives r of the subgroup H; a must be H-fixed.
  FieldElement partial_trace(const FieldElement& a, const std::vector<std::size_t>& subgroup) const;
  bool in_base(const FieldElement& a) const;
  Scalar to_base(const FieldElement& a) const;
  // F-linear independence of the given elements of K.
  bool linearly_independent(const std::vector<FieldElement>& v) const;

  // Internal arithmetic on coefficient vectors of length m.
  std::vector<Rep> mul_reps(const std::vector<Rep>& a, const std::vector<Rep>& b) const;
  std::string format(const std::vector<Rep>& a) const;

 private:
  BaseFieldPtr base_;
  std::string var_;
  Poly modulus_;
  std::size_t m_;
  std::vector<std::vector<Rep>> reduction_;  // t^(m+k) mod f
  std::vector<FieldElement> images_;
  std::vector<std::vector<std::vector<Rep>>> aut_matrix_;  // [i][s] = coeffs of tau_i(t)^s
  std::vector<std::size_t> compose_;

  void install_group(const std::vector<FieldElement>& images);
  FieldElement substitute(const FieldElement& a, const FieldElement& x) const;
};

class FieldElement {
 public:
  FieldElement(ExtensionPtr ext, std::vector<Rep> c) : ext_(std::move(ext)), c_(std::move(c)) {}

  const ExtensionPtr& extension() const { return ext_; }
  const std::vector<Rep>& reps() const { return c_; }
  Scalar coeff(std::size_t i) const { return {ext_->base(), c_[i]}; }
  std::vector<Scalar> coeffs() const;
  bool is_zero() const;
  bool is_one() const;
  FieldElement inv() const;
  FieldElement pow(long long e) const;
  std::string to_string() const { return ext_->format(c_); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Scalar& s);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inv(); }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Scalar& s) { return a *= s; }
  friend FieldElement operator*(const Scalar& s, FieldElement a) { return a *= s; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

 private:
  ExtensionPtr ext_;
  std::vector<Rep> c_;

  void check(const FieldElement& o) const;
};

inline FieldElement zero_like(const FieldElement& a) { return a.extension()->zero(); }
inline FieldElement one_like(const FieldElement& a) { return a.extension()->one(); }

}  // namespace menichetti
