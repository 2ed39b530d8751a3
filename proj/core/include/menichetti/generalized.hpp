#pragma once

#include <cstddef>
#include <vector>

#include "menichetti/algebra.hpp"

namespace menichetti {

// Associative unital algebra D with basis e_0, ..., e_{N-1} over a field C, given by structure constants.
// Central simplicity is not checked.
class CSA {
 public:
  using Elem = std::vector<FieldElement>;  // coordinates over C

  // table[i][j] = e_i e_j.
  CSA(ExtensionPtr center, std::size_t unit, std::vector<std::vector<Elem>> table);

  static CSA scalars(ExtensionPtr center);
  // Matrix units E_{rs} at index r*n + s.
  static CSA matrix_algebra(ExtensionPtr center, std::size_t n);
  // Basis 1, i, j, ij with i^2 = a, j^2 = b, ji = -ij.
  static CSA quaternion(ExtensionPtr center, const FieldElement& a, const FieldElement& b);

  const ExtensionPtr& center() const { return c_; }
  std::size_t dim() const { return table_.size(); }
  std::size_t unit() const { return unit_; }
  const Elem& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  Elem zero() const;
  Elem one() const { return basis(unit_); }
  Elem basis(std::size_t i) const;
  Elem add(const Elem& x, const Elem& y) const;
  Elem multiply(const Elem& x, const Elem& y) const;
  Elem scale(const FieldElement& c, const Elem& x) const;
  bool is_zero(const Elem& x) const;
  std::string format(const Elem& x) const;  // "c_0, c_1, ..."

  // D (x)_F K for D central over F, i.e. with a degree-one center over the base of K.
  CSA extend_scalars(const ExtensionPtr& k) const;

 private:
  ExtensionPtr c_;
  std::size_t unit_;
  std::vector<std::vector<Elem>> table_;
};

struct DAutomorphism {
  std::vector<CSA::Elem> images;  // images of the basis
  std::size_t center_aut = 0;     // induced automorphism index of C
};

using GenElement = std::vector<CSA::Elem>;

// (D, sigma, k_0, ..., k_{m-1}) when auts[j] = sigma^j, or (D, G, k_0, ..., k_{m-1}) for a general list.
class GeneralizedSpec {
 public:
  GeneralizedSpec(CSA d, std::vector<DAutomorphism> auts, std::vector<FieldElement> k);
  // D = K itself.
  static GeneralizedSpec from_menichetti(const MenichettiSpec& spec);
  // D = D0 (x)_F K, each tau_j extended by the identity on D0.
  static GeneralizedSpec from_tensor(const CSA& d0, const MenichettiSpec& spec);

  const CSA& csa() const { return d_; }
  std::size_t m() const { return auts_.size(); }
  const std::vector<DAutomorphism>& auts() const { return auts_; }
  const std::vector<FieldElement>& k() const { return k_; }
  const FieldElement& cocycle(std::size_t i, std::size_t j) const { return c_[i * m() + j]; }
  std::size_t f_dimension() const;  // dim_C D * [C:F] * m

  CSA::Elem apply(std::size_t j, const CSA::Elem& x) const;
  GenElement zero() const;
  GenElement one() const;
  // Element with D-basis vector e_r in slot i, scaled by c.
  GenElement basis(std::size_t i, std::size_t r, const FieldElement& c) const;

 private:
  CSA d_;
  std::vector<DAutomorphism> auts_;
  std::vector<FieldElement> k_;
  std::vector<FieldElement> c_;
};

// (x y)_r = sum_j c_{i,j} tau_j(x_i) y_j with i = r - j mod m, products in D in that order.
GenElement gen_multiply(const GeneralizedSpec& spec, const GenElement& x, const GenElement& y);

struct TensorReport {
  bool isomorphic = false;
  std::size_t pairs = 0;
  std::size_t mismatches = 0;
};

// Compares D0 (x)_F A on the basis d_r (x) t^s z_i with (D, tau~, k) under d_r (x) t^s z_i -> (t^s d_r) z_i.
TensorReport tensor_check(const CSA& d0, const MenichettiSpec& spec);

}  // namespace menichetti
