#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "menichetti/extension.hpp"
#include "menichetti/matrix.hpp"
#include "menichetti/structure.hpp"

namespace menichetti {

// x = x_0 z_0 + ... + x_{m-1} z_{m-1} with x_i in K.
class AlgElement {
 public:
  explicit AlgElement(std::vector<FieldElement> coords);

  std::size_t size() const { return c_.size(); }
  const FieldElement& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<FieldElement>& coords() const { return c_; }
  bool is_zero() const;
  std::string to_string() const;  // "x0; x1; ..."

  AlgElement& operator+=(const AlgElement& o);
  AlgElement& operator-=(const AlgElement& o);
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  // Coordinate-wise scaling.
  friend AlgElement operator*(const FieldElement& l, const AlgElement& x);
  bool operator==(const AlgElement& o) const { return c_ == o.c_; }
  bool operator!=(const AlgElement& o) const { return !(*this == o); }

 private:
  std::vector<FieldElement> c_;
};

class MenichettiSpec {
 public:
  MenichettiSpec(ExtensionPtr ext, std::vector<std::size_t> tau, std::vector<FieldElement> k);
  // tau = (id, s, s^2, ...) for the automorphism index s (default: the first generator of order m).
  static MenichettiSpec cyclic(ExtensionPtr ext, std::vector<FieldElement> k);

  const ExtensionPtr& ext() const { return ext_; }
  std::size_t m() const { return tau_.size(); }
  const std::vector<std::size_t>& tau() const { return tau_; }
  const std::vector<FieldElement>& k() const { return k_; }
  const FieldElement& cocycle(std::size_t i, std::size_t j) const;
  // True when tau[i] = tau[1]^i for all i.
  bool tau_is_cyclic() const;
  // Same tau, parameters divided by k_0; defines the same algebra.
  MenichettiSpec normalized() const;
  MenichettiSpec with_k(std::vector<FieldElement> k) const { return {ext_, tau_, std::move(k)}; }

  AlgElement zero() const;
  AlgElement one() const;
  AlgElement basis_z(std::size_t i) const;
  AlgElement embed(const FieldElement& l) const;  // l z_0
  AlgElement parse(std::string_view text) const;  // "x0; x1; ..."
  AlgElement random(std::mt19937_64& rng, int height = 3) const;
  std::string describe() const;

 private:
  ExtensionPtr ext_;
  std::vector<std::size_t> tau_;
  std::vector<FieldElement> k_;
  std::vector<FieldElement> c_;
};

FieldElement cocycle(const MenichettiSpec& spec, std::size_t i, std::size_t j);
Matrix<FieldElement> mult_matrix(const MenichettiSpec& spec, const AlgElement& x);
AlgElement multiply(const MenichettiSpec& spec, const AlgElement& x, const AlgElement& y);
AlgElement associator(const MenichettiSpec& spec, const AlgElement& x, const AlgElement& y, const AlgElement& z);

// F-coordinates: index i*m + s is the coefficient of t^s z_i.
Vec f_coords(const MenichettiSpec& spec, const AlgElement& x);
AlgElement from_f_coords(const MenichettiSpec& spec, const Vec& v);
StructureTable structure_table(const MenichettiSpec& spec);
Subspace nucleus(const MenichettiSpec& spec, NucleusPart part);
Subspace embedded_k(const MenichettiSpec& spec);
Subspace centralizer_of_k(const MenichettiSpec& spec);

struct Faithfulness {
  bool faithful = false;
  std::size_t rank = 0;
};
Faithfulness ke_faithful(const MenichettiSpec& spec);

StructureTable opposite(const MenichettiSpec& spec);
// (K/F, sigma, k): K-basis z^i with (a z^i)(b z^j) = a sigma^i(b) z^(i+j), z^m = k.
StructureTable nonassociative_cyclic_table(const ExtensionPtr& ext, std::size_t sigma, const FieldElement& k);
// Pattern (1, ..., 1, k) with cyclic tau: compares A^op with (K/F, tau[1], k).
bool cyclic_algebra_compare(const MenichettiSpec& spec);

struct SwapCheck {
  bool basis_pairs = false;  // the nine products z^i z^j
  bool full = false;         // every F-basis pair
  bool full_opposite = false;
};
// Spec (a, c, c) with m = 3: x0 + x1 z + x2 z^2 -> x0 + x2 z + x1 z^2 from (K/F, sigma^2, c a^-1).
SwapCheck coordinate_swap_check(const MenichettiSpec& spec);

}  // namespace menichetti
