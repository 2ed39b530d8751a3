#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "menichetti/base_field.hpp"

namespace menichetti {

using Vec = std::vector<Scalar>;
// F-subspace as a reduced row echelon basis.
using Subspace = std::vector<Vec>;

// Structure constants of a finite-dimensional F-algebra: e_a e_b = sum_c at(a,b,c) e_c.
class StructureTable {
 public:
  StructureTable(BaseFieldPtr field, std::size_t dim);

  std::size_t dim() const { return n_; }
  const BaseFieldPtr& field() const { return field_; }
  Scalar at(std::size_t a, std::size_t b, std::size_t c) const { return {field_, d_[(a * n_ + b) * n_ + c]}; }
  void set(std::size_t a, std::size_t b, std::size_t c, const Scalar& s) { d_[(a * n_ + b) * n_ + c] = s.rep(); }
  Vec product(std::size_t a, std::size_t b) const;
  Vec multiply(const Vec& x, const Vec& y) const;
  Vec basis_vector(std::size_t a) const;
  StructureTable opposite() const;
  bool operator==(const StructureTable& o) const;
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const StructureTable& o) const;

 private:
  BaseFieldPtr field_;
  std::size_t n_;
  std::vector<Rep> d_;
};

enum class NucleusPart { Left, Middle, Right, Full, Center };

Subspace nucleus(const StructureTable& t, NucleusPart part);
// {a : a e = e a for each listed e}
Subspace commutant(const StructureTable& t, const std::vector<Vec>& elements);
Subspace intersect(const Subspace& a, const Subspace& b, std::size_t dim, const BaseFieldPtr& field);
bool in_subspace(const Subspace& s, const Vec& v);
bool is_associative(const StructureTable& t);
// Every central element of an algebra over a finite field, found by brute force.
std::vector<Vec> center_by_enumeration(const StructureTable& t, std::uint64_t max_elements = 6561);
// Pairs (a, b) of basis indices on which the linear map with the given basis images fails to be multiplicative.
std::vector<std::pair<std::size_t, std::size_t>> homomorphism_failures(const StructureTable& src, const StructureTable& dst,
                                                                       const std::vector<Vec>& images);

}  // namespace menichetti
