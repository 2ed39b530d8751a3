#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "menichetti/algebra.hpp"

namespace oracle {

using namespace menichetti;

// Sum over permutations with explicit signs; only for n <= 5.
template <class T>
T leibniz(const std::vector<std::vector<T>>& a, T zero) {
  const std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = zero;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    T term = a[0][p[0]];
    for (std::size_t i = 1; i < n; ++i) term = term * a[i][p[i]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Column j of the left multiplication matrix is x * z_j.
inline FieldElement det_by_products(const MenichettiSpec& spec, const AlgElement& x) {
  const std::size_t m = spec.m();
  std::vector<std::vector<FieldElement>> a(m, std::vector<FieldElement>(m, spec.ext()->zero()));
  for (std::size_t j = 0; j < m; ++j) {
    auto col = multiply(spec, x, spec.basis_z(j));
    for (std::size_t r = 0; r < m; ++r) a[r][j] = col[r];
  }
  return leibniz(a, spec.ext()->zero());
}

// N(a) as the determinant of multiplication by a on the power basis.
inline Scalar norm_by_matrix(const FieldElement& a) {
  const auto& K = *a.extension();
  const std::size_t m = K.degree();
  std::vector<std::vector<Scalar>> mat(m, std::vector<Scalar>(m, K.base()->zero()));
  FieldElement basis = K.one();
  for (std::size_t j = 0; j < m; ++j) {
    auto col = a * basis;
    for (std::size_t r = 0; r < m; ++r) mat[r][j] = col.coeff(r);
    basis = basis * K.gen();
  }
  return leibniz(mat, K.base()->zero());
}

// Product computed from the defining rule (x_i z_i)(y_j z_j) = c_{ij} tau_j(x_i) y_j z_{i+j}.
inline AlgElement product_by_rule(const MenichettiSpec& spec, const AlgElement& x, const AlgElement& y) {
  const std::size_t m = spec.m();
  const auto& K = *spec.ext();
  std::vector<FieldElement> out(m, K.zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      FieldElement num = K.one(), den = K.one();
      for (std::size_t s = 0; s < j; ++s) {
        den = den * spec.k()[s];
        num = num * spec.k()[(i + s) % m];
      }
      out[(i + j) % m] = out[(i + j) % m] + num / den * K.apply_aut(spec.tau()[j], x[i]) * y[j];
    }
  return AlgElement(out);
}

}  // namespace oracle
