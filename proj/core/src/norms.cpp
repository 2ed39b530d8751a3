#include "menichetti/norms.hpp"

#include <numeric>

namespace menichetti {

namespace {

bool perfect_cube(const mpz_class& n) {
  mpz_class a = abs(n);
  return mpz_root(a.get_mpz_t(), a.get_mpz_t(), 3) != 0;
}

// Calls f on each integer vector of length m with entries in [-h, h]; stops when f returns true.
template <class Fn>
bool for_each_box(std::size_t m, int h, Fn&& f) {
  std::vector<int> v(m, -h);
  for (;;) {
    if (f(v)) return true;
    std::size_t i = 0;
    while (i < m && v[i] == h) v[i++] = -h;
    if (i == m) return false;
    ++v[i];
  }
}

}  // namespace

bool cube_class_member(const Scalar& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "cube class of zero");
  const auto& F = *a.field();
  if (F.is_rational()) return perfect_cube(a.rational().get_num()) && perfect_cube(a.rational().get_den());
  const std::uint64_t q = F.order();
  const std::uint64_t g = std::gcd<std::uint64_t>(3, q - 1);
  return a.pow(static_cast<long long>((q - 1) / g)).is_one();
}

bool cube_class_member(const FieldElement& a) { return cube_class_member(a.extension()->to_base(a)); }

NormSearch norm_group_search(const GaloisExtension& ext, const Scalar& target, int height) {
  if (target.is_zero()) throw Error(ErrorCode::ZeroInput, "norm search for zero");
  if (ext.is_finite()) {
    for (std::uint64_t i = 1; i < ext.order(); ++i) {
      FieldElement x = ext.element_at(i);
      if (ext.norm(x) == target) return {true, x};
    }
    return {};
  }
  const auto& F = ext.base();
  const std::size_t m = ext.degree();
  NormSearch found;
  for (int d = 1; d <= height && !found.member; ++d) {
    for_each_box(m, height, [&](const std::vector<int>& v) {
      std::vector<Scalar> c;
      for (int x : v) c.push_back(F->from_int(x) / F->from_int(d));
      FieldElement x = ext.from_coeffs(c);
      if (x.is_zero()) return false;
      if (ext.norm(x) == target) {
        found = {true, x};
        return true;
      }
      return false;
    });
  }
  return found;
}

}  // namespace menichetti
