#include "menichetti/determinant.hpp"

#include "menichetti/matrix.hpp"

namespace menichetti {

FieldElement det_general(const MenichettiSpec& spec, const AlgElement& x) { return determinant(mult_matrix(spec, x)); }

namespace {

struct Ctx {
  const MenichettiSpec& spec;
  const GaloisExtension& K;

  explicit Ctx(const MenichettiSpec& s) : spec(s), K(*s.ext()) {}
  FieldElement g(std::size_t i, const FieldElement& a) const { return K.apply_aut(spec.tau()[i], a); }
  FieldElement N(const FieldElement& a) const { return K.from_base(K.norm(a)); }
  FieldElement T(const FieldElement& a) const { return K.from_base(K.trace(a)); }
  FieldElement T0(const FieldElement& a, std::size_t h) const { return K.partial_trace(a, {0, spec.tau()[h]}); }
  const FieldElement& k(std::size_t i) const { return spec.k()[i]; }
};

void require_m3(const MenichettiSpec& spec, const AlgElement& y) {
  if (spec.m() != 3) throw Error(ErrorCode::WrongDegree, "formula needs m = 3");
  if (!spec.tau_is_cyclic()) throw Error(ErrorCode::WrongGroup, "formula needs tau_i = sigma^i");
  if (y.size() != 3) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
}

void require_m4_cyclic(const MenichettiSpec& spec, const AlgElement& x) {
  if (spec.m() != 4) throw Error(ErrorCode::WrongDegree, "formula needs m = 4");
  if (!spec.tau_is_cyclic() || spec.ext()->aut_order(spec.tau()[1]) != 4)
    throw Error(ErrorCode::WrongGroup, "formula needs a cyclic group with tau_i = sigma^i");
  if (x.size() != 4) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
}

void require_m4_biquadratic(const MenichettiSpec& spec, const AlgElement& x) {
  if (spec.m() != 4) throw Error(ErrorCode::WrongDegree, "formula needs m = 4");
  const auto& K = *spec.ext();
  if (K.base()->characteristic() == 2) throw Error(ErrorCode::CharTwo, "biquadratic formula needs odd characteristic");
  const auto& t = spec.tau();
  if (K.aut_order(t[1]) != 2 || K.aut_order(t[2]) != 2 || K.compose(t[1], t[2]) != t[3])
    throw Error(ErrorCode::WrongGroup, "formula needs tau = (id, sigma, tau, sigma tau) of exponent 2");
  if (x.size() != 4) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
}

FieldElement m3(const MenichettiSpec& spec, const AlgElement& y, bool printed) {
  require_m3(spec, y);
  Ctx c(spec);
  const auto &a = c.k(0), &b = c.k(1), &cc = c.k(2);
  FieldElement ai = a.inv();
  FieldElement n1 = printed ? cc * ai : b * cc * ai * ai;
  return c.N(y[0]) + n1 * c.N(y[1]) + b.inv() * cc * cc * ai * c.N(y[2]) - cc * ai * c.T(y[0] * c.g(1, y[1]) * c.g(2, y[2]));
}

FieldElement m4_cyclic(const MenichettiSpec& spec, const AlgElement& x, bool printed) {
  require_m4_cyclic(spec, x);
  Ctx c(spec);
  const auto &a = c.k(0), &b = c.k(1), &cc = c.k(2), &d = c.k(3);
  auto s = [&](std::size_t i, std::size_t j) { return c.g(i, x[j]); };
  const auto &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3];
  FieldElement ai = a.inv(), bi = b.inv(), ci = cc.inv();
  FieldElement r = c.N(x0) - b * cc * d * ai * ai * ai * c.N(x1) + cc * cc * d * d * ai * ai * bi * bi * c.N(x2) -
                   d * d * d * ai * bi * ci * c.N(x3);
  r += cc * d * ai * ai * c.T(x0 * s(1, 1) * s(2, 1) * s(3, 2));
  r -= d * ai * c.T(x0 * s(1, 0) * s(2, 1) * s(3, 3));
  r += d * d * ai * bi * c.T(x0 * s(1, 2) * s(2, 3) * s(3, 3));
  FieldElement t4 = cc * d * d * ai * ai * bi * c.T(x1 * s(1, 2) * s(2, 2) * s(3, 3));
  r += printed ? t4 : -t4;
  r -= cc * d * ai * bi * c.T0(x0 * s(2, 0) * s(1, 2) * s(3, 2), 2);
  r += d * d * ai * ai * c.T0(x1 * s(2, 1) * s(1, 3) * s(3, 3), 2);
  return r;
}

FieldElement m4_biquadratic(const MenichettiSpec& spec, const AlgElement& x) {
  require_m4_biquadratic(spec, x);
  Ctx c(spec);
  const auto &a = c.k(0), &b = c.k(1), &cc = c.k(2), &d = c.k(3);
  // s(1, .) = sigma, s(2, .) = tau, s(3, .) = sigma tau
  auto s = [&](std::size_t i, std::size_t j) { return c.g(i, x[j]); };
  const auto &x0 = x[0], &x1 = x[1], &x2 = x[2], &x3 = x[3];
  FieldElement ai = a.inv(), bi = b.inv(), ci = cc.inv();
  FieldElement r = c.N(x0) - b * cc * d * ai * ai * ai * c.N(x1) + cc * cc * d * d * ai * ai * bi * bi * c.N(x2) -
                   d * d * d * ai * bi * ci * c.N(x3);
  r += cc * d * ai * ai * c.T(x0 * s(1, 1) * s(2, 1) * s(3, 2));
  r -= d * ai * c.T(x0 * s(1, 0) * s(2, 1) * s(3, 3));
  r += d * d * ai * bi * c.T(x0 * s(1, 2) * s(2, 3) * s(3, 3));
  r += cc * d * d * ai * ai * bi * c.T(x1 * s(1, 2) * s(2, 2) * s(3, 3));
  r -= cc * d * ai * bi * c.T0(x0 * s(2, 0) * s(1, 2) * s(3, 2), 2);
  r += d * d * ai * ai * c.T0(x1 * s(2, 1) * s(1, 3) * s(3, 3), 2);
  return r;
}

}  // namespace

FieldElement det_m3(const MenichettiSpec& spec, const AlgElement& y) { return m3(spec, y, false); }
FieldElement det_m3_printed(const MenichettiSpec& spec, const AlgElement& y) { return m3(spec, y, true); }
FieldElement det_m4_cyclic(const MenichettiSpec& spec, const AlgElement& x) { return m4_cyclic(spec, x, false); }
FieldElement det_m4_cyclic_printed(const MenichettiSpec& spec, const AlgElement& x) { return m4_cyclic(spec, x, true); }
FieldElement det_m4_biquadratic(const MenichettiSpec& spec, const AlgElement& x) { return m4_biquadratic(spec, x); }
FieldElement det_m4_biquadratic_printed(const MenichettiSpec& spec, const AlgElement& x) { return m4_biquadratic(spec, x); }

DetReport det_report(const MenichettiSpec& spec, const AlgElement& x, DetFormula formula) {
  FieldElement g = det_general(spec, x);
  FieldElement f = g;
  switch (formula) {
    case DetFormula::General: break;
    case DetFormula::M3: f = det_m3(spec, x); break;
    case DetFormula::M4Cyclic: f = det_m4_cyclic(spec, x); break;
    case DetFormula::M4Biquadratic: f = det_m4_biquadratic(spec, x); break;
  }
  bool match = g == f;
  return {std::move(g), std::move(f), match};
}

bool galois_substitution_invariance(const MenichettiSpec& spec, const AlgElement& x, std::size_t aut) {
  std::vector<FieldElement> c;
  for (const auto& xi : x.coords()) c.push_back(spec.ext()->apply_aut(aut, xi));
  return det_general(spec, x) == det_general(spec, AlgElement(std::move(c)));
}

std::optional<SpecialPattern> special_pattern(const MenichettiSpec& spec) {
  MenichettiSpec n = spec.normalized();
  const std::size_t m = n.m();
  if (m < 2) return std::nullopt;
  for (std::size_t i = 2; i + 1 < m; ++i)
    if (n.k()[i] != n.k()[1]) return std::nullopt;
  const FieldElement& k = n.k()[1];
  return SpecialPattern{k, k.inv() * n.k()[m - 1]};
}

std::optional<std::pair<Scalar, Scalar>> solve_alpha(const FieldElement& k, const FieldElement& kprime) {
  const auto& K = *k.extension();
  const auto& F = K.base();
  if (K.in_base(kprime)) {
    // span{1, k'} = F: take alpha_2 = 0
    if (!K.in_base(k)) return std::nullopt;
    return std::make_pair(K.to_base(k), F->zero());
  }
  const std::size_t m = K.degree();
  Matrix<Scalar> A(m, 2, F->zero());
  std::vector<Scalar> rhs = k.coeffs();
  auto one = K.one().coeffs(), kp = kprime.coeffs();
  for (std::size_t r = 0; r < m; ++r) {
    A(r, 0) = one[r];
    A(r, 1) = kp[r];
  }
  auto sol = solve(A, rhs);
  if (!sol) return std::nullopt;
  return std::make_pair((*sol)[0], (*sol)[1]);
}

SpecialDecomposition special_decomposition(const MenichettiSpec& spec, const AlgElement& x) {
  auto pat = special_pattern(spec);
  if (!pat) throw Error(ErrorCode::NotSpecialPattern, "parameters are not of the form (1, k, ..., k, kk')");
  const auto& K = *spec.ext();
  const auto& F = K.base();
  const std::size_t m = spec.m();
  std::vector<FieldElement> powers{K.one()};
  for (std::size_t j = 1; j < m; ++j) powers.push_back(pat->k * pat->kprime.pow(static_cast<long long>(j)));
  if (!K.linearly_independent(powers)) throw Error(ErrorCode::DependentPowers, "1, kk', ..., kk'^(m-1) are dependent over F");
  FieldElement det = det_general(spec, x);
  Matrix<Scalar> A(m, m, F->zero());
  for (std::size_t j = 0; j < m; ++j) {
    auto c = powers[j].coeffs();
    for (std::size_t r = 0; r < m; ++r) A(r, j) = c[r];
  }
  auto sol = solve(A, det.coeffs());
  if (!sol) throw Error(ErrorCode::NonBaseCoefficient, "determinant outside the F-span of the powers");
  SpecialDecomposition out;
  out.f = *sol;
  out.f0_is_norm = out.f[0] == K.norm(x[0]);
  FieldElement back = K.zero();
  for (std::size_t j = 0; j < m; ++j) back += powers[j] * out.f[j];
  out.recombines = back == det;

  std::size_t nonzero = 0, idx = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (!x[i].is_zero()) {
      ++nonzero;
      idx = i;
    }
  auto alpha = solve_alpha(pat->k, pat->kprime);
  if (nonzero == 1 && idx >= 1 && alpha && !alpha->first.is_zero()) {
    long sign_exp = static_cast<long>((idx + 2) * (m - idx));
    Scalar expected = alpha->first.pow(static_cast<long long>(m - idx - 1)) * K.norm(x[idx]);
    if (sign_exp % 2) expected = -expected;
    out.boundary_index = idx;
    out.boundary_expected = expected;
    out.boundary_ok = out.f[idx] == expected;
    for (std::size_t j = 0; j < idx; ++j) out.boundary_ok = out.boundary_ok && out.f[j].is_zero();
  }
  return out;
}

}  // namespace menichetti
