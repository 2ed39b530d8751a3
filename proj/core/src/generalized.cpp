#include "menichetti/generalized.hpp"

#include "menichetti/error.hpp"

namespace menichetti {

namespace {

void check_elem(const GaloisExtension& c, const CSA::Elem& x, std::size_t n, const char* what) {
  if (x.size() != n) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong length");
  for (auto& v : x)
    if (!v.extension()->same_as(c)) throw Error(ErrorCode::FieldMismatch, std::string(what) + " lies outside the center");
}

}  // namespace

CSA::CSA(ExtensionPtr center, std::size_t unit, std::vector<std::vector<Elem>> table)
    : c_(std::move(center)), unit_(unit), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty structure table");
  if (unit_ >= n) throw Error(ErrorCode::IndexOutOfRange, "unit index outside the basis");
  for (auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "structure table is not square");
    for (auto& e : row) check_elem(*c_, e, n, "structure constant");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (table_[unit_][i] != basis(i) || table_[i][unit_] != basis(i))
      throw Error(ErrorCode::NoUnit, "e_" + std::to_string(unit_) + " is not a two-sided unit");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (multiply(table_[a][b], basis(c)) != multiply(basis(a), table_[b][c]))
          throw Error(ErrorCode::NotAssociative, "basis triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                                     std::to_string(c) + ") is not associative");
}

CSA CSA::scalars(ExtensionPtr center) {
  auto one = center->one();
  return CSA(center, 0, {{{one}}});
}

CSA CSA::matrix_algebra(ExtensionPtr center, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "matrix size 0");
  const std::size_t N = n * n;
  // Basis: the identity, then E_rs for (r, s) != (0, 0) in row-major order.
  auto coords = [&](const std::vector<long long>& mat) {
    Elem e(N, center->zero());
    e[0] = center->from_int(mat[0]);
    for (std::size_t i = 1; i < N; ++i) e[i] = center->from_int(mat[i] - (i % (n + 1) == 0 ? mat[0] : 0));
    return e;
  };
  auto matrix = [&](std::size_t b) {
    std::vector<long long> mat(N, 0);
    if (b == 0)
      for (std::size_t r = 0; r < n; ++r) mat[r * (n + 1)] = 1;
    else
      mat[b] = 1;
    return mat;
  };
  std::vector<std::vector<Elem>> t(N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      auto x = matrix(a), y = matrix(b);
      std::vector<long long> z(N, 0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          for (std::size_t u = 0; u < n; ++u) z[r * n + u] += x[r * n + s] * y[s * n + u];
      t[a].push_back(coords(z));
    }
  return CSA(center, 0, std::move(t));
}

CSA CSA::quaternion(ExtensionPtr center, const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroParameter, "quaternion parameters must be nonzero");
  const auto z = center->zero(), o = center->one();
  auto v = [&](FieldElement c0, FieldElement c1, FieldElement c2, FieldElement c3) { return Elem{c0, c1, c2, c3}; };
  // 1, i, j, k = ij; i^2 = a, j^2 = b, k^2 = -ab.
  std::vector<std::vector<Elem>> t = {
      {v(o, z, z, z), v(z, o, z, z), v(z, z, o, z), v(z, z, z, o)},
      {v(z, o, z, z), v(a, z, z, z), v(z, z, z, o), v(z, z, a, z)},
      {v(z, z, o, z), v(z, z, z, -o), v(b, z, z, z), v(z, -b, z, z)},
      {v(z, z, z, o), v(z, z, -a, z), v(z, b, z, z), v(-a * b, z, z, z)},
  };
  return CSA(center, 0, std::move(t));
}

CSA::Elem CSA::zero() const { return Elem(dim(), c_->zero()); }

CSA::Elem CSA::basis(std::size_t i) const {
  Elem e = zero();
  e.at(i) = c_->one();
  return e;
}

CSA::Elem CSA::add(const Elem& x, const Elem& y) const {
  Elem r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

CSA::Elem CSA::multiply(const Elem& x, const Elem& y) const {
  Elem r = zero();
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b].is_zero()) continue;
      const FieldElement xy = x[a] * y[b];
      const auto& p = table_[a][b];
      for (std::size_t c = 0; c < dim(); ++c)
        if (!p[c].is_zero()) r[c] += xy * p[c];
    }
  }
  return r;
}

CSA::Elem CSA::scale(const FieldElement& c, const Elem& x) const {
  Elem r = x;
  for (auto& v : r) v = c * v;
  return r;
}

bool CSA::is_zero(const Elem& x) const {
  for (auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

std::string CSA::format(const Elem& x) const {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].to_string();
  return s;
}

CSA CSA::extend_scalars(const ExtensionPtr& k) const {
  if (c_->degree() != 1 || !c_->base()->same_as(*k->base()))
    throw Error(ErrorCode::CenterMismatch, "D0 must be central over the base field of " + k->describe());
  auto lift = [&](const Elem& e) {
    Elem out;
    for (auto& v : e) out.push_back(k->from_base(v.coeff(0)));
    return out;
  };
  std::vector<std::vector<Elem>> t(dim());
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b) t[a].push_back(lift(table_[a][b]));
  return CSA(k, unit_, std::move(t));
}

GeneralizedSpec::GeneralizedSpec(CSA d, std::vector<DAutomorphism> auts, std::vector<FieldElement> k)
    : d_(std::move(d)), auts_(std::move(auts)), k_(std::move(k)) {
  const auto& C = *d_.center();
  const std::size_t m = auts_.size();
  if (!C.has_group()) throw Error(ErrorCode::NotAGroup, "center has no Galois group installed");
  if (m == 0 || m != C.aut_count())
    throw Error(ErrorCode::NotAGroup, "the automorphisms must restrict to the " + std::to_string(C.aut_count()) + " elements of Gal(C/F)");
  if (k_.size() != m) throw Error(ErrorCode::DimensionMismatch, "k must list " + std::to_string(m) + " parameters");
  std::vector<bool> seen(m, false);
  for (std::size_t j = 0; j < m; ++j) {
    auto& a = auts_[j];
    if (a.center_aut >= m || seen[a.center_aut]) throw Error(ErrorCode::NotAGroup, "restrictions to C repeat or leave the group");
    seen[a.center_aut] = true;
    if (a.images.size() != d_.dim()) throw Error(ErrorCode::DimensionMismatch, "automorphism " + std::to_string(j) + " lists the wrong number of images");
    for (auto& img : a.images) check_elem(C, img, d_.dim(), "automorphism image");
  }
  for (std::size_t i = 0; i < d_.dim(); ++i)
    if (auts_[0].center_aut != 0 || auts_[0].images[i] != d_.basis(i))
      throw Error(ErrorCode::BadAutomorphism, "the first automorphism must be the identity");
  for (std::size_t j = 0; j < m; ++j) {
    if (apply(j, d_.one()) != d_.one()) throw Error(ErrorCode::NotAHomomorphism, "automorphism " + std::to_string(j) + " moves the unit");
    for (std::size_t a = 0; a < d_.dim(); ++a)
      for (std::size_t b = 0; b < d_.dim(); ++b)
        if (apply(j, d_.product(a, b)) != d_.multiply(auts_[j].images[a], auts_[j].images[b]))
          throw Error(ErrorCode::NotAHomomorphism, "automorphism " + std::to_string(j) + " is not multiplicative on (e_" +
                                                       std::to_string(a) + ", e_" + std::to_string(b) + ")");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!k_[i].extension()->same_as(C)) throw Error(ErrorCode::FieldMismatch, "k_" + std::to_string(i) + " lies outside the center");
    if (k_[i].is_zero()) throw Error(ErrorCode::ZeroParameter, "k_" + std::to_string(i) + " = 0");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      FieldElement den = C.one(), num = C.one();
      for (std::size_t s = 0; s < j; ++s) {
        den *= k_[s];
        num *= k_[(i + s) % m];
      }
      c_.push_back(num / den);
    }
}

GeneralizedSpec GeneralizedSpec::from_menichetti(const MenichettiSpec& spec) {
  std::vector<DAutomorphism> auts;
  for (auto t : spec.tau()) auts.push_back({{{spec.ext()->one()}}, t});
  return GeneralizedSpec(CSA::scalars(spec.ext()), std::move(auts), spec.k());
}

GeneralizedSpec GeneralizedSpec::from_tensor(const CSA& d0, const MenichettiSpec& spec) {
  CSA d = d0.extend_scalars(spec.ext());
  std::vector<CSA::Elem> fixed;
  for (std::size_t i = 0; i < d.dim(); ++i) fixed.push_back(d.basis(i));
  std::vector<DAutomorphism> auts;
  for (auto t : spec.tau()) auts.push_back({fixed, t});
  return GeneralizedSpec(std::move(d), std::move(auts), spec.k());
}

std::size_t GeneralizedSpec::f_dimension() const { return d_.dim() * d_.center()->degree() * m(); }

CSA::Elem GeneralizedSpec::apply(std::size_t j, const CSA::Elem& x) const {
  const auto& a = auts_.at(j);
  const auto& C = *d_.center();
  CSA::Elem r = d_.zero();
  for (std::size_t i = 0; i < d_.dim(); ++i)
    if (!x[i].is_zero()) r = d_.add(r, d_.scale(C.apply_aut(a.center_aut, x[i]), a.images[i]));
  return r;
}

GenElement GeneralizedSpec::zero() const { return GenElement(m(), d_.zero()); }

GenElement GeneralizedSpec::one() const {
  auto e = zero();
  e[0] = d_.one();
  return e;
}

GenElement GeneralizedSpec::basis(std::size_t i, std::size_t r, const FieldElement& c) const {
  auto e = zero();
  e.at(i) = d_.scale(c, d_.basis(r));
  return e;
}

GenElement gen_multiply(const GeneralizedSpec& spec, const GenElement& x, const GenElement& y) {
  const std::size_t m = spec.m();
  const auto& D = spec.csa();
  if (x.size() != m || y.size() != m) throw Error(ErrorCode::DimensionMismatch, "elements need " + std::to_string(m) + " components");
  for (std::size_t i = 0; i < m; ++i) {
    check_elem(*D.center(), x[i], D.dim(), "x component");
    check_elem(*D.center(), y[i], D.dim(), "y component");
  }
  GenElement out = spec.zero();
  for (std::size_t i = 0; i < m; ++i) {
    if (D.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < m; ++j) {
      if (D.is_zero(y[j])) continue;
      const auto entry = D.scale(spec.cocycle(i, j), spec.apply(j, x[i]));
      auto& slot = out[(i + j) % m];
      slot = D.add(slot, D.multiply(entry, y[j]));
    }
  }
  return out;
}

TensorReport tensor_check(const CSA& d0, const MenichettiSpec& spec) {
  const auto gen = GeneralizedSpec::from_tensor(d0, spec);
  const auto& K = *spec.ext();
  const std::size_t m = spec.m(), N = d0.dim();
  std::vector<FieldElement> powers{K.one()};
  for (std::size_t s = 1; s < K.degree(); ++s) powers.push_back(powers.back() * K.gen());

  struct Basis {
    std::size_t r;
    AlgElement a;  // t^s z_i in A
    GenElement image;
  };
  std::vector<Basis> basis;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t s = 0; s < K.degree(); ++s)
        basis.push_back({r, powers[s] * spec.basis_z(i), gen.basis(i, r, powers[s])});

  TensorReport rep;
  for (auto& b1 : basis)
    for (auto& b2 : basis) {
      // (d_r (x) a)(d_r' (x) a') = d_r d_r' (x) a a', mapped slot-wise to (a a')_l (d_r d_r').
      const auto& d = d0.product(b1.r, b2.r);
      const AlgElement aa = multiply(spec, b1.a, b2.a);
      GenElement expect = gen.zero();
      for (std::size_t l = 0; l < m; ++l)
        for (std::size_t u = 0; u < N; ++u) expect[l][u] = K.from_base(d[u].coeff(0)) * aa[l];
      ++rep.pairs;
      if (gen_multiply(gen, b1.image, b2.image) != expect) ++rep.mismatches;
    }
  rep.isomorphic = rep.mismatches == 0;
  return rep;
}

}  // namespace menichetti
