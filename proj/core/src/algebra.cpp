#include "menichetti/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace menichetti {

AlgElement::AlgElement(std::vector<FieldElement> coords) : c_(std::move(coords)) {
  if (c_.empty()) throw Error(ErrorCode::DimensionMismatch, "empty algebra element");
}

bool AlgElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& a) { return a.is_zero(); });
}

std::string AlgElement::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += "; ";
    out += c_[i].to_string();
  }
  return out;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "algebra element sizes differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "algebra element sizes differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

AlgElement operator*(const FieldElement& l, const AlgElement& x) {
  std::vector<FieldElement> c;
  for (const auto& a : x.coords()) c.push_back(l * a);
  return AlgElement(std::move(c));
}

MenichettiSpec::MenichettiSpec(ExtensionPtr ext, std::vector<std::size_t> tau, std::vector<FieldElement> k)
    : ext_(std::move(ext)), tau_(std::move(tau)), k_(std::move(k)) {
  const std::size_t m = ext_->degree();
  if (!ext_->has_group()) throw Error(ErrorCode::NotAGroup, "extension has no Galois group installed");
  if (tau_.size() != m) throw Error(ErrorCode::DimensionMismatch, "tau must list " + std::to_string(m) + " automorphisms");
  if (k_.size() != m) throw Error(ErrorCode::DimensionMismatch, "k must list " + std::to_string(m) + " parameters");
  std::vector<bool> seen(m, false);
  for (auto t : tau_) {
    if (t >= m || seen[t]) throw Error(ErrorCode::IndexOutOfRange, "tau is not a permutation of the automorphisms");
    seen[t] = true;
  }
  if (tau_[0] != 0) throw Error(ErrorCode::IndexOutOfRange, "tau[0] must be the identity");
  for (std::size_t i = 0; i < m; ++i) {
    if (!k_[i].extension()->same_as(*ext_)) throw Error(ErrorCode::FieldMismatch, "k_" + std::to_string(i) + " lies in another field");
    k_[i] = ext_->from_reps(k_[i].reps());
    if (k_[i].is_zero()) throw Error(ErrorCode::ZeroParameter, "k_" + std::to_string(i) + " = 0");
  }
  c_.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      FieldElement den = ext_->one(), num = ext_->one();
      for (std::size_t s = 0; s < j; ++s) {
        den *= k_[s];
        num *= k_[(i + s) % m];
      }
      c_.push_back(num / den);
    }
}

MenichettiSpec MenichettiSpec::cyclic(ExtensionPtr ext, std::vector<FieldElement> k) {
  const std::size_t m = ext->degree();
  std::size_t gen = m;
  for (std::size_t i = 0; i < ext->aut_count(); ++i)
    if (ext->aut_order(i) == m) {
      gen = i;
      break;
    }
  if (gen == m) throw Error(ErrorCode::WrongGroup, "Galois group is not cyclic");
  std::vector<std::size_t> tau;
  for (std::size_t i = 0; i < m; ++i) tau.push_back(ext->aut_power(gen, static_cast<long>(i)));
  return {ext, tau, std::move(k)};
}

const FieldElement& MenichettiSpec::cocycle(std::size_t i, std::size_t j) const {
  if (i >= m() || j >= m()) throw Error(ErrorCode::IndexOutOfRange, "cocycle index");
  return c_[i * m() + j];
}

bool MenichettiSpec::tau_is_cyclic() const {
  if (m() == 1) return true;
  for (std::size_t i = 0; i < m(); ++i)
    if (tau_[i] != ext_->aut_power(tau_[1], static_cast<long>(i))) return false;
  return true;
}

MenichettiSpec MenichettiSpec::normalized() const {
  FieldElement inv = k_[0].inv();
  std::vector<FieldElement> k;
  for (const auto& x : k_) k.push_back(x * inv);
  return {ext_, tau_, std::move(k)};
}

AlgElement MenichettiSpec::zero() const { return AlgElement(std::vector<FieldElement>(m(), ext_->zero())); }

AlgElement MenichettiSpec::one() const { return embed(ext_->one()); }

AlgElement MenichettiSpec::basis_z(std::size_t i) const {
  if (i >= m()) throw Error(ErrorCode::IndexOutOfRange, "basis index");
  std::vector<FieldElement> c(m(), ext_->zero());
  c[i] = ext_->one();
  return AlgElement(std::move(c));
}

AlgElement MenichettiSpec::embed(const FieldElement& l) const {
  std::vector<FieldElement> c(m(), ext_->zero());
  c[0] = ext_->from_reps(l.reps());
  return AlgElement(std::move(c));
}

AlgElement MenichettiSpec::parse(std::string_view text) const {
  std::vector<FieldElement> c;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(';', start);
    c.push_back(ext_->parse(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (c.size() != m()) throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(m()) + " coordinates, got " + std::to_string(c.size()));
  return AlgElement(std::move(c));
}

AlgElement MenichettiSpec::random(std::mt19937_64& rng, int height) const {
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < m(); ++i) c.push_back(ext_->random(rng, height));
  return AlgElement(std::move(c));
}

std::string MenichettiSpec::describe() const {
  std::string out = "(" + ext_->describe();
  for (const auto& k : k_) out += ", " + k.to_string();
  return out + ")";
}

FieldElement cocycle(const MenichettiSpec& spec, std::size_t i, std::size_t j) { return spec.cocycle(i, j); }

Matrix<FieldElement> mult_matrix(const MenichettiSpec& spec, const AlgElement& x) {
  const std::size_t m = spec.m();
  if (x.size() != m) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
  const auto& ext = *spec.ext();
  Matrix<FieldElement> M(m, m, ext.zero());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i].is_zero()) continue;
      std::size_t r = (i + j) % m;
      M(r, j) = spec.cocycle(i, j) * ext.apply_aut(spec.tau()[j], x[i]);
    }
  }
  return M;
}

AlgElement multiply(const MenichettiSpec& spec, const AlgElement& x, const AlgElement& y) {
  if (y.size() != spec.m()) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
  return AlgElement(mult_matrix(spec, x).apply(y.coords()));
}

AlgElement associator(const MenichettiSpec& spec, const AlgElement& x, const AlgElement& y, const AlgElement& z) {
  return multiply(spec, multiply(spec, x, y), z) - multiply(spec, x, multiply(spec, y, z));
}

Vec f_coords(const MenichettiSpec& spec, const AlgElement& x) {
  if (x.size() != spec.m()) throw Error(ErrorCode::DimensionMismatch, "element has wrong length");
  Vec v;
  for (const auto& xi : x.coords())
    for (const auto& c : xi.coeffs()) v.push_back(c);
  return v;
}

AlgElement from_f_coords(const MenichettiSpec& spec, const Vec& v) {
  const std::size_t m = spec.m();
  if (v.size() != m * m) throw Error(ErrorCode::DimensionMismatch, "expected m^2 coordinates");
  std::vector<FieldElement> c;
  for (std::size_t i = 0; i < m; ++i) c.push_back(spec.ext()->from_coeffs(Vec(v.begin() + i * m, v.begin() + (i + 1) * m)));
  return AlgElement(std::move(c));
}

namespace {

AlgElement f_basis(const MenichettiSpec& spec, std::size_t b) {
  const std::size_t m = spec.m();
  std::vector<FieldElement> c(m, spec.ext()->zero());
  c[b / m] = spec.ext()->gen().pow(static_cast<long long>(b % m));
  return AlgElement(std::move(c));
}

}  // namespace

StructureTable structure_table(const MenichettiSpec& spec) {
  const std::size_t n = spec.m() * spec.m();
  StructureTable t(spec.ext()->base(), n);
  std::vector<AlgElement> basis;
  for (std::size_t b = 0; b < n; ++b) basis.push_back(f_basis(spec, b));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec p = f_coords(spec, multiply(spec, basis[a], basis[b]));
      for (std::size_t c = 0; c < n; ++c)
        if (!p[c].is_zero()) t.set(a, b, c, p[c]);
    }
  return t;
}

Subspace nucleus(const MenichettiSpec& spec, NucleusPart part) { return nucleus(structure_table(spec), part); }

Subspace embedded_k(const MenichettiSpec& spec) {
  const std::size_t n = spec.m() * spec.m();
  Subspace s;
  for (std::size_t i = 0; i < spec.m(); ++i) {
    Vec v(n, spec.ext()->base()->zero());
    v[i] = spec.ext()->base()->one();
    s.push_back(std::move(v));
  }
  return s;
}

Subspace centralizer_of_k(const MenichettiSpec& spec) { return commutant(structure_table(spec), embedded_k(spec)); }

Faithfulness ke_faithful(const MenichettiSpec& spec) {
  const std::size_t m = spec.m(), n = m * m;
  for (auto part : {NucleusPart::Left, NucleusPart::Middle, NucleusPart::Right}) {
    Subspace nuc = nucleus(spec, part);
    for (const auto& v : embedded_k(spec))
      if (!in_subspace(nuc, v)) throw Error(ErrorCode::NucleusViolation, "K is not contained in the nucleus");
  }
  std::vector<AlgElement> basis;
  for (std::size_t b = 0; b < n; ++b) basis.push_back(f_basis(spec, b));
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Vec flat;
      for (std::size_t b = 0; b < n; ++b) {
        Vec col = f_coords(spec, multiply(spec, multiply(spec, basis[i], basis[b]), basis[j]));
        flat.insert(flat.end(), col.begin(), col.end());
      }
      rows.push_back(std::move(flat));
    }
  std::size_t r = rank(Matrix<Scalar>::from_rows(rows));
  return {r == n, r};
}

StructureTable opposite(const MenichettiSpec& spec) { return structure_table(spec).opposite(); }

StructureTable nonassociative_cyclic_table(const ExtensionPtr& ext, std::size_t sigma, const FieldElement& k) {
  const std::size_t m = ext->degree(), n = m * m;
  StructureTable t(ext->base(), n);
  std::vector<FieldElement> pw;
  for (std::size_t s = 0; s < m; ++s) pw.push_back(ext->gen().pow(static_cast<long long>(s)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < m; ++r) {
          FieldElement c = pw[s] * ext->apply_aut(ext->aut_power(sigma, static_cast<long>(i)), pw[r]);
          if (i + j >= m) c *= k;
          std::size_t target = (i + j) % m;
          for (std::size_t u = 0; u < m; ++u)
            if (!c.coeff(u).is_zero()) t.set(i * m + s, j * m + r, target * m + u, c.coeff(u));
        }
  return t;
}

bool cyclic_algebra_compare(const MenichettiSpec& spec) {
  MenichettiSpec norm = spec.normalized();
  const std::size_t m = norm.m();
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (!norm.k()[i].is_one()) throw Error(ErrorCode::PatternMismatch, "expected parameters (1, ..., 1, k)");
  if (!norm.tau_is_cyclic()) throw Error(ErrorCode::PatternMismatch, "expected the cyclic enumeration tau_i = sigma^i");
  return opposite(norm) == nonassociative_cyclic_table(norm.ext(), norm.tau()[1], norm.k()[m - 1]);
}

SwapCheck coordinate_swap_check(const MenichettiSpec& spec) {
  if (spec.m() != 3 || !spec.tau_is_cyclic() || spec.k()[1] != spec.k()[2])
    throw Error(ErrorCode::PatternMismatch, "expected m = 3, cyclic tau and parameters (a, c, c)");
  const auto& ext = spec.ext();
  FieldElement k = spec.k()[2] / spec.k()[0];
  StructureTable cyc = nonassociative_cyclic_table(ext, spec.tau()[2], k);
  StructureTable alg = structure_table(spec);
  const auto& F = ext->base();
  std::vector<Vec> images;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t s = 0; s < 3; ++s) {
      Vec v(9, F->zero());
      v[((2 * i) % 3) * 3 + s] = F->one();
      images.push_back(std::move(v));
    }
  SwapCheck out;
  auto bad = homomorphism_failures(cyc, alg, images);
  out.full = bad.empty();
  out.basis_pairs = std::none_of(bad.begin(), bad.end(), [](const auto& p) { return p.first % 3 == 0 && p.second % 3 == 0; });
  out.full_opposite = homomorphism_failures(cyc, alg.opposite(), images).empty();
  return out;
}

}  // namespace menichetti
