#include "menichetti/extension.hpp"

#include <algorithm>
#include <limits>

#include "menichetti/expr.hpp"
#include "menichetti/matrix.hpp"

namespace menichetti {

GaloisExtension::GaloisExtension(Token, BaseFieldPtr base, std::string var, Poly modulus)
    : base_(std::move(base)), var_(std::move(var)), modulus_(std::move(modulus)), m_(static_cast<std::size_t>(modulus_.degree())) {
  // t^(m+k) mod f for k = 0 .. m-2
  Poly t = Poly::variable(base_);
  Poly p = Poly::monomial(base_->one(), m_) % modulus_;
  for (std::size_t k = 0; k + 1 < m_; ++k) {
    std::vector<Rep> v(m_, base_->zero_rep());
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) v[i] = p.coeffs()[i];
    reduction_.push_back(std::move(v));
    p = (p * t) % modulus_;
  }
}

ExtensionPtr GaloisExtension::ring(BaseFieldPtr base, std::string var, const Poly& modulus) {
  if (!modulus.field()->same_as(*base)) throw Error(ErrorCode::FieldMismatch, "modulus over a different field");
  if (modulus.degree() < 1) throw Error(ErrorCode::NotIrreducible, "modulus must have positive degree");
  if (!is_irreducible(modulus)) throw Error(ErrorCode::NotIrreducible, modulus.to_string(var) + " over " + base->name());
  auto ext = std::make_shared<GaloisExtension>(Token{}, base, std::move(var), modulus.monic());
  ext->images_.push_back(ext->gen());
  ext->install_group(ext->images_);
  return ext;
}

ExtensionPtr GaloisExtension::trivial(BaseFieldPtr base, std::string var) {
  auto ext = std::make_shared<GaloisExtension>(Token{}, base, std::move(var), Poly::variable(base));
  ext->install_group({ext->gen()});
  return ext;
}

FieldElement GaloisExtension::substitute(const FieldElement& a, const FieldElement& x) const {
  FieldElement r = zero();
  for (std::size_t i = m_; i-- > 0;) r = r * x + from_base(a.coeff(i));
  return r;
}

ExtensionPtr GaloisExtension::with_automorphisms(const std::vector<FieldElement>& images) const {
  auto ext = std::make_shared<GaloisExtension>(Token{}, base_, var_, modulus_);
  std::vector<FieldElement> own;
  for (const auto& g : images) {
    if (!g.extension()->same_as(*this)) throw Error(ErrorCode::FieldMismatch, "automorphism image from another field");
    own.push_back(ext->from_reps(g.reps()));
  }
  ext->install_group(own);
  return ext;
}

ExtensionPtr GaloisExtension::with_cyclic_generator(const FieldElement& image) const {
  auto ext = std::make_shared<GaloisExtension>(Token{}, base_, var_, modulus_);
  FieldElement g = ext->from_reps(image.reps());
  std::vector<FieldElement> powers{ext->gen()};
  for (std::size_t k = 1; k < m_; ++k) {
    powers.push_back(ext->substitute(powers.back(), g));
    if (powers.back() == ext->gen())
      throw Error(ErrorCode::NotAGroup, "generator has order " + std::to_string(k) + " < " + std::to_string(m_));
  }
  ext->install_group(powers);
  return ext;
}

ExtensionPtr GaloisExtension::with_frobenius() const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteField, "Frobenius needs a finite base field");
  return with_cyclic_generator(gen().pow(static_cast<long long>(base_->order())));
}

void GaloisExtension::install_group(const std::vector<FieldElement>& images) {
  const std::size_t n = images.size();
  if (n != 1 && n != m_) throw Error(ErrorCode::NotAGroup, "expected " + std::to_string(m_) + " automorphisms, got " + std::to_string(n));
  if (images[0] != gen()) throw Error(ErrorCode::NotAGroup, "automorphism 0 must be the identity");
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement value = zero();
    for (std::size_t d = modulus_.coeffs().size(); d-- > 0;) value = value * images[i] + from_base(modulus_.coeff(d));
    if (!value.is_zero())
      throw Error(ErrorCode::NotAnAutomorphism, var_ + " -> " + images[i].to_string() + " is not a root of the modulus");
    for (std::size_t j = 0; j < i; ++j)
      if (images[i] == images[j]) throw Error(ErrorCode::NotAGroup, "automorphisms " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  images_ = images;
  aut_matrix_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement p = one();
    for (std::size_t s = 0; s < m_; ++s) {
      aut_matrix_[i].push_back(p.reps());
      p *= images_[i];
    }
  }
  compose_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement c = apply_aut(i, images_[j]);
      auto it = std::find(images_.begin(), images_.end(), c);
      if (it == images_.end()) throw Error(ErrorCode::NotAGroup, "automorphisms are not closed under composition");
      compose_[i * n + j] = static_cast<std::size_t>(it - images_.begin());
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (compose_[i * n + j] != compose_[j * n + i]) throw Error(ErrorCode::NotAbelian, "automorphisms do not commute");
}

std::uint64_t GaloisExtension::order() const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteField, "Q-extension is infinite");
  std::uint64_t q = base_->order(), n = 1;
  for (std::size_t i = 0; i < m_; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / q) throw Error(ErrorCode::Unsupported, "field too large");
    n *= q;
  }
  return n;
}

bool GaloisExtension::same_as(const GaloisExtension& o) const {
  return this == &o || (base_->same_as(*o.base_) && modulus_ == o.modulus_);
}

std::string GaloisExtension::describe() const {
  return base_->name() + "[" + var_ + "]/(" + modulus_.to_string(var_) + ")";
}

FieldElement GaloisExtension::zero() const { return {shared_from_this(), std::vector<Rep>(m_, base_->zero_rep())}; }

FieldElement GaloisExtension::one() const {
  std::vector<Rep> v(m_, base_->zero_rep());
  v[0] = base_->one_rep();
  return {shared_from_this(), std::move(v)};
}

FieldElement GaloisExtension::gen() const {
  if (m_ == 1) return from_poly(Poly::variable(base_));
  std::vector<Rep> v(m_, base_->zero_rep());
  v[1] = base_->one_rep();
  return {shared_from_this(), std::move(v)};
}

FieldElement GaloisExtension::from_int(long long v) const { return from_base(base_->from_int(v)); }

FieldElement GaloisExtension::from_base(const Scalar& s) const {
  if (!s.field()->same_as(*base_)) throw Error(ErrorCode::FieldMismatch, "scalar from " + s.field()->name());
  std::vector<Rep> v(m_, base_->zero_rep());
  v[0] = s.rep();
  return {shared_from_this(), std::move(v)};
}

FieldElement GaloisExtension::from_coeffs(const std::vector<Scalar>& c) const {
  if (c.size() != m_) throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(m_) + " coefficients");
  std::vector<Rep> v;
  for (const auto& s : c) {
    if (!s.field()->same_as(*base_)) throw Error(ErrorCode::FieldMismatch, "scalar from " + s.field()->name());
    v.push_back(s.rep());
  }
  return {shared_from_this(), std::move(v)};
}

FieldElement GaloisExtension::from_reps(std::vector<Rep> c) const {
  if (c.size() != m_) throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(m_) + " coefficients");
  return {shared_from_this(), std::move(c)};
}

FieldElement GaloisExtension::from_poly(const Poly& p) const {
  Poly r = p % modulus_;
  std::vector<Rep> v(m_, base_->zero_rep());
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) v[i] = r.coeffs()[i];
  return {shared_from_this(), std::move(v)};
}

namespace {

struct ElementCtx {
  const GaloisExtension* ext;
  FieldElement constant(const mpz_class& n) const { return ext->from_base(ext->base()->from_mpz(n)); }
  FieldElement variable(const std::string& name) const {
    if (name == ext->var()) return ext->gen();
    if (ext->base()->degree() > 1 && name == ext->base()->var()) return ext->from_base(ext->base()->generator());
    throw Error(ErrorCode::Parse, "unknown symbol '" + name + "'");
  }
  FieldElement divide(const FieldElement& a, const FieldElement& b) const { return a / b; }
  FieldElement power(const FieldElement& a, long e) const { return a.pow(e); }
};

}  // namespace

FieldElement GaloisExtension::parse(std::string_view text) const {
  auto e = parse_expression(text);
  return evaluate<FieldElement>(*e, ElementCtx{this});
}

FieldElement GaloisExtension::element_at(std::uint64_t index) const {
  const std::uint64_t q = base_->order();
  if (index >= order()) throw Error(ErrorCode::IndexOutOfRange, "element index out of range");
  std::vector<Rep> v;
  for (std::size_t i = 0; i < m_; ++i) {
    v.push_back(static_cast<std::uint32_t>(index % q));
    index /= q;
  }
  return {shared_from_this(), std::move(v)};
}

std::uint64_t GaloisExtension::index_of(const FieldElement& a) const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteField, "index_of over Q");
  std::uint64_t idx = 0;
  for (std::size_t i = m_; i-- > 0;) idx = idx * base_->order() + std::get<std::uint32_t>(a.reps()[i]);
  return idx;
}

std::vector<FieldElement> GaloisExtension::elements() const {
  std::vector<FieldElement> out;
  const std::uint64_t n = order();
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element_at(i));
  return out;
}

FieldElement GaloisExtension::random(std::mt19937_64& rng, int height) const {
  if (is_finite()) return element_at(rng() % order());
  std::vector<Rep> v;
  std::uniform_int_distribution<int> num(-height, height), den(1, 3);
  for (std::size_t i = 0; i < m_; ++i) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    v.push_back(q);
  }
  return {shared_from_this(), std::move(v)};
}

const FieldElement& GaloisExtension::aut_image(std::size_t i) const {
  if (i >= images_.size()) throw Error(ErrorCode::IndexOutOfRange, "automorphism index " + std::to_string(i));
  return images_[i];
}

FieldElement GaloisExtension::apply_aut(std::size_t i, const FieldElement& a) const {
  if (i >= images_.size()) throw Error(ErrorCode::IndexOutOfRange, "automorphism index " + std::to_string(i));
  std::vector<Rep> out(m_, base_->zero_rep());
  const auto& mat = aut_matrix_[i];
  for (std::size_t s = 0; s < m_; ++s) {
    const Rep& c = a.reps()[s];
    if (base_->is_zero(c)) continue;
    for (std::size_t r = 0; r < m_; ++r) out[r] = base_->add(out[r], base_->mul(c, mat[s][r]));
  }
  return {shared_from_this(), std::move(out)};
}

std::size_t GaloisExtension::compose(std::size_t i, std::size_t j) const {
  const std::size_t n = images_.size();
  if (i >= n || j >= n) throw Error(ErrorCode::IndexOutOfRange, "automorphism index");
  return compose_[i * n + j];
}

std::size_t GaloisExtension::aut_inverse(std::size_t i) const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (compose(i, j) == 0) return j;
  throw Error(ErrorCode::NotAGroup, "no inverse");
}

std::size_t GaloisExtension::aut_order(std::size_t i) const {
  std::size_t k = 1, c = i;
  while (c != 0) {
    c = compose(c, i);
    ++k;
  }
  return k;
}

std::size_t GaloisExtension::aut_power(std::size_t i, long e) const {
  if (e < 0) return aut_power(aut_inverse(i), -e);
  std::size_t r = 0;
  for (long k = 0; k < e; ++k) r = compose(r, i);
  return r;
}

bool GaloisExtension::is_cyclic() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (aut_order(i) == images_.size()) return true;
  return false;
}

Scalar GaloisExtension::norm(const FieldElement& a) const {
  if (!has_group()) throw Error(ErrorCode::NotAGroup, "Galois group not installed");
  FieldElement p = one();
  for (std::size_t i = 0; i < m_; ++i) p *= apply_aut(i, a);
  return to_base(p);
}

Scalar GaloisExtension::trace(const FieldElement& a) const {
  if (!has_group()) throw Error(ErrorCode::NotAGroup, "Galois group not installed");
  FieldElement s = zero();
  for (std::size_t i = 0; i < m_; ++i) s += apply_aut(i, a);
  return to_base(s);
}

FieldElement GaloisExtension::partial_trace(const FieldElement& a, const std::vector<std::size_t>& subgroup) const {
  if (!has_group()) throw Error(ErrorCode::NotAGroup, "Galois group not installed");
  const std::size_t n = images_.size();
  std::vector<bool> in(n, false);
  for (auto h : subgroup) {
    if (h >= n) throw Error(ErrorCode::IndexOutOfRange, "subgroup index");
    in[h] = true;
  }
  if (!in[0]) throw Error(ErrorCode::NotASubgroup, "subgroup must contain the identity");
  for (auto h : subgroup)
    for (auto g : subgroup)
      if (!in[compose(h, g)]) throw Error(ErrorCode::NotASubgroup, "not closed under composition");
  for (auto h : subgroup)
    if (apply_aut(h, a) != a) throw Error(ErrorCode::NotFixed, a.to_string() + " is not fixed by the subgroup");
  std::vector<bool> covered(n, false);
  FieldElement s = zero();
  for (std::size_t g = 0; g < n; ++g) {
    if (covered[g]) continue;
    for (std::size_t h = 0; h < n; ++h)
      if (in[h]) covered[compose(g, h)] = true;
    s += apply_aut(g, a);
  }
  return s;
}

bool GaloisExtension::in_base(const FieldElement& a) const {
  for (std::size_t i = 1; i < m_; ++i)
    if (!base_->is_zero(a.reps()[i])) return false;
  return true;
}

Scalar GaloisExtension::to_base(const FieldElement& a) const {
  if (!in_base(a)) throw Error(ErrorCode::NotInBase, a.to_string());
  return a.coeff(0);
}

bool GaloisExtension::linearly_independent(const std::vector<FieldElement>& v) const {
  if (v.empty()) return true;
  if (v.size() > m_) return false;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& x : v) rows.push_back(x.coeffs());
  return rank(Matrix<Scalar>::from_rows(rows)) == v.size();
}

std::vector<Rep> GaloisExtension::mul_reps(const std::vector<Rep>& a, const std::vector<Rep>& b) const {
  const auto& F = *base_;
  if (m_ == 1) return {F.mul(a[0], b[0])};
  std::vector<Rep> r(2 * m_ - 1, F.zero_rep());
  for (std::size_t i = 0; i < m_; ++i) {
    if (F.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < m_; ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  for (std::size_t d = 2 * m_ - 1; d-- > m_;) {
    if (F.is_zero(r[d])) continue;
    for (std::size_t i = 0; i < m_; ++i) r[i] = F.add(r[i], F.mul(r[d], reduction_[d - m_][i]));
  }
  r.resize(m_);
  return r;
}

std::string GaloisExtension::format(const std::vector<Rep>& a) const {
  return Poly(base_, a).to_string(var_);
}

std::vector<Scalar> FieldElement::coeffs() const {
  std::vector<Scalar> out;
  for (const auto& c : c_) out.emplace_back(ext_->base(), c);
  return out;
}

bool FieldElement::is_zero() const {
  for (const auto& c : c_)
    if (!ext_->base()->is_zero(c)) return false;
  return true;
}

bool FieldElement::is_one() const { return *this == ext_->one(); }

FieldElement FieldElement::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + ext_->describe());
  auto eg = extended_gcd(Poly(ext_->base(), c_), ext_->modulus());
  return ext_->from_poly(eg.s);
}

FieldElement FieldElement::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  FieldElement r = ext_->one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

void FieldElement::check(const FieldElement& o) const {
  if (ext_ != o.ext_ && !ext_->same_as(*o.ext_))
    throw Error(ErrorCode::FieldMismatch, ext_->describe() + " vs " + o.ext_->describe());
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = ext_->base()->neg(c);
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = ext_->base()->add(c_[i], o.c_[i]);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = ext_->base()->sub(c_[i], o.c_[i]);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check(o);
  c_ = ext_->mul_reps(c_, o.c_);
  return *this;
}

FieldElement& FieldElement::operator*=(const Scalar& s) {
  for (auto& c : c_) c = ext_->base()->mul(c, s.rep());
  return *this;
}

bool FieldElement::operator==(const FieldElement& o) const {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!ext_->base()->equal(c_[i], o.c_[i])) return false;
  return true;
}

}  // namespace menichetti
