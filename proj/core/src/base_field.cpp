#include "menichetti/base_field.hpp"

#include <sstream>

namespace menichetti {

namespace {

constexpr std::uint64_t kMaxTableOrder = 1024;

std::uint32_t as_code(const Rep& r) { return std::get<std::uint32_t>(r); }
const mpq_class& as_q(const Rep& r) { return std::get<mpq_class>(r); }

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BaseField::BaseField(Token, std::uint32_t p, std::vector<std::uint32_t> modulus, std::string var)
    : p_(p), modulus_(std::move(modulus)), var_(std::move(var)) {
  if (p_ == 0) return;
  e_ = modulus_.empty() ? 1 : static_cast<std::uint32_t>(modulus_.size() - 1);
  q_ = 1;
  for (std::uint32_t i = 0; i < e_; ++i) q_ *= p_;
  if (e_ > 1) build_tables();
}

BaseFieldPtr BaseField::rationals() {
  static const BaseFieldPtr q = std::make_shared<const BaseField>(Token{}, 0, std::vector<std::uint32_t>{}, "");
  return q;
}

BaseFieldPtr BaseField::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw Error(ErrorCode::Unsupported, "characteristic must be a prime below 2^31");
  return std::make_shared<const BaseField>(Token{}, p, std::vector<std::uint32_t>{}, "");
}

BaseFieldPtr BaseField::galois(std::uint32_t p, std::vector<std::uint32_t> modulus, std::string var) {
  if (!is_prime(p)) throw Error(ErrorCode::Unsupported, "characteristic must be prime");
  while (!modulus.empty() && modulus.back() % p == 0) modulus.pop_back();
  if (modulus.size() < 2) throw Error(ErrorCode::NotIrreducible, "base modulus must have positive degree");
  for (auto& c : modulus) c %= p;
  if (modulus.back() != 1) throw Error(ErrorCode::Parse, "base modulus must be monic");
  if (modulus.size() == 2) return prime(p);
  std::uint64_t q = 1;
  for (std::size_t i = 1; i < modulus.size(); ++i) {
    q *= p;
    if (q > kMaxTableOrder) throw Error(ErrorCode::Unsupported, "base field GF(p^e) limited to 1024 elements");
  }
  return std::make_shared<const BaseField>(Token{}, p, std::move(modulus), std::move(var));
}

void BaseField::build_tables() {
  const auto q = static_cast<std::uint32_t>(q_);
  add_.assign(std::size_t(q) * q, 0);
  mul_.assign(std::size_t(q) * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, 0);
  std::vector<std::vector<std::uint32_t>> dig(q);
  for (std::uint32_t c = 0; c < q; ++c) dig[c] = digits(c);
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p_ + d[i];
    return c;
  };
  for (std::uint32_t a = 0; a < q; ++a) {
    std::vector<std::uint32_t> n(e_);
    for (std::uint32_t i = 0; i < e_; ++i) n[i] = (p_ - dig[a][i]) % p_;
    neg_[a] = encode(n);
    for (std::uint32_t b = 0; b < q; ++b) {
      std::vector<std::uint32_t> s(e_);
      for (std::uint32_t i = 0; i < e_; ++i) s[i] = (dig[a][i] + dig[b][i]) % p_;
      add_[std::size_t(a) * q + b] = encode(s);
      std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
      for (std::uint32_t i = 0; i < e_; ++i)
        for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(dig[a][i]) * dig[b][j]) % p_;
      for (std::size_t d = prod.size(); d-- > e_;) {
        std::uint64_t c = prod[d];
        if (!c) continue;
        for (std::uint32_t i = 0; i < e_; ++i) prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - modulus_[i]) * c) % p_;
        prod[d] = 0;
      }
      std::vector<std::uint32_t> r(e_);
      for (std::uint32_t i = 0; i < e_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
      mul_[std::size_t(a) * q + b] = encode(r);
    }
  }
  for (std::uint32_t a = 1; a < q; ++a) {
    bool found = false;
    for (std::uint32_t b = 1; b < q && !found; ++b)
      if (mul_[std::size_t(a) * q + b] == 1) {
        inv_[a] = b;
        found = true;
      }
    if (!found) throw Error(ErrorCode::NotIrreducible, "base modulus is reducible over GF(" + std::to_string(p_) + ")");
  }
}

std::vector<std::uint32_t> BaseField::digits(std::uint32_t code) const {
  std::vector<std::uint32_t> d(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

std::string BaseField::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(q_) + ")";
}

bool BaseField::same_as(const BaseField& o) const {
  return this == &o || (p_ == o.p_ && modulus_ == o.modulus_);
}

Scalar BaseField::zero() const { return {shared_from_this(), zero_rep()}; }
Scalar BaseField::one() const { return {shared_from_this(), one_rep()}; }
Scalar BaseField::from_int(long long v) const { return {shared_from_this(), rep_from_int(v)}; }

Scalar BaseField::from_mpz(const mpz_class& v) const {
  if (is_rational()) return {shared_from_this(), mpq_class(v)};
  mpz_class r = v % p_;
  if (r < 0) r += p_;
  return from_int(r.get_si());
}

Scalar BaseField::from_rational(const mpq_class& v) const {
  if (is_rational()) return {shared_from_this(), v};
  Scalar den = from_mpz(v.get_den());
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
  return from_mpz(v.get_num()) / den;
}

Scalar BaseField::generator() const {
  if (e_ < 2) throw Error(ErrorCode::Unsupported, "field has no adjoined generator");
  return {shared_from_this(), std::uint32_t(p_)};
}

Scalar BaseField::element(std::uint64_t code) const {
  if (!is_finite() || code >= q_) throw Error(ErrorCode::IndexOutOfRange, "element code out of range");
  return {shared_from_this(), static_cast<std::uint32_t>(code)};
}

std::uint32_t BaseField::code(const Scalar& s) const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteField, "codes exist only for finite fields");
  return as_code(s.rep());
}

std::vector<Scalar> BaseField::elements() const {
  if (!is_finite()) throw Error(ErrorCode::InfiniteField, "cannot enumerate Q");
  std::vector<Scalar> out;
  out.reserve(q_);
  for (std::uint64_t c = 0; c < q_; ++c) out.push_back(element(c));
  return out;
}

Rep BaseField::zero_rep() const {
  if (is_rational()) return mpq_class(0);
  return std::uint32_t(0);
}

Rep BaseField::one_rep() const {
  if (is_rational()) return mpq_class(1);
  return std::uint32_t(1);
}

Rep BaseField::rep_from_int(long long v) const {
  if (is_rational()) return mpq_class(mpz_class(std::to_string(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);  // prime subfield codes coincide with residues
}

Rep BaseField::add(const Rep& a, const Rep& b) const {
  if (is_rational()) return mpq_class(as_q(a) + as_q(b));
  if (e_ > 1) return add_[std::size_t(as_code(a)) * q_ + as_code(b)];
  std::uint64_t s = std::uint64_t(as_code(a)) + as_code(b);
  return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
}

Rep BaseField::sub(const Rep& a, const Rep& b) const { return add(a, neg(b)); }

Rep BaseField::mul(const Rep& a, const Rep& b) const {
  if (is_rational()) return mpq_class(as_q(a) * as_q(b));
  if (e_ > 1) return mul_[std::size_t(as_code(a)) * q_ + as_code(b)];
  return static_cast<std::uint32_t>(std::uint64_t(as_code(a)) * as_code(b) % p_);
}

Rep BaseField::neg(const Rep& a) const {
  if (is_rational()) return mpq_class(-as_q(a));
  if (e_ > 1) return neg_[as_code(a)];
  return as_code(a) == 0 ? 0u : p_ - as_code(a);
}

Rep BaseField::inv(const Rep& a) const {
  if (is_zero(a)) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return mpq_class(1 / as_q(a));
  if (e_ > 1) return inv_[as_code(a)];
  return static_cast<std::uint32_t>(pow_mod(as_code(a), p_ - 2, p_));
}

bool BaseField::is_zero(const Rep& a) const {
  if (is_rational()) return as_q(a) == 0;
  return as_code(a) == 0;
}

bool BaseField::equal(const Rep& a, const Rep& b) const {
  if (is_rational()) return as_q(a) == as_q(b);
  return as_code(a) == as_code(b);
}

std::string BaseField::format(const Rep& a) const {
  if (is_rational()) return as_q(a).get_str();
  if (e_ == 1) return std::to_string(as_code(a));
  auto d = digits(as_code(a));
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!d[i]) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i > 0) {
      if (d[i] != 1) out += "*";
      out += var_;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r = field_->one(), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

const mpq_class& Scalar::rational() const {
  if (!field_->is_rational()) throw Error(ErrorCode::Unsupported, "not a rational scalar");
  return as_q(rep_);
}

void Scalar::check(const Scalar& o) const {
  if (field_ != o.field_ && !field_->same_as(*o.field_))
    throw Error(ErrorCode::FieldMismatch, field_->name() + " vs " + o.field_->name());
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  rep_ = field_->add(rep_, o.rep_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  rep_ = field_->sub(rep_, o.rep_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  rep_ = field_->mul(rep_, o.rep_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  rep_ = field_->mul(rep_, field_->inv(o.rep_));
  return *this;
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  return field_->equal(rep_, o.rep_);
}

}  // namespace menichetti
