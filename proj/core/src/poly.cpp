#include "menichetti/poly.hpp"

#include <random>

namespace menichetti {

Poly::Poly(BaseFieldPtr field, std::vector<Rep> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Scalar& constant) : field_(constant.field()) {
  c_.push_back(constant.rep());
  trim();
}

Poly Poly::variable(const BaseFieldPtr& field) { return Poly(field, {field->zero_rep(), field->one_rep()}); }

Poly Poly::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Rep> v(degree + 1, c.field()->zero_rep());
  v[degree] = c.rep();
  return Poly(c.field(), std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && field_->is_zero(c_.back())) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const {
  if (i >= c_.size()) return field_->zero();
  return {field_, c_[i]};
}

Scalar Poly::leading() const {
  if (c_.empty()) return field_->zero();
  return {field_, c_.back()};
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inv();
}

Poly Poly::derivative() const {
  std::vector<Rep> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(field_->mul(c_[i], field_->rep_from_int(static_cast<long long>(i))));
  return Poly(field_, std::move(d));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r = field_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Scalar(field_, c_[i]);
  return r;
}

std::string Poly::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (field_->is_zero(c_[i])) continue;
    std::string c = field_->format(c_[i]);
    bool negative = field_->is_rational() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    bool compound = c.find(' ') != std::string::npos;
    if (i == 0) {
      out += c;
      continue;
    }
    if (c != "1") out += (compound ? "(" + c + ")" : c) + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), field_->zero_rep());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rep> r(c_.size() + o.c_.size() - 1, field_->zero_rep());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (field_->is_zero(c_[i])) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = field_->add(r[i + j], field_->mul(c_[i], o.c_[j]));
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  for (auto& c : c_) c = field_->mul(c, s.rep());
  trim();
  return *this;
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!field_->equal(c_[i], o.c_[i])) return false;
  return true;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  const auto& f = a.field();
  std::vector<Rep> rem = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {Poly(f), a};
  std::vector<Rep> quo(dq + 1, f->zero_rep());
  Rep lead_inv = f->inv(b.coeffs().back());
  for (int d = a.degree(); d >= db; --d) {
    Rep c = f->mul(rem[d], lead_inv);
    quo[d - db] = c;
    if (f->is_zero(c)) continue;
    for (int i = 0; i <= db; ++i) rem[d - db + i] = f->sub(rem[d - db + i], f->mul(c, b.coeffs()[i]));
  }
  rem.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  const auto& f = a.field();
  Poly r0 = a, r1 = b, s0(f->one()), s1(f), t0(f), t1(f->one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar li = r0.leading().inv();
  return {r0 * li, s0 * li, t0 * li};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  Poly result = Poly(base.field()->one()) % mod;
  Poly b = base % mod;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(result, result, mod);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(result, b, mod);
  }
  return result;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

bool rabin_irreducible(const Poly& f) {
  const auto& F = f.field();
  const int n = f.degree();
  mpz_class q(std::to_string(F->order()));
  Poly x = Poly::variable(F);
  std::vector<Poly> frob{x % f};  // frob[k] = x^(q^k) mod f
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), q, f));
  if (frob[n] != x % f) return false;
  for (unsigned r : prime_divisors(static_cast<unsigned>(n)))
    if (gcd(frob[n / r] - x, f).degree() != 0) return false;
  return true;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n > mpz_class("100000000000000")) throw Error(ErrorCode::Unsupported, "constant term too large to factor");
  std::vector<mpz_class> d;
  for (mpz_class i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i * i != n) d.push_back(n / i);
    }
  return d;
}

bool rational_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n <= 1) return n == 1;
  if (n > 4) throw Error(ErrorCode::Unsupported, "irreducibility over Q implemented up to degree 4");
  mpz_class lcm = 1;
  for (int i = 0; i <= n; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), f.coeff(i).rational().get_den_mpz_t());
  std::vector<mpz_class> a(n + 1);
  for (int i = 0; i <= n; ++i) a[i] = mpz_class(f.coeff(i).rational() * lcm);
  // g(y) = a_n^(n-1) f(y / a_n) is monic with integer coefficients.
  std::vector<mpz_class> g(n + 1);
  mpz_class pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    g[i] = a[i] * pw;
    pw *= a[n];
  }
  g[n] = 1;
  if (g[0] == 0) return false;
  auto eval = [&](const mpz_class& y) {
    mpz_class r = 0;
    for (int i = n; i >= 0; --i) r = r * y + g[i];
    return r;
  };
  auto divs = divisors(g[0]);
  for (const auto& d : divs)
    if (eval(d) == 0 || eval(-d) == 0) return false;
  if (n < 4) return true;
  for (const auto& dd : divs) {
    for (int sign : {1, -1}) {
      mpz_class b = dd * sign, d = g[0] / b;
      mpz_class disc = g[3] * g[3] - 4 * (g[2] - b - d);
      if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
      mpz_class root = sqrt(disc);
      if ((g[3] + root) % 2 != 0) continue;
      mpz_class x1 = (g[3] + root) / 2, x2 = (g[3] - root) / 2;
      if (x1 * d + x2 * b == g[1] || x2 * d + x1 * b == g[1]) return false;
    }
  }
  return true;
}

void equal_degree_split(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const auto& F = g.field();
  mpz_class q(std::to_string(F->order()));
  mpz_class e;
  mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  for (;;) {
    std::vector<Rep> c;
    for (int i = 0; i < g.degree(); ++i) c.push_back(F->element(rng() % F->order()).rep());
    Poly a(F, std::move(c));
    if (a.degree() < 1) continue;
    Poly h = gcd(a, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(g / h, d, rng, out);
      return;
    }
    Poly b = powmod(a, e, g) - Poly(F->one());
    h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  if (f.field()->is_finite()) return rabin_irreducible(f.monic());
  return rational_irreducible(f);
}

std::vector<Poly> factor_squarefree(const Poly& f0, std::uint64_t seed) {
  const auto& F = f0.field();
  if (!F->is_finite() || F->order() % 2 == 0) throw Error(ErrorCode::Unsupported, "factoring needs a finite field of odd order");
  std::mt19937_64 rng(seed);
  Poly f = f0.monic();
  Poly x = Poly::variable(F);
  mpz_class q(std::to_string(F->order()));
  std::vector<Poly> out;
  Poly h = x % f;
  for (int d = 1; f.degree() >= 2 * d; ++d) {
    h = powmod(h, q, f);
    Poly g = gcd(h - x, f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back(f);
  return out;
}

}  // namespace menichetti
