#include <algorithm>
#include <cmath>
#include <numeric>

#include "menichetti/determinant.hpp"
#include "menichetti/division.hpp"
#include "menichetti/error.hpp"
#include "menichetti/fast_field.hpp"
#include "menichetti/poly.hpp"
#include "menichetti/scan.hpp"

namespace menichetti {

namespace {

using Code = FastField::Code;

std::optional<std::uint32_t> mod_rational(const mpq_class& v, std::uint32_t ell) {
  mpz_class num = v.get_num() % ell, den = v.get_den() % ell;
  if (den == 0) return std::nullopt;
  if (num < 0) num += ell;
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(ell).get_mpz_t());
  return static_cast<std::uint32_t>(mpz_class(num * inv % ell).get_ui());
}

// Reduction of the algebra modulo a prime: R = GF(l)[t]/(f mod l) split into fields L_c.
class ModularImage {
 public:
  static std::optional<ModularImage> build(const MenichettiSpec& spec, std::uint32_t ell);

  std::uint32_t ell() const { return ell_; }
  const std::vector<OrbitScanner::Component>& components() const { return comps_; }
  double cost() const { return OrbitScanner(m_, comps_).representative_count(); }

  // Tables for integer coefficients in [-H, H].
  void prepare_small(long H) {
    small_h_ = H;
    small_.assign(comps_.size(), {});
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      const FastField& f = *comps_[c].field;
      for (std::size_t s = 0; s < m_; ++s)
        for (long v = -H; v <= H; ++v) {
          long r = v % long(ell_);
          if (r < 0) r += ell_;
          small_[c].push_back(f.mul(Code(r), theta_pow_[c][s]));
        }
    }
    xc_.assign(comps_.size() * m_, 0);
    ready_.assign(comps_.size(), 0);
    mat_.assign(m_ * m_, 0);
  }

  // det M(x) vanishes in every component; x[i * m + s] is the coefficient of t^s in x_i.
  bool det_vanishes(const long* x) const {
    const std::size_t C = comps_.size();
    const std::size_t width = std::size_t(2 * small_h_ + 1);
    std::fill(ready_.begin(), ready_.end(), 0);
    auto coords = [&](std::size_t c) {
      if (!ready_[c]) {
        const FastField& f = *comps_[c].field;
        const Code* tab = small_[c].data();
        for (std::size_t i = 0; i < m_; ++i) {
          Code acc = 0;
          for (std::size_t s = 0; s < m_; ++s) acc = f.add(acc, tab[s * width + std::size_t(x[i * m_ + s] + small_h_)]);
          xc_[c * m_ + i] = acc;
        }
        ready_[c] = 1;
      }
      return &xc_[c * m_];
    };
    for (std::size_t c = 0; c < C; ++c) {
      const auto& comp = comps_[c];
      for (std::size_t j = 0; j < m_; ++j) {
        const Code* src = coords(comp.source[j]);
        for (std::size_t r = 0; r < m_; ++r) {
          std::size_t i = (r + m_ - j) % m_;
          mat_[r * m_ + j] = comp.field->mul(comp.cocycle[i][j], comp.phi[j][src[i]]);
        }
      }
      if (fast_det(*comp.field, mat_.data(), m_) != 0) return false;
    }
    return true;
  }

  std::uint32_t largest_component() const {
    std::uint32_t q = 0;
    for (const auto& c : comps_) q = std::max(q, c.field->size());
    return q;
  }

  // Coefficients mod l of the element of R with component c equal to u and all others zero.
  const std::uint32_t* lift_row(std::size_t c, Code u) const { return &crt_[c][std::size_t(u) * m_]; }

 private:
  std::uint32_t ell_ = 0;
  std::size_t m_ = 0;
  std::vector<OrbitScanner::Component> comps_;
  std::vector<std::vector<Code>> theta_pow_;   // [c][s]: t^s in L_c
  std::vector<std::vector<std::uint32_t>> crt_;  // [c][u * m + s]
  long small_h_ = 0;
  std::vector<std::vector<Code>> small_;
  mutable std::vector<Code> xc_, mat_;
  mutable std::vector<char> ready_;
};

std::optional<ModularImage> ModularImage::build(const MenichettiSpec& spec, std::uint32_t ell) {
  const auto& K = *spec.ext();
  const std::size_t m = spec.m();
  auto Fl = BaseField::prime(ell);

  auto reduce_coeffs = [&](const FieldElement& a) -> std::optional<std::vector<std::uint32_t>> {
    std::vector<std::uint32_t> out;
    for (const auto& s : a.coeffs()) {
      auto r = mod_rational(s.rational(), ell);
      if (!r) return std::nullopt;
      out.push_back(*r);
    }
    return out;
  };
  auto to_poly = [&](const std::vector<std::uint32_t>& c) {
    std::vector<Rep> reps(c.begin(), c.end());
    return Poly(Fl, std::move(reps));
  };

  std::vector<std::uint32_t> fcoef;
  for (const auto& r : K.modulus().coeffs()) {
    auto v = mod_rational(std::get<mpq_class>(r), ell);
    if (!v) return std::nullopt;
    fcoef.push_back(*v);
  }
  Poly fbar = to_poly(fcoef);
  if (fbar.degree() != int(m)) return std::nullopt;
  if (gcd(fbar, fbar.derivative()).degree() != 0) return std::nullopt;

  std::vector<std::vector<std::uint32_t>> images(m), cocycles(m * m);
  for (std::size_t j = 0; j < m; ++j) {
    auto v = reduce_coeffs(K.aut_image(spec.tau()[j]));
    if (!v) return std::nullopt;
    images[j] = *v;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto v = reduce_coeffs(spec.cocycle(i, j));
      if (!v) return std::nullopt;
      cocycles[i * m + j] = *v;
    }

  auto factors = factor_squarefree(fbar, ell);
  const std::size_t C = factors.size();
  std::uint64_t x0_space = 1;
  for (const auto& g : factors) {
    double size = std::pow(double(ell), g.degree());
    if (size > 4096) return std::nullopt;
    x0_space *= std::uint64_t(size);
  }
  if (x0_space * C * (std::uint64_t(1) << m) > (std::uint64_t(1) << 26)) return std::nullopt;

  ModularImage img;
  img.ell_ = ell;
  img.m_ = m;
  std::vector<std::shared_ptr<const FastField>> fields;
  for (const auto& g : factors) fields.push_back(std::make_shared<const FastField>(*GaloisExtension::ring(Fl, "t", g)));

  auto digits = [&](Code u, std::size_t len) {
    std::vector<std::uint32_t> d(len);
    for (std::size_t k = 0; k < len; ++k) {
      d[k] = u % ell;
      u = Code(u / ell);
    }
    return d;
  };
  // Evaluate a polynomial with GF(l) coefficients at a point of L_c.
  auto eval_at = [&](const std::vector<std::uint32_t>& coeffs, std::size_t c, Code point) {
    const FastField& f = *fields[c];
    Code acc = 0, pw = 1;
    for (auto a : coeffs) {
      acc = f.add(acc, f.mul(Code(a), pw));
      pw = f.mul(pw, point);
    }
    return acc;
  };

  img.theta_pow_.resize(C);
  for (std::size_t c = 0; c < C; ++c) {
    const FastField& f = *fields[c];
    Code theta = f.code(f.extension().gen());
    Code pw = 1;
    for (std::size_t s = 0; s < m; ++s) {
      img.theta_pow_[c].push_back(pw);
      pw = f.mul(pw, theta);
    }
  }
  auto reduce_to = [&](const std::vector<std::uint32_t>& coeffs, std::size_t c) {
    const FastField& f = *fields[c];
    Code acc = 0;
    for (std::size_t s = 0; s < coeffs.size(); ++s) acc = f.add(acc, f.mul(Code(coeffs[s]), img.theta_pow_[c][s]));
    return acc;
  };

  for (std::size_t c = 0; c < C; ++c) {
    OrbitScanner::Component comp;
    comp.field = fields[c];
    comp.cocycle.assign(m, std::vector<Code>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) comp.cocycle[i][j] = reduce_to(cocycles[i * m + j], c);
    comp.source.resize(m);
    comp.phi.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      Code beta = reduce_to(images[j], c);
      std::size_t s = C;
      for (std::size_t t = 0; t < C && s == C; ++t) {
        std::vector<std::uint32_t> g;
        for (const auto& r : factors[t].coeffs()) g.push_back(std::get<std::uint32_t>(r));
        if (eval_at(g, c, beta) == 0) s = t;
      }
      if (s == C) return std::nullopt;
      comp.source[j] = s;
      const std::uint32_t size = fields[s]->size();
      const std::size_t deg = std::size_t(factors[s].degree());
      comp.phi[j].resize(size);
      for (std::uint32_t u = 0; u < size; ++u) comp.phi[j][u] = eval_at(digits(Code(u), deg), c, beta);
    }
    img.comps_.push_back(std::move(comp));
  }

  img.crt_.resize(C);
  for (std::size_t c = 0; c < C; ++c) {
    Poly cof = fbar / factors[c];
    auto eg = extended_gcd(cof % factors[c], factors[c]);
    Poly e = mulmod(cof, eg.s, fbar);
    const std::uint32_t size = fields[c]->size();
    const std::size_t deg = std::size_t(factors[c].degree());
    img.crt_[c].assign(std::size_t(size) * m, 0);
    for (std::uint32_t u = 0; u < size; ++u) {
      Poly lifted = mulmod(to_poly(digits(Code(u), deg)), e, fbar);
      for (std::size_t s = 0; s < lifted.coeffs().size(); ++s)
        img.crt_[c][std::size_t(u) * m + s] = std::get<std::uint32_t>(lifted.coeffs()[s]);
    }
  }
  return img;
}

AlgElement from_integers(const MenichettiSpec& spec, const std::vector<std::vector<long>>& x) {
  const auto& K = *spec.ext();
  std::vector<FieldElement> coords;
  for (const auto& xi : x) {
    std::vector<Scalar> c;
    for (long v : xi) c.push_back(K.base()->from_int(v));
    coords.push_back(K.from_coeffs(c));
  }
  return AlgElement(std::move(coords));
}

bool finish(const MenichettiSpec& spec, const AlgElement& x, HeightResult& out) {
  if (!det_general(spec, x).is_zero()) return false;
  auto y = right_annihilator(spec, x);
  if (!y || !verify_zero_divisor(spec, x, *y)) return false;
  out.found = true;
  out.x = x;
  out.y = *y;
  return true;
}

constexpr double kGridLimit = 2e5;
constexpr double kPreferredReps = 2e7;

}  // namespace

HeightResult height_search(const MenichettiSpec& spec, int height, HeightMethod method) {
  const auto& K = *spec.ext();
  if (!K.base()->is_rational()) throw Error(ErrorCode::Unsupported, "height search runs over the rationals");
  const std::size_t m = spec.m();
  HeightResult out;
  out.height = height;
  if (height <= 0) {
    out.method = "empty";
    return out;
  }
  const long H = height;
  const double grid = std::pow(double(2 * H + 1), double(m * m));

  if (method == HeightMethod::Grid || (method == HeightMethod::Auto && grid <= kGridLimit)) {
    out.method = "grid";
    // x and -x have the same determinant up to sign: first nonzero coefficient positive.
    std::vector<long> flat(m * m, -H);
    while (true) {
      auto first = std::find_if(flat.begin(), flat.end(), [](long v) { return v != 0; });
      if (first != flat.end() && *first > 0) {
        ++out.examined;
        std::vector<std::vector<long>> x(m, std::vector<long>(m));
        for (std::size_t i = 0; i < m * m; ++i) x[i / m][i % m] = flat[i];
        if (finish(spec, from_integers(spec, x), out)) return out;
      }
      std::size_t p = 0;
      while (p < flat.size()) {
        if (++flat[p] <= H) break;
        flat[p] = -H;
        ++p;
      }
      if (p == flat.size()) break;
    }
    return out;
  }

  // Sieve: det M(x) = 0 over Q forces det = 0 modulo every prime at which the data is integral.
  std::vector<ModularImage> images;
  for (std::uint32_t ell = std::max<std::uint32_t>(3, std::uint32_t(2 * H + 1)); ell < 400 && images.size() < 24; ++ell) {
    if (!is_prime(ell)) continue;
    if (auto img = ModularImage::build(spec, ell)) images.push_back(std::move(*img));
  }
  if (images.empty()) throw Error(ErrorCode::Unsupported, "no usable prime for the height sieve");
  std::size_t pick = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i].cost() <= kPreferredReps) pick = i;
  ModularImage& main = images[pick];
  // Up to two further primes with the smallest tables reject candidates before exact arithmetic.
  std::vector<ModularImage*> filters;
  for (auto& img : images)
    if (img.ell() != main.ell()) filters.push_back(&img);
  std::stable_sort(filters.begin(), filters.end(),
                   [](const ModularImage* a, const ModularImage* b) { return a->largest_component() < b->largest_component(); });
  if (filters.size() > 2) filters.resize(2);
  for (auto* f : filters) f->prepare_small(H);
  out.method = "sieve mod " + std::to_string(main.ell());

  const std::size_t C = main.components().size();
  const std::size_t mm = m * m;
  const long ell = long(main.ell());
  OrbitScanner scanner(m, main.components());
  std::vector<long> point(mm);
  std::vector<std::vector<std::uint32_t>> lifted(C);  // [c][e * mm + i * m + s] for lambda = g^e
  std::vector<std::size_t> live, count(C);
  std::vector<std::size_t> lambda(C);
  // Symmetric representative of a sum of C residues.
  std::vector<long> symmetric(C * std::size_t(ell));
  for (std::size_t v = 0; v < symmetric.size(); ++v) {
    long r = long(v) % ell;
    symmetric[v] = r > ell / 2 ? r - ell : r;
  }

  out.examined = scanner.scan([&](const std::vector<std::vector<Code>>& u) {
    live.clear();
    for (std::size_t c = 0; c < C; ++c) {
      if (std::none_of(u[c].begin(), u[c].end(), [](Code v) { return v != 0; })) continue;
      const FastField& f = *main.components()[c].field;
      const std::uint32_t units = f.size() - 1;
      // x and -x are both zero divisors or neither: the first live component uses half the units.
      count[c] = live.empty() ? units / 2 : units;
      live.push_back(c);
      lifted[c].assign(count[c] * mm, 0);
      for (std::uint32_t e = 0; e < count[c]; ++e)
        for (std::size_t i = 0; i < m; ++i) {
          const std::uint32_t* row = main.lift_row(c, f.mul(f.exp_log(e), u[c][i]));
          std::copy(row, row + m, lifted[c].begin() + std::ptrdiff_t(e * mm + i * m));
        }
      lambda[c] = 0;
    }
    while (true) {
      bool inside = true;
      for (std::size_t k = 0; k < mm && inside; ++k) {
        std::uint32_t v = 0;
        for (auto c : live) v += lifted[c][lambda[c] * mm + k];
        point[k] = symmetric[v];
        inside = point[k] >= -H && point[k] <= H;
      }
      if (inside) {
        ++out.candidates;
        bool pass = true;
        for (auto* f : filters)
          if (pass) pass = f->det_vanishes(point.data());
        if (pass) {
          std::vector<std::vector<long>> x(m, std::vector<long>(m));
          for (std::size_t k = 0; k < mm; ++k) x[k / m][k % m] = point[k];
          if (finish(spec, from_integers(spec, x), out)) return true;
        }
      }
      std::size_t p = 0;
      while (p < live.size()) {
        std::size_t c = live[p];
        if (++lambda[c] < count[c]) break;
        lambda[c] = 0;
        ++p;
      }
      if (p == live.size()) break;
    }
    return false;
  });
  return out;
}

}  // namespace menichetti
