#include "menichetti/structure.hpp"

#include "menichetti/matrix.hpp"

namespace menichetti {

StructureTable::StructureTable(BaseFieldPtr field, std::size_t dim)
    : field_(std::move(field)), n_(dim), d_(dim * dim * dim, field_->zero_rep()) {}

Vec StructureTable::product(std::size_t a, std::size_t b) const {
  Vec v;
  v.reserve(n_);
  for (std::size_t c = 0; c < n_; ++c) v.push_back(at(a, b, c));
  return v;
}

Vec StructureTable::basis_vector(std::size_t a) const {
  Vec v(n_, field_->zero());
  v[a] = field_->one();
  return v;
}

Vec StructureTable::multiply(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw Error(ErrorCode::DimensionMismatch, "coordinate length");
  std::vector<Rep> out(n_, field_->zero_rep());
  for (std::size_t a = 0; a < n_; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < n_; ++b) {
      if (y[b].is_zero()) continue;
      Rep xy = field_->mul(x[a].rep(), y[b].rep());
      const Rep* row = &d_[(a * n_ + b) * n_];
      for (std::size_t c = 0; c < n_; ++c)
        if (!field_->is_zero(row[c])) out[c] = field_->add(out[c], field_->mul(xy, row[c]));
    }
  }
  Vec v;
  for (auto& r : out) v.emplace_back(field_, std::move(r));
  return v;
}

StructureTable StructureTable::opposite() const {
  StructureTable t(field_, n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c) t.d_[(a * n_ + b) * n_ + c] = d_[(b * n_ + a) * n_ + c];
  return t;
}

bool StructureTable::operator==(const StructureTable& o) const { return !first_difference(o).has_value(); }

std::optional<std::pair<std::size_t, std::size_t>> StructureTable::first_difference(const StructureTable& o) const {
  if (n_ != o.n_) return std::make_pair(n_, o.n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        if (!field_->equal(d_[(a * n_ + b) * n_ + c], o.d_[(a * n_ + b) * n_ + c])) return std::make_pair(a, b);
  return std::nullopt;
}

namespace {

// assoc[((p*n + x)*n + y)] = coordinates of (e_p e_x) e_y - e_p (e_x e_y)
std::vector<Vec> associator_tensor(const StructureTable& t) {
  const std::size_t n = t.dim();
  std::vector<Vec> prod(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) prod[a * n + b] = t.product(a, b);
  std::vector<Vec> assoc(n * n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        Vec r(n, t.field()->zero());
        const Vec& px = prod[p * n + x];
        const Vec& xy = prod[x * n + y];
        for (std::size_t u = 0; u < n; ++u) {
          if (!px[u].is_zero())
            for (std::size_t w = 0; w < n; ++w) r[w] += px[u] * prod[u * n + y][w];
          if (!xy[u].is_zero())
            for (std::size_t w = 0; w < n; ++w) r[w] -= xy[u] * prod[p * n + u][w];
        }
        assoc[(p * n + x) * n + y] = std::move(r);
      }
  return assoc;
}

Subspace solve_homogeneous(std::vector<Vec>& rows, std::size_t n, const BaseFieldPtr& field) {
  if (rows.empty()) {
    Subspace all;
    for (std::size_t i = 0; i < n; ++i) {
      Vec v(n, field->zero());
      v[i] = field->one();
      all.push_back(v);
    }
    return all;
  }
  auto kernel = nullspace(Matrix<Scalar>::from_rows(rows));
  return row_basis(kernel);
}

}  // namespace

Subspace nucleus(const StructureTable& t, NucleusPart part) {
  const std::size_t n = t.dim();
  if (part == NucleusPart::Full || part == NucleusPart::Center) {
    Subspace s = nucleus(t, NucleusPart::Left);
    s = intersect(s, nucleus(t, NucleusPart::Middle), n, t.field());
    s = intersect(s, nucleus(t, NucleusPart::Right), n, t.field());
    if (part == NucleusPart::Center) {
      std::vector<Vec> basis;
      for (std::size_t i = 0; i < n; ++i) basis.push_back(t.basis_vector(i));
      s = intersect(s, commutant(t, basis), n, t.field());
    }
    return s;
  }
  auto assoc = associator_tensor(t);
  std::vector<Vec> rows;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t w = 0; w < n; ++w) {
        Vec row;
        bool nonzero = false;
        for (std::size_t p = 0; p < n; ++p) {
          std::size_t idx = part == NucleusPart::Left     ? (p * n + x) * n + y
                            : part == NucleusPart::Middle ? (x * n + p) * n + y
                                                          : (x * n + y) * n + p;
          row.push_back(assoc[idx][w]);
          nonzero = nonzero || !row.back().is_zero();
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  return solve_homogeneous(rows, n, t.field());
}

Subspace commutant(const StructureTable& t, const std::vector<Vec>& elements) {
  const std::size_t n = t.dim();
  std::vector<Vec> rows;
  for (const auto& e : elements) {
    // columns p: e_p e - e e_p
    std::vector<Vec> cols;
    for (std::size_t p = 0; p < n; ++p) {
      Vec bp = t.basis_vector(p);
      Vec l = t.multiply(bp, e), r = t.multiply(e, bp);
      for (std::size_t w = 0; w < n; ++w) l[w] -= r[w];
      cols.push_back(std::move(l));
    }
    for (std::size_t w = 0; w < n; ++w) {
      Vec row;
      bool nonzero = false;
      for (std::size_t p = 0; p < n; ++p) {
        row.push_back(cols[p][w]);
        nonzero = nonzero || !row.back().is_zero();
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }
  return solve_homogeneous(rows, n, t.field());
}

Subspace intersect(const Subspace& a, const Subspace& b, std::size_t dim, const BaseFieldPtr& field) {
  if (a.empty() || b.empty()) return {};
  // v = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
  Matrix<Scalar> m(dim, a.size() + b.size(), field->zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < dim; ++r) m(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < dim; ++r) m(r, a.size() + j) = -b[j][r];
  std::vector<Vec> vectors;
  for (const auto& k : nullspace(m)) {
    Vec v(dim, field->zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t r = 0; r < dim; ++r) v[r] += k[i] * a[i][r];
    vectors.push_back(std::move(v));
  }
  return row_basis(vectors);
}

bool in_subspace(const Subspace& s, const Vec& v) {
  bool zero = true;
  for (const auto& c : v) zero = zero && c.is_zero();
  if (zero) return true;
  if (s.empty()) return false;
  std::vector<Vec> rows = s;
  rows.push_back(v);
  return rank(Matrix<Scalar>::from_rows(rows)) == s.size();
}

bool is_associative(const StructureTable& t) {
  for (const auto& v : associator_tensor(t))
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

std::vector<Vec> center_by_enumeration(const StructureTable& t, std::uint64_t max_elements) {
  const auto& F = t.field();
  if (!F->is_finite()) throw Error(ErrorCode::InfiniteField, "center scan needs a finite field");
  const std::size_t n = t.dim();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= F->order();
    if (total > max_elements) throw Error(ErrorCode::BudgetExceeded, "algebra has more than " + std::to_string(max_elements) + " elements");
  }
  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(t.basis_vector(i));
  auto is_zero = [](const Vec& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return false;
    return true;
  };
  auto diff = [](Vec a, const Vec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  std::vector<Vec> central;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Vec a;
    std::uint64_t r = idx;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(F->element(r % F->order()));
      r /= F->order();
    }
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!is_zero(diff(t.multiply(a, basis[x]), t.multiply(basis[x], a)))) ok = false;
      for (std::size_t y = 0; y < n && ok; ++y) {
        const Vec& ex = basis[x];
        const Vec& ey = basis[y];
        Vec exy = t.multiply(ex, ey);
        if (!is_zero(diff(t.multiply(t.multiply(a, ex), ey), t.multiply(a, exy)))) ok = false;
        else if (!is_zero(diff(t.multiply(t.multiply(ex, a), ey), t.multiply(ex, t.multiply(a, ey))))) ok = false;
        else if (!is_zero(diff(t.multiply(exy, a), t.multiply(ex, t.multiply(ey, a))))) ok = false;
      }
    }
    if (ok) central.push_back(std::move(a));
  }
  return central;
}

std::vector<std::pair<std::size_t, std::size_t>> homomorphism_failures(const StructureTable& src, const StructureTable& dst,
                                                                       const std::vector<Vec>& images) {
  const std::size_t n = src.dim();
  if (images.size() != n) throw Error(ErrorCode::DimensionMismatch, "need one image per basis element");
  auto apply = [&](const Vec& v) {
    Vec out(dst.dim(), dst.field()->zero());
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero())
        for (std::size_t j = 0; j < dst.dim(); ++j) out[j] += v[i] * images[i][j];
    return out;
  };
  std::vector<std::pair<std::size_t, std::size_t>> bad;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (apply(src.product(a, b)) != dst.multiply(images[a], images[b])) bad.emplace_back(a, b);
  return bad;
}

}  // namespace menichetti
