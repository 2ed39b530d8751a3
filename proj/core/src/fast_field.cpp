#include "menichetti/fast_field.hpp"

#include <utility>

namespace menichetti {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FastField::FastField(const GaloisExtension& ext) : ext_(ext.shared_from_this()) {
  const std::uint64_t order = ext.order();
  if (order > 4096) throw Error(ErrorCode::Unsupported, "table arithmetic limited to 4096 elements");
  q_ = static_cast<std::uint32_t>(order);
  const auto& F = *ext.base();
  const std::uint32_t qb = static_cast<std::uint32_t>(F.order());
  const std::size_t m = ext.degree();

  std::vector<std::vector<std::uint32_t>> digits(q_);
  for (std::uint32_t c = 0; c < q_; ++c) {
    std::uint32_t v = c;
    for (std::size_t i = 0; i < m; ++i) {
      digits[c].push_back(v % qb);
      v /= qb;
    }
  }
  std::vector<std::uint32_t> base_add(std::size_t(qb) * qb), base_neg(qb);
  for (std::uint32_t a = 0; a < qb; ++a) {
    base_neg[a] = std::get<std::uint32_t>(F.neg(std::uint32_t(a)));
    for (std::uint32_t b = 0; b < qb; ++b) base_add[std::size_t(a) * qb + b] = std::get<std::uint32_t>(F.add(a, b));
  }
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t c = 0;
    for (std::size_t i = m; i-- > 0;) c = c * qb + d[i];
    return static_cast<Code>(c);
  };
  add_.resize(std::size_t(q_) * q_);
  neg_.resize(q_);
  std::vector<std::uint32_t> tmp(m);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::size_t i = 0; i < m; ++i) tmp[i] = base_neg[digits[a][i]];
    neg_[a] = encode(tmp);
    for (std::uint32_t b = 0; b < q_; ++b) {
      for (std::size_t i = 0; i < m; ++i) tmp[i] = base_add[std::size_t(digits[a][i]) * qb + digits[b][i]];
      add_[std::size_t(a) * q_ + b] = encode(tmp);
    }
  }

  // primitive element by order test
  auto factors = prime_factors(q_ - 1);
  FieldElement g = ext.zero();
  for (std::uint32_t c = 1; c < q_; ++c) {
    FieldElement cand = ext.element_at(c);
    bool primitive = true;
    for (auto r : factors)
      if (cand.pow(static_cast<long long>((q_ - 1) / r)).is_one()) {
        primitive = false;
        break;
      }
    if (q_ == 2 || primitive) {
      g = cand;
      break;
    }
  }
  // exp has room for log(0) sentinel sums so that mul needs no branch
  const std::uint32_t zero_log = 2 * q_ - 1;
  exp_.assign(4 * std::size_t(q_), 0);
  log_.assign(q_, zero_log);
  FieldElement p = ext.one();
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    Code c = static_cast<Code>(ext.index_of(p));
    exp_[i] = c;
    exp_[i + q_ - 1] = c;
    log_[c] = i;
    p *= g;
  }

  if (ext.has_group()) {
    aut_.resize(ext.aut_count() * std::size_t(q_));
    for (std::size_t i = 0; i < ext.aut_count(); ++i)
      for (std::uint32_t c = 0; c < q_; ++c)
        aut_[i * q_ + c] = static_cast<Code>(ext.index_of(ext.apply_aut(i, ext.element_at(c))));
  }
}

FastField::Code FastField::code(const FieldElement& a) const { return static_cast<Code>(ext_->index_of(a)); }

FastField::Code fast_det(const FastField& f, FastField::Code* a, std::size_t n) {
  FastField::Code det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      det = f.neg(det);
    }
    const FastField::Code pv = a[col * n + col];
    det = f.mul(det, pv);
    const FastField::Code inv = f.inv(pv);
    for (std::size_t i = col + 1; i < n; ++i) {
      const FastField::Code lead = a[i * n + col];
      if (!lead) continue;
      const FastField::Code factor = f.mul(lead, inv);
      for (std::size_t j = col + 1; j < n; ++j) a[i * n + j] = f.sub(a[i * n + j], f.mul(factor, a[col * n + j]));
    }
  }
  return det;
}

}  // namespace menichetti
