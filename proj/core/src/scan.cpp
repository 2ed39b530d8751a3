#include "menichetti/scan.hpp"

#include <cmath>

#include "menichetti/error.hpp"

namespace menichetti {

OrbitScanner::OrbitScanner(std::size_t m, std::vector<Component> components)
    : m_(m), comps_(std::move(components)) {
  if (m_ < 1 || m_ > 8) throw Error(ErrorCode::Unsupported, "orbit scan supports 1 <= m <= 8");
  if (comps_.empty()) throw Error(ErrorCode::DimensionMismatch, "orbit scan needs a component");
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    const auto& comp = comps_[c];
    if (comp.cocycle.size() != m_ || comp.source.size() != m_ || comp.phi.size() != m_)
      throw Error(ErrorCode::DimensionMismatch, "component tables do not match m");
    for (std::size_t j = 0; j < m_; ++j) {
      if (comp.source[j] >= comps_.size())
        throw Error(ErrorCode::IndexOutOfRange, "component source out of range");
      if (comp.phi[j].size() != comps_[comp.source[j]].field->size())
        throw Error(ErrorCode::DimensionMismatch, "component map has the wrong domain");
    }
  }
}

double OrbitScanner::representative_count() const {
  double total = 1;
  for (const auto& c : comps_) {
    double l = c.field->size();
    total *= (std::pow(l, double(m_)) - 1) / (l - 1) + 1;
  }
  return total - 1;
}

namespace {

using Code = FastField::Code;

// Normalized tails (x_1..x_{m-1}): last nonzero entry is 1. Entry 0 of the list is the zero tail.
std::vector<Code> normalized_tails(std::uint32_t q, std::size_t len) {
  std::vector<Code> out(len, 0);
  std::vector<Code> cur(len);
  for (std::size_t p = 0; p < len; ++p) {
    std::fill(cur.begin(), cur.end(), 0);
    cur[p] = 1;
    while (true) {
      out.insert(out.end(), cur.begin(), cur.end());
      std::size_t i = 0;
      while (i < p) {
        if (++cur[i] < q) break;
        cur[i] = 0;
        ++i;
      }
      if (i == p) break;
    }
  }
  return out;
}

// Field elements as base-p digit vectors packed into lanes of a 64-bit word; addition is
// lane-wise mod p (plain XOR in characteristic 2).
struct PackedDigits {
  std::uint32_t p = 2;
  unsigned width = 8;
  std::uint64_t high = 0, bias = 0;

  explicit PackedDigits(std::uint32_t characteristic, std::uint32_t q) : p(characteristic) {
    unsigned digits = 0;
    for (std::uint64_t v = 1; v < q; v *= p) ++digits;
    width = (p < 128 && digits <= 8) ? 8 : 16;
    for (unsigned lane = 0; lane * width < 64; ++lane) {
      high |= std::uint64_t(1) << (lane * width + width - 1);
      bias |= ((std::uint64_t(1) << (width - 1)) - p) << (lane * width);
    }
  }
  std::uint64_t pack(std::uint32_t code) const {
    if (p == 2) return code;
    std::uint64_t out = 0;
    for (unsigned lane = 0; code != 0; ++lane, code /= p) out |= std::uint64_t(code % p) << (lane * width);
    return out;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    if (p == 2) return a ^ b;
    std::uint64_t s = a + b;
    std::uint64_t wrap = ((s + bias) & high) >> (width - 1);
    return s - wrap * p;
  }
};

}  // namespace

std::uint64_t OrbitScanner::scan(
    const std::function<bool(const std::vector<std::vector<Code>>&)>& on_zero) const {
  const std::size_t C = comps_.size();
  const std::size_t m = m_;
  const std::size_t subsets = std::size_t(1) << m;
  const std::size_t full = subsets - 1;

  std::vector<std::uint32_t> sizes(C);
  std::size_t x0_space = 1;
  for (std::size_t c = 0; c < C; ++c) {
    sizes[c] = comps_[c].field->size();
    x0_space *= sizes[c];
  }
  if (x0_space * C * subsets > (std::size_t(1) << 26))
    throw Error(ErrorCode::Unsupported, "orbit scan tables too large");

  // prod[(idx * C + c) * subsets + S] = product over j in S of the diagonal entry (j, j).
  std::vector<std::size_t> stride(C);
  {
    std::size_t s = 1;
    for (std::size_t c = 0; c < C; ++c) {
      stride[c] = s;
      s *= sizes[c];
    }
  }
  std::vector<std::uint32_t> prod(x0_space * C * subsets);
  std::vector<PackedDigits> packing;
  std::vector<std::vector<std::uint64_t>> exp_packed(C);
  for (std::size_t c = 0; c < C; ++c) {
    const FastField& f = *comps_[c].field;
    packing.emplace_back(f.extension().base()->characteristic(), sizes[c]);
    for (std::uint32_t e = 0; e < 4 * sizes[c]; ++e) exp_packed[c].push_back(packing[c].pack(f.exp_log(e)));
  }
  std::vector<Code> x0(C);
  std::vector<Code> diag(m);
  for (std::size_t idx = 0; idx < x0_space; ++idx) {
    for (std::size_t c = 0; c < C; ++c) x0[c] = Code((idx / stride[c]) % sizes[c]);
    for (std::size_t c = 0; c < C; ++c) {
      const auto& comp = comps_[c];
      const FastField& f = *comp.field;
      for (std::size_t j = 0; j < m; ++j)
        diag[j] = f.mul(comp.cocycle[0][j], comp.phi[j][x0[comp.source[j]]]);
      std::uint32_t* out = &prod[(idx * C + c) * subsets];
      Code running = 1;
      out[0] = f.log(1);
      for (std::size_t S = 1; S < subsets; ++S) {
        std::size_t low = std::size_t(__builtin_ctzll(S));
        running = f.mul(f.exp_log(out[S & (S - 1)]), diag[low]);
        out[S] = f.log(running);
      }
    }
  }

  std::vector<std::vector<Code>> tails(C);
  std::vector<std::size_t> tail_count(C);
  for (std::size_t c = 0; c < C; ++c) {
    tails[c] = normalized_tails(sizes[c], m - 1);
    tail_count[c] = m > 1 ? tails[c].size() / (m - 1) : 1;
  }

  std::vector<std::size_t> outer(C, 0);
  std::vector<std::vector<Code>> x(C, std::vector<Code>(m, 0));
  std::vector<Code> N(C * m * m);
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> active(C);
  std::vector<Code> scratch(m * m);
  std::vector<std::size_t> members;
  std::uint64_t examined = 0;

  while (true) {
    bool all_zero_tail = true;
    for (std::size_t c = 0; c < C; ++c) {
      for (std::size_t i = 1; i < m; ++i) x[c][i] = tails[c][outer[c] * (m - 1) + (i - 1)];
      if (outer[c] != 0) all_zero_tail = false;
    }
    // Off-diagonal part and its principal minors.
    for (std::size_t c = 0; c < C; ++c) {
      const auto& comp = comps_[c];
      const FastField& f = *comp.field;
      Code* n = &N[c * m * m];
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j < m; ++j) {
          if (r == j) {
            n[r * m + j] = 0;
            continue;
          }
          std::size_t i = (r + m - j) % m;
          n[r * m + j] = f.mul(comp.cocycle[i][j], comp.phi[j][x[comp.source[j]][i]]);
        }
      active[c].clear();
      for (std::size_t S = 0; S < subsets; ++S) {
        std::size_t T = full & ~S;
        members.clear();
        for (std::size_t j = 0; j < m; ++j)
          if (T >> j & 1) members.push_back(j);
        Code minor;
        if (members.empty()) {
          minor = 1;
        } else if (members.size() == 1) {
          minor = 0;
        } else if (members.size() == 2) {
          std::size_t a = members[0], b = members[1];
          minor = f.neg(f.mul(n[a * m + b], n[b * m + a]));
        } else {
          std::size_t k = members.size();
          for (std::size_t r = 0; r < k; ++r)
            for (std::size_t s = 0; s < k; ++s) scratch[r * k + s] = n[members[r] * m + members[s]];
          minor = fast_det(f, scratch.data(), k);
        }
        if (minor != 0) active[c].emplace_back(std::uint32_t(S), f.log(minor));
      }
    }

    // Inner loop over x_0 in each component.
    std::vector<std::uint32_t> range(C);
    for (std::size_t c = 0; c < C; ++c) range[c] = outer[c] == 0 ? 2 : sizes[c];
    std::fill(x0.begin(), x0.end(), 0);
    std::size_t idx = 0;
    if (all_zero_tail) {
      x0[0] = 1;
      idx = stride[0];
    }
    while (true) {
      ++examined;
      bool zero = true;
      for (std::size_t c = 0; c < C && zero; ++c) {
        const PackedDigits& pk = packing[c];
        const std::uint64_t* ex = exp_packed[c].data();
        const std::uint32_t* p = &prod[(idx * C + c) * subsets];
        std::uint64_t acc = 0;
        for (const auto& [S, log_minor] : active[c]) acc = pk.add(acc, ex[p[S] + log_minor]);
        zero = acc == 0;
      }
      if (zero) {
        for (std::size_t c = 0; c < C; ++c) x[c][0] = x0[c];
        if (on_zero(x)) return examined;
      }
      std::size_t c = 0;
      while (c < C) {
        idx += stride[c];
        if (++x0[c] < range[c]) break;
        idx -= stride[c] * x0[c];
        x0[c] = 0;
        ++c;
      }
      if (c == C) break;
    }

    std::size_t c = 0;
    while (c < C) {
      if (++outer[c] < tail_count[c]) break;
      outer[c] = 0;
      ++c;
    }
    if (c == C) break;
  }
  return examined;
}

}  // namespace menichetti
