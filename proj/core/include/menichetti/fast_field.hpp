#pragma once

#include <cstdint>
#include <vector>

#include "menichetti/extension.hpp"

namespace menichetti {

// Log/exp and addition tables for a finite field K with at most 4096 elements.
// Element codes are the indices used by GaloisExtension::element_at.
class FastField {
 public:
  using Code = std::uint16_t;

  explicit FastField(const GaloisExtension& ext);

  std::uint32_t size() const { return q_; }
  Code add(Code a, Code b) const { return add_[std::size_t(a) * q_ + b]; }
  Code sub(Code a, Code b) const { return add_[std::size_t(a) * q_ + neg_[b]]; }
  Code neg(Code a) const { return neg_[a]; }
  Code mul(Code a, Code b) const { return exp_[std::size_t(log_[a]) + log_[b]]; }
  // Discrete log (2q - 1 for zero) and its inverse; exp_log(log(a) + log(b)) = a b for all a, b.
  std::uint32_t log(Code a) const { return log_[a]; }
  Code exp_log(std::uint32_t e) const { return exp_[e]; }
  Code inv(Code a) const { return exp_[(q_ - 1 - log_[a]) % (q_ - 1)]; }
  // Automorphism tables exist only when the extension carries its group.
  Code aut(std::size_t i, Code a) const { return aut_[i * q_ + a]; }
  std::size_t aut_count() const { return aut_.size() / q_; }

  Code code(const FieldElement& a) const;
  FieldElement element(Code c) const { return ext_->element_at(c); }
  const GaloisExtension& extension() const { return *ext_; }

 private:
  ExtensionPtr ext_;
  std::uint32_t q_;
  std::vector<Code> add_, neg_, exp_, aut_;
  std::vector<std::uint32_t> log_;
};

// Determinant of a small square matrix of codes, destroying the input.
FastField::Code fast_det(const FastField& f, FastField::Code* a, std::size_t n);

}  // namespace menichetti
