#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "menichetti/algebra.hpp"

namespace menichetti {

FieldElement det_general(const MenichettiSpec& spec, const AlgElement& x);

// Closed forms. m = 3 and m = 4 cyclic need tau_i = sigma^i; the biquadratic form needs
// tau = (id, sigma, tau, sigma tau) and odd characteristic.
FieldElement det_m3(const MenichettiSpec& spec, const AlgElement& y);
FieldElement det_m4_cyclic(const MenichettiSpec& spec, const AlgElement& x);
FieldElement det_m4_biquadratic(const MenichettiSpec& spec, const AlgElement& x);

// Uncorrected variants, coefficients and signs as originally published; kept for the
// reproduction report, they do not agree with det_general in general.
FieldElement det_m3_printed(const MenichettiSpec& spec, const AlgElement& y);
FieldElement det_m4_cyclic_printed(const MenichettiSpec& spec, const AlgElement& x);
// Same value as det_m4_biquadratic. With the Z/m column layout and a non-cyclic group, det M(x) is not
// invariant under every substitution x -> tau(x), so no norm/trace expression reproduces it.
FieldElement det_m4_biquadratic_printed(const MenichettiSpec& spec, const AlgElement& x);

enum class DetFormula { General, M3, M4Cyclic, M4Biquadratic };

struct DetReport {
  FieldElement general;
  FieldElement formula;
  bool match = false;
};
DetReport det_report(const MenichettiSpec& spec, const AlgElement& x, DetFormula formula);

bool galois_substitution_invariance(const MenichettiSpec& spec, const AlgElement& x, std::size_t aut);

// Parameters (1, k, ..., k, k k') up to a common scalar.
struct SpecialPattern {
  FieldElement k;
  FieldElement kprime;
};
std::optional<SpecialPattern> special_pattern(const MenichettiSpec& spec);

// k = alpha_1 + alpha_2 k' over F, preferring a solution with alpha_1 != 0.
std::optional<std::pair<Scalar, Scalar>> solve_alpha(const FieldElement& k, const FieldElement& kprime);

struct SpecialDecomposition {
  std::vector<Scalar> f;  // det = f_0 + sum_{j >= 1} f_j (k k')^j
  bool f0_is_norm = false;
  bool recombines = false;
  // Filled when x has a single nonzero coordinate x_i with i >= 1 and alpha is known.
  std::optional<std::size_t> boundary_index;
  std::optional<Scalar> boundary_expected;
  bool boundary_ok = true;
};
SpecialDecomposition special_decomposition(const MenichettiSpec& spec, const AlgElement& x);

}  // namespace menichetti
