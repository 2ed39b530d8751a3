#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "menichetti/algebra.hpp"
#include "menichetti/fast_field.hpp"

namespace menichetti {

enum class DivisionStatus { Division, NotDivision, Unknown };
std::string status_name(DivisionStatus s);

struct DivisionVerdict {
  DivisionStatus status = DivisionStatus::Unknown;
  std::string certificate;  // empty when Unknown
  std::optional<AlgElement> witness_x;
  std::optional<AlgElement> witness_y;
  std::vector<std::string> assumptions;
  std::vector<std::string> notes;

  bool fired() const { return status == DivisionStatus::Division; }
};

inline constexpr std::uint64_t kDefaultExhaustiveBudget = std::uint64_t(1) << 32;
inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t(1) << 24;

// Nonzero y with x y = 0, if M(x) is singular.
std::optional<AlgElement> right_annihilator(const MenichettiSpec& spec, const AlgElement& x);
// x, y nonzero and x y = 0, recomputed with the generic product.
bool verify_zero_divisor(const MenichettiSpec& spec, const AlgElement& x, const AlgElement& y);

// Determinant scan over one representative of every K^x-orbit of x != 0.
DivisionVerdict exhaustive_check(const MenichettiSpec& spec, std::uint64_t budget = kDefaultExhaustiveBudget);
// Same scan reusing tables built for spec.ext().
DivisionVerdict exhaustive_check(const MenichettiSpec& spec, const std::shared_ptr<const FastField>& field,
                                 std::uint64_t budget = kDefaultExhaustiveBudget);
// Independent oracle: products x y over normalized x and y, no determinants.
DivisionVerdict pair_scan(const MenichettiSpec& spec, std::uint64_t budget = kDefaultPairBudget);

struct HeightResult {
  bool found = false;
  int height = 0;
  std::optional<AlgElement> x;
  std::optional<AlgElement> y;
  std::string method;  // "empty", "grid" or "sieve mod <prime>"
  std::uint64_t examined = 0;
  std::uint64_t candidates = 0;
};
enum class HeightMethod { Auto, Grid, Sieve };
// x with integer power-basis coefficients in [-H, H], x != 0, det M(x) = 0.
HeightResult height_search(const MenichettiSpec& spec, int height, HeightMethod method = HeightMethod::Auto);

struct CriteriaOptions {
  // Base-field elements the caller asserts lie outside N(K^x).
  std::vector<Scalar> assumed_nonmembers;
  int norm_search_height = 3;
};

DivisionVerdict criterion_thm_main1(const MenichettiSpec& spec);
enum class CorVariant { I, II };
DivisionVerdict criterion_cor_m1(const MenichettiSpec& spec, CorVariant variant);
enum class M3Rule { LinIndep, Div1, Div2 };
DivisionVerdict criterion_m3(const MenichettiSpec& spec, M3Rule rule, const CriteriaOptions& options = {});
enum class M4Rule { CyclicCor, BiquadraticCor, Steele };
DivisionVerdict criterion_m4(const MenichettiSpec& spec, M4Rule rule);

struct CriterionRun {
  std::string name;  // rule label used in reports
  DivisionVerdict verdict;
  std::optional<std::string> error;  // hypothesis shape not met
};
// Every rule applicable to the degree, in the fixed order Thm3.2, Cor3.3i, Cor3.3ii, then m = 3 or m = 4 rules.
std::vector<CriterionRun> run_criteria(const MenichettiSpec& spec, const CriteriaOptions& options = {});

struct D1DReport {
  std::uint64_t clause_a_vectors = 0;
  std::uint64_t clause_a_zero = 0;
  std::uint64_t clause_b_vectors = 0;
  std::uint64_t clause_b_zero = 0;
  std::uint64_t residual_vectors = 0;  // x_2 = 0 and N(x_0) = -N(x_1), x != 0
  std::uint64_t residual_zero = 0;
  std::uint64_t residual_pairs_verified = 0;
  bool clause_a() const { return clause_a_zero == 0; }
  bool clause_b() const { return clause_b_zero == 0; }
};
D1DReport example_d1d_check(const MenichettiSpec& spec);

}  // namespace menichetti
