#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "menichetti/division.hpp"

namespace menichetti {

enum class CensusPattern { Full, Special };

struct CensusOptions {
  CensusPattern pattern = CensusPattern::Full;
  std::uint64_t budget = std::uint64_t(1) << 24;  // maximum number of parameter tuples
  unsigned jobs = 1;
  CriteriaOptions criteria;
};

struct CensusRow {
  std::vector<FieldElement> k;
  bool is_division = false;
  std::optional<AlgElement> witness_x;
  std::optional<AlgElement> witness_y;
  std::vector<std::string> fired;       // certificates, in rule order
  std::vector<std::string> violations;  // fired although the oracle found a zero divisor
};

struct CriterionTally {
  std::uint64_t fired = 0;
  std::uint64_t violated = 0;
};

struct CensusResult {
  std::size_t m = 0;
  std::vector<CensusRow> rows;
  std::uint64_t division_count = 0;
  std::uint64_t violations = 0;
  std::map<std::string, CriterionTally> tally;  // keyed by rule name
  std::vector<std::string> diagnostics;
};

// Number of tuples: (|K| - 1)^m for Full, (|K| - 1)^2 for Special.
std::uint64_t census_size(const GaloisExtension& ext, std::size_t m, CensusPattern pattern);

// Rows follow tuple order: k_0 (Full) or k (Special) varies slowest, elements in element_at order.
// Each class of tuples up to a common scalar is classified once.
CensusResult census(const ExtensionPtr& ext, const std::vector<std::size_t>& tau, const CensusOptions& options);

void write_census_csv(const CensusResult& result, std::ostream& out);

}  // namespace menichetti
