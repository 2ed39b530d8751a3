#include "menichetti/census.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <thread>

#include "menichetti/error.hpp"

namespace menichetti {

namespace {

struct ClassResult {
  bool is_division = false;
  std::optional<AlgElement> x, y;
  std::vector<std::string> fired;
  std::vector<std::string> rule;  // rule names matching fired
  std::vector<std::string> notes;
};

// Class index -> parameters with k_0 = 1.
std::vector<FieldElement> class_params(const GaloisExtension& K, std::size_t m, CensusPattern pattern,
                                       std::uint64_t index) {
  const std::uint64_t u = K.order() - 1;
  std::vector<FieldElement> k(m, K.one());
  if (pattern == CensusPattern::Full) {
    for (std::size_t i = m; i-- > 1;) {
      k[i] = K.element_at(1 + index % u);
      index /= u;
    }
  } else {
    const FieldElement kk = K.element_at(1 + index / u);
    const FieldElement kp = K.element_at(1 + index % u);
    for (std::size_t i = 1; i + 1 < m; ++i) k[i] = kk;
    k[m - 1] = kk * kp;
  }
  return k;
}

ClassResult classify(const MenichettiSpec& spec, const std::shared_ptr<const FastField>& field,
                     const CriteriaOptions& options) {
  ClassResult r;
  const auto oracle = exhaustive_check(spec, field, ~std::uint64_t(0));
  r.is_division = oracle.status == DivisionStatus::Division;
  r.x = oracle.witness_x;
  r.y = oracle.witness_y;
  for (auto& run : run_criteria(spec, options)) {
    if (run.error || !run.verdict.fired()) continue;
    r.fired.push_back(run.verdict.certificate);
    r.rule.push_back(run.name);
    for (auto& n : run.verdict.notes) r.notes.push_back(run.verdict.certificate + ": " + n);
  }
  return r;
}

}  // namespace

std::uint64_t census_size(const GaloisExtension& ext, std::size_t m, CensusPattern pattern) {
  if (!ext.is_finite()) throw Error(ErrorCode::InfiniteField, "census needs a finite base field");
  const std::uint64_t u = ext.order() - 1;
  const std::size_t e = pattern == CensusPattern::Full ? m : 2;
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (n > ~std::uint64_t(0) / u) return ~std::uint64_t(0);
    n *= u;
  }
  return n;
}

CensusResult census(const ExtensionPtr& ext, const std::vector<std::size_t>& tau, const CensusOptions& options) {
  const auto& K = *ext;
  const std::size_t m = tau.size();
  if (!K.is_finite()) throw Error(ErrorCode::InfiniteField, "census needs a finite base field");
  if (m != K.degree()) throw Error(ErrorCode::DimensionMismatch, "tau must list every automorphism");
  if (m < 2) throw Error(ErrorCode::WrongDegree, "census needs m >= 2");
  const std::uint64_t total = census_size(K, m, options.pattern);
  if (total > options.budget) throw Error(ErrorCode::BudgetExceeded, "tuple count exceeds the census budget");

  const std::uint64_t u = K.order() - 1;
  const std::uint64_t classes = options.pattern == CensusPattern::Full ? total / u : total;
  auto field = std::make_shared<const FastField>(K);

  std::vector<ClassResult> results(classes);
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, unsigned(std::min<std::uint64_t>(classes, 256))));
  auto work = [&](unsigned w, std::exception_ptr& err) {
    try {
      for (std::uint64_t c = w; c < classes; c += jobs) {
        MenichettiSpec spec(ext, tau, class_params(K, m, options.pattern, c));
        results[c] = classify(spec, field, options.criteria);
      }
    } catch (...) {
      err = std::current_exception();
    }
  };
  std::vector<std::exception_ptr> errors(jobs);
  if (jobs == 1) {
    work(0, errors[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w, std::ref(errors[w]));
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  CensusResult out;
  out.m = m;
  out.rows.reserve(total);
  std::vector<FastField::Code> digit(m);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t c = t;
    CensusRow row;
    if (options.pattern == CensusPattern::Full) {
      std::uint64_t rest = t;
      for (std::size_t i = m; i-- > 0;) {
        digit[i] = FastField::Code(1 + rest % u);
        rest /= u;
      }
      const auto inv0 = field->inv(digit[0]);
      c = 0;
      for (std::size_t i = 1; i < m; ++i) c = c * u + (field->mul(digit[i], inv0) - 1);
      for (auto d : digit) row.k.push_back(field->element(d));
    } else {
      row.k = class_params(K, m, options.pattern, c);
    }
    const auto& cr = results[c];
    row.is_division = cr.is_division;
    row.witness_x = cr.x;
    row.witness_y = cr.y;
    row.fired = cr.fired;
    if (cr.is_division) ++out.division_count;
    for (std::size_t i = 0; i < cr.fired.size(); ++i) {
      auto& tally = out.tally[cr.rule[i]];
      ++tally.fired;
      if (!cr.is_division) {
        ++tally.violated;
        ++out.violations;
        row.violations.push_back(cr.fired[i]);
      }
    }
    out.rows.push_back(std::move(row));
  }
  for (std::uint64_t c = 0; c < classes; ++c)
    for (auto& n : results[c].notes) out.diagnostics.push_back(n);
  std::sort(out.diagnostics.begin(), out.diagnostics.end());
  out.diagnostics.erase(std::unique(out.diagnostics.begin(), out.diagnostics.end()), out.diagnostics.end());
  return out;
}

void write_census_csv(const CensusResult& result, std::ostream& out) {
  auto joined = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i];
    return s;
  };
  auto witness = [&](const std::optional<AlgElement>& w) {
    if (!w) return std::string();
    std::vector<std::string> parts;
    for (auto& c : w->coords()) parts.push_back(c.to_string());
    return joined(parts);
  };
  for (std::size_t i = 0; i < result.m; ++i) out << "k_" << i << ',';
  out << "is_division,witness_x,witness_y,criteria\n";
  for (auto& row : result.rows) {
    for (auto& k : row.k) out << k.to_string() << ',';
    out << (row.is_division ? "true" : "false") << ',' << witness(row.witness_x) << ',' << witness(row.witness_y)
        << ',' << joined(row.fired) << '\n';
  }
}

}  // namespace menichetti
