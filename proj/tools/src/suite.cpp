#include "suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "menichetti/census.hpp"
#include "menichetti/determinant.hpp"
#include "menichetti/division.hpp"
#include "menichetti/error.hpp"
#include "menichetti/generalized.hpp"
#include "menichetti/structure.hpp"

namespace menichetti::suite {

namespace fx = fixtures;

namespace {

struct Item {
  const char* title;
  std::vector<const char*> suites;
};

const std::map<int, Item>& items() {
  static const std::map<int, Item> table = {
      {1, {"dimension-4 classification over GF(9)/GF(3)", {"quaternion"}}},
      {2, {"closed-form determinants agree with det_general", {"det", "m3", "m4"}}},
      {3, {"Galois-substitution invariance of det M(x)", {"det"}}},
      {4, {"K lies in all three nuclei; F-central examples", {"structure"}}},
      {5, {"K (x) K faithfulness and maximal commutativity of K", {"structure"}}},
      {6, {"power-associativity failure for m = 3", {"m3"}}},
      {7, {"criteria soundness census sweep", {"census"}}},
      {8, {"Thm.div2 positive instance over GF(64)/GF(4)", {"m3", "census"}}},
      {9, {"number-field criteria with height-search clearance", {"number-fields", "m4"}}},
      {10, {"tensor product isomorphism", {"tensor"}}},
      {11, {"opposite cyclic algebra and coordinate swap", {"m3", "structure"}}},
      {12, {"example (d, 1, d) clauses", {"m3"}}},
  };
  return table;
}

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

AlgElement random_element(const MenichettiSpec& spec, std::mt19937_64& rng) {
  return spec.random(rng, spec.ext()->is_finite() ? 1 : 3);
}

std::vector<FieldElement> repeat(const FieldElement& a, std::size_t n) { return std::vector<FieldElement>(n, a); }

// ---------------------------------------------------------------------------

void quaternion_census(Outcome& out, const Options& opt) {
  auto K = fx::gf9();
  const auto t0 = Clock::now();
  CensusOptions co;
  co.budget = opt.census_budget;
  auto res = census(K, fx::identity_tau(2), co);
  const double secs = since(t0);
  std::size_t agree = 0, division = 0;
  for (auto& row : res.rows) {
    const bool expected = !K->in_base(row.k[1] / row.k[0]);
    agree += row.is_division == expected;
    division += row.is_division;
  }
  out.pass = res.rows.size() == 64 && division == 48 && agree == 64 && secs < 1.0;
  out.details.push_back(std::to_string(res.rows.size()) + " tuples, " + std::to_string(division) +
                        " division, classification k_1/k_0 outside F matches on " + std::to_string(agree));
  out.details.push_back(std::string("census runtime ") + (secs < 1.0 ? "below" : "above") + " 1 s");
}

void determinants(Outcome& out, const Options& opt) {
  std::mt19937_64 rng(opt.seed);
  bool ok = true;
  for (auto& cfg : fx::det_configs()) {
    const std::size_t m = cfg.ext->degree();
    const bool biq = cfg.ext.get() == fx::biquadratic().get();
    const DetFormula formula = m == 3 ? DetFormula::M3 : biq ? DetFormula::M4Biquadratic : DetFormula::M4Cyclic;
    const int n = cfg.ext->is_finite() ? 500 : 30;
    int match = 0, printed = 0;
    for (int i = 0; i < n; ++i) {
      auto spec = fx::random_spec(cfg.ext, rng);
      auto x = random_element(spec, rng);
      auto rep = det_report(spec, x, formula);
      match += rep.match;
      FieldElement p = m == 3 ? det_m3_printed(spec, x) : biq ? det_m4_biquadratic_printed(spec, x) : det_m4_cyclic_printed(spec, x);
      printed += p == rep.general;
    }
    ok = ok && match == n;
    out.details.push_back(cfg.name + ": " + std::to_string(match) + "/" + std::to_string(n) +
                          " agree (typeset variant agrees on " + std::to_string(printed) + ")");
  }
  out.pass = ok;
}

void invariance(Outcome& out, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 1);
  bool ok = true;
  for (auto& cfg : fx::det_configs()) {
    const std::size_t m = cfg.ext->degree();
    int good = 0, total = 0;
    for (int i = 0; i < 100; ++i) {
      auto spec = fx::random_spec(cfg.ext, rng);
      auto x = random_element(spec, rng);
      for (std::size_t a = 0; a < m; ++a) {
        ++total;
        good += galois_substitution_invariance(spec, x, a);
      }
    }
    ok = ok && good == total;
    out.details.push_back(cfg.name + ": " + std::to_string(good) + "/" + std::to_string(total) + " substitutions invariant");
  }
  out.pass = ok;
}

std::vector<fx::Config> structure_configs() {
  return {{"GF(9)/GF(3)", fx::gf9()},        {"GF(8)/GF(2)", fx::gf8()},   {"GF(27)/GF(3)", fx::gf27()},
          {"GF(16)/GF(2)", fx::gf16()},      {"cubic cyclic", fx::cubic()}, {"cyclic quartic", fx::cyclic_quartic()},
          {"Q(sqrt2,sqrt3)", fx::biquadratic()}};
}

void nuclei(Outcome& out, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  bool ok = true;
  for (auto& cfg : structure_configs()) {
    int contained = 0;
    std::string center_note = "no nonassociative spec drawn";
    bool center_ok = false;
    for (int i = 0; i < 10; ++i) {
      auto spec = fx::random_spec(cfg.ext, rng, 1);
      auto table = structure_table(spec);
      auto kvecs = embedded_k(spec);
      bool all = true;
      for (auto part : {NucleusPart::Left, NucleusPart::Middle, NucleusPart::Right}) {
        auto nuc = nucleus(table, part);
        for (auto& v : kvecs) all = all && in_subspace(nuc, v);
      }
      contained += all;
      if (center_ok || is_associative(table)) continue;
      auto center = nucleus(table, NucleusPart::Center);
      center_ok = center.size() == 1;
      center_note = "center of a nonassociative spec has F-dimension " + std::to_string(center.size());
      const auto q = cfg.ext->base()->order();
      const std::size_t d = table.dim();
      bool small = q != 0;
      std::uint64_t count = 1;
      for (std::size_t j = 0; j < d && small; ++j) small = (count *= q) <= 6561;
      if (small) {
        auto scan = center_by_enumeration(table);
        center_ok = center_ok && scan.size() == q;
        center_note += ", exhaustive scan finds " + std::to_string(scan.size()) + " central elements";
      }
    }
    ok = ok && contained == 10 && center_ok;
    out.details.push_back(cfg.name + ": K in all nuclei for " + std::to_string(contained) + "/10 specs; " + center_note);
  }
  out.pass = ok;
}

void faithful(Outcome& out, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 2);
  bool ok = true;
  for (auto& cfg : structure_configs()) {
    const std::size_t m = cfg.ext->degree();
    int good_rank = 0, good_cent = 0;
    std::string error;
    for (int i = 0; i < 10; ++i) {
      auto spec = fx::random_spec(cfg.ext, rng, 1);
      try {
        auto f = ke_faithful(spec);
        good_rank += f.faithful && f.rank == m * m;
      } catch (const Error& e) {
        error = e.what();
      }
      good_cent += centralizer_of_k(spec).size() == m;
    }
    ok = ok && good_rank == 10 && good_cent == 10;
    out.details.push_back(cfg.name + ": rank m^2 on " + std::to_string(good_rank) + "/10, centralizer dimension m on " +
                          std::to_string(good_cent) + "/10" + (error.empty() ? "" : " (" + error + ")"));
  }
  out.pass = ok;
}

void power_associativity(Outcome& out, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 3);
  bool ok = true;
  for (auto& k : {fx::gf8(), fx::gf27(), fx::cubic()}) {
    int checked = 0, good = 0, differ = 0;
    for (int i = 0; i < 12; ++i) {
      auto a = fx::random_nonzero(*k, rng), c = fx::random_nonzero(*k, rng);
      // every third spec has b a^-1 in F
      auto b = i % 3 == 0 ? a * k->from_int(1 + i % 2) : fx::random_nonzero(*k, rng);
      if (b.is_zero()) b = a;
      MenichettiSpec spec(k, fx::identity_tau(3), {a, b, c});
      auto z = spec.basis_z(1);
      auto zz = multiply(spec, z, z);
      auto left = multiply(spec, zz, z), right = multiply(spec, z, zz);
      const auto ba = b / a, ca = c / a;
      const bool expect_left = left == spec.embed(ca * k->apply_aut(spec.tau()[1], ba));
      const bool expect_right = right == spec.embed(ca * ba);
      const bool in_f = k->in_base(ba);
      ++checked;
      good += expect_left && expect_right && ((left == right) == in_f);
      differ += left != right;
    }
    ok = ok && good == checked;
    out.details.push_back(k->describe() + ": " + std::to_string(good) + "/" + std::to_string(checked) + " as printed, " +
                          std::to_string(differ) + " not third power-associative");
  }
  out.pass = ok;
}

struct SweepCase {
  std::string name;
  ExtensionPtr ext;
  CensusPattern pattern;
};

void soundness(Outcome& out, const Options& opt) {
  const std::vector<SweepCase> cases = {
      {"q=2 m=3 full", fx::gf8(), CensusPattern::Full},
      {"q=3 m=3 full", fx::gf27(), CensusPattern::Full},
      {"q=4 m=3 full", fx::gf64_over_gf4(), CensusPattern::Full},
      {"q=2 m=4 cyclic full", fx::gf16(), CensusPattern::Full},
      {"q=3 m=4 special", fx::gf81(), CensusPattern::Special},
  };
  std::uint64_t violations = 0;
  for (auto& c : cases) {
    CensusOptions co;
    co.pattern = c.pattern;
    co.budget = opt.census_budget;
    co.jobs = opt.jobs;
    auto res = census(c.ext, fx::identity_tau(c.ext->degree()), co);
    violations += res.violations;
    std::string line = c.name + ": " + std::to_string(res.rows.size()) + " tuples, " + std::to_string(res.division_count) +
                       " division, " + std::to_string(res.violations) + " violations";
    for (auto& [rule, t] : res.tally)
      if (t.violated) line += "; " + rule + " " + std::to_string(t.violated) + "/" + std::to_string(t.fired);
    out.details.push_back(line);
  }
  out.pass = violations == 0;
}

void div2_positive(Outcome& out, const Options& opt) {
  CensusOptions co;
  co.budget = opt.census_budget;
  co.jobs = opt.jobs;
  auto res = census(fx::gf64_over_gf4(), fx::identity_tau(3), co);
  std::size_t hits = 0;
  std::string example;
  for (auto& row : res.rows)
    for (auto& f : row.fired)
      if ((f == "Thm.div2.case(i)" || f == "Thm.div2.case(ii)") && row.is_division) {
        if (!hits++) {
          example = f + " at (";
          for (std::size_t i = 0; i < row.k.size(); ++i) example += (i ? ", " : "") + row.k[i].to_string();
          example += ")";
        }
      }
  out.pass = hits > 0;
  out.details.push_back(std::to_string(hits) + " tuples fire div2 (i)/(ii) and are confirmed by the exhaustive scan");
  if (hits) out.details.push_back("first: " + example);
}

void number_fields(Outcome& out, const Options&) {
  bool ok = true;
  auto check = [&](const std::string& name, const MenichettiSpec& spec, const DivisionVerdict& v, int h) {
    auto r = height_search(spec, h);
    const bool good = v.fired() && !r.found;
    ok = ok && good;
    out.details.push_back(name + ": " + (v.fired() ? v.certificate : std::string("no certificate")) + ", height " +
                          std::to_string(h) + " " + (r.found ? "found a zero divisor" : "clear") + " (" + r.method + ")");
  };
  {
    auto K = fx::cubic();
    auto t = K->gen(), k = K->one() + t;
    MenichettiSpec spec(K, fx::identity_tau(3), {K->one(), k, k * t});
    check("cubic (1, 1 + t, (1 + t) t)", spec, criterion_thm_main1(spec), 3);
  }
  const std::vector<std::string> cyclic = {"d111", "1d11", "11d1", "dd1d", "d1dd", "1ddd"};
  const std::vector<std::string> biq = {"d111", "1d11", "11d1", "111d", "ddd1", "dd1d", "d1dd", "1ddd"};
  for (int f = 0; f < 2; ++f) {
    auto K = f ? fx::biquadratic() : fx::cyclic_quartic();
    for (auto& p : f ? biq : cyclic) {
      std::vector<FieldElement> k;
      std::string label = "(";
      for (char c : p) {
        k.push_back(c == 'd' ? K->gen() : K->one());
        label += std::string(label.size() > 1 ? ", " : "") + (c == 'd' ? "d" : "1");
      }
      label += ")";
      MenichettiSpec spec(K, fx::identity_tau(4), k);
      check((f ? "Q(sqrt2,sqrt3) " : "cyclic quartic ") + label + " d = t", spec, criterion_m4(spec, M4Rule::Steele), 2);
    }
  }
  out.pass = ok;
}

void tensor(Outcome& out, const Options&) {
  auto K9 = fx::gf9();
  auto m2 = CSA::matrix_algebra(GaloisExtension::trivial(K9->base(), "_"), 2);
  auto r1 = tensor_check(m2, MenichettiSpec(K9, fx::identity_tau(2), {K9->one(), K9->gen()}));
  auto Kc = fx::cubic();
  auto q1 = GaloisExtension::trivial(Kc->base(), "_");
  auto h = CSA::quaternion(q1, q1->one(), q1->one());
  auto r2 = tensor_check(h, MenichettiSpec(Kc, fx::identity_tau(3), {Kc->one(), Kc->gen(), Kc->gen()}));
  out.pass = r1.isomorphic && r2.isomorphic;
  out.details.push_back("M_2(GF(3)) with (GF(9), 1, t): " + std::to_string(r1.pairs - r1.mismatches) + "/" +
                        std::to_string(r1.pairs) + " basis products agree");
  out.details.push_back("split quaternions with (cubic, 1, t, t): " + std::to_string(r2.pairs - r2.mismatches) + "/" +
                        std::to_string(r2.pairs) + " basis products agree");
}

void remarks(Outcome& out, const Options& opt) {
  std::mt19937_64 rng(opt.seed + 4);
  int op_good = 0, op_total = 0, swap_good = 0, swap_total = 0;
  for (auto& k : {fx::gf9(), fx::gf27(), fx::cubic()}) {
    const std::size_t m = k->degree();
    for (int i = 0; i < 4; ++i) {
      auto ks = repeat(k->one(), m);
      ks.back() = fx::random_nonzero(*k, rng);
      ++op_total;
      op_good += cyclic_algebra_compare(MenichettiSpec(k, fx::identity_tau(m), ks));
    }
  }
  for (auto& k : {fx::gf8(), fx::gf27(), fx::cubic()})
    for (int i = 0; i < 4; ++i) {
      auto a = fx::random_nonzero(*k, rng), c = fx::random_nonzero(*k, rng);
      ++swap_total;
      swap_good += coordinate_swap_check(MenichettiSpec(k, fx::identity_tau(3), {a, c, c})).basis_pairs;
    }
  out.pass = op_good == op_total && swap_good == swap_total;
  out.details.push_back("(K/F, 1, ..., 1, k)^op equals (K/F, sigma, k) on " + std::to_string(op_good) + "/" +
                        std::to_string(op_total) + " specs (m = 2, 3)");
  out.details.push_back("coordinate swap multiplicative on all 9 basis pairs for " + std::to_string(swap_good) + "/" +
                        std::to_string(swap_total) + " specs (a, c, c)");
}

void example_d1d(Outcome& out, const Options&) {
  bool ok = true;
  for (auto& k : {fx::gf8(), fx::gf27()}) {
    int good = 0, total = 0;
    for (auto& d : k->elements()) {
      if (k->in_base(d)) continue;
      ++total;
      auto rep = example_d1d_check(MenichettiSpec(k, fx::identity_tau(3), {d, k->one(), d}));
      good += rep.clause_a() && rep.clause_b();
    }
    ok = ok && good == total;
    out.details.push_back(k->describe() + ": clauses (a) and (b) hold for " + std::to_string(good) + "/" +
                          std::to_string(total) + " choices of d");
  }
  out.pass = ok;
}

const std::map<int, std::function<void(Outcome&, const Options&)>>& runners() {
  static const std::map<int, std::function<void(Outcome&, const Options&)>> r = {
      {1, quaternion_census}, {2, determinants},   {3, invariance},    {4, nuclei},  {5, faithful},   {6, power_associativity},
      {7, soundness},         {8, div2_positive},  {9, number_fields}, {10, tensor}, {11, remarks},   {12, example_d1d},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all",       "quaternion", "det",           "m3",    "m4",
                                                 "structure", "census",     "number-fields", "tensor"};
  return names;
}

std::vector<int> suite_items(std::string_view suite) {
  std::vector<int> out;
  bool known = false;
  for (auto& n : suite_names()) known = known || n == suite;
  if (!known) throw Error(ErrorCode::Parse, "unknown suite '" + std::string(suite) + "'");
  for (auto& [id, item] : items()) {
    bool member = suite == "all";
    for (auto s : item.suites) member = member || suite == s;
    if (member) out.push_back(id);
  }
  return out;
}

std::string item_title(int id) {
  auto it = items().find(id);
  if (it == items().end()) throw Error(ErrorCode::IndexOutOfRange, "no acceptance item " + std::to_string(id));
  return it->second.title;
}

Outcome run_item(int id, const Options& options) {
  Outcome out;
  out.id = id;
  out.title = item_title(id);
  const auto t0 = Clock::now();
  try {
    runners().at(id)(out, options);
  } catch (const std::exception& e) {
    out.pass = false;
    out.details.push_back(std::string("error: ") + e.what());
  }
  out.seconds = since(t0);
  return out;
}

std::string format_outcome(const Outcome& o, bool with_details) {
  std::ostringstream s;
  s << (o.pass ? "PASS" : "FAIL") << ' ' << o.id << ' ' << o.title << '\n';
  if (with_details)
    for (auto& d : o.details) s << "    " << d << '\n';
  return s.str();
}

}  // namespace menichetti::suite
