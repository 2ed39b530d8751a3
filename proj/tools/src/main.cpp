#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "menichetti/census.hpp"
#include "menichetti/determinant.hpp"
#include "menichetti/division.hpp"
#include "menichetti/error.hpp"
#include "menichetti/spec_file.hpp"
#include "menichetti/structure.hpp"
#include "suite.hpp"

using namespace menichetti;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitBudget = 3;

void print_subspace(const Subspace& s) {
  std::cout << "dimension " << s.size() << '\n';
  for (auto& v : s) {
    std::string line;
    for (std::size_t i = 0; i < v.size(); ++i) line += (i ? " " : "") + v[i].to_string();
    std::cout << "  [" << line << "]\n";
  }
}

void print_verdict(const DivisionVerdict& v) {
  std::cout << "status: " << status_name(v.status) << '\n';
  if (!v.certificate.empty()) std::cout << "certificate: " << v.certificate << '\n';
  if (v.witness_x) std::cout << "witness x: " << v.witness_x->to_string() << '\n';
  if (v.witness_y) std::cout << "witness y: " << v.witness_y->to_string() << '\n';
  for (auto& a : v.assumptions) std::cout << "assumption: " << a << '\n';
  for (auto& n : v.notes) std::cout << "note: " << n << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Menichetti algebras: construction, determinants, division certification"};
  app.set_version_flag("--version", std::string("spec format ") + kSpecFormatVersion);
  app.require_subcommand(1);

  std::string spec_path, x_text, y_text;

  auto* mul = app.add_subcommand("mul", "Product x y");
  mul->add_option("--spec", spec_path, "Spec file")->required();
  mul->add_option("--x", x_text, "x as x0;x1;...")->required();
  mul->add_option("--y", y_text, "y as y0;y1;...")->required();

  std::string formula = "general";
  auto* det = app.add_subcommand("det", "det M(x), optionally against a closed form");
  det->add_option("--spec", spec_path)->required();
  det->add_option("--x", x_text)->required();
  det->add_option("--formula", formula)->check(CLI::IsMember({"general", "m3", "m4cyclic", "m4biquadratic", "decompose"}));

  std::string part = "full";
  auto* nuc = app.add_subcommand("nucleus", "Nucleus as an F-subspace");
  nuc->add_option("--spec", spec_path)->required();
  nuc->add_option("--part", part)->check(CLI::IsMember({"left", "middle", "right", "full", "center"}));

  auto* cent = app.add_subcommand("centralizer", "Centralizer of K");
  cent->add_option("--spec", spec_path)->required();

  auto* faith = app.add_subcommand("faithful", "Faithfulness over K (x) K");
  faith->add_option("--spec", spec_path)->required();

  std::string mode = "criteria", method = "auto";
  int height = 2, norm_height = 3;
  std::vector<std::string> assume;
  std::uint64_t budget = kDefaultExhaustiveBudget;
  auto* check = app.add_subcommand("check-division", "Division status by oracle, criteria or height search");
  check->add_option("--spec", spec_path)->required();
  check->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "pair-scan", "criteria", "height-search"}));
  check->add_option("--height", height)->check(CLI::Range(0, 64));
  check->add_option("--method", method, "height search method")->check(CLI::IsMember({"auto", "grid", "sieve"}));
  check->add_option("--assume", assume, "nonmember:<elem>, accepted as outside the norm group");
  check->add_option("--norm-height", norm_height)->check(CLI::Range(0, 16));
  check->add_option("--budget", budget);

  std::string field_path, out_path, pattern = "full";
  std::size_t cm = 0;
  std::uint64_t census_budget = std::uint64_t(1) << 24;
  unsigned jobs = 1;
  auto* cen = app.add_subcommand("census", "Classify every parameter tuple over a finite field");
  cen->add_option("--field", field_path)->required();
  cen->add_option("--m", cm)->required();
  cen->add_option("--pattern", pattern)->check(CLI::IsMember({"full", "special"}));
  cen->add_option("--out", out_path)->required();
  cen->add_option("--budget", census_budget);
  cen->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  auto* tens = app.add_subcommand("tensor-check", "D0 (x) A against the generalized algebra");
  tens->add_option("--spec", spec_path)->required();

  std::string suite_name = "all";
  bool details = false;
  auto* verify = app.add_subcommand("paper-verify", "Run the reproduction suite");
  verify->add_option("--suite", suite_name)->check(CLI::IsMember(suite::suite_names()));
  verify->add_flag("--details", details);
  verify->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) {
      suite::Options opt;
      opt.jobs = jobs;
      bool all = true;
      for (int id : suite::suite_items(suite_name)) {
        auto o = suite::run_item(id, opt);
        std::cout << suite::format_outcome(o, details) << std::flush;
        all = all && o.pass;
      }
      return all ? kExitOk : kExitVerify;
    }

    if (*cen) {
      auto f = load_spec(field_path);
      if (cm != f.ext->degree()) throw Error(ErrorCode::DimensionMismatch, "--m must equal the extension degree");
      CensusOptions co;
      co.pattern = pattern == "full" ? CensusPattern::Full : CensusPattern::Special;
      co.budget = census_budget;
      co.jobs = jobs;
      std::vector<std::size_t> tau(cm);
      for (std::size_t i = 0; i < cm; ++i) tau[i] = f.algebra ? f.algebra->tau()[i] : i;
      auto res = census(f.ext, tau, co);
      std::ofstream out(out_path);
      if (!out) throw Error(ErrorCode::Parse, "cannot write " + out_path);
      write_census_csv(res, out);
      std::cout << "tuples: " << res.rows.size() << '\n' << "division: " << res.division_count << '\n';
      for (auto& [rule, t] : res.tally) std::cout << "fired " << rule << ": " << t.fired << " (violations " << t.violated << ")\n";
      for (auto& d : res.diagnostics) std::cout << "diagnostic: " << d << '\n';
      std::cout << "soundness violations: " << res.violations << '\n';
      return res.violations ? kExitVerify : kExitOk;
    }

    auto file = load_spec(spec_path);

    if (*tens) {
      const auto& c = file.require_csa();
      if (c.over_extension) throw Error(ErrorCode::CenterMismatch, "tensor-check needs [csa] center = base");
      auto r = tensor_check(c.csa, file.require_algebra());
      std::cout << "basis pairs: " << r.pairs << '\n'
                << "mismatches: " << r.mismatches << '\n'
                << (r.isomorphic ? "ISOMORPHIC" : "NOT ISOMORPHIC") << '\n';
      return r.isomorphic ? kExitOk : kExitVerify;
    }

    const auto& spec = file.require_algebra();

    if (*mul) {
      std::cout << multiply(spec, spec.parse(x_text), spec.parse(y_text)).to_string() << '\n';
      return kExitOk;
    }
    if (*det) {
      auto x = spec.parse(x_text);
      if (formula == "general") {
        std::cout << det_general(spec, x).to_string() << '\n';
        return kExitOk;
      }
      if (formula == "decompose") {
        auto d = special_decomposition(spec, x);
        std::string f;
        for (const auto& c : d.f) f += (f.empty() ? "" : ", ") + c.to_string();
        std::cout << det_general(spec, x).to_string() << " | " << f << " | " << (d.recombines ? "MATCH" : "MISMATCH") << '\n';
        std::cout << "f_0 = N(x_0): " << (d.f0_is_norm ? "true" : "false") << '\n';
        if (d.boundary_index)
          std::cout << "f_" << *d.boundary_index << " boundary value " << d.boundary_expected->to_string() << ": "
                    << (d.boundary_ok ? "true" : "false") << '\n';
        return d.recombines ? kExitOk : kExitVerify;
      }
      static const std::map<std::string, DetFormula> forms = {
          {"m3", DetFormula::M3}, {"m4cyclic", DetFormula::M4Cyclic}, {"m4biquadratic", DetFormula::M4Biquadratic}};
      auto r = det_report(spec, x, forms.at(formula));
      std::cout << r.general.to_string() << " | " << r.formula.to_string() << " | " << (r.match ? "MATCH" : "MISMATCH") << '\n';
      return r.match ? kExitOk : kExitVerify;
    }
    if (*nuc) {
      static const std::map<std::string, NucleusPart> parts = {{"left", NucleusPart::Left},
                                                               {"middle", NucleusPart::Middle},
                                                               {"right", NucleusPart::Right},
                                                               {"full", NucleusPart::Full},
                                                               {"center", NucleusPart::Center}};
      print_subspace(nucleus(spec, parts.at(part)));
      return kExitOk;
    }
    if (*cent) {
      print_subspace(centralizer_of_k(spec));
      return kExitOk;
    }
    if (*faith) {
      auto f = ke_faithful(spec);
      std::cout << (f.faithful ? "faithful" : "not faithful") << " rank " << f.rank << '\n';
      return kExitOk;
    }
    if (*check) {
      const auto& K = *spec.ext();
      if (mode == "exhaustive" || mode == "pair-scan") {
        print_verdict(mode == "exhaustive" ? exhaustive_check(spec, budget) : pair_scan(spec, budget));
        return kExitOk;
      }
      if (mode == "height-search") {
        const HeightMethod hm = method == "grid" ? HeightMethod::Grid : method == "sieve" ? HeightMethod::Sieve : HeightMethod::Auto;
        auto r = height_search(spec, height, hm);
        std::cout << "height: " << r.height << '\n' << "method: " << r.method << '\n';
        if (r.found) {
          std::cout << "zero divisor found\n" << "x: " << r.x->to_string() << '\n';
          if (r.y) std::cout << "y: " << r.y->to_string() << '\n';
        } else {
          std::cout << "no zero divisor with coefficients in [-" << height << ", " << height << "]\n";
        }
        return kExitOk;
      }
      CriteriaOptions co;
      co.norm_search_height = norm_height;
      for (auto& a : assume) {
        const std::string prefix = "nonmember:";
        if (a.rfind(prefix, 0) != 0) throw Error(ErrorCode::Parse, "--assume expects nonmember:<elem>");
        auto e = K.parse(a.substr(prefix.size()));
        if (!K.in_base(e)) throw Error(ErrorCode::NotInBase, a.substr(prefix.size()) + " is not in the base field");
        co.assumed_nonmembers.push_back(K.to_base(e));
      }
      bool fired = false;
      for (auto& run : run_criteria(spec, co)) {
        std::cout << run.name << ": ";
        if (run.error) {
          std::cout << "not applicable (" << *run.error << ")\n";
          continue;
        }
        std::cout << status_name(run.verdict.status);
        if (run.verdict.fired()) std::cout << " [" << run.verdict.certificate << "]";
        std::cout << '\n';
        for (auto& s : run.verdict.assumptions) std::cout << "  assumption: " << s << '\n';
        for (auto& n : run.verdict.notes) std::cout << "  note: " << n << '\n';
        fired = fired || run.verdict.fired();
      }
      std::cout << "verdict: " << (fired ? "Division" : "Unknown") << '\n';
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
