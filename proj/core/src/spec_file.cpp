#include "menichetti/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "menichetti/error.hpp"
#include "menichetti/expr.hpp"

namespace menichetti {

namespace {

struct Entry {
  std::string key, value;
  int line = 0;
};

struct Section {
  int line = 0;
  std::vector<Entry> entries;
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string strip_code(const Error& e) {
  std::string w = e.what();
  auto p = w.find(": ");
  return p == std::string::npos ? w : w.substr(p + 2);
}

[[noreturn]] void fail(int line, const std::string& msg, ErrorCode code = ErrorCode::Parse) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg);
}

template <class Fn>
auto at_line(int line, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (std::string_view(e.what()).find("line ") != std::string_view::npos) throw;
    fail(line, strip_code(e), e.code());
  }
}

long long to_int(const Entry& e) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(e.value, &pos);
    if (pos != e.value.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail(e.line, "'" + e.key + "' expects an integer, got '" + e.value + "'");
  }
}

std::vector<std::string> split_list(const Entry& e) {
  std::string v = e.value;
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') fail(e.line, "'" + e.key + "' expects a list [a, b, ...]");
  std::vector<std::string> out;
  std::stringstream ss(v.substr(1, v.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  if (out.size() == 1 && out[0].empty()) out.clear();
  for (auto& s : out)
    if (s.empty()) fail(e.line, "empty item in '" + e.key + "'");
  return out;
}

class Keys {
 public:
  Keys(const Section& s, std::string name) : s_(s), name_(std::move(name)) {
    for (auto& e : s.entries) {
      if (map_.count(e.key)) fail(e.line, "duplicate key '" + e.key + "' in [" + name_ + "]");
      map_[e.key] = &e;
    }
  }
  const Entry* find(const std::string& k) {
    auto it = map_.find(k);
    if (it == map_.end()) return nullptr;
    used_.insert(k);
    return it->second;
  }
  const Entry& need(const std::string& k) {
    if (auto e = find(k)) return *e;
    fail(s_.line, "[" + name_ + "] is missing '" + k + "'");
  }
  void finish() const {
    for (auto& e : s_.entries)
      if (!used_.count(e.key)) fail(e.line, "unknown key '" + e.key + "' in [" + name_ + "]");
  }

 private:
  const Section& s_;
  std::string name_;
  std::map<std::string, const Entry*> map_;
  std::set<std::string> used_;
};

struct PolyCtx {
  BaseFieldPtr base;
  std::string var;
  Poly constant(const mpz_class& n) const { return Poly(base->from_mpz(n)); }
  Poly variable(const std::string& name) const {
    if (name == var) return Poly::variable(base);
    if (base->degree() > 1 && name == base->var()) return Poly(base->generator());
    throw Error(ErrorCode::Parse, "unknown symbol '" + name + "'");
  }
  Poly divide(const Poly& a, const Poly& b) const {
    if (b.degree() != 0) throw Error(ErrorCode::Parse, "polynomials may only be divided by constants");
    return a * b.leading().inv();
  }
  Poly power(const Poly& a, long e) const {
    if (e < 0) throw Error(ErrorCode::Parse, "negative exponent in a polynomial");
    Poly r(base->one());
    for (long i = 0; i < e; ++i) r *= a;
    return r;
  }
};

BaseFieldPtr build_base(const Section& s) {
  Keys keys(s, "base");
  const Entry& kind = keys.need("kind");
  BaseFieldPtr base;
  if (kind.value == "rational") {
    base = BaseField::rationals();
  } else if (kind.value == "prime" || kind.value == "galois") {
    const Entry& pe = keys.need("p");
    const long long p = to_int(pe);
    if (p < 2 || p > 65521) fail(pe.line, "p must be a prime below 65536");
    auto fp = at_line(pe.line, [&] { return BaseField::prime(static_cast<std::uint32_t>(p)); });
    if (kind.value == "prime") {
      base = fp;
    } else {
      std::string var = "s";
      if (auto v = keys.find("var")) var = v->value;
      const Entry& me = keys.need("modulus");
      base = at_line(me.line, [&] {
        Poly f = parse_poly(fp, var, me.value).monic();
        std::vector<std::uint32_t> c;
        for (auto& r : f.coeffs()) c.push_back(std::get<std::uint32_t>(r));
        return BaseField::galois(static_cast<std::uint32_t>(p), c, var);
      });
    }
  } else {
    fail(kind.line, "kind must be prime, galois or rational");
  }
  keys.finish();
  return base;
}

std::string aut_body(const Entry& e, const std::string& var) {
  auto arrow = e.value.find("->");
  if (arrow == std::string::npos) return e.value;
  if (trim(e.value.substr(0, arrow)) != var) fail(e.line, "automorphism must map " + var);
  return trim(e.value.substr(arrow + 2));
}

ExtensionPtr build_extension(const Section& s, const BaseFieldPtr& base) {
  Keys keys(s, "extension");
  std::string var = "t";
  if (auto v = keys.find("var")) var = v->value;
  if (base->degree() > 1 && var == base->var()) fail(s.line, "extension variable clashes with the base generator");
  const Entry& me = keys.need("modulus");
  auto ring = at_line(me.line, [&] { return GaloisExtension::ring(base, var, parse_poly(base, var, me.value)); });
  const std::size_t m = ring->degree();
  const Entry& ge = keys.need("group");
  ExtensionPtr ext;
  if (ge.value == "cyclic") {
    if (m == 1) {
      ext = ring;
    } else {
      const Entry& a = keys.need("aut1");
      ext = at_line(a.line, [&] { return ring->with_cyclic_generator(ring->parse(aut_body(a, var))); });
    }
  } else if (ge.value == "listed") {
    std::vector<FieldElement> images{ring->gen()};
    int last = ge.line;
    for (std::size_t i = 1; i < m; ++i) {
      const Entry& a = keys.need("aut" + std::to_string(i));
      last = std::max(last, a.line);
      images.push_back(at_line(a.line, [&] { return ring->parse(aut_body(a, var)); }));
    }
    ext = at_line(last, [&] { return ring->with_automorphisms(images); });
  } else {
    fail(ge.line, "group must be cyclic or listed");
  }
  keys.finish();
  return ext;
}

std::size_t parse_aut_name(const GaloisExtension& ext, const std::string& name, int line) {
  if (name == "id") return 0;
  if (name.rfind("aut", 0) != 0) fail(line, "unknown automorphism '" + name + "'");
  std::string rest = name.substr(3);
  long e = 1;
  if (auto caret = rest.find('^'); caret != std::string::npos) {
    try {
      e = std::stol(rest.substr(caret + 1));
    } catch (const std::exception&) {
      fail(line, "bad exponent in '" + name + "'");
    }
    rest = rest.substr(0, caret);
  }
  std::size_t idx = 0;
  try {
    std::size_t pos = 0;
    idx = std::stoul(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(line, "unknown automorphism '" + name + "'");
  }
  if (idx >= ext.aut_count()) fail(line, "automorphism '" + name + "' does not exist", ErrorCode::IndexOutOfRange);
  return ext.aut_power(idx, e);
}

MenichettiSpec build_algebra(const Section& s, const ExtensionPtr& ext) {
  Keys keys(s, "algebra");
  const Entry& me = keys.need("m");
  const long long m = to_int(me);
  if (m != static_cast<long long>(ext->degree()))
    fail(me.line, "m = " + std::to_string(m) + " but the extension has degree " + std::to_string(ext->degree()), ErrorCode::DimensionMismatch);
  std::vector<std::size_t> tau;
  if (auto te = keys.find("tau")) {
    for (auto& name : split_list(*te)) tau.push_back(parse_aut_name(*ext, name, te->line));
  } else {
    for (std::size_t i = 0; i < ext->degree(); ++i) tau.push_back(i);
  }
  const Entry& ke = keys.need("k");
  std::vector<FieldElement> k;
  for (auto& item : split_list(ke)) k.push_back(at_line(ke.line, [&] { return ext->parse(item); }));
  keys.finish();
  const int line = std::max(ke.line, me.line);
  return at_line(line, [&] { return MenichettiSpec(ext, tau, k); });
}

CsaSection build_csa(const Section& s, const SpecFile& f) {
  Keys keys(s, "csa");
  bool over_ext = false;
  if (auto ce = keys.find("center")) {
    if (ce->value == "extension") over_ext = true;
    else if (ce->value != "base") fail(ce->line, "center must be base or extension");
  }
  ExtensionPtr center = over_ext ? f.ext : GaloisExtension::trivial(f.base, "_");
  const Entry& ne = keys.need("n2");
  const long long n2 = to_int(ne);
  if (n2 < 1 || n2 > 256) fail(ne.line, "n2 must lie in [1, 256]");
  const std::size_t N = static_cast<std::size_t>(n2);
  const Entry& ue = keys.need("unit");
  const long long unit = to_int(ue);
  if (unit < 0 || unit >= n2) fail(ue.line, "unit index outside the basis", ErrorCode::IndexOutOfRange);

  auto vec = [&](const Entry& e) {
    std::vector<FieldElement> v;
    std::stringstream ss(e.value);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(at_line(e.line, [&] { return center->parse(trim(item)); }));
    if (v.size() != N) fail(e.line, "'" + e.key + "' needs " + std::to_string(N) + " entries", ErrorCode::DimensionMismatch);
    return v;
  };
  std::vector<std::vector<CSA::Elem>> table(N);
  int last = ue.line;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      const Entry& te = keys.need("table." + std::to_string(i) + "." + std::to_string(j));
      last = std::max(last, te.line);
      table[i].push_back(vec(te));
    }
  CsaSection out{over_ext, at_line(last, [&] { return CSA(center, static_cast<std::size_t>(unit), std::move(table)); }), {}};

  bool any_aut = false;
  for (auto& e : s.entries)
    if (e.key.rfind("aut", 0) == 0) any_aut = true;
  if (any_aut) {
    if (!over_ext) fail(s.line, "aut rows need center = extension");
    const std::size_t m = f.ext->degree();
    std::vector<std::size_t> restrict(m);
    for (std::size_t j = 0; j < m; ++j) restrict[j] = f.algebra ? f.algebra->tau()[j] : j;
    out.auts.push_back({{}, 0});
    for (std::size_t i = 0; i < N; ++i) out.auts[0].images.push_back(out.csa.basis(i));
    for (std::size_t j = 1; j < m; ++j) {
      DAutomorphism a{{}, restrict[j]};
      for (std::size_t i = 0; i < N; ++i) a.images.push_back(vec(keys.need("aut" + std::to_string(j) + "." + std::to_string(i))));
      out.auts.push_back(std::move(a));
    }
  }
  keys.finish();
  return out;
}

}  // namespace

Poly parse_poly(const BaseFieldPtr& base, const std::string& var, std::string_view text) {
  auto e = parse_expression(text);
  return evaluate<Poly>(*e, PolyCtx{base, var});
}

const MenichettiSpec& SpecFile::require_algebra() const {
  if (!algebra) throw Error(ErrorCode::Parse, "spec file has no [algebra] section");
  return *algebra;
}

const CsaSection& SpecFile::require_csa() const {
  if (!csa) throw Error(ErrorCode::Parse, "spec file has no [csa] section");
  return *csa;
}

GeneralizedSpec SpecFile::generalized() const {
  const auto& c = require_csa();
  const auto& a = require_algebra();
  if (c.auts.empty()) throw Error(ErrorCode::Parse, "[csa] lists no automorphism rows");
  return GeneralizedSpec(c.csa, c.auts, a.k());
}

SpecFile parse_spec(std::string_view text) {
  static const std::set<std::string> known{"base", "extension", "algebra", "csa"};
  std::map<std::string, Section> sections;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "malformed section header");
      current = trim(line.substr(1, line.size() - 2));
      if (!known.count(current)) fail(line_no, "unknown section [" + current + "]");
      if (sections.count(current)) fail(line_no, "section [" + current + "] repeated");
      sections[current].line = line_no;
      continue;
    }
    if (current.empty()) fail(line_no, "key outside any section");
    auto eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    Entry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), line_no};
    if (e.key.empty()) fail(line_no, "empty key");
    if (e.value.empty()) fail(line_no, "empty value for '" + e.key + "'");
    sections[current].entries.push_back(std::move(e));
  }
  if (!sections.count("base")) fail(line_no, "missing [base] section");
  if (!sections.count("extension")) fail(line_no, "missing [extension] section");
  SpecFile f;
  f.base = build_base(sections["base"]);
  f.ext = build_extension(sections["extension"], f.base);
  if (sections.count("algebra")) f.algebra = build_algebra(sections["algebra"], f.ext);
  if (sections.count("csa")) f.csa = build_csa(sections["csa"], f);
  return f;
}

SpecFile load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec(ss.str());
}

}  // namespace menichetti
