#include "doctest.h"

#include <filesystem>

#include "menichetti/spec_file.hpp"

using namespace menichetti;

namespace {

std::string specs_dir() { return MENICHETTI_SPECS_DIR; }

std::string error_of(std::string_view text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped examples load") {
  for (const auto& entry : std::filesystem::directory_iterator(specs_dir())) {
    CAPTURE(entry.path().string());
    auto f = load_spec(entry.path().string());
    CHECK(f.ext->has_group());
    if (entry.path().extension() == ".spec") CHECK(f.algebra.has_value());
  }
}

TEST_CASE("cubic example contents") {
  auto f = load_spec(specs_dir() + "/m3.spec");
  const auto& spec = f.require_algebra();
  CHECK(spec.m() == 3);
  CHECK(spec.tau() == std::vector<std::size_t>{0, 1, 2});
  CHECK(spec.k()[1] == f.ext->gen());
  CHECK(f.ext->apply_aut(1, f.ext->gen()) == f.ext->parse("2 - t^2"));
  CHECK_THROWS_AS(f.require_csa(), Error);
}

TEST_CASE("tau powers and listed groups") {
  auto f = parse_spec(R"(
[base]
kind = prime
p = 2
[extension]
modulus = t^3 + t + 1
group = cyclic
aut1 = t -> t^2
[algebra]
m = 3
tau = [id, aut1^2, aut1]
k = [1, t, 1 + t]
)");
  const auto& spec = f.require_algebra();
  CHECK(f.ext->apply_aut(spec.tau()[1], f.ext->gen()) == f.ext->parse("t^4"));
}

TEST_CASE("galois base field") {
  auto f = parse_spec(R"(
[base]
kind = galois
p = 2
var = s
modulus = s^2 + s + 1
[extension]
modulus = t^3 + s
group = cyclic
aut1 = t -> t^4
)");
  CHECK(f.base->order() == 4);
  CHECK(f.ext->order() == 64);
  CHECK_FALSE(f.algebra.has_value());
}

TEST_CASE("errors name the line") {
  const char* head = "[base]\nkind = rational\n[extension]\nmodulus = t^3 - 3*t - 1\ngroup = cyclic\naut1 = t -> 2 - t^2\n";
  CHECK(error_of(std::string(head) + "[algebra]\nm = 3\nk = [1, 0, 1]\n").find("line 9") != std::string::npos);
  CHECK(error_of(std::string(head) + "colour = red\n").find("line 7") != std::string::npos);
  CHECK(error_of("[base]\nkind = rational\nkind = rational\n[extension]\nmodulus = t^2 - 2\n").find("line 3") != std::string::npos);
  CHECK(error_of("kind = rational\n").find("line 1") != std::string::npos);
  CHECK(error_of("[bogus]\n").find("line 1") != std::string::npos);
  CHECK(error_of("[base]\nkind = prime\np = 4\n").size() > 0);
  try {
    parse_spec(std::string(head) + "[algebra]\nm = 3\nk = [1, 0, 1]\n");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroParameter);
  }
  try {
    parse_spec("[base]\nkind = rational\n[extension]\nmodulus = t^2 - 4\n");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotIrreducible);
  }
}

TEST_CASE("polynomial parser") {
  auto q = BaseField::rationals();
  auto p = parse_poly(q, "t", "(t + 1)^2 - 2*t");
  CHECK(p.to_string("t") == "1 + t^2");
  CHECK(parse_poly(q, "t", "3/4*t").to_string("t") == "3/4*t");
  CHECK_THROWS_AS(parse_poly(q, "t", "t +"), Error);
  CHECK_THROWS_AS(parse_poly(q, "t", "x"), Error);
}

TEST_CASE("csa section builds the generalized algebra") {
  auto f = load_spec(specs_dir() + "/m2_gf3_tensor_gf9.spec");
  const auto& c = f.require_csa();
  CHECK(c.csa.dim() == 4);
  CHECK_FALSE(c.over_extension);
}
