#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "menichetti/algebra.hpp"
#include "menichetti/generalized.hpp"
#include "menichetti/poly.hpp"

namespace menichetti {

inline constexpr const char* kSpecFormatVersion = "1";

struct CsaSection {
  bool over_extension = false;  // center = [extension] field instead of the base field
  CSA csa;
  std::vector<DAutomorphism> auts;  // empty unless aut<j>.<i> rows are given
};

struct SpecFile {
  BaseFieldPtr base;
  ExtensionPtr ext;
  std::optional<MenichettiSpec> algebra;
  std::optional<CsaSection> csa;

  const MenichettiSpec& require_algebra() const;
  const CsaSection& require_csa() const;
  // Builds (D, G, k) from the [csa] rows and the [algebra] parameters.
  GeneralizedSpec generalized() const;
};

// Sections [base], [extension], [algebra], [csa]; '#' starts a comment. Errors carry the line number.
SpecFile parse_spec(std::string_view text);
SpecFile load_spec(const std::string& path);

// Polynomial in `var` over `base`; the generator of GF(p^e) may appear under its own name.
Poly parse_poly(const BaseFieldPtr& base, const std::string& var, std::string_view text);

}  // namespace menichetti
