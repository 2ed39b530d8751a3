#pragma once

#include <optional>

#include "menichetti/extension.hpp"

namespace menichetti {

// Whether a nonzero base-field element is a cube in F^x.
bool cube_class_member(const Scalar& a);
bool cube_class_member(const FieldElement& a);

struct NormSearch {
  bool member = false;
  std::optional<FieldElement> witness;
};

// Semi-decision of target in N(K^x). Over finite fields the answer is always a member
// (found by scanning); over Q only membership is ever certified.
NormSearch norm_group_search(const GaloisExtension& ext, const Scalar& target, int height = 4);

}  // namespace menichetti
