#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "menichetti/fast_field.hpp"

namespace menichetti {

// Zero-determinant scan for M(x) over a product of finite fields R = L_0 x ... x L_{C-1}.
// Component c of M(x) has entry (r, j) = cocycle[c][i][j] * phi_{j,c}(x_i in component source[j][c]),
// i = (r - j) mod m. One representative per orbit of R^x acting on x is visited: in each
// component the last nonzero coordinate among x_1..x_{m-1} is 1, or x_1..x_{m-1} vanish and x_0 is 0 or 1.
class OrbitScanner {
 public:
  using Code = FastField::Code;

  struct Component {
    std::shared_ptr<const FastField> field;
    std::vector<std::vector<Code>> cocycle;        // [i][j]
    std::vector<std::size_t> source;               // [j]: component whose x-coordinates feed column j
    std::vector<std::vector<Code>> phi;            // [j]: table L_source -> L_c
  };

  OrbitScanner(std::size_t m, std::vector<Component> components);

  // Visits every representative whose determinant vanishes in all components. The callback
  // receives x as [component][coordinate] codes; returning true stops the scan.
  // Returns the number of representatives examined.
  std::uint64_t scan(const std::function<bool(const std::vector<std::vector<Code>>&)>& on_zero) const;

  // Number of orbit representatives the scan will visit.
  double representative_count() const;

 private:
  std::size_t m_;
  std::vector<Component> comps_;
};

}  // namespace menichetti
