#pragma once

#include <cstddef>

#include "cwtop/lattice.hpp"

namespace cwtop {

// Two-stage CW complex: a wedge of k (n-1)-spheres with m attached n-cells.
// attach is m x k; attach(i, j) is the degree of cell i's attaching map on
// sphere j, signed against fixed orientations of cells and spheres.
struct ComplexPresentation {
  int n = 2;
  std::size_t sphereCount = 0;  // k
  std::size_t cellCount = 0;    // m
  IntegerMatrix attach;         // m x k

  ComplexPresentation() = default;
  ComplexPresentation(int dim, std::size_t spheres, std::size_t cells,
                      IntegerMatrix attaching);

  void validate() const;
};

// H^n(K) = Z^m / <columns of attach>.
AbelianGroupPresentation top_cohomology(const ComplexPresentation& k);

struct Codim1Cohomology {
  AbelianGroupPresentation group;  // free of rank k - rank(attach)
  // For n = 2 the (n-1)-skeleton is a wedge of circles and fundamental-group
  // effects are ignored; the rank is still reported, with this flag set.
  bool fundamentalGroupCaveat = false;
};

Codim1Cohomology codim1_cohomology(const ComplexPresentation& k);

// Class of the cochain dual to cell `cell` (0-based) in the cyclic H^n(K);
// the local index of interior points of that cell is its subgroup index.
QuotientElement cell_class(const ComplexPresentation& k, std::size_t cell);

}  // namespace cwtop
