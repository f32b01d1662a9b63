#pragma once

#include <optional>
#include <vector>

#include "cwtop/cw.hpp"

namespace cwtop {

enum class DensityVerdict { MultiplePointsDense, Inconclusive };

struct CellRemovalVerdict {
  bool injective = false;
  std::optional<MembershipWitness> witness;
};

struct TightnessReport {
  std::vector<CellRemovalVerdict> perCell;
  bool tight = false;
};

// Whether H^n(K) -> H^n(K minus the open cell) is injective: equivalent to
// the unit vector e_cell lying in the column lattice of the attaching matrix.
CellRemovalVerdict cell_removal_injective(const ComplexPresentation& k,
                                          std::size_t cell);

// K is n-tight iff no cell removal is injective. Each open cell interior is a
// component of the Euclidean part of K, so the per-cell check covers all
// candidate n-discs.
TightnessReport is_tight(const ComplexPresentation& k);

// Multiple points of a map with null H^n are dense in an n-tight complex.
// One-directional: anything else is Inconclusive at this level.
DensityVerdict density_verdict(const ComplexPresentation& k,
                               const QuotientElement& topMapDegreeClass);

}  // namespace cwtop
