#pragma once

#include <string>
#include <vector>

#include "cwtop/tightness.hpp"

namespace cwtop {

// Cell model of the target n-sphere. OneCell is point + e^n; TwoHemispheres
// is an equatorial (n-1)-sphere with north and south n-cells, whose top
// cochains are identified by the relation (1, -1).
enum class TargetModel { OneCell, TwoHemispheres };

struct SphereTarget {
  int n = 2;
  TargetModel model = TargetModel::OneCell;

  std::size_t topCellCount() const {
    return model == TargetModel::OneCell ? 1 : 2;
  }
};

// Target top-cell indices for TwoHemispheres.
inline constexpr std::size_t kNorth = 0;
inline constexpr std::size_t kSouth = 1;

struct CellAssignment {
  std::size_t targetCell = 0;
  Int degree{0};
};

// Cellular map f: K -> S^n. cellDegrees[i] sends source cell i onto one
// target cell with the given degree; skeletonDegrees[j] is the degree of the
// restriction of f to wedge sphere j onto the equator (all zero for the
// OneCell target). Construction rejects data that is not a chain map:
// attach * W must equal Dmat * rel^T.
class CellularSphereMap {
 public:
  CellularSphereMap(ComplexPresentation source, SphereTarget target,
                    std::vector<CellAssignment> cellDegrees,
                    std::vector<Int> skeletonDegrees);

  const ComplexPresentation& source() const { return source_; }
  const SphereTarget& target() const { return target_; }
  const std::vector<CellAssignment>& cellDegrees() const { return cellDegrees_; }
  const std::vector<Int>& skeletonDegrees() const { return skeletonDegrees_; }

  // m x (#target cells): row i has degree_i in column targetCell_i.
  IntegerMatrix degreeMatrix() const;

 private:
  ComplexPresentation source_;
  SphereTarget target_;
  std::vector<CellAssignment> cellDegrees_;
  std::vector<Int> skeletonDegrees_;
};

struct DegreeReport {
  QuotientElement degClass;  // H^n(f)(g_M) in H^n(K)
  Int degAbs{0};             // |deg f| for Z; 0/1 for Z/2
  std::vector<Int> kPerCell;
  Int kf{0};
  Int absoluteDegree{0};  // = degAbs: sphere targets are simply connected
};

// Class of the pulled-back target generator. Requires H^n(K) to be Z, Z/2 or
// trivial; throws NonCyclicTopCohomology otherwise.
QuotientElement twisted_degree(const CellularSphereMap& f);

std::pair<std::vector<Int>, Int> k_values(const CellularSphereMap& f);

Int absolute_degree(const CellularSphereMap& f);

DegreeReport degree_report(const CellularSphereMap& f);

struct VerdictWithReason {
  DensityVerdict verdict = DensityVerdict::Inconclusive;
  std::string reason;
};

// Multiple points are dense when A(f) = 0 or A(f) > k_f, provided every cell
// interior is locally non-trivial (all k_{e_i} > 0); local non-triviality is
// only checked on cell interiors, skeleton points carry a standing caveat.
VerdictWithReason multiple_point_verdict(const CellularSphereMap& f);

}  // namespace cwtop
