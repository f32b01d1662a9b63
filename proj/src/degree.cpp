#include "cwtop/degree.hpp"

namespace cwtop {

namespace {

// Relation row identifying the target top cochains: (1, -1) for the
// two-hemisphere model, empty for the one-cell model.
IntegerMatrix target_relations(const SphereTarget& t) {
  if (t.model == TargetModel::OneCell) return IntegerMatrix(1, 0);
  IntegerMatrix rel(2, 1);
  rel(0, 0) = 1;
  rel(1, 0) = -1;
  return rel;
}

void require_cyclic_top(const AbelianGroupPresentation& h) {
  bool ok = h.trivial() || (h.freeRank == 1 && h.torsion.empty()) ||
            (h.freeRank == 0 && h.torsion.size() == 1 && h.torsion[0] == 2);
  if (!ok)
    throw NonCyclicTopCohomology(
        "top cohomology of the source must be Z, Z/2 or trivial");
}

}  // namespace

CellularSphereMap::CellularSphereMap(ComplexPresentation source, SphereTarget target,
                                     std::vector<CellAssignment> cellDegrees,
                                     std::vector<Int> skeletonDegrees)
    : source_(std::move(source)),
      target_(target),
      cellDegrees_(std::move(cellDegrees)),
      skeletonDegrees_(std::move(skeletonDegrees)) {
  source_.validate();
  if (target_.n != source_.n)
    throw ChainMapIncompatible("source and target dimension differ");
  if (cellDegrees_.size() != source_.cellCount)
    throw DimensionMismatch("one degree entry per source cell required");
  if (skeletonDegrees_.size() != source_.sphereCount)
    throw DimensionMismatch("one skeleton degree per wedge sphere required");
  for (const auto& cd : cellDegrees_)
    if (cd.targetCell >= target_.topCellCount())
      throw DimensionMismatch("target cell index out of range");

  if (target_.model == TargetModel::OneCell) {
    for (const auto& w : skeletonDegrees_)
      if (w != 0)
        throw ChainMapIncompatible(
            "skeleton degrees must vanish for the one-cell target");
  }

  // Chain-map compatibility: attach * W = Dmat * relationRow^T.
  std::vector<Int> lhs = source_.attach * skeletonDegrees_;
  std::vector<Int> rhs(source_.cellCount, Int(0));
  if (target_.model == TargetModel::TwoHemispheres) {
    IntegerMatrix rel = target_relations(target_);  // column (1, -1)
    rhs = degreeMatrix() * rel.column(0);
  }
  if (lhs != rhs)
    throw ChainMapIncompatible(
        "cell degrees do not commute with the attaching maps");
}

IntegerMatrix CellularSphereMap::degreeMatrix() const {
  IntegerMatrix d(source_.cellCount, target_.topCellCount());
  for (std::size_t i = 0; i < source_.cellCount; ++i)
    d(i, cellDegrees_[i].targetCell) = cellDegrees_[i].degree;
  return d;
}

QuotientElement twisted_degree(const CellularSphereMap& f) {
  require_cyclic_top(top_cohomology(f.source()));
  // g_M is the class of the first target top cochain (north for the
  // two-hemisphere model; the relation identifies north* and south*).
  std::vector<Int> pullback = f.degreeMatrix().column(0);
  return quotient_image(f.source().attach, pullback);
}

std::pair<std::vector<Int>, Int> k_values(const CellularSphereMap& f) {
  require_cyclic_top(top_cohomology(f.source()));
  const auto& k = f.source();
  std::vector<Int> kPerCell(k.cellCount, Int(0));
  Int kf(0);
  for (std::size_t i = 0; i < k.cellCount; ++i) {
    QuotientElement c = cell_class(k, i);
    if (!c.isZero()) kPerCell[i] = c.modulus == 0 ? c.magnitude() : Int(1);
    if (kPerCell[i] > kf) kf = kPerCell[i];
  }
  return {std::move(kPerCell), std::move(kf)};
}

Int absolute_degree(const CellularSphereMap& f) {
  // Sphere targets with n >= 2 are simply connected: the minimal covering is
  // trivial, j = 1 and the lift is f itself.
  QuotientElement d = twisted_degree(f);
  return d.magnitude();
}

DegreeReport degree_report(const CellularSphereMap& f) {
  DegreeReport r;
  r.degClass = twisted_degree(f);
  r.degAbs = r.degClass.magnitude();
  auto [kPerCell, kf] = k_values(f);
  r.kPerCell = std::move(kPerCell);
  r.kf = std::move(kf);
  r.absoluteDegree = r.degAbs;
  return r;
}

VerdictWithReason multiple_point_verdict(const CellularSphereMap& f) {
  DegreeReport r = degree_report(f);
  for (const Int& kx : r.kPerCell)
    if (kx == 0)
      return {DensityVerdict::Inconclusive,
              "local nontriviality not established"};
  if (r.absoluteDegree == 0)
    return {DensityVerdict::MultiplePointsDense, "absolute degree is zero"};
  if (r.absoluteDegree > r.kf)
    return {DensityVerdict::MultiplePointsDense,
            "absolute degree exceeds the maximal local index"};
  return {DensityVerdict::Inconclusive,
          "0 < absolute degree <= maximal local index"};
}

}  // namespace cwtop
