#include "cwtop/tightness.hpp"

namespace cwtop {

CellRemovalVerdict cell_removal_injective(const ComplexPresentation& k,
                                          std::size_t cell) {
  if (cell >= k.cellCount) throw DimensionMismatch("cell index out of range");
  CellRemovalVerdict v;
  auto witness = lattice_member(k.attach, unit_vector(k.cellCount, cell));
  v.injective = witness.has_value();
  v.witness = std::move(witness);
  return v;
}

TightnessReport is_tight(const ComplexPresentation& k) {
  TightnessReport report;
  report.tight = true;
  report.perCell.reserve(k.cellCount);
  for (std::size_t i = 0; i < k.cellCount; ++i) {
    report.perCell.push_back(cell_removal_injective(k, i));
    if (report.perCell.back().injective) report.tight = false;
  }
  return report;
}

DensityVerdict density_verdict(const ComplexPresentation& k,
                               const QuotientElement& topMapDegreeClass) {
  if (topMapDegreeClass.isZero() && is_tight(k).tight)
    return DensityVerdict::MultiplePointsDense;
  return DensityVerdict::Inconclusive;
}

}  // namespace cwtop
