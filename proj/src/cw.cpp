#include "cwtop/cw.hpp"

namespace cwtop {

ComplexPresentation::ComplexPresentation(int dim, std::size_t spheres,
                                         std::size_t cells, IntegerMatrix attaching)
    : n(dim), sphereCount(spheres), cellCount(cells), attach(std::move(attaching)) {
  validate();
}

void ComplexPresentation::validate() const {
  if (n < 2) throw ParseError("complex dimension must be at least 2");
  if (cellCount < 1) throw ParseError("complex needs at least one top cell");
  if (attach.rows() != cellCount || attach.cols() != sphereCount)
    throw DimensionMismatch("attaching matrix must be (cells x spheres)");
}

AbelianGroupPresentation top_cohomology(const ComplexPresentation& k) {
  return cokernel(k.attach);
}

Codim1Cohomology codim1_cohomology(const ComplexPresentation& k) {
  std::size_t rank = k.sphereCount == 0 ? 0 : smith_normal_form(k.attach).rank();
  Codim1Cohomology out;
  out.group.freeRank = k.sphereCount - rank;
  out.fundamentalGroupCaveat = (k.n == 2);
  return out;
}

QuotientElement cell_class(const ComplexPresentation& k, std::size_t cell) {
  if (cell >= k.cellCount) throw DimensionMismatch("cell index out of range");
  return quotient_image(k.attach, unit_vector(k.cellCount, cell));
}

}  // namespace cwtop
