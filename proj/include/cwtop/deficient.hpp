#pragma once

#include <optional>
#include <vector>

#include "cwtop/degree.hpp"

namespace cwtop {

// Target regions of a two-hemisphere power map, by dimension: the open
// hemisphere interiors minus the poles (dimension n), the two poles
// (dimension 0), and the equator (dimension n-1).
enum class RegionKind { GenericInterior, Pole, Equator };

struct Region {
  RegionKind kind = RegionKind::Equator;
  std::size_t targetCell = 0;  // kNorth / kSouth; unused for the equator
};

enum class EfMembership { Yes, No, YesByBound };

struct RegionReport {
  Region region;
  Int preimageCount{0};
  std::optional<Int> essentialCountExact;
  Int essentialCountUpper{0};
  std::vector<QuotientElement> localClasses;  // one d_x f per model preimage
  EfMembership inEf = EfMembership::No;
};

struct DeficientSetDescription {
  std::vector<RegionReport> allRegions;
  std::vector<RegionReport> regionsInEf;
  // Max dimension over the regions in E_f; -1 when E_f is empty.
  int dimension = -1;
};

// Per-region fiber bookkeeping for a hemisphere power map: each cell i over
// hemisphere t contributes |d_i| generic preimages (the z -> z^d model; exact
// for n = 2 and adopted as the combinatorial model for n >= 3), one pole
// preimage of local class d_i * [e_i*], and each wedge sphere |W_j| equator
// preimages whose essentiality is only bounded above, never computed.
RegionReport preimage_profile(const CellularSphereMap& f, Region region);

DeficientSetDescription deficient_set(const CellularSphereMap& f);

// For each target cell, the local classes over a generic fiber must add up
// to the pulled-back degree class.
bool degree_sum_check(const CellularSphereMap& f);

}  // namespace cwtop
