#include "cwtop/deficient.hpp"

namespace cwtop {

namespace {

void require_two_hemispheres(const CellularSphereMap& f) {
  if (f.target().model != TargetModel::TwoHemispheres)
    throw ChainMapIncompatible(
        "region analysis requires the two-hemisphere target model");
}

bool one_cell(const CellularSphereMap& f) {
  return f.target().model == TargetModel::OneCell;
}

EfMembership classify(const Int& essentialUpper, bool exact, const Int& kf,
                      const Int& absDeg) {
  if (essentialUpper * kf < absDeg)
    return exact ? EfMembership::Yes : EfMembership::YesByBound;
  return EfMembership::No;
}

}  // namespace

RegionReport preimage_profile(const CellularSphereMap& f, Region region) {
  // The one-cell target has a single open-cell stratum; poles and the equator
  // exist only in the two-hemisphere model.
  if (one_cell(f) && region.kind != RegionKind::GenericInterior)
    require_two_hemispheres(f);
  DegreeReport deg = degree_report(f);
  const auto& k = f.source();

  RegionReport r;
  r.region = region;

  switch (region.kind) {
    case RegionKind::GenericInterior: {
      Int essential(0);
      for (std::size_t i = 0; i < k.cellCount; ++i) {
        const auto& cd = f.cellDegrees()[i];
        if (cd.targetCell != region.targetCell || cd.degree == 0) continue;
        Int sheets = abs(cd.degree);
        r.preimageCount += sheets;
        QuotientElement cls = cell_class(k, i);
        if (cd.degree < 0) cls = cls * Int(-1);
        for (Int s(0); s < sheets; ++s) r.localClasses.push_back(cls);
        if (deg.kPerCell[i] != 0) essential += sheets;
      }
      r.essentialCountExact = essential;
      r.essentialCountUpper = essential;
      break;
    }
    case RegionKind::Pole: {
      Int essential(0);
      for (std::size_t i = 0; i < k.cellCount; ++i) {
        const auto& cd = f.cellDegrees()[i];
        if (cd.targetCell != region.targetCell) continue;
        r.preimageCount += 1;
        QuotientElement cls = cell_class(k, i) * cd.degree;
        r.localClasses.push_back(cls);
        if (!cls.isZero()) essential += 1;
      }
      r.essentialCountExact = essential;
      r.essentialCountUpper = essential;
      break;
    }
    case RegionKind::Equator: {
      for (const Int& w : f.skeletonDegrees()) r.preimageCount += abs(w);
      // Skeleton essentiality is not computable from this presentation;
      // only the trivial upper bound is reported.
      r.essentialCountUpper = r.preimageCount;
      break;
    }
  }

  r.inEf = classify(r.essentialCountUpper, r.essentialCountExact.has_value(),
                    deg.kf, deg.absoluteDegree);
  return r;
}

DeficientSetDescription deficient_set(const CellularSphereMap& f) {
  const int n = f.source().n;

  DeficientSetDescription out;
  auto add = [&](Region region, int dim) {
    RegionReport r = preimage_profile(f, region);
    if (r.inEf != EfMembership::No) {
      out.regionsInEf.push_back(r);
      if (dim > out.dimension) out.dimension = dim;
    }
    out.allRegions.push_back(std::move(r));
  };

  if (one_cell(f)) {
    // The basepoint's fiber contains the whole (n-1)-skeleton (not a finite
    // fiber), so only the open-cell stratum is analyzed.
    add({RegionKind::GenericInterior, 0}, n);
    return out;
  }
  add({RegionKind::GenericInterior, kNorth}, n);
  add({RegionKind::GenericInterior, kSouth}, n);
  add({RegionKind::Pole, kNorth}, 0);
  add({RegionKind::Pole, kSouth}, 0);
  add({RegionKind::Equator, 0}, n - 1);
  return out;
}

bool degree_sum_check(const CellularSphereMap& f) {
  QuotientElement degClass = twisted_degree(f);
  std::vector<std::size_t> targets =
      one_cell(f) ? std::vector<std::size_t>{0}
                  : std::vector<std::size_t>{kNorth, kSouth};
  for (std::size_t t : targets) {
    RegionReport r = preimage_profile(f, {RegionKind::GenericInterior, t});
    QuotientElement sum{Int(0), degClass.modulus};
    for (const auto& c : r.localClasses) sum = sum + c;
    if (sum != degClass) return false;
  }
  return true;
}

}  // namespace cwtop
