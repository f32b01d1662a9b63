#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cwtop/errors.hpp"

namespace cwtop {

using PlanePoint = std::array<double, 2>;

// One edge of the planar tree; children branch from `tip`.
struct TreeEdge {
  PlanePoint base{};  // start (equals the parent's tip; origin for the trunk)
  PlanePoint tip{};
  int depth = 0;
  int parent = -1;                // edge index, -1 for the trunk
  std::array<int, 2> child{-1, -1};
};

// Self-similar binary tree rooted at the origin: trunk of length 1 along +y,
// each depth-d edge spawns two children of length scale^(d+1) turned by
// +/- angle from its direction. Construction verifies the embedding.
struct TreeSpec {
  double scale = 0.45;
  double angle = 0.0;
  int depth = 0;
  std::vector<TreeEdge> edges;

  double edgeLength(int depth_) const;
};

TreeSpec build_tree(double scale, double angle, int depth);

// Image point of the annulus collapse map: a point of S^(n-1) (embedded in
// R^n, basepoint at the last coordinate axis) together with the I coordinate.
struct AnnulusPoint {
  std::vector<double> spherePoint;
  double t = 0.0;
};

// phi(x, t) = (p(x), t) where p radially collapses the boundary of D^(n-1)
// to the basepoint; surjective onto S^(n-1) x I and injective on the open
// disc minus the center fiber's antipodal collapse locus.
AnnulusPoint collapse_map(const std::vector<double>& x, double t);

// Result of evaluating a stage map at one point of D^n.
struct StagedMapValue {
  PlanePoint image{};
  bool injectiveRegion = false;  // settled outside every active sub-disc
  int settledStage = 0;          // stage at which the point left the active set
};

// Stage-m approximation of the dense-single-point map D^n -> T. The whole
// disc is active at stage 0 and maps radially onto the trunk; each refinement
// replaces every active disc by two sub-discs (radius ratio `subDiscRatio`,
// centers offset by `subDiscOffset` along the first axis) covering the two
// child edges, and settles the rest of the disc onto the current edge through
// a radial profile blended with bump collars around the sub-discs.
class StagedMap {
 public:
  StagedMap(int n, const TreeSpec& tree, int stage);

  int dimension() const { return n_; }
  int stage() const { return stage_; }
  const TreeSpec& tree() const { return tree_; }

  StagedMapValue evaluate(const std::vector<double>& x) const;

  // Fraction of D^n that is still active (not settled) at this stage.
  double activeVolumeFraction() const;

  static constexpr double kSubDiscRatio = 0.3;   // rho
  static constexpr double kSubDiscOffset = 0.5;  // center distance / radius
  static constexpr double kBumpWidth = 0.5;      // collar width / sub-radius
  static constexpr double kBoundaryCollar = 1e-9;

 private:
  int n_;
  TreeSpec tree_;
  int stage_;
};

StagedMap stage_map(int n, const TreeSpec& tree, int stage);

struct SinglePointStats {
  int stage = 0;
  std::size_t sampleCount = 0;
  double injectiveFraction = 0.0;
  double epsCollisionFraction = 0.0;
  double epsilon = 0.0;
};

// Deterministic given the seed; injectiveFraction comes from exact region
// membership, epsCollisionFraction from pairwise image proximity.
SinglePointStats single_point_stats(const StagedMap& g, std::size_t sampleCount,
                                    double epsilon, std::uint64_t seed);

// One sampled point for the CLI table.
struct SampleRow {
  std::vector<double> input;
  PlanePoint image{};
  bool injectiveRegion = false;
};

std::vector<SampleRow> sample_rows(const StagedMap& g, std::size_t sampleCount,
                                   std::uint64_t seed);

// m copies of the tree rotated by 2*pi*i/m about the origin; verified to meet
// pairwise only at the origin. Cell i of a complex maps into copy i with the
// staged map; the (n-1)-skeleton maps to the origin.
struct ComplexMapAssembly {
  std::vector<TreeSpec> copies;
};

ComplexMapAssembly assemble_complex_map(std::size_t cellCount, const TreeSpec& tree);

// Deterministic uniform samples from the unit ball of R^n.
std::vector<std::vector<double>> ball_samples(int n, std::size_t count,
                                              std::uint64_t seed);

}  // namespace cwtop
