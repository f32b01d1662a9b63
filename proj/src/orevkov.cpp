#include "cwtop/orevkov.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace cwtop {

namespace {

constexpr double kGeomTol = 1e-9;

double dot(PlanePoint a, PlanePoint b) { return a[0] * b[0] + a[1] * b[1]; }
PlanePoint sub(PlanePoint a, PlanePoint b) { return {a[0] - b[0], a[1] - b[1]}; }
double norm(PlanePoint a) { return std::hypot(a[0], a[1]); }

double point_segment_distance(PlanePoint p, PlanePoint a, PlanePoint b) {
  PlanePoint d = sub(b, a);
  double len2 = dot(d, d);
  double t = len2 == 0 ? 0.0 : std::clamp(dot(sub(p, a), d) / len2, 0.0, 1.0);
  return norm(sub(p, {a[0] + t * d[0], a[1] + t * d[1]}));
}

double cross(PlanePoint o, PlanePoint a, PlanePoint b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double segment_distance(PlanePoint p1, PlanePoint p2, PlanePoint p3, PlanePoint p4) {
  double d1 = cross(p3, p4, p1), d2 = cross(p3, p4, p2);
  double d3 = cross(p1, p2, p3), d4 = cross(p1, p2, p4);
  if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;
  return std::min(std::min(point_segment_distance(p1, p3, p4),
                           point_segment_distance(p2, p3, p4)),
                  std::min(point_segment_distance(p3, p1, p2),
                           point_segment_distance(p4, p1, p2)));
}

bool same_point(PlanePoint a, PlanePoint b) { return a[0] == b[0] && a[1] == b[1]; }

// Embedding check: segments sharing a tree vertex must leave it in distinct
// directions; all other pairs must stay strictly apart.
void verify_embedding(const std::vector<TreeEdge>& edges, const char* what) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const TreeEdge& a = edges[i];
      const TreeEdge& b = edges[j];
      int ii = static_cast<int>(i), jj = static_cast<int>(j);

      PlanePoint sharedAwayA{}, sharedAwayB{};
      bool adjacent = false;
      if (a.parent == jj) {  // b is a's parent: shared vertex is a.base == b.tip
        adjacent = true;
        sharedAwayA = sub(a.tip, a.base);
        sharedAwayB = sub(b.base, b.tip);
      } else if (b.parent == ii) {
        adjacent = true;
        sharedAwayA = sub(a.base, a.tip);
        sharedAwayB = sub(b.tip, b.base);
      } else if (a.parent == b.parent && a.parent >= 0) {  // siblings
        adjacent = true;
        sharedAwayA = sub(a.tip, a.base);
        sharedAwayB = sub(b.tip, b.base);
      }

      if (adjacent) {
        double cr = sharedAwayA[0] * sharedAwayB[1] - sharedAwayA[1] * sharedAwayB[0];
        if (std::abs(cr) < kGeomTol && dot(sharedAwayA, sharedAwayB) > 0.0)
          throw EmbeddingViolation(what);
        continue;
      }
      if (segment_distance(a.base, a.tip, b.base, b.tip) < kGeomTol)
        throw EmbeddingViolation(what);
    }
}

}  // namespace

double TreeSpec::edgeLength(int depth_) const { return std::pow(scale, depth_); }

TreeSpec build_tree(double scale, double angle, int depth) {
  if (!(scale > 0.0 && scale <= 0.5))
    throw EmbeddingViolation("branch scale must lie in (0, 1/2]");
  if (depth < 0) throw EmbeddingViolation("depth must be nonnegative");

  TreeSpec tree;
  tree.scale = scale;
  tree.angle = angle;
  tree.depth = depth;

  // Directions tracked as angles from the +y axis; tips computed once so
  // shared vertices compare bitwise equal in the embedding check.
  struct Frame {
    int edge;
    double direction;
  };
  tree.edges.push_back(TreeEdge{{0.0, 0.0}, {0.0, 1.0}, 0, -1, {-1, -1}});
  std::vector<Frame> frontier{{0, 0.0}};
  for (int d = 0; d < depth; ++d) {
    std::vector<Frame> next;
    double len = tree.edgeLength(d + 1);
    for (const Frame& f : frontier) {
      PlanePoint base = tree.edges[f.edge].tip;
      for (int side = 0; side < 2; ++side) {
        double dir = f.direction + (side == 0 ? -angle : angle);
        PlanePoint tip{base[0] + len * std::sin(dir), base[1] + len * std::cos(dir)};
        int idx = static_cast<int>(tree.edges.size());
        tree.edges.push_back(TreeEdge{base, tip, d + 1, f.edge, {-1, -1}});
        tree.edges[f.edge].child[side] = idx;
        next.push_back({idx, dir});
      }
    }
    frontier = std::move(next);
  }

  verify_embedding(tree.edges, "tree segments intersect; reject parameters");
  return tree;
}

AnnulusPoint collapse_map(const std::vector<double>& x, double t) {
  if (x.empty()) throw DimensionMismatch("collapse_map needs dim >= 1 input");
  if (t < 0.0 || t > 1.0) throw DimensionMismatch("t outside [0,1]");
  double r2 = 0.0;
  for (double c : x) r2 += c * c;
  double r = std::sqrt(r2);
  if (r > 1.0 + 1e-12) throw DimensionMismatch("point outside the disc");
  r = std::min(r, 1.0);

  // Radial suspension: |x| = 1 goes to the basepoint (0,...,0,1), the center
  // to its antipode.
  double theta = M_PI * (1.0 - r);
  AnnulusPoint out;
  out.t = t;
  out.spherePoint.assign(x.size() + 1, 0.0);
  if (r > 0.0) {
    double s = std::sin(theta) / r;
    for (std::size_t i = 0; i < x.size(); ++i) out.spherePoint[i] = s * x[i];
  }
  out.spherePoint.back() = std::cos(theta);
  return out;
}

StagedMap::StagedMap(int n, const TreeSpec& tree, int stage)
    : n_(n), tree_(tree), stage_(stage) {
  if (n < 2) throw DimensionMismatch("disc dimension must be at least 2");
  if (stage < 0 || stage > tree.depth)
    throw DimensionMismatch("stage exceeds tree depth");
}

StagedMapValue StagedMap::evaluate(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw DimensionMismatch("point dimension mismatch");

  // Current active disc: center c, radius r, covering `edge`.
  std::vector<double> c(n_, 0.0);
  double r = 1.0;
  int edge = 0;

  auto radius_from = [&](const std::vector<double>& center) {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
      double d = x[i] - center[i];
      s += d * d;
    }
    return std::sqrt(s);
  };

  auto along_edge = [&](int e, double tau) -> PlanePoint {
    const TreeEdge& te = tree_.edges[e];
    return {te.base[0] + tau * (te.tip[0] - te.base[0]),
            te.base[1] + tau * (te.tip[1] - te.base[1])};
  };

  for (int level = 0; level < stage_; ++level) {
    double subRadius = kSubDiscRatio * r;
    std::vector<double> cMinus = c, cPlus = c;
    cMinus[0] -= kSubDiscOffset * r;
    cPlus[0] += kSubDiscOffset * r;

    double dMinus = radius_from(cMinus);
    double dPlus = radius_from(cPlus);
    if (dMinus <= subRadius || dPlus <= subRadius) {
      // Descend into the sub-disc covering the matching child edge.
      bool minus = dMinus <= subRadius;
      c = minus ? cMinus : cPlus;
      r = subRadius;
      edge = tree_.edges[edge].child[minus ? 0 : 1];
      continue;
    }

    // Settled at this refinement: radial profile onto the current edge,
    // lifted to the tip by bump collars around the two sub-discs.
    double u = std::min(radius_from(c) / r, 1.0);
    if (u >= 1.0 - kBoundaryCollar) u = 1.0;
    double tau = 1.0 - u;
    for (double dist : {dMinus, dPlus}) {
      double bump = 1.0 - (dist / subRadius - 1.0) / kBumpWidth;
      tau = std::max(tau, std::clamp(bump, 0.0, 1.0));
    }
    return {along_edge(edge, tau), true, level + 1};
  }

  // Still active at the final stage: plain radial collapse onto the edge.
  double u = std::min(radius_from(c) / r, 1.0);
  if (u >= 1.0 - kBoundaryCollar) u = 1.0;
  return {along_edge(edge, 1.0 - u), false, stage_};
}

double StagedMap::activeVolumeFraction() const {
  // Each refinement keeps two sub-discs of radius ratio rho per active disc.
  return std::pow(2.0 * std::pow(kSubDiscRatio, n_), stage_);
}

StagedMap stage_map(int n, const TreeSpec& tree, int stage) {
  return StagedMap(n, tree, stage);
}

namespace {

// splitmix64: stable scalar PRNG, identical across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

}  // namespace

std::vector<std::vector<double>> ball_samples(int n, std::size_t count,
                                              std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<std::vector<double>> out;
  out.reserve(count);
  std::vector<double> p(n);
  while (out.size() < count) {
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      p[i] = 2.0 * rng.uniform() - 1.0;
      r2 += p[i] * p[i];
    }
    if (r2 <= 1.0) out.push_back(p);
  }
  return out;
}

std::vector<SampleRow> sample_rows(const StagedMap& g, std::size_t sampleCount,
                                   std::uint64_t seed) {
  auto samples = ball_samples(g.dimension(), sampleCount, seed);
  std::vector<SampleRow> rows;
  rows.reserve(samples.size());
  for (auto& s : samples) {
    StagedMapValue v = g.evaluate(s);
    rows.push_back(SampleRow{std::move(s), v.image, v.injectiveRegion});
  }
  return rows;
}

SinglePointStats single_point_stats(const StagedMap& g, std::size_t sampleCount,
                                    double epsilon, std::uint64_t seed) {
  if (sampleCount < 1) throw DimensionMismatch("sampleCount must be >= 1");
  if (!(epsilon > 0.0)) throw DimensionMismatch("epsilon must be positive");

  auto rows = sample_rows(g, sampleCount, seed);

  SinglePointStats st;
  st.stage = g.stage();
  st.sampleCount = sampleCount;
  st.epsilon = epsilon;

  std::size_t injective = 0;
  for (const auto& row : rows)
    if (row.injectiveRegion) ++injective;
  st.injectiveFraction = static_cast<double>(injective) / sampleCount;

  // Spatial hash on images with cell size epsilon.
  std::unordered_map<std::int64_t, std::vector<std::size_t>> grid;
  auto key = [epsilon](PlanePoint p) {
    auto gx = static_cast<std::int64_t>(std::floor(p[0] / epsilon));
    auto gy = static_cast<std::int64_t>(std::floor(p[1] / epsilon));
    return gx * 0x100000001LL + gy;
  };
  for (std::size_t i = 0; i < rows.size(); ++i) grid[key(rows[i].image)].push_back(i);

  std::size_t colliding = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    bool hit = false;
    PlanePoint p = rows[i].image;
    for (int dx = -1; dx <= 1 && !hit; ++dx)
      for (int dy = -1; dy <= 1 && !hit; ++dy) {
        PlanePoint q{p[0] + dx * epsilon, p[1] + dy * epsilon};
        auto it = grid.find(key(q));
        if (it == grid.end()) continue;
        for (std::size_t j : it->second) {
          if (j == i) continue;
          if (norm(sub(p, rows[j].image)) <= epsilon) {
            hit = true;
            break;
          }
        }
      }
    if (hit) ++colliding;
  }
  st.epsCollisionFraction = static_cast<double>(colliding) / sampleCount;
  return st;
}

ComplexMapAssembly assemble_complex_map(std::size_t cellCount, const TreeSpec& tree) {
  if (cellCount < 1) throw DimensionMismatch("assembly needs at least one cell");

  ComplexMapAssembly out;
  out.copies.reserve(cellCount);
  for (std::size_t i = 0; i < cellCount; ++i) {
    double th = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(cellCount);
    double cs = std::cos(th), sn = std::sin(th);
    TreeSpec copy = tree;
    for (TreeEdge& e : copy.edges) {
      auto rot = [&](PlanePoint p) -> PlanePoint {
        return {cs * p[0] - sn * p[1], sn * p[0] + cs * p[1]};
      };
      e.base = rot(e.base);
      e.tip = rot(e.tip);
    }
    // The trunk base must stay exactly at the shared origin.
    out.copies.push_back(std::move(copy));
    out.copies.back().edges[0].base = {0.0, 0.0};
  }

  // Copies may only meet at the origin.
  for (std::size_t i = 0; i < cellCount; ++i)
    for (std::size_t j = i + 1; j < cellCount; ++j)
      for (const TreeEdge& a : out.copies[i].edges)
        for (const TreeEdge& b : out.copies[j].edges) {
          bool aAtOrigin = same_point(a.base, {0.0, 0.0});
          bool bAtOrigin = same_point(b.base, {0.0, 0.0});
          if (aAtOrigin && bAtOrigin) {
            PlanePoint da = sub(a.tip, a.base), db = sub(b.tip, b.base);
            double cr = da[0] * db[1] - da[1] * db[0];
            if (std::abs(cr) < kGeomTol && dot(da, db) > 0.0)
              throw EmbeddingViolation("rotated trunks coincide");
            continue;
          }
          if (segment_distance(a.base, a.tip, b.base, b.tip) < kGeomTol) {
            if (aAtOrigin || bAtOrigin) {
              // Touching is legal only exactly at the origin.
              const TreeEdge& other = aAtOrigin ? b : a;
              if (point_segment_distance({0.0, 0.0}, other.base, other.tip) <
                  kGeomTol)
                continue;
            }
            throw EmbeddingViolation("rotated tree copies intersect away from origin");
          }
        }
  return out;
}

}  // namespace cwtop
