// Acceptance gate: each numbered check prints exactly one PASS/FAIL line.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwtop/deficient.hpp"
#include "cwtop/io.hpp"
#include "cwtop/orevkov.hpp"

using namespace cwtop;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* title, bool ok, double seconds,
            const std::string& detail = "") {
  std::printf("[%d] %-58s %s (%.2fs)%s%s\n", index, title, ok ? "PASS" : "FAIL",
              seconds, detail.empty() ? "" : " — ", detail.c_str());
  if (!ok) ++failures;
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// ---- criterion 1: worked example end to end ------------------------------

void criterion1() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    ComplexPresentation k = parse_complex(
        read_file(std::string(CWTOP_DATA_DIR) + "/hemisphere-example.complex.json"));
    CellularSphereMap f = parse_map(
        read_file(std::string(CWTOP_DATA_DIR) + "/hemisphere-example.map.json"), k);

    DegreeReport r = degree_report(f);
    ok &= (r.kf == 3);
    ok &= (r.absoluteDegree == 6);
    ok &= (r.kPerCell == std::vector<Int>{Int(3), Int(2)});
    ok &= (multiple_point_verdict(f).verdict == DensityVerdict::MultiplePointsDense);
    ok &= is_tight(k).tight;

    DeficientSetDescription d = deficient_set(f);
    ok &= (d.dimension == 1);
    int poles = 0, equators = 0, interiors = 0;
    for (const RegionReport& rr : d.regionsInEf) {
      if (rr.region.kind == RegionKind::Pole) ++poles;
      if (rr.region.kind == RegionKind::Equator) ++equators;
      if (rr.region.kind == RegionKind::GenericInterior) ++interiors;
    }
    ok &= (poles == 2 && equators == 1 && interiors == 0);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  ok &= (dt < 1.0);
  report(1, "worked example: k_f=3, A=6, E_f=equator+poles, tight", ok, dt, detail);
}

// ---- criterion 2: Smith normal form property suite ------------------------

void criterion2() {
  auto t0 = Clock::now();
  bool ok = true;
  Rng rng(2024);
  for (int iter = 0; iter < 500 && ok; ++iter) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 8));
    std::size_t k = static_cast<std::size_t>(rng.range(1, 8));
    IntegerMatrix a(m, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = rng.range(-20, 20);

    SmithDecomposition s = smith_normal_form(a);
    ok &= (s.u * a * s.v == s.d);
    ok &= (abs(s.u.determinant()) == 1);
    ok &= (abs(s.v.determinant()) == 1);
    std::size_t n = std::min(m, k);
    Int g = 0;
    for (const Int& e : a.entries()) g = gcd(g, e);
    if (g != 0) ok &= (s.d(0, 0) == g);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (s.d(i + 1, i + 1) != 0)
        ok &= (s.d(i, i) != 0 && s.d(i + 1, i + 1) % s.d(i, i) == 0);
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j) ok &= (s.d(i, j) == 0);
    if (m == k) {
      Int det = abs(a.determinant());
      if (det != 0) {
        Int prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod *= s.d(i, i);
        ok &= (abs(prod) == det);
      }
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  ok &= (dt < 10.0);
  report(2, "Smith form properties on 500 random matrices", ok, dt);
}

// ---- criterion 3: lattice membership vs enumeration -----------------------

// Meet-in-the-middle enumeration of A*beta = b over beta in [-30,30]^k:
// hash the left half-sums, scan the right halves.
std::optional<std::vector<long>> enumerate_box(const IntegerMatrix& a,
                                               const std::vector<Int>& b) {
  const long B = 30;
  std::size_t k = a.cols(), m = a.rows();
  std::size_t kl = k / 2, kr = k - kl;

  auto pack = [m](const std::vector<long>& v) {
    // Row sums stay below 6*30*4 = 720 in magnitude; 16 bits per row is safe.
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < m; ++i)
      key = key * 65536 + static_cast<std::uint64_t>(v[i] + 32768);
    return key;
  };

  std::unordered_map<std::uint64_t, std::vector<long>> left;
  std::vector<long> beta(kl, -B);
  while (true) {
    std::vector<long> sum(m, 0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < kl; ++j)
        sum[i] += static_cast<long>(a(i, j).get_si()) * beta[j];
    left.emplace(pack(sum), beta);
    std::size_t pos = 0;
    while (pos < kl && beta[pos] == B) beta[pos++] = -B;
    if (pos == kl) break;
    ++beta[pos];
  }

  std::vector<long> gamma(kr, -B);
  while (true) {
    std::vector<long> need(m);
    for (std::size_t i = 0; i < m; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < kr; ++j)
        s += static_cast<long>(a(i, kl + j).get_si()) * gamma[j];
      need[i] = static_cast<long>(b[i].get_si()) - s;
    }
    bool inRange = true;
    for (long v : need) inRange &= (v >= -32768 && v < 32768);
    if (inRange) {
      auto it = left.find(pack(need));
      if (it != left.end()) {
        std::vector<long> full = it->second;
        full.insert(full.end(), gamma.begin(), gamma.end());
        return full;
      }
    }
    std::size_t pos = 0;
    while (pos < kr && gamma[pos] == B) gamma[pos++] = -B;
    if (pos == kr) break;
    ++gamma[pos];
  }
  return std::nullopt;
}

void criterion3() {
  auto t0 = Clock::now();
  bool ok = true;
  Rng rng(303);
  for (int iter = 0; iter < 200 && ok; ++iter) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 4));
    std::size_t k = static_cast<std::size_t>(rng.range(1, 4));
    IntegerMatrix a(m, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) a(i, j) = rng.range(-6, 6);
    std::vector<Int> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = rng.range(-12, 12);

    auto fast = lattice_member(a, b);
    auto slow = enumerate_box(a, b);
    if (fast) {
      ok &= (a * fast->coefficients == b);
    } else {
      ok &= !slow.has_value();
    }
    if (slow && !fast) ok = false;
    if (slow) {
      // re-verify the oracle's own witness
      std::vector<Int> bs(slow->begin(), slow->end());
      ok &= (a * bs == b);
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  ok &= (dt < 30.0);
  report(3, "lattice membership vs box enumeration, 200 instances", ok, dt);
}

// ---- criterion 4: tightness vs quotient-image kernel criterion ------------

void criterion4() {
  auto t0 = Clock::now();
  bool ok = true;
  Rng rng(404);
  int built = 0;
  while (built < 100 && ok) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 5));
    std::size_t k = static_cast<std::size_t>(rng.range(1, 5));
    IntegerMatrix attach(m, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) attach(i, j) = rng.range(-6, 6);
    if (!cokernel(attach).cyclic()) continue;
    ++built;
    ComplexPresentation kx(2, k, m, attach);
    for (std::size_t i = 0; i < m; ++i) {
      bool viaLattice = cell_removal_injective(kx, i).injective;
      bool viaQuotient = quotient_image(attach, unit_vector(m, i)).isZero();
      ok &= (viaLattice == viaQuotient);
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  report(4, "injectivity iff vanishing class, 100 random complexes", ok, dt);
}

// ---- criterion 5: Lemma-style sum identity + generic exclusion -------------

void criterion5() {
  auto t0 = Clock::now();
  bool ok = true;
  Rng rng(505);
  int built = 0;
  while (built < 200 && ok) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 4));
    std::size_t k = static_cast<std::size_t>(rng.range(0, 3));
    IntegerMatrix attach(m, k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) attach(i, j) = rng.range(-5, 5);
    AbelianGroupPresentation top = cokernel(attach);
    if (!top.cyclic() || (!top.torsion.empty() && top.torsion[0] != 2)) continue;
    std::vector<CellAssignment> cells(m);
    for (std::size_t i = 0; i < m; ++i) {
      cells[i].targetCell = rng.range(0, 1) ? kSouth : kNorth;
      cells[i].degree = rng.range(-5, 5);
    }
    std::vector<Int> w(k);
    for (std::size_t j = 0; j < k; ++j) w[j] = rng.range(-3, 3);
    std::optional<CellularSphereMap> f;
    try {
      f.emplace(ComplexPresentation(2, k, m, attach),
                SphereTarget{2, TargetModel::TwoHemispheres}, cells, w);
    } catch (const Error&) {
      continue;
    }
    ++built;

    ok &= degree_sum_check(*f);
    DegreeReport rep = degree_report(*f);
    if (rep.absoluteDegree != 0 && rep.kf > 0) {
      for (const RegionReport& r : deficient_set(*f).regionsInEf)
        ok &= (r.region.kind != RegionKind::GenericInterior);
    }
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  report(5, "degree-sum identity + generic exclusion, 200 maps", ok, dt);
}

// ---- criterion 6: staged-map construction contract -------------------------

void criterion6() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    const double kPi = 3.14159265358979323846;
    TreeSpec tree = build_tree(0.45, kPi / 4, 8);
    std::vector<StagedMap> maps;
    for (int m = 0; m <= 8; ++m) maps.emplace_back(2, tree, m);

    // (a) boundary points map exactly to the origin at every stage <= 8
    for (int m = 0; m <= 8 && ok; ++m)
      for (int i = 0; i < 256; ++i) {
        double a = 2 * kPi * i / 256;
        StagedMapValue v = maps[m].evaluate({std::cos(a), std::sin(a)});
        if (v.image[0] != 0.0 || v.image[1] != 0.0) {
          ok = false;
          detail = "boundary sample off origin";
          break;
        }
      }

    // (b) sampled sup-distance between consecutive stages <= L*s^m, m = 1..7
    auto pts = ball_samples(2, 10000, 1);
    for (int m = 1; m <= 7 && ok; ++m) {
      double sup = 0;
      for (const auto& x : pts) {
        PlanePoint p = maps[m].evaluate(x).image;
        PlanePoint q = maps[m + 1].evaluate(x).image;
        sup = std::max(sup, std::hypot(p[0] - q[0], p[1] - q[1]));
      }
      if (sup > std::pow(0.45, m) + 1e-12) {
        ok = false;
        detail = "Cauchy rate violated at stage " + std::to_string(m);
      }
    }

    // (c) injectiveFraction nondecreasing, above 0.5 by stage 6
    double prev = -1;
    double atSix = 0;
    for (int m = 0; m <= 8 && ok; ++m) {
      SinglePointStats st = single_point_stats(maps[m], 10000, 1e-3, 1);
      if (st.injectiveFraction < prev) {
        ok = false;
        detail = "injective fraction decreased";
      }
      prev = st.injectiveFraction;
      if (m == 6) atSix = st.injectiveFraction;
    }
    if (ok && atSix <= 0.5) {
      ok = false;
      detail = "injective fraction at stage 6 not above 0.5";
    }

    // (d) no two injective-region samples share an image
    auto rows = sample_rows(maps[8], 10000, 1);
    std::vector<PlanePoint> images;
    for (const auto& r : rows)
      if (r.injectiveRegion) images.push_back(r.image);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      ok = false;
      detail = "duplicate injective-region image";
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  ok &= (dt < 60.0);
  report(6, "staged map: boundary, Cauchy rate, injectivity growth", ok, dt,
         detail);
}

// ---- criterion 7: rotated-copy assembly ------------------------------------

void criterion7() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  try {
    const double kPi = 3.14159265358979323846;
    TreeSpec tree = build_tree(0.3, kPi / 6, 5);
    ComplexMapAssembly a = assemble_complex_map(4, tree);
    ok &= (a.copies.size() == 4);

    // Pairwise intersections are exactly the origin: sampled points away from
    // the origin on one copy must keep clear of every other copy.
    for (std::size_t c = 0; c < 4 && ok; ++c)
      for (std::size_t d = 0; d < 4 && ok; ++d) {
        if (c == d) continue;
        for (const TreeEdge& e : a.copies[c].edges) {
          for (int i = 0; i <= 24; ++i) {
            double u = i / 24.0;
            double px = e.base[0] + u * (e.tip[0] - e.base[0]);
            double py = e.base[1] + u * (e.tip[1] - e.base[1]);
            if (std::hypot(px, py) < 1e-6) continue;
            double best = 1e9;
            for (const TreeEdge& f : a.copies[d].edges) {
              double vx = f.tip[0] - f.base[0], vy = f.tip[1] - f.base[1];
              double wx = px - f.base[0], wy = py - f.base[1];
              double len2 = vx * vx + vy * vy;
              double t = len2 > 0 ? std::clamp((vx * wx + vy * wy) / len2, 0.0, 1.0)
                                  : 0.0;
              best = std::min(best, std::hypot(f.base[0] + t * vx - px,
                                               f.base[1] + t * vy - py));
            }
            if (best < 1e-9) {
              ok = false;
              detail = "copies touch away from the origin";
              break;
            }
          }
          if (!ok) break;
        }
      }

    // Skeleton points map to the origin: the assembly contract sends the whole
    // (n-1)-skeleton to the shared basepoint, realized by the boundary rule.
    StagedMap g(2, tree, 4);
    for (int i = 0; i < 128 && ok; ++i) {
      double ang = 2 * kPi * i / 128;
      StagedMapValue v = g.evaluate({std::cos(ang), std::sin(ang)});
      if (v.image[0] != 0.0 || v.image[1] != 0.0) {
        ok = false;
        detail = "skeleton sample not at origin";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  ok &= (dt < 5.0);
  report(7, "4 rotated copies meet only at origin; skeleton -> 0", ok, dt, detail);
}

// ---- criterion 8: CLI determinism -------------------------------------------

std::string run_cli(const std::string& args, const std::string& outFile) {
  std::string cmd = std::string(CWTOP_CLI_PATH) + " " + args + " --out " + outFile;
  int rc = std::system(cmd.c_str());
  if (rc != 0) return "";
  return read_file(outFile);
}

void criterion8() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;

  std::string dataDir = CWTOP_DATA_DIR;
  std::string complexFile = dataDir + "/hemisphere-example.complex.json";
  std::string mapFile = dataDir + "/hemisphere-example.map.json";
  std::string tmp1 = "acceptance-run1.txt", tmp2 = "acceptance-run2.txt";

  std::vector<std::pair<std::string, std::string>> runs = {
      {"cohomology", "cohomology " + complexFile + " --format structured"},
      {"tight", "tight " + complexFile + " --format structured"},
      {"degree", "degree " + complexFile + " " + mapFile + " --format structured"},
      {"deficient",
       "deficient " + complexFile + " " + mapFile + " --format structured"},
      {"orevkov",
       "orevkov --depth 5 --samples 2000 --seed 7 --format structured"},
  };
  for (const auto& [name, args] : runs) {
    std::string a = run_cli(args, tmp1);
    std::string b = run_cli(args, tmp2);
    if (a.empty() || a != b) {
      ok = false;
      detail = "subcommand '" + name + "' not byte-identical";
      break;
    }
  }
  std::remove(tmp1.c_str());
  std::remove(tmp2.c_str());
  double dt = std::chrono::duration<double>(Clock::now() - t0).count();
  report(8, "byte-identical structured output across reruns", ok, dt, detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures) {
    std::printf("%d acceptance criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 8 acceptance criteria passed\n");
  return 0;
}
