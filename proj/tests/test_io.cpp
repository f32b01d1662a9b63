#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "cwtop/io.hpp"
#include "doctest.h"

using namespace cwtop;

namespace {

const char* kComplexDoc = "{\"n\": 2, \"spheres\": 1, \"cells\": [[2], [-3]]}";
const char* kMapDoc =
    "{\"target\": \"two-hemispheres\", \"cellDegrees\": ["
    "{\"cell\": 0, \"targetCell\": \"north\", \"degree\": 2}, "
    "{\"cell\": 1, \"targetCell\": \"south\", \"degree\": 3}], "
    "\"skeletonDegrees\": [1]}";

}  // namespace

TEST_CASE("complex document round-trips bit-exactly") {
  ComplexPresentation k = parse_complex(kComplexDoc);
  CHECK(k.n == 2);
  CHECK(k.sphereCount == 1);
  CHECK(k.cellCount == 2);
  CHECK(k.attach == IntegerMatrix{{2}, {-3}});

  std::string text = serialize_complex(k);
  ComplexPresentation again = parse_complex(text);
  CHECK(again.n == k.n);
  CHECK(again.sphereCount == k.sphereCount);
  CHECK(again.attach == k.attach);
  CHECK(serialize_complex(again) == text);
}

TEST_CASE("map document round-trips bit-exactly") {
  ComplexPresentation k = parse_complex(kComplexDoc);
  CellularSphereMap f = parse_map(kMapDoc, k);
  CHECK(f.target().model == TargetModel::TwoHemispheres);
  CHECK(f.cellDegrees()[0].targetCell == kNorth);
  CHECK(f.cellDegrees()[0].degree == 2);
  CHECK(f.cellDegrees()[1].targetCell == kSouth);
  CHECK(f.cellDegrees()[1].degree == 3);
  CHECK(f.skeletonDegrees() == std::vector<Int>{Int(1)});

  std::string text = serialize_map(f);
  CellularSphereMap again = parse_map(text, k);
  CHECK(serialize_map(again) == text);
}

TEST_CASE("integers beyond 64 bits survive as decimal strings") {
  Int big("123456789012345678901234567890");
  ComplexPresentation k(2, 1, 1, IntegerMatrix(1, 1));
  k.attach(0, 0) = big;
  std::string text = serialize_complex(k);
  CHECK(text.find("\"123456789012345678901234567890\"") != std::string::npos);
  ComplexPresentation again = parse_complex(text);
  CHECK(again.attach(0, 0) == big);
}

TEST_CASE("parse errors carry the offending field") {
  CHECK_THROWS_AS(parse_complex("not json"), ParseError);
  CHECK_THROWS_AS(parse_complex("{\"n\": 2, \"spheres\": 1}"), ParseError);
  CHECK_THROWS_AS(parse_complex("{\"n\": 2, \"spheres\": 1, \"cells\": [[]]}"),
                  ParseError);
  CHECK_THROWS_AS(parse_complex("{\"n\": 2, \"spheres\": -1, \"cells\": [[1]]}"),
                  ParseError);

  ComplexPresentation k = parse_complex(kComplexDoc);
  CHECK_THROWS_AS(parse_map("{\"target\": \"torus\"}", k), ParseError);
  CHECK_THROWS_AS(
      parse_map("{\"target\": \"two-hemispheres\", \"cellDegrees\": [], "
                "\"skeletonDegrees\": [1]}",
                k),
      ParseError);
}

TEST_CASE("group and element pretty-printing") {
  CHECK(group_to_string(AbelianGroupPresentation{0, {}}) == "0");
  CHECK(group_to_string(AbelianGroupPresentation{1, {}}) == "Z");
  CHECK(group_to_string(AbelianGroupPresentation{2, {Int(2), Int(4)}}) ==
        "Z^2 + Z/2 + Z/4");
  CHECK(element_to_string(QuotientElement{Int(-6), Int(0)}) == "-6");
  CHECK(element_to_string(QuotientElement{Int(1), Int(2)}) == "1 (mod 2)");
}

TEST_CASE("reports are deterministic") {
  ComplexPresentation k = parse_complex(kComplexDoc);
  CellularSphereMap f = parse_map(kMapDoc, k);
  for (ReportFormat fmt : {ReportFormat::Human, ReportFormat::Structured}) {
    CHECK(render_cohomology_report(k, fmt) == render_cohomology_report(k, fmt));
    CHECK(render_tightness_report(k, fmt) == render_tightness_report(k, fmt));
    CHECK(render_degree_report(f, fmt) == render_degree_report(f, fmt));
    CHECK(render_deficient_report(f, fmt) == render_deficient_report(f, fmt));
  }
  OrevkovRunConfig cfg;
  cfg.stage = 3;
  cfg.samples = 500;
  CHECK(render_orevkov_report(cfg, ReportFormat::Structured) ==
        render_orevkov_report(cfg, ReportFormat::Structured));
  CHECK(render_orevkov_point_cloud(cfg) == render_orevkov_point_cloud(cfg));
  CHECK(render_orevkov_svg(cfg) == render_orevkov_svg(cfg));
}

TEST_CASE("worked-example reports carry the paper-checked numbers") {
  ComplexPresentation k = parse_complex(kComplexDoc);
  CellularSphereMap f = parse_map(kMapDoc, k);

  std::string coh = render_cohomology_report(k, ReportFormat::Human);
  CHECK(coh.find("H^2 = Z\n") != std::string::npos);

  std::string tight = render_tightness_report(k, ReportFormat::Human);
  CHECK(tight.find("n-tight: true") != std::string::npos);

  std::string deg = render_degree_report(f, ReportFormat::Human);
  CHECK(deg.find("|deg| = 6") != std::string::npos);
  CHECK(deg.find("k_f = 3") != std::string::npos);
  CHECK(deg.find("A(f) = 6") != std::string::npos);
  CHECK(deg.find("multiple-points-dense") != std::string::npos);

  std::string def = render_deficient_report(f, ReportFormat::Human);
  CHECK(def.find("dim E_f = 1") != std::string::npos);
  CHECK(def.find("equator: preimages 1") != std::string::npos);
}

TEST_CASE("svg output requires dim 2") {
  OrevkovRunConfig cfg;
  cfg.dim = 3;
  cfg.stage = 2;
  cfg.samples = 50;
  CHECK_THROWS_AS(render_orevkov_svg(cfg), ParseError);
}
