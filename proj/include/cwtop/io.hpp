#pragma once

#include <string>

#include "cwtop/deficient.hpp"
#include "cwtop/orevkov.hpp"

namespace cwtop {

// Documents are JSON. Integers are emitted as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise; both forms parse back exactly.

// {"n": 2, "spheres": 1, "cells": [[2], [-3]]}
ComplexPresentation parse_complex(const std::string& text);
std::string serialize_complex(const ComplexPresentation& k);

// {"target": "one-cell" | "two-hemispheres",
//  "cellDegrees": [{"cell": 0, "targetCell": "north", "degree": 2}, ...],
//  "skeletonDegrees": [1, ...]}
// Cell indices are 0-based. For the one-cell target, targetCell is "cell".
CellularSphereMap parse_map(const std::string& text,
                            const ComplexPresentation& source);
std::string serialize_map(const CellularSphereMap& f);

enum class ReportFormat { Human, Structured };

std::string render_cohomology_report(const ComplexPresentation& k, ReportFormat fmt);
std::string render_tightness_report(const ComplexPresentation& k, ReportFormat fmt);
std::string render_degree_report(const CellularSphereMap& f, ReportFormat fmt);
std::string render_deficient_report(const CellularSphereMap& f, ReportFormat fmt);

struct OrevkovRunConfig {
  int dim = 2;
  int stage = 6;
  std::size_t samples = 10000;
  double epsilon = 1e-3;
  std::uint64_t seed = 1;
  double scale = 0.45;
  double angle = 0.78539816339744830961;  // pi/4
};

std::string render_orevkov_report(const OrevkovRunConfig& cfg, ReportFormat fmt);
// One row per sample: input coordinates, image coordinates, injective flag.
std::string render_orevkov_point_cloud(const OrevkovRunConfig& cfg);
// SVG rendering of the tree and sampled image points (dim 2 only).
std::string render_orevkov_svg(const OrevkovRunConfig& cfg);

std::string group_to_string(const AbelianGroupPresentation& g);
std::string element_to_string(const QuotientElement& e);

}  // namespace cwtop
