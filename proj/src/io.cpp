#include "cwtop/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace cwtop {

using json = nlohmann::ordered_json;

namespace {

json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Int json_to_int(const json& j, const char* field) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw ParseError(std::string("field '") + field + "': not a decimal integer");
    }
  }
  throw ParseError(std::string("field '") + field + "': expected an integer");
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("document is not valid JSON");
  return doc;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

// Deterministic decimal rendering for doubles in structured output.
std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string verdict_to_string(DensityVerdict v) {
  return v == DensityVerdict::MultiplePointsDense ? "multiple-points-dense"
                                                  : "inconclusive";
}

}  // namespace

std::string group_to_string(const AbelianGroupPresentation& g) {
  if (g.trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.freeRank > 0) {
    if (g.freeRank == 1)
      os << "Z";
    else
      os << "Z^" << g.freeRank;
    first = false;
  }
  for (const Int& t : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  return os.str();
}

std::string element_to_string(const QuotientElement& e) {
  if (e.modulus == 0) return e.value.get_str();
  return e.value.get_str() + " (mod " + e.modulus.get_str() + ")";
}

ComplexPresentation parse_complex(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("complex document must be an object");

  const json& jn = field(doc, "n");
  if (!jn.is_number_integer()) throw ParseError("field 'n': expected an integer");
  int n = jn.get<int>();

  const json& js = field(doc, "spheres");
  if (!js.is_number_integer() || js.get<std::int64_t>() < 0)
    throw ParseError("field 'spheres': expected a nonnegative integer");
  auto spheres = static_cast<std::size_t>(js.get<std::int64_t>());

  const json& jc = field(doc, "cells");
  if (!jc.is_array() || jc.empty())
    throw ParseError("field 'cells': expected a nonempty list of integer lists");
  auto cells = jc.size();

  IntegerMatrix attach(cells, spheres);
  for (std::size_t i = 0; i < cells; ++i) {
    const json& row = jc[i];
    if (!row.is_array() || row.size() != spheres)
      throw ParseError("field 'cells': each row needs one entry per sphere");
    for (std::size_t j = 0; j < spheres; ++j)
      attach(i, j) = json_to_int(row[j], "cells");
  }
  return ComplexPresentation(n, spheres, cells, std::move(attach));
}

std::string serialize_complex(const ComplexPresentation& k) {
  json doc;
  doc["n"] = k.n;
  doc["spheres"] = k.sphereCount;
  json rows = json::array();
  for (std::size_t i = 0; i < k.cellCount; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < k.sphereCount; ++j)
      row.push_back(int_to_json(k.attach(i, j)));
    rows.push_back(std::move(row));
  }
  doc["cells"] = std::move(rows);
  return doc.dump(2) + "\n";
}

namespace {

std::size_t parse_target_cell(const json& j, TargetModel model) {
  if (!j.is_string()) throw ParseError("field 'targetCell': expected a string");
  std::string s = j.get<std::string>();
  if (model == TargetModel::OneCell) {
    if (s == "cell") return 0;
    throw ParseError("field 'targetCell': one-cell target expects \"cell\"");
  }
  if (s == "north") return kNorth;
  if (s == "south") return kSouth;
  throw ParseError("field 'targetCell': expected \"north\" or \"south\"");
}

std::string target_cell_name(TargetModel model, std::size_t cell) {
  if (model == TargetModel::OneCell) return "cell";
  return cell == kNorth ? "north" : "south";
}

}  // namespace

CellularSphereMap parse_map(const std::string& text,
                            const ComplexPresentation& source) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("map document must be an object");

  const json& jt = field(doc, "target");
  if (!jt.is_string()) throw ParseError("field 'target': expected a string");
  std::string targetName = jt.get<std::string>();
  SphereTarget target;
  target.n = source.n;
  if (targetName == "one-cell")
    target.model = TargetModel::OneCell;
  else if (targetName == "two-hemispheres")
    target.model = TargetModel::TwoHemispheres;
  else
    throw ParseError("field 'target': expected \"one-cell\" or \"two-hemispheres\"");

  const json& jd = field(doc, "cellDegrees");
  if (!jd.is_array() || jd.size() != source.cellCount)
    throw ParseError("field 'cellDegrees': one entry per source cell required");
  std::vector<CellAssignment> cellDegrees(source.cellCount);
  std::vector<bool> seen(source.cellCount, false);
  for (const json& entry : jd) {
    if (!entry.is_object())
      throw ParseError("field 'cellDegrees': entries must be objects");
    const json& jc = field(entry, "cell");
    if (!jc.is_number_integer() || jc.get<std::int64_t>() < 0 ||
        jc.get<std::uint64_t>() >= source.cellCount)
      throw ParseError("field 'cell': index out of range");
    auto cell = static_cast<std::size_t>(jc.get<std::int64_t>());
    if (seen[cell]) throw ParseError("field 'cellDegrees': duplicate cell index");
    seen[cell] = true;
    cellDegrees[cell].targetCell =
        parse_target_cell(field(entry, "targetCell"), target.model);
    cellDegrees[cell].degree = json_to_int(field(entry, "degree"), "degree");
  }

  const json& jw = field(doc, "skeletonDegrees");
  if (!jw.is_array() || jw.size() != source.sphereCount)
    throw ParseError("field 'skeletonDegrees': one entry per sphere required");
  std::vector<Int> skeleton(source.sphereCount);
  for (std::size_t j = 0; j < source.sphereCount; ++j)
    skeleton[j] = json_to_int(jw[j], "skeletonDegrees");

  return CellularSphereMap(source, target, std::move(cellDegrees),
                           std::move(skeleton));
}

std::string serialize_map(const CellularSphereMap& f) {
  json doc;
  doc["target"] = f.target().model == TargetModel::OneCell ? "one-cell"
                                                           : "two-hemispheres";
  json degrees = json::array();
  for (std::size_t i = 0; i < f.cellDegrees().size(); ++i) {
    json entry;
    entry["cell"] = i;
    entry["targetCell"] = target_cell_name(f.target().model,
                                           f.cellDegrees()[i].targetCell);
    entry["degree"] = int_to_json(f.cellDegrees()[i].degree);
    degrees.push_back(std::move(entry));
  }
  doc["cellDegrees"] = std::move(degrees);
  json skeleton = json::array();
  for (const Int& w : f.skeletonDegrees()) skeleton.push_back(int_to_json(w));
  doc["skeletonDegrees"] = std::move(skeleton);
  return doc.dump(2) + "\n";
}

std::string render_cohomology_report(const ComplexPresentation& k,
                                     ReportFormat fmt) {
  AbelianGroupPresentation top = top_cohomology(k);
  Codim1Cohomology low = codim1_cohomology(k);

  if (fmt == ReportFormat::Human) {
    std::ostringstream os;
    os << "H^" << k.n << " = " << group_to_string(top) << "\n";
    os << "H^" << (k.n - 1) << " = " << group_to_string(low.group);
    if (low.fundamentalGroupCaveat)
      os << "  (n = 2: kernel rank only, fundamental-group effects ignored)";
    os << "\n";
    return os.str();
  }

  json doc;
  doc["report"] = "cohomology";
  doc["n"] = k.n;
  json jt;
  jt["freeRank"] = top.freeRank;
  json torsion = json::array();
  for (const Int& t : top.torsion) torsion.push_back(int_to_json(t));
  jt["torsion"] = std::move(torsion);
  doc["top"] = std::move(jt);
  json jl;
  jl["freeRank"] = low.group.freeRank;
  jl["torsion"] = json::array();
  jl["fundamentalGroupCaveat"] = low.fundamentalGroupCaveat;
  doc["codim1"] = std::move(jl);
  return doc.dump(2) + "\n";
}

std::string render_tightness_report(const ComplexPresentation& k,
                                    ReportFormat fmt) {
  TightnessReport report = is_tight(k);

  if (fmt == ReportFormat::Human) {
    std::ostringstream os;
    for (std::size_t i = 0; i < report.perCell.size(); ++i) {
      const auto& v = report.perCell[i];
      os << "cell " << i << ": removal "
         << (v.injective ? "injective" : "not injective");
      if (v.witness) {
        os << ", witness (";
        for (std::size_t j = 0; j < v.witness->coefficients.size(); ++j)
          os << (j ? ", " : "") << v.witness->coefficients[j].get_str();
        os << ")";
      }
      os << "\n";
    }
    os << "n-tight: " << (report.tight ? "true" : "false") << "\n";
    return os.str();
  }

  json doc;
  doc["report"] = "tightness";
  json cells = json::array();
  for (std::size_t i = 0; i < report.perCell.size(); ++i) {
    const auto& v = report.perCell[i];
    json entry;
    entry["cell"] = i;
    entry["injective"] = v.injective;
    if (v.witness) {
      json w = json::array();
      for (const Int& c : v.witness->coefficients) w.push_back(int_to_json(c));
      entry["witness"] = std::move(w);
    }
    cells.push_back(std::move(entry));
  }
  doc["perCell"] = std::move(cells);
  doc["tight"] = report.tight;
  return doc.dump(2) + "\n";
}

std::string render_degree_report(const CellularSphereMap& f, ReportFormat fmt) {
  DegreeReport r = degree_report(f);
  VerdictWithReason verdict = multiple_point_verdict(f);
  DensityVerdict nullVerdict = density_verdict(f.source(), r.degClass);

  if (fmt == ReportFormat::Human) {
    std::ostringstream os;
    os << "deg class = " << element_to_string(r.degClass) << "\n";
    os << "|deg| = " << r.degAbs.get_str() << "\n";
    os << "k per cell = {";
    for (std::size_t i = 0; i < r.kPerCell.size(); ++i)
      os << (i ? ", " : "") << r.kPerCell[i].get_str();
    os << "}\n";
    os << "k_f = " << r.kf.get_str()
       << "  (maximum over cell interiors; skeleton points not examined)\n";
    os << "A(f) = " << r.absoluteDegree.get_str() << "\n";
    os << "multiple-point verdict: " << verdict_to_string(verdict.verdict) << " ("
       << verdict.reason << ")\n";
    os << "null-map density verdict: " << verdict_to_string(nullVerdict) << "\n";
    return os.str();
  }

  json doc;
  doc["report"] = "degree";
  doc["degClass"] = int_to_json(r.degClass.value);
  doc["degClassModulus"] = int_to_json(r.degClass.modulus);
  doc["degAbs"] = int_to_json(r.degAbs);
  json kpc = json::array();
  for (const Int& v : r.kPerCell) kpc.push_back(int_to_json(v));
  doc["kPerCell"] = std::move(kpc);
  doc["kf"] = int_to_json(r.kf);
  doc["absoluteDegree"] = int_to_json(r.absoluteDegree);
  doc["kfScope"] = "cell-interiors-only";
  doc["multiplePointVerdict"] = verdict_to_string(verdict.verdict);
  doc["multiplePointReason"] = verdict.reason;
  doc["nullMapDensityVerdict"] = verdict_to_string(nullVerdict);
  return doc.dump(2) + "\n";
}

namespace {

std::string region_name(const RegionReport& r, TargetModel model) {
  switch (r.region.kind) {
    case RegionKind::GenericInterior:
      if (model == TargetModel::OneCell) return "interior";
      return r.region.targetCell == kNorth ? "interior(north)" : "interior(south)";
    case RegionKind::Pole:
      return r.region.targetCell == kNorth ? "pole(north)" : "pole(south)";
    case RegionKind::Equator:
      return "equator";
  }
  return "?";
}

std::string membership_name(EfMembership m) {
  switch (m) {
    case EfMembership::Yes:
      return "yes";
    case EfMembership::No:
      return "no";
    case EfMembership::YesByBound:
      return "yes-by-bound";
  }
  return "?";
}

}  // namespace

std::string render_deficient_report(const CellularSphereMap& f, ReportFormat fmt) {
  DeficientSetDescription d = deficient_set(f);

  if (fmt == ReportFormat::Human) {
    std::ostringstream os;
    for (const RegionReport& r : d.allRegions) {
      os << region_name(r, f.target().model) << ": preimages " << r.preimageCount.get_str()
         << ", essential ";
      if (r.essentialCountExact)
        os << r.essentialCountExact->get_str();
      else
        os << "<= " << r.essentialCountUpper.get_str();
      os << ", in E_f: " << membership_name(r.inEf) << "\n";
    }
    os << "dim E_f = " << d.dimension;
    if (d.dimension < 0) os << " (empty)";
    os << "\n";
    return os.str();
  }

  json doc;
  doc["report"] = "deficient";
  json regions = json::array();
  for (const RegionReport& r : d.allRegions) {
    json entry;
    entry["region"] = region_name(r, f.target().model);
    entry["preimageCount"] = int_to_json(r.preimageCount);
    if (r.essentialCountExact)
      entry["essentialCountExact"] = int_to_json(*r.essentialCountExact);
    entry["essentialCountUpper"] = int_to_json(r.essentialCountUpper);
    json classes = json::array();
    for (const QuotientElement& c : r.localClasses)
      classes.push_back(int_to_json(c.value));
    entry["localClasses"] = std::move(classes);
    entry["inEf"] = membership_name(r.inEf);
    regions.push_back(std::move(entry));
  }
  doc["regions"] = std::move(regions);
  doc["dimension"] = d.dimension;
  doc["degreeSumCheck"] = degree_sum_check(f);
  return doc.dump(2) + "\n";
}

std::string render_orevkov_report(const OrevkovRunConfig& cfg, ReportFormat fmt) {
  TreeSpec tree = build_tree(cfg.scale, cfg.angle, cfg.stage);
  StagedMap g = stage_map(cfg.dim, tree, cfg.stage);
  SinglePointStats st = single_point_stats(g, cfg.samples, cfg.epsilon, cfg.seed);

  if (fmt == ReportFormat::Human) {
    std::ostringstream os;
    os << "stage " << st.stage << ", " << st.sampleCount << " samples, seed "
       << cfg.seed << "\n";
    os << "tree: scale " << format_double(cfg.scale) << ", angle "
       << format_double(cfg.angle) << ", " << tree.edges.size() << " segments\n";
    os << "injective fraction: " << format_double(st.injectiveFraction) << "\n";
    os << "eps-collision fraction (eps = " << format_double(st.epsilon)
       << "): " << format_double(st.epsCollisionFraction) << "\n";
    return os.str();
  }

  json doc;
  doc["report"] = "orevkov";
  doc["dim"] = cfg.dim;
  doc["stage"] = st.stage;
  doc["samples"] = st.sampleCount;
  doc["seed"] = cfg.seed;
  doc["scale"] = format_double(cfg.scale);
  doc["angle"] = format_double(cfg.angle);
  doc["segments"] = tree.edges.size();
  doc["injectiveFraction"] = format_double(st.injectiveFraction);
  doc["epsilon"] = format_double(st.epsilon);
  doc["epsCollisionFraction"] = format_double(st.epsCollisionFraction);
  return doc.dump(2) + "\n";
}

std::string render_orevkov_point_cloud(const OrevkovRunConfig& cfg) {
  TreeSpec tree = build_tree(cfg.scale, cfg.angle, cfg.stage);
  StagedMap g = stage_map(cfg.dim, tree, cfg.stage);
  auto rows = sample_rows(g, cfg.samples, cfg.seed);

  std::ostringstream os;
  os << "#";
  for (int i = 0; i < cfg.dim; ++i) os << " x" << i;
  os << " image_x image_y injective\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.input.size(); ++i)
      os << (i ? " " : "") << format_double(row.input[i]);
    os << " " << format_double(row.image[0]) << " " << format_double(row.image[1])
       << " " << (row.injectiveRegion ? 1 : 0) << "\n";
  }
  return os.str();
}

std::string render_orevkov_svg(const OrevkovRunConfig& cfg) {
  if (cfg.dim != 2)
    throw ParseError("SVG rendering is only available for dim = 2");
  TreeSpec tree = build_tree(cfg.scale, cfg.angle, cfg.stage);
  StagedMap g = stage_map(2, tree, cfg.stage);
  auto rows = sample_rows(g, cfg.samples, cfg.seed);

  // World box [-2.2, 2.2]^2 mapped to a 660x660 viewport, y up.
  auto sx = [](double x) { return format_double((x + 2.2) * 150.0); };
  auto sy = [](double y) { return format_double((2.2 - y) * 150.0); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"660\" height=\"660\" "
        "viewBox=\"0 0 660 660\">\n";
  os << "<rect width=\"660\" height=\"660\" fill=\"white\"/>\n";
  for (const auto& row : rows)
    os << "<circle cx=\"" << sx(row.image[0]) << "\" cy=\"" << sy(row.image[1])
       << "\" r=\"1.5\" fill=\""
       << (row.injectiveRegion ? "#2a7fff" : "#d04030") << "\" opacity=\"0.35\"/>\n";
  for (const TreeEdge& e : tree.edges)
    os << "<line x1=\"" << sx(e.base[0]) << "\" y1=\"" << sy(e.base[1])
       << "\" x2=\"" << sx(e.tip[0]) << "\" y2=\"" << sy(e.tip[1])
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace cwtop
