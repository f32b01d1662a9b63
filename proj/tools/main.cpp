#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cwtop/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cwtop::ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Reports are written whole, only after the computation succeeded, so a
// failing run leaves no partial output behind.
void write_output(const std::string& outPath, const std::string& text) {
  if (outPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outPath, std::ios::binary | std::ios::trunc);
  if (!out) throw cwtop::ParseError("cannot open output file: " + outPath);
  out << text;
}

cwtop::ReportFormat parse_format(const std::string& name) {
  if (name == "human") return cwtop::ReportFormat::Human;
  if (name == "structured") return cwtop::ReportFormat::Structured;
  throw cwtop::ParseError("format must be 'human' or 'structured'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomological invariants of two-stage CW complexes: tightness, "
               "degrees of maps to spheres, deficient-point regions, and a "
               "fractal-tree sampler for maps with many single points."};
  app.set_version_flag("--version", "cwtop 1.0.0");
  app.require_subcommand(1);

  std::string complexPath, mapPath, outPath, svgPath, format = "human";

  auto addCommon = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: human | structured")
        ->capture_default_str();
    sub->add_option("--out", outPath, "Write the report to a file");
  };

  CLI::App* cohomology =
      app.add_subcommand("cohomology", "Cellular cohomology of a complex");
  cohomology->add_option("complex", complexPath, "Complex description file")
      ->required();
  addCommon(cohomology);

  CLI::App* tight = app.add_subcommand("tight", "Decide n-tightness");
  tight->add_option("complex", complexPath, "Complex description file")->required();
  addCommon(tight);

  CLI::App* degree =
      app.add_subcommand("degree", "Degree invariants of a cellular map");
  degree->add_option("complex", complexPath, "Complex description file")->required();
  degree->add_option("map", mapPath, "Map description file")->required();
  addCommon(degree);

  CLI::App* deficient =
      app.add_subcommand("deficient", "Essentially deficient regions of a map");
  deficient->add_option("complex", complexPath, "Complex description file")
      ->required();
  deficient->add_option("map", mapPath, "Map description file")->required();
  addCommon(deficient);

  cwtop::OrevkovRunConfig cfg;
  CLI::App* orevkov = app.add_subcommand(
      "orevkov", "Sample a staged fractal-tree map with dense single points");
  orevkov->add_option("--dim", cfg.dim, "Disc dimension n >= 2")
      ->capture_default_str();
  orevkov->add_option("--depth", cfg.stage, "Refinement stage m")
      ->capture_default_str();
  orevkov->add_option("--samples", cfg.samples, "Sample count")
      ->capture_default_str();
  orevkov->add_option("--epsilon", cfg.epsilon, "Collision radius")
      ->capture_default_str();
  orevkov->add_option("--seed", cfg.seed, "Sampler seed")->capture_default_str();
  orevkov->add_option("--scale", cfg.scale, "Tree branch scale in (0, 1/2]")
      ->capture_default_str();
  orevkov->add_option("--angle", cfg.angle, "Tree branch angle (radians)")
      ->capture_default_str();
  orevkov->add_option("--svg", svgPath, "Write an SVG rendering (dim 2 only)");
  std::string cloudPath;
  orevkov->add_option("--cloud", cloudPath,
                      "Write the per-sample point-cloud table to a file");
  addCommon(orevkov);

  CLI11_PARSE(app, argc, argv);

  try {
    cwtop::ReportFormat fmt = parse_format(format);
    std::string report;

    if (cohomology->parsed()) {
      auto k = cwtop::parse_complex(read_file(complexPath));
      report = cwtop::render_cohomology_report(k, fmt);
    } else if (tight->parsed()) {
      auto k = cwtop::parse_complex(read_file(complexPath));
      report = cwtop::render_tightness_report(k, fmt);
    } else if (degree->parsed()) {
      auto k = cwtop::parse_complex(read_file(complexPath));
      auto f = cwtop::parse_map(read_file(mapPath), k);
      report = cwtop::render_degree_report(f, fmt);
    } else if (deficient->parsed()) {
      auto k = cwtop::parse_complex(read_file(complexPath));
      auto f = cwtop::parse_map(read_file(mapPath), k);
      report = cwtop::render_deficient_report(f, fmt);
    } else if (orevkov->parsed()) {
      report = cwtop::render_orevkov_report(cfg, fmt);
      if (!cloudPath.empty())
        write_output(cloudPath, cwtop::render_orevkov_point_cloud(cfg));
      if (!svgPath.empty()) write_output(svgPath, cwtop::render_orevkov_svg(cfg));
    }

    write_output(outPath, report);
    return kExitOk;
  } catch (const cwtop::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cwtop::DimensionMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const cwtop::Error& e) {
    std::cerr << "precondition violation: " << e.what() << "\n";
    return kExitPrecondition;
  }
}
