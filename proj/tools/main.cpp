#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "locspec/code_analysis.hpp"
#include "locspec/report.hpp"

namespace {

struct Options {
  std::string graph_path;
  std::vector<std::string> generate;
  std::string set_spec;
  locspec::Config cfg;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_set) {
  auto* src = cmd->add_option_group("graph source");
  src->add_option("--graph", opt.graph_path,
                  "edge-list file, or '-' for stdin");
  src->add_option("--generate", opt.generate,
                  "family and integer parameters, e.g. --generate cycle 4");
  src->require_option(1);
  if (needs_set)
    cmd->add_option("--set", opt.set_spec,
                    "comma-separated vertex indices, or @file")
        ->required();
  cmd->add_option("--tol-eig", opt.cfg.tol_eig, "eigenvalue clustering gap");
  cmd->add_option("--tol-m", opt.cfg.tol_m, "zero-multiplicity threshold");
  cmd->add_option("--tol-poly", opt.cfg.tol_poly, "polynomial tolerance");
  cmd->add_option("--tol-vec", opt.cfg.tol_vec, "vector residual tolerance");
  cmd->add_option("--tol-int", opt.cfg.tol_int, "intersection tolerance");
  cmd->add_option("--tol-ex", opt.cfg.tol_ex, "spectral excess tolerance");
  cmd->add_option("--format", opt.cfg.format, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", opt.cfg.seed, "seed echoed in the report");
}

locspec::Graph load_graph(const Options& opt) {
  if (!opt.generate.empty()) {
    std::vector<int> params;
    for (std::size_t i = 1; i < opt.generate.size(); ++i) {
      try {
        params.push_back(std::stoi(opt.generate[i]));
      } catch (const std::exception&) {
        throw locspec::ParseError("--generate parameter '" + opt.generate[i] +
                                  "' is not an integer");
      }
    }
    return locspec::Graph::generate(opt.generate[0], params);
  }
  std::stringstream buf;
  if (opt.graph_path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(opt.graph_path);
    if (!in)
      throw locspec::ParseError("cannot open graph file " + opt.graph_path);
    buf << in.rdbuf();
  }
  return locspec::Graph::from_edge_list(buf.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "local spectra of vertex sets and completely (pseudo-)regular code "
      "checks"};
  app.require_subcommand(1);

  Options opt;
  auto* cmd_spectrum = app.add_subcommand(
      "spectrum", "distinct eigenvalues, multiplicities and pi parameters");
  add_common(cmd_spectrum, opt, false);
  auto* cmd_local = app.add_subcommand(
      "local", "local spectrum, dual degree and extremality of a set");
  add_common(cmd_local, opt, true);
  auto* cmd_polys = app.add_subcommand(
      "polys", "predistance polynomial system and Hoffman polynomial");
  add_common(cmd_polys, opt, true);
  auto* cmd_check = app.add_subcommand(
      "check", "decide the completely pseudo-regular code property");
  add_common(cmd_check, opt, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  const bool json = opt.cfg.format == "json";
  try {
    locspec::Graph g = load_graph(opt);
    if (cmd_spectrum->parsed()) {
      locspec::Spectrum s = locspec::spectral_decomposition(g, opt.cfg.tol_eig);
      std::cout << (json ? locspec::render_spectrum_json(g, s, opt.cfg)
                         : locspec::render_spectrum_text(g, s, opt.cfg));
      return 0;
    }
    locspec::VertexSet c =
        locspec::VertexSet::parse(opt.set_spec, g.vertex_count());
    locspec::Analysis an = locspec::analyze(g, c, opt.cfg);
    std::string sections = cmd_local->parsed()  ? "local"
                           : cmd_polys->parsed() ? "polys"
                                                 : "check";
    std::cout << (json ? locspec::render_analysis_json(an, opt.cfg, sections)
                       : locspec::render_analysis_text(an, opt.cfg, sections));
    if (cmd_check->parsed()) {
      switch (an.report.overall) {
        case locspec::OverallVerdict::Cprc:
          return 0;
        case locspec::OverallVerdict::NotCprc:
          return 1;
        default:
          return 2;
      }
    }
    return 0;
  } catch (const locspec::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
