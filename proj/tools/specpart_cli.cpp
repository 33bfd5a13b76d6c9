// specpart: command-line front end for spectral bisection experiments.
//
// Exit status: 0 success, 1 validation failure, 2 theorem-check failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "specpart/specpart.hpp"

namespace {

using namespace specpart;

constexpr int kExitValidation = 1;
constexpr int kExitTheorem = 2;

std::string fmt12(double x) { return detail::format_real(x); }

void print_set(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (Vertex v : s.members()) {
    out << (first ? "" : " ") << v;
    first = false;
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

int cmd_generate(std::size_t m, const std::string& base, std::size_t cone, const std::string& spec_file,
                 const std::string& out_path) {
  FamilyConfig cfg;
  if (!spec_file.empty()) {
    std::ifstream in(spec_file);
    if (!in) throw InvalidArgument("cannot open family spec '" + spec_file + "'");
    cfg = parse_family_config(in);
  } else {
    cfg.m = m;
    cfg.cone = cone;
    cfg.bases.fill(parse_descriptor(base));
  }
  const FamilyInstance inst = build_family(cfg.resolve());
  std::ostringstream text;
  text << "# adversarial family\n";
  std::istringstream cfg_lines(cfg.to_text());
  for (std::string line; std::getline(cfg_lines, line);) text << "# " << line << '\n';
  write_edge_list(text, inst.graph);
  write_text(out_path, text.str());
  return 0;
}

int cmd_spectrum(const std::string& file) {
  const Graph g = read_edge_list_file(file);
  const Spectrum s = eigendecompose(laplacian(g));
  std::cout << "n " << g.order() << '\n';
  for (double x : s.eigenvalues) std::cout << fmt12(x) << '\n';
  if (g.order() >= 2) std::cout << "algebraic_connectivity " << fmt12(algebraic_connectivity(s)) << '\n';
  return 0;
}

int cmd_bisect(const std::string& file) {
  const Graph g = read_edge_list_file(file);
  const Eigenspace fs = fiedler_space(laplacian(g));
  std::cout << "lambda2 " << fmt12(fs.eigenvalue) << "\nmultiplicity " << fs.multiplicity() << '\n';
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < fs.basis.size(); ++i) {
    const Bisection b = spectral_bisection(g, fs.basis[i]);
    std::cout << "vector " << i << " cut " << b.cut << " S ";
    print_set(std::cout, b.side_s);
    std::cout << '\n';
    best = std::min(best, b.cut);
  }
  std::cout << "cut " << best << '\n';
  return 0;
}

int cmd_oracle(const std::string& file) {
  const Graph g = read_edge_list_file(file);
  const OracleResult r = optimal_bisection(g);
  std::cout << "best_cut " << r.best_cut << "\nenumerated " << r.enumerated << "\nS ";
  print_set(std::cout, r.best_set);
  std::cout << '\n';
  return 0;
}

int cmd_verify(const std::vector<std::size_t>& ms, const std::vector<std::size_t>& ks, const std::string& base,
               const std::string& json_out, const std::string& csv_out) {
  const auto reports = verify_theorem_sweep(ms, base, ks);
  std::size_t judged = 0, failed = 0;
  for (const GapReport& r : reports) {
    if (r.theorem_applies) ++judged;
    if (!r.ok()) ++failed;
  }
  if (!json_out.empty()) write_text(json_out, export_report(reports, ReportFormat::json));
  if (!csv_out.empty()) write_text(csv_out, export_report(reports, ReportFormat::csv));
  if (json_out != "-" && csv_out != "-") {
    for (const GapReport& r : reports) {
      std::cout << "n=" << r.n << " m=" << r.m << " k=" << r.k << " spectral=" << r.spectral_cut
                << " witness=" << r.witness_cut;
      if (r.oracle_cut) std::cout << " oracle=" << *r.oracle_cut;
      std::cout << " error>=" << r.error_lower << " n^2/384=" << fmt12(r.theorem_threshold)
                << (r.theorem_applies ? (r.ok() ? " PASS" : " FAIL") : (r.ok() ? " (n<=48)" : " FAIL")) << '\n';
    }
    std::cout << "summary: " << reports.size() << " instances, " << judged << " judged, " << failed
              << " failed\n";
  }
  return failed == 0 ? 0 : kExitTheorem;
}

int cmd_export_dot(const std::string& file, const std::string& out_path) {
  write_text(out_path, to_dot(read_edge_list_file(file)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bisection toolkit: adversarial family generator, eigensolver, exact oracle"};
  app.require_subcommand(1);

  std::size_t m = 0, cone = 0;
  std::string base = "cycle", out_path = "-", spec_file, file, json_out, csv_out, dot_file;
  std::vector<std::size_t> m_list, k_list{0};

  auto* gen = app.add_subcommand("generate", "write an adversarial family graph as an edge list");
  gen->add_option("--m", m, "block size m (n = 4m + cone)");
  gen->add_option("--base", base, "base graph descriptor, e.g. cycle or \"complete_bipartite 2 3\"");
  gen->add_option("--cone", cone, "number of cone vertices (0..3)");
  gen->add_option("--spec", spec_file, "family spec file (overrides --m/--base/--cone)");
  gen->add_option("--out", out_path, "output file ('-' for stdout)");

  auto* spec = app.add_subcommand("spectrum", "print Laplacian eigenvalues");
  spec->add_option("file", file, "edge list")->required();

  auto* bis = app.add_subcommand("bisect", "spectral bisection and its cut");
  bis->add_option("file", file, "edge list")->required();

  auto* orc = app.add_subcommand("oracle", "exhaustive optimal bisection (n <= 28)");
  orc->add_option("file", file, "edge list")->required();

  auto* ver = app.add_subcommand("verify", "sweep family instances and check the cut-gap bounds");
  ver->add_option("--m-list", m_list, "block sizes")->delimiter(',')->required();
  ver->add_option("--k-list", k_list, "cone counts")->delimiter(',');
  ver->add_option("--base", base, "base graph descriptor");
  ver->add_option("--json", json_out, "write JSON report ('-' for stdout)");
  ver->add_option("--csv", csv_out, "write CSV report ('-' for stdout)");

  auto* exp = app.add_subcommand("export", "export a graph for visualization");
  exp->add_option("--dot", dot_file, "edge list to convert to DOT")->required();
  exp->add_option("--out", out_path, "output file ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*gen) return cmd_generate(m, base, cone, spec_file, out_path);
    if (*spec) return cmd_spectrum(file);
    if (*bis) return cmd_bisect(file);
    if (*orc) return cmd_oracle(file);
    if (*ver) return cmd_verify(m_list, k_list, base, json_out, csv_out);
    if (*exp) return cmd_export_dot(dot_file, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}
