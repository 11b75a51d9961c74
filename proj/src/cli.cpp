#include "om/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "om/committees.hpp"
#include "om/ingest.hpp"
#include "om/tope_graphs.hpp"

namespace om::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown after the validation report has been printed.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void print_report(const ValidationReport& report, std::ostream& os) {
  for (const auto& v : report.violations) os << "violation [" << v.rule << "]: " << v.message << "\n";
  for (const auto& w : report.warnings) os << "warning: " << w << "\n";
}

ToposSet load_valid_topes(const std::string& path, bool strict, std::ostream& err) {
  ToposSet topes = parse_topes(read_file(path));
  const ValidationReport report = validate(topes, {strict});
  print_report(report, err);
  if (!report.ok) throw InvalidInput("input failed validation");
  return topes;
}

std::string sets_line(const std::vector<GroundSubset>& sets) {
  std::string line;
  for (auto s : sets) line += (line.empty() ? "" : " ") + s.to_string();
  return line;
}

using Row = std::pair<std::string, std::string>;

std::string table(const std::vector<Row>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  return os.str();
}

std::string field(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

std::vector<Row> counts_rows(const CountsReport& r) {
  return {{"tope_count", std::to_string(r.tope_count)},
          {"vertices_eq6", std::to_string(r.vertices_eq6)},
          {"edge_count_direct", field(r.edge_count_direct)},
          {"edges_eq5", std::to_string(r.edges_eq5)},
          {"triangles_direct", field(r.triangles_direct)},
          {"triangles_trace", field(r.triangles_trace)},
          {"triangles_eq4", field(r.triangles_eq4)},
          {"committees_brute", field(r.committees_brute)},
          {"committees_eq1", std::to_string(r.committees_eq1)},
          {"committees_eq8", std::to_string(r.committees_eq8)},
          {"no_opposite_triples_formula", std::to_string(r.no_opposite_triples_formula)},
          {"no_opposite_triples_brute", field(r.no_opposite_triples_brute)},
          {"gamma_max_edges_direct", field(r.gamma_max_edges_direct)},
          {"gamma_max_edges_formula", std::to_string(r.gamma_max_edges_formula)},
          {"committees_eq7", std::to_string(r.committees_eq7)},
          {"committees_max_direct", field(r.committees_max_direct)},
          {"cyclomatic_gamma_formula", std::to_string(r.cyclomatic_gamma_formula)},
          {"cyclomatic_gamma_direct", field(r.cyclomatic_gamma_direct)},
          {"cyclomatic_gamma_max", std::to_string(r.cyclomatic_gamma_max)},
          {"all_consistent", r.all_consistent ? (*r.all_consistent ? "true" : "false") : "-"}};
}

}  // namespace

CountsReport compute_counts(const ToposSet& topes, const ConvexLattice& lattice, bool cross_check) {
  const FormulaCounts f = formula_counts(topes, lattice);
  CountsReport r;
  r.tope_count = static_cast<std::int64_t>(topes.size());
  r.vertices_eq6 = f.vertices_eq6;
  r.edges_eq5 = f.edges_eq5;
  r.committees_eq1 = static_cast<std::int64_t>(count_committees_eq1(topes));
  r.committees_eq8 = static_cast<std::int64_t>(count_committees3_lattice(topes, lattice));
  r.no_opposite_triples_formula = count_no_opposite_triples(topes, lattice);
  r.gamma_max_edges_formula = f.edges_gamma_max;
  r.committees_eq7 = f.committees_eq7;
  r.cyclomatic_gamma_formula = f.cyclomatic_gamma;
  r.cyclomatic_gamma_max = f.cyclomatic_gamma_max;
  if (!cross_check) return r;

  const TopeGraph gamma = build_graph(topes, GraphKind::kGamma);
  const TopeGraph gamma_max = build_graph(topes, GraphKind::kGammaMax, lattice);
  const Connectivity gamma_conn = connectivity(gamma);
  const Connectivity max_conn = connectivity(gamma_max);
  auto as_int = [](auto v) { return static_cast<std::int64_t>(v); };

  r.edge_count_direct = as_int(gamma.edge_count());
  r.triangles_direct = as_int(count_triangles(gamma, TriangleMethod::kDirect));
  r.triangles_trace = as_int(count_triangles(gamma, TriangleMethod::kTrace));
  r.triangles_eq4 = as_int(count_triangles(gamma, TriangleMethod::kNeighborhood));
  r.committees_brute = as_int(enumerate_committees3(topes, false).size());
  r.no_opposite_triples_brute = as_int(count_no_opposite_triples_brute(topes));
  r.gamma_max_edges_direct = as_int(gamma_max.edge_count());
  r.committees_max_direct = as_int(enumerate_committees3(topes, true).size());
  r.cyclomatic_gamma_direct = gamma_conn.cyclomatic;

  const auto t = *r.triangles_direct;
  r.all_consistent = r.vertices_eq6 == r.tope_count && r.edges_eq5 == *r.edge_count_direct &&
                     *r.triangles_trace == t && *r.triangles_eq4 == t && *r.committees_brute == t &&
                     r.committees_eq1 == t && r.committees_eq8 == t &&
                     r.no_opposite_triples_formula == *r.no_opposite_triples_brute &&
                     r.gamma_max_edges_formula == *r.gamma_max_edges_direct &&
                     r.committees_eq7 == *r.committees_max_direct &&
                     r.committees_eq7 == as_int(count_triangles(gamma_max, TriangleMethod::kDirect)) &&
                     r.cyclomatic_gamma_formula == *r.cyclomatic_gamma_direct &&
                     r.cyclomatic_gamma_max == max_conn.cyclomatic && degree_check_gamma_max(topes, lattice);
  return r;
}

Json counts_json(const CountsReport& r) {
  Json out = Json::object();
  for (const auto& [key, value] : counts_rows(r)) {
    if (value == "-") out[key] = nullptr;
    else if (value == "true" || value == "false") out[key] = value == "true";
    else out[key] = std::stoll(value);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-tope committees of simple oriented matroids", "omc"};
  bool json = false;
  bool strict = false;
  app.add_flag("--json", json, "Machine-readable JSON output");
  app.add_flag("--strict", strict, "Treat acyclic input as a validation failure");
  app.require_subcommand(1);

  std::string file;
  std::string output;

  auto* validate_cmd = app.add_subcommand("validate", "Check symmetry, simplicity and distinctness of a tope set");
  validate_cmd->add_option("file", file, ".topes file")->required();

  bool verify_mobius = false;
  auto* lattice_cmd = app.add_subcommand("lattice", "Print the lattice of convex sets");
  lattice_cmd->add_option("file", file, ".topes file")->required();
  lattice_cmd->add_flag("--verify-mobius", verify_mobius, "Cross-check Moebius values by recursion");

  bool max_positive = false;
  auto* committees_cmd = app.add_subcommand("committees", "List all three-tope committees");
  committees_cmd->add_option("file", file, ".topes file")->required();
  committees_cmd->add_flag("--max-positive", max_positive, "Only committees of topes with maximal positive parts");

  std::string kind_name = "gamma";
  std::string format = "dot";
  auto* graph_cmd = app.add_subcommand("graph", "Export a tope graph");
  graph_cmd->add_option("file", file, ".topes file")->required();
  graph_cmd->add_option("--kind", kind_name, "gamma|g|kneser-pos|kneser-neg|gamma-max")
      ->check(CLI::IsMember({"gamma", "g", "kneser-pos", "kneser-neg", "gamma-max"}));
  auto* format_opt = graph_cmd->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  bool cross_check = false;
  auto* counts_cmd = app.add_subcommand("counts", "Evaluate the counting formulas");
  counts_cmd->add_option("file", file, ".topes file")->required();
  counts_cmd->add_flag("--cross-check", cross_check, "Also count every quantity directly and compare");

  std::string arrangement_file;
  std::string reorient_list;
  auto* ingest_cmd = app.add_subcommand("ingest", "Compute the tope set of a central hyperplane arrangement");
  ingest_cmd->add_option("--arrangement", arrangement_file, ".arr file")->required();
  ingest_cmd->add_option("--reorient", reorient_list, "Comma-separated elements to reorient, e.g. 1,2");
  ingest_cmd->add_option("-o,--output", output, "Output .topes file (default stdout)");

  for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate_cmd->parsed()) {
      const ToposSet topes = parse_topes(read_file(file));
      const ValidationReport report = validate(topes, {strict});
      if (json) {
        out << dump(report_json(report));
      } else {
        out << (report.ok ? "ok" : "invalid") << ": n = " << topes.ground_size() << ", " << topes.size()
            << " topes\n";
        print_report(report, out);
      }
      return report.ok ? kExitOk : kExitInvalid;
    }

    if (ingest_cmd->parsed()) {
      const Arrangement arrangement = parse_arrangement(read_file(arrangement_file));
      const GroundSubset flip = GroundSubset::parse_list(reorient_list);
      if (!flip.fits(arrangement.size())) throw ParseError("reorientation names elements outside the arrangement");
      const ToposSet topes = arrangement_topes(arrangement, flip);
      const ValidationReport report = validate(topes, {strict});
      print_report(report, err);
      if (json) {
        Json list = Json::array();
        for (const auto& t : topes.topes()) list.push_back(t.to_string());
        write_output(output, dump({{"n", topes.ground_size()}, {"topes", list}}), out);
      } else {
        write_output(output, topes.serialize(), out);
      }
      return report.ok ? kExitOk : kExitInvalid;
    }

    const ToposSet topes = load_valid_topes(file, strict, err);

    if (lattice_cmd->parsed()) {
      const ConvexLattice lattice = ConvexLattice::build(topes, {.verify_mobius = verify_mobius});
      if (json) {
        out << dump(lattice_json(lattice));
        return kExitOk;
      }
      std::vector<GroundSubset> proper(lattice.members().begin(), lattice.members().end() - 1);
      out << "members (" << proper.size() << " + top): " << sets_line(proper) << "\n";
      out << "coatoms (" << lattice.coatoms().size() << "): " << sets_line(lattice.coatoms()) << "\n";
      out << "free sets (" << lattice.free_sets().size() << "): " << sets_line(lattice.free_sets()) << "\n";
      out << "mobius:";
      for (auto m : proper) out << " " << m.to_string() << "=" << lattice.mobius(m);
      out << "\n";
      return kExitOk;
    }

    if (committees_cmd->parsed()) {
      const auto committees = enumerate_committees3(topes, max_positive);
      if (json) {
        out << dump(committees_json(topes, committees));
        return kExitOk;
      }
      out << committees.size() << (committees.size() == 1 ? " committee\n" : " committees\n");
      for (const auto& c : committees) {
        out << topes[c.members[0]].to_string() << " " << topes[c.members[1]].to_string() << " "
            << topes[c.members[2]].to_string() << (c.max_positive ? "  max-positive" : "") << "\n";
      }
      return kExitOk;
    }

    if (graph_cmd->parsed()) {
      const GraphKind kind = *parse_graph_kind(kind_name);
      const bool as_json = format == "json" || (json && format_opt->count() == 0);
      const TopeGraph graph = kind == GraphKind::kGammaMax
                                  ? build_graph(topes, kind, ConvexLattice::build(topes))
                                  : build_graph(topes, kind);
      write_output(output, as_json ? dump(graph_json(topes, graph)) : graph_dot(topes, graph), out);
      return kExitOk;
    }

    if (counts_cmd->parsed()) {
      const ConvexLattice lattice = ConvexLattice::build(topes);
      const CountsReport report = compute_counts(topes, lattice, cross_check);
      out << (json ? dump(counts_json(report)) : table(counts_rows(report)));
      return report.all_consistent.value_or(true) ? kExitOk : kExitInvalid;
    }
  } catch (const InvalidInput&) {
    return kExitInvalid;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace om::cli
