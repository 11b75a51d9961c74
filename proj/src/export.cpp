#include "om/export.hpp"

#include <sstream>

namespace om {

Json subset_json(GroundSubset subset) {
  Json out = Json::array();
  for (auto e : subset.elements()) out.push_back(e);
  return out;
}

Json report_json(const ValidationReport& report) {
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"rule", v.rule}, {"message", v.message}, {"indices", v.indices}});
  }
  return {{"ok", report.ok}, {"violations", violations}, {"warnings", report.warnings}};
}

Json lattice_json(const ConvexLattice& lattice) {
  Json members = Json::array();
  Json mobius = Json::array();
  for (auto m : lattice.members()) {
    members.push_back(subset_json(m));
    if (m != lattice.top()) mobius.push_back({{"set", subset_json(m)}, {"value", lattice.mobius(m)}});
  }
  Json coatoms = Json::array();
  for (auto c : lattice.coatoms()) coatoms.push_back(subset_json(c));
  Json free_sets = Json::array();
  for (auto f : lattice.free_sets()) free_sets.push_back(subset_json(f));

  Json out = {{"n", lattice.ground_size()},
              {"member_count", lattice.members().size()},
              {"members", members},
              {"coatoms", coatoms},
              {"free_sets", free_sets},
              {"mobius", mobius}};
  if (const auto& rec = lattice.recursive_mobius()) {
    Json recursive = Json::array();
    for (std::size_t i = 0; i < lattice.members().size(); ++i) {
      recursive.push_back({{"set", subset_json(lattice.members()[i])}, {"value", (*rec)[i]}});
    }
    out["mobius_recursive"] = recursive;
  }
  return out;
}

Json committees_json(const ToposSet& topes, const std::vector<Committee>& committees) {
  Json list = Json::array();
  for (const auto& c : committees) {
    Json signs = Json::array();
    for (auto i : c.members) signs.push_back(topes[i].to_string());
    list.push_back({{"topes", signs}, {"indices", c.members}, {"max_positive", c.max_positive}});
  }
  return {{"count", committees.size()}, {"committees", list}};
}

Json graph_json(const ToposSet& topes, const TopeGraph& graph) {
  Json vertices = Json::array();
  for (auto v : graph.vertices()) vertices.push_back({{"tope", v}, {"label", topes[v].to_string()}});
  Json edges = Json::array();
  for (const auto& [i, j] : graph.edges()) edges.push_back({graph.vertices()[i], graph.vertices()[j]});
  return {{"kind", std::string(to_string(graph.kind()))},
          {"vertex_count", graph.vertex_count()},
          {"edge_count", graph.edge_count()},
          {"vertices", vertices},
          {"edges", edges}};
}

Json formula_counts_json(const FormulaCounts& counts) {
  Json terms = Json::array();
  for (const auto& t : counts.eq7_terms) {
    terms.push_back({{"d1", subset_json(t.first)},
                     {"d2", subset_json(t.second)},
                     {"join", subset_json(t.join)},
                     {"coatoms_above_join", t.coatoms_above_join}});
  }
  Json complements = Json::array();
  for (auto d : counts.coatom_complements) complements.push_back(subset_json(d));
  return {{"edges_eq5", counts.edges_eq5},
          {"vertices_eq6", counts.vertices_eq6},
          {"cyclomatic_gamma", counts.cyclomatic_gamma},
          {"edges_gamma_max", counts.edges_gamma_max},
          {"cyclomatic_gamma_max", counts.cyclomatic_gamma_max},
          {"committees_eq7", counts.committees_eq7},
          {"coatom_complements", complements},
          {"eq7_terms", terms}};
}

std::string graph_dot(const ToposSet& topes, const TopeGraph& graph) {
  std::ostringstream out;
  out << "// kind: " << to_string(graph.kind()) << "\n";
  out << "graph \"" << to_string(graph.kind()) << "\" {\n";
  for (auto v : graph.vertices()) out << "  t" << v << " [label=\"" << topes[v].to_string() << "\"];\n";
  for (const auto& [i, j] : graph.edges()) out << "  t" << graph.vertices()[i] << " -- t" << graph.vertices()[j] << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace om
