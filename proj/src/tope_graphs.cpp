#include "om/tope_graphs.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace om {

namespace {

using Rows = std::vector<boost::dynamic_bitset<>>;

Rows empty_rows(std::size_t count) { return Rows(count, boost::dynamic_bitset<>(count)); }

void connect(Rows& rows, std::size_t i, std::size_t j) {
  rows[i].set(j);
  rows[j].set(i);
}

std::int64_t parity_sign(std::size_t size) { return size % 2 == 0 ? 1 : -1; }

}  // namespace

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kGamma:
      return "gamma";
    case GraphKind::kG:
      return "g";
    case GraphKind::kKneserPos:
      return "kneser-pos";
    case GraphKind::kKneserNeg:
      return "kneser-neg";
    case GraphKind::kGammaMax:
      return "gamma-max";
  }
  return "unknown";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  for (auto kind : {GraphKind::kGamma, GraphKind::kG, GraphKind::kKneserPos, GraphKind::kKneserNeg,
                    GraphKind::kGammaMax}) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

TopeGraph::TopeGraph(GraphKind kind, std::vector<std::size_t> vertices, std::vector<boost::dynamic_bitset<>> adjacency)
    : kind_(kind), vertices_(std::move(vertices)), adjacency_(std::move(adjacency)) {
  const std::size_t v = vertices_.size();
  if (adjacency_.size() != v) throw std::invalid_argument("adjacency size differs from vertex count");
  for (std::size_t i = 0; i < v; ++i) {
    if (adjacency_[i].size() != v) throw std::invalid_argument("adjacency row has the wrong length");
    if (adjacency_[i][i]) throw std::invalid_argument("loop at vertex " + std::to_string(i));
    for (std::size_t j = i + 1; j < v; ++j) {
      if (adjacency_[i][j] != adjacency_[j][i]) throw std::invalid_argument("adjacency is not symmetric");
      if (adjacency_[i][j]) edges_.emplace_back(i, j);
    }
  }
}

std::optional<std::size_t> TopeGraph::position_of(std::size_t tope_index) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), tope_index);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Rows kneser_adjacency(std::span<const GroundSubset> family) {
  Rows rows = empty_rows(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if ((family[i] & family[j]).empty()) connect(rows, i, j);
    }
  }
  return rows;
}

TopeGraph build_graph(const ToposSet& topes, GraphKind kind) {
  const std::size_t t = topes.size();
  std::vector<std::size_t> all(t);
  for (std::size_t i = 0; i < t; ++i) all[i] = i;
  const GroundSubset ground = topes.ground();

  switch (kind) {
    case GraphKind::kGamma: {
      Rows rows = empty_rows(t);
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
          if ((topes[i].positive_part() | topes[j].positive_part()) == ground) connect(rows, i, j);
        }
      }
      return {kind, std::move(all), std::move(rows)};
    }
    case GraphKind::kG: {
      // No positive halfspace contains both topes.
      Rows rows = empty_rows(t);
      for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = i + 1; j < t; ++j) {
          bool shared = false;
          for (std::size_t e = 1; e <= topes.ground_size() && !shared; ++e) {
            shared = topes[i].at(e) == Sign::kPlus && topes[j].at(e) == Sign::kPlus;
          }
          if (!shared) connect(rows, i, j);
        }
      }
      return {kind, std::move(all), std::move(rows)};
    }
    case GraphKind::kKneserPos:
    case GraphKind::kKneserNeg: {
      std::vector<GroundSubset> family;
      family.reserve(t);
      for (const auto& tope : topes.topes()) {
        family.push_back(kind == GraphKind::kKneserPos ? tope.positive_part() : tope.negative_part());
      }
      return {kind, std::move(all), kneser_adjacency(family)};
    }
    case GraphKind::kGammaMax:
      throw std::invalid_argument("gamma-max graph needs the convex-set lattice");
  }
  throw std::invalid_argument("unknown graph kind");
}

TopeGraph build_graph(const ToposSet& topes, GraphKind kind, const ConvexLattice& lattice) {
  if (kind != GraphKind::kGammaMax) return build_graph(topes, kind);
  std::vector<std::size_t> vertices;
  for (auto c : lattice.coatoms()) {
    const auto index = topes.find(c);
    if (!index) throw LatticeInvariantError("coatom " + c.to_string() + " is not the positive part of a tope");
    vertices.push_back(*index);
  }
  std::sort(vertices.begin(), vertices.end());
  const GroundSubset ground = topes.ground();
  Rows rows = empty_rows(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if ((topes[vertices[i]].positive_part() | topes[vertices[j]].positive_part()) == ground) connect(rows, i, j);
    }
  }
  return {kind, std::move(vertices), std::move(rows)};
}

std::uint64_t count_triangles(const TopeGraph& graph, TriangleMethod method) {
  const std::size_t v = graph.vertex_count();
  switch (method) {
    case TriangleMethod::kDirect: {
      std::uint64_t count = 0;
      for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = a + 1; b < v; ++b) {
          if (!graph.adjacent(a, b)) continue;
          for (std::size_t c = b + 1; c < v; ++c) {
            if (graph.adjacent(a, c) && graph.adjacent(b, c)) ++count;
          }
        }
      }
      return count;
    }
    case TriangleMethod::kTrace: {
      // Dense integer product A^2, then trace(A^2 A).
      std::vector<std::uint64_t> square(v * v, 0);
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t k = 0; k < v; ++k) {
          if (!graph.adjacent(i, k)) continue;
          for (std::size_t j = 0; j < v; ++j) square[i * v + j] += graph.adjacent(k, j) ? 1 : 0;
        }
      }
      boost::multiprecision::cpp_int trace = 0;
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t k = 0; k < v; ++k) {
          if (graph.adjacent(k, i)) trace += square[i * v + k];
        }
      }
      if (trace % 6 != 0) throw FormulaInconsistency("trace(A^3) is not divisible by 6");
      return (trace / 6).convert_to<std::uint64_t>();
    }
    case TriangleMethod::kNeighborhood: {
      std::uint64_t sum = 0;
      for (const auto& [i, j] : graph.edges()) sum += (graph.neighbors(i) & graph.neighbors(j)).count();
      if (sum % 3 != 0) throw FormulaInconsistency("edge neighborhood sum is not divisible by 3");
      return sum / 3;
    }
  }
  throw std::invalid_argument("unknown triangle method");
}

std::vector<Triple> list_triangles(const TopeGraph& graph) {
  std::vector<Triple> out;
  const auto& vs = graph.vertices();
  for (const auto& [a, b] : graph.edges()) {
    const auto common = graph.neighbors(a) & graph.neighbors(b);
    for (auto c = common.find_next(b); c != boost::dynamic_bitset<>::npos; c = common.find_next(c)) {
      Triple t{vs[a], vs[b], vs[c]};
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Connectivity connectivity(const TopeGraph& graph) {
  const std::size_t v = graph.vertex_count();
  std::vector<bool> seen(v, false);
  Connectivity c;
  for (std::size_t start = 0; start < v; ++start) {
    if (seen[start]) continue;
    ++c.components;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      const auto& row = graph.neighbors(u);
      for (auto w = row.find_first(); w != boost::dynamic_bitset<>::npos; w = row.find_next(w)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
  }
  c.is_connected = c.components == 1;
  c.cyclomatic = static_cast<std::int64_t>(graph.edge_count()) - static_cast<std::int64_t>(v) +
                 static_cast<std::int64_t>(c.components);
  return c;
}

std::vector<GroundSubset> coatom_complements(const ConvexLattice& lattice) {
  std::vector<GroundSubset> out;
  for (auto c : lattice.coatoms()) {
    const GroundSubset d = lattice.top() - c;
    if (!lattice.contains(d)) {
      throw FormulaInconsistency("complement " + d.to_string() + " of coatom " + c.to_string() + " is not convex");
    }
    out.push_back(d);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

FormulaCounts formula_counts(const ToposSet& topes, const ConvexLattice& lattice) {
  if (lattice.ground_size() != topes.ground_size()) {
    throw std::invalid_argument("lattice built for a different ground set");
  }
  FormulaCounts f;
  const auto tope_count = static_cast<std::int64_t>(topes.size());

  f.edges_eq5 = binomial(tope_count, 2);
  f.cyclomatic_gamma = 1 + binomial(tope_count, 2);
  for (auto a : lattice.free_sets()) {
    const auto h = static_cast<std::int64_t>(halfspace(topes, a).size());
    const std::int64_t sign = parity_sign(a.size());
    f.edges_eq5 += sign * binomial(h, 2);
    f.vertices_eq6 += -sign * h;
    f.cyclomatic_gamma += sign * binomial(1 + h, 2);
  }

  f.coatom_complements = coatom_complements(lattice);
  std::int64_t degree_sum = 0;
  for (auto d : f.coatom_complements) degree_sum += static_cast<std::int64_t>(lattice.coatoms_above(d).size());
  if (degree_sum % 2 != 0) throw FormulaInconsistency("interval coatom degree sum is odd");
  f.edges_gamma_max = degree_sum / 2;
  f.cyclomatic_gamma_max = 1 + f.edges_gamma_max - static_cast<std::int64_t>(lattice.coatoms().size());

  const auto& ds = f.coatom_complements;
  std::int64_t pair_sum = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (lattice.meet(ds[i], ds[j]) != lattice.bottom()) continue;
      CoatomPairTerm term{ds[i], ds[j], lattice.join(ds[i], ds[j]), 0};
      term.coatoms_above_join = lattice.coatoms_above(term.join).size();
      pair_sum += static_cast<std::int64_t>(term.coatoms_above_join);
      f.eq7_terms.push_back(term);
    }
  }
  if (pair_sum % 3 != 0) throw FormulaInconsistency("interval coatom pair sum is not divisible by 3");
  f.committees_eq7 = pair_sum / 3;
  return f;
}

bool degree_check_gamma_max(const ToposSet& topes, const ConvexLattice& lattice) {
  const TopeGraph graph = build_graph(topes, GraphKind::kGammaMax, lattice);
  for (std::size_t i = 0; i < graph.vertex_count(); ++i) {
    const GroundSubset negative = topes[graph.vertices()[i]].negative_part();
    if (!lattice.contains(negative)) return false;
    if (graph.degree(i) != lattice.coatoms_above(negative).size()) return false;
  }
  return true;
}

bool odd_cycle_committee_check(const ToposSet& topes, const TopeGraph& graph, std::span<const std::size_t> cycle) {
  if (cycle.size() < 3 || cycle.size() % 2 == 0) {
    throw std::invalid_argument("cycle of length " + std::to_string(cycle.size()) + " is not an odd cycle");
  }
  std::vector<std::size_t> positions;
  for (auto tope : cycle) {
    const auto p = graph.position_of(tope);
    if (!p) throw std::invalid_argument("tope " + std::to_string(tope) + " is not a vertex of the graph");
    if (std::find(positions.begin(), positions.end(), *p) != positions.end()) {
      throw std::invalid_argument("cycle repeats a vertex");
    }
    positions.push_back(*p);
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (!graph.adjacent(positions[i], positions[(i + 1) % positions.size()])) {
      throw std::invalid_argument("consecutive cycle vertices are not adjacent");
    }
  }
  return is_committee_general(topes, cycle);
}

std::vector<std::vector<std::size_t>> sample_odd_cycles(const TopeGraph& graph, std::mt19937_64& rng,
                                                        std::size_t count, std::size_t max_length) {
  std::vector<std::vector<std::size_t>> cycles;
  const std::size_t v = graph.vertex_count();
  if (v < 3 || max_length < 3) return cycles;
  std::uniform_int_distribution<std::size_t> pick_start(0, v - 1);
  std::bernoulli_distribution close_now(0.5);

  for (std::size_t attempt = 0; attempt < count * 200 && cycles.size() < count; ++attempt) {
    const std::size_t start = pick_start(rng);
    std::vector<std::size_t> path{start};
    std::vector<bool> on_path(v, false);
    on_path[start] = true;
    while (path.size() <= max_length) {
      const std::size_t last = path.back();
      if (path.size() >= 3 && path.size() % 2 == 1 && graph.adjacent(last, start) && close_now(rng)) {
        std::vector<std::size_t> cycle;
        for (auto p : path) cycle.push_back(graph.vertices()[p]);
        cycles.push_back(std::move(cycle));
        break;
      }
      if (path.size() == max_length) break;
      std::vector<std::size_t> next;
      const auto& row = graph.neighbors(last);
      for (auto w = row.find_first(); w != boost::dynamic_bitset<>::npos; w = row.find_next(w)) {
        if (!on_path[w]) next.push_back(w);
      }
      if (next.empty()) break;
      const std::size_t w = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
      on_path[w] = true;
      path.push_back(w);
    }
  }
  return cycles;
}

}  // namespace om
