#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "om/committees.hpp"
#include "om/convexity.hpp"
#include "om/sign_core.hpp"

namespace om {

enum class GraphKind { kGamma, kG, kKneserPos, kKneserNeg, kGammaMax };

/// "gamma", "g", "kneser-pos", "kneser-neg", "gamma-max"
std::string_view to_string(GraphKind kind);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

/// Raised when a counting identity leaves a remainder or a formula input is
/// not of the expected shape.
class FormulaInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph whose vertices are topes.
///
/// Vertex i of the graph is tope vertices()[i]; edges are stored as position
/// pairs (i < j) in lexicographic order.
class TopeGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  TopeGraph(GraphKind kind, std::vector<std::size_t> vertices, std::vector<boost::dynamic_bitset<>> adjacency);

  GraphKind kind() const { return kind_; }
  const std::vector<std::size_t>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i][j]; }
  const boost::dynamic_bitset<>& neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].count(); }

  /// Position of a tope in this graph, if it is a vertex.
  std::optional<std::size_t> position_of(std::size_t tope_index) const;

 private:
  GraphKind kind_;
  std::vector<std::size_t> vertices_;
  std::vector<boost::dynamic_bitset<>> adjacency_;
  std::vector<Edge> edges_;
};

/// Adjacency of the Kneser graph of a set family: members adjacent iff disjoint.
std::vector<boost::dynamic_bitset<>> kneser_adjacency(std::span<const GroundSubset> family);

/// Builds gamma, g, kneser-pos or kneser-neg. gamma-max needs the lattice overload.
TopeGraph build_graph(const ToposSet& topes, GraphKind kind);
TopeGraph build_graph(const ToposSet& topes, GraphKind kind, const ConvexLattice& lattice);

enum class TriangleMethod { kDirect, kTrace, kNeighborhood };

std::uint64_t count_triangles(const TopeGraph& graph, TriangleMethod method);

/// Vertex sets of all triangles, as increasing tope-index triples in lexicographic order.
std::vector<Triple> list_triangles(const TopeGraph& graph);

struct Connectivity {
  std::size_t components = 0;
  bool is_connected = false;
  /// |E| - |V| + components
  std::int64_t cyclomatic = 0;
};

Connectivity connectivity(const TopeGraph& graph);

/// One summand of the interval-coatom sum for committees of maximal topes.
struct CoatomPairTerm {
  GroundSubset first;
  GroundSubset second;
  GroundSubset join;
  std::size_t coatoms_above_join = 0;
};

struct FormulaCounts {
  std::int64_t edges_eq5 = 0;
  std::int64_t vertices_eq6 = 0;
  std::int64_t cyclomatic_gamma = 0;
  std::int64_t edges_gamma_max = 0;
  std::int64_t cyclomatic_gamma_max = 0;
  std::int64_t committees_eq7 = 0;
  /// Complements of coatoms, lexicographically ordered.
  std::vector<GroundSubset> coatom_complements;
  /// Disjoint pairs of coatom complements in lexicographic pair order.
  std::vector<CoatomPairTerm> eq7_terms;
};

/// Complements E - C of the coatoms C, each checked to be a lattice member.
std::vector<GroundSubset> coatom_complements(const ConvexLattice& lattice);

/// Evaluates the closed-form vertex, edge, cyclomatic and triangle counts from
/// the lattice alone. Throws FormulaInconsistency on a non-integral result.
FormulaCounts formula_counts(const ToposSet& topes, const ConvexLattice& lattice);

/// Every vertex T of the maximal-tope graph has degree equal to the number of
/// coatoms above T^-.
bool degree_check_gamma_max(const ToposSet& topes, const ConvexLattice& lattice);

/// Whether the vertex set of `cycle` (tope indices, closing edge implied)
/// satisfies the general committee condition. Throws std::invalid_argument if
/// `cycle` is not an odd cycle of `graph`.
bool odd_cycle_committee_check(const ToposSet& topes, const TopeGraph& graph, std::span<const std::size_t> cycle);

/// Random odd cycles (as tope-index lists) found by self-avoiding walks.
/// Returns fewer than `count` cycles if the attempt budget runs out.
std::vector<std::vector<std::size_t>> sample_odd_cycles(const TopeGraph& graph, std::mt19937_64& rng,
                                                        std::size_t count, std::size_t max_length);

}  // namespace om
