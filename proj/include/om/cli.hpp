#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "om/convexity.hpp"
#include "om/export.hpp"
#include "om/sign_core.hpp"

namespace om::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitUsage = 2;

/// Every count the tool knows how to produce. Direct and brute-force fields
/// are filled only in cross-check mode.
struct CountsReport {
  std::int64_t tope_count = 0;
  std::int64_t vertices_eq6 = 0;
  std::optional<std::int64_t> edge_count_direct;
  std::int64_t edges_eq5 = 0;
  std::optional<std::int64_t> triangles_direct;
  std::optional<std::int64_t> triangles_trace;
  std::optional<std::int64_t> triangles_eq4;
  std::optional<std::int64_t> committees_brute;
  std::int64_t committees_eq1 = 0;
  std::int64_t committees_eq8 = 0;
  std::int64_t no_opposite_triples_formula = 0;
  std::optional<std::int64_t> no_opposite_triples_brute;
  std::optional<std::int64_t> gamma_max_edges_direct;
  std::int64_t gamma_max_edges_formula = 0;
  std::int64_t committees_eq7 = 0;
  std::optional<std::int64_t> committees_max_direct;
  std::int64_t cyclomatic_gamma_formula = 0;
  std::optional<std::int64_t> cyclomatic_gamma_direct;
  std::int64_t cyclomatic_gamma_max = 0;
  std::optional<bool> all_consistent;
};

CountsReport compute_counts(const ToposSet& topes, const ConvexLattice& lattice, bool cross_check);

Json counts_json(const CountsReport& report);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace om::cli
