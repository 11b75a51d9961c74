#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "om/sign_core.hpp"

namespace om {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

/// Central arrangement of oriented hyperplanes, given by normal vectors.
/// Element e (1-based) is vectors[e - 1].
class Arrangement {
 public:
  /// Throws std::invalid_argument on zero vectors, mixed dimensions, or
  /// parallel / antiparallel pairs.
  Arrangement(std::size_t dimension, std::vector<RationalVector> vectors);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return vectors_.size(); }
  const std::vector<RationalVector>& vectors() const { return vectors_; }

  /// Negates the normals of the given elements.
  Arrangement reoriented(GroundSubset subset) const;

 private:
  std::size_t dimension_ = 0;
  std::vector<RationalVector> vectors_;
};

/// Whether two nonzero vectors span the same line.
bool parallel(const RationalVector& a, const RationalVector& b);

/// Parses "p/q" or an integer.
Rational parse_rational(std::string_view token);

/// .arr content: one vector per line, '#' starts a comment.
Arrangement parse_arrangement(std::string_view text);

/// Decides whether { x : row . x > 0 for every row } is nonempty by
/// Fourier-Motzkin elimination over exact rationals.
bool strictly_feasible(std::vector<RationalVector> rows);

inline constexpr std::size_t kMaxArrangementSize = 16;

/// Feasible sign vectors of the arrangement (after flipping `reorientation`),
/// found by testing all 2^n candidates.
ToposSet arrangement_topes(const Arrangement& arrangement, GroundSubset reorientation = {});

/// conv(A) computed geometrically: b is in the hull iff
/// { <v_a,x> > 0 for a in A, <v_b,x> < 0 } is infeasible; E if A is not acyclic.
GroundSubset geometric_conv(const Arrangement& arrangement, GroundSubset subset);

struct RandomInstance {
  Arrangement arrangement;
  /// Already applied to `arrangement`.
  GroundSubset reorientation;
  ToposSet topes;
};

/// A simple, non-acyclic realizable instance: integer normals drawn from
/// [-box, box]^d, non-simple draws rejected, then a reorientation chosen so the
/// all-plus tope is absent. Requires dimension < size <= kMaxArrangementSize.
RandomInstance random_instance(std::mt19937_64& rng, std::size_t dimension, std::size_t size, int box = 3);

}  // namespace om
