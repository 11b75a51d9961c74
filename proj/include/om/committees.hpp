#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "om/convexity.hpp"
#include "om/sign_core.hpp"

namespace om {

/// Tope indices positive on every element of `subset` (all topes for the empty set).
std::vector<std::size_t> halfspace(const ToposSet& topes, GroundSubset subset);

/// Topes whose positive parts are inclusion-maximal among all positive parts,
/// found directly from the tope list.
std::vector<std::size_t> max_positive_topes(const ToposSet& topes);

using Triple = std::array<std::size_t, 3>;

struct Committee {
  Triple members{};  // increasing tope indices
  bool max_positive = false;

  friend bool operator==(const Committee&, const Committee&) = default;
};

/// Every positive halfspace holds at least two of the three topes. Throws
/// std::invalid_argument on duplicate or out-of-range indices.
bool is_committee(const ToposSet& topes, const Triple& triple);

/// The negated triple is a committee.
bool is_anti_committee(const ToposSet& topes, const Triple& triple);

/// |K cap T_e^+| > |K|/2 for every element e, for a tope subset of any size.
bool is_committee_general(const ToposSet& topes, std::span<const std::size_t> subset);

/// Brute force over all C(|T|,3) triples, in lexicographic index order.
std::vector<Committee> enumerate_committees3(const ToposSet& topes, bool restrict_max_positive);

/// Sum over unordered triples of pairwise-disjoint nonempty realized positive
/// parts of the product of exact-positive-part counts.
std::uint64_t count_committees_eq1(const ToposSet& topes);

/// Convex-lattice form of the same count: unordered triples of proper nonempty
/// members with pairwise meet 0, each weighted by the product over k of
/// |T^+_{ex(A_k)} cap -T^+_{ex(conv(E - A_k))}|.
std::uint64_t count_committees3_lattice(const ToposSet& topes, const ConvexLattice& lattice);

/// 8 C(|T|/2, 3) + sum over free proper members A of (-1)^|A| C(|T_A^+|, 3).
std::int64_t count_no_opposite_triples(const ToposSet& topes, const ConvexLattice& lattice);

/// Triples with no opposite pair that meet every positive halfspace, by enumeration.
std::uint64_t count_no_opposite_triples_brute(const ToposSet& topes);

/// C(m, k) with C(m, k) = 0 for m < k.
std::int64_t binomial(std::int64_t m, std::int64_t k);

}  // namespace om
