#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "om/sign_core.hpp"

namespace om {

/// Convex hull over topes: the elements positive on every tope that is
/// positive on all of `subset`. Returns E when no such tope exists.
GroundSubset conv(const ToposSet& topes, GroundSubset subset);

/// Extreme points { a in A : a not in conv(A - a) }, with ex(E) = E.
GroundSubset ex(const ToposSet& topes, GroundSubset subset);

/// Whether some tope is positive on all of `subset`.
bool is_acyclic(const ToposSet& topes, GroundSubset subset);

struct SubsetClassification {
  bool acyclic = false;
  bool convex = false;
  bool free = false;
  GroundSubset hull;
  GroundSubset extreme;
};

SubsetClassification classify(const ToposSet& topes, GroundSubset subset);

/// Hull of every subset of E, precomputed with a superset AND-transform.
///
/// hull(S) equals conv(S) for every S; the table costs O(n 2^n) and is what
/// the lattice is built from.
class HullTable {
 public:
  explicit HullTable(const ToposSet& topes);

  std::size_t ground_size() const { return n_; }
  GroundSubset hull(GroundSubset subset) const;
  bool acyclic(GroundSubset subset) const;
  GroundSubset extreme(GroundSubset subset) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> hull_;
  std::vector<bool> acyclic_;
};

struct LatticeOptions {
  /// Exhaustive enumeration is refused above this ground-set size.
  std::size_t max_ground_size = 20;
  /// Also compute the Moebius function by recursion and check the closed form.
  bool verify_mobius = false;
};

/// Thrown when a runtime-checked lattice invariant fails.
class LatticeInvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The convex sets of E ordered by inclusion, with E adjoined as the top.
///
/// Members are stored in graded order (cardinality, then lexicographic); the
/// empty set is always member 0 and the top is always the last member.
class ConvexLattice {
 public:
  static ConvexLattice build(const ToposSet& topes, LatticeOptions options = {});

  std::size_t ground_size() const { return n_; }
  GroundSubset bottom() const { return GroundSubset{}; }
  GroundSubset top() const { return GroundSubset::full(n_); }

  const std::vector<GroundSubset>& members() const { return members_; }
  /// Maximal proper members.
  const std::vector<GroundSubset>& coatoms() const { return coatoms_; }
  /// Nonempty proper free members.
  const std::vector<GroundSubset>& free_sets() const { return free_sets_; }

  bool contains(GroundSubset subset) const;
  /// Throws std::invalid_argument for non-members.
  std::size_t index_of(GroundSubset member) const;

  bool is_free(GroundSubset member) const;

  /// Closed-form Moebius value mu(0, A); A must be a member other than the top.
  std::int64_t mobius(GroundSubset member) const;
  /// Recursively computed mu(0, A) for every member, including the top.
  /// Present only when built with verify_mobius.
  const std::optional<std::vector<std::int64_t>>& recursive_mobius() const { return recursive_mobius_; }

  GroundSubset meet(GroundSubset a, GroundSubset b) const;
  GroundSubset join(GroundSubset a, GroundSubset b) const;

  /// Coatoms C with C >= D; its size is the coatom count of the interval [D, top].
  std::vector<GroundSubset> coatoms_above(GroundSubset member) const;

  /// Members B with B <= A.
  std::size_t lower_interval_size(GroundSubset member) const;

  const HullTable& hulls() const { return hulls_; }

 private:
  explicit ConvexLattice(const ToposSet& topes) : hulls_(topes) {}

  std::size_t n_ = 0;
  HullTable hulls_;
  std::vector<GroundSubset> members_;
  std::vector<GroundSubset> coatoms_;
  std::vector<GroundSubset> free_sets_;
  std::vector<std::int32_t> index_;  // dense: subset bits -> member index or -1
  std::optional<std::vector<std::int64_t>> recursive_mobius_;
};

/// Moebius function mu(0, x) of the lattice computed from its definition,
/// mu(0,0) = 1 and mu(0,x) = -sum_{y < x} mu(0,y).
std::vector<std::int64_t> recursive_mobius(const std::vector<GroundSubset>& members);

}  // namespace om
