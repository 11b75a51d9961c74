#include "om/convexity.hpp"

#include <algorithm>
#include <string>

namespace om {

namespace {

void require_fits(const ToposSet& topes, GroundSubset subset) {
  if (!subset.fits(topes.ground_size())) {
    throw std::invalid_argument("subset " + subset.to_string() + " leaves the ground set");
  }
}

}  // namespace

GroundSubset conv(const ToposSet& topes, GroundSubset subset) {
  require_fits(topes, subset);
  const GroundSubset all = topes.ground();
  GroundSubset hull = all;
  bool witnessed = false;
  for (const auto& t : topes.topes()) {
    if (subset.is_subset_of(t.positive_part())) {
      hull = hull & t.positive_part();
      witnessed = true;
    }
  }
  return witnessed ? hull : all;
}

bool is_acyclic(const ToposSet& topes, GroundSubset subset) {
  require_fits(topes, subset);
  return std::any_of(topes.topes().begin(), topes.topes().end(),
                     [&](const SignVector& t) { return subset.is_subset_of(t.positive_part()); });
}

GroundSubset ex(const ToposSet& topes, GroundSubset subset) {
  require_fits(topes, subset);
  if (subset == topes.ground()) return subset;
  GroundSubset extreme;
  for (auto a : subset.elements()) {
    GroundSubset rest = subset;
    rest.erase(a);
    if (!conv(topes, rest).contains(a)) extreme.insert(a);
  }
  return extreme;
}

SubsetClassification classify(const ToposSet& topes, GroundSubset subset) {
  SubsetClassification c;
  c.acyclic = is_acyclic(topes, subset);
  c.hull = conv(topes, subset);
  c.extreme = ex(topes, subset);
  c.convex = c.acyclic && c.hull == subset;
  c.free = c.convex && c.extreme == subset;
  return c;
}

HullTable::HullTable(const ToposSet& topes) : n_(topes.ground_size()) {
  if (n_ > 24) throw std::invalid_argument("hull table needs n <= 24");
  const std::size_t count = std::size_t{1} << n_;
  const std::uint32_t all = GroundSubset::full(n_).bits();
  hull_.assign(count, all);
  acyclic_.assign(count, false);
  for (const auto& t : topes.topes()) {
    const auto p = t.positive_part().bits();
    hull_[p] = p;
    acyclic_[p] = true;
  }
  // Superset transform: hull_[S] becomes the AND over all tope parts containing S.
  for (std::size_t bit = 0; bit < n_; ++bit) {
    const std::size_t mask = std::size_t{1} << bit;
    for (std::size_t s = 0; s < count; ++s) {
      if (s & mask) continue;
      hull_[s] &= hull_[s | mask];
      if (acyclic_[s | mask]) acyclic_[s] = true;
    }
  }
}

GroundSubset HullTable::hull(GroundSubset subset) const {
  if (!subset.fits(n_)) throw std::invalid_argument("subset leaves the ground set");
  return acyclic_[subset.bits()] ? GroundSubset(hull_[subset.bits()]) : GroundSubset::full(n_);
}

bool HullTable::acyclic(GroundSubset subset) const {
  if (!subset.fits(n_)) throw std::invalid_argument("subset leaves the ground set");
  return acyclic_[subset.bits()];
}

GroundSubset HullTable::extreme(GroundSubset subset) const {
  if (subset == GroundSubset::full(n_)) return subset;
  GroundSubset out;
  for (auto a : subset.elements()) {
    GroundSubset rest = subset;
    rest.erase(a);
    if (!hull(rest).contains(a)) out.insert(a);
  }
  return out;
}

std::vector<std::int64_t> recursive_mobius(const std::vector<GroundSubset>& members) {
  std::vector<std::int64_t> mu(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].empty()) {
      mu[i] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j != i && members[j].is_subset_of(members[i])) sum += mu[j];
    }
    mu[i] = -sum;
  }
  return mu;
}

ConvexLattice ConvexLattice::build(const ToposSet& topes, LatticeOptions options) {
  const std::size_t n = topes.ground_size();
  if (n > options.max_ground_size) {
    throw std::invalid_argument("ground set of size " + std::to_string(n) +
                                " exceeds the enumeration bound " + std::to_string(options.max_ground_size));
  }
  ConvexLattice lat(topes);
  lat.n_ = n;
  const auto& hulls = lat.hulls_;
  const GroundSubset all = GroundSubset::full(n);
  const std::uint32_t count = std::uint32_t{1} << n;

  for (std::uint32_t s = 0; s < count; ++s) {
    const GroundSubset subset(s);
    if (subset != all && hulls.acyclic(subset) && hulls.hull(subset) == subset) {
      lat.members_.push_back(subset);
    }
  }
  std::sort(lat.members_.begin(), lat.members_.end(), graded_less);
  lat.members_.push_back(all);

  lat.index_.assign(count, -1);
  for (std::size_t i = 0; i < lat.members_.size(); ++i) {
    lat.index_[lat.members_[i].bits()] = static_cast<std::int32_t>(i);
  }

  if (lat.members_.front() != GroundSubset{}) {
    throw LatticeInvariantError("empty set is not convex");
  }
  for (std::size_t i = 0; i + 1 < lat.members_.size(); ++i) {
    for (std::size_t j = i + 1; j + 1 < lat.members_.size(); ++j) {
      if (!lat.contains(lat.members_[i] & lat.members_[j])) {
        throw LatticeInvariantError("convex sets " + lat.members_[i].to_string() + " and " +
                                    lat.members_[j].to_string() + " intersect in a non-convex set");
      }
    }
  }

  for (std::size_t i = 0; i + 1 < lat.members_.size(); ++i) {
    const GroundSubset c = lat.members_[i];
    const auto outside = (all - c).elements();
    // A proper member is a coatom iff adding any element forces the top.
    const bool maximal = std::all_of(outside.begin(), outside.end(), [&](std::size_t e) {
      GroundSubset grown = c;
      grown.insert(e);
      return !hulls.acyclic(grown) || hulls.hull(grown) == all;
    });
    if (maximal) lat.coatoms_.push_back(c);
    if (!c.empty() && hulls.extreme(c) == c) lat.free_sets_.push_back(c);
  }

  if (options.verify_mobius) {
    auto mu = om::recursive_mobius(lat.members_);
    for (std::size_t i = 0; i + 1 < lat.members_.size(); ++i) {
      if (mu[i] != lat.mobius(lat.members_[i])) {
        throw LatticeInvariantError("closed-form Moebius value disagrees with recursion at " +
                                    lat.members_[i].to_string());
      }
    }
    lat.recursive_mobius_ = std::move(mu);
  }
  return lat;
}

bool ConvexLattice::contains(GroundSubset subset) const {
  return subset.fits(n_) && index_[subset.bits()] >= 0;
}

std::size_t ConvexLattice::index_of(GroundSubset member) const {
  if (!contains(member)) throw std::invalid_argument(member.to_string() + " is not a lattice member");
  return static_cast<std::size_t>(index_[member.bits()]);
}

bool ConvexLattice::is_free(GroundSubset member) const {
  index_of(member);
  if (member == top()) return false;
  return member.empty() || std::binary_search(free_sets_.begin(), free_sets_.end(), member, graded_less);
}

std::int64_t ConvexLattice::mobius(GroundSubset member) const {
  index_of(member);
  if (member == top()) throw std::invalid_argument("closed-form Moebius value is not defined at the top");
  if (!is_free(member)) return 0;
  return member.size() % 2 == 0 ? 1 : -1;
}

GroundSubset ConvexLattice::meet(GroundSubset a, GroundSubset b) const {
  index_of(a);
  index_of(b);
  const GroundSubset m = a & b;
  if (!contains(m)) throw LatticeInvariantError("meet " + m.to_string() + " is not convex");
  return m;
}

GroundSubset ConvexLattice::join(GroundSubset a, GroundSubset b) const {
  index_of(a);
  index_of(b);
  const GroundSubset u = a | b;
  if (u == top() || !hulls_.acyclic(u)) return top();
  return hulls_.hull(u);
}

std::vector<GroundSubset> ConvexLattice::coatoms_above(GroundSubset member) const {
  index_of(member);
  std::vector<GroundSubset> out;
  for (auto c : coatoms_) {
    if (member.is_subset_of(c)) out.push_back(c);
  }
  return out;
}

std::size_t ConvexLattice::lower_interval_size(GroundSubset member) const {
  index_of(member);
  return static_cast<std::size_t>(std::count_if(members_.begin(), members_.end(),
                                                [&](GroundSubset b) { return b.is_subset_of(member); }));
}

}  // namespace om
