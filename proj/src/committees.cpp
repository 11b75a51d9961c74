#include "om/committees.hpp"

#include <algorithm>
#include <string>

namespace om {

namespace {

void check_triple(const ToposSet& topes, const Triple& triple) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (triple[i] >= topes.size()) {
      throw std::invalid_argument("tope index " + std::to_string(triple[i]) + " out of range");
    }
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (triple[i] == triple[j]) throw std::invalid_argument("repeated tope index in triple");
    }
  }
}

bool lattice_matches(const ToposSet& topes, const ConvexLattice& lattice) {
  return lattice.ground_size() == topes.ground_size();
}

}  // namespace

std::int64_t binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < k) return 0;
  k = std::min(k, m - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

std::vector<std::size_t> halfspace(const ToposSet& topes, GroundSubset subset) {
  if (!subset.fits(topes.ground_size())) {
    throw std::invalid_argument("subset " + subset.to_string() + " leaves the ground set");
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < topes.size(); ++i) {
    if (subset.is_subset_of(topes[i].positive_part())) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> max_positive_topes(const ToposSet& topes) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < topes.size(); ++i) {
    const GroundSubset p = topes[i].positive_part();
    bool maximal = true;
    for (std::size_t j = 0; j < topes.size() && maximal; ++j) {
      const GroundSubset q = topes[j].positive_part();
      if (j != i && p.is_subset_of(q) && p != q) maximal = false;
    }
    if (maximal) out.push_back(i);
  }
  return out;
}

bool is_committee(const ToposSet& topes, const Triple& triple) {
  check_triple(topes, triple);
  return is_committee_general(topes, triple);
}

bool is_anti_committee(const ToposSet& topes, const Triple& triple) {
  check_triple(topes, triple);
  Triple negated{};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto opp = topes.opposite(triple[i]);
    if (!opp) throw std::invalid_argument("opposite of tope " + topes[triple[i]].to_string() + " missing");
    negated[i] = *opp;
  }
  return is_committee(topes, negated);
}

bool is_committee_general(const ToposSet& topes, std::span<const std::size_t> subset) {
  for (auto i : subset) {
    if (i >= topes.size()) throw std::invalid_argument("tope index out of range");
  }
  for (std::size_t e = 1; e <= topes.ground_size(); ++e) {
    std::size_t positive = 0;
    for (auto i : subset) positive += topes[i].positive_part().contains(e) ? 1 : 0;
    if (2 * positive <= subset.size()) return false;
  }
  return true;
}

std::vector<Committee> enumerate_committees3(const ToposSet& topes, bool restrict_max_positive) {
  std::vector<bool> is_max(topes.size(), false);
  for (auto i : max_positive_topes(topes)) is_max[i] = true;

  std::vector<Committee> out;
  const std::size_t t = topes.size();
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      for (std::size_t c = b + 1; c < t; ++c) {
        const Triple triple{a, b, c};
        const bool all_max = is_max[a] && is_max[b] && is_max[c];
        if (restrict_max_positive && !all_max) continue;
        if (is_committee_general(topes, triple)) out.push_back({triple, all_max});
      }
    }
  }
  return out;
}

std::uint64_t count_committees_eq1(const ToposSet& topes) {
  // Multiplicity of each realized nonempty positive part. Distinct topes have
  // distinct positive parts, but the sum is written for general multiplicities.
  std::vector<std::pair<GroundSubset, std::uint64_t>> parts;
  for (const auto& t : topes.topes()) {
    const GroundSubset p = t.positive_part();
    if (p.empty()) continue;
    auto it = std::find_if(parts.begin(), parts.end(), [&](const auto& entry) { return entry.first == p; });
    if (it == parts.end()) parts.emplace_back(p, 1);
    else ++it->second;
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!(parts[i].first & parts[j].first).empty()) continue;
      for (std::size_t k = j + 1; k < parts.size(); ++k) {
        if (!(parts[i].first & parts[k].first).empty() || !(parts[j].first & parts[k].first).empty()) continue;
        total += parts[i].second * parts[j].second * parts[k].second;
      }
    }
  }
  return total;
}

std::uint64_t count_committees3_lattice(const ToposSet& topes, const ConvexLattice& lattice) {
  if (!lattice_matches(topes, lattice)) throw std::invalid_argument("lattice built for a different ground set");
  const auto& hulls = lattice.hulls();
  const GroundSubset all = lattice.top();

  // Per-member factor |T^+_{ex(A)} cap -T^+_{ex(conv(E - A))}|. Members with a
  // zero factor cannot contribute to any product and are skipped below.
  std::vector<std::pair<GroundSubset, std::uint64_t>> weighted;
  for (auto a : lattice.members()) {
    if (a.empty() || a == all) continue;
    const GroundSubset ex_a = hulls.extreme(a);
    const GroundSubset ex_rest = hulls.extreme(hulls.hull(all - a));
    std::uint64_t factor = 0;
    for (const auto& t : topes.topes()) {
      if (ex_a.is_subset_of(t.positive_part()) && ex_rest.is_subset_of(t.negative_part())) ++factor;
    }
    if (factor != 0) weighted.emplace_back(a, factor);
  }

  const GroundSubset bottom = lattice.bottom();
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < weighted.size(); ++i) {
    for (std::size_t j = i + 1; j < weighted.size(); ++j) {
      if (lattice.meet(weighted[i].first, weighted[j].first) != bottom) continue;
      for (std::size_t k = j + 1; k < weighted.size(); ++k) {
        if (lattice.meet(weighted[i].first, weighted[k].first) != bottom ||
            lattice.meet(weighted[j].first, weighted[k].first) != bottom) {
          continue;
        }
        total += weighted[i].second * weighted[j].second * weighted[k].second;
      }
    }
  }
  return total;
}

std::int64_t count_no_opposite_triples(const ToposSet& topes, const ConvexLattice& lattice) {
  if (!lattice_matches(topes, lattice)) throw std::invalid_argument("lattice built for a different ground set");
  const auto half = static_cast<std::int64_t>(topes.size() / 2);
  std::int64_t total = 8 * binomial(half, 3);
  for (auto a : lattice.free_sets()) {
    const auto in_halfspace = static_cast<std::int64_t>(halfspace(topes, a).size());
    const std::int64_t sign = a.size() % 2 == 0 ? 1 : -1;
    total += sign * binomial(in_halfspace, 3);
  }
  return total;
}

std::uint64_t count_no_opposite_triples_brute(const ToposSet& topes) {
  const GroundSubset all = topes.ground();
  const std::size_t t = topes.size();
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      if (topes[a] == -topes[b]) continue;
      for (std::size_t c = b + 1; c < t; ++c) {
        if (topes[a] == -topes[c] || topes[b] == -topes[c]) continue;
        const GroundSubset covered =
            topes[a].positive_part() | topes[b].positive_part() | topes[c].positive_part();
        if (covered == all) ++count;
      }
    }
  }
  return count;
}

}  // namespace om
