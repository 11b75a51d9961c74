// Brute-force reference implementations used only by the tests. They work on
// sign strings and std::set and share no code with the library.
#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "om/sign_core.hpp"

namespace oracle {

using Set = std::set<int>;

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::string fixture_path(const std::string& name) { return std::string(OM_TEST_DATA_DIR) + "/" + name; }

inline om::ToposSet load(const std::string& name) { return om::parse_topes(read_text(fixture_path(name))); }

inline std::vector<std::string> sign_strings(const om::ToposSet& topes) {
  std::vector<std::string> out;
  for (const auto& t : topes.topes()) out.push_back(t.to_string());
  return out;
}

inline Set positive(const std::string& tope) {
  Set s;
  for (std::size_t i = 0; i < tope.size(); ++i) {
    if (tope[i] == '+') s.insert(static_cast<int>(i) + 1);
  }
  return s;
}

inline Set ground(std::size_t n) {
  Set s;
  for (std::size_t e = 1; e <= n; ++e) s.insert(static_cast<int>(e));
  return s;
}

inline bool includes(const Set& big, const Set& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline Set to_set(om::GroundSubset s) {
  Set out;
  for (auto e : s.elements()) out.insert(static_cast<int>(e));
  return out;
}

inline std::string negate(const std::string& tope) {
  std::string out = tope;
  for (auto& c : out) c = c == '+' ? '-' : '+';
  return out;
}

/// Elements positive on every tope positive on A; everything if none is.
inline Set conv(const std::vector<std::string>& topes, const Set& a) {
  const std::size_t n = topes.front().size();
  Set hull = ground(n);
  for (const auto& t : topes) {
    const Set p = positive(t);
    if (!includes(p, a)) continue;
    Set keep;
    std::set_intersection(hull.begin(), hull.end(), p.begin(), p.end(), std::inserter(keep, keep.begin()));
    hull = keep;
  }
  return hull;
}

inline bool committee(const std::vector<std::string>& topes, const std::vector<std::size_t>& members) {
  const std::size_t n = topes.front().size();
  for (std::size_t e = 0; e < n; ++e) {
    std::size_t plus = 0;
    for (auto i : members) plus += topes[i][e] == '+' ? 1 : 0;
    if (2 * plus <= members.size()) return false;
  }
  return true;
}

inline std::vector<std::vector<std::size_t>> committees3(const std::vector<std::string>& topes) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t a = 0; a < topes.size(); ++a)
    for (std::size_t b = a + 1; b < topes.size(); ++b)
      for (std::size_t c = b + 1; c < topes.size(); ++c)
        if (committee(topes, {a, b, c})) out.push_back({a, b, c});
  return out;
}

/// Number of topes whose positive part is exactly `s`.
inline std::size_t exact_part_count(const std::vector<std::string>& topes, const Set& s) {
  return static_cast<std::size_t>(
      std::count_if(topes.begin(), topes.end(), [&](const std::string& t) { return positive(t) == s; }));
}

inline std::uint64_t choose(std::uint64_t m, std::uint64_t k) {
  if (m < k) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

}  // namespace oracle
