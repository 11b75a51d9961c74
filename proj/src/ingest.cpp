#include "om/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace om {

namespace {

using boost::multiprecision::cpp_int;

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

cpp_int parse_integer(std::string_view digits, std::string_view token) {
  std::string_view body = digits;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (body.empty() || !std::all_of(body.begin(), body.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("bad rational '" + std::string(token) + "'");
  }
  const cpp_int value{std::string(body)};
  return digits.front() == '-' ? cpp_int(-value) : value;
}

// Scales a row by a positive factor so its first nonzero entry is +-1.
void normalize(RationalVector& row) {
  const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
  if (lead == row.end()) return;
  const Rational scale = abs(*lead);
  for (auto& x : row) x /= scale;
}

}  // namespace

bool parallel(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] * b[j] != a[j] * b[i]) return false;
    }
  }
  return true;
}

Arrangement::Arrangement(std::size_t dimension, std::vector<RationalVector> vectors)
    : dimension_(dimension), vectors_(std::move(vectors)) {
  if (vectors_.size() > kMaxGroundSize) throw std::invalid_argument("too many hyperplanes");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != dimension_) {
      throw std::invalid_argument("vector " + std::to_string(i + 1) + " has dimension " +
                                  std::to_string(vectors_[i].size()) + ", expected " + std::to_string(dimension_));
    }
    if (is_zero(vectors_[i])) throw std::invalid_argument("vector " + std::to_string(i + 1) + " is zero");
    for (std::size_t j = 0; j < i; ++j) {
      if (parallel(vectors_[i], vectors_[j])) {
        throw std::invalid_argument("vectors " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                    " are parallel");
      }
    }
  }
}

Arrangement Arrangement::reoriented(GroundSubset subset) const {
  if (!subset.fits(size())) throw std::invalid_argument("reorientation leaves the ground set");
  auto flipped = vectors_;
  for (auto e : subset.elements()) {
    for (auto& x : flipped[e - 1]) x = -x;
  }
  return Arrangement(dimension_, std::move(flipped));
}

Rational parse_rational(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(token, token));
  const cpp_int num = parse_integer(token.substr(0, slash), token);
  const auto den_text = token.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') throw ParseError("negative denominator in '" + std::string(token) + "'");
  const cpp_int den = parse_integer(den_text, token);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(token) + "'");
  return Rational(num, den);
}

Arrangement parse_arrangement(std::string_view text) {
  std::vector<RationalVector> vectors;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    RationalVector v;
    std::string token;
    while (fields >> token) {
      try {
        v.push_back(parse_rational(token));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (v.empty()) continue;
    if (!vectors.empty() && v.size() != vectors.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(vectors.front().size()) +
                       " coordinates, found " + std::to_string(v.size()));
    }
    vectors.push_back(std::move(v));
  }
  if (vectors.empty()) throw ParseError("no vectors in arrangement");
  const std::size_t d = vectors.front().size();
  try {
    return Arrangement(d, std::move(vectors));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool strictly_feasible(std::vector<RationalVector> rows) {
  if (rows.empty()) return true;
  const std::size_t d = rows.front().size();
  for (std::size_t var = d; var-- > 0;) {
    for (auto& row : rows) {
      if (is_zero(row)) return false;  // 0 > 0
      normalize(row);
    }
    // Pairwise redundancy: positively proportional rows collapse to one.
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    std::vector<RationalVector> next;
    std::vector<const RationalVector*> upper;
    std::vector<const RationalVector*> lower;
    for (const auto& row : rows) {
      if (row[var] > 0) upper.push_back(&row);
      else if (row[var] < 0) lower.push_back(&row);
      else next.push_back(row);
    }
    for (const auto* p : upper) {
      for (const auto* q : lower) {
        const Rational wp = -(*q)[var];
        const Rational wq = (*p)[var];
        RationalVector combined(d);
        for (std::size_t i = 0; i < d; ++i) combined[i] = wp * (*p)[i] + wq * (*q)[i];
        combined[var] = 0;
        next.push_back(std::move(combined));
      }
    }
    rows = std::move(next);
  }
  // Every surviving row is identically zero.
  return rows.empty();
}

ToposSet arrangement_topes(const Arrangement& arrangement, GroundSubset reorientation) {
  const std::size_t n = arrangement.size();
  if (n > kMaxArrangementSize) {
    throw std::invalid_argument("arrangement with " + std::to_string(n) + " elements exceeds the bound of " +
                                std::to_string(kMaxArrangementSize));
  }
  const Arrangement oriented = arrangement.reoriented(reorientation);
  const auto& vs = oriented.vectors();
  std::vector<SignVector> topes;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const GroundSubset plus(bits);
    std::vector<RationalVector> rows;
    rows.reserve(n);
    for (std::size_t e = 1; e <= n; ++e) {
      RationalVector row = vs[e - 1];
      if (!plus.contains(e)) {
        for (auto& x : row) x = -x;
      }
      rows.push_back(std::move(row));
    }
    if (strictly_feasible(std::move(rows))) topes.push_back(SignVector::tope(n, plus));
  }
  return ToposSet(n, std::move(topes));
}

GroundSubset geometric_conv(const Arrangement& arrangement, GroundSubset subset) {
  const std::size_t n = arrangement.size();
  if (!subset.fits(n)) throw std::invalid_argument("subset leaves the ground set");
  std::vector<RationalVector> base;
  for (auto a : subset.elements()) base.push_back(arrangement.vectors()[a - 1]);
  if (!strictly_feasible(base)) return GroundSubset::full(n);
  GroundSubset hull;
  for (std::size_t b = 1; b <= n; ++b) {
    auto rows = base;
    RationalVector negated = arrangement.vectors()[b - 1];
    for (auto& x : negated) x = -x;
    rows.push_back(std::move(negated));
    if (!strictly_feasible(std::move(rows))) hull.insert(b);
  }
  return hull;
}

RandomInstance random_instance(std::mt19937_64& rng, std::size_t dimension, std::size_t size, int box) {
  if (size == 0 || size > kMaxArrangementSize) throw std::invalid_argument("instance size out of range");
  if (dimension == 0 || box < 1) throw std::invalid_argument("bad dimension or coordinate box");
  // n <= d independent normals realize every sign vector, so no orientation avoids the all-plus tope.
  if (size <= dimension) throw std::invalid_argument("instance size must exceed the dimension");
  std::uniform_int_distribution<int> coordinate(-box, box);
  std::uniform_int_distribution<std::uint32_t> subset_bits(0, (std::uint32_t{1} << size) - 1);

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<RationalVector> vectors;
    for (int draw = 0; draw < 10000 && vectors.size() < size; ++draw) {
      RationalVector v(dimension);
      for (auto& x : v) x = coordinate(rng);
      if (is_zero(v)) continue;
      if (std::any_of(vectors.begin(), vectors.end(), [&](const RationalVector& w) { return parallel(v, w); })) {
        continue;
      }
      vectors.push_back(std::move(v));
    }
    if (vectors.size() < size) break;

    const Arrangement base(dimension, std::move(vectors));
    const ToposSet base_topes = arrangement_topes(base);
    const GroundSubset ground = GroundSubset::full(size);
    // Flipping R yields the all-plus tope iff some tope has negative part R.
    for (int flip = 0; flip < 256; ++flip) {
      const GroundSubset r(subset_bits(rng));
      if (base_topes.find(ground - r)) continue;
      return {base.reoriented(r), r, reorient(base_topes, r)};
    }
  }
  throw std::runtime_error("no simple non-acyclic instance found");
}

}  // namespace om
