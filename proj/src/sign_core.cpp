#include "om/sign_core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

namespace om {

namespace {

constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";

void check_element(std::size_t element) {
  if (element == 0 || element > kMaxGroundSize) {
    throw std::out_of_range("ground element " + std::to_string(element) +
                            " outside 1.." + std::to_string(kMaxGroundSize));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int sign_rank(Sign s) {
  switch (s) {
    case Sign::kPlus:
      return 0;
    case Sign::kZero:
      return 1;
    case Sign::kMinus:
      return 2;
  }
  return 1;
}

}  // namespace

GroundSubset GroundSubset::full(std::size_t n) {
  if (n > kMaxGroundSize) throw std::out_of_range("ground set too large");
  return GroundSubset(n == 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
}

GroundSubset GroundSubset::of(std::initializer_list<std::size_t> elements) {
  GroundSubset s;
  for (auto e : elements) s.insert(e);
  return s;
}

GroundSubset GroundSubset::parse_list(std::string_view text) {
  GroundSubset s;
  text = trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      throw ParseError("bad element list entry '" + std::string(token) + "'");
    }
    if (value == 0 || value > kMaxGroundSize) {
      throw ParseError("element " + std::to_string(value) + " out of range");
    }
    s.insert(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return s;
}

std::size_t GroundSubset::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool GroundSubset::contains(std::size_t element) const {
  check_element(element);
  return (bits_ >> (element - 1)) & 1U;
}

void GroundSubset::insert(std::size_t element) {
  check_element(element);
  bits_ |= std::uint32_t{1} << (element - 1);
}

void GroundSubset::erase(std::size_t element) {
  check_element(element);
  bits_ &= ~(std::uint32_t{1} << (element - 1));
}

bool GroundSubset::fits(std::size_t n) const { return is_subset_of(full(n)); }

std::vector<std::size_t> GroundSubset::elements() const {
  std::vector<std::size_t> out;
  for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)) + 1);
  }
  return out;
}

std::string GroundSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto e : elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string GroundSubset::compact() const {
  if (bits_ >> 9) return to_string();
  std::string out;
  for (auto e : elements()) out += static_cast<char>('0' + e);
  return out;
}

bool lex_less(GroundSubset a, GroundSubset b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

bool graded_less(GroundSubset a, GroundSubset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

SignVector::SignVector(std::size_t n, GroundSubset plus, GroundSubset minus)
    : n_(n), plus_(plus), minus_(minus) {
  if (!(plus | minus).fits(n)) throw std::invalid_argument("sign vector support exceeds ground set");
  if (!(plus & minus).empty()) throw std::invalid_argument("element both positive and negative");
}

SignVector SignVector::tope(std::size_t n, GroundSubset plus) {
  return {n, plus, GroundSubset::full(n) - plus};
}

SignVector SignVector::parse(std::string_view text) {
  GroundSubset plus;
  GroundSubset minus;
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size();) {
    if (n == kMaxGroundSize) throw ParseError("sign vector longer than 32 entries");
    const char c = text[i];
    if (c == '+') {
      plus.insert(++n);
      ++i;
    } else if (c == '-') {
      minus.insert(++n);
      ++i;
    } else if (c == '0') {
      ++n;
      ++i;
    } else if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      minus.insert(++n);
      i += kUnicodeMinus.size();
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' in sign vector");
    }
  }
  return {n, plus, minus};
}

GroundSubset SignVector::zero_set() const {
  return GroundSubset::full(n_) - plus_ - minus_;
}

Sign SignVector::at(std::size_t element) const {
  if (element == 0 || element > n_) throw std::out_of_range("element outside sign vector");
  if (plus_.contains(element)) return Sign::kPlus;
  if (minus_.contains(element)) return Sign::kMinus;
  return Sign::kZero;
}

SignVector SignVector::reoriented(GroundSubset subset) const {
  const GroundSubset keep_plus = plus_ - subset;
  const GroundSubset keep_minus = minus_ - subset;
  return {n_, keep_plus | (minus_ & subset), keep_minus | (plus_ & subset)};
}

std::string SignVector::to_string() const {
  std::string out(n_, '0');
  for (std::size_t e = 1; e <= n_; ++e) {
    if (plus_.contains(e)) out[e - 1] = '+';
    else if (minus_.contains(e)) out[e - 1] = '-';
  }
  return out;
}

bool canonical_less(const SignVector& a, const SignVector& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t e = 1; e <= common; ++e) {
    const int ra = sign_rank(a.at(e));
    const int rb = sign_rank(b.at(e));
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

ToposSet::ToposSet(std::size_t n, std::vector<SignVector> topes) : n_(n), topes_(std::move(topes)) {
  if (n_ > kMaxGroundSize) throw std::invalid_argument("ground set too large");
  for (const auto& t : topes_) {
    if (t.size() != n_) throw std::invalid_argument("tope length differs from ground set size");
    if (!t.is_tope()) throw std::invalid_argument("tope " + t.to_string() + " has a zero entry");
  }
  std::sort(topes_.begin(), topes_.end(), canonical_less);
  const GroundSubset all = ground();
  for (std::size_t i = 0; i < topes_.size(); ++i) {
    const auto [it, inserted] = by_positive_part_.emplace(topes_[i].positive_part().bits(), i);
    if (!inserted) throw std::invalid_argument("duplicate tope " + topes_[i].to_string());
    if (topes_[i].positive_part() == all) acyclic_ = true;
  }
}

std::optional<std::size_t> ToposSet::find(GroundSubset positive_part) const {
  const auto it = by_positive_part_.find(positive_part.bits());
  if (it == by_positive_part_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ToposSet::opposite(std::size_t index) const {
  return find(topes_.at(index).negative_part());
}

std::string ToposSet::serialize() const {
  std::string out;
  for (const auto& t : topes_) out += t.to_string() + '\n';
  return out;
}

ToposSet parse_topes(std::string_view text) {
  std::vector<SignVector> rows;
  std::vector<std::size_t> line_numbers;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    SignVector v;
    try {
      v = SignVector::parse(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!v.is_tope()) {
      throw ParseError("line " + std::to_string(line_no) + ": zero entry in tope '" +
                       std::string(line) + "'");
    }
    if (!rows.empty() && v.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(line_no) + ": length " + std::to_string(v.size()) +
                       " differs from " + std::to_string(rows.front().size()));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] == v) {
        throw ParseError("line " + std::to_string(line_no) + ": duplicate of line " +
                         std::to_string(line_numbers[i]));
      }
    }
    rows.push_back(v);
    line_numbers.push_back(line_no);
  }
  if (rows.empty()) throw ParseError("no topes in input");
  const std::size_t n = rows.front().size();
  return ToposSet(n, std::move(rows));
}

ValidationReport validate(const ToposSet& topes, ValidateOptions options) {
  ValidationReport report;
  auto add = [&](std::string rule, std::string message, std::vector<std::size_t> indices) {
    report.violations.push_back({std::move(rule), std::move(message), std::move(indices)});
  };

  const std::size_t n = topes.ground_size();
  if (topes.size() == 0) add("nonempty", "tope set is empty", {});

  // Distinctness and zero-freeness are enforced by the constructor; re-check
  // so the report stands on its own.
  for (std::size_t i = 0; i < topes.size(); ++i) {
    if (!topes[i].is_tope()) add("zero-free", "tope " + topes[i].to_string() + " has a zero entry", {i});
    if (i > 0 && topes[i] == topes[i - 1]) add("distinct", "duplicate tope " + topes[i].to_string(), {i - 1, i});
  }

  for (std::size_t i = 0; i < topes.size(); ++i) {
    if (!topes.opposite(i)) {
      add("symmetry", "opposite of " + topes[i].to_string() + " (" + (-topes[i]).to_string() + ") is missing",
          {i});
    }
  }

  // Column e as a bit pattern over topes.
  std::vector<std::vector<bool>> columns(n, std::vector<bool>(topes.size()));
  for (std::size_t i = 0; i < topes.size(); ++i) {
    for (std::size_t e = 1; e <= n; ++e) columns[e - 1][i] = topes[i].positive_part().contains(e);
  }
  for (std::size_t e = 1; e <= n; ++e) {
    const auto& col = columns[e - 1];
    const bool all_plus = std::all_of(col.begin(), col.end(), [](bool b) { return b; });
    const bool all_minus = std::none_of(col.begin(), col.end(), [](bool b) { return b; });
    if (!topes.topes().empty() && (all_plus || all_minus)) {
      add("simplicity", "element " + std::to_string(e) + " has constant sign over all topes", {e});
    }
    for (std::size_t f = e + 1; f <= n; ++f) {
      const auto& other = columns[f - 1];
      bool equal = true;
      bool negated = true;
      for (std::size_t i = 0; i < col.size(); ++i) {
        equal = equal && col[i] == other[i];
        negated = negated && col[i] != other[i];
      }
      if (equal) {
        add("simplicity", "elements " + std::to_string(e) + " and " + std::to_string(f) + " are parallel", {e, f});
      } else if (negated) {
        add("simplicity", "elements " + std::to_string(e) + " and " + std::to_string(f) + " are antiparallel",
            {e, f});
      }
    }
  }

  if (topes.acyclic()) {
    const std::string message = "all-plus tope present: the oriented matroid is acyclic";
    if (options.strict) {
      add("acyclic", message, {*topes.find(topes.ground())});
    } else {
      report.warnings.push_back(message);
    }
  }

  report.ok = report.violations.empty();
  return report;
}

ToposSet reorient(const ToposSet& topes, GroundSubset subset) {
  if (!subset.fits(topes.ground_size())) {
    throw std::invalid_argument("reorientation set " + subset.to_string() + " leaves the ground set");
  }
  std::vector<SignVector> flipped;
  flipped.reserve(topes.size());
  for (const auto& t : topes.topes()) flipped.push_back(t.reoriented(subset));
  return ToposSet(topes.ground_size(), std::move(flipped));
}

}  // namespace om
