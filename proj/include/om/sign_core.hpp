#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace om {

/// Largest ground set representable by the bitmask types below.
inline constexpr std::size_t kMaxGroundSize = 32;

/// Thrown for malformed .topes / .arr input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A subset of the ground set {1..n}, stored as a bitmask (bit e-1 <-> e).
class GroundSubset {
 public:
  constexpr GroundSubset() = default;
  constexpr explicit GroundSubset(std::uint32_t bits) : bits_(bits) {}

  static GroundSubset full(std::size_t n);
  static GroundSubset of(std::initializer_list<std::size_t> elements);
  /// Parses "1,2,5" (or an empty string) into a subset; elements are 1-based.
  static GroundSubset parse_list(std::string_view text);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  bool contains(std::size_t element) const;
  void insert(std::size_t element);
  void erase(std::size_t element);

  constexpr bool is_subset_of(GroundSubset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  /// True iff every member lies in {1..n}.
  bool fits(std::size_t n) const;

  std::vector<std::size_t> elements() const;
  /// "{1,2,5}"
  std::string to_string() const;
  /// "125" for ground sets with single-digit elements, "{10,11}" otherwise.
  std::string compact() const;

  friend constexpr GroundSubset operator&(GroundSubset a, GroundSubset b) {
    return GroundSubset(a.bits_ & b.bits_);
  }
  friend constexpr GroundSubset operator|(GroundSubset a, GroundSubset b) {
    return GroundSubset(a.bits_ | b.bits_);
  }
  /// Set difference.
  friend constexpr GroundSubset operator-(GroundSubset a, GroundSubset b) {
    return GroundSubset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(GroundSubset, GroundSubset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Lexicographic order on the increasing element sequences: {1,2} < {1,2,3} < {1,5} < {2}.
bool lex_less(GroundSubset a, GroundSubset b);

/// Orders by cardinality first, then lexicographically.
bool graded_less(GroundSubset a, GroundSubset b);

enum class Sign : std::int8_t { kMinus = -1, kZero = 0, kPlus = 1 };

/// A {+,-,0} vector over {1..n}.
class SignVector {
 public:
  SignVector() = default;
  SignVector(std::size_t n, GroundSubset plus, GroundSubset minus);

  /// Builds a zero-free vector from its positive part.
  static SignVector tope(std::size_t n, GroundSubset plus);
  /// Accepts '+', '-', '0' and the UTF-8 minus sign U+2212.
  static SignVector parse(std::string_view text);

  std::size_t size() const { return n_; }
  GroundSubset positive_part() const { return plus_; }
  GroundSubset negative_part() const { return minus_; }
  GroundSubset zero_set() const;
  bool is_tope() const { return zero_set().empty(); }
  Sign at(std::size_t element) const;

  SignVector operator-() const { return {n_, minus_, plus_}; }
  /// Flips signs on every element of `subset`.
  SignVector reoriented(GroundSubset subset) const;

  /// Sign string in ASCII ('+', '-', '0').
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::size_t n_ = 0;
  GroundSubset plus_;
  GroundSubset minus_;
};

/// Lexicographic order with + < 0 < -.
bool canonical_less(const SignVector& a, const SignVector& b);

/// The tope set of a (presumed) simple oriented matroid.
///
/// Topes are kept in canonical order, so a tope's index is stable and serves as
/// its vertex id in every graph built on top of it. Construction only checks
/// well-formedness; use validate() for the matroid-level conditions.
class ToposSet {
 public:
  ToposSet() = default;
  /// Throws std::invalid_argument on length mismatch, zero entries or duplicates.
  ToposSet(std::size_t n, std::vector<SignVector> topes);

  std::size_t ground_size() const { return n_; }
  GroundSubset ground() const { return GroundSubset::full(n_); }
  std::size_t size() const { return topes_.size(); }
  const std::vector<SignVector>& topes() const { return topes_; }
  const SignVector& operator[](std::size_t index) const { return topes_[index]; }

  /// Whether the all-plus vector is a tope.
  bool acyclic() const { return acyclic_; }

  /// Index of the tope with the given positive part.
  std::optional<std::size_t> find(GroundSubset positive_part) const;
  /// Index of -T, if present.
  std::optional<std::size_t> opposite(std::size_t index) const;

  /// One tope per line, canonical order.
  std::string serialize() const;

  friend bool operator==(const ToposSet& a, const ToposSet& b) {
    return a.n_ == b.n_ && a.topes_ == b.topes_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<SignVector> topes_;
  std::unordered_map<std::uint32_t, std::size_t> by_positive_part_;
  bool acyclic_ = false;
};

struct Violation {
  std::string rule;
  std::string message;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
};

struct ValidateOptions {
  /// Promote the acyclic-input warning to a violation.
  bool strict = false;
};

/// Parses .topes content. Lines starting with '#' and blank lines are skipped.
ToposSet parse_topes(std::string_view text);

/// Checks distinctness, zero-freeness, symmetry and simplicity. These are
/// necessary conditions only.
ValidationReport validate(const ToposSet& topes, ValidateOptions options = {});

/// Flips every tope at the elements of `subset`. Throws std::invalid_argument
/// if `subset` leaves the ground set.
ToposSet reorient(const ToposSet& topes, GroundSubset subset);

}  // namespace om
