#pragma once

// Seifert invariants M(e0; r1, r2, r3), negative continued fractions, and the L-space test.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumbtight/rational.hpp"

namespace plumbtight {

/// Negative continued fraction [a0, ..., ak] = -a0 - 1/(-a1 - 1/(... - 1/(-ak))).
struct NegCF {
  std::vector<int> digits;

  std::size_t size() const { return digits.size(); }
  int operator[](std::size_t i) const { return digits[i]; }
  friend bool operator==(const NegCF&, const NegCF&) = default;
};

/// Expansion of -1/r with all digits >= 2. Throws std::domain_error unless 0 < r < 1.
NegCF neg_cf_expand(const Rational& r);

/// Value of the nested fraction. Throws std::domain_error on an empty digit list.
Rational eval_cf(const NegCF& cf);

/// Normalized Seifert data: 0 < r3 <= r2 <= r1 < 1, sorted descending.
struct SeifertData {
  int e0 = -1;
  std::array<Rational, 3> r;

  /// Sorts r descending and validates the range; throws std::domain_error otherwise.
  static SeifertData make(int e0, std::array<Rational, 3> r);
  /// Parses "e0;p1/q1,p2/q2,p3/q3". Throws std::invalid_argument / std::domain_error.
  static SeifertData parse(std::string_view text);

  std::string str() const;
  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// A coprime pair m > a >= 1 certifying that the Seifert coefficients are realizable.
struct RealizingPair {
  int m = 0;
  int a = 0;
};

/// Searches coprime (m, a) with 1/r1 > m/a, 1/r2 > m/(m-a), 1/r3 > m. Requires e0 = -1.
std::optional<RealizingPair> realizing_pair(const SeifertData& s);

/// True iff M(-1; r1, r2, r3) is an L-space, i.e. no realizing pair exists.
bool l_space_test(const SeifertData& s);

/// Orientation reversal: -M(e0; r1, r2, r3) = M(-3 - e0; 1 - r1, 1 - r2, 1 - r3).
SeifertData reflect(const SeifertData& s);

/// |H1(M)| = |e(M)| * q1 q2 q3 where e(M) = e0 + sum r_i.
Integer homology_order(const SeifertData& s);

}  // namespace plumbtight
