#pragma once
// Slope arithmetic of thickened singular-fiber neighborhoods, Farey predicates, and the
// overtwistedness / isotopy tables on stabilization matrices.
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "plumbtight/plumbing.hpp"
#include "plumbtight/presentation.hpp"
#include "plumbtight/seifert.hpp"

namespace plumbtight {

/// 2x2 integer matrix ((a, b), (c, d)).
struct SlopeMatrix {
  Integer a, b, c, d;
  Integer det() const { return a * d - b * c; }
  friend SlopeMatrix operator*(const SlopeMatrix& x, const SlopeMatrix& y);
  friend bool operator==(const SlopeMatrix&, const SlopeMatrix&) = default;
};

/// Slope num/den as a coprime pair with den >= 0; infinity is (1, 0).
struct Slope {
  Integer num;
  Integer den;
  Slope(Integer num, Integer den);
  static Slope infinity() { return Slope(1, 0); }
  explicit Slope(const Rational& r) : Slope(r.numerator(), r.denominator()) {}
  bool is_infinite() const { return den == 0; }
  Rational value() const;  // throws std::domain_error for infinity
  std::string str() const;
  friend bool operator==(const Slope&, const Slope&) = default;
};

/// ((-a, 1), (-1, 0)).
SlopeMatrix digit_matrix(int a);
/// M(a_k) ... M(a_0); the first row (alpha, beta) satisfies alpha / beta = eval_cf(cf).
SlopeMatrix cf_to_matrix(const NegCF& cf);
/// beta / alpha of the first row of cf_to_matrix, i.e. 1 / eval_cf(cf).
Slope first_row_slope(const SlopeMatrix& m);

/// Background-basis slope after peeling m slices of block `truncate_at` (1 <= truncate_at <= size):
/// the first column (x, y) of M(a_0)^{-1} ... M(a_{truncate_at - 1})^{-1} ((1, 0), (m, 1)), as x / y.
/// Throws std::domain_error for an index out of range or m outside [0, a_{truncate_at - 1}].
Slope peeled_slope(const NegCF& leg, std::size_t truncate_at, int m);

/// Image of the meridian under the gluing map of a leg: 1 - r_1 for the first leg, -r_i otherwise.
Slope critical_slope(const SeifertData& s, int leg);

/// Determinant +-1.
bool is_basic_slice(const Slope& s1, const Slope& s2);
/// s and s0 form a basic slice, s' lies strictly between s0 and s and forms a basic slice with s.
bool is_cf_block(const Slope& s0, const Slope& s, const Slope& s_prime);

/// True when p (or its conjugate), after some leg permutation, meets the overtwistedness
/// inequalities for the two stabilization patterns. False means no claim.
bool ot_check(const Presentation& p, const PlumbingGraph& gamma);

/// Presentations related to p by one table move (in either orientation of signs), in range.
std::vector<Presentation> isotopy_moves(const Presentation& p, const PlumbingGraph& gamma);

/// Connected components of the move graph restricted to the given presentations.
std::vector<std::vector<Presentation>> isotopy_closure(const std::vector<Presentation>& presentations,
                                                       const PlumbingGraph& gamma);

}  // namespace plumbtight
