#pragma once
// Slow, independent re-implementations used as test oracles. None of these share code with the
// library beyond the plain data types.
#include <optional>
#include <vector>

#include "plumbtight/plumbing.hpp"
#include "plumbtight/presentation.hpp"

namespace plumbtight::testing {

/// Laplace expansion.
Integer naive_determinant(const IntMatrix& m);

/// Gauss-Jordan over Q; nullopt if singular.
std::optional<std::vector<Rational>> naive_solve(const IntMatrix& m, const std::vector<Rational>& rhs);

/// Signature of a nondegenerate symmetric matrix: Descartes' rule applied to the characteristic
/// polynomial (Faddeev-LeVerrier), exact because all roots are real.
int naive_signature(const IntMatrix& m);

/// Any coprime (m, a) with m < 1/r3 scanned without the bound shortcut.
bool naive_realizable(const SeifertData& s, int m_limit = 64);

/// Every (alpha, alpha_1..alpha_n) in {-1,+1}^(n+1) whose Gamma restriction matches p.
std::vector<SignVector> naive_sign_distributions(const EmbeddedBasis& basis, const Covector& gamma_evaluations);

/// Number of rotation-number tuples with rot = tb + 1 mod 2 and |rot| <= -tb - 1.
std::size_t naive_rotation_tuples(const PlumbingGraph& gamma);

/// K^2 = K^T Q^{-1} K.
Rational naive_square(const IntMatrix& q, const Covector& k);

/// All +2PD continuations reach the terminal box (no memo).
bool naive_good(const IntMatrix& q, const Covector& k);

/// 2Q x = k1 - k2 has an integral solution.
bool naive_spin_c_equal(const IntMatrix& q, const Covector& k1, const Covector& k2);

/// Max of (K^2 + n)/4 over good initial-box vectors spin^c-equal to k. nullopt if none.
std::optional<Rational> naive_d_minus(const IntMatrix& q, const Covector& k);

/// (K^2 - 3 sigma - 2 b2)/4 + 1 for the Gamma evaluations of p, via naive_solve.
Rational naive_d3(const PlumbingGraph& gamma, const Presentation& p);

}  // namespace plumbtight::testing
