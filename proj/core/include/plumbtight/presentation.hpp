#pragma once

// Contact surgery presentations of zero-twisting structures, their rotation data, the induced
// characteristic covectors, and the 3-dimensional invariant d3 computed two independent ways.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plumbtight/plumbing.hpp"
#include "plumbtight/rational.hpp"

namespace plumbtight {

/// Negative stabilization counts n[i][j] of the j-th surgery unknot on leg i.
/// Ranges: n[i][0] in [0, a_0^i - 1], n[i][j] in [0, a_j^i - 2] for j >= 1.
struct Presentation {
  std::array<std::vector<int>, 3> n;

  friend bool operator==(const Presentation&, const Presentation&) = default;
  friend auto operator<=>(const Presentation&, const Presentation&) = default;

  /// Nested arrays [[...],[...],[...]].
  std::string to_json() const;
};

/// Block-matrix layout: one row per block depth, one column per leg; forced entries of -2
/// blocks beyond the first are omitted, missing entries print as '.'.
std::string format_presentation(const PlumbingGraph& gamma, const Presentation& p);

/// Upper bound of n[leg][depth].
int max_stabilizations(const PlumbingGraph& gamma, int leg, std::size_t depth);
bool in_range(const PlumbingGraph& gamma, const Presentation& p);

/// All presentations, in lexicographic order of (leg 0, leg 1, leg 2).
std::vector<Presentation> enumerate_presentations(const PlumbingGraph& gamma);
std::size_t presentation_count(const PlumbingGraph& gamma);

/// Replaces every n by its range complement (negates all rotation numbers).
Presentation conjugate(const PlumbingGraph& gamma, const Presentation& p);

struct RotationData {
  std::array<std::vector<int>, 3> tb;
  std::array<std::vector<int>, 3> rot;
};
RotationData rotation_data(const PlumbingGraph& gamma, const Presentation& p);

using Covector = std::vector<std::int32_t>;

/// <c, z> = 1, <c, x_i> = a_0 - 2 - 2 n_0, <c, v_j> = a_j - 2 - 2 n_j.
Covector gamma_evaluations(const PlumbingGraph& gamma, const Presentation& p);

/// Inverse of gamma_evaluations; nullopt when the evaluations do not come from a presentation.
std::optional<Presentation> decode_presentation(const PlumbingGraph& gamma, const Covector& evaluations);

/// PD(c) = alpha h + sum alpha_i e_i with signs in {-1, +1}; entry 0 is alpha.
struct SignVector {
  std::vector<std::int8_t> s;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

/// Pairing of PD(c) with a class.
int pair(const SignVector& sign, const ClassVector& v);
/// Evaluations of PD(c) on a list of vertex classes.
Covector restrict_to(const SignVector& sign, const std::vector<ClassVector>& vertices);

/// Every sign vector whose Gamma-restriction equals gamma_evaluations(p), sorted ascending.
/// Throws std::logic_error if there is none.
std::vector<SignVector> sign_distributions(const PlumbingGraph& gamma, const EmbeddedBasis& basis, const Presentation& p);
/// The lexicographically smallest element of sign_distributions.
SignVector canonical_sign_vector(const PlumbingGraph& gamma, const EmbeddedBasis& basis, const Presentation& p);

/// d3 = (c^2 - 3 sigma(W) - 2 b2(W)) / 4 + 1 on the plumbing W_Gamma.
Rational d3_via_gamma(const PlumbingGraph& gamma, const Presentation& p);

/// Linking matrix of the smoothed surgery diagram X: two 0-framed unknots and the three first
/// chain components pairwise linked -1, followed by the remaining chain components.
IntMatrix surgery_linking_matrix(const PlumbingGraph& gamma);
/// Rotation numbers of the components of surgery_linking_matrix in the same order.
std::vector<std::int64_t> surgery_rotation_vector(const PlumbingGraph& gamma, const Presentation& p);
/// d3 = (c^2 - 3 sigma(X) - 2 b2(X)) / 4 + #(+1 surgeries).
Rational d3_via_x(const PlumbingGraph& gamma, const Presentation& p);

}  // namespace plumbtight
