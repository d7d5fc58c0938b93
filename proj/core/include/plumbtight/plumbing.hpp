#pragma once

// Star-shaped plumbing graphs, their intersection forms, and the embedding of both the
// manifold-side graph and its dual into H_2(CP^2 # n(-CP^2)) = Z<h, e_1, ..., e_n>.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumbtight/lattice.hpp"
#include "plumbtight/seifert.hpp"

namespace plumbtight {

/// Star-shaped weighted tree: a center plus three legs listed outward from the center.
struct PlumbingGraph {
  int center_weight = 0;
  std::array<std::vector<int>, 3> legs;

  std::size_t vertex_count() const { return 1 + legs[0].size() + legs[1].size() + legs[2].size(); }
  /// Vertex numbering: 0 is the center, then leg 0 outward, leg 1 outward, leg 2 outward.
  std::size_t index(int leg, std::size_t depth) const;
  int weight(std::size_t vertex) const;

  IntMatrix intersection_form() const;
  /// Vertices v with weight > -degree(v).
  std::vector<std::size_t> bad_vertices() const;

  /// {"center":c,"legs":[[...],[...],[...]]}
  std::string to_json() const;

  friend bool operator==(const PlumbingGraph&, const PlumbingGraph&) = default;
};

/// Manifold-side graph Gamma: center -1, legs -a_j^i from the expansions of r_i.
PlumbingGraph build_gamma(const SeifertData& s);
/// Dual graph Gamma': center -2, legs from the expansions of 1 - r_i.
PlumbingGraph build_gamma_dual(const SeifertData& s);

/// Thrown when the blow-up simulation produces classes inconsistent with the two graphs.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Generators of a leg vertex e_s - sum e_j: its starting generator and the subtracted ones in
/// blow-up order (the last entry is the vertex's last generator).
struct LegVertexGenerators {
  int start = 0;
  std::vector<int> rest;
};

/// Coefficient vector over (h, e_1, ..., e_n); index 0 is h.
using ClassVector = std::vector<int>;

/// Pairing of two classes with h.h = 1 and e_i.e_i = -1.
int class_dot(std::span<const int> a, std::span<const int> b);

struct EmbeddedBasis {
  int generator_count = 0;  // n
  std::vector<ClassVector> gamma;  // indexed like PlumbingGraph::index on Gamma
  std::vector<ClassVector> dual;   // indexed like PlumbingGraph::index on Gamma'
  /// Leg structure of Gamma' vertices (entry 0, the center, is unused).
  std::vector<LegVertexGenerators> dual_generators;
  /// Leg structure of Gamma leg vertices; for first vertices x_i the start is h (index 0).
  std::vector<LegVertexGenerators> gamma_generators;
  /// The exceptional class left over at the end of each leg (the gluing sphere), per leg.
  std::array<int, 3> gluing_generator{};

  /// Gram matrix of gamma followed by dual.
  IntMatrix gram() const;
  std::string to_json() const;
};

/// Simulates the blow-ups of the three lines through p and the line l, producing classes for
/// every vertex of Gamma and Gamma'. Throws ConstructionError if the Gram matrix does not equal
/// Q_Gamma (+) Q_Gamma'.
EmbeddedBasis blowup_embedding(const PlumbingGraph& gamma, const PlumbingGraph& gamma_dual);

/// True iff <K, v> = v.v mod 2 for every vertex.
bool is_characteristic(const IntMatrix& form, std::span<const std::int32_t> covector);

/// K1 - K2 in 2 Q Z^n. Throws std::domain_error if either covector is not characteristic.
bool spin_c_equal(const IntMatrix& form, std::span<const std::int32_t> k1, std::span<const std::int32_t> k2);

}  // namespace plumbtight
