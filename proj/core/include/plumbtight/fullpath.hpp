#pragma once
// Full paths of characteristic covectors on the dual plumbing, walked on sign vectors
// (leg reductions and central steps/turns), and the resulting partition of presentations.
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "plumbtight/manifold.hpp"
#include "plumbtight/presentation.hpp"

namespace plumbtight {

/// initial: -2PD steps toward the initial end; terminal: +2PD steps toward the terminal end.
enum class Direction { initial, terminal };

/// Thrown when a step is requested whose precondition does not hold.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct PathState {
  SignVector sign;
  Covector cov;  // restriction of sign to Gamma'
};

PathState make_state(const Manifold& m, SignVector sign);

/// K -> K + 2 sign_of_step PD(v) on a dual vertex, realized on the sign vector as c + 2 sign_of_step v.
/// Requires <K,v> = -sign_of_step v.v and a sign vector that stays in {-1,+1}.
PathState step(const Manifold& m, const PathState& state, std::size_t v, int sign_of_step);

/// True iff <K,v> equals the extreme value that calls for a step in this direction.
bool needs_step(const Manifold& m, const Covector& k, std::size_t v, Direction d);

/// Applies leg steps until none is pending. Vertices are scanned leg by leg from the center
/// outward unless an order is supplied, in which case pending vertices are picked at random.
PathState reduce_legs(const Manifold& m, PathState state, Direction d, std::mt19937_64* shuffle = nullptr,
                      std::size_t* steps = nullptr);

/// The central step at z' after reduce_legs; reinterprets the signs along one dual leg when the
/// h sign disagrees. Throws ContractError if the center is not at its step value or the turn
/// cannot be completed.
PathState central_turn(const Manifold& m, const PathState& state, Direction d);

bool in_initial_box(const Manifold& m, const Covector& k);
bool in_terminal_box(const Manifold& m, const Covector& k);

enum class VerdictKind { proper_ends, drop_out };

struct PathVerdict {
  VerdictKind kind = VerdictKind::drop_out;
  /// Presentations met in presentable states, in order of appearance (starting one included).
  std::vector<Presentation> component;
  /// Covector where the walk stopped: the proper end, or the state that drops out.
  Covector end;
  /// Index of the dual vertex whose bound failed (drop-outs only).
  std::optional<std::size_t> drop_vertex;
  std::size_t steps = 0;
  std::size_t turns = 0;
};

/// Step budget 4 * sum |v.v| * |Gamma'|.
std::size_t step_cap(const Manifold& m);

/// Walks from the canonical sign vector of p. Throws InvariantError when the step budget runs out.
PathVerdict walk(const Manifold& m, const Presentation& p, Direction d);
PathVerdict walk_from(const Manifold& m, const SignVector& start, Direction d);

/// Pure covector walk without sign vectors, used as an internal cross-check.
struct LatticeWalk {
  VerdictKind kind = VerdictKind::drop_out;
  Covector end;
  std::vector<Covector> visited;
};
LatticeWalk lattice_walk(const Manifold& m, Covector k, Direction d);

struct Component {
  VerdictKind verdict = VerdictKind::drop_out;
  std::vector<Presentation> members;  // sorted
  std::string spin_c;                 // of the first member
  std::vector<std::int64_t> spin_c_label;
  /// Tight components only.
  std::optional<Rational> d3;
  std::optional<Rational> d;
  Covector initial_end;
  Covector terminal_end;
};

/// Tightness verdict plus its path component for one presentation.
struct PathComponent {
  VerdictKind verdict = VerdictKind::drop_out;
  PathVerdict initial;
  PathVerdict terminal;
  std::vector<Presentation> members;
  std::string spin_c;
  std::optional<Rational> d_candidate;
};
PathComponent path_component(const Manifold& m, const Presentation& p);

struct ClassificationReport {
  SeifertData manifold;
  Integer h1;
  PlumbingGraph gamma;
  PlumbingGraph dual;
  std::size_t presentation_count = 0;
  std::vector<Component> classes;  // tight first, then overtwisted; each block sorted by members
  std::size_t tight_count() const;
};

/// Throws NotLSpaceError for non-L-spaces and InvariantError when a checked invariant fails
/// (spin^c clash, d3 != d, sign walker vs. lattice walker disagreement).
ClassificationReport classify(const SeifertData& s);
ClassificationReport classify(const Manifold& m);

/// Index of the component containing p.
std::size_t find_class(const ClassificationReport& r, const Presentation& p);

}  // namespace plumbtight
