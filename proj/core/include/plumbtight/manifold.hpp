#pragma once
// Everything derived once per Seifert manifold and shared by the walker, oracle and reports.
#include <string>
#include <vector>

#include "plumbtight/lattice.hpp"
#include "plumbtight/plumbing.hpp"
#include "plumbtight/presentation.hpp"
#include "plumbtight/seifert.hpp"

namespace plumbtight {

/// Raised when the input is not an L-space; carries the realizing pair.
class NotLSpaceError : public std::invalid_argument {
 public:
  NotLSpaceError(const SeifertData& s, RealizingPair pair);
  RealizingPair pair;
};

/// Raised when an internal invariant of the classification fails.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Manifold {
 public:
  /// Throws std::domain_error if e0 != -1.
  explicit Manifold(const SeifertData& s);

  const SeifertData& seifert() const { return seifert_; }
  const PlumbingGraph& gamma() const { return gamma_; }
  const PlumbingGraph& dual() const { return dual_; }
  const EmbeddedBasis& basis() const { return basis_; }
  const IntMatrix& gamma_form() const { return gamma_form_; }
  const IntMatrix& dual_form() const { return dual_form_; }
  const InverseForm& dual_inverse() const { return dual_inverse_; }
  Integer homology_order() const { return h1_; }

  Covector dual_covector(const SignVector& sign) const { return restrict_to(sign, basis_.dual); }
  Covector gamma_covector(const SignVector& sign) const { return restrict_to(sign, basis_.gamma); }
  /// Canonical representative of K modulo 2 Q_Gamma'.
  std::vector<std::int64_t> spin_c_label(const Covector& k) const { return spin_c_.reduce(k); }
  std::string spin_c_string(const Covector& k) const;
  /// (K^2 + |Gamma'|) / 4 on the dual lattice.
  Rational degree(const Covector& k) const;

 private:
  SeifertData seifert_;
  PlumbingGraph gamma_;
  PlumbingGraph dual_;
  EmbeddedBasis basis_;
  IntMatrix gamma_form_;
  IntMatrix dual_form_;
  InverseForm dual_inverse_;
  CosetReducer spin_c_;
  Integer h1_;
};

}  // namespace plumbtight
