#pragma once
// Brute-force full-path search on the dual lattice: good initial vectors per spin^c,
// d-invariants, and the d3 = d tightness test.
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "plumbtight/lattice.hpp"
#include "plumbtight/manifold.hpp"
#include "plumbtight/plumbing.hpp"
#include "plumbtight/presentation.hpp"

namespace plumbtight {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 5e7 unless PLUMBTIGHT_CAP holds a positive integer.
std::size_t capacity_cap();

struct OracleOptions {
  unsigned jobs = 1;
  bool memoize = true;
  std::optional<std::size_t> cap;
};

struct SpinCClass {
  std::vector<std::int64_t> label;  // reduced modulo 2Q
  std::vector<Covector> good_initial;
  Rational d_minus;                  // d(-M, t) = max (K^2 + |Gamma'|) / 4
};

struct OracleResult {
  std::size_t box_size = 0;
  std::size_t good_count = 0;
  Integer det;                        // |det Q_Gamma'|
  std::vector<SpinCClass> classes;    // sorted by label
  /// Every realized class has a single good initial vector and all |det| classes are realized.
  bool l_space() const;
  const SpinCClass* find(const std::vector<std::int64_t>& label) const;
};

/// Number of characteristic vectors with v.v + 2 <= <K,v> <= -v.v.
std::size_t initial_box_size(const PlumbingGraph& dual);

/// Explores every legal +2PD continuation from every initial-box vector. A vector is good when
/// every branch reaches the terminal box. Throws CapacityError when the box exceeds the cap.
OracleResult osz_good_vectors(const PlumbingGraph& dual, const OracleOptions& options = {});

/// Oracle-side L-space test. A degenerate form (b1 > 0) is never an L-space.
bool oracle_l_space(const PlumbingGraph& dual, const OracleOptions& options = {});

/// Good or dropping, for a single covector, exploring all branches.
bool osz_good(const PlumbingGraph& dual, const Covector& k);

/// d(-M, t) for the class of a characteristic covector. Throws std::domain_error if unrealized.
Rational d_invariant(const PlumbingGraph& dual, const OracleResult& result, const Covector& k);

class TightnessOracle {
 public:
  TightnessOracle(const Manifold& m, const OracleOptions& options = {});
  const OracleResult& result() const { return result_; }
  /// d3(p) == -d(-M, t_p).
  bool tight(const Presentation& p) const;
  /// d(M, t_p) = -d(-M, t_p).
  Rational d(const Presentation& p) const;

 private:
  const Manifold& m_;
  OracleResult result_;
};

}  // namespace plumbtight
