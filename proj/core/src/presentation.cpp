#include "plumbtight/presentation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace plumbtight {

std::string Presentation::to_json() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < 3; ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < n[i].size(); ++j) os << (j ? "," : "") << n[i][j];
    os << ']';
  }
  os << ']';
  return os.str();
}

std::string format_presentation(const PlumbingGraph& gamma, const Presentation& p) {
  std::array<std::vector<std::string>, 3> cols;
  for (int i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < p.n[i].size(); ++j)
      if (j == 0 || gamma.legs[i][j] != -2) cols[i].push_back(std::to_string(p.n[i][j]));
  const std::size_t rows = std::max({cols[0].size(), cols[1].size(), cols[2].size()});
  std::ostringstream os;
  os << '(';
  for (std::size_t r = 0; r < rows; ++r) {
    if (r) os << " | ";
    for (int i = 0; i < 3; ++i) os << (i ? " " : "") << (r < cols[i].size() ? cols[i][r] : ".");
  }
  os << ')';
  return os.str();
}

int max_stabilizations(const PlumbingGraph& gamma, int leg, std::size_t depth) {
  const int a = -gamma.legs[leg][depth];
  return depth == 0 ? a - 1 : a - 2;
}

bool in_range(const PlumbingGraph& gamma, const Presentation& p) {
  for (int i = 0; i < 3; ++i) {
    if (p.n[i].size() != gamma.legs[i].size()) return false;
    for (std::size_t j = 0; j < p.n[i].size(); ++j)
      if (p.n[i][j] < 0 || p.n[i][j] > max_stabilizations(gamma, i, j)) return false;
  }
  return true;
}

std::size_t presentation_count(const PlumbingGraph& gamma) {
  std::size_t count = 1;
  for (int i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < gamma.legs[i].size(); ++j) count *= static_cast<std::size_t>(max_stabilizations(gamma, i, j) + 1);
  return count;
}

std::vector<Presentation> enumerate_presentations(const PlumbingGraph& gamma) {
  std::vector<Presentation> out;
  out.reserve(presentation_count(gamma));
  Presentation p;
  for (int i = 0; i < 3; ++i) p.n[i].assign(gamma.legs[i].size(), 0);
  // Odometer with the last entry of leg 2 varying fastest, giving lexicographic order.
  std::vector<std::pair<int, std::size_t>> slots;
  for (int i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < gamma.legs[i].size(); ++j) slots.emplace_back(i, j);
  for (;;) {
    out.push_back(p);
    std::size_t k = slots.size();
    while (k > 0) {
      auto [i, j] = slots[k - 1];
      if (p.n[i][j] < max_stabilizations(gamma, i, j)) {
        ++p.n[i][j];
        break;
      }
      p.n[i][j] = 0;
      --k;
    }
    if (k == 0) break;
  }
  return out;
}

Presentation conjugate(const PlumbingGraph& gamma, const Presentation& p) {
  Presentation q = p;
  for (int i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < q.n[i].size(); ++j) q.n[i][j] = max_stabilizations(gamma, i, j) - p.n[i][j];
  return q;
}

RotationData rotation_data(const PlumbingGraph& gamma, const Presentation& p) {
  RotationData r;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < gamma.legs[i].size(); ++j) {
      const int a = -gamma.legs[i][j];
      r.tb[i].push_back(j == 0 ? -a : -a + 1);
      r.rot[i].push_back(j == 0 ? a - 1 - 2 * p.n[i][j] : a - 2 - 2 * p.n[i][j]);
    }
  }
  return r;
}

Covector gamma_evaluations(const PlumbingGraph& gamma, const Presentation& p) {
  if (!in_range(gamma, p)) throw std::domain_error("gamma_evaluations: presentation out of range");
  Covector k(gamma.vertex_count());
  k[0] = 1;
  for (int i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < gamma.legs[i].size(); ++j) k[gamma.index(i, j)] = -gamma.legs[i][j] - 2 - 2 * p.n[i][j];
  return k;
}

std::optional<Presentation> decode_presentation(const PlumbingGraph& gamma, const Covector& ev) {
  if (ev.size() != gamma.vertex_count() || ev[0] != 1) return std::nullopt;
  Presentation p;
  for (int i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < gamma.legs[i].size(); ++j) {
      const int diff = -gamma.legs[i][j] - 2 - ev[gamma.index(i, j)];
      if (diff % 2 != 0) return std::nullopt;
      p.n[i].push_back(diff / 2);
    }
  }
  if (!in_range(gamma, p)) return std::nullopt;
  return p;
}

int pair(const SignVector& sign, const ClassVector& v) {
  int s = sign.s[0] * v[0];
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) s -= sign.s[i] * v[i];
  return s;
}

Covector restrict_to(const SignVector& sign, const std::vector<ClassVector>& vertices) {
  Covector k;
  k.reserve(vertices.size());
  for (const auto& v : vertices) k.push_back(pair(sign, v));
  return k;
}

namespace {

// Sign assignments of one leg's generators compatible with that leg's manifold-side evaluations.
std::vector<std::vector<std::int8_t>> leg_solutions(const PlumbingGraph& gamma, const EmbeddedBasis& basis, int leg,
                                                    const std::vector<int>& generators, std::int8_t alpha,
                                                    const Covector& target) {
  const std::size_t width = static_cast<std::size_t>(basis.generator_count) + 1;
  std::vector<std::size_t> vertices;
  for (std::size_t d = 0; d < gamma.legs[leg].size(); ++d) vertices.push_back(gamma.index(leg, d));
  // Each vertex is checked once its largest generator is assigned.
  std::vector<std::vector<std::size_t>> check_at(generators.size());
  for (auto v : vertices) {
    std::size_t last = 0;
    bool any = false;
    for (std::size_t g = 0; g < generators.size(); ++g)
      if (basis.gamma[v][generators[g]] != 0) {
        last = g;
        any = true;
      }
    if (!any) throw std::logic_error("sign_distributions: leg vertex without leg generators");
    check_at[last].push_back(v);
  }
  SignVector partial;
  partial.s.assign(width, 0);
  partial.s[0] = alpha;
  partial.s[1] = -1;
  std::vector<std::vector<std::int8_t>> out;
  std::function<void(std::size_t)> dfs = [&](std::size_t g) {
    if (g == generators.size()) {
      std::vector<std::int8_t> assignment;
      for (int gen : generators) assignment.push_back(partial.s[gen]);
      out.push_back(std::move(assignment));
      return;
    }
    for (std::int8_t sgn : {std::int8_t(-1), std::int8_t(1)}) {
      partial.s[generators[g]] = sgn;
      bool ok = true;
      for (auto v : check_at[g])
        if (pair(partial, basis.gamma[v]) != target[v]) {
          ok = false;
          break;
        }
      if (ok) dfs(g + 1);
    }
    partial.s[generators[g]] = 0;
  };
  dfs(0);
  return out;
}

std::array<std::vector<int>, 3> leg_generators(const PlumbingGraph& gamma, const PlumbingGraph& dual, const EmbeddedBasis& basis) {
  std::array<std::vector<int>, 3> gens;
  for (int leg = 0; leg < 3; ++leg) {
    std::vector<bool> used(static_cast<std::size_t>(basis.generator_count) + 1, false);
    for (std::size_t d = 0; d < gamma.legs[leg].size(); ++d)
      for (std::size_t g = 2; g < used.size(); ++g)
        if (basis.gamma[gamma.index(leg, d)][g] != 0) used[g] = true;
    for (std::size_t d = 0; d < dual.legs[leg].size(); ++d)
      for (std::size_t g = 2; g < used.size(); ++g)
        if (basis.dual[dual.index(leg, d)][g] != 0) used[g] = true;
    for (std::size_t g = 2; g < used.size(); ++g)
      if (used[g]) gens[leg].push_back(static_cast<int>(g));
  }
  return gens;
}

PlumbingGraph dual_shape(const EmbeddedBasis& basis) {
  // Recover leg lengths of Gamma' from the generator records (center excluded).
  PlumbingGraph g;
  g.center_weight = -2;
  // dual_generators[v] for v >= 1; legs are contiguous and each first vertex starts at e_{leg+2}.
  int leg = -1;
  for (std::size_t v = 1; v < basis.dual.size(); ++v) {
    const int start = basis.dual_generators[v].start;
    if (start >= 2 && start <= 4) leg = start - 2;
    g.legs[leg].push_back(class_dot(basis.dual[v], basis.dual[v]));
  }
  return g;
}

}  // namespace

std::vector<SignVector> sign_distributions(const PlumbingGraph& gamma, const EmbeddedBasis& basis, const Presentation& p) {
  const Covector target = gamma_evaluations(gamma, p);
  const auto gens = leg_generators(gamma, dual_shape(basis), basis);
  const std::size_t width = static_cast<std::size_t>(basis.generator_count) + 1;
  std::vector<SignVector> out;
  for (std::int8_t alpha : {std::int8_t(-1), std::int8_t(1)}) {
    std::array<std::vector<std::vector<std::int8_t>>, 3> per_leg;
    bool empty = false;
    for (int leg = 0; leg < 3; ++leg) {
      per_leg[leg] = leg_solutions(gamma, basis, leg, gens[leg], alpha, target);
      if (per_leg[leg].empty()) empty = true;
    }
    if (empty) continue;
    SignVector sv;
    sv.s.assign(width, 0);
    sv.s[0] = alpha;
    sv.s[1] = -1;
    for (const auto& s0 : per_leg[0]) {
      for (std::size_t g = 0; g < gens[0].size(); ++g) sv.s[gens[0][g]] = s0[g];
      for (const auto& s1 : per_leg[1]) {
        for (std::size_t g = 0; g < gens[1].size(); ++g) sv.s[gens[1][g]] = s1[g];
        for (const auto& s2 : per_leg[2]) {
          for (std::size_t g = 0; g < gens[2].size(); ++g) sv.s[gens[2][g]] = s2[g];
          out.push_back(sv);
        }
      }
    }
  }
  if (out.empty()) throw std::logic_error("sign_distributions: no compatible sign vector");
  std::sort(out.begin(), out.end());
  return out;
}

SignVector canonical_sign_vector(const PlumbingGraph& gamma, const EmbeddedBasis& basis, const Presentation& p) {
  return sign_distributions(gamma, basis, p).front();
}

Rational d3_via_gamma(const PlumbingGraph& gamma, const Presentation& p) {
  const IntMatrix q = gamma.intersection_form();
  const Covector ev = gamma_evaluations(gamma, p);
  const std::vector<std::int64_t> rhs(ev.begin(), ev.end());
  const Rational c2 = inverse_square(q, rhs);
  const auto sb = signature_b2(q);
  return (c2 - Rational(3 * sb.signature) - Rational(2 * sb.b2)) / Rational(4) + Rational(1);
}

IntMatrix surgery_linking_matrix(const PlumbingGraph& gamma) {
  const std::size_t n = 2 + gamma.vertex_count() - 1;
  IntMatrix q(n, n);
  // Components: 0,1 the +1 contact surgeries; then each leg's chain K_0, K_1, ... in order.
  std::vector<std::size_t> first;
  std::size_t idx = 2;
  for (int i = 0; i < 3; ++i) {
    first.push_back(idx);
    for (std::size_t j = 0; j < gamma.legs[i].size(); ++j, ++idx) {
      q(idx, idx) = j == 0 ? gamma.legs[i][j] - 1 : gamma.legs[i][j];
      if (j > 0) q(idx, idx - 1) = q(idx - 1, idx) = 1;
    }
  }
  const std::vector<std::size_t> parallel{0, 1, first[0], first[1], first[2]};
  for (std::size_t a = 0; a < parallel.size(); ++a)
    for (std::size_t b = 0; b < parallel.size(); ++b)
      if (a != b) q(parallel[a], parallel[b]) = -1;
  return q;
}

std::vector<std::int64_t> surgery_rotation_vector(const PlumbingGraph& gamma, const Presentation& p) {
  const RotationData rd = rotation_data(gamma, p);
  std::vector<std::int64_t> r{0, 0};
  for (int i = 0; i < 3; ++i)
    for (int x : rd.rot[i]) r.push_back(x);
  return r;
}

Rational d3_via_x(const PlumbingGraph& gamma, const Presentation& p) {
  if (!in_range(gamma, p)) throw std::domain_error("d3_via_x: presentation out of range");
  const IntMatrix q = surgery_linking_matrix(gamma);
  const auto rot = surgery_rotation_vector(gamma, p);
  const Rational c2 = inverse_square(q, rot);
  const auto sb = signature_b2(q);
  constexpr int kPlusOneSurgeries = 2;
  return (c2 - Rational(3 * sb.signature) - Rational(2 * sb.b2)) / Rational(4) + Rational(kPlusOneSurgeries);
}

}  // namespace plumbtight
