#include "plumbtight/plumbing.hpp"

#include <sstream>

namespace plumbtight {

std::size_t PlumbingGraph::index(int leg, std::size_t depth) const {
  std::size_t offset = 1;
  for (int l = 0; l < leg; ++l) offset += legs[l].size();
  if (depth >= legs[leg].size()) throw std::out_of_range("PlumbingGraph::index: depth out of range");
  return offset + depth;
}

int PlumbingGraph::weight(std::size_t vertex) const {
  if (vertex == 0) return center_weight;
  std::size_t v = vertex - 1;
  for (const auto& leg : legs) {
    if (v < leg.size()) return leg[v];
    v -= leg.size();
  }
  throw std::out_of_range("PlumbingGraph::weight: vertex out of range");
}

IntMatrix PlumbingGraph::intersection_form() const {
  IntMatrix q(vertex_count(), vertex_count());
  q(0, 0) = center_weight;
  for (int l = 0; l < 3; ++l) {
    for (std::size_t d = 0; d < legs[l].size(); ++d) {
      const std::size_t v = index(l, d);
      q(v, v) = legs[l][d];
      const std::size_t prev = d == 0 ? 0 : index(l, d - 1);
      q(v, prev) = q(prev, v) = 1;
    }
  }
  return q;
}

std::vector<std::size_t> PlumbingGraph::bad_vertices() const {
  std::vector<std::size_t> bad;
  int center_degree = 0;
  for (const auto& leg : legs) center_degree += leg.empty() ? 0 : 1;
  if (center_weight > -center_degree) bad.push_back(0);
  for (int l = 0; l < 3; ++l) {
    for (std::size_t d = 0; d < legs[l].size(); ++d) {
      const int degree = d + 1 < legs[l].size() ? 2 : 1;
      if (legs[l][d] > -degree) bad.push_back(index(l, d));
    }
  }
  return bad;
}

std::string PlumbingGraph::to_json() const {
  std::ostringstream os;
  os << "{\"center\":" << center_weight << ",\"legs\":[";
  for (int l = 0; l < 3; ++l) {
    os << (l ? "," : "") << '[';
    for (std::size_t d = 0; d < legs[l].size(); ++d) os << (d ? "," : "") << legs[l][d];
    os << ']';
  }
  os << "]}";
  return os.str();
}

namespace {

PlumbingGraph star_from(int center, const std::array<Rational, 3>& r) {
  PlumbingGraph g;
  g.center_weight = center;
  for (int i = 0; i < 3; ++i)
    for (int a : neg_cf_expand(r[i]).digits) g.legs[i].push_back(-a);
  return g;
}

}  // namespace

PlumbingGraph build_gamma(const SeifertData& s) {
  if (s.e0 != -1) throw std::domain_error("build_gamma: e0 must be -1");
  return star_from(-1, s.r);
}

PlumbingGraph build_gamma_dual(const SeifertData& s) {
  if (s.e0 != -1) throw std::domain_error("build_gamma_dual: e0 must be -1");
  return star_from(-2, {Rational(1) - s.r[0], Rational(1) - s.r[1], Rational(1) - s.r[2]});
}

int class_dot(std::span<const int> a, std::span<const int> b) {
  int s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s -= a[i] * b[i];
  return s;
}

IntMatrix EmbeddedBasis::gram() const {
  const std::size_t n = gamma.size() + dual.size();
  IntMatrix g(n, n);
  auto vec = [&](std::size_t i) -> const ClassVector& { return i < gamma.size() ? gamma[i] : dual[i - gamma.size()]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = class_dot(vec(i), vec(j));
  return g;
}

std::string EmbeddedBasis::to_json() const {
  std::ostringstream os;
  auto emit = [&](const std::vector<ClassVector>& vs) {
    os << '[';
    for (std::size_t v = 0; v < vs.size(); ++v) {
      os << (v ? "," : "") << '[';
      for (std::size_t j = 0; j < vs[v].size(); ++j) os << (j ? "," : "") << vs[v][j];
      os << ']';
    }
    os << ']';
  };
  os << "{\"generators\":" << generator_count << ",\"gamma\":";
  emit(gamma);
  os << ",\"gamma_dual\":";
  emit(dual);
  os << '}';
  return os.str();
}

EmbeddedBasis blowup_embedding(const PlumbingGraph& gamma, const PlumbingGraph& gamma_dual) {
  if (gamma.center_weight != -1 || gamma_dual.center_weight != -2)
    throw ConstructionError("blowup_embedding: expected centers -1 and -2");

  EmbeddedBasis basis;
  int total = 4;
  for (int l = 0; l < 3; ++l) total += static_cast<int>(gamma.legs[l].size() + gamma_dual.legs[l].size()) - 1;
  basis.generator_count = total;
  const std::size_t width = static_cast<std::size_t>(total) + 1;

  basis.gamma.assign(gamma.vertex_count(), ClassVector(width, 0));
  basis.dual.assign(gamma_dual.vertex_count(), ClassVector(width, 0));
  basis.gamma_generators.assign(gamma.vertex_count(), {});
  basis.dual_generators.assign(gamma_dual.vertex_count(), {});

  // Blowing up p = l1 n l2 n l3 gives z = e1; blowing up l n l_i gives z' = h - e2 - e3 - e4.
  basis.gamma[0][1] = 1;
  basis.dual[0][0] = 1;
  for (int l = 0; l < 3; ++l) basis.dual[0][2 + l] = -1;

  int next_generator = 5;
  for (int leg = 0; leg < 3; ++leg) {
    const auto& targets = gamma.legs[leg];
    const auto& dual_targets = gamma_dual.legs[leg];
    if (targets.empty() || dual_targets.empty()) throw ConstructionError("blowup_embedding: empty leg");

    // Manifold-side and dual-side chains for this leg; the open vertex of each chain is its back().
    std::vector<ClassVector> side_m;
    std::vector<LegVertexGenerators> gens_m;
    std::vector<ClassVector> side_d;
    std::vector<LegVertexGenerators> gens_d;

    ClassVector x(width, 0);
    x[0] = 1;
    x[1] = -1;
    x[2 + leg] = -1;
    side_m.push_back(x);
    gens_m.push_back({0, {1, 2 + leg}});

    ClassVector exceptional(width, 0);
    int exceptional_gen = 2 + leg;
    exceptional[exceptional_gen] = 1;
    bool dual_open = false;  // before the first dual vertex exists, the open dual vertex is z'

    auto deficit = [&](const ClassVector& v, int target) { return class_dot(v, v) - target; };

    for (;;) {
      const int def_m = deficit(side_m.back(), targets[side_m.size() - 1]);
      const int def_d = dual_open ? deficit(side_d.back(), dual_targets[side_d.size() - 1]) : 0;
      if (def_m < 0 || def_d < 0) throw ConstructionError("blowup_embedding: self-intersection overshoot");
      if (def_m > 0 && def_d > 0) throw ConstructionError("blowup_embedding: both chains still open");
      if (def_m == 0 && def_d == 0) {
        if (side_m.size() == targets.size() && side_d.size() == dual_targets.size()) break;
        throw ConstructionError("blowup_embedding: chains closed with the wrong length");
      }
      const int f = next_generator++;
      if (f > total) throw ConstructionError("blowup_embedding: generator budget exceeded");
      if (def_m > 0) {
        // Blow up the point exceptional n (open manifold vertex); the old exceptional joins the dual chain.
        side_m.back()[f] -= 1;
        gens_m.back().rest.push_back(f);
        exceptional[f] -= 1;
        if (side_d.size() == dual_targets.size()) throw ConstructionError("blowup_embedding: dual chain too long");
        side_d.push_back(exceptional);
        gens_d.push_back({exceptional_gen, {f}});
        dual_open = true;
      } else {
        side_d.back()[f] -= 1;
        gens_d.back().rest.push_back(f);
        exceptional[f] -= 1;
        if (side_m.size() == targets.size()) throw ConstructionError("blowup_embedding: manifold chain too long");
        side_m.push_back(exceptional);
        gens_m.push_back({exceptional_gen, {f}});
      }
      exceptional.assign(width, 0);
      exceptional[f] = 1;
      exceptional_gen = f;
    }
    basis.gluing_generator[leg] = exceptional_gen;

    for (std::size_t d = 0; d < side_m.size(); ++d) {
      basis.gamma[gamma.index(leg, d)] = side_m[d];
      basis.gamma_generators[gamma.index(leg, d)] = gens_m[d];
    }
    for (std::size_t d = 0; d < side_d.size(); ++d) {
      basis.dual[gamma_dual.index(leg, d)] = side_d[d];
      basis.dual_generators[gamma_dual.index(leg, d)] = gens_d[d];
    }
  }
  if (next_generator != total + 1) throw ConstructionError("blowup_embedding: generator count mismatch");

  if (basis.gram() != direct_sum(gamma.intersection_form(), gamma_dual.intersection_form()))
    throw ConstructionError("blowup_embedding: Gram matrix differs from Q_Gamma (+) Q_Gamma'");
  return basis;
}

bool is_characteristic(const IntMatrix& form, std::span<const std::int32_t> k) {
  for (std::size_t v = 0; v < form.rows(); ++v)
    if (((k[v] - form(v, v)) % 2 + 2) % 2 != 0) return false;
  return true;
}

bool spin_c_equal(const IntMatrix& form, std::span<const std::int32_t> k1, std::span<const std::int32_t> k2) {
  if (!is_characteristic(form, k1) || !is_characteristic(form, k2))
    throw std::domain_error("spin_c_equal: covector is not characteristic");
  IntMatrix twice = form;
  for (std::size_t i = 0; i < form.rows(); ++i)
    for (std::size_t j = 0; j < form.cols(); ++j) twice(i, j) *= 2;
  return CosetReducer(twice).same_coset(k1, k2);
}

}  // namespace plumbtight
