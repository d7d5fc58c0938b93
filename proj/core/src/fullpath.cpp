#include "plumbtight/fullpath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace plumbtight {

namespace {

int direction_sign(Direction d) { return d == Direction::initial ? 1 : -1; }

int self_intersection(const Manifold& m, std::size_t v) { return static_cast<int>(m.dual_form()(v, v)); }

bool in_bounds(const Manifold& m, const Covector& k, std::size_t v) {
  const int vv = self_intersection(m, v);
  return vv <= k[v] && k[v] <= -vv;
}

void record(const Manifold& m, const SignVector& sign, std::vector<Presentation>& out) {
  if (auto p = decode_presentation(m.gamma(), m.gamma_covector(sign)))
    if (out.empty() || out.back() != *p) out.push_back(*p);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

PathState make_state(const Manifold& m, SignVector sign) {
  PathState s{std::move(sign), {}};
  s.cov = m.dual_covector(s.sign);
  return s;
}

bool needs_step(const Manifold& m, const Covector& k, std::size_t v, Direction d) {
  return k[v] == direction_sign(d) * self_intersection(m, v);
}

PathState step(const Manifold& m, const PathState& state, std::size_t v, int sign_of_step) {
  if (sign_of_step != 1 && sign_of_step != -1) throw ContractError("step: sign must be +1 or -1");
  if (state.cov[v] != -sign_of_step * self_intersection(m, v)) throw ContractError("step: vertex is not at its extreme value");
  PathState out = state;
  const ClassVector& cls = m.basis().dual[v];
  for (std::size_t g = 0; g < cls.size(); ++g) {
    if (cls[g] == 0) continue;
    const int s = out.sign.s[g] + 2 * sign_of_step * cls[g];
    if (s != 1 && s != -1) throw ContractError("step: sign vector leaves {-1,+1}");
    out.sign.s[g] = static_cast<std::int8_t>(s);
  }
  for (std::size_t w = 0; w < out.cov.size(); ++w)
    out.cov[w] += static_cast<std::int32_t>(2 * sign_of_step * m.dual_form()(v, w));
  return out;
}

PathState reduce_legs(const Manifold& m, PathState state, Direction d, std::mt19937_64* shuffle, std::size_t* steps) {
  const std::size_t n = state.cov.size();
  const int sos = -direction_sign(d);
  std::size_t taken = 0;
  const std::size_t cap = step_cap(m);
  for (;;) {
    std::vector<std::size_t> pending;
    for (std::size_t v = 1; v < n; ++v)
      if (needs_step(m, state.cov, v, d)) {
        pending.push_back(v);
        if (!shuffle) break;
      }
    if (pending.empty()) break;
    std::size_t v = pending.front();
    if (shuffle) v = pending[std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(*shuffle)];
    state = step(m, state, v, sos);
    if (++taken > cap) throw InvariantError("reduce_legs: step budget exhausted");
  }
  if (steps) *steps += taken;
  return state;
}

PathState central_turn(const Manifold& m, const PathState& state, Direction d) {
  const int s = direction_sign(d);
  if (!needs_step(m, state.cov, 0, d)) throw ContractError("central_turn: center is not at its step value");
  for (std::size_t v = 1; v < state.cov.size(); ++v)
    if (needs_step(m, state.cov, v, d)) throw ContractError("central_turn: legs are not reduced");
  const auto& sg = state.sign.s;
  if (sg[0] == s) {
    for (int l = 0; l < 3; ++l)
      if (sg[2 + l] != -s) throw ContractError("central_turn: unexpected central pattern");
    return step(m, state, 0, -s);
  }
  int leg = -1;
  for (int l = 0; l < 3; ++l) {
    if (sg[2 + l] == s) {
      if (leg >= 0) throw ContractError("central_turn: unexpected central pattern");
      leg = l;
    }
  }
  if (leg < 0) throw ContractError("central_turn: unexpected central pattern");

  PathState turned = state;
  auto& t = turned.sign.s;
  std::swap(t[0], t[2 + leg]);
  const PlumbingGraph& dual = m.dual();
  for (std::size_t depth = 0; depth < dual.legs[leg].size(); ++depth) {
    const LegVertexGenerators& gens = m.basis().dual_generators[dual.index(leg, depth)];
    if (t[gens.start] == sg[gens.start]) break;
    auto it = std::find_if(gens.rest.begin(), gens.rest.end(), [&](int g) { return t[g] == s; });
    if (it == gens.rest.end()) throw ContractError("central_turn: no generator to absorb the sign change");
    t[*it] = static_cast<std::int8_t>(-s);
    if (*it != gens.rest.back()) break;
  }
  if (m.dual_covector(turned.sign) != state.cov) throw InvariantError("central_turn: reinterpretation changed the dual covector");
  return step(m, turned, 0, -s);
}

bool in_initial_box(const Manifold& m, const Covector& k) {
  for (std::size_t v = 0; v < k.size(); ++v) {
    const int vv = self_intersection(m, v);
    if (k[v] < vv + 2 || k[v] > -vv) return false;
  }
  return true;
}

bool in_terminal_box(const Manifold& m, const Covector& k) {
  for (std::size_t v = 0; v < k.size(); ++v) {
    const int vv = self_intersection(m, v);
    if (k[v] < vv || k[v] > -vv - 2) return false;
  }
  return true;
}

std::size_t step_cap(const Manifold& m) {
  std::size_t total = 0;
  const std::size_t n = m.dual().vertex_count();
  for (std::size_t v = 0; v < n; ++v) total += static_cast<std::size_t>(-self_intersection(m, v));
  return 4 * total * n;
}

PathVerdict walk_from(const Manifold& m, const SignVector& start, Direction d) {
  PathVerdict verdict;
  PathState state = make_state(m, start);
  record(m, state.sign, verdict.component);
  const std::size_t cap = step_cap(m);
  const std::size_t n = state.cov.size();
  for (;;) {
    std::optional<std::size_t> out;
    for (std::size_t v = 0; v < n && !out; ++v)
      if (!in_bounds(m, state.cov, v)) out = v;
    if (out) {
      if (*out != 0) throw InvariantError("walk: bound violated away from the center");
      verdict.kind = VerdictKind::drop_out;
      verdict.drop_vertex = out;
      break;
    }
    if (d == Direction::initial ? in_initial_box(m, state.cov) : in_terminal_box(m, state.cov)) {
      verdict.kind = VerdictKind::proper_ends;
      break;
    }
    if (++verdict.steps > cap) throw InvariantError("walk: step budget exhausted");
    std::size_t v = 1;
    while (v < n && !needs_step(m, state.cov, v, d)) ++v;
    if (v < n) {
      state = step(m, state, v, -direction_sign(d));
      continue;
    }
    state = central_turn(m, state, d);
    ++verdict.turns;
    record(m, state.sign, verdict.component);
  }
  verdict.end = state.cov;
  return verdict;
}

PathVerdict walk(const Manifold& m, const Presentation& p, Direction d) {
  return walk_from(m, canonical_sign_vector(m.gamma(), m.basis(), p), d);
}

LatticeWalk lattice_walk(const Manifold& m, Covector k, Direction d) {
  LatticeWalk out;
  const int s = direction_sign(d);
  const std::size_t n = k.size();
  const std::size_t cap = step_cap(m);
  for (std::size_t taken = 0;; ++taken) {
    if (taken > cap) throw InvariantError("lattice_walk: step budget exhausted");
    out.visited.push_back(k);
    bool dropped = false;
    for (std::size_t v = 0; v < n; ++v) dropped = dropped || !in_bounds(m, k, v);
    if (dropped) {
      out.kind = VerdictKind::drop_out;
      break;
    }
    if (d == Direction::initial ? in_initial_box(m, k) : in_terminal_box(m, k)) {
      out.kind = VerdictKind::proper_ends;
      break;
    }
    std::size_t v = 1;
    while (v < n && !needs_step(m, k, v, d)) ++v;
    if (v == n) v = 0;
    if (!needs_step(m, k, v, d)) throw InvariantError("lattice_walk: stuck outside the box");
    for (std::size_t w = 0; w < n; ++w) k[w] -= static_cast<std::int32_t>(2 * s * m.dual_form()(v, w));
  }
  out.end = std::move(k);
  return out;
}

PathComponent path_component(const Manifold& m, const Presentation& p) {
  PathComponent pc;
  const SignVector start = canonical_sign_vector(m.gamma(), m.basis(), p);
  pc.initial = walk_from(m, start, Direction::initial);
  pc.terminal = walk_from(m, start, Direction::terminal);
  pc.verdict = pc.initial.kind == VerdictKind::proper_ends && pc.terminal.kind == VerdictKind::proper_ends
                   ? VerdictKind::proper_ends
                   : VerdictKind::drop_out;
  pc.members = pc.initial.component;
  pc.members.insert(pc.members.end(), pc.terminal.component.begin(), pc.terminal.component.end());
  std::sort(pc.members.begin(), pc.members.end());
  pc.members.erase(std::unique(pc.members.begin(), pc.members.end()), pc.members.end());
  const Covector k = m.dual_covector(start);
  pc.spin_c = m.spin_c_string(k);
  if (pc.verdict == VerdictKind::proper_ends) pc.d_candidate = m.degree(k);
  return pc;
}

std::size_t ClassificationReport::tight_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const Component& c) { return c.verdict == VerdictKind::proper_ends; }));
}

ClassificationReport classify(const SeifertData& s) {
  if (s.e0 != -1) throw std::domain_error("classify: e0 must be -1");
  if (auto pair = realizing_pair(s)) throw NotLSpaceError(s, *pair);
  return classify(Manifold(s));
}

ClassificationReport classify(const Manifold& m) {
  if (auto pair = realizing_pair(m.seifert())) throw NotLSpaceError(m.seifert(), *pair);
  const std::vector<Presentation> all = enumerate_presentations(m.gamma());
  std::map<Presentation, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);

  UnionFind uf(all.size());
  std::vector<PathComponent> pcs;
  std::vector<Covector> covs;
  std::vector<Rational> d3s;
  std::map<Covector, std::size_t> by_initial_end;
  pcs.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Presentation& p = all[i];
    PathComponent pc = path_component(m, p);
    const SignVector start = canonical_sign_vector(m.gamma(), m.basis(), p);
    const Covector k = m.dual_covector(start);
    for (Direction d : {Direction::initial, Direction::terminal}) {
      const LatticeWalk lw = lattice_walk(m, k, d);
      const PathVerdict& pv = d == Direction::initial ? pc.initial : pc.terminal;
      if (lw.kind != pv.kind || (lw.kind == VerdictKind::proper_ends && lw.end != pv.end))
        throw InvariantError("classify: sign walker and lattice walker disagree at " + p.to_json());
    }
    const Rational d3 = d3_via_gamma(m.gamma(), p);
    if (d3 != d3_via_x(m.gamma(), p)) throw InvariantError("classify: d3 computations disagree at " + p.to_json());
    for (const Presentation& q : pc.members) uf.unite(i, index.at(q));
    if (pc.verdict == VerdictKind::proper_ends) {
      auto [it, fresh] = by_initial_end.emplace(pc.initial.end, i);
      if (!fresh) uf.unite(i, it->second);
    }
    pcs.push_back(std::move(pc));
    covs.push_back(k);
    d3s.push_back(d3);
  }

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < all.size(); ++i) groups[uf.find(i)].push_back(i);

  ClassificationReport report;
  report.manifold = m.seifert();
  report.h1 = m.homology_order();
  report.gamma = m.gamma();
  report.dual = m.dual();
  report.presentation_count = all.size();
  std::map<std::vector<std::int64_t>, std::size_t> tight_labels;
  for (const auto& [root, ids] : groups) {
    Component c;
    c.verdict = pcs[ids.front()].verdict;
    c.spin_c_label = m.spin_c_label(covs[ids.front()]);
    c.spin_c = m.spin_c_string(covs[ids.front()]);
    c.d3 = d3s[ids.front()];
    for (std::size_t i : ids) {
      if (pcs[i].verdict != c.verdict) throw InvariantError("classify: component mixes tight and overtwisted presentations");
      if (m.spin_c_label(covs[i]) != c.spin_c_label) throw InvariantError("classify: spin^c differs inside a component");
      if (d3s[i] != *c.d3) throw InvariantError("classify: d3 differs inside a component");
      c.members.push_back(all[i]);
    }
    if (c.verdict == VerdictKind::proper_ends) {
      const Rational degree = *pcs[ids.front()].d_candidate;
      for (std::size_t i : ids)
        if (*pcs[i].d_candidate != degree) throw InvariantError("classify: path degree differs inside a component");
      c.d = -degree;
      if (*c.d != *c.d3) throw InvariantError("classify: d3 != d for tight class " + all[ids.front()].to_json());
      c.initial_end = pcs[ids.front()].initial.end;
      c.terminal_end = pcs[ids.front()].terminal.end;
      for (std::size_t i : ids)
        if (pcs[i].initial.end != c.initial_end || pcs[i].terminal.end != c.terminal_end)
          throw InvariantError("classify: proper ends differ inside a component");
      if (!tight_labels.emplace(c.spin_c_label, report.classes.size()).second)
        throw InvariantError("classify: two tight classes share a spin^c structure");
    }
    report.classes.push_back(std::move(c));
  }
  std::stable_sort(report.classes.begin(), report.classes.end(), [](const Component& a, const Component& b) {
    if (a.verdict != b.verdict) return a.verdict == VerdictKind::proper_ends;
    return a.members < b.members;
  });
  if (Integer(static_cast<long>(report.tight_count())) > report.h1)
    throw InvariantError("classify: more tight classes than spin^c structures");
  return report;
}

std::size_t find_class(const ClassificationReport& r, const Presentation& p) {
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    if (std::binary_search(r.classes[i].members.begin(), r.classes[i].members.end(), p)) return i;
  throw std::out_of_range("find_class: presentation not in report");
}

}  // namespace plumbtight
