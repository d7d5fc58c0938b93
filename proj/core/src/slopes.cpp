#include "plumbtight/slopes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace plumbtight {

SlopeMatrix operator*(const SlopeMatrix& x, const SlopeMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Slope::Slope(Integer n, Integer d) : num(std::move(n)), den(std::move(d)) {
  if (num == 0 && den == 0) throw std::domain_error("Slope: zero vector");
  Integer g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  num /= g;
  den /= g;
  if (den < 0 || (den == 0 && num < 0)) {
    num = -num;
    den = -den;
  }
}

Rational Slope::value() const {
  if (is_infinite()) throw std::domain_error("Slope::value: infinite slope");
  return Rational(num, den);
}

std::string Slope::str() const { return is_infinite() ? "inf" : value().str(); }

SlopeMatrix digit_matrix(int a) { return {Integer(-a), Integer(1), Integer(-1), Integer(0)}; }

SlopeMatrix cf_to_matrix(const NegCF& cf) {
  SlopeMatrix m{1, 0, 0, 1};
  for (int a : cf.digits) m = digit_matrix(a) * m;
  return m;
}

Slope first_row_slope(const SlopeMatrix& m) { return Slope(m.b, m.a); }

Slope peeled_slope(const NegCF& leg, std::size_t truncate_at, int m) {
  if (truncate_at < 1 || truncate_at > leg.size()) throw std::domain_error("peeled_slope: block index out of range");
  if (m < 0 || m > leg[truncate_at - 1]) throw std::domain_error("peeled_slope: slice count out of range");
  SlopeMatrix acc{1, 0, 0, 1};
  for (std::size_t i = 0; i < truncate_at; ++i) acc = acc * SlopeMatrix{0, -1, 1, Integer(-leg[i])};
  acc = acc * SlopeMatrix{1, 0, Integer(m), 1};
  return Slope(acc.a, acc.c);
}

Slope critical_slope(const SeifertData& s, int leg) {
  if (leg < 0 || leg > 2) throw std::domain_error("critical_slope: leg out of range");
  const Rational& r = s.r[leg];
  const Integer alpha = r.denominator();
  const Integer beta = leg == 0 ? Integer(r.numerator() - alpha) : r.numerator();
  return Slope(-beta, alpha);
}

bool is_basic_slice(const Slope& s1, const Slope& s2) {
  const Integer d = s1.num * s2.den - s2.num * s1.den;
  return d == 1 || d == -1;
}

namespace {

// s strictly inside the arc from a to b that avoids infinity (or, if one end is infinite,
// the arc of values above the finite end).
bool strictly_between(const Slope& a, const Slope& b, const Slope& s) {
  if (s.is_infinite()) return false;
  if (a.is_infinite() && b.is_infinite()) return false;
  if (a.is_infinite()) return s.value() > b.value();
  if (b.is_infinite()) return s.value() > a.value();
  const Rational lo = std::min(a.value(), b.value());
  const Rational hi = std::max(a.value(), b.value());
  return lo < s.value() && s.value() < hi;
}

}  // namespace

bool is_cf_block(const Slope& s0, const Slope& s, const Slope& s_prime) {
  return is_basic_slice(s0, s) && is_basic_slice(s, s_prime) && strictly_between(s0, s, s_prime);
}

namespace {

using Perm = std::array<int, 3>;

const std::array<Perm, 6>& permutations() {
  static const std::array<Perm, 6> perms{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return perms;
}

int digit(const PlumbingGraph& g, int leg, std::size_t j) { return -g.legs[leg][j]; }

std::size_t leading_twos(const PlumbingGraph& g, int leg, std::size_t from) {
  std::size_t j = from;
  while (j < g.legs[leg].size() && digit(g, leg, j) == 2) ++j;
  return j - from;
}

// Next block after `after` that is not a forced -2 block.
std::optional<std::size_t> next_row(const PlumbingGraph& g, int leg, std::size_t after) {
  for (std::size_t j = after + 1; j < g.legs[leg].size(); ++j)
    if (digit(g, leg, j) != 2) return j;
  return std::nullopt;
}

bool ot_type_one(const Presentation& q, const PlumbingGraph& g, const Perm& L) {
  const std::size_t k = leading_twos(g, L[0], 0);
  if (k == 0 || q.n[L[0]][0] != 0) return false;
  const int nk = g.legs[L[0]].size() > k ? q.n[L[0]][k] : 0;
  const int n2 = q.n[L[1]][0];
  const int n3 = q.n[L[2]][0];
  const int kk = static_cast<int>(k);
  return n3 >= n2 && (n2 > kk + 1 || (n2 >= kk + 1 && nk > 0));
}

bool ot_type_two(const Presentation& q, const PlumbingGraph& g, const Perm& L) {
  const std::size_t k = leading_twos(g, L[0], 0);
  if (k == 0 || g.legs[L[0]].size() <= k || q.n[L[0]][0] != 1) return false;
  if (digit(g, L[1], 0) != static_cast<int>(k) + 2 || q.n[L[1]][0] != 0) return false;
  const std::size_t l = leading_twos(g, L[1], 1);
  if (g.legs[L[1]].size() <= l + 1) return false;
  const int nk = q.n[L[0]][k];
  const int nl = q.n[L[1]][l + 1];
  const int n3 = q.n[L[2]][0];
  // A fully positive v_{l+1} extends the chain by one.
  const int li = static_cast<int>(l) + (nl == 0 ? 1 : 0);
  if (li == 0) return false;
  const int bound = (static_cast<int>(k) + 1) * (li + 1) + 1;
  return (nk > li + 1 && n3 > bound) || (nl > 0 && nk >= li + 1 && n3 >= bound);
}

std::vector<Presentation> moves_one_orientation(const Presentation& q, const PlumbingGraph& g) {
  std::vector<Presentation> out;
  for (const Perm& L : permutations()) {
    const auto& a1 = g.legs[L[0]];
    const std::size_t k = leading_twos(g, L[0], 0);
    const int kk = static_cast<int>(k);
    if (k == 0) continue;
    const bool has_k = a1.size() > k;
    const int nk = has_k ? q.n[L[0]][k] : 0;

    if (q.n[L[0]][0] == 0) {
      if (!has_k || nk > 0) {
        Presentation r = q;
        r.n[L[0]][0] = 1;
        if (has_k) r.n[L[0]][k] -= 1;
        r.n[L[1]][0] -= kk;
        r.n[L[2]][0] -= kk;
        out.push_back(r);
      } else if (auto j1 = next_row(g, L[0], k); !j1 || q.n[L[0]][*j1] > 0) {
        Presentation r = q;
        r.n[L[0]][0] = 1;
        r.n[L[0]][k] = digit(g, L[0], k) - 2;
        if (j1) r.n[L[0]][*j1] -= 1;
        r.n[L[1]][0] -= kk + 1;
        r.n[L[2]][0] -= kk + 1;
        out.push_back(r);
      } else if (auto j2 = next_row(g, L[0], *j1)) {
        const std::size_t l = leading_twos(g, L[1], 1);
        if (q.n[L[0]][*j2] > 0 && g.legs[L[1]].size() > l + 1) {
          const int li = static_cast<int>(l);
          Presentation r = q;
          r.n[L[0]][0] = 1;
          r.n[L[0]][k] = digit(g, L[0], k) - 2;
          r.n[L[0]][*j1] = digit(g, L[0], *j1) - 2;
          r.n[L[0]][*j2] -= 1;
          r.n[L[1]][0] = 0;
          r.n[L[1]][l + 1] -= 2;
          r.n[L[2]][0] -= (kk + 1) * (li + 2) + 1;
          out.push_back(r);
        }
      }
    }

    if (q.n[L[0]][0] == 1 && q.n[L[1]][0] == 0) {
      // The -2 chain after the first vertex only counts when a_0 = k+2.
      const std::size_t l = digit(g, L[1], 0) < kk + 2 ? 0 : leading_twos(g, L[1], 1);
      const int li = static_cast<int>(l);
      const bool has_l1 = g.legs[L[1]].size() > l + 1;
      const int nl = has_l1 ? q.n[L[1]][l + 1] : 0;
      if (!has_l1 || nl > 0) {
        Presentation r = q;
        r.n[L[0]][0] = 0;
        r.n[L[1]][0] = digit(g, L[1], 0) - 1;
        r.n[L[2]][0] -= (kk + 1) * li + 1;
        if (has_k) r.n[L[0]][k] -= li;
        if (has_l1) r.n[L[1]][l + 1] -= 1;
        out.push_back(r);
      } else if (auto j2 = next_row(g, L[1], l + 1)) {
        if (q.n[L[1]][*j2] > 0) {
          Presentation r = q;
          r.n[L[0]][0] = 0;
          r.n[L[1]][0] = digit(g, L[1], 0) - 1;
          r.n[L[2]][0] -= (kk + 1) * (li + 1) + 1;
          if (has_k) r.n[L[0]][k] -= li + 1;
          r.n[L[1]][l + 1] = digit(g, L[1], l + 1) - 2;
          r.n[L[1]][*j2] -= 1;
          out.push_back(r);
        }
      }
    }
  }
  return out;
}

}  // namespace

bool ot_check(const Presentation& p, const PlumbingGraph& gamma) {
  if (!in_range(gamma, p)) return false;
  for (const Presentation& q : {p, conjugate(gamma, p)})
    for (const Perm& L : permutations())
      if (ot_type_one(q, gamma, L) || ot_type_two(q, gamma, L)) return true;
  return false;
}

std::vector<Presentation> isotopy_moves(const Presentation& p, const PlumbingGraph& gamma) {
  std::vector<Presentation> out;
  if (!in_range(gamma, p)) return out;
  for (const Presentation& r : moves_one_orientation(p, gamma))
    if (in_range(gamma, r) && r != p) out.push_back(r);
  const Presentation c = conjugate(gamma, p);
  for (const Presentation& r : moves_one_orientation(c, gamma))
    if (in_range(gamma, r) && r != c) out.push_back(conjugate(gamma, r));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Presentation>> isotopy_closure(const std::vector<Presentation>& presentations,
                                                       const PlumbingGraph& gamma) {
  std::map<Presentation, std::size_t> index;
  for (std::size_t i = 0; i < presentations.size(); ++i) index.emplace(presentations[i], i);
  std::vector<std::size_t> parent(presentations.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < presentations.size(); ++i)
    for (const Presentation& r : isotopy_moves(presentations[i], gamma)) {
      auto it = index.find(r);
      if (it == index.end()) continue;
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<Presentation>> groups;
  for (std::size_t i = 0; i < presentations.size(); ++i) groups[find(i)].push_back(presentations[i]);
  std::vector<std::vector<Presentation>> out;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace plumbtight
