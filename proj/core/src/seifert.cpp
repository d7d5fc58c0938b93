#include "plumbtight/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace plumbtight {

NegCF neg_cf_expand(const Rational& r) {
  if (r <= Rational(0) || r >= Rational(1)) throw std::domain_error("neg_cf_expand: r must lie in (0,1), got " + r.str());
  NegCF cf;
  Rational x = r.reciprocal();
  for (;;) {
    const Integer a = x.ceil();
    cf.digits.push_back(static_cast<int>(a.get_si()));
    const Rational rest = Rational(a, Integer(1)) - x;
    if (rest.sign() == 0) break;
    x = rest.reciprocal();
  }
  return cf;
}

Rational eval_cf(const NegCF& cf) {
  if (cf.digits.empty()) throw std::domain_error("eval_cf: empty continued fraction");
  Rational value(-cf.digits.back());
  for (std::size_t i = cf.digits.size() - 1; i-- > 0;) value = Rational(-cf.digits[i]) - value.reciprocal();
  return value;
}

SeifertData SeifertData::make(int e0, std::array<Rational, 3> r) {
  for (const auto& x : r)
    if (x <= Rational(0) || x >= Rational(1)) throw std::domain_error("Seifert coefficient outside (0,1): " + x.str());
  std::sort(r.begin(), r.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return SeifertData{e0, r};
}

SeifertData SeifertData::parse(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("expected 'e0;r1,r2,r3', got '" + std::string(text) + "'");
  const Rational e0 = Rational::parse(text.substr(0, semi));
  if (!e0.is_integer()) throw std::invalid_argument("e0 must be an integer");
  std::array<Rational, 3> r;
  std::string_view rest = text.substr(semi + 1);
  for (int i = 0; i < 3; ++i) {
    const auto comma = rest.find(',');
    if ((i < 2) != (comma != std::string_view::npos))
      throw std::invalid_argument("expected exactly three coefficients in '" + std::string(text) + "'");
    r[i] = Rational::parse(rest.substr(0, comma));
    if (comma != std::string_view::npos) rest = rest.substr(comma + 1);
  }
  return make(static_cast<int>(e0.numerator().get_si()), r);
}

std::string SeifertData::str() const {
  std::ostringstream os;
  os << e0 << ';' << r[0] << ',' << r[1] << ',' << r[2];
  return os.str();
}

std::optional<RealizingPair> realizing_pair(const SeifertData& s) {
  if (s.e0 != -1) throw std::domain_error("realizing_pair: only e0 = -1 is supported");
  const Rational inv1 = s.r[0].reciprocal();
  const Rational inv2 = s.r[1].reciprocal();
  const Rational inv3 = s.r[2].reciprocal();
  // 1/r3 > m bounds the search.
  for (int m = 2; Rational(m) < inv3; ++m) {
    for (int a = 1; a < m; ++a) {
      if (std::gcd(m, a) != 1) continue;
      if (inv1 > Rational(Integer(m), Integer(a)) && inv2 > Rational(Integer(m), Integer(m - a))) return RealizingPair{m, a};
    }
  }
  return std::nullopt;
}

bool l_space_test(const SeifertData& s) { return !realizing_pair(s).has_value(); }

SeifertData reflect(const SeifertData& s) {
  return SeifertData::make(-3 - s.e0, {Rational(1) - s.r[0], Rational(1) - s.r[1], Rational(1) - s.r[2]});
}

Integer homology_order(const SeifertData& s) {
  Rational e(s.e0);
  Integer q = 1;
  for (const auto& x : s.r) {
    e += x;
    q *= x.denominator();
  }
  const Rational h = e * Rational(q, Integer(1));
  Integer out = h.numerator();
  return out < 0 ? Integer(-out) : out;
}

}  // namespace plumbtight
