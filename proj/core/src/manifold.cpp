#include "plumbtight/manifold.hpp"

#include <sstream>

namespace plumbtight {

namespace {

IntMatrix doubled(const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= 2;
  return out;
}

std::string not_l_space_message(const SeifertData& s, RealizingPair p) {
  std::ostringstream os;
  os << s.str() << " is not an L-space: realizing pair (m,a)=(" << p.m << ',' << p.a << ')';
  return os.str();
}

}  // namespace

NotLSpaceError::NotLSpaceError(const SeifertData& s, RealizingPair p)
    : std::invalid_argument(not_l_space_message(s, p)), pair(p) {}

Manifold::Manifold(const SeifertData& s)
    : seifert_(s),
      gamma_(build_gamma(s)),
      dual_(build_gamma_dual(s)),
      basis_(blowup_embedding(gamma_, dual_)),
      gamma_form_(gamma_.intersection_form()),
      dual_form_(dual_.intersection_form()),
      dual_inverse_(dual_form_),
      spin_c_(doubled(dual_form_)),
      h1_(plumbtight::homology_order(s)) {}

std::string Manifold::spin_c_string(const Covector& k) const {
  std::ostringstream os;
  const auto r = spin_c_label(k);
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

Rational Manifold::degree(const Covector& k) const {
  return (dual_inverse_.square(k) + Rational(static_cast<long>(dual_.vertex_count()))) / Rational(4);
}

}  // namespace plumbtight
