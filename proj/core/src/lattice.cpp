#include "plumbtight/lattice.hpp"

#include <stdexcept>

namespace plumbtight {

namespace {

using QMatrix = std::vector<std::vector<mpq_class>>;

QMatrix to_rational(const IntMatrix& m) {
  QMatrix q(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = static_cast<long>(m(i, j));
  return q;
}

std::int64_t to_int64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return z.get_si();
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::vector<Rational> solve(const IntMatrix& m, std::span<const std::int64_t> rhs) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  QMatrix a = to_rational(m);
  std::vector<mpq_class> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<long>(rhs[i]);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) throw std::domain_error("solve: singular matrix");
    std::swap(a[k], a[p]);
    std::swap(b[k], b[p]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<mpq_class> x(n);
  for (std::size_t k = n; k-- > 0;) {
    mpq_class s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& v : x) out.emplace_back(v);
  return out;
}

Rational inverse_square(const IntMatrix& m, std::span<const std::int64_t> rhs) {
  const auto x = solve(m, rhs);
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * Rational(static_cast<long>(rhs[i]));
  return s;
}

SignatureRank signature_b2(const IntMatrix& form) {
  if (!form.is_symmetric()) throw std::invalid_argument("signature of non-symmetric matrix");
  const std::size_t n = form.rows();
  QMatrix a = to_rational(form);
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  SignatureRank out;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish: fold a nonzero off-diagonal pair into the diagonal.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (a[i][j] == 0) continue;
          for (std::size_t c = 0; c < n; ++c) a[i][c] += a[j][c];
          for (std::size_t r = 0; r < n; ++r) a[r][i] += a[r][j];
          p = i;
          found = true;
        }
      }
      if (!found) throw std::domain_error("signature: degenerate form");
    }
    swap_index(k, p);
    const mpq_class pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / pivot;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
    out.signature += sgn(pivot) > 0 ? 1 : -1;
    ++out.b2;
  }
  return out;
}

InverseForm::InverseForm(const IntMatrix& form) : n_(form.rows()) {
  const Integer det = determinant(form);
  if (det == 0) throw std::domain_error("InverseForm: singular form");
  det_ = to_int64(det, "determinant");
  adj_.assign(n_ * n_, 0);
  std::vector<std::int64_t> unit(n_, 0);
  for (std::size_t j = 0; j < n_; ++j) {
    std::fill(unit.begin(), unit.end(), 0);
    unit[j] = 1;
    const auto col = solve(form, unit);
    for (std::size_t i = 0; i < n_; ++i) {
      const Rational scaled = col[i] * Rational(det, Integer(1));
      if (!scaled.is_integer()) throw std::logic_error("InverseForm: adjugate not integral");
      adj_[i * n_ + j] = to_int64(scaled.numerator(), "adjugate entry");
    }
  }
}

std::int64_t InverseForm::square_numerator(std::span<const std::int32_t> k) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (k[i] == 0) continue;
    std::int64_t row = 0;
    const std::int64_t* a = adj_.data() + i * n_;
    for (std::size_t j = 0; j < n_; ++j) row += a[j] * k[j];
    s += row * k[i];
  }
  return s;
}

Rational InverseForm::square(std::span<const std::int32_t> k) const {
  return Rational(Integer(static_cast<long>(square_numerator(k))), Integer(static_cast<long>(det_)));
}

CosetReducer::CosetReducer(const IntMatrix& generators) {
  const std::size_t n = generators.rows();
  if (generators.cols() != n) throw std::invalid_argument("CosetReducer: square matrix required");
  std::vector<std::vector<Integer>> h(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = static_cast<long>(generators(i, j));
  auto col_axpy = [&](std::size_t dst, const Integer& f, std::size_t src) {
    for (std::size_t r = 0; r < n; ++r) h[r][dst] += f * h[r][src];
  };
  for (std::size_t i = 0; i < n; ++i) {
    // Euclid on row i across columns i..n-1 until only column i is nonzero.
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = i; j < n; ++j)
        if (h[i][j] != 0 && (best == n || abs(h[i][j]) < abs(h[i][best]))) best = j;
      if (best == n) throw std::domain_error("CosetReducer: singular generator matrix");
      if (best != i)
        for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][best]);
      bool done = true;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (h[i][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[i][i].get_mpz_t());
        col_axpy(j, -q, i);
        if (h[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (h[i][i] < 0)
      for (std::size_t r = 0; r < n; ++r) h[r][i] = -h[r][i];
    for (std::size_t j = 0; j < i; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][j].get_mpz_t(), h[i][i].get_mpz_t());
      col_axpy(j, -q, i);
    }
  }
  hnf_ = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hnf_(i, j) = to_int64(h[i][j], "Hermite normal form entry");
}

std::vector<std::int64_t> CosetReducer::reduce(std::span<const std::int32_t> v) const {
  const std::size_t n = hnf_.rows();
  std::vector<std::int64_t> r(v.begin(), v.end());
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t d = hnf_(i, i);
    std::int64_t q = r[i] / d;
    if (r[i] % d != 0 && r[i] < 0) --q;
    if (q == 0) continue;
    for (std::size_t row = i; row < n; ++row) r[row] -= q * hnf_(row, i);
  }
  return r;
}

bool CosetReducer::same_coset(std::span<const std::int32_t> a, std::span<const std::int32_t> b) const {
  return reduce(a) == reduce(b);
}

Integer CosetReducer::index() const {
  Integer p = 1;
  for (std::size_t i = 0; i < hnf_.rows(); ++i) p *= static_cast<long>(hnf_(i, i));
  return p;
}

}  // namespace plumbtight
