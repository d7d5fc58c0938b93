#include "plumbtight/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>

namespace plumbtight {

namespace {

struct CovectorHash {
  std::size_t operator()(const Covector& k) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : k) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ull;
    return h;
  }
};

class Explorer {
 public:
  Explorer(const IntMatrix& q, bool memoize) : q_(q), memoize_(memoize) {}

  bool good(const Covector& k) {
    if (memoize_) {
      auto it = memo_.find(k);
      if (it != memo_.end()) return it->second;
    }
    const bool g = compute(k);
    if (memoize_) memo_.emplace(k, g);
    return g;
  }

 private:
  bool compute(const Covector& k) {
    const std::size_t n = k.size();
    bool pending = false;
    for (std::size_t v = 0; v < n; ++v) {
      const auto vv = q_(v, v);
      if (k[v] > -vv || k[v] < vv) return false;
      if (k[v] == -vv) pending = true;
    }
    if (!pending) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (k[v] != -q_(v, v)) continue;
      Covector next = k;
      for (std::size_t w = 0; w < n; ++w) next[w] += static_cast<std::int32_t>(2 * q_(v, w));
      if (!good(next)) return false;
    }
    return true;
  }

  const IntMatrix& q_;
  bool memoize_;
  std::unordered_map<Covector, bool, CovectorHash> memo_;
};

IntMatrix doubled(const IntMatrix& m) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= 2;
  return out;
}

Covector box_vector(const IntMatrix& q, std::size_t index) {
  Covector k(q.rows());
  for (std::size_t v = 0; v < q.rows(); ++v) {
    const auto width = static_cast<std::size_t>(-q(v, v));
    k[v] = static_cast<std::int32_t>(q(v, v) + 2 + 2 * static_cast<std::int64_t>(index % width));
    index /= width;
  }
  return k;
}

}  // namespace

std::size_t capacity_cap() {
  if (const char* env = std::getenv("PLUMBTIGHT_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 50'000'000;
}

bool OracleResult::l_space() const {
  if (Integer(static_cast<long>(classes.size())) != det) return false;
  return std::all_of(classes.begin(), classes.end(), [](const SpinCClass& c) { return c.good_initial.size() == 1; });
}

const SpinCClass* OracleResult::find(const std::vector<std::int64_t>& label) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), label,
                             [](const SpinCClass& c, const std::vector<std::int64_t>& l) { return c.label < l; });
  return it != classes.end() && it->label == label ? &*it : nullptr;
}

std::size_t initial_box_size(const PlumbingGraph& dual) {
  std::size_t size = 1;
  const IntMatrix q = dual.intersection_form();
  for (std::size_t v = 0; v < q.rows(); ++v) {
    const auto w = static_cast<std::size_t>(-q(v, v));
    if (w == 0 || size > SIZE_MAX / w) return SIZE_MAX;
    size *= w;
  }
  return size;
}

bool osz_good(const PlumbingGraph& dual, const Covector& k) {
  const IntMatrix q = dual.intersection_form();
  return Explorer(q, true).good(k);
}

OracleResult osz_good_vectors(const PlumbingGraph& dual, const OracleOptions& options) {
  const IntMatrix q = dual.intersection_form();
  for (std::size_t v = 0; v < q.rows(); ++v)
    if (q(v, v) >= 0) throw std::domain_error("osz_good_vectors: weights must be negative");
  if (signature_b2(q).signature != -static_cast<int>(q.rows()))
    throw std::domain_error("osz_good_vectors: form is not negative definite");
  const std::size_t cap = options.cap.value_or(capacity_cap());
  OracleResult result;
  result.box_size = initial_box_size(dual);
  if (result.box_size > cap)
    throw CapacityError("osz_good_vectors: initial box of " + std::to_string(result.box_size) + " vectors exceeds cap " +
                        std::to_string(cap));
  Integer det = determinant(q);
  result.det = det < 0 ? Integer(-det) : det;

  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(result.box_size)));
  std::vector<std::vector<std::size_t>> good(jobs);
  auto work = [&](unsigned t) {
    Explorer ex(q, options.memoize);
    for (std::size_t i = t; i < result.box_size; i += jobs)
      if (ex.good(box_vector(q, i))) good[t].push_back(i);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<std::size_t> all;
  for (const auto& g : good) all.insert(all.end(), g.begin(), g.end());
  std::sort(all.begin(), all.end());
  result.good_count = all.size();

  const CosetReducer reducer(doubled(q));
  const InverseForm inverse(q);
  const Rational n(static_cast<long>(q.rows()));
  std::map<std::vector<std::int64_t>, SpinCClass> classes;
  for (std::size_t i : all) {
    Covector k = box_vector(q, i);
    auto label = reducer.reduce(k);
    const Rational deg = (inverse.square(k) + n) / Rational(4);
    auto [it, fresh] = classes.try_emplace(label);
    if (fresh) {
      it->second.label = label;
      it->second.d_minus = deg;
    } else if (deg > it->second.d_minus) {
      it->second.d_minus = deg;
    }
    it->second.good_initial.push_back(std::move(k));
  }
  for (auto& [label, c] : classes) result.classes.push_back(std::move(c));
  return result;
}

bool oracle_l_space(const PlumbingGraph& dual, const OracleOptions& options) {
  if (determinant(dual.intersection_form()) == 0) return false;
  return osz_good_vectors(dual, options).l_space();
}

Rational d_invariant(const PlumbingGraph& dual, const OracleResult& result, const Covector& k) {
  const IntMatrix q = dual.intersection_form();
  if (!is_characteristic(q, k)) throw std::domain_error("d_invariant: covector is not characteristic");
  const auto* c = result.find(CosetReducer(doubled(q)).reduce(k));
  if (!c) throw std::domain_error("d_invariant: spin^c structure not realized by a good vector");
  return c->d_minus;
}

TightnessOracle::TightnessOracle(const Manifold& m, const OracleOptions& options)
    : m_(m), result_(osz_good_vectors(m.dual(), options)) {}

Rational TightnessOracle::d(const Presentation& p) const {
  const Covector k = m_.dual_covector(canonical_sign_vector(m_.gamma(), m_.basis(), p));
  return -d_invariant(m_.dual(), result_, k);
}

bool TightnessOracle::tight(const Presentation& p) const { return d3_via_gamma(m_.gamma(), p) == d(p); }

}  // namespace plumbtight
