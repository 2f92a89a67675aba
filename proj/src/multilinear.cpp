#include "bicrit/multilinear.hpp"

#include <algorithm>
#include <cmath>

namespace bicrit {

MultilinearEvaluator MultilinearEvaluator::exact(SetFunctionOracle f) {
  const int n = f.n();
  if (n > 24) throw std::invalid_argument("MultilinearEvaluator: exact mode refuses n > 24");
  MultilinearEvaluator e;
  e.f_ = std::move(f);
  e.exact_ = true;
  if (n <= 22) {
    auto table = std::make_shared<std::vector<Real>>(uint64_t{1} << n);
    for (uint64_t mask = 0; mask < table->size(); ++mask)
      (*table)[mask] = e.f_.value(ElementSet(n, mask));
    e.table_ = std::move(table);
  }
  return e;
}

MultilinearEvaluator MultilinearEvaluator::sampled(SetFunctionOracle f, int samples, uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("MultilinearEvaluator: need at least one sample");
  MultilinearEvaluator e;
  e.f_ = std::move(f);
  e.exact_ = false;
  e.samples_ = samples;
  e.seed_ = seed;
  return e;
}

namespace {

void check_point(const DenseVector& x, int n) {
  if (x.n() != n) throw std::invalid_argument("MultilinearEvaluator: dimension mismatch");
  if (!x.in_unit_box(1e-7)) throw std::invalid_argument("MultilinearEvaluator: point outside [0,1]^N");
}

// Folds the value table over the product measure: O(2^n) multiply-adds.
Real fold(const std::vector<Real>& table, const DenseVector& x) {
  thread_local std::vector<Real> buf;
  buf.assign(table.begin(), table.end());
  size_t size = buf.size();
  for (int bit = 0; size > 1; ++bit) {
    const Real xu = std::min(1.0, std::max(0.0, x[bit]));
    size /= 2;
    for (size_t m = 0; m < size; ++m) buf[m] = (1.0 - xu) * buf[2 * m] + xu * buf[2 * m + 1];
  }
  return buf[0];
}

}  // namespace

Real MultilinearEvaluator::exact_eval(const DenseVector& x) const {
  const int n = f_.n();
  if (table_) return fold(*table_, x);
  // n in (22, 24]: stream the subsets without a table.
  Real acc = 0;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Real w = 1.0;
    for (int u = 0; u < n && w != 0.0; ++u) w *= ((mask >> u) & 1) ? x[u] : 1.0 - x[u];
    if (w != 0.0) acc += w * f_.value(ElementSet(n, mask));
  }
  return acc;
}

Real MultilinearEvaluator::eval(const DenseVector& x) const {
  check_point(x, n());
  if (exact_) return exact_eval(x);
  const int n = f_.n();
  Real acc = 0;
  for (int k = 0; k < samples_; ++k) {
    auto rng = make_rng(seed_, 0x5a17, (uint64_t)k);
    std::uniform_real_distribution<Real> unif(0.0, 1.0);
    ElementSet s(n);
    for (int u = 0; u < n; ++u)
      if (unif(rng) < x[u]) s.add(u);
    acc += f_.value(s);
  }
  return acc / samples_;
}

Real MultilinearEvaluator::sampled_clamped_diff(const DenseVector& x, int u) const {
  const int n = f_.n();
  Real acc = 0;
  for (int k = 0; k < samples_; ++k) {
    auto rng = make_rng(seed_, 0x5a17, (uint64_t)k);
    std::uniform_real_distribution<Real> unif(0.0, 1.0);
    ElementSet s(n);
    for (int v = 0; v < n; ++v)
      if (unif(rng) < x[v]) s.add(v);
    acc += f_.value(s.with(u)) - f_.value(s.without(u));
  }
  return acc / samples_;
}

Real MultilinearEvaluator::partial(const DenseVector& x, int u) const {
  check_point(x, n());
  if (u < 0 || u >= n()) throw std::out_of_range("partial: element out of range");
  if (!exact_) return sampled_clamped_diff(x, u);
  DenseVector hi = x, lo = x;
  hi[u] = 1.0;
  lo[u] = 0.0;
  return exact_eval(hi) - exact_eval(lo);
}

DenseVector MultilinearEvaluator::gradient(const DenseVector& x) const {
  check_point(x, n());
  DenseVector g(n());
  for (int u = 0; u < n(); ++u) g[u] = partial(x, u);
  return g;
}

MultilinearEvaluator MultilinearEvaluator::reseeded(uint64_t tag) const {
  if (exact_) return *this;
  MultilinearEvaluator e = *this;
  e.seed_ = mix_seed(seed_, 0x57e9, tag);
  return e;
}

int default_gradient_samples(int n) {
  if (n <= 1) return 1000;
  return std::max(1000, (int)std::ceil(10.0 * n * std::log((Real)n)));
}

}  // namespace bicrit
