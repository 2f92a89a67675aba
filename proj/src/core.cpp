#include "bicrit/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace bicrit {

bool ElementSet::lex_less(const ElementSet& a, const ElementSet& b) {
  uint64_t ab = a.bits_, bb = b.bits_;
  while (ab != 0 && bb != 0) {
    int ua = __builtin_ctzll(ab), ub = __builtin_ctzll(bb);
    if (ua != ub) return ua < ub;
    ab &= ab - 1;
    bb &= bb - 1;
  }
  return ab == 0 && bb != 0;  // proper prefix is smaller
}

std::string ElementSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int u : elements()) {
    if (!first) os << ',';
    os << u;
    first = false;
  }
  os << '}';
  return os.str();
}

SetFunctionOracle::SetFunctionOracle(int n, Evaluator evaluator, bool is_monotone, bool is_symmetric,
                                     std::string name) {
  if (n < 0 || n > kMaxSetElements) throw std::out_of_range("SetFunctionOracle: ground set size out of range");
  if (!evaluator) throw std::invalid_argument("SetFunctionOracle: missing evaluator");
  auto st = std::make_shared<State>();
  st->n = n;
  st->evaluator = std::move(evaluator);
  st->monotone = is_monotone;
  st->symmetric = is_symmetric;
  st->name = std::move(name);
  st->queries = std::make_shared<std::atomic<long long>>(0);
  state_ = std::move(st);
}

Real SetFunctionOracle::value(const ElementSet& s) const {
  const State& st = state();
  if (s.universe_size() != st.n) throw std::invalid_argument("SetFunctionOracle: ground set mismatch");
  st.queries->fetch_add(1, std::memory_order_relaxed);
  Real v = st.evaluator(s);
  if (v < -kTol) throw std::logic_error("SetFunctionOracle: negative value from " + st.name);
  return v;
}

SetFunctionOracle SetFunctionOracle::cached() const {
  const State& base = state();
  auto cache = std::make_shared<std::unordered_map<uint64_t, Real>>();
  auto counter = base.queries;
  auto eval = base.evaluator;
  SetFunctionOracle out;
  auto st = std::make_shared<State>();
  st->n = base.n;
  st->monotone = base.monotone;
  st->symmetric = base.symmetric;
  st->name = base.name;
  // Distinct-subset counter: the shared counter advances only on cache misses,
  // and the wrapper bypasses value()'s unconditional increment.
  st->queries = counter;
  st->evaluator = [cache, counter, eval](const ElementSet& s) -> Real {
    auto it = cache->find(s.bits());
    if (it != cache->end()) {
      counter->fetch_sub(1, std::memory_order_relaxed);  // undo the wrapper's own count
      return it->second;
    }
    Real v = eval(s);
    cache->emplace(s.bits(), v);
    return v;
  };
  out.state_ = std::move(st);
  return out;
}

Real marginal(const SetFunctionOracle& f, const ElementSet& s, int u) {
  if (u < 0 || u >= f.n()) throw std::out_of_range("marginal: element out of range");
  return f.value(s.with(u)) - f.value(s);
}

DenseVector DenseVector::indicator(const ElementSet& s) {
  DenseVector v(s.universe_size(), 0.0);
  for (int u : s.elements()) v[u] = 1.0;
  return v;
}

bool DenseVector::in_unit_box(Real tol) const {
  for (Real c : coords_)
    if (c < -tol || c > 1.0 + tol) return false;
  return true;
}

ElementSet DenseVector::support(Real tol) const {
  ElementSet s(n());
  for (int u = 0; u < n(); ++u)
    if (coords_[u] > tol) s.add(u);
  return s;
}

std::string DenseVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int u = 0; u < n(); ++u) {
    if (u) os << ',';
    os << coords_[u];
  }
  os << ')';
  return os.str();
}

namespace {

void check_same_dim(const DenseVector& x, const DenseVector& y, const char* op) {
  if (x.n() != y.n()) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

void check_unit_box(const DenseVector& x, const char* op) {
  if (!x.in_unit_box(kTol)) throw std::invalid_argument(std::string(op) + ": coordinates outside [0,1]");
}

}  // namespace

DenseVector join(const DenseVector& x, const DenseVector& y) {
  check_same_dim(x, y, "join");
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = std::max(x[u], y[u]);
  return out;
}

DenseVector meet(const DenseVector& x, const DenseVector& y) {
  check_same_dim(x, y, "meet");
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = std::min(x[u], y[u]);
  return out;
}

DenseVector hadamard(const DenseVector& x, const DenseVector& y) {
  check_same_dim(x, y, "hadamard");
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = x[u] * y[u];
  return out;
}

DenseVector prob_sum(const DenseVector& x, const DenseVector& y) {
  check_same_dim(x, y, "prob_sum");
  check_unit_box(x, "prob_sum");
  check_unit_box(y, "prob_sum");
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = std::min(1.0, std::max(0.0, x[u] + y[u] - x[u] * y[u]));
  return out;
}

DenseVector operator+(const DenseVector& x, const DenseVector& y) {
  check_same_dim(x, y, "operator+");
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = x[u] + y[u];
  return out;
}

DenseVector operator-(const DenseVector& x, const DenseVector& y) {
  check_same_dim(x, y, "operator-");
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = x[u] - y[u];
  return out;
}

DenseVector scale(const DenseVector& x, Real s) {
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = x[u] * s;
  return out;
}

Real dot(const DenseVector& x, const DenseVector& y) {
  check_same_dim(x, y, "dot");
  Real acc = 0;
  for (int u = 0; u < x.n(); ++u) acc += x[u] * y[u];
  return acc;
}

Real inf_norm(const DenseVector& x) {
  Real m = 0;
  for (int u = 0; u < x.n(); ++u) m = std::max(m, std::fabs(x[u]));
  return m;
}

DenseVector clamp01(const DenseVector& x) {
  DenseVector out(x.n());
  for (int u = 0; u < x.n(); ++u) out[u] = std::min(1.0, std::max(0.0, x[u]));
  return out;
}

namespace {
uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

uint64_t mix_seed(uint64_t seed, uint64_t tag0, uint64_t tag1, uint64_t tag2) {
  uint64_t z = splitmix64(seed);
  z = splitmix64(z ^ tag0);
  z = splitmix64(z ^ tag1);
  z = splitmix64(z ^ tag2);
  return z;
}

std::mt19937_64 make_rng(uint64_t seed, uint64_t tag0, uint64_t tag1, uint64_t tag2) {
  return std::mt19937_64(mix_seed(seed, tag0, tag1, tag2));
}

}  // namespace bicrit
