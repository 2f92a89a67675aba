#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Ground-set arithmetic, value oracles, vector operators and seed splitting.
// Everything downstream (constraints, solvers, rounding) is built on top of
// the types in this header.

namespace bicrit {

using Real = double;

inline constexpr Real kTol = 1e-9;         // default comparison tolerance
inline constexpr int kMaxSetElements = 63;  // bitset-backed sets

struct GroundSet {
  int n = 0;
};

// Subset of {0, ..., n-1} with bitset semantics.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n) : n_(check_n(n)) {}
  ElementSet(int n, uint64_t bits) : n_(check_n(n)), bits_(bits) {
    if (n < 64 && (bits >> n) != 0) throw std::out_of_range("ElementSet: bits outside ground set");
  }
  ElementSet(int n, std::initializer_list<int> elems) : n_(check_n(n)) {
    for (int u : elems) add(u);
  }

  static ElementSet empty(int n) { return ElementSet(n); }
  static ElementSet full(int n) {
    return ElementSet(n, n == 0 ? 0 : (~uint64_t{0} >> (64 - n)));
  }
  static ElementSet singleton(int n, int u) { return ElementSet(n).with(u); }
  static ElementSet from_elements(int n, const std::vector<int>& elems) {
    ElementSet s(n);
    for (int u : elems) s.add(u);
    return s;
  }

  int universe_size() const { return n_; }
  uint64_t bits() const { return bits_; }
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }

  bool contains(int u) const {
    check_element(u);
    return (bits_ >> u) & 1;
  }
  void add(int u) {
    check_element(u);
    bits_ |= uint64_t{1} << u;
  }
  void remove(int u) {
    check_element(u);
    bits_ &= ~(uint64_t{1} << u);
  }
  ElementSet with(int u) const {
    ElementSet s = *this;
    s.add(u);
    return s;
  }
  ElementSet without(int u) const {
    ElementSet s = *this;
    s.remove(u);
    return s;
  }

  ElementSet complement() const { return ElementSet(n_, full(n_).bits_ & ~bits_); }
  ElementSet unite(const ElementSet& o) const { return ElementSet(n_, bits_ | check_same(o).bits_); }
  ElementSet intersect(const ElementSet& o) const { return ElementSet(n_, bits_ & check_same(o).bits_); }
  ElementSet minus(const ElementSet& o) const { return ElementSet(n_, bits_ & ~check_same(o).bits_); }
  bool subset_of(const ElementSet& o) const { return (bits_ & ~check_same(o).bits_) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }

  // Orders sets by their sorted element lists (used for deterministic ties).
  static bool lex_less(const ElementSet& a, const ElementSet& b);

  std::string to_string() const;

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxSetElements) throw std::out_of_range("ElementSet: ground set size out of range");
    return n;
  }
  void check_element(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("ElementSet: element out of range");
  }
  const ElementSet& check_same(const ElementSet& o) const {
    if (o.n_ != n_) throw std::invalid_argument("ElementSet: ground set mismatch");
    return o;
  }

  int n_ = 0;
  uint64_t bits_ = 0;
};

// Value oracle for f: 2^N -> R>=0. Copies share evaluator and query counter.
// The monotone/symmetric flags are advisory claims; they can be checked
// exhaustively with the verifiers in oracle.hpp.
class SetFunctionOracle {
 public:
  using Evaluator = std::function<Real(const ElementSet&)>;

  SetFunctionOracle() = default;
  SetFunctionOracle(int n, Evaluator evaluator, bool is_monotone = false, bool is_symmetric = false,
                    std::string name = "f");

  int n() const { return state().n; }
  bool is_monotone() const { return state().monotone; }
  bool is_symmetric() const { return state().symmetric; }
  const std::string& name() const { return state().name; }

  Real value(const ElementSet& s) const;
  Real operator()(const ElementSet& s) const { return value(s); }

  long long query_count() const { return state().queries->load(); }

  // Memoizing view keyed by bitset; shares the query counter with this oracle
  // and charges it only for distinct subsets. Not safe for concurrent use
  // (a cached oracle is meant to be confined to a single solver run).
  SetFunctionOracle cached() const;

  bool valid() const { return state_ != nullptr; }

 private:
  struct State {
    int n = 0;
    Evaluator evaluator;
    bool monotone = false;
    bool symmetric = false;
    std::string name;
    std::shared_ptr<std::atomic<long long>> queries;
  };
  const State& state() const {
    if (!state_) throw std::logic_error("SetFunctionOracle: empty oracle");
    return *state_;
  }
  std::shared_ptr<const State> state_;
};

// f(u | S) = f(S + u) - f(S).
Real marginal(const SetFunctionOracle& f, const ElementSet& s, int u);

// Point in [0,1]^N (or a gradient / weight vector over the ground set).
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(int n, Real fill = 0.0) : coords_(check_dim(n), fill) {}
  explicit DenseVector(std::vector<Real> coords) : coords_(std::move(coords)) { check_dim((int)coords_.size()); }
  DenseVector(std::initializer_list<Real> coords) : coords_(coords) {}

  static DenseVector zeros(int n) { return DenseVector(n, 0.0); }
  static DenseVector ones(int n) { return DenseVector(n, 1.0); }
  static DenseVector indicator(const ElementSet& s);

  int n() const { return (int)coords_.size(); }
  Real operator[](int u) const { return coords_.at(u); }
  Real& operator[](int u) { return coords_.at(u); }
  const std::vector<Real>& coords() const { return coords_; }

  bool in_unit_box(Real tol = 1e-12) const;
  // Support of positive coordinates as a set (requires n <= 63).
  ElementSet support(Real tol = 0.0) const;

  std::string to_string() const;

 private:
  static int check_dim(int n) {
    if (n < 0) throw std::invalid_argument("DenseVector: negative dimension");
    return n;
  }
  std::vector<Real> coords_;
};

// Coordinate-wise operators from the preliminaries. Inputs must live on the
// same ground set; prob_sum additionally requires points of [0,1]^N.
DenseVector join(const DenseVector& x, const DenseVector& y);      // max
DenseVector meet(const DenseVector& x, const DenseVector& y);      // min
DenseVector hadamard(const DenseVector& x, const DenseVector& y);  // product
DenseVector prob_sum(const DenseVector& x, const DenseVector& y);  // x + y - x*y

DenseVector operator+(const DenseVector& x, const DenseVector& y);
DenseVector operator-(const DenseVector& x, const DenseVector& y);
DenseVector scale(const DenseVector& x, Real s);
Real dot(const DenseVector& x, const DenseVector& y);
Real inf_norm(const DenseVector& x);
DenseVector clamp01(const DenseVector& x);

// Outcome of a bicriteria solver run: the solution (set or fractional), its
// objective value, the achieved infeasibility certificate (cost/B, cover
// count, or fractional scale), and the number of distinct oracle queries.
struct BicriteriaOutcome {
  std::variant<ElementSet, DenseVector> solution;
  Real value = 0.0;
  Real infeasibility_certificate = 0.0;
  bool certificate_available = true;
  long long queries = 0;
  uint64_t seed = 0;

  bool is_set() const { return std::holds_alternative<ElementSet>(solution); }
  const ElementSet& solution_set() const { return std::get<ElementSet>(solution); }
  const DenseVector& solution_vector() const { return std::get<DenseVector>(solution); }
};

// Deterministic seed splitting: every random decision in the library derives
// its generator from a single 64-bit run seed mixed with structural tags
// (solver id, phase, step).
uint64_t mix_seed(uint64_t seed, uint64_t tag0, uint64_t tag1 = 0, uint64_t tag2 = 0);
std::mt19937_64 make_rng(uint64_t seed, uint64_t tag0 = 0, uint64_t tag1 = 0, uint64_t tag2 = 0);

// Iteration helper: calls fn(mask) for every subset mask of {0..n-1} in
// Gray-code order (consecutive masks differ in one bit).
template <typename Fn>
void for_each_subset_gray(int n, Fn&& fn) {
  if (n < 0 || n > kMaxSetElements) throw std::out_of_range("for_each_subset_gray: n out of range");
  const uint64_t count = uint64_t{1} << n;
  for (uint64_t i = 0; i < count; ++i) fn(i ^ (i >> 1));
}

}  // namespace bicrit
