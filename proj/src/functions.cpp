#include "bicrit/functions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bicrit {

namespace {

constexpr Real kDomainTol = 1e-9;

void check_domain(Real c, Real x, Real y) {
  if (!(c > 0 && c <= 0.5 + 1e-12)) throw std::invalid_argument("hard instance: c must lie in (0, 1/2]");
  if (x < -kDomainTol || x > c + kDomainTol || y < -kDomainTol || y > 1.0 - c + kDomainTol)
    throw std::invalid_argument("hard instance: (x, y) outside [0,c] x [0,1-c]");
}

}  // namespace

Real eval_G(Real c, Real x, Real y) {
  check_domain(c, x, y);
  x = std::clamp(x, 0.0, c);
  y = std::clamp(y, 0.0, 1.0 - c);
  return 1.0 - std::pow(std::max(0.0, 1.0 - (x + y)), 1.0 / c);
}

Real eval_F_hard(Real c, Real delta_prime, Real x, Real y) {
  check_domain(c, x, y);
  if (!(delta_prime > 0 && delta_prime < c / 4))
    throw std::invalid_argument("eval_F_hard: delta' must lie in (0, c/4)");
  x = std::clamp(x, 0.0, c);
  y = std::clamp(y, 0.0, 1.0 - c);
  const Real threshold = c / (1.0 - c) * y + delta_prime;
  // Wherever x <= c y/(1-c) + delta' the max vanishes and the min picks x + y,
  // collapsing the expression to G (also the definition for large y).
  if (y >= (1.0 - delta_prime) * (1.0 - c) || x <= threshold) return eval_G(c, x, y);
  const Real ratio = (x - threshold) / (c * (1.0 - y / (1.0 - c) - delta_prime));
  const Real cut = y / (1.0 - c) + delta_prime;
  return 1.0 - (1.0 - ratio) * std::pow(std::max(0.0, 1.0 - cut), 1.0 / c);
}

namespace {

SetFunctionOracle make_modular(const Modular& fam) {
  for (Real w : fam.weights)
    if (!(w >= 0)) throw std::invalid_argument("Modular: negative weight");
  auto weights = fam.weights;
  return SetFunctionOracle(
      (int)weights.size(),
      [weights](const ElementSet& s) {
        Real acc = 0;
        for (int u : s.elements()) acc += weights[u];
        return acc;
      },
      /*monotone=*/true, /*symmetric=*/false, "modular");
}

SetFunctionOracle make_coverage(const Coverage& fam) {
  const int n = (int)fam.covers.size();
  for (Real w : fam.universe_weights)
    if (!(w >= 0)) throw std::invalid_argument("Coverage: negative universe weight");
  for (const auto& cov : fam.covers)
    for (int j : cov)
      if (j < 0 || j >= (int)fam.universe_weights.size())
        throw std::invalid_argument("Coverage: cover index out of range");
  auto weights = fam.universe_weights;
  auto covers = fam.covers;
  return SetFunctionOracle(
      n,
      [weights, covers](const ElementSet& s) {
        std::vector<char> hit(weights.size(), 0);
        Real acc = 0;
        for (int u : s.elements())
          for (int j : covers[u])
            if (!hit[j]) {
              hit[j] = 1;
              acc += weights[j];
            }
        return acc;
      },
      /*monotone=*/true, /*symmetric=*/false, "coverage");
}

SetFunctionOracle make_directed_cut(const DirectedCut& fam) {
  for (auto& [a, b] : fam.arcs)
    if (a < 0 || a >= fam.n || b < 0 || b >= fam.n) throw std::invalid_argument("DirectedCut: bad arc");
  auto arcs = fam.arcs;
  return SetFunctionOracle(
      fam.n,
      [arcs](const ElementSet& s) {
        Real acc = 0;
        for (auto& [a, b] : arcs)
          if (s.contains(a) && !s.contains(b)) acc += 1.0;
        return acc;
      },
      /*monotone=*/false, /*symmetric=*/false, "directed_cut");
}

SetFunctionOracle make_undirected_cut(const UndirectedCut& fam) {
  for (auto& [a, b] : fam.edges)
    if (a < 0 || a >= fam.n || b < 0 || b >= fam.n) throw std::invalid_argument("UndirectedCut: bad edge");
  auto edges = fam.edges;
  return SetFunctionOracle(
      fam.n,
      [edges](const ElementSet& s) {
        Real acc = 0;
        for (auto& [a, b] : edges)
          if (s.contains(a) != s.contains(b)) acc += 1.0;
        return acc;
      },
      /*monotone=*/false, /*symmetric=*/true, "undirected_cut");
}

uint64_t draw_opt_bits(int n, int size, uint64_t seed) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto rng = make_rng(seed, 0x4f5054 /* "OPT" */);
  std::shuffle(idx.begin(), idx.end(), rng);
  uint64_t bits = 0;
  for (int j = 0; j < size; ++j) bits |= uint64_t{1} << idx[j];
  return bits;
}

InstantiatedInstance make_hard_monotone(const HardMonotone& fam, uint64_t seed) {
  if (fam.h < 1 || fam.ell < 2 || fam.h * 2 > fam.ell)
    throw std::invalid_argument("HardMonotone: need c = h/ell in (0, 1/2]");
  if (fam.i < 1) throw std::invalid_argument("HardMonotone: scale must be >= 1");
  const int n = fam.i * fam.ell;
  if (n > kMaxSetElements) throw std::out_of_range("HardMonotone: ground set too large");
  const Real c = (Real)fam.h / fam.ell;
  if (!(fam.delta_prime > 0 && fam.delta_prime < c / 4))
    throw std::invalid_argument("HardMonotone: delta' must lie in (0, c/4)");
  const int opt_size = fam.i * fam.h;
  uint64_t opt = fam.opt_bits ? *fam.opt_bits : draw_opt_bits(n, opt_size, seed);
  if (__builtin_popcountll(opt) != opt_size) throw std::invalid_argument("HardMonotone: |O| must equal i*h");
  const Real scale = (Real)n;
  const Real dp = fam.delta_prime;
  SetFunctionOracle f(
      n,
      [opt, scale, c, dp](const ElementSet& s) {
        const int in_opt = __builtin_popcountll(s.bits() & opt);
        const int out_opt = s.size() - in_opt;
        return eval_F_hard(c, dp, in_opt / scale, out_opt / scale);
      },
      /*monotone=*/true, /*symmetric=*/false, "hard_monotone");
  return InstantiatedInstance{std::move(f), CardinalityConstraint(opt_size)};
}

InstantiatedInstance make_hard_monotone_extended(const HardMonotoneExtended& fam, uint64_t seed) {
  InstantiatedInstance inner = make_hard_monotone(fam.inner, seed);
  if (fam.extra < 0) throw std::invalid_argument("HardMonotoneExtended: negative extra count");
  if (!(fam.r >= 0 && fam.r <= 1)) throw std::invalid_argument("HardMonotoneExtended: r must lie in [0,1]");
  const int n0 = inner.oracle.n();
  const int n = n0 + fam.extra;
  if (n > kMaxSetElements) throw std::out_of_range("HardMonotoneExtended: ground set too large");
  const Real slope = fam.r / ((Real)(fam.inner.ell - fam.inner.h) * fam.inner.i);
  SetFunctionOracle base = inner.oracle;
  const uint64_t inner_mask = ElementSet::full(n0).bits();
  SetFunctionOracle f(
      n,
      [base, n0, inner_mask, slope](const ElementSet& s) {
        const int outside = s.size() - __builtin_popcountll(s.bits() & inner_mask);
        return base.value(ElementSet(n0, s.bits() & inner_mask)) + slope * outside;
      },
      /*monotone=*/true, /*symmetric=*/false, "hard_monotone_extended");
  const int budget = fam.inner.i * fam.inner.h + fam.extra;
  return InstantiatedInstance{std::move(f), CardinalityConstraint(budget)};
}

InstantiatedInstance make_arcs_symmetry_gap(const ArcsSymmetryGap& fam) {
  const int n = fam.n;
  if (n < 1 || 2 * n > kMaxSetElements) throw std::invalid_argument("ArcsSymmetryGap: bad n");
  // Elements 0..n-1 are the a_i, n..2n-1 the b_i.
  DirectedCut cut;
  cut.n = 2 * n;
  for (int i = 0; i < n; ++i) cut.arcs.emplace_back(i, n + i);
  SetFunctionOracle f = make_directed_cut(cut);
  std::vector<int> part_of(2 * n);
  for (int i = 0; i < n; ++i) part_of[i] = 0;
  for (int i = n; i < 2 * n; ++i) part_of[i] = 1;
  SolvableRegion bases = SolvableRegion::partition_bases(part_of, {1, n - 1});
  return InstantiatedInstance{std::move(f), Constraint(bases)};
}

InstantiatedInstance make_kappa_blend(const KappaBlend& fam) {
  const int n = fam.n;
  if (n < 1) throw std::invalid_argument("KappaBlend: bad n");
  const int total = 2 + 2 * n * n;
  if (total > kMaxSetElements) throw std::out_of_range("KappaBlend: ground set too large");
  if (!(fam.kappa >= 0 && fam.kappa <= 1)) throw std::invalid_argument("KappaBlend: kappa outside [0,1]");
  const Real kappa = fam.kappa;
  // Element 0 = a, element 1 = b, then A = {a_{i,j}} row-major, then B.
  SetFunctionOracle f(
      total,
      [n, kappa](const ElementSet& s) {
        const bool has_a = s.contains(0), has_b = s.contains(1);
        const Real g = (has_a != has_b) ? 1.0 : 0.0;
        Real prod_a = 1.0, prod_b = 1.0;
        for (int i = 0; i < n; ++i) {
          int row_a = 0, row_b = 0;
          for (int j = 0; j < n; ++j) {
            if (s.contains(2 + i * n + j)) ++row_a;
            if (s.contains(2 + n * n + i * n + j)) ++row_b;
          }
          prod_a *= 1.0 - (Real)row_a / n;
          prod_b *= 1.0 - (Real)row_b / n;
        }
        const Real h = (has_a ? 0.0 : (1.0 - prod_a)) + (has_b ? 0.0 : (1.0 - prod_b));
        return kappa * g + (1.0 - kappa) * h;
      },
      /*monotone=*/false, /*symmetric=*/false, "kappa_blend");
  return InstantiatedInstance{std::move(f), CardinalityConstraint(n + 1)};
}

}  // namespace

InstantiatedInstance instantiate(const FunctionFamily& family, uint64_t seed) {
  return std::visit(
      [&](const auto& fam) -> InstantiatedInstance {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Modular>)
          return {make_modular(fam), std::nullopt};
        else if constexpr (std::is_same_v<T, Coverage>)
          return {make_coverage(fam), std::nullopt};
        else if constexpr (std::is_same_v<T, DirectedCut>)
          return {make_directed_cut(fam), std::nullopt};
        else if constexpr (std::is_same_v<T, UndirectedCut>)
          return {make_undirected_cut(fam), std::nullopt};
        else if constexpr (std::is_same_v<T, HardMonotone>)
          return make_hard_monotone(fam, seed);
        else if constexpr (std::is_same_v<T, HardMonotoneExtended>)
          return make_hard_monotone_extended(fam, seed);
        else if constexpr (std::is_same_v<T, ArcsSymmetryGap>)
          return make_arcs_symmetry_gap(fam);
        else
          return make_kappa_blend(fam);
      },
      family);
}

int family_ground_size(const FunctionFamily& family) {
  return std::visit(
      [](const auto& fam) -> int {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Modular>)
          return (int)fam.weights.size();
        else if constexpr (std::is_same_v<T, Coverage>)
          return (int)fam.covers.size();
        else if constexpr (std::is_same_v<T, DirectedCut>)
          return fam.n;
        else if constexpr (std::is_same_v<T, UndirectedCut>)
          return fam.n;
        else if constexpr (std::is_same_v<T, HardMonotone>)
          return fam.i * fam.ell;
        else if constexpr (std::is_same_v<T, HardMonotoneExtended>)
          return fam.inner.i * fam.inner.ell + fam.extra;
        else if constexpr (std::is_same_v<T, ArcsSymmetryGap>)
          return 2 * fam.n;
        else
          return 2 + 2 * fam.n * fam.n;
      },
      family);
}

std::string family_tag(const FunctionFamily& family) {
  return std::visit(
      [](const auto& fam) -> std::string {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, Modular>)
          return "modular";
        else if constexpr (std::is_same_v<T, Coverage>)
          return "coverage";
        else if constexpr (std::is_same_v<T, DirectedCut>)
          return "directed_cut";
        else if constexpr (std::is_same_v<T, UndirectedCut>)
          return "undirected_cut";
        else if constexpr (std::is_same_v<T, HardMonotone>)
          return "hard_monotone";
        else if constexpr (std::is_same_v<T, HardMonotoneExtended>)
          return "hard_monotone_extended";
        else if constexpr (std::is_same_v<T, ArcsSymmetryGap>)
          return "arcs_symmetry_gap";
        else
          return "kappa_blend";
      },
      family);
}

Coverage random_coverage(int n, int universe, uint64_t seed) {
  auto rng = make_rng(seed, 0xc0);
  std::uniform_real_distribution<Real> weight(0.0, 1.0);
  Coverage fam;
  fam.universe_weights.resize(universe);
  for (Real& w : fam.universe_weights) w = 1.0 - weight(rng);  // Uniform(0, 1]
  fam.covers.resize(n);
  std::uniform_int_distribution<int> cover_size(1, std::max(1, universe / 2));
  std::uniform_int_distribution<int> item(0, universe - 1);
  for (auto& cov : fam.covers) {
    int sz = cover_size(rng);
    std::vector<char> used(universe, 0);
    for (int t = 0; t < sz; ++t) {
      int j = item(rng);
      if (!used[j]) {
        used[j] = 1;
        cov.push_back(j);
      }
    }
    std::sort(cov.begin(), cov.end());
  }
  return fam;
}

Modular random_modular(int n, uint64_t seed) {
  auto rng = make_rng(seed, 0xd0);
  std::uniform_real_distribution<Real> weight(0.0, 1.0);
  Modular fam;
  fam.weights.resize(n);
  for (Real& w : fam.weights) w = 1.0 - weight(rng);
  return fam;
}

DirectedCut random_directed_cut(int n, int arcs, uint64_t seed) {
  auto rng = make_rng(seed, 0xe0);
  std::uniform_int_distribution<int> node(0, n - 1);
  DirectedCut fam;
  fam.n = n;
  while ((int)fam.arcs.size() < arcs) {
    int a = node(rng), b = node(rng);
    if (a != b) fam.arcs.emplace_back(a, b);
  }
  return fam;
}

UndirectedCut random_undirected_cut(int n, int edges, uint64_t seed) {
  auto rng = make_rng(seed, 0xf0);
  std::uniform_int_distribution<int> node(0, n - 1);
  UndirectedCut fam;
  fam.n = n;
  while ((int)fam.edges.size() < edges) {
    int a = node(rng), b = node(rng);
    if (a != b) fam.edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return fam;
}

}  // namespace bicrit
