#include "bicrit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bicrit {

namespace {

std::vector<Real> value_table(const SetFunctionOracle& f, int max_n, const char* who) {
  const int n = f.n();
  if (n > max_n) throw std::invalid_argument(std::string(who) + ": ground set too large");
  std::vector<Real> table(uint64_t{1} << n);
  for (uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = f.value(ElementSet(n, mask));
  return table;
}

std::string set_str(int n, uint64_t mask) { return ElementSet(n, mask).to_string(); }

}  // namespace

BruteResult brute_opt(const SetFunctionOracle& f, const Constraint& c) {
  const int n = f.n();
  if (n > 22) throw std::invalid_argument("brute_opt: ground set too large (n <= 22)");
  const int cn = constraint_ground_size(c);
  if (cn >= 0 && cn != n) throw std::invalid_argument("brute_opt: constraint ground set mismatch");

  // Feasibility filter; knapsack costs track the Gray-code walk incrementally.
  const bool is_knap = std::holds_alternative<KnapsackConstraint>(c);
  const KnapsackConstraint* knap = is_knap ? &std::get<KnapsackConstraint>(c) : nullptr;

  bool found = false;
  ElementSet best(n);
  Real best_value = 0;
  uint64_t prev = 0;
  Real cost = 0;
  for_each_subset_gray(n, [&](uint64_t mask) {
    if (knap) {
      uint64_t diff = mask ^ prev;
      if (diff) {
        int u = __builtin_ctzll(diff);
        cost += (mask & diff) ? knap->price(u) : -knap->price(u);
      }
      prev = mask;
    }
    ElementSet s(n, mask);
    bool ok = knap ? cost <= knap->budget() + 1e-12 * std::max<Real>(1.0, knap->budget())
                   : feasible(s, c, kTol);
    if (!ok) return;
    Real v = f.value(s);
    if (!found || v > best_value || (v == best_value && ElementSet::lex_less(s, best))) {
      best = s;
      best_value = v;
      found = true;
    }
  });
  if (!found) throw std::runtime_error("brute_opt: no feasible set");
  return {best, best_value};
}

BruteResult brute_opt_unconstrained(const SetFunctionOracle& f) {
  const int n = f.n();
  if (n > 22) throw std::invalid_argument("brute_opt: ground set too large (n <= 22)");
  ElementSet best(n);
  Real best_value = f.value(best);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    ElementSet s(n, mask);
    Real v = f.value(s);
    if (v > best_value || (v == best_value && ElementSet::lex_less(s, best))) {
      best = s;
      best_value = v;
    }
  }
  return {best, best_value};
}

VerifyResult verify_submodular(const SetFunctionOracle& f, Real tol) {
  const int n = f.n();
  auto table = value_table(f, 12, "verify_submodular");
  for (uint64_t mask = 0; mask < table.size(); ++mask) {
    for (int u = 0; u < n; ++u) {
      if ((mask >> u) & 1) continue;
      for (int v = u + 1; v < n; ++v) {
        if ((mask >> v) & 1) continue;
        const uint64_t su = mask | (uint64_t{1} << u);
        const uint64_t sv = mask | (uint64_t{1} << v);
        // f(u | S) >= f(u | S + v)
        if (table[su] - table[mask] < table[su | sv] - table[sv] - tol) {
          return {false, "marginal of " + std::to_string(u) + " grows from S=" + set_str(n, mask) +
                             " to T=" + set_str(n, sv)};
        }
      }
    }
  }
  return {true, ""};
}

VerifyResult verify_monotone(const SetFunctionOracle& f, Real tol) {
  const int n = f.n();
  auto table = value_table(f, 12, "verify_monotone");
  for (uint64_t mask = 0; mask < table.size(); ++mask)
    for (int u = 0; u < n; ++u) {
      if ((mask >> u) & 1) continue;
      if (table[mask | (uint64_t{1} << u)] < table[mask] - tol)
        return {false, "adding " + std::to_string(u) + " to " + set_str(n, mask) + " decreases f"};
    }
  return {true, ""};
}

VerifyResult verify_symmetric(const SetFunctionOracle& f, Real tol) {
  const int n = f.n();
  auto table = value_table(f, 12, "verify_symmetric");
  const uint64_t full = ElementSet::full(n).bits();
  for (uint64_t mask = 0; mask < table.size(); ++mask)
    if (std::fabs(table[mask] - table[full & ~mask]) > tol)
      return {false, "f(" + set_str(n, mask) + ") != f(complement)"};
  return {true, ""};
}

VerifyResult verify_matroid(const Matroid& m) {
  const int n = m.n();
  if (n > 10) throw std::invalid_argument("verify_matroid: ground set too large (n <= 10)");
  const uint64_t count = uint64_t{1} << n;
  std::vector<char> indep(count);
  for (uint64_t mask = 0; mask < count; ++mask) indep[mask] = m.independent(ElementSet(n, mask));
  if (!indep[0]) return {false, "empty set is dependent"};
  for (uint64_t mask = 1; mask < count; ++mask) {
    if (!indep[mask]) continue;
    // down-closed
    for (uint64_t b = mask; b != 0; b &= b - 1) {
      uint64_t without = mask & ~(b & (~b + 1));
      if (!indep[without])
        return {false, "down-closure fails: " + set_str(n, mask) + " independent but " +
                           set_str(n, without) + " is not"};
    }
  }
  // exchange
  for (uint64_t s = 0; s < count; ++s) {
    if (!indep[s]) continue;
    for (uint64_t t = 0; t < count; ++t) {
      if (!indep[t] || __builtin_popcountll(s) >= __builtin_popcountll(t)) continue;
      bool extended = false;
      for (uint64_t b = t & ~s; b != 0; b &= b - 1) {
        uint64_t u_bit = b & (~b + 1);
        if (indep[s | u_bit]) {
          extended = true;
          break;
        }
      }
      if (!extended)
        return {false, "exchange fails for S=" + set_str(n, s) + ", T=" + set_str(n, t)};
    }
  }
  return {true, ""};
}

std::vector<std::pair<Real, Real>> brute_bicriteria_frontier(const SetFunctionOracle& f, const Constraint& c,
                                                             const std::vector<Real>& beta_grid) {
  const int n = f.n();
  if (n > 18) throw std::invalid_argument("brute_bicriteria_frontier: ground set too large (n <= 18)");
  std::vector<std::pair<Real, Real>> points;  // (ratio, value)
  points.reserve(uint64_t{1} << n);
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    ElementSet s(n, mask);
    points.emplace_back(infeasibility_ratio(s, c), f.value(s));
  }
  std::sort(points.begin(), points.end());
  // prefix max of value by ratio
  Real running = -std::numeric_limits<Real>::infinity();
  for (auto& [r, v] : points) {
    running = std::max(running, v);
    v = running;
  }
  std::vector<std::pair<Real, Real>> out;
  out.reserve(beta_grid.size());
  for (Real beta : beta_grid) {
    // last point with ratio <= beta (+ tolerance)
    Real best = 0;
    auto it = std::upper_bound(points.begin(), points.end(), std::make_pair(beta + 1e-12,
                                                                            std::numeric_limits<Real>::infinity()));
    if (it != points.begin()) best = std::prev(it)->second;
    out.emplace_back(beta, best);
  }
  return out;
}

}  // namespace bicrit
