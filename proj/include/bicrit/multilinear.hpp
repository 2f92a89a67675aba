#pragma once

#include "bicrit/core.hpp"

// Exact and Monte-Carlo evaluation of the multilinear extension
// F(x) = E[f(R(x))], its partial derivatives and gradients.

namespace bicrit {

class MultilinearEvaluator {
 public:
  // Exact mode enumerates all 2^n terms (refuses n > 24; tabulates f for
  // n <= 22, re-queries the oracle per evaluation above that).
  static MultilinearEvaluator exact(SetFunctionOracle f);

  // Unbiased estimator averaging f over `samples` draws of R(x). Common
  // random numbers: sample k always uses the uniforms derived from
  // (seed, k), across coordinates and across evaluation points.
  static MultilinearEvaluator sampled(SetFunctionOracle f, int samples, uint64_t seed);

  Real eval(const DenseVector& x) const;

  // dF/dx_u as the clamped difference F(x with x_u=1) - F(x with x_u=0);
  // multilinearity makes this independent of x_u and well-defined at 0/1.
  Real partial(const DenseVector& x, int u) const;

  DenseVector gradient(const DenseVector& x) const;

  bool is_exact() const { return exact_; }
  int n() const { return f_.n(); }
  const SetFunctionOracle& oracle() const { return f_; }
  int samples() const { return samples_; }

  // Sampled mode: a copy whose sample stream is split off deterministically
  // for the given tag (solvers pass the step index). Exact mode: identity.
  MultilinearEvaluator reseeded(uint64_t tag) const;

 private:
  MultilinearEvaluator() = default;
  Real exact_eval(const DenseVector& x) const;
  Real sampled_clamped_diff(const DenseVector& x, int u) const;

  SetFunctionOracle f_;
  bool exact_ = true;
  int samples_ = 0;
  uint64_t seed_ = 0;
  std::shared_ptr<const std::vector<Real>> table_;  // f values by mask (exact, n <= 22)
};

// Default per-step sample count for solver-internal gradient estimates when
// running in sampled mode: max(1000, ceil(10 n ln n)).
int default_gradient_samples(int n);

}  // namespace bicrit
