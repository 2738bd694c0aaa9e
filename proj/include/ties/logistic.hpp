#pragma once

#include <span>

#include "ties/error.hpp"

namespace ties {

// Single-feature logistic model: P(y=1 | x) = sigmoid(intercept + theta * x).
struct LogisticModel {
  double intercept = 0;
  double theta = 0;
  double sigma = 0;    // standard error of theta (inverse observed information)
  double z = 0;        // |theta| / sigma
  double p_value = 1;  // two-sided normal
  bool converged = false;
  bool separated = false;   // classes strictly separable on this feature
  bool degenerate = false;  // zero-variance feature: intercept-only fit
  int iterations = 0;
  double log_likelihood = 0;
  double gradient_norm = 0;

  double score(double x) const { return intercept + theta * x; }
};

struct LogisticOptions {
  int max_iterations = 100;
  double tolerance = 1e-10;       // log-likelihood improvement threshold
  double gradient_target = 1e-9;  // gradient norm declaring the optimum reached
};

// Newton-Raphson fit. Requires at least two examples and both classes.
// Perfect separation is flagged and the model remains usable for ranking.
LogisticModel fit_logistic(std::span<const double> x, std::span<const int> y,
                           const LogisticOptions& options = {});

// Bernoulli log-likelihood and its gradient at (intercept, theta); the
// gradient entry points are exposed for verification against finite
// differences.
double logistic_log_likelihood(std::span<const double> x, std::span<const int> y,
                               double intercept, double theta);
void logistic_gradient(std::span<const double> x, std::span<const int> y, double intercept,
                       double theta, double& d_intercept, double& d_theta);

}  // namespace ties
