#include "ties/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ties {

namespace {

double sigmoid(double t) {
  if (t >= 0) {
    return 1.0 / (1.0 + std::exp(-t));
  }
  const double e = std::exp(t);
  return e / (1.0 + e);
}

// log(sigmoid(t)) without overflow for large |t|.
double log_sigmoid(double t) {
  if (t > 0) return -std::log1p(std::exp(-t));
  return t - std::log1p(std::exp(t));
}

bool strictly_separable(std::span<const double> x, std::span<const int> y) {
  double min_pos = std::numeric_limits<double>::infinity();
  double max_pos = -std::numeric_limits<double>::infinity();
  double min_neg = std::numeric_limits<double>::infinity();
  double max_neg = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y[i]) {
      min_pos = std::min(min_pos, x[i]);
      max_pos = std::max(max_pos, x[i]);
    } else {
      min_neg = std::min(min_neg, x[i]);
      max_neg = std::max(max_neg, x[i]);
    }
  }
  return min_pos > max_neg || min_neg > max_pos;
}

}  // namespace

double logistic_log_likelihood(std::span<const double> x, std::span<const int> y,
                               double intercept, double theta) {
  double ll = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double eta = intercept + theta * x[i];
    ll += y[i] ? log_sigmoid(eta) : log_sigmoid(-eta);
  }
  return ll;
}

void logistic_gradient(std::span<const double> x, std::span<const int> y, double intercept,
                       double theta, double& d_intercept, double& d_theta) {
  d_intercept = 0;
  d_theta = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = static_cast<double>(y[i]) - sigmoid(intercept + theta * x[i]);
    d_intercept += r;
    d_theta += r * x[i];
  }
}

LogisticModel fit_logistic(std::span<const double> x, std::span<const int> y,
                           const LogisticOptions& options) {
  if (x.size() != y.size()) throw InputError("feature/label length mismatch");
  if (x.size() < 2) throw InputError("logistic fit needs at least two examples");
  std::uint64_t pos = 0;
  for (int l : y) pos += (l != 0);
  if (pos == 0 || pos == y.size()) throw InputError("logistic fit needs both classes");

  LogisticModel m;
  const double base_rate = static_cast<double>(pos) / static_cast<double>(y.size());

  double mean = 0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  double var = 0;
  for (double v : x) var += (v - mean) * (v - mean);
  if (var == 0) {
    // Feature carries no information; the model collapses to the base rate.
    m.degenerate = true;
    m.converged = true;
    m.theta = 0;
    m.intercept = std::log(base_rate / (1.0 - base_rate));
    m.sigma = std::numeric_limits<double>::infinity();
    m.z = 0;
    m.p_value = 1;
    m.log_likelihood = logistic_log_likelihood(x, y, m.intercept, m.theta);
    double g0, g1;
    logistic_gradient(x, y, m.intercept, m.theta, g0, g1);
    m.gradient_norm = std::sqrt(g0 * g0 + g1 * g1);
    return m;
  }

  m.separated = strictly_separable(x, y);

  double b0 = std::log(base_rate / (1.0 - base_rate));
  double b1 = 0;
  double ll = logistic_log_likelihood(x, y, b0, b1);
  double h00 = 0, h01 = 0, h11 = 0;

  for (m.iterations = 0; m.iterations < options.max_iterations; ++m.iterations) {
    double g0, g1;
    logistic_gradient(x, y, b0, b1, g0, g1);
    if (std::sqrt(g0 * g0 + g1 * g1) < options.gradient_target) {
      m.converged = true;
      break;
    }
    h00 = h01 = h11 = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double p = sigmoid(b0 + b1 * x[i]);
      const double w = p * (1.0 - p);
      h00 += w;
      h01 += w * x[i];
      h11 += w * x[i] * x[i];
    }
    const double det = h00 * h11 - h01 * h01;
    if (det <= 0 || !std::isfinite(det)) break;  // information exhausted
    const double step0 = (h11 * g0 - h01 * g1) / det;
    const double step1 = (h00 * g1 - h01 * g0) / det;

    // Newton decrement: predicted likelihood gain of the full step. In the
    // terminal phase it falls below the resolution of ll itself, where
    // backtracking on ll comparisons misfires; take the raw step and let
    // the gradient check terminate the loop.
    const double decrement = g0 * step0 + g1 * step1;
    if (decrement < 1e-6) {
      b0 += step0;
      b1 += step1;
      ll = logistic_log_likelihood(x, y, b0, b1);
      continue;
    }

    // Backtrack if the full Newton step overshoots.
    double scale = 1.0;
    double next_ll = logistic_log_likelihood(x, y, b0 + step0, b1 + step1);
    int halvings = 0;
    while (next_ll < ll && halvings < 30) {
      scale *= 0.5;
      ++halvings;
      next_ll = logistic_log_likelihood(x, y, b0 + scale * step0, b1 + scale * step1);
    }
    const double improvement = next_ll - ll;
    if (improvement <= 0 && halvings >= 30) break;  // stuck, likely separated
    b0 += scale * step0;
    b1 += scale * step1;
    ll = next_ll;
    if (std::abs(improvement) < options.tolerance) break;
  }

  m.intercept = b0;
  m.theta = b1;
  m.log_likelihood = ll;
  double g0, g1;
  logistic_gradient(x, y, b0, b1, g0, g1);
  m.gradient_norm = std::sqrt(g0 * g0 + g1 * g1);

  // Observed information at the fitted point.
  h00 = h01 = h11 = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double p = sigmoid(b0 + b1 * x[i]);
    const double w = p * (1.0 - p);
    h00 += w;
    h01 += w * x[i];
    h11 += w * x[i] * x[i];
  }
  const double det = h00 * h11 - h01 * h01;
  if (det > 0 && std::isfinite(det)) {
    m.sigma = std::sqrt(h00 / det);
  } else {
    m.sigma = std::numeric_limits<double>::infinity();
  }
  m.z = m.sigma > 0 && std::isfinite(m.sigma) ? std::abs(m.theta) / m.sigma : 0;
  m.p_value = std::erfc(m.z / std::sqrt(2.0));
  if (m.separated) m.converged = false;
  return m;
}

}  // namespace ties
