#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace ties {

// Deterministic random source. The engine is std::mt19937_64 (bit-stable
// across platforms); all distributions are implemented here because the
// standard library's distribution objects are implementation-defined.
// Every sampler consumes a fixed, documented number of engine draws per
// call, except poisson() and geometric_mean() whose draw count depends on
// the sampled value (still fully determined by the seed).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, 1), 53-bit resolution. One draw.
  double next_double() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, n). Rejection sampling, unbiased.
  std::uint64_t uniform(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Standard normal via Box-Muller. Two draws, second branch discarded
  // so the draw count stays fixed.
  double normal() {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  double lognormal(double mu, double sigma) {
    return std::exp(mu + sigma * normal());
  }

  double exponential(double mean) {
    double u = next_double();
    if (u <= 0) u = 0x1.0p-53;
    return -mean * std::log(u);
  }

  // Poisson by Knuth's product method; draw count grows with the value.
  std::uint64_t poisson(double mean) {
    if (mean <= 0) return 0;
    if (mean < 30.0) {
      const double limit = std::exp(-mean);
      std::uint64_t k = 0;
      double product = next_double();
      while (product > limit) {
        ++k;
        product *= next_double();
      }
      return k;
    }
    // Split large means; each half is exact, total stays Poisson.
    std::uint64_t a = poisson(mean / 2);
    std::uint64_t b = poisson(mean - mean / 2);
    return a + b;
  }

  // Geometric on {1, 2, ...} with the given mean >= 1 (number of
  // consecutive successes until the first stop).
  std::uint64_t geometric_mean(double mean) {
    if (mean <= 1.0) return 1;
    const double stop = 1.0 / mean;
    std::uint64_t k = 1;
    while (!bernoulli(stop)) ++k;
    return k;
  }

  // Index into a cumulative weight table (last entry = total mass).
  std::size_t categorical(std::span<const double> cumulative) {
    const double r = next_double() * cumulative.back();
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (cumulative[mid] <= r) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    return lo;
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // k distinct indices from [0, n), in selection order.
  std::vector<std::uint64_t> sample_without_replacement(std::uint64_t n, std::uint64_t k) {
    std::vector<std::uint64_t> pool(n);
    for (std::uint64_t i = 0; i < n; ++i) pool[i] = i;
    if (k > n) k = n;
    std::vector<std::uint64_t> out;
    out.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
      std::uint64_t j = i + uniform(n - i);
      std::swap(pool[i], pool[j]);
      out.push_back(pool[i]);
    }
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace ties
