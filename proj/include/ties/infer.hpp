#pragma once

#include <span>
#include <string>
#include <vector>

#include "ties/events.hpp"

namespace ties {

inline constexpr double kDefaultKlEpsilon = 1e-10;

// Sparse degree distribution: (degree, probability), sorted by degree.
struct DegreeDistribution {
  std::vector<std::pair<std::uint32_t, double>> pmf;

  static DegreeDistribution from_degrees(std::span<const std::uint32_t> degrees);
  static DegreeDistribution from_counts(
      std::span<const std::pair<std::uint32_t, std::uint64_t>> counts);
  // Throws InputError unless probabilities sum to 1 within 1e-12.
  void validate() const;
  std::uint32_t max_degree() const;
};

// KL(P||Q) over P's support; Q is epsilon-smoothed so missing support stays
// finite. Identical distributions give ~0 (within -epsilon * |support|).
double kl_divergence(const DegreeDistribution& p, const DegreeDistribution& q,
                     double epsilon = kDefaultKlEpsilon);

struct PairScore {
  PlayerId x = 0, y = 0;
  double score = 0;
};

// Sorted unique score values, subsampled to at most max_candidates
// (log-spaced, endpoints kept) when the unique count is larger.
std::vector<double> candidate_thresholds(std::span<const PairScore> scores,
                                         std::size_t max_candidates = 512);

// Threshold whose induced degree distribution minimizes KL divergence from
// the survey distribution; ties break toward the larger (sparser) threshold.
double threshold_undersampled(const DegreeDistribution& survey,
                              std::span<const double> candidates,
                              std::span<const PairScore> scores,
                              double epsilon = kDefaultKlEpsilon);

// Boundary threshold for the max-degree cap: the smallest candidate whose
// induced maximum degree is within the cap (all larger candidates also
// satisfy it by monotonicity).
double threshold_oversampled(std::uint32_t max_degree_cap,
                             std::span<const double> candidates,
                             std::span<const PairScore> scores);

// Undirected simple graph of all pairs scoring at or above the threshold.
// Nodes are edge endpoints only; isolated players are excluded.
class InferredGraph {
 public:
  std::vector<PlayerId> node_ids;       // sorted
  std::vector<std::uint64_t> offsets;   // CSR
  std::vector<std::uint32_t> adjacency; // neighbor node indices, sorted per node
  double threshold = 0;
  std::string rule;

  std::size_t node_count() const { return node_ids.size(); }
  std::uint64_t edge_count() const { return adjacency.size() / 2; }
  std::uint32_t degree(std::uint32_t node) const {
    return static_cast<std::uint32_t>(offsets[node + 1] - offsets[node]);
  }
  std::span<const std::uint32_t> neighbors(std::uint32_t node) const {
    return std::span<const std::uint32_t>(adjacency)
        .subspan(offsets[node], offsets[node + 1] - offsets[node]);
  }
  bool has_edge(std::uint32_t a, std::uint32_t b) const;
  std::vector<std::pair<PlayerId, PlayerId>> edges() const;  // sorted, x < y

  static InferredGraph from_edges(std::span<const std::pair<PlayerId, PlayerId>> edges);
};

InferredGraph materialize(std::span<const PairScore> scores, double threshold,
                          const std::string& rule = "manual");

// Degree distribution of the graph induced at the given threshold.
DegreeDistribution induced_degree_distribution(std::span<const PairScore> scores,
                                               double threshold);

}  // namespace ties
