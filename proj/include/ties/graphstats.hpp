#pragma once

#include <array>
#include <span>
#include <vector>

#include "ties/infer.hpp"

namespace ties {

// Local clustering coefficient: edges among neighbors over C(degree, 2);
// zero for degree < 2.
double clustering(const InferredGraph& g, std::uint32_t node);

// Component sizes by disjoint-set union, sorted descending.
std::vector<std::uint64_t> component_sizes(const InferredGraph& g);

struct GraphSummary {
  std::vector<std::pair<std::uint32_t, double>> degree_ccdf;  // P(deg >= d) at observed d
  // Mean clustering per degree, degrees >= 2 only.
  std::vector<std::pair<std::uint32_t, double>> mean_clustering_by_degree;
  // Clustering histogram over all nodes, bins [0,0.1), ..., [0.9,1.0].
  std::array<std::uint64_t, 10> clustering_histogram{};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> component_size_histogram;
  std::uint64_t component_count = 0;
  double median_degree = 0;
  std::uint64_t node_count = 0;
  std::uint64_t edge_count = 0;
};

GraphSummary summarize(const InferredGraph& g, int threads = 1);

}  // namespace ties
