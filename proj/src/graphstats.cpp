#include "ties/graphstats.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ties/parallel.hpp"

namespace ties {

namespace {

// Union-find with path halving and union by size.
struct DisjointSet {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;

  explicit DisjointSet(std::size_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), 0u);
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void merge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

double clustering(const InferredGraph& g, std::uint32_t node) {
  if (node >= g.node_count()) throw InputError("unknown node index");
  const auto nbrs = g.neighbors(node);
  const std::uint64_t degree = nbrs.size();
  if (degree < 2) return 0.0;
  std::uint64_t links = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    // The ordering constraint counts each connected neighbor pair once.
    for (std::uint32_t w : g.neighbors(nbrs[i])) {
      if (w > nbrs[i] && std::binary_search(nbrs.begin(), nbrs.end(), w)) ++links;
    }
  }
  return static_cast<double>(links) / (static_cast<double>(degree) * (degree - 1) / 2.0);
}

std::vector<std::uint64_t> component_sizes(const InferredGraph& g) {
  DisjointSet ds(g.node_count());
  for (std::uint32_t u = 0; u < g.node_count(); ++u) {
    for (std::uint32_t v : g.neighbors(u)) {
      if (v > u) ds.merge(u, v);
    }
  }
  std::map<std::uint32_t, std::uint64_t> roots;
  for (std::uint32_t u = 0; u < g.node_count(); ++u) ++roots[ds.find(u)];
  std::vector<std::uint64_t> sizes;
  sizes.reserve(roots.size());
  for (const auto& [root, size] : roots) sizes.push_back(size);
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

GraphSummary summarize(const InferredGraph& g, int threads) {
  GraphSummary s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  if (g.node_count() == 0) return s;

  // Degree CCDF at every observed degree.
  std::vector<std::uint32_t> degrees(g.node_count());
  for (std::uint32_t u = 0; u < g.node_count(); ++u) degrees[u] = g.degree(u);
  {
    std::vector<std::uint32_t> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    s.median_degree = sorted.size() % 2 == 1
                          ? sorted[sorted.size() / 2]
                          : 0.5 * (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]);
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      s.degree_ccdf.emplace_back(sorted[i], static_cast<double>(sorted.size() - i) / n);
      i = j;
    }
  }

  // Per-node clustering, parallel over nodes.
  std::vector<double> coeff(g.node_count(), 0.0);
  parallel_for(g.node_count(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t u = lo; u < hi; ++u) {
      coeff[u] = clustering(g, static_cast<std::uint32_t>(u));
    }
  });

  std::map<std::uint32_t, std::pair<double, std::uint64_t>> by_degree;
  for (std::uint32_t u = 0; u < g.node_count(); ++u) {
    const double c = coeff[u];
    int bin = static_cast<int>(c * 10.0);
    if (bin > 9) bin = 9;  // the last bin is closed at 1.0
    ++s.clustering_histogram[static_cast<std::size_t>(bin)];
    if (degrees[u] >= 2) {
      auto& cell = by_degree[degrees[u]];
      cell.first += c;
      cell.second += 1;
    }
  }
  for (const auto& [degree, cell] : by_degree) {
    s.mean_clustering_by_degree.emplace_back(degree,
                                             cell.first / static_cast<double>(cell.second));
  }

  const std::vector<std::uint64_t> sizes = component_sizes(g);
  s.component_count = sizes.size();
  std::map<std::uint64_t, std::uint64_t> size_hist;
  for (std::uint64_t size : sizes) ++size_hist[size];
  s.component_size_histogram.assign(size_hist.begin(), size_hist.end());
  return s;
}

}  // namespace ties
