#include "ties/infer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace ties {

namespace {

std::pair<PlayerId, PlayerId> canonical(PlayerId a, PlayerId b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

// Deduplicated canonical scored pairs, self-pairs rejected, sorted by
// descending score for incremental threshold sweeps.
std::vector<PairScore> canonical_scores(std::span<const PairScore> scores) {
  std::vector<PairScore> out;
  out.reserve(scores.size());
  for (const auto& s : scores) {
    if (s.x == s.y) throw InputError("self-pair in score list");
    auto [a, b] = canonical(s.x, s.y);
    out.push_back({a, b, s.score});
  }
  std::sort(out.begin(), out.end(), [](const PairScore& a, const PairScore& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.score < b.score;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const PairScore& a, const PairScore& b) {
                          return a.x == b.x && a.y == b.y;
                        }),
            out.end());
  std::sort(out.begin(), out.end(),
            [](const PairScore& a, const PairScore& b) { return a.score > b.score; });
  return out;
}

// Walks candidates from the largest down, adding edges as the threshold
// drops, and reports the degree histogram at each candidate.
class ThresholdSweep {
 public:
  explicit ThresholdSweep(std::vector<PairScore> sorted) : pairs_(std::move(sorted)) {}

  // Candidates must be visited in descending order.
  void advance_to(double threshold) {
    while (next_ < pairs_.size() && pairs_[next_].score >= threshold) {
      bump(pairs_[next_].x);
      bump(pairs_[next_].y);
      ++next_;
    }
  }

  DegreeDistribution distribution() const {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> counts(histogram_.begin(),
                                                                histogram_.end());
    return DegreeDistribution::from_counts(counts);
  }

  std::uint32_t max_degree() const {
    return histogram_.empty() ? 0 : histogram_.rbegin()->first;
  }

  bool empty() const { return next_ == 0; }

 private:
  void bump(PlayerId id) {
    std::uint32_t& d = degree_[id];
    if (d > 0) {
      auto it = histogram_.find(d);
      if (--it->second == 0) histogram_.erase(it);
    }
    ++d;
    ++histogram_[d];
  }

  std::vector<PairScore> pairs_;
  std::size_t next_ = 0;
  std::unordered_map<PlayerId, std::uint32_t> degree_;
  std::map<std::uint32_t, std::uint64_t> histogram_;
};

}  // namespace

DegreeDistribution DegreeDistribution::from_degrees(std::span<const std::uint32_t> degrees) {
  std::map<std::uint32_t, std::uint64_t> counts;
  for (std::uint32_t d : degrees) ++counts[d];
  std::vector<std::pair<std::uint32_t, std::uint64_t>> v(counts.begin(), counts.end());
  return from_counts(v);
}

DegreeDistribution DegreeDistribution::from_counts(
    std::span<const std::pair<std::uint32_t, std::uint64_t>> counts) {
  std::uint64_t total = 0;
  for (const auto& [degree, count] : counts) total += count;
  if (total == 0) throw InputError("empty degree distribution");
  DegreeDistribution d;
  d.pmf.reserve(counts.size());
  for (const auto& [degree, count] : counts) {
    if (count == 0) continue;
    d.pmf.emplace_back(degree, static_cast<double>(count) / static_cast<double>(total));
  }
  std::sort(d.pmf.begin(), d.pmf.end());
  return d;
}

void DegreeDistribution::validate() const {
  double sum = 0;
  for (const auto& [degree, p] : pmf) {
    if (p < 0) throw InputError("negative probability in degree distribution");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InputError("degree distribution not normalized");
  }
}

std::uint32_t DegreeDistribution::max_degree() const {
  return pmf.empty() ? 0 : pmf.back().first;
}

double kl_divergence(const DegreeDistribution& p, const DegreeDistribution& q,
                     double epsilon) {
  p.validate();
  std::unordered_map<std::uint32_t, double> q_at;
  q_at.reserve(q.pmf.size());
  for (const auto& [degree, prob] : q.pmf) q_at[degree] = prob;
  double kl = 0;
  for (const auto& [degree, prob] : p.pmf) {
    if (prob == 0) continue;
    auto it = q_at.find(degree);
    const double qv = (it == q_at.end() ? 0.0 : it->second) + epsilon;
    kl += std::log(prob / qv) * prob;
  }
  return kl;
}

std::vector<double> candidate_thresholds(std::span<const PairScore> scores,
                                         std::size_t max_candidates) {
  std::vector<double> values;
  values.reserve(scores.size());
  for (const auto& s : scores) values.push_back(s.score);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.size() <= max_candidates || max_candidates < 2) return values;

  // Log-spaced subsample over the positive range, endpoints kept.
  const double lo = std::max(values.front(), 1.0);
  const double hi = std::max(values.back(), lo);
  std::vector<double> picks;
  picks.push_back(values.front());
  const std::size_t steps = max_candidates - 1;
  for (std::size_t i = 1; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    const double target = lo * std::pow(hi / lo, t);
    auto it = std::lower_bound(values.begin(), values.end(), target);
    if (it == values.end()) --it;
    picks.push_back(*it);
  }
  std::sort(picks.begin(), picks.end());
  picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  return picks;
}

double threshold_undersampled(const DegreeDistribution& survey,
                              std::span<const double> candidates,
                              std::span<const PairScore> scores, double epsilon) {
  if (candidates.empty()) throw InputError("no candidate thresholds");
  survey.validate();
  std::vector<double> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end(), std::greater<>());

  ThresholdSweep sweep(canonical_scores(scores));
  double best_threshold = 0;
  double best_kl = std::numeric_limits<double>::infinity();
  bool any = false;
  for (double threshold : order) {
    sweep.advance_to(threshold);
    if (sweep.empty()) continue;  // no edges at this threshold
    const double kl = kl_divergence(survey, sweep.distribution(), epsilon);
    // Strict improvement keeps the largest threshold on ties.
    if (kl < best_kl) {
      best_kl = kl;
      best_threshold = threshold;
      any = true;
    }
  }
  if (!any) throw InputError("every candidate threshold induces an empty graph");
  return best_threshold;
}

double threshold_oversampled(std::uint32_t max_degree_cap,
                             std::span<const double> candidates,
                             std::span<const PairScore> scores) {
  if (candidates.empty()) throw InputError("no candidate thresholds");
  std::vector<double> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end(), std::greater<>());

  ThresholdSweep sweep(canonical_scores(scores));
  // Max degree grows as the threshold drops; the boundary is the last
  // candidate (in descending order) still within the cap.
  double boundary = 0;
  bool found = false;
  for (double threshold : order) {
    sweep.advance_to(threshold);
    if (sweep.max_degree() <= max_degree_cap) {
      boundary = threshold;
      found = true;
    } else {
      break;
    }
  }
  if (!found) throw InputError("no candidate threshold satisfies the max-degree cap");
  return boundary;
}

bool InferredGraph::has_edge(std::uint32_t a, std::uint32_t b) const {
  const auto n = neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

std::vector<std::pair<PlayerId, PlayerId>> InferredGraph::edges() const {
  std::vector<std::pair<PlayerId, PlayerId>> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < node_count(); ++u) {
    for (std::uint32_t v : neighbors(u)) {
      if (u < v) out.emplace_back(node_ids[u], node_ids[v]);
    }
  }
  return out;
}

InferredGraph InferredGraph::from_edges(
    std::span<const std::pair<PlayerId, PlayerId>> edges) {
  InferredGraph g;
  std::vector<std::pair<PlayerId, PlayerId>> canon;
  canon.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("self-loop in edge list");
    canon.push_back(canonical(a, b));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  for (const auto& [a, b] : canon) {
    g.node_ids.push_back(a);
    g.node_ids.push_back(b);
  }
  std::sort(g.node_ids.begin(), g.node_ids.end());
  g.node_ids.erase(std::unique(g.node_ids.begin(), g.node_ids.end()), g.node_ids.end());

  auto index_of = [&](PlayerId id) {
    return static_cast<std::uint32_t>(
        std::lower_bound(g.node_ids.begin(), g.node_ids.end(), id) - g.node_ids.begin());
  };
  std::vector<std::uint32_t> degree(g.node_ids.size(), 0);
  for (const auto& [a, b] : canon) {
    ++degree[index_of(a)];
    ++degree[index_of(b)];
  }
  g.offsets.assign(g.node_ids.size() + 1, 0);
  for (std::size_t i = 0; i < degree.size(); ++i) g.offsets[i + 1] = g.offsets[i] + degree[i];
  g.adjacency.resize(g.offsets.back());
  std::vector<std::uint64_t> cursor(g.offsets.begin(), g.offsets.end() - 1);
  for (const auto& [a, b] : canon) {
    const std::uint32_t ia = index_of(a), ib = index_of(b);
    g.adjacency[cursor[ia]++] = ib;
    g.adjacency[cursor[ib]++] = ia;
  }
  for (std::size_t i = 0; i < g.node_ids.size(); ++i) {
    std::sort(g.adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets[i]),
              g.adjacency.begin() + static_cast<std::ptrdiff_t>(g.offsets[i + 1]));
  }
  return g;
}

InferredGraph materialize(std::span<const PairScore> scores, double threshold,
                          const std::string& rule) {
  if (!std::isfinite(threshold)) throw InputError("threshold must be finite");
  std::vector<std::pair<PlayerId, PlayerId>> edges;
  for (const auto& s : scores) {
    if (s.score >= threshold) {
      if (s.x == s.y) throw InputError("self-pair in score list");
      edges.push_back(canonical(s.x, s.y));
    }
  }
  InferredGraph g = InferredGraph::from_edges(edges);
  g.threshold = threshold;
  g.rule = rule;
  return g;
}

DegreeDistribution induced_degree_distribution(std::span<const PairScore> scores,
                                               double threshold) {
  ThresholdSweep sweep(canonical_scores(scores));
  sweep.advance_to(threshold);
  if (sweep.empty()) throw InputError("no edges at threshold");
  return sweep.distribution();
}

}  // namespace ties
