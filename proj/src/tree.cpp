#include "ties/tree.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "ties/rng.hpp"

namespace ties {

namespace {

double gini(std::uint64_t pos, std::uint64_t total) {
  if (total == 0) return 0;
  const double p = static_cast<double>(pos) / static_cast<double>(total);
  return 2.0 * p * (1.0 - p);
}

struct Grower {
  std::span<const LabeledExample> data;
  const TreeOptions& options;
  std::vector<TreeNode> nodes;

  int build(std::vector<std::uint32_t>& indices, int depth) {
    const int id = static_cast<int>(nodes.size());
    nodes.emplace_back();
    std::uint32_t pos = 0;
    for (std::uint32_t i : indices) pos += (data[i].label != 0);
    nodes[id].count = static_cast<std::uint32_t>(indices.size());
    nodes[id].positives = pos;
    nodes[id].probability =
        indices.empty() ? 0.0
                        : static_cast<double>(pos) / static_cast<double>(indices.size());

    const bool pure = pos == 0 || pos == indices.size();
    if (pure || depth >= options.max_depth ||
        indices.size() < 2 * static_cast<std::size_t>(options.min_leaf)) {
      return id;
    }

    int best_feature = -1;
    double best_threshold = 0;
    double best_decrease = 1e-12;
    const double parent_impurity = gini(pos, indices.size());
    std::vector<std::pair<double, int>> column(indices.size());
    for (int f = 0; f < static_cast<int>(kFeatureCount); ++f) {
      if (!options.feature_mask[f]) continue;
      for (std::size_t i = 0; i < indices.size(); ++i) {
        column[i] = {data[indices[i]].features[f], data[indices[i]].label};
      }
      std::sort(column.begin(), column.end());
      std::uint64_t left_pos = 0;
      for (std::size_t i = 1; i < column.size(); ++i) {
        left_pos += (column[i - 1].second != 0);
        if (column[i].first == column[i - 1].first) continue;
        if (i < static_cast<std::size_t>(options.min_leaf) ||
            column.size() - i < static_cast<std::size_t>(options.min_leaf)) {
          continue;
        }
        const std::uint64_t right_pos = pos - left_pos;
        const double weighted =
            (static_cast<double>(i) * gini(left_pos, i) +
             static_cast<double>(column.size() - i) * gini(right_pos, column.size() - i)) /
            static_cast<double>(column.size());
        const double decrease = parent_impurity - weighted;
        if (decrease > best_decrease) {
          best_decrease = decrease;
          best_feature = f;
          double th = 0.5 * (column[i - 1].first + column[i].first);
          // Midpoint can round onto the lower value; the strict `<` split
          // then needs the upper value as the boundary.
          if (th <= column[i - 1].first) th = column[i].first;
          best_threshold = th;
        }
      }
    }
    if (best_feature < 0) return id;

    std::vector<std::uint32_t> left_idx, right_idx;
    left_idx.reserve(indices.size());
    right_idx.reserve(indices.size());
    for (std::uint32_t i : indices) {
      (data[i].features[best_feature] < best_threshold ? left_idx : right_idx).push_back(i);
    }
    indices.clear();
    indices.shrink_to_fit();

    nodes[id].feature = best_feature;
    nodes[id].threshold = best_threshold;
    const int left = build(left_idx, depth + 1);
    nodes[id].left = left;
    const int right = build(right_idx, depth + 1);
    nodes[id].right = right;
    return id;
  }
};

// Per-node pruning bookkeeping over a logically collapsed tree.
struct CollapseState {
  const DecisionTree& tree;
  std::vector<char> collapsed;
  std::vector<double> subtree_error;   // resubstitution error mass below node
  std::vector<std::uint32_t> leaves;   // leaf count below node

  explicit CollapseState(const DecisionTree& t)
      : tree(t), collapsed(t.nodes.size(), 0), subtree_error(t.nodes.size(), 0),
        leaves(t.nodes.size(), 0) {
    refresh();
  }

  double node_error(int id) const {
    const TreeNode& n = tree.nodes[id];
    return static_cast<double>(std::min(n.positives, n.count - n.positives));
  }

  bool is_leaf(int id) const { return tree.nodes[id].is_leaf() || collapsed[id]; }

  void refresh() {
    // Children precede nothing in preorder; walk backwards so children are
    // ready before their parent.
    for (int id = static_cast<int>(tree.nodes.size()) - 1; id >= 0; --id) {
      if (is_leaf(id)) {
        subtree_error[id] = node_error(id);
        leaves[id] = 1;
      } else {
        subtree_error[id] =
            subtree_error[tree.nodes[id].left] + subtree_error[tree.nodes[id].right];
        leaves[id] = leaves[tree.nodes[id].left] + leaves[tree.nodes[id].right];
      }
    }
  }

  double link_strength(int id) const {
    return (node_error(id) - subtree_error[id]) / (static_cast<double>(leaves[id]) - 1.0);
  }
};

DecisionTree extract(const DecisionTree& tree, const std::vector<char>& collapsed) {
  DecisionTree out;
  if (tree.nodes.empty()) return out;
  // Preorder copy skipping collapsed subtrees; child links are rebuilt in
  // the output's own index space.
  std::function<int(int)> copy = [&](int src) -> int {
    const int id = static_cast<int>(out.nodes.size());
    out.nodes.push_back(tree.nodes[src]);
    if (tree.nodes[src].is_leaf() || collapsed[src]) {
      out.nodes[id].feature = -1;
      out.nodes[id].left = out.nodes[id].right = -1;
    } else {
      const int l = copy(tree.nodes[src].left);
      out.nodes[id].left = l;
      const int r = copy(tree.nodes[src].right);
      out.nodes[id].right = r;
    }
    return id;
  };
  copy(0);
  return out;
}

}  // namespace

double DecisionTree::predict(const FeatureVector& features) const {
  int id = 0;
  while (!nodes[id].is_leaf()) {
    id = features[nodes[id].feature] < nodes[id].threshold ? nodes[id].left : nodes[id].right;
  }
  return nodes[id].probability;
}

std::size_t DecisionTree::leaf_count() const {
  std::size_t n = 0;
  for (const auto& node : nodes) n += node.is_leaf();
  return n;
}

std::string DecisionTree::serialize() const {
  std::ostringstream out;
  out << "ties-tree 1 " << nodes.size() << "\n";
  out.precision(17);
  for (const auto& n : nodes) {
    if (n.is_leaf()) {
      out << "leaf " << n.probability << " " << n.count << " " << n.positives << "\n";
    } else {
      out << "split " << n.feature << " " << n.threshold << " " << n.left << " " << n.right
          << " " << n.count << " " << n.positives << "\n";
    }
  }
  return out.str();
}

DecisionTree DecisionTree::parse(const std::string& text) {
  std::istringstream in(text);
  std::string magic;
  int version = 0;
  std::size_t count = 0;
  in >> magic >> version >> count;
  if (magic != "ties-tree" || version != 1) throw InputError("not a tree model file");
  DecisionTree tree;
  tree.nodes.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string kind;
    in >> kind;
    TreeNode& n = tree.nodes[i];
    if (kind == "leaf") {
      in >> n.probability >> n.count >> n.positives;
    } else if (kind == "split") {
      in >> n.feature >> n.threshold >> n.left >> n.right >> n.count >> n.positives;
      n.probability = n.count ? static_cast<double>(n.positives) / n.count : 0.0;
    } else {
      throw InputError("bad tree node kind: " + kind);
    }
  }
  if (!in) throw InputError("truncated tree model file");
  return tree;
}

DecisionTree grow_tree(std::span<const LabeledExample> train, const TreeOptions& options) {
  if (train.empty()) throw InputError("cannot grow a tree on no examples");
  Grower grower{train, options, {}};
  std::vector<std::uint32_t> indices(train.size());
  for (std::uint32_t i = 0; i < train.size(); ++i) indices[i] = i;
  grower.build(indices, 0);
  DecisionTree tree;
  tree.nodes = std::move(grower.nodes);
  return tree;
}

std::vector<double> pruning_alphas(const DecisionTree& tree) {
  std::vector<double> alphas{0.0};
  CollapseState state(tree);
  while (!state.is_leaf(0)) {
    double weakest = std::numeric_limits<double>::infinity();
    for (int id = 0; id < static_cast<int>(tree.nodes.size()); ++id) {
      if (state.is_leaf(id)) continue;
      weakest = std::min(weakest, state.link_strength(id));
    }
    for (int id = 0; id < static_cast<int>(tree.nodes.size()); ++id) {
      if (!state.is_leaf(id) && state.link_strength(id) <= weakest) {
        state.collapsed[id] = 1;
      }
    }
    state.refresh();
    if (alphas.empty() || weakest > alphas.back()) {
      alphas.push_back(weakest);
    }
  }
  return alphas;
}

DecisionTree prune_at(const DecisionTree& tree, double alpha) {
  CollapseState state(tree);
  // Collapse every link no stronger than alpha, bottom-up until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int id = static_cast<int>(tree.nodes.size()) - 1; id >= 0; --id) {
      if (state.is_leaf(id)) continue;
      if (state.link_strength(id) <= alpha) {
        state.collapsed[id] = 1;
        changed = true;
      }
    }
    if (changed) state.refresh();
  }
  return extract(tree, state.collapsed);
}

DecisionTree fit_tree(std::span<const LabeledExample> train, const TreeOptions& options) {
  if (options.folds < 2) throw InputError("cross-validation needs at least 2 folds");
  DecisionTree full = grow_tree(train, options);
  if (full.nodes.size() <= 1) return full;  // single-class or unsplittable input

  const std::vector<double> alphas = pruning_alphas(full);
  // Representative alpha per pruning interval: geometric mean of the
  // endpoints, unbounded for the last (root-only) interval.
  std::vector<double> candidates;
  for (std::size_t k = 0; k + 1 < alphas.size(); ++k) {
    candidates.push_back(std::sqrt(std::max(alphas[k], 0.0) * alphas[k + 1]));
  }
  candidates.push_back(std::numeric_limits<double>::infinity());

  // Seeded fold assignment.
  Rng rng(options.seed);
  std::vector<std::uint32_t> order(train.size());
  for (std::uint32_t i = 0; i < train.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<int> fold_of(train.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    fold_of[order[i]] = static_cast<int>(i % options.folds);
  }

  std::vector<std::uint64_t> misclassified(candidates.size(), 0);
  for (int fold = 0; fold < options.folds; ++fold) {
    std::vector<LabeledExample> sub;
    std::vector<std::uint32_t> held;
    for (std::uint32_t i = 0; i < train.size(); ++i) {
      if (fold_of[i] == fold) {
        held.push_back(i);
      } else {
        sub.push_back(train[i]);
      }
    }
    if (sub.empty() || held.empty()) continue;
    DecisionTree fold_tree = grow_tree(sub, options);
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      DecisionTree pruned = prune_at(fold_tree, candidates[k]);
      for (std::uint32_t i : held) {
        const int predicted = pruned.predict(train[i].features) >= 0.5 ? 1 : 0;
        misclassified[k] += (predicted != train[i].label);
      }
    }
  }

  const double n = static_cast<double>(train.size());
  std::size_t best = 0;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (misclassified[k] < misclassified[best]) best = k;
  }
  const double best_err = static_cast<double>(misclassified[best]) / n;
  const double se = std::sqrt(std::max(best_err * (1.0 - best_err), 0.0) / n);
  // One-standard-error rule: the smallest tree within one SE of the best.
  std::size_t chosen = best;
  for (std::size_t k = candidates.size(); k-- > 0;) {
    if (static_cast<double>(misclassified[k]) / n <= best_err + se) {
      chosen = k;
      break;
    }
  }
  return prune_at(full, candidates[chosen]);
}

}  // namespace ties
