#pragma once

#include <array>
#include <span>
#include <string>

#include "ties/dataset.hpp"

namespace ties {

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double threshold = 0;
  int left = -1, right = -1;  // child indices; value < threshold goes left
  std::uint32_t count = 0;
  std::uint32_t positives = 0;
  double probability = 0;  // maximum-likelihood friend probability at the node
  bool is_leaf() const { return feature < 0; }
};

class DecisionTree {
 public:
  std::vector<TreeNode> nodes;  // preorder, root at index 0

  double predict(const FeatureVector& features) const;
  std::size_t node_count() const { return nodes.size(); }
  std::size_t leaf_count() const;
  int root_feature() const { return nodes.empty() ? -1 : nodes[0].feature; }

  std::string serialize() const;
  static DecisionTree parse(const std::string& text);
};

struct TreeOptions {
  int min_leaf = 20;
  int max_depth = 10;
  int folds = 5;
  std::uint64_t seed = 0;
  // Features allowed as split candidates; all nine by default.
  std::array<bool, kFeatureCount> feature_mask = {true, true, true, true, true,
                                                  true, true, true, true};
};

// Greedy CART growth: binary splits minimizing Gini impurity, thresholds at
// midpoints between consecutive distinct values, grown to purity, min-leaf
// size, or the depth cap.
DecisionTree grow_tree(std::span<const LabeledExample> train, const TreeOptions& options);

// Cost-complexity pruning support: the critical alpha sequence of a grown
// tree (starting at 0), and the smallest optimal subtree for a given alpha.
std::vector<double> pruning_alphas(const DecisionTree& tree);
DecisionTree prune_at(const DecisionTree& tree, double alpha);

// Grow, then select alpha by k-fold cross-validation with the
// one-standard-error rule, and prune. Fold assignment is seeded and
// deterministic.
DecisionTree fit_tree(std::span<const LabeledExample> train, const TreeOptions& options);

}  // namespace ties
