#pragma once

#include <map>
#include <string>
#include <vector>

#include "ties/evaluate.hpp"
#include "ties/graphstats.hpp"
#include "ties/infer.hpp"
#include "ties/logistic.hpp"
#include "ties/roc.hpp"
#include "ties/tree.hpp"

namespace ties {

// Feature dump: `x y ac n_xy norm_freq h_t h_s h_st assists indirect
// betrayals`, one pair per line, sorted by (x, y).
void write_features(const std::string& path, std::span<const PairFeatures> rows);
std::vector<PairFeatures> read_features(const std::string& path);

// Label file: `rater target label`, label in {0,1}. Reading returns the
// label-1 pairs; absent pairs mean 0.
void write_labels(const std::string& path,
                  std::span<const std::pair<PlayerId, PlayerId>> positives);
std::vector<std::pair<PlayerId, PlayerId>> read_labels(const std::string& path);

// Optional id -> original-name sidecar.
std::map<PlayerId, std::string> read_name_map(const std::string& path);

// Edge list with a provenance header; `x y` per line, sorted.
void write_graph(const std::string& path, const InferredGraph& g);
InferredGraph read_graph(const std::string& path);

void write_degree_distribution(const std::string& path, const DegreeDistribution& d,
                               std::uint64_t total_nodes);

// Logistic model file: versioned, five numbers plus fit flags.
void write_logistic(const std::string& path, int feature, const LogisticModel& m);
std::pair<int, LogisticModel> read_logistic(const std::string& path);

void write_tree(const std::string& path, const DecisionTree& tree);
DecisionTree read_tree(const std::string& path);

void write_feature_table(const std::string& path, std::span<const FeatureTableRow> rows);
void write_robustness(const std::string& path, std::span<const RobustnessPoint> points);
void write_roc(const std::string& path, const RocCurve& curve);
void write_summary(const std::string& directory, const GraphSummary& s);

// FNV-1a 64-bit checksum of a file's bytes.
std::uint64_t fnv1a_file(const std::string& path);

// Deterministic text formatting for doubles (shortest round-trip %.17g).
std::string format_double(double v);

}  // namespace ties
