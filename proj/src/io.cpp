#include "ties/io.hpp"

#include <charconv>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace ties {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

double parse_double(const std::string& s, const std::string& path, std::uint64_t line) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw FormatError(path, line, "bad numeric field: " + s);
  }
}

std::uint64_t parse_u64(const std::string& s, const std::string& path, std::uint64_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError(path, line, "bad integer field: " + s);
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_features(const std::string& path, std::span<const PairFeatures> rows) {
  std::FILE* out = std::fopen(path.c_str(), "wb");
  if (!out) throw InputError("cannot open for writing: " + path);
  std::fprintf(out, "# x\ty");
  for (auto name : kFeatureNames) std::fprintf(out, "\t%.*s", int(name.size()), name.data());
  std::fprintf(out, "\n");
  for (const auto& row : rows) {
    std::fprintf(out, "%" PRIu64 "\t%" PRIu64, row.x, row.y);
    for (double v : row.values) std::fprintf(out, "\t%s", format_double(v).c_str());
    std::fprintf(out, "\n");
  }
  std::fclose(out);
}

std::vector<PairFeatures> read_features(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open features: " + path);
  std::vector<PairFeatures> rows;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2 + kFeatureCount) {
      throw FormatError(path, line_no, "expected 11 fields");
    }
    PairFeatures row;
    row.x = parse_u64(fields[0], path, line_no);
    row.y = parse_u64(fields[1], path, line_no);
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      row.values[f] = parse_double(fields[2 + f], path, line_no);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_labels(const std::string& path,
                  std::span<const std::pair<PlayerId, PlayerId>> positives) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  for (const auto& [rater, target] : positives) {
    out << rater << "\t" << target << "\t1\n";
  }
}

std::vector<std::pair<PlayerId, PlayerId>> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open labels: " + path);
  std::vector<std::pair<PlayerId, PlayerId>> positives;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3) throw FormatError(path, line_no, "expected 3 fields");
    const std::uint64_t label = parse_u64(fields[2], path, line_no);
    if (label > 1) throw FormatError(path, line_no, "label must be 0 or 1");
    if (label == 1) {
      positives.emplace_back(parse_u64(fields[0], path, line_no),
                             parse_u64(fields[1], path, line_no));
    }
  }
  return positives;
}

std::map<PlayerId, std::string> read_name_map(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open name map: " + path);
  std::map<PlayerId, std::string> names;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2) throw FormatError(path, line_no, "expected 2 fields");
    names[parse_u64(fields[0], path, line_no)] = fields[1];
  }
  return names;
}

void write_graph(const std::string& path, const InferredGraph& g) {
  std::FILE* out = std::fopen(path.c_str(), "wb");
  if (!out) throw InputError("cannot open for writing: " + path);
  std::fprintf(out, "# inferred graph; threshold %s rule %s nodes %zu edges %" PRIu64
                    "; isolated players excluded\n",
               format_double(g.threshold).c_str(), g.rule.c_str(), g.node_count(),
               g.edge_count());
  for (const auto& [x, y] : g.edges()) {
    std::fprintf(out, "%" PRIu64 "\t%" PRIu64 "\n", x, y);
  }
  std::fclose(out);
}

InferredGraph read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph: " + path);
  std::vector<std::pair<PlayerId, PlayerId>> edges;
  std::string line;
  std::uint64_t line_no = 0;
  double threshold = 0;
  std::string rule = "unknown";
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hdr(line);
      std::string tok;
      while (hdr >> tok) {
        if (tok == "threshold") hdr >> threshold;
        if (tok == "rule") hdr >> rule;
      }
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 2) throw FormatError(path, line_no, "expected 2 fields");
    edges.emplace_back(parse_u64(fields[0], path, line_no),
                       parse_u64(fields[1], path, line_no));
  }
  InferredGraph g = InferredGraph::from_edges(edges);
  g.threshold = threshold;
  g.rule = rule;
  return g;
}

void write_degree_distribution(const std::string& path, const DegreeDistribution& d,
                               std::uint64_t total_nodes) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << "# degree\tcount\n";
  for (const auto& [degree, p] : d.pmf) {
    const auto count = static_cast<std::uint64_t>(std::llround(p * static_cast<double>(total_nodes)));
    out << degree << "\t" << count << "\n";
  }
}

void write_logistic(const std::string& path, int feature, const LogisticModel& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << "ties-logistic 1\n";
  out << "feature\t" << kFeatureNames[feature] << "\n";
  out << "intercept\t" << format_double(m.intercept) << "\n";
  out << "theta\t" << format_double(m.theta) << "\n";
  out << "sigma\t" << format_double(m.sigma) << "\n";
  out << "z\t" << format_double(m.z) << "\n";
  out << "p\t" << format_double(m.p_value) << "\n";
  out << "converged\t" << (m.converged ? 1 : 0) << "\n";
  out << "separated\t" << (m.separated ? 1 : 0) << "\n";
  out << "degenerate\t" << (m.degenerate ? 1 : 0) << "\n";
}

std::pair<int, LogisticModel> read_logistic(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model: " + path);
  std::string magic;
  int version = 0;
  in >> magic >> version;
  if (magic != "ties-logistic" || version != 1) throw InputError("not a logistic model file");
  LogisticModel m;
  int feature = -1;
  std::string key;
  while (in >> key) {
    if (key == "feature") {
      std::string name;
      in >> name;
      feature = feature_index(name);
    } else if (key == "intercept") {
      in >> m.intercept;
    } else if (key == "theta") {
      in >> m.theta;
    } else if (key == "sigma") {
      in >> m.sigma;
    } else if (key == "z") {
      in >> m.z;
    } else if (key == "p") {
      in >> m.p_value;
    } else if (key == "converged") {
      in >> m.converged;
    } else if (key == "separated") {
      in >> m.separated;
    } else if (key == "degenerate") {
      in >> m.degenerate;
    } else {
      throw InputError("unknown model field: " + key);
    }
  }
  if (feature < 0) throw InputError("model file missing feature name");
  return {feature, m};
}

void write_tree(const std::string& path, const DecisionTree& tree) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << tree.serialize();
}

DecisionTree read_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open model: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return DecisionTree::parse(buf.str());
}

void write_feature_table(const std::string& path, std::span<const FeatureTableRow> rows) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << "# feature\ttheta\tsigma\tz\tp\tauc\n";
  for (const auto& row : rows) {
    out << kFeatureNames[row.feature] << "\t" << format_double(row.model.theta) << "\t"
        << format_double(row.model.sigma) << "\t" << format_double(row.model.z) << "\t"
        << format_double(row.model.p_value) << "\t" << format_double(row.auc) << "\n";
  }
}

void write_robustness(const std::string& path, std::span<const RobustnessPoint> points) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << "# bin_lo\tbin_hi\tfeature\tmean_auc\tse\tn_pairs  (nan marks a skipped bin)\n";
  for (const auto& p : points) {
    out << p.bin_lo << "\t" << p.bin_hi << "\t" << kFeatureNames[p.feature] << "\t"
        << format_double(p.mean_auc) << "\t" << format_double(p.se) << "\t" << p.examples
        << "\n";
  }
}

void write_roc(const std::string& path, const RocCurve& curve) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open for writing: " + path);
  out << "# fpr\ttpr\tauc=" << format_double(curve.auc) << "\n";
  for (const auto& p : curve.points) {
    out << format_double(p.fpr) << "\t" << format_double(p.tpr) << "\n";
  }
}

void write_summary(const std::string& directory, const GraphSummary& s) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  const fs::path dir(directory);
  {
    std::ofstream out(dir / "degree_ccdf.tsv");
    out << "# degree\tccdf\n";
    for (const auto& [degree, p] : s.degree_ccdf) {
      out << degree << "\t" << format_double(p) << "\n";
    }
  }
  {
    std::ofstream out(dir / "clustering_by_degree.tsv");
    out << "# degree\tmean_ci\n";
    for (const auto& [degree, c] : s.mean_clustering_by_degree) {
      out << degree << "\t" << format_double(c) << "\n";
    }
  }
  {
    std::ofstream out(dir / "clustering_hist.tsv");
    out << "# ci_bin_lo\tcount\n";
    for (std::size_t b = 0; b < s.clustering_histogram.size(); ++b) {
      out << format_double(0.1 * static_cast<double>(b)) << "\t" << s.clustering_histogram[b]
          << "\n";
    }
  }
  {
    std::ofstream out(dir / "component_sizes.tsv");
    out << "# component_size\tcount\n";
    for (const auto& [size, count] : s.component_size_histogram) {
      out << size << "\t" << count << "\n";
    }
  }
  {
    std::ofstream out(dir / "summary.tsv");
    out << "nodes\t" << s.node_count << "\n";
    out << "edges\t" << s.edge_count << "\n";
    out << "components\t" << s.component_count << "\n";
    out << "median_degree\t" << format_double(s.median_degree) << "\n";
  }
}

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open for checksum: " + path);
  std::uint64_t hash = 0xcbf29ce484222325ull;
  char buf[1 << 16];
  while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
    const std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      hash ^= static_cast<unsigned char>(buf[i]);
      hash *= 0x100000001b3ull;
    }
    if (got < static_cast<std::streamsize>(sizeof(buf))) break;
  }
  return hash;
}

}  // namespace ties
