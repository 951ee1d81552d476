#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mlcd/graph.hpp"

namespace mlcd {

// Edge list: UTF-8 text, one `u<TAB>v` per line, 0-based dense ids,
// undirected with each edge listed once.
std::vector<std::pair<int, int>> read_edge_pairs(const std::filesystem::path& path);
Matrix edges_to_adjacency(const std::vector<std::pair<int, int>>& edges, int n_nodes);
void write_edge_list(const Matrix& layer, const std::filesystem::path& path);

// Features: CSV, row i = node i, no header.
Matrix read_features_csv(const std::filesystem::path& path);
void write_features_csv(const Matrix& features, const std::filesystem::path& path);

// Labels: CSV `node_id,label`, one row per node.
std::vector<int> read_labels_csv(const std::filesystem::path& path, int n_nodes);
void write_labels_csv(const std::vector<int>& labels, const std::filesystem::path& path);

struct CitationLoadResult {
  MultiLayerGraph graph;       // layer 0 = undirected citation edges
  int skipped_cites = 0;       // cite rows referencing unknown ids
  std::vector<std::string> class_names;  // dense label -> class name
};

// Whitespace-separated content/cites files in the public citation-dataset
// layout: content row = <id> <F word features> <class>, cites row =
// <citing id> <cited id>. Optionally keeps only the given classes.
CitationLoadResult load_citation_dataset(
    const std::filesystem::path& content_path, const std::filesystem::path& cites_path,
    const std::optional<std::set<std::string>>& keep_classes = std::nullopt);

}  // namespace mlcd
