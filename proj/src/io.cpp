#include "mlcd/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "mlcd/errors.hpp"

namespace mlcd {

namespace {

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

int parse_int(const std::string& s, const std::filesystem::path& path, int lineno) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected integer, got '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::filesystem::path& path, int lineno) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected number, got '" + s + "'");
  }
}

}  // namespace

std::vector<std::pair<int, int>> read_edge_pairs(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<std::pair<int, int>> edges;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected 'u<TAB>v'");
    int u = parse_int(tokens[0], path, lineno);
    int v = parse_int(tokens[1], path, lineno);
    if (u < 0 || v < 0)
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": negative node id");
    edges.emplace_back(u, v);
  }
  return edges;
}

Matrix edges_to_adjacency(const std::vector<std::pair<int, int>>& edges, int n_nodes) {
  Matrix a = Matrix::Zero(n_nodes, n_nodes);
  for (auto [u, v] : edges) {
    if (u >= n_nodes || v >= n_nodes)
      throw BadNodeId("edge (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds node count");
    if (u == v) continue;  // never materialize self-loops
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

void write_edge_list(const Matrix& layer, const std::filesystem::path& path) {
  auto out = open_output(path);
  const int n = static_cast<int>(layer.rows());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (layer(i, j) != 0.0) out << i << '\t' << j << '\n';
}

Matrix read_features_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv(line);
    std::vector<double> row;
    row.reserve(fields.size());
    for (const auto& f : fields) row.push_back(parse_double(f, path, lineno));
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": inconsistent column count");
    rows.push_back(std::move(row));
  }
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

void write_features_csv(const Matrix& features, const std::filesystem::path& path) {
  auto out = open_output(path);
  char buf[64];
  for (int i = 0; i < features.rows(); ++i) {
    for (int j = 0; j < features.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.10g", features(i, j));
      out << (j ? "," : "") << buf;
    }
    out << '\n';
  }
}

std::vector<int> read_labels_csv(const std::filesystem::path& path, int n_nodes) {
  auto in = open_input(path);
  std::vector<int> labels(n_nodes, -1);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto fields = split_csv(line);
    if (fields.size() != 2)
      throw ParseError(path.string() + ":" + std::to_string(lineno) + ": expected 'node_id,label'");
    int id = parse_int(fields[0], path, lineno);
    if (id < 0 || id >= n_nodes)
      throw BadNodeId("label row for out-of-range node id " + std::to_string(id));
    labels[id] = parse_int(fields[1], path, lineno);
  }
  for (int i = 0; i < n_nodes; ++i)
    if (labels[i] < 0) throw ParseError(path.string() + ": missing label for node " + std::to_string(i));
  return labels;
}

void write_labels_csv(const std::vector<int>& labels, const std::filesystem::path& path) {
  auto out = open_output(path);
  for (std::size_t i = 0; i < labels.size(); ++i) out << i << ',' << labels[i] << '\n';
}

CitationLoadResult load_citation_dataset(const std::filesystem::path& content_path,
                                         const std::filesystem::path& cites_path,
                                         const std::optional<std::set<std::string>>& keep_classes) {
  auto content = open_input(content_path);

  struct Row {
    std::string id;
    std::vector<double> feats;
    std::string cls;
  };
  std::vector<Row> rows;
  std::map<std::string, int> id_index;
  std::size_t n_feats = 0;

  std::string line;
  int lineno = 0;
  while (std::getline(content, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 3)
      throw ParseError(content_path.string() + ":" + std::to_string(lineno) +
                       ": content row needs id, features, class");
    Row row;
    row.id = tokens.front();
    row.cls = tokens.back();
    if (keep_classes && !keep_classes->count(row.cls)) continue;
    if (rows.empty())
      n_feats = tokens.size() - 2;
    else if (tokens.size() - 2 != n_feats)
      throw ParseError(content_path.string() + ":" + std::to_string(lineno) +
                       ": inconsistent feature count");
    row.feats.reserve(n_feats);
    for (std::size_t t = 1; t + 1 < tokens.size(); ++t)
      row.feats.push_back(parse_double(tokens[t], content_path, lineno));
    if (!id_index.emplace(row.id, static_cast<int>(rows.size())).second)
      throw DuplicateNodeId("duplicate node id '" + row.id + "' at " + content_path.string() + ":" +
                            std::to_string(lineno));
    rows.push_back(std::move(row));
  }

  const int n = static_cast<int>(rows.size());
  CitationLoadResult out;
  out.graph.n_nodes = n;
  out.graph.node_ids.reserve(n);

  Matrix feats(n, n_feats);
  for (int i = 0; i < n; ++i) {
    out.graph.node_ids.push_back(rows[i].id);
    for (std::size_t j = 0; j < n_feats; ++j) feats(i, j) = rows[i].feats[j];
  }
  out.graph.features = std::move(feats);

  // class names -> dense labels, in sorted order so the mapping does not
  // depend on row order
  std::set<std::string> classes;
  for (const auto& r : rows) classes.insert(r.cls);
  out.class_names.assign(classes.begin(), classes.end());
  std::map<std::string, int> class_index;
  for (std::size_t c = 0; c < out.class_names.size(); ++c) class_index[out.class_names[c]] = static_cast<int>(c);
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = class_index[rows[i].cls];
  out.graph.labels = std::move(labels);

  auto cites = open_input(cites_path);
  Matrix adj = Matrix::Zero(n, n);
  lineno = 0;
  while (std::getline(cites, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError(cites_path.string() + ":" + std::to_string(lineno) + ": expected 'citing cited'");
    auto a = id_index.find(tokens[0]);
    auto b = id_index.find(tokens[1]);
    if (a == id_index.end() || b == id_index.end()) {
      ++out.skipped_cites;
      continue;
    }
    if (a->second == b->second) continue;  // drop self-citations
    adj(a->second, b->second) = 1.0;
    adj(b->second, a->second) = 1.0;
  }
  out.graph.layers.push_back(std::move(adj));
  return out;
}

}  // namespace mlcd
