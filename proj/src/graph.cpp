#include "netchor/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "netchor/error.hpp"

namespace netchor {

Graph::Graph(std::size_t node_count) : adjacency_(node_count) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges, std::vector<std::string> labels)
    : adjacency_(node_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != node_count) {
    throw InputError("label count " + std::to_string(labels_.size()) +
                     " does not match node count " + std::to_string(node_count));
  }
  for (const auto& [a, b] : edges) {
    if (a >= node_count || b >= node_count) {
      throw InputError("edge (" + std::to_string(a) + ", " + std::to_string(b) +
                       ") references a node outside [0, " + std::to_string(node_count) + ")");
    }
    if (a == b) throw InputError("self-loop on node " + std::to_string(a));
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (NodeId v = 0; v < node_count; ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end()) {
      throw InputError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
  }
  edge_count_ = edges.size();
}

void Graph::check_node(NodeId node) const {
  if (node >= node_count()) {
    throw InputError("node id " + std::to_string(node) + " out of range [0, " +
                     std::to_string(node_count()) + ")");
  }
}

std::size_t Graph::degree(NodeId node) const {
  check_node(node);
  return adjacency_[node].size();
}

std::span<const NodeId> Graph::neighbors(NodeId node) const {
  check_node(node);
  return adjacency_[node];
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  check_node(a);
  check_node(b);
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(NodeId node) const {
  check_node(node);
  return labels_.empty() ? std::to_string(node) : labels_[node];
}

std::size_t ComponentPartition::largest_component() const {
  if (component_sizes.empty()) throw DegenerateInputError("graph has no nodes");
  const auto it = std::max_element(component_sizes.begin(), component_sizes.end());
  return static_cast<std::size_t>(it - component_sizes.begin());
}

ComponentPartition connected_components(const Graph& g) {
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  const std::size_t n = g.node_count();
  ComponentPartition p;
  p.component_of.assign(n, kUnassigned);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId start = 0; start < n; ++start) {
    if (p.component_of[start] != kUnassigned) continue;
    const std::size_t id = p.component_sizes.size();
    queue.clear();
    queue.push_back(start);
    p.component_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId w : g.neighbors_unchecked(queue[head])) {
        if (p.component_of[w] == kUnassigned) {
          p.component_of[w] = id;
          queue.push_back(w);
        }
      }
    }
    p.component_sizes.push_back(queue.size());
  }
  p.sizes_descending = p.component_sizes;
  std::sort(p.sizes_descending.begin(), p.sizes_descending.end(), std::greater<>());
  return p;
}

NodeRemoval remove_node(const Graph& g, NodeId node) {
  if (node >= g.node_count()) {
    throw InputError("node id " + std::to_string(node) + " out of range [0, " +
                     std::to_string(g.node_count()) + ")");
  }
  NodeRemoval result;
  result.remap.resize(g.node_count());
  NodeId next = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (v != node) result.remap[v] = next++;
  }
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  for (const auto& [a, b] : g.edges()) {
    if (a != node && b != node) kept.emplace_back(*result.remap[a], *result.remap[b]);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(g.node_count() - 1);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (v != node) labels.push_back(g.labels()[v]);
    }
  }
  result.graph = Graph(g.node_count() - 1, kept, std::move(labels));
  return result;
}

bool satisfies_handshake(const Graph& g) {
  std::size_t total = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) total += g.degree(v);
  return total == 2 * g.edge_count();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

EdgeListIngestion parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };

  EdgeListIngestion result;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tokens = split_fields(line);
    if (tokens.empty() || tokens.size() > 2) {
      throw ParseError(line_no, "expected two node labels, got '" + line + "'");
    }
    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens[0] == tokens[1]) {
      throw ValidationError(line_no, "self-loop on '" + tokens[0] + "' is not allowed in a simple graph");
    }
    const NodeId a = intern(tokens[0]);
    const NodeId b = intern(tokens[1]);
    const auto key = (static_cast<std::uint64_t>(std::min(a, b)) << 32) | std::max(a, b);
    if (!seen.insert(key).second) {
      ++result.duplicates_collapsed;
      continue;
    }
    edges.emplace_back(a, b);
  }
  if (labels.empty()) result.warnings.emplace_back("edge list is empty");
  if (result.duplicates_collapsed > 0) {
    result.warnings.push_back(std::to_string(result.duplicates_collapsed) +
                              " duplicate pair(s) collapsed");
  }
  const std::size_t n = labels.size();
  result.graph = Graph(n, edges, std::move(labels));
  return result;
}

EdgeListIngestion read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open edge list '" + path + "'");
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "# nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  for (const auto& [a, b] : g.edges()) out << g.label(a) << ' ' << g.label(b) << '\n';
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out << g.label(v) << '\n';
  }
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write edge list '" + path + "'");
  write_edge_list(g, out);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace netchor
