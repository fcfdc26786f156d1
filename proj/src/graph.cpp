#include "locspec/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace locspec {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

void check_connected(int n, const std::vector<std::vector<int>>& adj) {
  if (n == 0) throw GraphError("graph has no vertices");
  std::vector<char> seen(n, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
  }
  if (count != n)
    throw GraphError("graph is disconnected (" + std::to_string(count) +
                     " of " + std::to_string(n) + " vertices reachable)");
}

}  // namespace

VertexSet VertexSet::from_indices(std::vector<int> idx, int n) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int v : idx)
    if (v < 0 || v >= n)
      throw GraphError("vertex index " + std::to_string(v) +
                       " out of range [0, " + std::to_string(n) + ")");
  return VertexSet{std::move(idx)};
}

VertexSet VertexSet::parse(const std::string& text, int n) {
  std::vector<int> idx;
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw ParseError("cannot open vertex-set file " + text.substr(1));
    std::string line;
    while (std::getline(in, line)) {
      if (is_blank_or_comment(line)) continue;
      try {
        idx.push_back(std::stoi(line));
      } catch (const std::exception&) {
        throw ParseError("bad vertex index line: '" + line + "'");
      }
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) continue;
      try {
        idx.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad vertex index '" + tok + "'");
      }
    }
  }
  if (idx.empty()) throw ParseError("empty vertex set");
  return from_indices(std::move(idx), n);
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  std::set<std::pair<int, int>> seen;
  std::vector<std::vector<int>> adj(std::max(n, 0));
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphError("edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ") out of range for n = " +
                       std::to_string(n));
    if (u == v)
      throw GraphError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw GraphError("duplicate edge (" + std::to_string(u) + ", " +
                       std::to_string(v) + ")");
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  check_connected(n, adj);
  return Graph(n, std::move(edges), std::move(adj));
}

Graph Graph::from_edge_list(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  int n_header = -1;
  int max_index = -1;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (is_blank_or_comment(line)) continue;
    std::stringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected 'u v', got '" + line + "'");
    if (a == "n") {
      try {
        n_header = std::stoi(b);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) +
                         ": bad vertex count '" + b + "'");
      }
      continue;
    }
    int u, v;
    try {
      u = std::stoi(a);
      v = std::stoi(b);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": bad vertex index in '" + line + "'");
    }
    if (u < 0 || v < 0)
      throw ParseError("line " + std::to_string(lineno) +
                       ": negative vertex index");
    edges.emplace_back(u, v);
    max_index = std::max({max_index, u, v});
  }
  int n = n_header >= 0 ? n_header : max_index + 1;
  if (n <= 0) throw ParseError("edge list defines no vertices");
  return from_edges(n, std::move(edges));
}

Graph Graph::generate(const std::string& family,
                      const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw GraphError("family '" + family + "' expects " +
                       std::to_string(k) + " parameter(s)");
  };
  std::vector<std::pair<int, int>> edges;
  if (family == "cycle") {
    need(1);
    int n = params[0];
    if (n < 3) throw GraphError("cycle requires n >= 3");
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, std::move(edges));
  }
  if (family == "hypercube") {
    need(1);
    int k = params[0];
    if (k < 1 || k > 20) throw GraphError("hypercube requires 1 <= k <= 20");
    int n = 1 << k;
    for (int v = 0; v < n; ++v)
      for (int bit = 0; bit < k; ++bit)
        if (!(v & (1 << bit))) edges.emplace_back(v, v | (1 << bit));
    return from_edges(n, std::move(edges));
  }
  if (family == "complete") {
    need(1);
    int n = params[0];
    if (n < 2) throw GraphError("complete requires n >= 2");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, std::move(edges));
  }
  if (family == "path") {
    need(1);
    int n = params[0];
    if (n < 2) throw GraphError("path requires n >= 2");
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return from_edges(n, std::move(edges));
  }
  if (family == "petersen") {
    need(0);
    // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      edges.emplace_back(i, i + 5);
    }
    return from_edges(10, std::move(edges));
  }
  throw GraphError("unknown graph family '" + family + "'");
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_)
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  return adj_[v];
}

bool Graph::adjacent(int u, int v) const {
  const auto& list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& [u, v] : edges_) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Eigen::VectorXd Graph::multiply_adjacency(const Eigen::VectorXd& u) const {
  if (u.size() != n_)
    throw GraphError("vector length " + std::to_string(u.size()) +
                     " does not match vertex count " + std::to_string(n_));
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n_);
  for (int v = 0; v < n_; ++v) {
    double acc = 0.0;
    for (int w : adj_[v]) acc += u[w];
    out[v] = acc;
  }
  return out;
}

DistancePartition distance_partition(const Graph& g, const VertexSet& c) {
  if (c.empty()) throw GraphError("distance partition of an empty set");
  const int n = g.vertex_count();
  std::vector<int> depth(n, -1);
  std::queue<int> q;
  for (int v : c.members) {
    if (v < 0 || v >= n)
      throw GraphError("set vertex " + std::to_string(v) + " out of range");
    depth[v] = 0;
    q.push(v);
  }
  int ecc = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v))
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        ecc = std::max(ecc, depth[w]);
        q.push(w);
      }
  }
  std::vector<VertexSet> layers(ecc + 1);
  for (int v = 0; v < n; ++v) layers[depth[v]].members.push_back(v);
  return DistancePartition{std::move(layers), std::move(depth)};
}

VertexSet hamming74_codewords() {
  // Multiples of g(x) = 1 + x + x^3 over GF(2), message degree <= 3.
  const int gen = 0b1011;
  std::vector<int> words;
  for (int m = 0; m < 16; ++m) {
    int w = 0;
    for (int bit = 0; bit < 4; ++bit)
      if (m & (1 << bit)) w ^= gen << bit;
    words.push_back(w);
  }
  return VertexSet::from_indices(std::move(words), 1 << 7);
}

}  // namespace locspec
