// Copyright 2026 The wmg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wmg/errors.hpp"

namespace wmg {

/// Dynamic bitset over vertex ids.  Small helper shared by interval,
/// pattern and poset machinery.
class VBits {
 public:
  VBits() = default;
  explicit VBits(int n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  int size() const { return n_; }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool is_subset_of(const VBits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const VBits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  VBits& operator&=(const VBits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VBits& operator|=(const VBits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  friend bool operator==(const VBits& a, const VBits& b) { return a.w_ == b.w_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

/// Finite simple undirected connected graph on vertices 0..n-1.
/// Connectivity is checked at construction; every algorithm in the
/// library presumes it.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n <= 0) throw ParseError("graph must have at least one vertex");
    for (auto& [u, v] : edges) {
      if (u == v) throw ParseError("loop edge " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (u < 0 || v >= n) throw ParseError("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<int>(edges.size());
    g.bits_.assign(n, VBits(n));
    for (auto [u, v] : edges) {
      g.bits_[u].set(v);
      g.bits_[v].set(u);
    }
    g.check_connected();
    return g;
  }

  int n() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const { return u != v && bits_[u].test(v); }
  const VBits& neighbor_bits(int v) const { return bits_[v]; }

  bool valid_vertex(int v) const { return v >= 0 && v < n_; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> common_neighbors(int u, int v) const {
    std::vector<int> out;
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

 private:
  void check_connected() const {
    std::vector<int> comp(n_, -1);
    int ncomp = 0;
    for (int s = 0; s < n_; ++s) {
      if (comp[s] >= 0) continue;
      comp[s] = ncomp;
      std::deque<int> q{s};
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : adj_[u])
          if (comp[v] < 0) {
            comp[v] = ncomp;
            q.push_back(v);
          }
      }
      ++ncomp;
    }
    if (ncomp > 1) {
      std::ostringstream os;
      os << "graph is disconnected (" << ncomp << " components):";
      for (int c = 0; c < ncomp; ++c) {
        os << " {";
        bool first = true;
        for (int v = 0; v < n_; ++v)
          if (comp[v] == c) {
            if (!first) os << ",";
            os << v;
            first = false;
          }
        os << "}";
      }
      throw ParseError(os.str());
    }
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<VBits> bits_;
};

/// Table of exact unit-edge distances.
class DistMatrix {
 public:
  DistMatrix() = default;
  DistMatrix(int n, std::vector<int32_t> d) : n_(n), d_(std::move(d)) {}
  int operator()(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  int n() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int32_t> d_;
};

inline std::vector<int32_t> bfs_from(const Graph& g, int src) {
  std::vector<int32_t> dist(g.n(), -1);
  dist[src] = 0;
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

inline DistMatrix all_pairs_distances(const Graph& g) {
  std::vector<int32_t> d;
  d.reserve(static_cast<size_t>(g.n()) * g.n());
  for (int s = 0; s < g.n(); ++s) {
    auto row = bfs_from(g, s);
    d.insert(d.end(), row.begin(), row.end());
  }
  return DistMatrix(g.n(), std::move(d));
}

inline int diameter(const Graph& g, const DistMatrix& d) {
  int best = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) best = std::max(best, d(u, v));
  return best;
}

/// BFS restricted to an induced vertex subset.  Returns -1 for vertices
/// outside the subset or unreachable within it.
inline std::vector<int32_t> bfs_in_subset(const Graph& g, const VBits& members, int src) {
  std::vector<int32_t> dist(g.n(), -1);
  dist[src] = 0;
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : g.neighbors(u))
      if (members.test(v) && dist[v] < 0) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
  }
  return dist;
}

inline bool induces_connected_subgraph(const Graph& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  VBits bits(g.n());
  for (int v : members) bits.set(v);
  auto dist = bfs_in_subset(g, bits, members.front());
  for (int v : members)
    if (dist[v] < 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
// Lines starting with '#' are comments.  Serialization is byte-stable:
// edges ascending, single spaces, trailing newline.
// ---------------------------------------------------------------------------

inline Graph parse_graph(std::istream& in) {
  std::string line;
  auto next_payload = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      size_t i = line.find_first_not_of(" \t\r");
      if (i == std::string::npos) continue;
      if (line[i] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string head;
  if (!next_payload(head)) throw ParseError("empty graph file");
  std::istringstream hs(head);
  long long n = -1, m = -1;
  if (!(hs >> n >> m) || n <= 0 || m < 0) throw ParseError("bad header line: " + head);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string el;
    if (!next_payload(el)) throw ParseError("expected " + std::to_string(m) + " edges");
    std::istringstream es(el);
    long long u, v;
    if (!(es >> u >> v)) throw ParseError("bad edge line: " + el);
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range: " + el);
    if (u >= v) throw ParseError("edges must satisfy u < v: " + el);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

inline Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << g.n() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

inline void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write graph file: " + path);
  out << serialize_graph(g);
}

}  // namespace wmg
