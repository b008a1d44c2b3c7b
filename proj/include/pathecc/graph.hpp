// Copyright 2026 The pathecc Authors
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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pathecc {

using Vertex = std::int32_t;
using Distance = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (edge lists, JSON, specs).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A brute-force oracle was asked to work above its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A produced certificate failed its own validator. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as sorted
/// adjacency arrays.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex order() const noexcept {
    return offsets_.empty() ? 0 : static_cast<Vertex>(offsets_.size() - 1);
  }
  std::size_t size() const noexcept { return targets_.size() / 2; }

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

  Vertex degree(Vertex v) const {
    return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
  }

  bool adjacent(Vertex u, Vertex v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges with u < v, ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : neighbors(u))
        if (u < v) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(Vertex n) : n_(n), adj_(n < 0 ? 0 : static_cast<std::size_t>(n)) {
    if (n < 0) throw InputError("negative vertex count");
  }

  Vertex order() const noexcept { return n_; }

  bool has_edge(Vertex u, Vertex v) const { return keys_.count(key(u, v)) != 0; }

  /// Adds uv; throws InputError on out-of-range ids, self-loops or duplicates.
  void add_edge(Vertex u, Vertex v) {
    if (!try_add_edge(u, v))
      throw InputError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }

  /// Like add_edge but returns false instead of throwing on a duplicate.
  bool try_add_edge(Vertex u, Vertex v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!keys_.insert(key(u, v)).second) return false;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    return true;
  }

  Graph build() && {
    Graph g;
    g.offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (Vertex v = 0; v < n_; ++v) g.offsets_[v + 1] = g.offsets_[v] + adj_[v].size();
    g.targets_.reserve(g.offsets_.back());
    for (auto& nb : adj_) {
      std::sort(nb.begin(), nb.end());
      g.targets_.insert(g.targets_.end(), nb.begin(), nb.end());
    }
    return g;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
  }

  Vertex n_;
  std::vector<std::vector<Vertex>> adj_;
  std::unordered_set<std::uint64_t> keys_;
};

inline Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return std::move(b).build();
}

/// Ordered sequence of distinct vertices. Validity against a host graph is
/// checked separately with valid_in().
class VertexPath {
 public:
  VertexPath() = default;
  explicit VertexPath(std::vector<Vertex> vs) : vs_(std::move(vs)) {}
  VertexPath(std::initializer_list<Vertex> vs) : vs_(vs) {}

  const std::vector<Vertex>& vertices() const noexcept { return vs_; }
  std::size_t size() const noexcept { return vs_.size(); }
  bool empty() const noexcept { return vs_.empty(); }
  Vertex front() const { return vs_.front(); }
  Vertex back() const { return vs_.back(); }
  Vertex operator[](std::size_t i) const { return vs_[i]; }
  auto begin() const noexcept { return vs_.begin(); }
  auto end() const noexcept { return vs_.end(); }

  VertexPath reversed() const { return VertexPath(std::vector<Vertex>(vs_.rbegin(), vs_.rend())); }

  /// Nonempty, ids in range and distinct, consecutive pairs adjacent.
  bool valid_in(const Graph& g) const {
    if (vs_.empty()) return false;
    std::vector<Vertex> sorted(vs_);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex v : vs_)
      if (!g.contains(v)) return false;
    for (std::size_t i = 1; i < vs_.size(); ++i)
      if (!g.adjacent(vs_[i - 1], vs_[i])) return false;
    return true;
  }

  friend bool operator==(const VertexPath&, const VertexPath&) = default;

 private:
  std::vector<Vertex> vs_;
};

inline void require_path(const Graph& g, const VertexPath& p) {
  if (!p.valid_in(g)) throw PreconditionError("invalid path");
}

/// Shortest-path distances to the nearest vertex of a source set.
class DistanceMap {
 public:
  DistanceMap(std::vector<Vertex> sources, std::vector<Distance> raw)
      : sources_(std::move(sources)), dist_(std::move(raw)) {}

  std::span<const Vertex> sources() const noexcept { return sources_; }
  Vertex order() const noexcept { return static_cast<Vertex>(dist_.size()); }

  bool reachable(Vertex v) const { return dist_[v] != kUnreachable; }

  std::optional<Distance> operator[](Vertex v) const {
    if (!reachable(v)) return std::nullopt;
    return dist_[v];
  }

  Distance at(Vertex v) const {
    if (!reachable(v)) throw PreconditionError("vertex " + std::to_string(v) + " is unreachable");
    return dist_[v];
  }

  bool all_reachable() const {
    return std::none_of(dist_.begin(), dist_.end(), [](Distance d) { return d == kUnreachable; });
  }

  /// Largest finite distance; nullopt if some vertex is unreachable.
  std::optional<Distance> max() const {
    if (!all_reachable()) return std::nullopt;
    Distance m = 0;
    for (Distance d : dist_) m = std::max(m, d);
    return m;
  }

 private:
  static constexpr Distance kUnreachable = -1;
  std::vector<Vertex> sources_;
  std::vector<Distance> dist_;
};

namespace detail {

inline constexpr Distance kNoDist = -1;

/// Multi-source BFS; vertices farther than radius (or unreachable) get kNoDist.
inline std::vector<Distance> bfs(const Graph& g, std::span<const Vertex> sources,
                                 Distance radius = -1) {
  std::vector<Distance> dist(static_cast<std::size_t>(g.order()), kNoDist);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  for (Vertex s : sources) {
    if (dist[s] == kNoDist) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    if (radius >= 0 && dist[v] >= radius) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kNoDist) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

inline std::size_t covered_count(const Graph& g, std::span<const Vertex> sources, Distance radius) {
  auto d = bfs(g, sources, radius);
  return static_cast<std::size_t>(std::count_if(d.begin(), d.end(), [](Distance x) { return x != kNoDist; }));
}

/// Walk from `from` down a distance field to a source, taking the least-id
/// neighbor one step closer each time.
inline std::vector<Vertex> descend(const Graph& g, const std::vector<Distance>& dist, Vertex from) {
  std::vector<Vertex> out{from};
  Vertex cur = from;
  while (dist[cur] > 0) {
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    out.push_back(cur);
  }
  return out;
}

inline std::vector<char> membership(Vertex n, std::span<const Vertex> vs) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  for (Vertex v : vs) in[v] = 1;
  return in;
}

/// Position of each vertex of `seq` (or -1), indexed by vertex id.
inline std::vector<int> positions(Vertex n, std::span<const Vertex> seq) {
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
  return pos;
}

inline void check_ids(const Graph& g, std::span<const Vertex> ids) {
  for (Vertex v : ids)
    if (!g.contains(v)) throw PreconditionError("vertex id out of range: " + std::to_string(v));
}

}  // namespace detail

inline DistanceMap bfs_from_set(const Graph& g, std::span<const Vertex> sources) {
  if (sources.empty()) throw PreconditionError("empty source set");
  detail::check_ids(g, sources);
  std::vector<Vertex> src(sources.begin(), sources.end());
  std::sort(src.begin(), src.end());
  src.erase(std::unique(src.begin(), src.end()), src.end());
  auto raw = detail::bfs(g, src);
  return DistanceMap(std::move(src), std::move(raw));
}

inline DistanceMap bfs_from_set(const Graph& g, std::initializer_list<Vertex> sources) {
  return bfs_from_set(g, std::span<const Vertex>(sources.begin(), sources.size()));
}

/// Vertices within distance k of the path, ascending.
inline std::vector<Vertex> covered_set(const Graph& g, const VertexPath& p, Distance k) {
  require_path(g, p);
  if (k < 0) throw PreconditionError("negative radius");
  auto d = detail::bfs(g, p.vertices(), k);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (d[v] != detail::kNoDist) out.push_back(v);
  return out;
}

inline Distance path_eccentricity_of(const Graph& g, const VertexPath& p) {
  require_path(g, p);
  auto m = bfs_from_set(g, p.vertices()).max();
  if (!m) throw PreconditionError("graph is disconnected");
  return *m;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const Vertex root = 0;
  return detail::covered_count(g, std::span<const Vertex>(&root, 1), -1) ==
         static_cast<std::size_t>(g.order());
}

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the host id of local vertex i; ascending.
  std::vector<Vertex> original;

  std::optional<Vertex> local(Vertex host) const {
    auto it = std::lower_bound(original.begin(), original.end(), host);
    if (it == original.end() || *it != host) return std::nullopt;
    return static_cast<Vertex>(it - original.begin());
  }
};

inline InducedSubgraph induced(const Graph& g, std::span<const Vertex> subset) {
  detail::check_ids(g, subset);
  InducedSubgraph out;
  out.original.assign(subset.begin(), subset.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()), out.original.end());
  GraphBuilder b(static_cast<Vertex>(out.original.size()));
  for (Vertex i = 0; i < b.order(); ++i) {
    for (Vertex w : g.neighbors(out.original[i])) {
      auto j = out.local(w);
      if (j && i < *j) b.add_edge(i, *j);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

}  // namespace pathecc
