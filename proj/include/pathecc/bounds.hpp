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
#include <functional>
#include <optional>
#include <vector>

#include "pathecc/graph.hpp"

namespace pathecc {

namespace detail {

/// Component orders if g is a disjoint union of paths, else nullopt.
inline std::optional<std::vector<int>> linear_forest_components(const Graph& g) {
  const Vertex n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    std::size_t verts = 0;
    std::size_t degsum = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++verts;
      if (g.degree(v) > 2) return std::nullopt;
      degsum += static_cast<std::size_t>(g.degree(v));
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (degsum / 2 != verts - 1) return std::nullopt;
    out.push_back(static_cast<int>(verts));
  }
  return out;
}

/// Can the components be grouped into the bins, a group of sizes c fitting
/// a bin of capacity L iff sum(c) + |group| - 1 <= L?
inline bool pack_paths(std::vector<int> comps, std::vector<int> bins) {
  std::sort(comps.rbegin(), comps.rend());
  std::vector<int> used(bins.size(), 0);  // vertices plus separators consumed
  std::vector<int> count(bins.size(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == comps.size()) return true;
    for (std::size_t b = 0; b < bins.size(); ++b) {
      const int need = comps[i] + (count[b] > 0 ? 1 : 0);
      if (used[b] + need > bins[b]) continue;
      used[b] += need;
      ++count[b];
      if (place(i + 1)) return true;
      --count[b];
      used[b] -= need;
    }
    return false;
  };
  return place(0);
}

}  // namespace detail

/// True iff h is an induced subgraph of 3P_k or of P_{2k+1} + P_{k-1}, i.e.
/// of both S_k and T_k.
inline bool fits_bound(const Graph& h, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  auto comps = detail::linear_forest_components(h);
  if (!comps) return false;
  return detail::pack_paths(*comps, {k, k, k}) || detail::pack_paths(*comps, {2 * k + 1, k - 1});
}

}  // namespace pathecc
