#pragma once

// Enumerates every acyclic directed multigraph with at most max_vertices
// vertices and max_edges edges (parallel edges allowed, loops excluded by
// acyclicity), invoking fn on each.

#include <functional>
#include <utility>
#include <vector>

#include "deltaring/path_algebra.hpp"

namespace sweep {

inline void all_acyclic_quivers(int max_vertices, int max_edges,
                                const std::function<void(const deltaring::Quiver&)>& fn) {
  for (int v = 1; v <= max_vertices; ++v) {
    std::vector<std::pair<int, int>> arcs;
    for (int a = 0; a < v; ++a)
      for (int b = 0; b < v; ++b)
        if (a != b) arcs.emplace_back(a, b);
    // multisets of arcs as non-decreasing index sequences
    std::vector<size_t> pick;
    auto rec = [&](auto&& self, size_t min_arc) -> void {
      {
        std::vector<std::pair<int, int>> edges;
        for (size_t i : pick) edges.push_back(arcs[i]);
        try {
          fn(deltaring::make_quiver(v, std::move(edges)));
        } catch (const deltaring::ring_error& e) {
          if (e.code() != deltaring::errc::cyclic_quiver) throw;
        }
      }
      if (int(pick.size()) == max_edges) return;
      for (size_t i = min_arc; i < arcs.size(); ++i) {
        pick.push_back(i);
        self(self, i);
        pick.pop_back();
      }
    };
    rec(rec, 0);
  }
}

}  // namespace sweep
