#pragma once

// Built-in example graphs used by tests and the CLI demos.

#include <vector>

#include "bei/graph.hpp"
#include "bei/interval.hpp"

namespace bei {

// 4-cycle 1-2-3-4 with a pendant triangle vertex on each cycle edge.
inline Graph fixture_wheel_of_triangles() {
  return build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                         {4, 0}, {4, 1}, {5, 1}, {5, 2},
                         {6, 2}, {6, 3}, {7, 3}, {7, 0}});
}

// Four triangles glued at one center: outer 1..8, center 9.
inline Graph fixture_friendship4() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 8; ++i) e.emplace_back(i, 8);
  e.emplace_back(0, 1);
  e.emplace_back(2, 3);
  e.emplace_back(4, 5);
  e.emplace_back(6, 7);
  return build_graph(9, e);
}

// Interval family [0],[0,1],[1,2],[2,3],[0,1/2],[1/3,2].
inline std::vector<Interval> fixture_interval_family() {
  return {{"1", Rat(0), Rat(0)},
          {"2", Rat(0), Rat(1)},
          {"3", Rat(1), Rat(2)},
          {"4", Rat(2), Rat(3)},
          {"5", Rat(0), Rat::of(1, 2)},
          {"6", Rat::of(1, 3), Rat(2)}};
}

inline Graph fixture_interval_graph() {
  return realize_intervals(fixture_interval_family());
}

// Smallest tree that is not a caterpillar: three length-2 arms.
inline Graph fixture_spider222() { return spider_graph({2, 2, 2}); }

}  // namespace bei
