#pragma once

#include <vector>

#include "ckc/generators.hpp"
#include "ckc/instance.hpp"

namespace ckc::testing {

inline std::vector<Rational> coords(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline Instance on_line(std::initializer_list<long> xs, int k, std::vector<ColorClass> colors) {
  return Instance(line_metric(coords(xs)), k, std::move(colors));
}

// Points 0..3 on the line; colors a={0,1}, b={1,2}, c={0,2}, d={0,3}, m = 1, k = 2.
inline Instance triangle_leaf() {
  return on_line({0, 1, 2, 3}, 2, {{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}, {{0, 3}, 1}});
}

inline Graph triangle_leaf_graph() { return Graph{4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}}; }

}  // namespace ckc::testing
