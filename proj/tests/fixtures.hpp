#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cx1/sponge.hpp"

namespace fixture {

inline cx1::SpongeComplex k33() {
  std::vector<std::string> v{"a0", "a1", "a2", "b0", "b1", "b2"};
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> ids;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
      ids.push_back("e" + std::to_string(i) + std::to_string(j));
    }
  return {3, cx1::complex_from_graph(v, edges, ids)};
}

inline std::vector<std::string> octahedron_vertices() { return {"m1", "m2", "m3", "p1", "p2", "p3"}; }

inline std::vector<std::pair<std::string, std::vector<std::string>>> octahedron_triangles() {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  for (const char* a : {"p1", "m1"})
    for (const char* b : {"p2", "m2"})
      for (const char* c : {"p3", "m3"})
        out.push_back({std::string("t") + a + b + c, {a, b, c}});
  return out;
}

// Squares along the three equatorial cycles.
inline std::vector<std::pair<std::string, std::vector<std::string>>> equatorial_squares() {
  return {{"s1", {"p2", "p3", "m2", "m3"}}, {"s2", {"p1", "p3", "m1", "m3"}}, {"s3", {"p1", "p2", "m1", "m2"}}};
}

inline cx1::SpongeComplex octahedron(bool with_squares) {
  auto polys = octahedron_triangles();
  if (with_squares)
    for (auto& s : equatorial_squares()) polys.push_back(s);
  return {4, cx1::complex_from_polygons(octahedron_vertices(), polys)};
}

}  // namespace fixture
