#pragma once

// Built-in worked examples: the Grassmannian G(2,4), the flag manifold F_3,
// the reduction of CP^3, and the local models.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cx1/chardata.hpp"
#include "cx1/report.hpp"
#include "cx1/weights.hpp"

namespace cx1 {

// Tangent weights at a fixed point, which is a 0-cell of the sponge.
struct FixedPoint {
  std::string vertex;
  WeightSystem weights;
  // For charts: the sponge cell along which only coordinate k is nonzero.
  std::vector<std::string> edges;
};

struct Expectation {
  std::string value;
  std::string source;  // "published", "derived" or "trivial"
};

struct CatalogEntry {
  std::string name;
  std::string description;
  CharacteristicData data;
  std::vector<FixedPoint> fixed_points;
  // Weights written in the coordinates of mu, one per fixed point, used to
  // compare each vertex star with its local model.
  std::vector<FixedPoint> charts;
  std::map<std::string, Expectation> expected;
};

std::vector<std::string> catalog_names();  // built-in names; local models as "local-model-<n>"

// Loads a built-in entry. If the environment variable CX1_CATALOG_PATH names a
// directory containing <name>.json, that characteristic data file is loaded
// instead (without fixed points or expectations). Throws LookupError for
// unknown names.
CatalogEntry load(const std::string& name);

// Every validator, the per-vertex chart comparison, and the stored expectations.
Report verify(const CatalogEntry& entry);

// Builders behind the built-in entries.
CatalogEntry g42_entry();
CatalogEntry f3_entry();
CatalogEntry cp3_reduction_entry();
CatalogEntry local_model_entry(std::size_t n);

// Compares the star of fp.vertex with the local model of fp.weights: the cells
// spanned by the listed edges must match the local faces, and the Euler data
// must agree with local_euler_from_weights up to cell orientations and one
// global sign.
bool chart_agrees(const CharacteristicData& cd, const FixedPoint& fp, std::string& reason);

}  // namespace cx1
