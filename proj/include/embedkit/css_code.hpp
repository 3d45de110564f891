#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "embedkit/binary_matrix.hpp"
#include "embedkit/surface_map.hpp"

namespace embedkit {

struct CssCode {
  BinaryMatrix h_x;  // |V| x |E|
  BinaryMatrix h_z;  // |F| x |E|
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::size_t> d;
  // Largest weight searched when computing d; 0 if no search ran.
  std::size_t d_search_cap = 0;
};

// (v, e) = 1 iff v is an endpoint of edge e. Loops contribute 0.
BinaryMatrix vertex_edge_matrix(const SurfaceMap& m);

// (f, e) = number of sides of e on the boundary of f, mod 2.
BinaryMatrix face_edge_matrix(const SurfaceMap& m);

// Pair two check matrices. Verifies equal column counts and H_X * H_Z^T = 0
// (InternalError naming the first offending row pair) and fills n and k.
CssCode make_css(BinaryMatrix h_x, BinaryMatrix h_z);

// Surface code of a map. Additionally checks k = 2 * genus (InternalError otherwise).
CssCode build_css(const SurfaceMap& m);

struct DistanceOptions {
  std::size_t cap = 6;
  unsigned threads = 1;
};

struct DistanceResult {
  // Certified minimum distance, or nullopt when no logical operator has weight <= cap.
  std::optional<std::size_t> distance;
  std::size_t cap = 0;
  // A minimum-weight logical operator and its type ('X' or 'Z') when certified.
  BitVector witness;
  char witness_type = '?';
};

// d = min over weight of v with H_X v = 0, v not in rowspace(H_Z) (Z-type),
// and symmetrically with the roles swapped (X-type). Supports are enumerated
// in increasing weight up to options.cap. Throws ValidationError if k = 0 or cap < 1.
DistanceResult min_distance(const CssCode& code, const DistanceOptions& options = {});

// Copy of code with d and d_search_cap filled from min_distance.
CssCode with_distance(CssCode code, const DistanceOptions& options = {});

// "CSS n=<n> k=<k> d=<d|?> cap=<c>"
std::string format_params_line(const CssCode& code);

}  // namespace embedkit
