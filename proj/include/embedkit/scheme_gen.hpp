#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "embedkit/abelian_group.hpp"
#include "embedkit/rotation_system.hpp"
#include "embedkit/surface_map.hpp"

namespace embedkit {

enum class Family {
  ClassI_K4r1,   // K_{4r+1}
  ClassII_K4s,   // K_{4s}
  ClassIII_Krs,  // K_{r,s}
  ClassIV_Krsss  // K_{rs,s,s}
};

struct FamilySpec {
  Family family = Family::ClassI_K4r1;
  int r = 0;  // unused for ClassII
  int s = 0;  // unused for ClassI

  bool operator==(const FamilySpec&) const = default;
};

struct PredictedParams {
  long n = 0;
  long k = 0;
  long d = 0;

  bool operator==(const PredictedParams&) const = default;
};

// Throws ValidationError naming the violated bound, or NonexistenceError for
// Class III (6,6).
void validate(const FamilySpec& spec);

// "class1:r=<int>", "class2:s=<int>", "class3:r=<int>,s=<int>", "class4:r=<int>,s=<int>".
// Throws ParseError for malformed text; does not validate ranges.
FamilySpec parse_family_spec(std::string_view text);
std::string format_family_spec(const FamilySpec& spec);

PredictedParams predicted_params(const FamilySpec& spec);

// Existence of an orientable self-dual embedding of K_{r,s}: both even, both > 2, not (6,6).
bool bipartite_self_dual_exists(int r, int s);

// Row 0 of the additive scheme: for each a-pair (x, y) the block x, -y, -x, y,
// then the involutions in the given order. Row g is row 0 translated by +g.
RotationSystem additive_scheme(const AbelianGroup& group, const std::vector<int>& a_elements,
                               const std::vector<int>& involutions);

// Face vertex sequences predicted for an additive scheme, one per group element
// g: the face through the directed edge (g, g + first generator).
std::vector<std::vector<Vertex>> expected_faces_additive(const AbelianGroup& group,
                                                         const std::vector<int>& a_elements,
                                                         const std::vector<int>& involutions);

// Canonical a-selection: non-involutory non-identity labels in increasing
// order, each taken unless its inverse already was.
std::vector<int> select_a_elements(const AbelianGroup& group);
std::vector<int> involutions_of(const AbelianGroup& group);

// Scheme for K_{4r+1} over Z_{4r+1}; row 0 = 1, -2, -1, 2, ..., 2r-1, -2r, -(2r-1), 2r.
RotationSystem scheme_k4r1(int r);

// Face sequences i, 1+i, 3+i, 2+i, i, ..., i, (2r-1)+i, (4r-1)+i, 2r+i for i in Z_{4r+1}.
std::vector<std::vector<Vertex>> expected_faces_k4r1(int r);

struct K4sScheme {
  AbelianGroup group;
  std::vector<int> a_elements;
  std::vector<int> involutions;  // in the order that validated
  RotationSystem rotation;
  SurfaceMap map;
  std::size_t orderings_tried = 0;
};

struct K4sOptions {
  // Maximum number of involution orderings examined, including the first.
  std::size_t ordering_budget = 5040;
};

// Scheme for K_n, n = 0 mod 4, n >= 8, over Z_2^sigma x Z_t. The traced map is
// validated (n faces of length n-1, predicted face sequences, pairwise single
// shared edge); on failure further involution orderings are tried. Throws
// ValidationError for bad n and std::runtime_error when the budget runs out.
K4sScheme scheme_k4s(int n, const K4sOptions& options = {});

// Check a traced additive-scheme map: n faces of length n-1, face sequences
// equal to `expected` up to cyclic rotation, and every face pair sharing one edge.
// On failure, `reason` describes the face census.
bool validate_complete_self_dual(const SurfaceMap& m, const std::vector<std::vector<Vertex>>& expected,
                                 std::string* reason = nullptr);

enum class SearchStatus { Found, BudgetExhausted, Nonexistent };

struct BipartiteSearchResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::optional<SurfaceMap> map;
  std::uint64_t examined = 0;
  // Mixed-radix index of the rotation system found.
  std::uint64_t index = 0;
};

struct BipartiteSearchOptions {
  std::uint64_t budget = 10'000'000;
  unsigned threads = 1;
};

// Exhaustive search for an orientable self-dual embedding of K_{r,s}.
// Vertices 0..r-1 form the first part. The rotation at vertex 0 is fixed to
// r, r+1, ..., r+s-1; the remaining rotations are enumerated in mixed-radix
// order and the lowest-index self-dual map is returned, independent of the
// thread count. Throws ValidationError unless r, s are even and >= 4.
BipartiteSearchResult search_self_dual_bipartite(int r, int s, const BipartiteSearchOptions& options = {});

}  // namespace embedkit
