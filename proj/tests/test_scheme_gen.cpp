#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "embedkit/errors.hpp"
#include "embedkit/scheme_gen.hpp"
#include "test_support.hpp"

using namespace embedkit;

namespace {

std::vector<std::vector<Vertex>> canonical_faces(const SurfaceMap& m) {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t f = 0; f < m.face_count(); ++f) out.push_back(canonical_cycle(m.face_vertices(f)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> canonical_faces(std::vector<std::vector<Vertex>> faces) {
  for (auto& f : faces) f = canonical_cycle(f);
  std::sort(faces.begin(), faces.end());
  return faces;
}

}  // namespace

TEST_SUITE("scheme_gen") {

TEST_CASE("abelian group labels") {
  const AbelianGroup g = AbelianGroup::for_order(12);
  CHECK(g.sigma() == 2);
  CHECK(g.t() == 3);
  CHECK(g.order() == 12);
  CHECK(g.element(5) == GroupElement{1, 2});
  CHECK(g.label(GroupElement{3, 1}) == 10);
  CHECK(g.negate(1) == 2);
  CHECK(g.negate(4) == 5);
  CHECK(g.add(4, 5) == 0);
  CHECK(g.add(4, 7) == 11);
  for (int a = 0; a < g.order(); ++a) {
    CHECK(g.label(g.element(a)) == a);
    CHECK(g.add(a, g.negate(a)) == 0);
    for (int b = 0; b < g.order(); ++b) CHECK(g.add(a, b) == g.add(b, a));
  }
  CHECK(involutions_of(g) == std::vector<int>{3, 6, 9});
  CHECK(select_a_elements(g) == std::vector<int>{1, 4, 7, 10});

  const AbelianGroup z8 = AbelianGroup::for_order(8);
  CHECK(z8.sigma() == 3);
  CHECK(z8.t() == 1);
  CHECK(select_a_elements(z8).empty());
  CHECK(involutions_of(z8).size() == 7);
}

TEST_CASE("K_{4r+1} row zero") {
  CHECK(scheme_k4r1(1).rotation(0) == std::vector<Vertex>{1, 3, 4, 2});
  CHECK(scheme_k4r1(2).rotations() == testing::kK9Rotation);
  CHECK(scheme_k4r1(3).rotation(0) == std::vector<Vertex>{1, 11, 12, 2, 3, 9, 10, 4, 5, 7, 8, 6});
  CHECK_THROWS_AS(scheme_k4r1(0), ValidationError);
}

TEST_CASE("K_{4r+1} rows are translates") {
  const RotationSystem rot = scheme_k4r1(3);
  const int n = 13;
  for (int g = 0; g < n; ++g)
    for (std::size_t i = 0; i < rot.rotation(0).size(); ++i)
      CHECK(rot.rotation(g)[i] == (rot.rotation(0)[i] + g) % n);
}

TEST_CASE("K_{4r+1} predicted face sequences") {
  CHECK(expected_faces_k4r1(1)[0] == std::vector<Vertex>{0, 1, 3, 2});
  const auto k9 = expected_faces_k4r1(2);
  CHECK(k9.size() == 9);
  CHECK(k9[0] == std::vector<Vertex>{0, 1, 3, 2, 0, 3, 7, 4});
  CHECK(k9[8] == std::vector<Vertex>{8, 0, 2, 1, 8, 2, 6, 3});
  CHECK(canonical_faces(k9) == canonical_faces(testing::kK9Faces));
}

TEST_CASE("K_{4r+1} maps are self-dual and match the face formula") {
  for (int r = 1; r <= 4; ++r) {
    CAPTURE(r);
    const int n = 4 * r + 1;
    const SurfaceMap m = trace_faces(scheme_k4r1(r));
    CHECK(m.face_count() == static_cast<std::size_t>(n));
    for (const auto& f : m.faces()) CHECK(f.length() == static_cast<std::size_t>(n - 1));
    CHECK(m.genus() == r * (4 * r - 3));
    CHECK(canonical_faces(m) == canonical_faces(expected_faces_k4r1(r)));
    CHECK(faces_pairwise_share_one_edge(m));
    CHECK(validate_complete_self_dual(m, expected_faces_k4r1(r)));
  }
  const SurfaceMap k13 = trace_faces(scheme_k4r1(3));
  CHECK(k13.genus() == 27);
  CHECK(is_self_dual(k13).self_dual);
}

TEST_CASE("K_{4s} schemes") {
  const K4sScheme k8 = scheme_k4s(8);
  CHECK(k8.map.genus() == 7);
  CHECK(k8.map.face_count() == 8);
  CHECK(k8.orderings_tried == 1);

  const K4sScheme k12 = scheme_k4s(12);
  CHECK(k12.a_elements == std::vector<int>{1, 4, 7, 10});
  CHECK(k12.involutions == std::vector<int>{3, 6, 9});
  CHECK(k12.map.genus() == 22);
  CHECK(k12.rotation.rotation(0) == std::vector<Vertex>{1, 5, 2, 4, 7, 11, 8, 10, 3, 6, 9});
  CHECK(is_self_dual(k12.map).self_dual);

  const K4sScheme k16 = scheme_k4s(16);
  CHECK(k16.map.genus() == 45);
  for (const auto& f : k16.map.faces()) CHECK(f.length() == 15);
  CHECK(faces_pairwise_share_one_edge(k16.map));

  for (int n : {8, 12, 16, 20, 24}) {
    CAPTURE(n);
    const K4sScheme s = scheme_k4s(n);
    int sum = 0;
    for (int b : s.involutions) sum = s.group.add(sum, b);
    CHECK(sum == 0);
    CHECK(2 * s.a_elements.size() + s.involutions.size() == static_cast<std::size_t>(n - 1));
    CHECK(validate_complete_self_dual(
        s.map, expected_faces_additive(s.group, s.a_elements, s.involutions)));
  }
}

TEST_CASE("K_{4s} argument checks") {
  CHECK_THROWS_AS(scheme_k4s(4), ValidationError);
  CHECK_THROWS_AS(scheme_k4s(6), ValidationError);
  CHECK_THROWS_AS(scheme_k4s(10), ValidationError);
  CHECK_THROWS_AS(scheme_k4s(12, K4sOptions{0}), std::runtime_error);
}

TEST_CASE("validation rejects a map with the wrong faces") {
  const SurfaceMap m = trace_faces(scheme_k4r1(2));
  std::string reason;
  CHECK_FALSE(validate_complete_self_dual(m, expected_faces_k4r1(1), &reason));
  CHECK_FALSE(reason.empty());
  // A K_5 rotation that is not a self-dual embedding.
  const SurfaceMap flat = trace_faces(RotationSystem({{1, 2, 3, 4}, {0, 2, 3, 4}, {0, 1, 3, 4}, {0, 1, 2, 4}, {0, 1, 2, 3}}));
  CHECK_FALSE(validate_complete_self_dual(flat, expected_faces_k4r1(1), &reason));
}

TEST_CASE("predicted parameters") {
  CHECK(predicted_params(parse_family_spec("class1:r=1")) == PredictedParams{10, 2, 3});
  CHECK(predicted_params(parse_family_spec("class1:r=2")) == PredictedParams{36, 20, 3});
  CHECK(predicted_params(parse_family_spec("class1:r=3")) == PredictedParams{78, 54, 3});
  CHECK(predicted_params(parse_family_spec("class2:s=2")) == PredictedParams{28, 14, 3});
  CHECK(predicted_params(parse_family_spec("class3:r=4,s=4")) == PredictedParams{16, 2, 4});
  CHECK(predicted_params(parse_family_spec("class3:r=4,s=8")) == PredictedParams{32, 6, 4});
  CHECK(predicted_params(parse_family_spec("class4:r=2,s=2")) == PredictedParams{20, 2, 3});
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(validate({Family::ClassI_K4r1, 0, 0}), ValidationError);
  CHECK_THROWS_AS(validate({Family::ClassII_K4s, 0, 1}), ValidationError);
  CHECK_THROWS_AS(validate({Family::ClassIII_Krs, 4, 6}), ValidationError);
  CHECK_THROWS_AS(validate({Family::ClassIV_Krsss, 1, 2}), ValidationError);
  CHECK_THROWS_AS(validate({Family::ClassIII_Krs, 6, 6}), NonexistenceError);
  CHECK_NOTHROW(validate({Family::ClassIII_Krs, 8, 4}));
  CHECK(bipartite_self_dual_exists(4, 6));
  CHECK_FALSE(bipartite_self_dual_exists(6, 6));
  CHECK_FALSE(bipartite_self_dual_exists(3, 4));
  CHECK_FALSE(bipartite_self_dual_exists(2, 4));
}

TEST_CASE("family spec text") {
  CHECK(parse_family_spec("class3:r=4,s=8") == FamilySpec{Family::ClassIII_Krs, 4, 8});
  CHECK(parse_family_spec("class2:s=5") == FamilySpec{Family::ClassII_K4s, 0, 5});
  for (const char* text : {"class1:r=3", "class2:s=2", "class3:r=4,s=8", "class4:r=2,s=3"})
    CHECK(format_family_spec(parse_family_spec(text)) == text);
  for (const char* bad : {"class1", "class5:r=1", "class1:s=1", "class1:r=x", "class3:r=4", "class1:r=1,r=2", ""})
    CHECK_THROWS_AS(parse_family_spec(bad), ParseError);
}

TEST_CASE("K_{4,4} search") {
  const BipartiteSearchResult serial = search_self_dual_bipartite(4, 4);
  REQUIRE(serial.status == SearchStatus::Found);
  const SurfaceMap& m = *serial.map;
  CHECK(m.genus() == 1);
  CHECK(m.face_count() == 8);
  for (const auto& f : m.faces()) CHECK(f.length() == 4);
  CHECK(is_self_dual(m).self_dual);
  CHECK(m.rotation()->rotation(0) == std::vector<Vertex>{4, 5, 6, 7});

  const BipartiteSearchResult parallel = search_self_dual_bipartite(4, 4, {10'000'000, 4});
  REQUIRE(parallel.status == SearchStatus::Found);
  CHECK(parallel.index == serial.index);
  CHECK(*parallel.map->rotation() == *m.rotation());

  CHECK(search_self_dual_bipartite(4, 4, {0, 1}).status == SearchStatus::BudgetExhausted);
  CHECK(search_self_dual_bipartite(4, 4, {serial.index, 1}).status == SearchStatus::BudgetExhausted);
  CHECK(search_self_dual_bipartite(6, 6).status == SearchStatus::Nonexistent);
  CHECK_THROWS_AS(search_self_dual_bipartite(3, 4), ValidationError);
  CHECK_THROWS_AS(search_self_dual_bipartite(2, 4), ValidationError);
}

}  // TEST_SUITE
