#include "embedkit/scheme_gen.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "embedkit/errors.hpp"

namespace embedkit {

namespace {

std::string family_name(Family f) {
  switch (f) {
    case Family::ClassI_K4r1: return "class1";
    case Family::ClassII_K4s: return "class2";
    case Family::ClassIII_Krs: return "class3";
    case Family::ClassIV_Krsss: return "class4";
  }
  return "?";
}

}  // namespace

bool bipartite_self_dual_exists(int r, int s) {
  return r > 2 && s > 2 && r % 2 == 0 && s % 2 == 0 && !(r == 6 && s == 6);
}

void validate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::ClassI_K4r1:
      if (spec.r < 1) throw ValidationError("class1 requires r >= 1, got r=" + std::to_string(spec.r));
      return;
    case Family::ClassII_K4s:
      if (spec.s < 2) throw ValidationError("class2 requires s >= 2, got s=" + std::to_string(spec.s));
      return;
    case Family::ClassIII_Krs:
      if (spec.r == 6 && spec.s == 6)
        throw NonexistenceError("K_{6,6} has no orientable self-dual embedding");
      if (spec.r < 4 || spec.s < 4 || spec.r % 4 != 0 || spec.s % 4 != 0)
        throw ValidationError("class3 requires r and s positive multiples of 4, got r=" + std::to_string(spec.r) +
                              ", s=" + std::to_string(spec.s));
      return;
    case Family::ClassIV_Krsss:
      if (spec.r < 2 || spec.s < 2)
        throw ValidationError("class4 requires r >= 2 and s >= 2, got r=" + std::to_string(spec.r) +
                              ", s=" + std::to_string(spec.s));
      return;
  }
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(0, "family spec must look like 'class1:r=<int>'");
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  std::vector<std::string> keys;
  if (name == "class1") {
    spec.family = Family::ClassI_K4r1;
    keys = {"r"};
  } else if (name == "class2") {
    spec.family = Family::ClassII_K4s;
    keys = {"s"};
  } else if (name == "class3") {
    spec.family = Family::ClassIII_Krs;
    keys = {"r", "s"};
  } else if (name == "class4") {
    spec.family = Family::ClassIV_Krsss;
    keys = {"r", "s"};
  } else {
    throw ParseError(0, "unknown family '" + std::string(name) + "' (expected class1..class4)");
  }

  std::string_view rest = text.substr(colon + 1);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const std::string prefix = keys[i] + "=";
    if (!rest.starts_with(prefix))
      throw ParseError(0, "expected '" + prefix + "<int>' in family spec '" + std::string(text) + "'");
    rest.remove_prefix(prefix.size());
    const auto end = std::min(rest.find(','), rest.size());
    int value = 0;
    const auto token = rest.substr(0, end);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError(0, "bad integer '" + std::string(token) + "' in family spec");
    (keys[i] == "r" ? spec.r : spec.s) = value;
    rest.remove_prefix(end);
    if (i + 1 < keys.size()) {
      if (!rest.starts_with(",")) throw ParseError(0, "expected ',' in family spec '" + std::string(text) + "'");
      rest.remove_prefix(1);
    }
  }
  if (!rest.empty()) throw ParseError(0, "trailing text in family spec '" + std::string(text) + "'");
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::ClassI_K4r1: return family_name(spec.family) + ":r=" + std::to_string(spec.r);
    case Family::ClassII_K4s: return family_name(spec.family) + ":s=" + std::to_string(spec.s);
    default:
      return family_name(spec.family) + ":r=" + std::to_string(spec.r) + ",s=" + std::to_string(spec.s);
  }
}

PredictedParams predicted_params(const FamilySpec& spec) {
  validate(spec);
  const long r = spec.r;
  const long s = spec.s;
  switch (spec.family) {
    case Family::ClassI_K4r1: return {2 * r * (4 * r + 1), 2 * r * (4 * r - 3), 3};
    case Family::ClassII_K4s: return {2 * s * (4 * s - 1), 2 * (s - 1) * (4 * s - 1), 3};
    case Family::ClassIII_Krs: return {r * s, (r - 2) * (s - 2) / 2, 4};
    case Family::ClassIV_Krsss: return {(2 * r + 1) * s * s, (r * s - 2) * (s - 1), 3};
  }
  throw InternalError("unhandled family");
}

RotationSystem additive_scheme(const AbelianGroup& group, const std::vector<int>& a_elements,
                               const std::vector<int>& involutions) {
  if (a_elements.size() % 2 != 0) throw ValidationError("a-elements must come in pairs");
  std::vector<Vertex> row0;
  for (std::size_t k = 0; k < a_elements.size(); k += 2) {
    const int x = a_elements[k];
    const int y = a_elements[k + 1];
    row0.insert(row0.end(), {x, group.negate(y), group.negate(x), y});
  }
  row0.insert(row0.end(), involutions.begin(), involutions.end());

  std::vector<std::vector<Vertex>> rows(static_cast<std::size_t>(group.order()));
  for (int g = 0; g < group.order(); ++g) {
    auto& row = rows[static_cast<std::size_t>(g)];
    row.reserve(row0.size());
    for (Vertex x : row0) row.push_back(group.add(x, g));
  }
  return RotationSystem(std::move(rows));
}

std::vector<std::vector<Vertex>> expected_faces_additive(const AbelianGroup& group, const std::vector<int>& a_elements,
                                                         const std::vector<int>& involutions) {
  std::vector<std::vector<Vertex>> faces;
  for (int g = 0; g < group.order(); ++g) {
    std::vector<Vertex> face;
    for (std::size_t k = 0; k + 1 < a_elements.size(); k += 2) {
      const int x = a_elements[k];
      const int y = a_elements[k + 1];
      face.insert(face.end(), {g, group.add(x, g), group.add(group.add(x, y), g), group.add(y, g)});
    }
    if (!involutions.empty()) {
      face.push_back(g);
      int partial = 0;
      for (std::size_t l = 0; l + 1 < involutions.size(); ++l) {
        partial = group.add(partial, involutions[l]);
        face.push_back(group.add(partial, g));
      }
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<int> select_a_elements(const AbelianGroup& group) {
  std::vector<int> out;
  std::vector<char> taken(static_cast<std::size_t>(group.order()), 0);
  for (int x = 1; x < group.order(); ++x) {
    const int inv = group.negate(x);
    if (inv == x || taken[static_cast<std::size_t>(inv)]) continue;
    taken[static_cast<std::size_t>(x)] = 1;
    out.push_back(x);
  }
  return out;
}

std::vector<int> involutions_of(const AbelianGroup& group) {
  std::vector<int> out;
  for (int x = 1; x < group.order(); ++x)
    if (group.is_involution(x)) out.push_back(x);
  return out;
}

RotationSystem scheme_k4r1(int r) {
  if (r < 1) throw ValidationError("K_{4r+1} scheme requires r >= 1, got r=" + std::to_string(r));
  if (r > 1000) throw ValidationError("r too large");
  const AbelianGroup group(0, 4 * r + 1);
  return additive_scheme(group, select_a_elements(group), {});
}

std::vector<std::vector<Vertex>> expected_faces_k4r1(int r) {
  if (r < 1) throw ValidationError("K_{4r+1} faces require r >= 1, got r=" + std::to_string(r));
  const int n = 4 * r + 1;
  std::vector<std::vector<Vertex>> faces;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> face;
    for (int k = 1; k <= r; ++k)
      face.insert(face.end(), {i, (2 * k - 1 + i) % n, (4 * k - 1 + i) % n, (2 * k + i) % n});
    faces.push_back(std::move(face));
  }
  return faces;
}

bool validate_complete_self_dual(const SurfaceMap& m, const std::vector<std::vector<Vertex>>& expected,
                                 std::string* reason) {
  auto fail = [&](std::string why) {
    if (reason) *reason = std::move(why);
    return false;
  };
  const std::size_t n = m.vertex_count();
  std::map<std::size_t, std::size_t> census;
  for (const auto& f : m.faces()) ++census[f.length()];
  std::string census_text;
  for (auto [len, count] : census)
    census_text += (census_text.empty() ? "" : ", ") + std::to_string(count) + " faces of length " + std::to_string(len);

  if (m.face_count() != n || census.size() != 1 || census.begin()->first != n - 1)
    return fail("face census " + census_text + "; expected " + std::to_string(n) + " faces of length " +
                std::to_string(n - 1));

  std::set<std::vector<Vertex>> traced;
  for (std::size_t f = 0; f < m.face_count(); ++f) traced.insert(canonical_cycle(m.face_vertices(f)));
  std::set<std::vector<Vertex>> predicted;
  for (const auto& f : expected) predicted.insert(canonical_cycle(f));
  if (traced != predicted) return fail("traced face sequences differ from the predicted pattern (" + census_text + ")");
  if (!faces_pairwise_share_one_edge(m)) return fail("some face pair does not share exactly one edge");
  return true;
}

K4sScheme scheme_k4s(int n, const K4sOptions& options) {
  if (n % 4 != 0 || n < 8)
    throw ValidationError("K_{4s} scheme requires n divisible by 4 and n >= 8, got n=" + std::to_string(n));
  if (n > 4096) throw ValidationError("n too large");
  const AbelianGroup group = AbelianGroup::for_order(n);
  const std::vector<int> a = select_a_elements(group);
  std::vector<int> b = involutions_of(group);

  int sum = 0;
  for (int x : b) sum = group.add(sum, x);
  if (sum != 0) throw InternalError("involutions do not sum to zero");
  if (b.size() != static_cast<std::size_t>((1 << group.sigma()) - 1) ||
      a.size() != static_cast<std::size_t>((1 << (group.sigma() - 1)) * (group.t() - 1)))
    throw InternalError("unexpected element counts for Z_2^sigma x Z_t");

  std::string reason;
  std::size_t tried = 0;
  do {
    if (tried == options.ordering_budget) break;
    ++tried;
    RotationSystem rot = additive_scheme(group, a, b);
    SurfaceMap map = trace_faces(rot);
    if (validate_complete_self_dual(map, expected_faces_additive(group, a, b), &reason))
      return K4sScheme{group, a, b, std::move(rot), std::move(map), tried};
  } while (std::next_permutation(b.begin(), b.end()));

  throw std::runtime_error("no valid involution ordering for K_" + std::to_string(n) + " after " +
                           std::to_string(tried) + " tries: " + reason);
}

}  // namespace embedkit
