#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <set>

#include "embedkit/cli.hpp"
#include "embedkit/css_code.hpp"
#include "embedkit/errors.hpp"

namespace embedkit::cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::set<std::vector<Vertex>> canonical_set(const std::vector<std::vector<Vertex>>& cycles, bool reversed) {
  std::set<std::vector<Vertex>> out;
  for (auto c : cycles) {
    if (reversed) std::reverse(c.begin(), c.end());
    out.insert(canonical_cycle(c));
  }
  return out;
}

// Same rotation system with every cyclic order reversed.
bool is_mirror(const RotationSystem& a, const RotationSystem& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  for (std::size_t v = 0; v < a.vertex_count(); ++v) {
    auto row = a.rotation(static_cast<Vertex>(v));
    std::reverse(row.begin(), row.end());
    if (canonical_cycle(row) != canonical_cycle(b.rotation(static_cast<Vertex>(v)))) return false;
  }
  return true;
}

// Compare traced faces against the generated-scheme face formula, when the
// map's rotation is that scheme (or its mirror image).
Check face_sequence_check(const SurfaceMap& map) {
  const Check skipped{"face_sequences", CheckStatus::Skipped, "rotation is not a generated scheme"};
  if (!map.rotation()) return skipped;
  const RotationSystem& rot = *map.rotation();
  const auto n = static_cast<int>(map.vertex_count());
  if (map.edge_count() != static_cast<std::size_t>(n) * (n - 1) / 2) return skipped;

  std::optional<RotationSystem> scheme;
  std::vector<std::vector<Vertex>> expected;
  if (n >= 5 && n % 4 == 1) {
    scheme = scheme_k4r1((n - 1) / 4);
    expected = expected_faces_k4r1((n - 1) / 4);
  } else if (n >= 8 && n % 4 == 0) {
    const K4sScheme ks = scheme_k4s(n);
    scheme = ks.rotation;
    expected = expected_faces_additive(ks.group, ks.a_elements, ks.involutions);
  } else {
    return skipped;
  }

  std::vector<std::vector<Vertex>> traced;
  for (std::size_t f = 0; f < map.face_count(); ++f) traced.push_back(map.face_vertices(f));
  bool mirrored = false;
  if (rot == *scheme) {
    mirrored = false;
  } else if (is_mirror(rot, *scheme)) {
    mirrored = true;
  } else {
    return skipped;
  }
  const bool match = canonical_set(traced, false) == canonical_set(expected, mirrored);
  return {"face_sequences", match ? CheckStatus::Pass : CheckStatus::Fail, mirrored ? "mirror image" : ""};
}

// Shared map/code checks. Returns the code when it could be built.
std::optional<CssCode> analyze_map(const SurfaceMap& map, RunReport& report, const CommandOptions& options) {
  report.map = MapStats{map.vertex_count(), map.edge_count(), map.face_count(), map.euler_characteristic(), map.genus()};

  const SelfDualResult sd = is_self_dual(map);
  report.add_check("self_dual", sd.self_dual ? CheckStatus::Pass : CheckStatus::Fail);

  std::optional<CssCode> code;
  try {
    code = make_css(vertex_edge_matrix(map), face_edge_matrix(map));
    report.add_check("orthogonality", CheckStatus::Pass);
  } catch (const InternalError& e) {
    report.add_check("orthogonality", CheckStatus::Fail, e.what());
    report.add_check("k_equals_2g", CheckStatus::Skipped);
    return std::nullopt;
  }
  const std::size_t two_g = 2 * static_cast<std::size_t>(map.genus());
  report.add_check("k_equals_2g", code->k == two_g ? CheckStatus::Pass : CheckStatus::Fail,
                   "k=" + std::to_string(code->k) + " 2g=" + std::to_string(two_g));

  report.code = CodeStats{code->n, code->k, std::nullopt, 0};
  if (options.cap > 0 && code->k > 0) {
    const DistanceResult dr = min_distance(*code, {options.cap, options.threads});
    code->d = dr.distance;
    code->d_search_cap = dr.cap;
    report.code->d = dr.distance;
    report.code->cap = dr.cap;
  } else if (code->k == 0) {
    report.notes.push_back("k=0: code has no logical operators, distance undefined");
  }
  return code;
}

void compare_with_prediction(RunReport& report, const PredictedParams& p) {
  if (!report.code) return;
  const auto& c = *report.code;
  const bool nk = static_cast<long>(c.n) == p.n && static_cast<long>(c.k) == p.k;
  report.add_check("predicted_nk", nk ? CheckStatus::Pass : CheckStatus::Fail);
  if (c.d)
    report.add_check("predicted_d", static_cast<long>(*c.d) == p.d ? CheckStatus::Pass : CheckStatus::Fail);
  else
    report.add_check("predicted_d", CheckStatus::Skipped, "distance not certified");
}

void finish(RunReport& report, Clock::time_point start) {
  if (report.exit_code == kSuccess && report.any_failed()) report.exit_code = kCheckFailure;
  report.wall_ms = elapsed_ms(start);
}

}  // namespace

std::string params_row(const FamilySpec& spec, const PredictedParams& p) {
  return std::to_string(p.n) + " " + std::to_string(p.k) + " " + std::to_string(p.d) + " " + format_family_spec(spec);
}

unsigned threads_from_env() {
  const char* value = std::getenv("EMBEDKIT_THREADS");
  if (value == nullptr || *value == '\0') return 1;
  char* end = nullptr;
  const long n = std::strtol(value, &end, 10);
  if (*end != '\0' || n < 1 || n > 1024) throw ValidationError(std::string("EMBEDKIT_THREADS must be 1..1024, got '") + value + "'");
  return static_cast<unsigned>(n);
}

RunReport cmd_generate(const std::string& spec_text, const std::string& out_path, const CommandOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "generate";
  report.input = spec_text;

  const FamilySpec spec = parse_family_spec(spec_text);
  report.predicted = predicted_params(spec);  // validates

  std::optional<SurfaceMap> map;
  Check faces{"face_sequences", CheckStatus::Skipped, ""};
  switch (spec.family) {
    case Family::ClassI_K4r1: {
      map = trace_faces(scheme_k4r1(spec.r));
      faces = face_sequence_check(*map);
      break;
    }
    case Family::ClassII_K4s: {
      K4sScheme ks = scheme_k4s(4 * spec.s);
      map = std::move(ks.map);
      faces = face_sequence_check(*map);
      if (ks.orderings_tried > 1) report.notes.push_back("involution orderings tried: " + std::to_string(ks.orderings_tried));
      break;
    }
    case Family::ClassIII_Krs: {
      if (spec.r == 4 && spec.s == 4) {
        const auto found = search_self_dual_bipartite(4, 4, {options.budget, options.threads});
        report.notes.push_back("rotation systems examined: " + std::to_string(found.examined));
        if (found.status != SearchStatus::Found) {
          report.exit_code = kBudgetExhausted;
          report.notes.push_back("search budget exhausted before a self-dual map was found");
          finish(report, start);
          return report;
        }
        map = *found.map;
        faces.detail = "no closed-form face pattern for K_{r,s}";
        break;
      }
      [[fallthrough]];
    }
    case Family::ClassIV_Krsss:
      report.exit_code = kPredictionOnly;
      report.notes.push_back("prediction only: no explicit construction for " + format_family_spec(spec));
      finish(report, start);
      return report;
  }

  report.checks.push_back(faces);
  analyze_map(*map, report, options);
  compare_with_prediction(report, *report.predicted);
  if (!out_path.empty()) {
    write_rotation_file(*map->rotation(), out_path);
    report.notes.push_back("wrote " + out_path);
  }
  finish(report, start);
  return report;
}

RunReport cmd_verify(const std::string& map_path, const CommandOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "verify";
  report.input = map_path;

  const SurfaceMap map = trace_faces(read_rotation_file(map_path));
  report.add_check("genus", CheckStatus::Pass, "chi=" + std::to_string(map.euler_characteristic()));
  report.checks.push_back(face_sequence_check(map));
  analyze_map(map, report, options);
  finish(report, start);
  return report;
}

RunReport cmd_code(const std::string& map_path, const std::string& prefix, const CommandOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "code";
  report.input = map_path;
  if (prefix.empty()) throw ValidationError("code requires --out <prefix>");

  const SurfaceMap map = trace_faces(read_rotation_file(map_path));
  const auto code = analyze_map(map, report, options);
  if (code) {
    write_matrix_file(code->h_x, prefix + ".hx");
    write_matrix_file(code->h_z, prefix + ".hz");
    std::ofstream(prefix + ".css", std::ios::binary) << format_params_line(*code) << "\n";
    report.notes.push_back("wrote " + prefix + ".hx " + prefix + ".hz " + prefix + ".css");
  }
  finish(report, start);
  return report;
}

RunReport cmd_distance(const std::string& hx_path, const std::string& hz_path, const CommandOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "distance";
  report.input = hx_path + " " + hz_path;
  if (options.cap < 1) throw ValidationError("distance requires --cap >= 1");

  BinaryMatrix hx = read_matrix_file(hx_path);
  BinaryMatrix hz = read_matrix_file(hz_path);
  CssCode code;
  try {
    code = make_css(std::move(hx), std::move(hz));
    report.add_check("orthogonality", CheckStatus::Pass);
  } catch (const InternalError& e) {
    report.add_check("orthogonality", CheckStatus::Fail, e.what());
    finish(report, start);
    return report;
  }
  report.code = CodeStats{code.n, code.k, std::nullopt, options.cap};
  if (code.k == 0) {
    report.add_check("logical_operators", CheckStatus::Fail, "no logical operators (k=0)");
    finish(report, start);
    return report;
  }
  const DistanceResult dr = min_distance(code, {options.cap, options.threads});
  report.code->d = dr.distance;
  if (dr.distance) {
    report.notes.push_back(std::string("witness ") + dr.witness_type + ": " + dr.witness.to_string());
  } else {
    report.exit_code = kBudgetExhausted;
    report.notes.push_back("no logical operator of weight <= " + std::to_string(options.cap));
  }
  finish(report, start);
  return report;
}

RunReport cmd_params(const std::string& spec_text) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "params";
  report.input = spec_text;
  const FamilySpec spec = parse_family_spec(spec_text);
  report.predicted = predicted_params(spec);
  report.notes.push_back(params_row(spec, *report.predicted));
  finish(report, start);
  return report;
}

RunReport cmd_search(int r, int s, const std::string& out_path, const CommandOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.command = "search";
  report.input = "K_{" + std::to_string(r) + "," + std::to_string(s) + "}";

  const auto found = search_self_dual_bipartite(r, s, {options.budget, options.threads});
  switch (found.status) {
    case SearchStatus::Nonexistent:
      throw NonexistenceError("K_{" + std::to_string(r) + "," + std::to_string(s) +
                              "} has no orientable self-dual embedding");
    case SearchStatus::BudgetExhausted:
      report.exit_code = kBudgetExhausted;
      report.notes.push_back("budget exhausted after " + std::to_string(found.examined) + " rotation systems");
      finish(report, start);
      return report;
    case SearchStatus::Found:
      break;
  }
  report.notes.push_back("rotation systems examined: " + std::to_string(found.examined));
  if (r % 4 == 0 && s % 4 == 0) report.predicted = predicted_params({Family::ClassIII_Krs, r, s});
  analyze_map(*found.map, report, options);
  if (report.predicted) compare_with_prediction(report, *report.predicted);
  if (!out_path.empty()) {
    write_rotation_file(*found.map->rotation(), out_path);
    report.notes.push_back("wrote " + out_path);
  }
  finish(report, start);
  return report;
}

}  // namespace embedkit::cli
