#include "embedkit/rotation_system.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "embedkit/errors.hpp"

namespace embedkit {

RotationSystem::RotationSystem(std::vector<std::vector<Vertex>> rotations) : rotations_(std::move(rotations)) {
  const std::size_t n = rotations_.size();
  if (n == 0) throw ValidationError("rotation system has no vertices");
  position_.assign(n * n, -1);

  std::size_t darts = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& row = rotations_[v];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Vertex u = row[i];
      if (u < 0 || static_cast<std::size_t>(u) >= n)
        throw ValidationError("vertex " + std::to_string(v) + ": neighbor " + std::to_string(u) + " out of range");
      if (static_cast<std::size_t>(u) == v)
        throw ValidationError("vertex " + std::to_string(v) + ": rotation contains the vertex itself");
      int& pos = position_[index_of(static_cast<Vertex>(v), u)];
      if (pos != -1)
        throw ValidationError("vertex " + std::to_string(v) + ": neighbor " + std::to_string(u) + " repeated");
      pos = static_cast<int>(i);
    }
    darts += row.size();
  }

  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : rotations_[v]) {
      if (position_[index_of(u, static_cast<Vertex>(v))] == -1)
        throw ValidationError("vertex " + std::to_string(v) + ": neighbor " + std::to_string(u) +
                              " does not list " + std::to_string(v) + " (asymmetric adjacency)");
    }
  }
  edge_count_ = darts / 2;

  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : rotations_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) throw ValidationError("vertex " + std::to_string(v) + ": graph is disconnected");
  }
}

bool RotationSystem::adjacent(Vertex u, Vertex v) const {
  const auto n = rotations_.size();
  if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) return false;
  return position_[index_of(u, v)] != -1;
}

Vertex RotationSystem::successor(Vertex v, Vertex u) const {
  const int pos = position_.at(index_of(v, u));
  if (pos < 0) throw ValidationError(std::to_string(u) + " is not a neighbor of " + std::to_string(v));
  const auto& row = rotations_[v];
  return row[(static_cast<std::size_t>(pos) + 1) % row.size()];
}

std::vector<std::pair<Vertex, Vertex>> RotationSystem::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  const auto n = static_cast<Vertex>(rotations_.size());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (position_[index_of(u, v)] != -1) out.emplace_back(u, v);
  return out;
}

namespace {

long parse_int(std::string_view token, std::size_t line) {
  if (token.empty()) throw ParseError(line, "expected an integer");
  long value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
    value = value * 10 + (c - '0');
    if (value > 1'000'000) throw ParseError(line, "integer too large");
  }
  return value;
}

std::vector<std::string_view> split_spaces(std::string_view s, std::size_t line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const std::size_t j = s.find(' ', i);
    const std::size_t end = j == std::string_view::npos ? s.size() : j;
    if (end == i) throw ParseError(line, "expected single spaces between entries");
    out.push_back(s.substr(i, end - i));
    i = end == s.size() ? end : end + 1;
    if (end != s.size() && i == s.size()) throw ParseError(line, "trailing space");
  }
  return out;
}

}  // namespace

RotationSystem parse_rotation_system(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError(1, "empty input, expected 'ROT v=<n>'");
  if (!line.starts_with("ROT v=")) throw ParseError(1, "expected header 'ROT v=<n>'");
  const long n = parse_int(std::string_view(line).substr(6), 1);
  if (n < 1) throw ParseError(1, "vertex count must be positive");

  std::vector<std::vector<Vertex>> rotations(static_cast<std::size_t>(n));
  for (long v = 0; v < n; ++v) {
    ++line_no;
    if (!std::getline(in, line)) throw ParseError(line_no, "missing rotation for vertex " + std::to_string(v));
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "expected '<vertex>: <neighbors>'");
    const long label = parse_int(std::string_view(line).substr(0, colon), line_no);
    if (label != v) throw ParseError(line_no, "expected vertex " + std::to_string(v) + ", got " + std::to_string(label));
    std::string_view rest = std::string_view(line).substr(colon + 1);
    if (rest.empty()) continue;
    if (rest.front() != ' ') throw ParseError(line_no, "expected a space after ':'");
    for (auto token : split_spaces(rest.substr(1), line_no))
      rotations[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(parse_int(token, line_no)));
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw ParseError(line_no, "unexpected content after the last vertex");
  }
  return RotationSystem(std::move(rotations));
}

RotationSystem parse_rotation_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_rotation_system(in);
}

RotationSystem read_rotation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_rotation_system(in);
}

std::string format_rotation_system(const RotationSystem& rot) {
  std::string out = "ROT v=" + std::to_string(rot.vertex_count()) + "\n";
  for (std::size_t v = 0; v < rot.vertex_count(); ++v) {
    out += std::to_string(v) + ":";
    for (Vertex u : rot.rotation(static_cast<Vertex>(v))) out += " " + std::to_string(u);
    out += "\n";
  }
  return out;
}

void write_rotation_file(const RotationSystem& rot, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_rotation_system(rot);
}

}  // namespace embedkit
