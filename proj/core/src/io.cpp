// Copyright 2026 The stablemesh Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stablemesh/io.h"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "stablemesh/error.h"

namespace stablemesh::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Iterates lines with 1-based numbers, stripping '#' comments.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    while (pos_ < text_.size()) {
      auto end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++number_;
      const auto hash = raw.find('#');
      if (hash != std::string_view::npos) raw = raw.substr(0, hash);
      raw = trim(raw);
      if (!raw.empty()) {
        line = raw;
        return true;
      }
    }
    return false;
  }
  long number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  long number_ = 0;
};

[[noreturn]] void fail(long line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what, line);
}

double to_double(std::string_view token, long line) {
  // strtod handles the full float grammar; from_chars for double is missing
  // on some standard libraries still in use.
  const std::string s(token);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) fail(line, "bad number '" + s + "'");
  if (!std::isfinite(v)) fail(line, "non-finite value '" + s + "'");
  return v;
}

long to_long(std::string_view token, long line) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    fail(line, "bad integer '" + std::string(token) + "'");
  }
  return v;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TriangleMesh parse_off_unchecked(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) fail(reader.number(), "empty input");

  // The counts may share the header line ("OFF 4 4 6").
  std::vector<std::string_view> tokens = split(line);
  if (tokens.empty() || tokens[0] != "OFF") fail(reader.number(), "expected 'OFF' header");
  tokens.erase(tokens.begin());
  if (tokens.empty()) {
    if (!reader.next(line)) fail(reader.number(), "missing counts line");
    tokens = split(line);
  }
  if (tokens.size() < 2) fail(reader.number(), "counts line needs 'V F [E]'");
  const long nv = to_long(tokens[0], reader.number());
  const long nf = to_long(tokens[1], reader.number());
  if (nv < 0 || nf < 0) fail(reader.number(), "negative element count");

  std::vector<Vec3> positions;
  positions.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!reader.next(line)) fail(reader.number(), "unexpected end of vertex list");
    tokens = split(line);
    if (tokens.size() < 3) fail(reader.number(), "vertex line needs 3 coordinates");
    positions.push_back({to_double(tokens[0], reader.number()),
                         to_double(tokens[1], reader.number()),
                         to_double(tokens[2], reader.number())});
  }

  std::vector<Triangle> triangles;
  triangles.reserve(nf);
  for (long i = 0; i < nf; ++i) {
    if (!reader.next(line)) fail(reader.number(), "unexpected end of face list");
    tokens = split(line);
    if (tokens.empty() || to_long(tokens[0], reader.number()) != 3) {
      fail(reader.number(), "only triangular faces are supported");
    }
    if (tokens.size() < 4) fail(reader.number(), "face line needs 3 indices");
    Triangle t;
    for (int k = 0; k < 3; ++k) {
      const long idx = to_long(tokens[1 + k], reader.number());
      if (idx < 0 || idx >= nv) fail(reader.number(), "vertex index out of range");
      t[k] = static_cast<int>(idx);
    }
    triangles.push_back(t);
  }
  return TriangleMesh(std::move(positions), std::move(triangles));
}

TriangleMesh parse_off(std::string_view text) {
  TriangleMesh mesh = parse_off_unchecked(text);
  validate(mesh);
  return mesh;
}

std::string write_off(const TriangleMesh& mesh) {
  auto [positions, triangles] = mesh.compact();
  std::string out = "OFF\n";
  out += std::to_string(positions.size()) + " " + std::to_string(triangles.size()) + " 0\n";
  for (const Vec3& p : positions) {
    out += format_double(p.x) + " " + format_double(p.y) + " " + format_double(p.z) + "\n";
  }
  for (const Triangle& t : triangles) {
    out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) +
           "\n";
  }
  return out;
}

TriangleMesh parse_obj(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  std::vector<Vec3> positions;
  std::vector<Triangle> triangles;
  while (reader.next(line)) {
    std::vector<std::string_view> tokens = split(line);
    if (tokens[0] == "v") {
      if (tokens.size() < 4) fail(reader.number(), "vertex line needs 3 coordinates");
      positions.push_back({to_double(tokens[1], reader.number()),
                           to_double(tokens[2], reader.number()),
                           to_double(tokens[3], reader.number())});
    } else if (tokens[0] == "f") {
      if (tokens.size() != 4) fail(reader.number(), "only triangular faces are supported");
      Triangle t;
      for (int k = 0; k < 3; ++k) {
        std::string_view tok = tokens[1 + k];
        tok = tok.substr(0, tok.find('/'));
        long idx = to_long(tok, reader.number());
        idx = idx < 0 ? static_cast<long>(positions.size()) + idx : idx - 1;
        if (idx < 0 || idx >= static_cast<long>(positions.size())) {
          fail(reader.number(), "vertex index out of range");
        }
        t[k] = static_cast<int>(idx);
      }
      triangles.push_back(t);
    }
  }
  TriangleMesh mesh(std::move(positions), std::move(triangles));
  validate(mesh);
  return mesh;
}

std::vector<Atom> parse_atoms(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  std::vector<Atom> atoms;
  while (reader.next(line)) {
    const std::vector<std::string_view> tokens = split(line);
    if (tokens.size() != 5) {
      fail(reader.number(),
           "atom record needs 5 fields (x y z q R_vdw), got " + std::to_string(tokens.size()));
    }
    Atom a;
    a.center = {to_double(tokens[0], reader.number()), to_double(tokens[1], reader.number()),
                to_double(tokens[2], reader.number())};
    a.charge = to_double(tokens[3], reader.number());
    a.vdw_radius = to_double(tokens[4], reader.number());
    atoms.push_back(a);
  }
  return atoms;
}

std::string write_atoms(const std::vector<Atom>& atoms) {
  std::string out = "# x y z q R_vdw\n";
  for (const Atom& a : atoms) {
    out += format_double(a.center.x) + " " + format_double(a.center.y) + " " +
           format_double(a.center.z) + " " + format_double(a.charge) + " " +
           format_double(a.vdw_radius) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
}

TriangleMesh load_mesh(const std::string& path) {
  const std::string text = read_file(path);
  const bool obj = path.size() >= 4 && (path.ends_with(".obj") || path.ends_with(".OBJ"));
  return obj ? parse_obj(text) : parse_off(text);
}

std::string checksum(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace stablemesh::io
