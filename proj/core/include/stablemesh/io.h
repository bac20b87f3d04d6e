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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stablemesh/gb_energy.h"
#include "stablemesh/mesh.h"

namespace stablemesh::io {

/// Parses triangle-only OFF text and validates the result as a closed
/// manifold. Throws ParseError (index = 1-based line) or the validation error.
TriangleMesh parse_off(std::string_view text);

/// Same parse without the manifold check.
TriangleMesh parse_off_unchecked(std::string_view text);

/// Live geometry with retired slots compacted; coordinates printed with 17
/// significant digits.
std::string write_off(const TriangleMesh& mesh);

/// Read-only OBJ import: `v` and `f` lines, 1-based (or negative relative)
/// indices, `a/b/c` tokens reduced to their position index.
TriangleMesh parse_obj(std::string_view text);

/// One atom per line: `x y z q R_vdw`. Blank lines and lines starting with
/// '#' are skipped.
std::vector<Atom> parse_atoms(std::string_view text);
std::string write_atoms(const std::vector<Atom>& atoms);

/// Throws IoError.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Reads OFF or OBJ depending on the extension (OFF otherwise).
TriangleMesh load_mesh(const std::string& path);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string checksum(std::string_view data);

}  // namespace stablemesh::io
