#pragma once

// Facet file formats.
//
// Canonical text format (.tet): UTF-8, '#' starts a comment line, every
// other line is four base-10 vertex labels separated by single spaces.
// Canonical output sorts vertices within a line ascending and lines
// lexicographically. JSON mirror: {"facets": [[a,b,c,d], ...]}.

#include <iosfwd>
#include <string>

#include "pm3/complex.hpp"

namespace pm3 {

Complex3 read_tet(std::istream& in);
Complex3 read_tet_file(const std::string& path);
void write_tet(std::ostream& out, const Complex3& K);
void write_tet_file(const std::string& path, const Complex3& K);

Complex3 read_facets_json(std::istream& in);
Complex3 read_facets_json_file(const std::string& path);
std::string facets_json(const Complex3& K);

// dispatches on extension: .json -> JSON mirror, everything else -> text
Complex3 read_complex_file(const std::string& path);

}  // namespace pm3
