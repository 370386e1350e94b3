#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "twolevel/binary_matrix.hpp"
#include "twolevel/configuration.hpp"
#include "twolevel/corrcone.hpp"
#include "twolevel/geom.hpp"

namespace tl {

// Header `m n`, then m lines of n characters from {0,1}. Trailing
// whitespace and trailing blank lines are ignored.
BinaryMatrix parse_matrix(const std::string& text);
std::string emit_matrix(const BinaryMatrix& m);

// {"d": 2, "A": [["1/2", "0"], ...], "B": [...]}; entries may also be JSON integers.
Configuration parse_configuration_json(const std::string& text);
std::string configuration_json(const Configuration& cfg);

// {"d": 2, "ineqs": [[a_1, ..., a_d, b], ...], "verts": [...]} for <a, x> >= b.
// "ineqs" may be omitted.
PolytopeDescription parse_polytope_json(const std::string& text);
std::string polytope_json(const PolytopeDescription& p);

// {"d": 2, "ineqs": [[a_1, ..., a_d], ...], "gens": [...]} for <a, x> >= 0.
ConeDescription parse_cone_json(const std::string& text);

// One integer vector of length d per non-blank line.
std::vector<IntPoint> parse_int_vectors(const std::string& text, std::size_t d);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace tl
