#pragma once

#include <cstddef>
#include <vector>

#include "twolevel/configuration.hpp"
#include "twolevel/rational.hpp"

namespace tl {

// <normal, x> >= rhs; the slack of a point v is <normal, v> - rhs.
struct Inequality {
  RatVector normal;
  Rat rhs;

  friend bool operator==(const Inequality&, const Inequality&) = default;
};

enum class RowKind {
  Facet,     // tight at d affinely independent points
  Trivial,   // 0 >= 0 or 0 >= -1
  NonFacet,  // valid 2-level inequality without a facet witness
};

struct PolytopeDescription {
  std::size_t d = 0;
  std::vector<Inequality> ineqs;
  std::vector<RatVector> verts;
  std::vector<RowKind> kinds;  // filled by complete_maximal_pair, empty otherwise
};

// Homogeneous system: ineqs are rows a with <a, x> >= 0, gens generate the cone.
struct ConeDescription {
  std::size_t d = 0;
  std::vector<RatVector> ineqs;
  std::vector<RatVector> gens;
};

// Slack rows and columns whose submatrix is lower-triangular with unit
// diagonal: S[row_i][col_i] = 1 and S[row_i][col_j] = 0 for j > i.
struct TriangularCore {
  std::vector<std::size_t> row_indices;
  std::vector<std::size_t> col_indices;
};

// Throws NonBinarySlack or NotSpanning when the description is not 2-level
// and full-dimensional.
void validate(const PolytopeDescription& p);
void validate(const ConeDescription& k);

// A' = {(a, b)} and B' = {(v, -1)} plus the origin, in dimension d + 1.
Configuration polytope_to_configuration(const PolytopeDescription& p);
Configuration cone_to_configuration(const ConeDescription& k);

// Cone over P at height -1; the apex 0_{d+1} is kept as a generator.
ConeDescription homogenize(const PolytopeDescription& p);

// Every 2-level inequality (a, b) of conv(verts) and the maximal point set,
// obtained by closing the homogenized vertices twice.
PolytopeDescription complete_maximal_pair(const std::vector<RatVector>& verts);

// Maximal pair of cone(gens): ineqs = closure(gens), gens = closure(ineqs).
ConeDescription complete_maximal_cone(const std::vector<RatVector>& gens);

TriangularCore find_triangular_core(const SlackMatrix& s, std::size_t size);

struct BinaryIntegralConfiguration {
  Configuration config;  // C side binary, D side integral and containing e_1..e_n
  TriangularCore core;
  RatMatrix row_map;     // D = row_map * B', C = row_map^{-T} * A'
  std::vector<std::size_t> a_source;  // config.a()[i] comes from source.a()[a_source[i]]
  std::vector<std::size_t> b_source;
};

BinaryIntegralConfiguration to_binary_integral_configuration(const Configuration& cfg);
BinaryIntegralConfiguration to_binary_integral_configuration(const PolytopeDescription& p);
BinaryIntegralConfiguration to_binary_integral_configuration(const ConeDescription& k);

// Vertex sets of built-in 2-level polytopes.
std::vector<RatVector> cube_vertices(std::size_t d);
std::vector<RatVector> simplex_vertices(std::size_t d);
std::vector<RatVector> cross_polytope_vertices(std::size_t d);

}  // namespace tl
