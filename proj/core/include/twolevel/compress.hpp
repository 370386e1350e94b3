#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twolevel/configuration.hpp"
#include "twolevel/corrcone.hpp"
#include "twolevel/rational.hpp"

namespace tl {

struct GeneratorSet {
  std::size_t d = 0;
  std::vector<IntPoint> gens;
  // Lattice determinant after the first d generators and after each later one.
  std::vector<Int> determinants;
};

// Greedy independent prefix of sorted B, then the first lattice non-member
// of B until the lattice of the generators equals the lattice of B.
GeneratorSet select_generators(std::vector<IntPoint> b);

// (<a, b_1>, ..., <a, b_k>); throws NonBinaryProduct outside {0,1}.
IntPoint zeta(const RatVector& a, const GeneratorSet& g);

// Integer lambda with sum lambda_i b_i = b; generator b_i maps to e_i.
IntPoint phi(const IntPoint& b, const GeneratorSet& g);

struct CompressedConfig {
  GeneratorSet gens;
  FaceCertificate cert;  // dimension k = gens.gens.size()

  friend bool operator==(const CompressedConfig& x, const CompressedConfig& y) {
    return x.gens.d == y.gens.d && x.gens.gens == y.gens.gens && x.cert == y.cert;
  }
};

// {a' in {0,1}^k : <a', phi(b)> in {0,1} for every b}.
PointSet compressed_points(const GeneratorSet& g, const std::vector<IntPoint>& b);

// Needs a maximal configuration. A non-binary B side is normalized first.
CompressedConfig compress(const Configuration& cfg);
Configuration decompress(const CompressedConfig& cc);

// Line 1 `k d`, k generator rows of d bits, k rows of the upper triangle of
// the certificate's k x k block (row i holds columns i..k-1), one tail row.
std::string serialize_weighted_graph(const CompressedConfig& cc);
CompressedConfig parse_weighted_graph(const std::string& text);

}  // namespace tl
