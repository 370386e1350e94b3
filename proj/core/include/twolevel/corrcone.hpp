#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tl {

using IntPoint = std::vector<std::int64_t>;
using PointSet = std::vector<IntPoint>;  // sorted, duplicate-free

// z = (x x^T row-major, x) of length d^2 + d.
struct LiftedVector {
  std::size_t d = 0;
  IntPoint z;
};

// Sum of linearly independent lifted points of a face of the correlation cone.
struct FaceCertificate {
  std::size_t d = 0;
  IntPoint s;

  friend bool operator==(const FaceCertificate&, const FaceCertificate&) = default;
};

LiftedVector lift(const IntPoint& x);

// All 2^d points of {0,1}^d in lexicographic order.
PointSet cube_points(std::size_t d);

// {x in {0,1}^d : <b,x>(<b,x> - 1) = 0 for all b}. Empty b gives all of {0,1}^d.
PointSet face_points(std::size_t d, const std::vector<IntPoint>& b_vectors);

// Whether the lifts of `points` are exactly the lifted cube points on some
// face of the cone: exact LP for c with <c, lift(x)> = 0 on the set and >= 1 off it.
bool is_face(std::size_t d, const PointSet& points);

// Throws NotAFace unless is_face(d, points).
FaceCertificate certificate_encode(std::size_t d, const PointSet& points);

// Encoding of face_points(d, b_vectors). The face is exposed by the sum of
// (b b^T, -b), which is checked directly instead of solving an LP.
FaceCertificate certificate_encode_exposed(std::size_t d, const std::vector<IntPoint>& b_vectors);

// Points x whose lift can carry positive weight in a nonnegative
// decomposition of the certificate; the origin is always included.
// Throws NotInCone when there is no decomposition at all.
PointSet certificate_decode(const FaceCertificate& cert);

// Every face of the cone as a point set, found by an LP over all subsets of
// {0,1}^d containing the origin. d <= 3.
std::vector<PointSet> enumerate_faces(std::size_t d, unsigned jobs = 1);

// Independent route: facets from hyperplanes through d(d+1)/2 - 1 independent
// lifts, then closure under intersection. LP-free. d <= 3.
std::vector<PointSet> enumerate_faces_by_facets(std::size_t d);

// Rank of {lift(x) : x in {0,1}^d}.
std::size_t lifted_rank(std::size_t d);

// Text format: line 1 `d`, line 2 the d^2 + d entries separated by spaces.
std::string format_certificate(const FaceCertificate& cert);
FaceCertificate parse_certificate(const std::string& text);

}  // namespace tl
