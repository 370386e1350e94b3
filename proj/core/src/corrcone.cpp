#include "twolevel/corrcone.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twolevel/errors.hpp"
#include "twolevel/linalg.hpp"
#include "twolevel/lp.hpp"
#include "twolevel/parallel.hpp"
#include "twolevel/rational.hpp"

namespace tl {
namespace {

constexpr std::size_t kMaxFaceEnumerationDim = 3;

void check_point(std::size_t d, const IntPoint& x) {
  if (x.size() != d) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  for (auto v : x)
    if (v != 0 && v != 1) throw Error(ErrorCode::NonBinary, "point is not a 0/1 vector");
}

std::int64_t inner(const IntPoint& a, const IntPoint& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Lifts live in the span of the upper-triangular coordinates x_i x_j (i <= j);
// the full vector repeats them, so LPs work on these q = d(d+1)/2 entries.
RatVector reduced_lift(const IntPoint& x) {
  const std::size_t d = x.size();
  RatVector u;
  u.reserve(d * (d + 1) / 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) u.emplace_back(x[i] * x[j]);
  return u;
}

bool is_zero_point(const IntPoint& x) {
  return std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; });
}

PointSet normalize(PointSet points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

// Reduced coordinates of a certificate; nullopt when the vector is not of
// the form (M, x) with M symmetric and diag(M) = x.
std::optional<RatVector> reduced_certificate(const FaceCertificate& cert) {
  const std::size_t d = cert.d;
  if (cert.s.size() != d * d + d) return std::nullopt;
  auto m = [&](std::size_t i, std::size_t j) { return cert.s[i * d + j]; };
  RatVector u;
  for (std::size_t i = 0; i < d; ++i) {
    if (m(i, i) != cert.s[d * d + i]) return std::nullopt;
    for (std::size_t j = i; j < d; ++j) {
      if (m(i, j) != m(j, i)) return std::nullopt;
      u.emplace_back(m(i, j));
    }
  }
  return u;
}

}  // namespace

LiftedVector lift(const IntPoint& x) {
  const std::size_t d = x.size();
  check_point(d, x);
  LiftedVector out{d, IntPoint(d * d + d, 0)};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) out.z[i * d + j] = x[i] * x[j];
    out.z[d * d + i] = x[i];
  }
  return out;
}

PointSet cube_points(std::size_t d) {
  PointSet out;
  out.reserve(std::size_t{1} << d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    IntPoint x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (mask >> (d - 1 - i)) & 1U;
    out.push_back(std::move(x));
  }
  return out;
}

PointSet face_points(std::size_t d, const std::vector<IntPoint>& b_vectors) {
  for (const auto& b : b_vectors)
    if (b.size() != d) throw Error(ErrorCode::DimensionMismatch, "b-vector dimension");
  PointSet out;
  for (auto& x : cube_points(d)) {
    bool ok = true;
    for (const auto& b : b_vectors) {
      const std::int64_t p = inner(b, x);
      if (p * (p - 1) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(std::move(x));
  }
  return out;
}

bool is_face(std::size_t d, const PointSet& points) {
  for (const auto& x : points) check_point(d, x);
  const std::set<IntPoint> in(points.begin(), points.end());
  const PointSet all = cube_points(d);
  const std::size_t q = d * (d + 1) / 2;

  std::vector<IntPoint> inside, outside;
  for (const auto& x : all) (in.count(x) ? inside : outside).push_back(x);
  if (outside.empty()) return true;

  // Variables: c (q free), then one nonnegative surplus per outside point.
  const std::size_t nvars = q + outside.size();
  RatMatrix a(inside.size() + outside.size(), nvars);
  RatVector rhs(a.rows(), Rat(0));
  std::vector<bool> nonneg(nvars, false);
  std::size_t row = 0;
  for (const auto& x : inside) {
    const RatVector u = reduced_lift(x);
    for (std::size_t k = 0; k < q; ++k) a(row, k) = u[k];
    ++row;
  }
  for (std::size_t i = 0; i < outside.size(); ++i) {
    const RatVector u = reduced_lift(outside[i]);
    for (std::size_t k = 0; k < q; ++k) a(row, k) = u[k];
    a(row, q + i) = -1;
    nonneg[q + i] = true;
    rhs[row] = 1;
    ++row;
  }
  return lp_feasible(a, rhs, nonneg).has_value();
}

namespace {

FaceCertificate sum_of_independent_lifts(std::size_t d, const PointSet& points) {
  FaceCertificate cert{d, IntPoint(d * d + d, 0)};
  SpanBuilder span(d * (d + 1) / 2);
  for (const auto& x : normalize(points)) {
    if (is_zero_point(x)) continue;
    if (!span.add(reduced_lift(x))) continue;
    const LiftedVector z = lift(x);
    for (std::size_t k = 0; k < z.z.size(); ++k) cert.s[k] += z.z[k];
  }
  return cert;
}

}  // namespace

FaceCertificate certificate_encode(std::size_t d, const PointSet& points) {
  if (!is_face(d, points)) throw Error(ErrorCode::NotAFace, "point set is not a face of the correlation cone");
  return sum_of_independent_lifts(d, points);
}

FaceCertificate certificate_encode_exposed(std::size_t d, const std::vector<IntPoint>& b_vectors) {
  const PointSet points = face_points(d, b_vectors);
  // sum_b <b,x>(<b,x> - 1) is zero exactly on `points` and >= 2 elsewhere.
  for (const auto& x : cube_points(d)) {
    std::int64_t value = 0;
    for (const auto& b : b_vectors) {
      const std::int64_t p = inner(b, x);
      value += p * (p - 1);
    }
    const bool inside = std::binary_search(points.begin(), points.end(), x);
    if (inside != (value == 0) || value < 0) {
      throw Error(ErrorCode::NotAFace, "exposing functional check failed");
    }
  }
  return sum_of_independent_lifts(d, points);
}

PointSet certificate_decode(const FaceCertificate& cert) {
  const std::size_t d = cert.d;
  const auto target = reduced_certificate(cert);
  if (!target) throw Error(ErrorCode::NotInCone, "certificate is not of the form (M, diag M)");
  PointSet out{IntPoint(d, 0)};
  if (is_zero(*target)) return out;
  for (auto v : cert.s)
    if (v < 0) throw Error(ErrorCode::NotInCone, "negative certificate entry");

  // Generators whose support fits inside the certificate's support.
  std::vector<IntPoint> gens;
  std::vector<RatVector> lifts;
  for (const auto& x : cube_points(d)) {
    if (is_zero_point(x)) continue;
    RatVector u = reduced_lift(x);
    bool fits = true;
    for (std::size_t k = 0; k < u.size() && fits; ++k) fits = !(u[k] != 0 && (*target)[k] == 0);
    if (!fits) continue;
    gens.push_back(x);
    lifts.push_back(std::move(u));
  }
  const std::size_t q = target->size();
  const std::size_t g = gens.size();

  {
    RatMatrix a(q, g);
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < q; ++k) a(k, j) = lifts[j][k];
    if (!lp_feasible(a, *target, std::vector<bool>(g, true))) {
      throw Error(ErrorCode::NotInCone, "certificate has no nonnegative decomposition");
    }
  }

  // Homogeneous test for x: mu >= 0, t >= 0, sum mu_g lift(g) - t s = 0,
  // mu_x - w = 1, w >= 0. Any solution has t > 0 because the cone is pointed,
  // and lambda = mu / t gives lambda_x > 0.
  std::vector<bool> positive(g, false);
  for (std::size_t x = 0; x < g; ++x) {
    if (positive[x]) continue;
    const std::size_t nvars = g + 2;  // mu, t, w
    RatMatrix a(q + 1, nvars);
    RatVector rhs(q + 1, Rat(0));
    for (std::size_t j = 0; j < g; ++j)
      for (std::size_t k = 0; k < q; ++k) a(k, j) = lifts[j][k];
    for (std::size_t k = 0; k < q; ++k) a(k, g) = -(*target)[k];
    a(q, x) = 1;
    a(q, g + 1) = -1;
    rhs[q] = 1;
    const auto sol = lp_feasible(a, rhs, std::vector<bool>(nvars, true));
    if (!sol) continue;
    for (std::size_t j = 0; j < g; ++j)
      if ((*sol)[j] > 0) positive[j] = true;
    positive[x] = true;
  }
  for (std::size_t j = 0; j < g; ++j)
    if (positive[j]) out.push_back(gens[j]);
  return normalize(std::move(out));
}

std::vector<PointSet> enumerate_faces(std::size_t d, unsigned jobs) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  if (d > kMaxFaceEnumerationDim) throw Error(ErrorCode::DimensionTooLarge, "face enumeration supports d <= 3");
  const PointSet all = cube_points(d);
  // all[0] is the origin; every face contains it.
  const std::size_t others = all.size() - 1;
  const std::uint64_t total = std::uint64_t{1} << others;

  auto chunks = parallel_map_chunks(total, jobs, [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<PointSet> found;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      PointSet candidate{all[0]};
      for (std::size_t i = 0; i < others; ++i)
        if ((mask >> i) & 1U) candidate.push_back(all[i + 1]);
      candidate = normalize(std::move(candidate));
      if (is_face(d, candidate)) found.push_back(std::move(candidate));
    }
    return found;
  });
  std::set<PointSet> faces;
  for (auto& chunk : chunks)
    for (auto& f : chunk) faces.insert(std::move(f));
  return {faces.begin(), faces.end()};
}

std::vector<PointSet> enumerate_faces_by_facets(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  if (d > kMaxFaceEnumerationDim) throw Error(ErrorCode::DimensionTooLarge, "face enumeration supports d <= 3");
  const PointSet all = cube_points(d);
  const std::size_t q = d * (d + 1) / 2;
  std::vector<IntPoint> gens;
  std::vector<RatVector> lifts;
  for (const auto& x : all) {
    if (is_zero_point(x)) continue;
    gens.push_back(x);
    lifts.push_back(reduced_lift(x));
  }

  std::set<PointSet> facets;
  if (q == 1) {
    // The cone is a ray; its only proper face is the origin.
    facets.insert(PointSet{IntPoint(d, 0)});
  } else {
    const std::size_t pick = q - 1;
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    for (;;) {
      RatMatrix m(pick, q);
      for (std::size_t r = 0; r < pick; ++r)
        for (std::size_t c = 0; c < q; ++c) m(r, c) = lifts[idx[r]][c];
      if (rank(m) == pick) {
        // Normal vector: the one-dimensional null space, via cofactors.
        RatVector normal(q);
        for (std::size_t c = 0; c < q; ++c) {
          RatMatrix minor(pick, pick);
          for (std::size_t r = 0; r < pick; ++r)
            for (std::size_t cc = 0, k = 0; cc < q; ++cc)
              if (cc != c) minor(r, k++) = m(r, cc);
          normal[c] = determinant(minor) * ((c % 2) ? -1 : 1);
        }
        bool pos = false, neg = false;
        PointSet zero_set{IntPoint(d, 0)};
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const Rat v = dot(normal, lifts[j]);
          if (v > 0) pos = true;
          if (v < 0) neg = true;
          if (v == 0) zero_set.push_back(gens[j]);
        }
        if (!(pos && neg)) facets.insert(normalize(std::move(zero_set)));
      }
      std::size_t i = pick;
      while (i > 0 && idx[i - 1] == gens.size() - pick + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  std::set<PointSet> faces(facets.begin(), facets.end());
  faces.insert(all);
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<PointSet> current(faces.begin(), faces.end());
    for (const auto& f : current)
      for (const auto& facet : facets) {
        PointSet meet;
        std::set_intersection(f.begin(), f.end(), facet.begin(), facet.end(), std::back_inserter(meet));
        if (faces.insert(std::move(meet)).second) grew = true;
      }
  }
  return {faces.begin(), faces.end()};
}

std::size_t lifted_rank(std::size_t d) {
  std::vector<RatVector> rows;
  for (const auto& x : cube_points(d)) {
    const LiftedVector z = lift(x);
    RatVector r;
    for (auto v : z.z) r.emplace_back(v);
    rows.push_back(std::move(r));
  }
  return rank(RatMatrix::from_rows(rows, d * d + d));
}

std::string format_certificate(const FaceCertificate& cert) {
  std::ostringstream out;
  out << cert.d << "\n";
  for (std::size_t i = 0; i < cert.s.size(); ++i) out << (i ? " " : "") << cert.s[i];
  out << "\n";
  return out.str();
}

FaceCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing dimension line", 1, 1);
  std::istringstream head(line);
  long long d = 0;
  if (!(head >> d) || d <= 0) throw ParseError("dimension must be a positive integer", 1, 1);
  std::string rest;
  if (head >> rest) throw ParseError("unexpected text after dimension", 1, 1);
  FaceCertificate cert{static_cast<std::size_t>(d), {}};
  if (!std::getline(in, line)) throw ParseError("missing certificate entries", 2, 1);
  std::istringstream body(line);
  std::string tok;
  while (body >> tok) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      cert.s.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("invalid integer '" + tok + "'", 2, 1);
    }
  }
  if (cert.s.size() != cert.d * cert.d + cert.d) {
    throw ParseError("expected d^2 + d = " + std::to_string(cert.d * cert.d + cert.d) + " entries", 2, 1);
  }
  return cert;
}

}  // namespace tl
