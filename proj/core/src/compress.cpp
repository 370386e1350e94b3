#include "twolevel/compress.hpp"

#include <algorithm>
#include <sstream>

#include "twolevel/errors.hpp"
#include "twolevel/lattice.hpp"
#include "twolevel/linalg.hpp"

namespace tl {
namespace {

IntVector to_int_vector(const IntPoint& v) {
  IntVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

RatVector to_rat_vector(const IntPoint& v) {
  RatVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntPoint to_point(std::span<const Rat> v) {
  IntPoint out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.get_den() != 1 || !x.get_num().fits_slong_p()) throw Error(ErrorCode::NonBinary, "vector is not a small integer vector");
    out.push_back(x.get_num().get_si());
  }
  return out;
}

IntLatticeBasis lattice_of(std::size_t d, const std::vector<IntPoint>& gens) {
  std::vector<IntVector> rows;
  for (const auto& g : gens) rows.push_back(to_int_vector(g));
  return IntLatticeBasis::generated_by(d, rows);
}

}  // namespace

GeneratorSet select_generators(std::vector<IntPoint> b) {
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  if (b.empty()) throw Error(ErrorCode::NotSpanning, "empty vector set");
  GeneratorSet g;
  g.d = b.front().size();
  for (const auto& v : b)
    if (v.size() != g.d) throw Error(ErrorCode::DimensionMismatch, "generator dimension");

  SpanBuilder span(g.d);
  for (const auto& v : b)
    if (span.add(to_rat_vector(v))) g.gens.push_back(v);
  if (g.gens.size() != g.d) throw Error(ErrorCode::NotSpanning, "vectors do not span R^d");
  g.determinants.push_back(lattice_determinant(lattice_of(g.d, g.gens)));

  for (const auto& v : b) {
    if (lattice_member(lattice_of(g.d, g.gens), to_int_vector(v))) continue;
    g.gens.push_back(v);
    g.determinants.push_back(lattice_determinant(lattice_of(g.d, g.gens)));
  }
  return g;
}

IntPoint zeta(const RatVector& a, const GeneratorSet& g) {
  if (a.size() != g.d) throw Error(ErrorCode::DimensionMismatch, "zeta: vector dimension");
  IntPoint out;
  out.reserve(g.gens.size());
  for (const auto& b : g.gens) {
    const Rat p = dot(a, to_rat_vector(b));
    if (p == 0) {
      out.push_back(0);
    } else if (p == 1) {
      out.push_back(1);
    } else {
      throw Error(ErrorCode::NonBinaryProduct, "inner product with a generator outside {0,1}");
    }
  }
  return out;
}

IntPoint phi(const IntPoint& b, const GeneratorSet& g) {
  const std::size_t d = g.d;
  const std::size_t k = g.gens.size();
  if (b.size() != d) throw Error(ErrorCode::DimensionMismatch, "phi: vector dimension");
  for (std::size_t i = 0; i < k; ++i) {
    if (g.gens[i] == b) {
      IntPoint e(k, 0);
      e[i] = 1;
      return e;
    }
  }

  RatMatrix basis(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t r = 0; r < d; ++r) basis(r, i) = static_cast<long>(g.gens[i][r]);
  const RatVector target = to_rat_vector(b);
  if (auto lambda = solve(basis, target); lambda && is_integral(*lambda)) {
    IntPoint out = to_point(*lambda);
    out.resize(k, 0);
    return out;
  }

  // b = y H = y U_top G, with U H = U G the Hermite form of the generator rows.
  IntMatrix gm(k, d);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < d; ++c) gm(i, c) = static_cast<long>(g.gens[i][c]);
  const HermiteForm form = hnf(gm);
  const std::size_t r = hnf_pivots(form.h).size();
  std::vector<IntVector> top;
  for (std::size_t i = 0; i < r; ++i) top.push_back(form.h.row(i));
  const auto y = lattice_coordinates(IntLatticeBasis(d, top), to_int_vector(b));
  if (!y) throw Error(ErrorCode::NotInLattice, "vector is not in the generator lattice");
  RatVector lambda(k, Rat(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) lambda[j] += Rat((*y)[i] * form.u(i, j));
  return to_point(lambda);
}

PointSet compressed_points(const GeneratorSet& g, const std::vector<IntPoint>& b) {
  std::vector<IntPoint> images;
  images.reserve(b.size());
  for (const auto& v : b) images.push_back(phi(v, g));
  return face_points(g.gens.size(), images);
}

CompressedConfig compress(const Configuration& cfg) {
  if (!cfg.is_maximal()) throw Error(ErrorCode::InvalidArgument, "compression needs a maximal configuration");
  const bool binary = std::all_of(cfg.b().begin(), cfg.b().end(), [](const auto& v) { return is_binary(v); });
  if (!binary) return compress(normalize_to_binary(cfg, Side::B).config);

  std::vector<IntPoint> b;
  for (const auto& v : cfg.b()) b.push_back(to_point(v));
  CompressedConfig cc;
  cc.gens = select_generators(b);
  std::vector<IntPoint> images;
  for (const auto& v : b) images.push_back(phi(v, cc.gens));
  cc.cert = certificate_encode_exposed(cc.gens.gens.size(), images);
  return cc;
}

Configuration decompress(const CompressedConfig& cc) {
  const std::size_t d = cc.gens.d;
  const std::size_t k = cc.gens.gens.size();
  if (cc.cert.d != k) throw Error(ErrorCode::DimensionMismatch, "certificate dimension differs from generator count");
  RatMatrix g(k, d);
  for (std::size_t i = 0; i < k; ++i) {
    if (cc.gens.gens[i].size() != d) throw Error(ErrorCode::DimensionMismatch, "generator dimension");
    for (std::size_t c = 0; c < d; ++c) g(i, c) = static_cast<long>(cc.gens.gens[i][c]);
  }
  std::vector<RatVector> a;
  for (const auto& image : certificate_decode(cc.cert)) {
    if (auto v = solve(g, to_rat_vector(image))) a.push_back(std::move(*v));
  }
  if (a.empty()) throw Error(ErrorCode::EmptyDecode, "no decoded point gives a consistent system");
  if (!spans(a, d)) throw Error(ErrorCode::EmptyDecode, "decoded inequality side does not span");
  VectorSet b = closure(a);
  return Configuration(d, std::move(a), std::move(b));
}

std::string serialize_weighted_graph(const CompressedConfig& cc) {
  const std::size_t k = cc.gens.gens.size();
  const std::size_t d = cc.gens.d;
  std::ostringstream out;
  out << k << " " << d << "\n";
  for (const auto& g : cc.gens.gens) {
    for (auto x : g) out << x;
    out << "\n";
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) out << (j > i ? " " : "") << cc.cert.s[i * k + j];
    out << "\n";
  }
  for (std::size_t i = 0; i < k; ++i) out << (i ? " " : "") << cc.cert.s[k * k + i];
  out << "\n";
  return out.str();
}

namespace {

std::vector<long long> read_integers(const std::string& line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos == line.size()) break;
    const std::size_t start = pos;
    if (line[pos] == '-') ++pos;
    while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
    if (pos == start || (pos == start + 1 && line[start] == '-') ||
        (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')) {
      throw ParseError("expected an integer", line_no, pos + 1);
    }
    out.push_back(std::stoll(line.substr(start, pos - start)));
  }
  return out;
}

}  // namespace

CompressedConfig parse_weighted_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> std::string& {
    if (!std::getline(in, line)) throw ParseError("unexpected end of input", line_no + 1, 1);
    ++line_no;
    return line;
  };

  const auto head = read_integers(next(), line_no);
  if (head.size() != 2 || head[0] <= 0 || head[1] <= 0) throw ParseError("header must be `k d` with k, d >= 1", 1, 1);
  const auto k = static_cast<std::size_t>(head[0]);
  const auto d = static_cast<std::size_t>(head[1]);

  CompressedConfig cc;
  cc.gens.d = d;
  for (std::size_t i = 0; i < k; ++i) {
    const std::string& row = next();
    std::size_t end = row.find_last_not_of(" \t\r");
    end = end == std::string::npos ? 0 : end + 1;
    if (end != d) throw ParseError("generator row must have " + std::to_string(d) + " bits", line_no, std::min(end, d) + 1);
    IntPoint g(d);
    for (std::size_t c = 0; c < d; ++c) {
      if (row[c] != '0' && row[c] != '1') throw ParseError("generator entries must be 0 or 1", line_no, c + 1);
      g[c] = row[c] - '0';
    }
    cc.gens.gens.push_back(std::move(g));
  }

  cc.cert.d = k;
  cc.cert.s.assign(k * k + k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const auto row = read_integers(next(), line_no);
    if (row.size() != k - i) throw ParseError("weight row " + std::to_string(i + 1) + " must have " + std::to_string(k - i) + " entries", line_no, 1);
    for (std::size_t j = i; j < k; ++j) cc.cert.s[i * k + j] = cc.cert.s[j * k + i] = row[j - i];
  }
  const auto tail = read_integers(next(), line_no);
  if (tail.size() != k) throw ParseError("tail row must have k entries", line_no, 1);
  for (std::size_t i = 0; i < k; ++i) cc.cert.s[k * k + i] = tail[i];
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") != std::string::npos) throw ParseError("unexpected trailing content", line_no, 1);
  }
  return cc;
}

}  // namespace tl
