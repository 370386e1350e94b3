#include "twolevel/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "twolevel/errors.hpp"

namespace tl {
namespace {

using json = nlohmann::json;

std::size_t trimmed_length(const std::string& line) {
  const std::size_t end = line.find_last_not_of(" \t\r");
  return end == std::string::npos ? 0 : end + 1;
}

std::size_t parse_count(const std::string& line, std::size_t& pos, std::size_t line_no) {
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  const std::size_t start = pos;
  while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
  if (pos == start) throw ParseError("expected a nonnegative integer", line_no, start + 1);
  if (pos - start > 9) throw ParseError("dimension too large", line_no, start + 1);
  return static_cast<std::size_t>(std::stoul(line.substr(start, pos - start)));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0, 0);
  }
}

Rat rat_of(const json& v) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string", 0, 0);
}

std::vector<RatVector> rat_rows(const json& j, const char* key, std::size_t width) {
  if (!j.contains(key) || !j.at(key).is_array()) throw ParseError(std::string("missing array \"") + key + "\"", 0, 0);
  std::vector<RatVector> out;
  for (const auto& row : j.at(key)) {
    if (!row.is_array()) throw ParseError(std::string("entries of \"") + key + "\" must be arrays", 0, 0);
    RatVector v;
    for (const auto& x : row) v.push_back(rat_of(x));
    if (v.size() != width) {
      throw Error(ErrorCode::DimensionMismatch, std::string("rows of \"") + key + "\" must have length " + std::to_string(width));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t dim_of(const json& j) {
  if (!j.is_object() || !j.contains("d") || !j.at("d").is_number_integer()) throw ParseError("missing integer \"d\"", 0, 0);
  const long d = j.at("d").get<long>();
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  return static_cast<std::size_t>(d);
}

json rat_rows_json(const std::vector<RatVector>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    json row = json::array();
    for (const auto& x : r) row.push_back(format_rat(x));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

BinaryMatrix parse_matrix(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }
  while (!lines.empty() && trimmed_length(lines.back()) == 0) lines.pop_back();
  if (lines.empty()) throw ParseError("missing header `m n`", 1, 1);

  std::size_t pos = 0;
  const std::size_t m = parse_count(lines[0], pos, 1);
  const std::size_t n = parse_count(lines[0], pos, 1);
  if (pos < trimmed_length(lines[0])) throw ParseError("unexpected text after header", 1, pos + 1);
  if (lines.size() - 1 != m) {
    throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(lines.size() - 1), lines.size() + 1, 1);
  }

  BinaryMatrix out(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    const std::string& line = lines[r + 1];
    const std::size_t len = trimmed_length(line);
    for (std::size_t c = 0; c < len; ++c) {
      if (c >= n) throw ParseError("row longer than " + std::to_string(n) + " characters", r + 2, c + 1);
      if (line[c] != '0' && line[c] != '1') {
        throw ParseError(std::string("unexpected character '") + line[c] + "'", r + 2, c + 1);
      }
      out.set(r, c, line[c] == '1');
    }
    if (len < n) throw ParseError("row shorter than " + std::to_string(n) + " characters", r + 2, len + 1);
  }
  return out;
}

std::string emit_matrix(const BinaryMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) out += m.row_string(r) + "\n";
  return out;
}

Configuration parse_configuration_json(const std::string& text) {
  const json j = parse_json(text);
  const std::size_t d = dim_of(j);
  return Configuration(d, rat_rows(j, "A", d), rat_rows(j, "B", d));
}

std::string configuration_json(const Configuration& cfg) {
  nlohmann::ordered_json j;
  j["d"] = cfg.dim();
  j["A"] = rat_rows_json(cfg.a());
  j["B"] = rat_rows_json(cfg.b());
  return j.dump() + "\n";
}

PolytopeDescription parse_polytope_json(const std::string& text) {
  const json j = parse_json(text);
  PolytopeDescription p;
  p.d = dim_of(j);
  if (j.contains("ineqs")) {
    for (auto& row : rat_rows(j, "ineqs", p.d + 1)) {
      Rat rhs = row.back();
      row.pop_back();
      p.ineqs.push_back({std::move(row), std::move(rhs)});
    }
  }
  p.verts = rat_rows(j, "verts", p.d);
  return p;
}

std::string polytope_json(const PolytopeDescription& p) {
  nlohmann::ordered_json j;
  j["d"] = p.d;
  std::vector<RatVector> rows;
  for (const auto& ineq : p.ineqs) {
    RatVector r = ineq.normal;
    r.push_back(ineq.rhs);
    rows.push_back(std::move(r));
  }
  j["ineqs"] = rat_rows_json(rows);
  j["verts"] = rat_rows_json(p.verts);
  return j.dump() + "\n";
}

ConeDescription parse_cone_json(const std::string& text) {
  const json j = parse_json(text);
  ConeDescription k;
  k.d = dim_of(j);
  k.ineqs = rat_rows(j, "ineqs", k.d);
  k.gens = rat_rows(j, "gens", k.d);
  return k;
}

std::vector<IntPoint> parse_int_vectors(const std::string& text, std::size_t d) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<IntPoint> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed_length(line) == 0) continue;
    std::istringstream fields(line);
    std::string tok;
    IntPoint v;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("invalid integer '" + tok + "'", line_no, line.find(tok) + 1);
      }
    }
    if (v.size() != d) throw ParseError("expected " + std::to_string(d) + " integers", line_no, 1);
    out.push_back(std::move(v));
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace tl
