#include "tlc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "twolevel/canon.hpp"
#include "twolevel/compress.hpp"
#include "twolevel/configuration.hpp"
#include "twolevel/corrcone.hpp"
#include "twolevel/enumerate.hpp"
#include "twolevel/errors.hpp"
#include "twolevel/geom.hpp"
#include "twolevel/io.hpp"
#include "twolevel/stabset.hpp"
#include "twolevel/store.hpp"

namespace tlc {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

enum class Exit { Ok = 0, Usage = 1, Parse = 2, Domain = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string store;
  unsigned jobs = 1;
  std::string format = "text";

  std::string input;
  std::size_t dim = 0;
  std::size_t nodes = 0;
  std::size_t max_seed_size = 0;
  std::string b_vectors;
  bool resume = false;
  bool maximal = false;
};

bool as_json(const Options& o) { return o.format == "json"; }

std::string read_input(const std::string& path) {
  if (!fs::is_regular_file(path)) throw tl::ParseError("cannot read input file " + path, 0, 0);
  return tl::read_text_file(path);
}

std::optional<tl::Store> open_store(const Options& o) {
  if (o.store.empty()) return std::nullopt;
  return tl::Store(o.store);
}

json matrix_json(const tl::BinaryMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_string(r));
  return rows;
}

std::string point_string(const tl::IntPoint& p) {
  std::string s;
  for (auto x : p) s += std::to_string(x);
  return s;
}

std::string points_string(const tl::PointSet& points) {
  std::string s = "{";
  for (std::size_t i = 0; i < points.size(); ++i) s += (i ? "," : "") + point_string(points[i]);
  return s + "}";
}

json points_json(const tl::PointSet& points) {
  json arr = json::array();
  for (const auto& p : points) arr.push_back(point_string(p));
  return arr;
}

json config_as_json(const tl::Configuration& cfg) { return json::parse(tl::configuration_json(cfg)); }

std::string cert_line(const tl::FaceCertificate& c) {
  std::string s;
  for (std::size_t i = 0; i < c.s.size(); ++i) s += (i ? " " : "") + std::to_string(c.s[i]);
  return s;
}

void cmd_check(const Options& o, std::ostream& out) {
  const tl::BinaryMatrix m = tl::parse_matrix(read_input(o.input));
  const tl::MdVerdict v = tl::classify_in_Md(m);
  if (as_json(o)) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["rank"] = v.rank;
    j["member"] = v.member;
    j["maximal"] = v.maximal;
    out << j.dump() << "\n";
    return;
  }
  out << "member of M_" << v.rank << ": " << (v.member ? "yes" : "no");
  if (v.member) out << "; maximal: " << (v.maximal ? "yes" : "no");
  out << "\n";
}

void cmd_complete(const Options& o, std::ostream& out) {
  const std::string text = read_input(o.input);
  const auto doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw tl::ParseError("invalid JSON", 0, 0);
  if (doc.contains("verts")) {
    const tl::PolytopeDescription p = tl::parse_polytope_json(text);
    tl::validate(p);
    const tl::PolytopeDescription full = tl::complete_maximal_pair(p.verts);
    const tl::SlackMatrix s = tl::slack_matrix(tl::polytope_to_configuration(full));
    if (as_json(o)) {
      json j = json::parse(tl::polytope_json(full));
      json kinds = json::array();
      for (auto k : full.kinds)
        kinds.push_back(k == tl::RowKind::Facet ? "facet" : k == tl::RowKind::Trivial ? "trivial" : "non_facet");
      j["kinds"] = kinds;
      j["slack"] = matrix_json(s.matrix);
      out << j.dump() << "\n";
    } else {
      out << tl::polytope_json(full) << tl::emit_matrix(s.matrix);
    }
    return;
  }
  const tl::Configuration cfg = tl::parse_configuration_json(text);
  const tl::Configuration full = tl::maximal_completion(cfg.b());
  const tl::SlackMatrix s = tl::slack_matrix(full);
  if (as_json(o)) {
    json j = config_as_json(full);
    j["slack"] = matrix_json(s.matrix);
    out << j.dump() << "\n";
  } else {
    out << tl::configuration_json(full) << tl::emit_matrix(s.matrix);
  }
}

void cmd_canon(const Options& o, std::ostream& out) {
  const tl::BinaryMatrix m = tl::parse_matrix(read_input(o.input));
  const tl::CanonicalForm f = tl::canonical_form(m);
  if (auto store = open_store(o)) {
    const tl::MdVerdict v = tl::classify_in_Md(m);
    if (v.maximal) store->put_class(v.rank, f);
  }
  if (as_json(o)) {
    json j;
    j["matrix"] = matrix_json(f.matrix());
    j["sha256"] = f.sha256();
    out << j.dump() << "\n";
  } else {
    out << tl::emit_matrix(f.matrix()) << "sha256 " << f.sha256() << "\n";
  }
}

void cmd_enum(const Options& o, std::ostream& out) {
  auto store = open_store(o);
  tl::EnumerationOptions eo;
  eo.jobs = o.jobs;
  eo.max_seed_size = o.max_seed_size;
  eo.store = store ? &*store : nullptr;
  eo.resume = o.resume;
  const tl::EnumerationResult r = tl::enumerate_maximal(o.dim, eo);
  const tl::ReportRow row = tl::report_row(r);
  if (as_json(o)) {
    json j;
    j["d"] = r.d;
    j["classes"] = row.classes;
    j["up_to_transpose"] = row.up_to_transpose;
    j["complete"] = r.complete;
    j["seeds"] = r.stats.seeds;
    j["spanning_seeds"] = r.stats.spanning;
    j["degenerate_seeds"] = r.stats.degenerate;
    j["distinct_configurations"] = r.stats.distinct_configs;
    json sha = json::array();
    for (const auto& f : r.classes) sha.push_back(f.sha256());
    j["sha256"] = sha;
    out << j.dump() << "\n";
    return;
  }
  out << "classes: " << row.classes << "\n";
  out << "up to transpose: " << row.up_to_transpose << "\n";
  out << "seeds: " << r.stats.seeds << " (spanning " << r.stats.spanning << ", degenerate " << r.stats.degenerate
      << ")\n";
  out << "distinct configurations: " << r.stats.distinct_configs << "\n";
  if (!r.complete) out << "partial: seeds capped at " << o.max_seed_size << " vectors\n";
}

void cmd_compress(const Options& o, std::ostream& out) {
  const tl::Configuration cfg = tl::parse_configuration_json(read_input(o.input));
  const tl::CompressedConfig cc = tl::compress(cfg);
  const std::string graph = tl::serialize_weighted_graph(cc);
  if (auto store = open_store(o)) {
    const std::vector<std::uint8_t> bytes(graph.begin(), graph.end());
    store->put(fs::path("compressed") / (tl::sha256_hex(bytes) + ".graph"), graph);
  }
  if (as_json(o)) {
    json j;
    j["k"] = cc.gens.gens.size();
    j["d"] = cc.gens.d;
    json dets = json::array();
    for (const auto& x : cc.gens.determinants) dets.push_back(x.get_str());
    j["determinants"] = dets;
    j["graph"] = graph;
    out << j.dump() << "\n";
  } else {
    out << graph;
  }
}

void cmd_decompress(const Options& o, std::ostream& out) {
  const tl::CompressedConfig cc = tl::parse_weighted_graph(read_input(o.input));
  const tl::Configuration cfg = tl::decompress(cc);
  const tl::SlackMatrix s = tl::slack_matrix(cfg);
  if (as_json(o)) {
    json j = config_as_json(cfg);
    j["slack"] = matrix_json(s.matrix);
    out << j.dump() << "\n";
  } else {
    out << tl::configuration_json(cfg) << tl::emit_matrix(s.matrix);
  }
}

void cmd_face(const Options& o, std::ostream& out) {
  if (o.dim == 0) throw UsageError("--dim must be at least 1");
  const auto b = tl::parse_int_vectors(read_input(o.b_vectors), o.dim);
  const tl::PointSet points = tl::face_points(o.dim, b);
  const tl::FaceCertificate cert = tl::certificate_encode(o.dim, points);
  if (auto store = open_store(o)) {
    const std::string text = tl::format_certificate(cert);
    const std::vector<std::uint8_t> bytes(text.begin(), text.end());
    store->put(fs::path("faces") / std::to_string(o.dim) / (tl::sha256_hex(bytes) + ".cert"), text);
  }
  if (as_json(o)) {
    json j;
    j["d"] = o.dim;
    j["points"] = points_json(points);
    j["certificate"] = cert.s;
    out << j.dump() << "\n";
  } else {
    out << "points: " << points_string(points) << "\n";
    out << "certificate: " << cert_line(cert) << "\n";
  }
}

void cmd_face_enum(const Options& o, std::ostream& out) {
  const auto faces = tl::enumerate_faces(o.dim, o.jobs);
  if (as_json(o)) {
    json j;
    j["d"] = o.dim;
    j["faces"] = faces.size();
    json list = json::array();
    for (const auto& f : faces) list.push_back(points_json(f));
    j["point_sets"] = list;
    out << j.dump() << "\n";
    return;
  }
  out << "faces: " << faces.size() << "\n";
  for (const auto& f : faces) out << points_string(f) << "\n";
}

void cmd_core(const Options& o, std::ostream& out) {
  const std::string text = read_input(o.input);
  const auto doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw tl::ParseError("invalid JSON", 0, 0);
  tl::BinaryIntegralConfiguration bic = [&] {
    if (doc.contains("gens")) return tl::to_binary_integral_configuration(tl::parse_cone_json(text));
    tl::PolytopeDescription p = tl::parse_polytope_json(text);
    if (p.ineqs.empty()) p = tl::complete_maximal_pair(p.verts);
    return tl::to_binary_integral_configuration(p);
  }();
  const tl::SlackMatrix s = tl::slack_matrix(bic.config);
  if (as_json(o)) {
    json j;
    j["core_rows"] = bic.core.row_indices;
    j["core_cols"] = bic.core.col_indices;
    j["config"] = config_as_json(bic.config);
    j["slack"] = matrix_json(s.matrix);
    out << j.dump() << "\n";
    return;
  }
  out << "core rows:";
  for (auto r : bic.core.row_indices) out << " " << r;
  out << "\ncore cols:";
  for (auto c : bic.core.col_indices) out << " " << c;
  out << "\n" << tl::configuration_json(bic.config) << tl::emit_matrix(s.matrix);
}

void cmd_stab_slack(const Options& o, std::ostream& out) {
  const tl::BipartiteGraph g = tl::parse_graph(read_input(o.input));
  const tl::SlackMatrix s = o.maximal ? tl::stab_maximal_slack(g) : tl::stab_basic_slack(g);
  if (as_json(o)) {
    json j;
    j["slack"] = matrix_json(s.matrix);
    j["canonical_sha256"] = tl::canonical_form(s.matrix).sha256();
    out << j.dump() << "\n";
  } else {
    out << tl::emit_matrix(s.matrix);
  }
}

void cmd_stab_census(const Options& o, std::ostream& out) {
  const tl::CensusReport r = tl::census(o.nodes, o.jobs);
  const std::string report = tl::census_json(r) + "\n";
  if (auto store = open_store(o)) {
    const std::vector<std::uint8_t> bytes(report.begin(), report.end());
    store->put(fs::path("census") / (tl::sha256_hex(bytes) + ".json"), report);
  }
  if (as_json(o)) {
    out << report;
    return;
  }
  out << "d: " << r.n << "\n"
      << "labeled bipartite graphs: " << r.labeled_bipartite << "\n"
      << "with min degree >= 2: " << r.min_degree_two << "\n"
      << "isomorphism classes: " << r.isomorphism_classes << "\n"
      << "distinct maximal slack forms: " << r.distinct_forms << "\n"
      << "lower bound 2^(" << tl::format_rat(r.upper_exponent) << " - 2 log2 " << r.n
      << "): " << (r.lower_holds ? "holds" : "violated") << "\n"
      << "upper bound 2^(" << tl::format_rat(r.upper_exponent) << "): " << (r.upper_holds ? "holds" : "violated")
      << "\n";
}

void cmd_report(const Options& o, std::ostream& out) {
  auto store = open_store(o);
  if (!store) throw UsageError("report needs --store or TLC_STORE");
  std::vector<tl::ReportRow> rows;
  for (std::size_t d = 1; d <= 5; ++d) {
    const auto classes = store->load_classes(d);
    if (classes.empty()) continue;
    bool complete = true;
    if (auto cp = store->get("md/" + std::to_string(d) + "/checkpoint")) {
      std::istringstream in(*cp);
      std::uint64_t done = 0;
      std::size_t cap = 0;
      in >> done >> cap;
      complete = cap + 1 >= (std::size_t{1} << d);
    }
    rows.push_back(tl::report_row(d, classes, complete));
  }
  if (as_json(o)) {
    json arr = json::array();
    for (const auto& r : rows) {
      json j;
      j["d"] = r.d;
      j["classes"] = r.classes;
      j["up_to_transpose"] = r.up_to_transpose;
      j["complete"] = r.complete;
      arr.push_back(j);
    }
    out << arr.dump() << "\n";
  } else {
    out << tl::format_report(rows);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tools for 2-level configurations and maximal rank-d 0/1 matrices", "tlc"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--store", o.store, "Result store directory")->envname("TLC_STORE");
  app.add_option("--jobs", o.jobs, "Worker threads (0: one per hardware thread)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  using Handler = void (*)(const Options&, std::ostream&);
  Handler handler = nullptr;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&handler, h] { handler = h; });
    return s;
  };

  sub("check", "Test membership in M_d and maximality of a matrix file", cmd_check)
      ->add_option("matrix", o.input)->required();
  sub("complete", "Maximal completion of a configuration or polytope JSON", cmd_complete)
      ->add_option("config", o.input)->required();
  sub("canon", "Canonical form of a matrix file", cmd_canon)->add_option("matrix", o.input)->required();
  auto* en = sub("enum", "Enumerate the maximal elements of M_d", cmd_enum);
  en->add_option("--dim", o.dim)->required()->check(CLI::Range(1, 5));
  en->add_option("--max-seed-size", o.max_seed_size, "Cap on seed size (needed at d = 5)");
  en->add_flag("--resume", o.resume, "Continue from the store checkpoint");
  sub("compress", "Compress a maximal configuration to the weighted-graph format", cmd_compress)
      ->add_option("config", o.input)->required();
  sub("decompress", "Rebuild a configuration from a weighted-graph file", cmd_decompress)
      ->add_option("graph", o.input)->required();
  auto* face = sub("face", "Face of the correlation cone cut out by integer vectors", cmd_face);
  face->add_option("--dim", o.dim)->required();
  face->add_option("--b-vectors", o.b_vectors, "File with one integer vector per line")->required();
  sub("face-enum", "Enumerate the faces of the correlation cone", cmd_face_enum)
      ->add_option("--dim", o.dim)->required()->check(CLI::Range(1, 3));
  sub("core", "Triangular core and binary/integral configuration of a polytope or cone JSON", cmd_core)
      ->add_option("polytope", o.input)->required();
  auto* ss = sub("stab-slack", "Slack matrix of the stable-set polytope of a bipartite graph", cmd_stab_slack);
  ss->add_option("graph", o.input)->required();
  ss->add_flag("--maximal", o.maximal, "Slack matrix of the maximal pair instead of the basic description");
  sub("stab-census", "Census of bipartite graphs on n nodes", cmd_stab_census)
      ->add_option("--nodes", o.nodes)->required()->check(CLI::Range(1, 7));
  sub("report", "Class counts stored under md/", cmd_report);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return static_cast<int>(Exit::Ok);
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return static_cast<int>(Exit::Ok);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(Exit::Usage);
  }

  try {
    handler(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(Exit::Usage);
  } catch (const tl::ParseError& e) {
    err << e.what() << "\n";
    return static_cast<int>(Exit::Parse);
  } catch (const tl::Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(Exit::Domain);
  }
  return static_cast<int>(Exit::Ok);
}

}  // namespace tlc
