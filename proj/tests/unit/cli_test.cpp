#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "tlc/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_tlc(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = tlc::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("tl_cli_" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path_ / name) << content;
    return (path_ / name).string();
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::string matrix_line(const std::string& out) { return out.substr(0, out.find("sha256")); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check") {
    TempDir t;
    const Result r = run_tlc({"check", t.file("m.txt", "2 2\n00\n01\n")});
    CHECK(r.code == 0);
    CHECK(r.out == "member of M_1: yes; maximal: yes\n");
    const Result sub = run_tlc({"check", t.file("s.txt", "2 1\n0\n1\n")});
    CHECK(sub.code == 0);
    CHECK(sub.out == "member of M_1: yes; maximal: no\n");
    const Result json = run_tlc({"--format", "json", "check", t.path("m.txt")});
    CHECK(json.out.find("\"maximal\":true") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    TempDir t;
    CHECK(run_tlc({}).code == 1);
    CHECK(run_tlc({"bogus"}).code == 1);
    CHECK(run_tlc({"enum", "--dim", "9"}).code == 1);
    const Result parse = run_tlc({"check", t.file("bad.txt", "1 3\n012")});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("line 2") != std::string::npos);
    const Result domain = run_tlc({"stab-slack", t.file("tri.txt", "3\n1 2\n2 3\n1 3\n")});
    CHECK(domain.code == 3);
    CHECK(domain.err.find("error: ") == 0);
    CHECK(run_tlc({"check", t.path("missing.txt")}).code != 0);
  }

  TEST_CASE("enum") {
    const Result r = run_tlc({"enum", "--dim", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classes: 2\n") != std::string::npos);
    CHECK(run_tlc({"enum", "--dim", "5"}).code == 3);
  }

  TEST_CASE("canon is invariant under permutation") {
    TempDir t;
    const Result a = run_tlc({"canon", t.file("a.txt", "3 3\n110\n011\n000\n")});
    const Result b = run_tlc({"canon", t.file("b.txt", "3 3\n000\n101\n011\n")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(matrix_line(a.out).find("3 3\n") == 0);
  }

  TEST_CASE("store round trip") {
    TempDir t;
    const std::string store = t.path("store");
    CHECK(run_tlc({"--store", store, "enum", "--dim", "2"}).code == 0);
    const Result rep = run_tlc({"--store", store, "report"});
    CHECK(rep.code == 0);
    CHECK(rep.out.find("2") != std::string::npos);
    CHECK(run_tlc({"report"}).code != 0);
  }

  TEST_CASE("stable sets") {
    TempDir t;
    const std::string g = t.file("c4.txt", "4\n1 2\n2 3\n3 4\n4 1\n");
    const Result r = run_tlc({"stab-slack", g});
    CHECK(r.code == 0);
    CHECK(r.out.find("8 7\n") != std::string::npos);
    const Result c = run_tlc({"stab-census", "--nodes", "3"});
    CHECK(c.code == 0);
    CHECK(c.out.find("7") != std::string::npos);
  }

  TEST_CASE("faces") {
    TempDir t;
    const Result r = run_tlc({"face", "--dim", "2", "--b-vectors", t.file("b.txt", "1 1\n")});
    CHECK(r.code == 0);
    CHECK(r.out.find("certificate: ") != std::string::npos);
    const Result e = run_tlc({"face-enum", "--dim", "1"});
    CHECK(e.code == 0);
    CHECK(e.out.find("faces: ") == 0);
  }

  TEST_CASE("complete and core") {
    TempDir t;
    const std::string p = t.file("sq.json", R"({"d": 2, "verts": [[0,0],[1,0],[0,1],[1,1]]})");
    const Result c = run_tlc({"complete", p});
    CHECK(c.code == 0);
    CHECK(c.out.find("6 5\n") != std::string::npos);
    const Result k = run_tlc({"core", p});
    CHECK(k.code == 0);
    CHECK(k.out.find("core rows:") == 0);
  }

  TEST_CASE("compress round trip") {
    TempDir t;
    const std::string cfg = t.file("c.json", R"({"d": 1, "A": [[0], [1]], "B": [[0], [1]]})");
    const Result c = run_tlc({"compress", cfg});
    CHECK(c.code == 0);
    const std::string w = t.file("w.txt", c.out);
    const Result d = run_tlc({"decompress", w});
    CHECK(d.code == 0);
    CHECK(d.out.find("2 2\n") != std::string::npos);
  }
}
