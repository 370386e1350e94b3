#include "twolevel/store.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "twolevel/errors.hpp"
#include "twolevel/io.hpp"

namespace tl {
namespace fs = std::filesystem;

namespace {

std::atomic<unsigned long> temp_counter{0};

}  // namespace

Store::Store(fs::path root) : root_(std::move(root)) {}

fs::path Store::write_temp(const fs::path& target, const std::string& bytes) const {
  fs::create_directories(target.parent_path());
  std::ostringstream name;
  name << "." << target.filename().string() << ".tmp." << ::getpid() << "."
       << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << temp_counter++;
  const fs::path temp = target.parent_path() / name.str();
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + temp.string());
  }
  return temp;
}

fs::path Store::put(const fs::path& relative, const std::string& bytes) const {
  const fs::path target = root_ / relative;
  const fs::path temp = write_temp(target, bytes);
  std::error_code ec;
  // A hard link publishes the file atomically and refuses to replace an existing one.
  fs::create_hard_link(temp, target, ec);
  fs::remove(temp);
  if (ec) {
    if (!fs::exists(target)) throw fs::filesystem_error("store write failed", target, ec);
    if (read_text_file(target) != bytes) {
      throw Error(ErrorCode::StoreConflict, "store key " + relative.string() + " already holds different bytes");
    }
  }
  return target;
}

void Store::overwrite(const fs::path& relative, const std::string& bytes) const {
  const fs::path target = root_ / relative;
  const fs::path temp = write_temp(target, bytes);
  fs::rename(temp, target);
}

std::optional<std::string> Store::get(const fs::path& relative) const {
  const fs::path target = root_ / relative;
  if (!fs::is_regular_file(target)) return std::nullopt;
  return read_text_file(target);
}

std::vector<fs::path> Store::list(const fs::path& relative_dir, const std::string& extension) const {
  std::vector<fs::path> out;
  const fs::path dir = root_ / relative_dir;
  if (!fs::is_directory(dir)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && !name.empty() && name[0] != '.' && entry.path().extension() == extension) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

fs::path Store::put_class(std::size_t d, const CanonicalForm& form) const {
  return put(fs::path("md") / std::to_string(d) / (form.sha256() + ".mat"), emit_matrix(form.matrix()));
}

std::vector<CanonicalForm> Store::load_classes(std::size_t d) const {
  std::vector<CanonicalForm> out;
  for (const auto& path : list(fs::path("md") / std::to_string(d), ".mat")) {
    out.push_back(canonical_form(parse_matrix(read_text_file(path))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tl
