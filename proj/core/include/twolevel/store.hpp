#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "twolevel/canon.hpp"

namespace tl {

// Content-addressed result store. Layout: <root>/md/<d>/<sha256>.mat and
// sibling namespaces faces/, census/, compressed/.
class Store {
 public:
  explicit Store(std::filesystem::path root);

  const std::filesystem::path& root() const noexcept { return root_; }

  // Publishes bytes at root/relative without ever replacing a different
  // file: identical bytes succeed, different bytes throw StoreConflict.
  std::filesystem::path put(const std::filesystem::path& relative, const std::string& bytes) const;

  // Replaces root/relative atomically (for checkpoints and reports).
  void overwrite(const std::filesystem::path& relative, const std::string& bytes) const;

  std::optional<std::string> get(const std::filesystem::path& relative) const;

  // Files in root/relative_dir with the given extension, sorted by name.
  std::vector<std::filesystem::path> list(const std::filesystem::path& relative_dir, const std::string& extension) const;

  std::filesystem::path put_class(std::size_t d, const CanonicalForm& form) const;
  std::vector<CanonicalForm> load_classes(std::size_t d) const;

 private:
  std::filesystem::path write_temp(const std::filesystem::path& target, const std::string& bytes) const;

  std::filesystem::path root_;
};

}  // namespace tl
