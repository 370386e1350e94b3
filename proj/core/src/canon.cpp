#include "twolevel/canon.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace tl {
namespace {

using Cell = std::vector<std::size_t>;
using Partition = std::vector<Cell>;

class Canonicalizer {
 public:
  explicit Canonicalizer(const BinaryMatrix& m) : m_(m) {
    row_class_ = line_classes(m_.rows(), [&](std::size_t r) { return m_.row(r); });
    col_class_ = line_classes(m_.cols(), [&](std::size_t c) { return m_.col(c); });
  }

  BinaryMatrix run() {
    Partition rows, cols;
    if (m_.rows() > 0) rows.push_back(iota(m_.rows()));
    if (m_.cols() > 0) cols.push_back(iota(m_.cols()));
    search(std::move(rows), std::move(cols));
    return best_ ? *best_ : m_;
  }

 private:
  template <typename LineFn>
  static std::vector<std::size_t> line_classes(std::size_t n, LineFn line) {
    std::map<std::vector<std::uint8_t>, std::size_t> ids;
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = ids.emplace(line(i), ids.size()).first->second;
    return out;
  }

  static Cell iota(std::size_t n) {
    Cell c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = i;
    return c;
  }

  std::uint8_t entry(bool row_side, std::size_t line, std::size_t other) const {
    return row_side ? m_(line, other) : m_(other, line);
  }

  // Splits every cell of `target` by the number of ones each line has in
  // every cell of `against`. Sub-cells are ordered by that count vector.
  bool split(Partition& target, const Partition& against, bool row_side) const {
    bool changed = false;
    Partition next;
    next.reserve(target.size());
    for (auto& cell : target) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
      keyed.reserve(cell.size());
      for (std::size_t line : cell) {
        std::vector<std::size_t> sig(against.size(), 0);
        for (std::size_t k = 0; k < against.size(); ++k)
          for (std::size_t other : against[k]) sig[k] += entry(row_side, line, other);
        keyed.emplace_back(std::move(sig), line);
      }
      std::stable_sort(keyed.begin(), keyed.end(),
                       [](const auto& x, const auto& y) { return x.first < y.first; });
      Cell current{keyed[0].second};
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) {
          next.push_back(std::move(current));
          current.clear();
          changed = true;
        }
        current.push_back(keyed[i].second);
      }
      next.push_back(std::move(current));
    }
    target = std::move(next);
    return changed;
  }

  void refine(Partition& rows, Partition& cols) const {
    for (;;) {
      const bool a = split(rows, cols, true);
      const bool b = split(cols, rows, false);
      if (!a && !b) return;
    }
  }

  static std::size_t first_open(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i].size() > 1) return i;
    return p.size();
  }

  void leaf(const Partition& rows, const Partition& cols) {
    std::vector<std::size_t> ro, co;
    for (const auto& c : rows) ro.push_back(c.front());
    for (const auto& c : cols) co.push_back(c.front());
    BinaryMatrix candidate = m_.permuted(ro, co);
    if (!best_ || candidate < *best_) best_ = std::move(candidate);
  }

  void search(Partition rows, Partition cols) {
    refine(rows, cols);
    std::size_t idx = first_open(rows);
    bool row_side = true;
    if (idx == rows.size()) {
      idx = first_open(cols);
      row_side = false;
      if (idx == cols.size()) {
        leaf(rows, cols);
        return;
      }
    }
    const Partition& side = row_side ? rows : cols;
    const auto& classes = row_side ? row_class_ : col_class_;
    const Cell cell = side[idx];
    // Identical lines are interchangeable, so one branch per distinct line suffices.
    std::set<std::size_t> seen;
    for (std::size_t v : cell) {
      if (!seen.insert(classes[v]).second) continue;
      Partition next = side;
      Cell rest;
      for (std::size_t w : cell)
        if (w != v) rest.push_back(w);
      next[idx] = Cell{v};
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(idx) + 1, std::move(rest));
      if (row_side) {
        search(std::move(next), cols);
      } else {
        search(rows, std::move(next));
      }
    }
  }

  const BinaryMatrix& m_;
  std::vector<std::size_t> row_class_;
  std::vector<std::size_t> col_class_;
  std::optional<BinaryMatrix> best_;
};

}  // namespace

std::vector<std::uint8_t> CanonicalForm::bytes() const {
  std::vector<std::uint8_t> out;
  auto put32 = [&](std::size_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
  };
  put32(matrix_.rows());
  put32(matrix_.cols());
  const auto& bits = matrix_.bits();
  std::uint8_t acc = 0;
  std::size_t filled = 0;
  for (std::uint8_t b : bits) {
    acc = static_cast<std::uint8_t>((acc << 1) | b);
    if (++filled == 8) {
      out.push_back(acc);
      acc = 0;
      filled = 0;
    }
  }
  if (filled) out.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return out;
}

std::string CanonicalForm::sha256() const { return sha256_hex(bytes()); }

std::string sha256_hex(const std::vector<std::uint8_t>& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

CanonicalForm canonical_form(const BinaryMatrix& m) { return CanonicalForm(Canonicalizer(m).run()); }

CanonicalForm canonical_form_up_to_transpose(const BinaryMatrix& m) {
  CanonicalForm a = canonical_form(m);
  CanonicalForm b = canonical_form(m.transpose());
  return a <= b ? a : b;
}

bool equivalent(const BinaryMatrix& m1, const BinaryMatrix& m2) {
  if (m1.rows() != m2.rows() || m1.cols() != m2.cols()) return false;
  return canonical_form(m1) == canonical_form(m2);
}

std::vector<CanonicalForm> dedup_classes(const std::vector<BinaryMatrix>& matrices) {
  std::set<CanonicalForm> forms;
  for (const auto& m : matrices) forms.insert(canonical_form(m));
  return {forms.begin(), forms.end()};
}

std::size_t count_up_to_transpose(const std::vector<CanonicalForm>& forms) {
  std::set<CanonicalForm> reps;
  for (const auto& f : forms) {
    CanonicalForm t = canonical_form(f.matrix().transpose());
    reps.insert(f <= t ? f : t);
  }
  return reps.size();
}

}  // namespace tl
