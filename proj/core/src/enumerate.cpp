#include "twolevel/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "twolevel/configuration.hpp"
#include "twolevel/errors.hpp"
#include "twolevel/linalg.hpp"
#include "twolevel/parallel.hpp"

namespace tl {
namespace {

constexpr std::size_t kMaxFullDim = 4;
constexpr std::size_t kMaxCappedDim = 5;
constexpr std::uint64_t kCheckpointBlock = 4096;

RatVector cube_vector(std::uint32_t bits, std::size_t d) {
  RatVector v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = (bits >> (d - 1 - i)) & 1U;
  return v;
}

// Index combinations of size s from n items in lexicographic order.
void append_combinations(std::size_t n, std::size_t s, std::vector<std::vector<std::uint8_t>>& out) {
  std::vector<std::uint8_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = static_cast<std::uint8_t>(i);
  for (;;) {
    out.push_back(idx);
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = static_cast<std::uint8_t>(idx[j - 1] + 1);
  }
}

struct ChunkOutput {
  EnumerationStats stats;
  std::set<VectorSet> a_sides;
};

std::string checkpoint_path(std::size_t d) { return "md/" + std::to_string(d) + "/checkpoint"; }

}  // namespace

EnumerationResult enumerate_maximal(std::size_t d, const EnumerationOptions& options) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be at least 1");
  if (d > kMaxCappedDim) throw Error(ErrorCode::DimensionTooLarge, "enumeration supports d <= 5");
  if (d > kMaxFullDim && options.max_seed_size == 0) {
    throw Error(ErrorCode::DimensionTooLarge, "d = 5 needs a seed size cap");
  }

  // Nonzero cube points in lexicographic order; the origin constrains nothing.
  std::vector<RatVector> points;
  for (std::uint32_t bits = 1; bits < (1U << d); ++bits) points.push_back(cube_vector(bits, d));
  std::sort(points.begin(), points.end());

  const std::size_t cap = options.max_seed_size == 0 ? points.size() : std::min(options.max_seed_size, points.size());
  std::vector<std::vector<std::uint8_t>> seeds;
  for (std::size_t s = d; s <= cap; ++s) append_combinations(points.size(), s, seeds);
  if (options.reverse) std::reverse(seeds.begin(), seeds.end());

  EnumerationResult result;
  result.d = d;
  result.complete = cap == points.size();
  // Seeds with fewer than d vectors cannot span.
  for (std::size_t s = 1; s < d && s <= cap; ++s) {
    std::vector<std::vector<std::uint8_t>> tmp;
    append_combinations(points.size(), s, tmp);
    result.stats.seeds += tmp.size();
  }

  std::set<CanonicalForm> classes;
  std::set<VectorSet> a_sides;
  std::uint64_t start = 0;
  if (options.store && options.resume) {
    if (auto text = options.store->get(checkpoint_path(d))) {
      std::istringstream in(*text);
      std::uint64_t done = 0;
      std::size_t saved_cap = 0;
      bool saved_reverse = false;
      if (in >> done >> saved_cap >> saved_reverse && saved_cap == cap && saved_reverse == options.reverse &&
          done <= seeds.size()) {
        start = done;
        for (auto& f : options.store->load_classes(d)) classes.insert(std::move(f));
      }
    }
  }

  auto process = [&](std::uint64_t begin, std::uint64_t end) {
    auto chunks = parallel_map_chunks(end - begin, options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      ChunkOutput out;
      std::vector<RatVector> seed;
      for (std::uint64_t i = begin + lo; i < begin + hi; ++i) {
        ++out.stats.seeds;
        seed.clear();
        for (auto idx : seeds[i]) seed.push_back(points[idx]);
        if (!spans(seed, d)) continue;
        ++out.stats.spanning;
        VectorSet a = closure(seed);
        if (!spans(a, d)) {
          ++out.stats.degenerate;
          continue;
        }
        ++out.stats.completions;
        out.a_sides.insert(std::move(a));
      }
      return out;
    });
    std::vector<VectorSet> fresh;
    for (auto& c : chunks) {
      result.stats.seeds += c.stats.seeds;
      result.stats.spanning += c.stats.spanning;
      result.stats.degenerate += c.stats.degenerate;
      result.stats.completions += c.stats.completions;
      for (auto& a : c.a_sides)
        if (a_sides.insert(a).second) fresh.push_back(a);
    }
    auto forms = parallel_map_chunks(fresh.size(), options.jobs, [&](std::uint64_t lo, std::uint64_t hi) {
      std::vector<CanonicalForm> out;
      for (std::uint64_t i = lo; i < hi; ++i) {
        const VectorSet& a = fresh[i];
        Configuration cfg(d, a, closure(a));
        out.push_back(canonical_form(slack_matrix(cfg).matrix));
      }
      return out;
    });
    for (auto& chunk : forms)
      for (auto& f : chunk)
        if (classes.insert(f).second && options.store) options.store->put_class(d, f);
  };

  for (std::uint64_t block = start; block < seeds.size(); block += kCheckpointBlock) {
    const std::uint64_t end = std::min<std::uint64_t>(seeds.size(), block + kCheckpointBlock);
    process(block, end);
    if (options.store) {
      options.store->overwrite(checkpoint_path(d), std::to_string(end) + " " + std::to_string(cap) + " " +
                                                       std::to_string(options.reverse ? 1 : 0) + "\n");
    }
  }

  result.stats.distinct_configs = a_sides.size();
  result.classes.assign(classes.begin(), classes.end());
  return result;
}

ReportRow report_row(std::size_t d, const std::vector<CanonicalForm>& classes, bool complete) {
  return {d, classes.size(), count_up_to_transpose(classes), complete};
}

ReportRow report_row(const EnumerationResult& r) { return report_row(r.d, r.classes, r.complete); }

std::string format_report(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "d  classes  up-to-transpose  log2(classes)  d^2  d^2*log2(d)  d^2*log2(d)^3\n";
  for (const auto& r : rows) {
    const double d = static_cast<double>(r.d);
    const double lg = std::log2(d);
    out << std::left << std::setw(3) << r.d << std::setw(9) << r.classes << std::setw(17) << r.up_to_transpose
        << std::setw(15) << (r.classes ? std::log2(static_cast<double>(r.classes)) : 0.0) << std::setw(5) << r.d * r.d
        << std::setw(13) << d * d * lg << d * d * lg * lg * lg << (r.complete ? "" : "  (partial)") << "\n";
  }
  out << "counts are computed by exhaustive enumeration; exponent columns are the growth rates of the known bounds\n";
  return out.str();
}

}  // namespace tl
