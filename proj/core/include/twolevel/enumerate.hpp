#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "twolevel/binary_matrix.hpp"
#include "twolevel/canon.hpp"
#include "twolevel/store.hpp"

namespace tl {

struct EnumerationOptions {
  unsigned jobs = 1;
  bool reverse = false;         // walk the seed list backwards
  std::size_t max_seed_size = 0;  // 0: all seeds; required (and partial) at d = 5
  const Store* store = nullptr;   // classes are written under md/<d>/
  bool resume = false;            // continue from the checkpoint in the store
};

struct EnumerationStats {
  std::uint64_t seeds = 0;        // nonzero subsets visited
  std::uint64_t spanning = 0;
  std::uint64_t degenerate = 0;   // spanning seeds whose closure does not span
  std::uint64_t completions = 0;
  std::uint64_t distinct_configs = 0;
};

struct EnumerationResult {
  std::size_t d = 0;
  std::vector<CanonicalForm> classes;  // sorted
  EnumerationStats stats;
  bool complete = true;  // false when the seed size was capped
};

// Maximal elements of M_d from maximal completions of every spanning subset
// of {0,1}^d \ {0}. d <= 4, or d = 5 with a seed size cap.
EnumerationResult enumerate_maximal(std::size_t d, const EnumerationOptions& options = {});

// Literal definition: all matrices up to max_rows x max_cols with distinct
// lines and rank d, keeping those that are no proper submatrix of another.
// d <= 2, bounds <= 4.
std::vector<CanonicalForm> oracle_maximal(std::size_t d, std::size_t max_rows, std::size_t max_cols);

// Maximality by trying every new 0/1 row and column that keeps the rank,
// with its own integer elimination. False for matrices outside M_d.
bool is_maximal_by_extension(const BinaryMatrix& m);
std::size_t integer_rank(const BinaryMatrix& m);

struct ReportRow {
  std::size_t d = 0;
  std::size_t classes = 0;
  std::size_t up_to_transpose = 0;
  bool complete = true;
};

ReportRow report_row(const EnumerationResult& r);
ReportRow report_row(std::size_t d, const std::vector<CanonicalForm>& classes, bool complete);
std::string format_report(const std::vector<ReportRow>& rows);

}  // namespace tl
