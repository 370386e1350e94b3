#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace tl {

// 0 means one worker per hardware thread.
unsigned resolve_jobs(unsigned jobs);

// Splits [0, total) into contiguous chunks, runs fn(begin, end) on up to
// `jobs` threads and returns the results in chunk order, so the caller sees
// the same sequence for every job count.
template <typename Fn>
auto parallel_map_chunks(std::uint64_t total, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::uint64_t{}, std::uint64_t{}))> {
  using Result = decltype(fn(std::uint64_t{}, std::uint64_t{}));
  const unsigned workers = resolve_jobs(jobs);
  const std::uint64_t chunk_count = total == 0 ? 0 : std::min<std::uint64_t>(total, std::uint64_t{workers} * 8);
  std::vector<Result> results(chunk_count);
  if (chunk_count == 0) return results;
  auto bounds = [&](std::uint64_t i) { return total * i / chunk_count; };
  if (workers == 1) {
    for (std::uint64_t i = 0; i < chunk_count; ++i) results[i] = fn(bounds(i), bounds(i + 1));
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < chunk_count; i += workers) results[i] = fn(bounds(i), bounds(i + 1));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace tl
