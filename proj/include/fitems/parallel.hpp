#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace fitems {

// Splits [0, count) into at most `jobs` contiguous chunks, evaluates
// chunk(begin, end) on worker threads and folds the partial results in chunk
// order. The fold sees the same sequence of partials for every job count
// that produces the same chunk boundaries, and `merge` must be associative,
// so results are independent of scheduling.
template <typename Result, typename ChunkFn, typename MergeFn>
Result parallel_chunks(std::uint64_t count, std::size_t jobs, ChunkFn chunk, MergeFn merge,
                       Result init) {
  jobs = std::max<std::size_t>(1, jobs);
  if (count == 0) return init;
  const std::uint64_t chunks = std::min<std::uint64_t>(jobs, count);
  if (chunks == 1) return merge(std::move(init), chunk(std::uint64_t{0}, count));

  std::vector<Result> partial(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = count * c / chunks;
      const std::uint64_t end = count * (c + 1) / chunks;
      workers.emplace_back([&, c, begin, end] {
        try {
          partial[c] = chunk(begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Result acc = std::move(init);
  for (auto& p : partial) acc = merge(std::move(acc), std::move(p));
  return acc;
}

}  // namespace fitems
