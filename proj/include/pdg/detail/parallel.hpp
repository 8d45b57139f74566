#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace pdg::detail {

// Runs fn over the items in fixed blocks of `jobs` threads and returns the
// first truthy result in item order, so parallel and sequential runs pick
// the same winner.
template <typename Item, typename Fn>
auto parallel_first(const std::vector<Item>& items, int jobs, Fn fn) -> decltype(fn(items[0])) {
  using Result = decltype(fn(items[0]));
  if (jobs <= 1) {
    for (const Item& item : items)
      if (auto r = fn(item)) return r;
    return Result{};
  }
  for (std::size_t start = 0; start < items.size(); start += static_cast<std::size_t>(jobs)) {
    const std::size_t count = std::min(items.size() - start, static_cast<std::size_t>(jobs));
    std::vector<Result> results(count);
    std::vector<std::thread> threads;
    threads.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
      threads.emplace_back([&, i] { results[i] = fn(items[start + i]); });
    for (auto& t : threads) t.join();
    for (std::size_t i = 0; i < count; ++i)
      if (results[i]) return std::move(results[i]);
  }
  return Result{};
}

}  // namespace pdg::detail
