#pragma once

// Exhaustive search over transmission orders. Two kernels share one
// contract: the serial one walks permutations with std::next_permutation,
// the OpenMP one decodes each lexicographic rank independently. Both return
// the lexicographically first order among those with the best score, so
// their results are bit-identical.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <numeric>
#include <vector>

#include "fdwpcn/errors.hpp"

namespace fdwpcn {

enum class Execution { serial, parallel };

inline constexpr std::size_t kMaxEnumerationUsers = 8;

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

// The rank-th permutation of 0..n-1 in lexicographic order.
inline std::vector<std::size_t> permutation_at(std::size_t n, std::uint64_t rank) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t k = n; k > 0; --k) {
    const std::uint64_t block = factorial(k - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

template <class T>
struct BestOrder {
  std::vector<std::size_t> order;
  T result;
  double score = -std::numeric_limits<double>::infinity();
};

// Maximises score(result) where result = evaluate(order).
template <class Evaluate, class Score>
auto best_order_serial(std::size_t n, Evaluate evaluate, Score score) {
  using Result = decltype(evaluate(std::vector<std::size_t>{}));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  BestOrder<Result> best;
  bool first = true;
  do {
    Result r = evaluate(order);
    const double s = score(r);
    if (first || s > best.score) {
      best.order = order;
      best.score = s;
      best.result = std::move(r);
      first = false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

template <class Evaluate, class Score>
auto best_order_parallel(std::size_t n, Evaluate evaluate, Score score) {
  using Result = decltype(evaluate(std::vector<std::size_t>{}));
  const auto total = static_cast<std::int64_t>(factorial(n));

  double best_score = -std::numeric_limits<double>::infinity();
  std::int64_t best_rank = -1;
  std::exception_ptr failure;
#pragma omp parallel
  {
    double local_score = -std::numeric_limits<double>::infinity();
    std::int64_t local_rank = -1;
#pragma omp for schedule(static) nowait
    for (std::int64_t rank = 0; rank < total; ++rank) {
      double s = 0.0;
      try {
        s = score(evaluate(permutation_at(n, static_cast<std::uint64_t>(rank))));
      } catch (...) {
#pragma omp critical(fdwpcn_best_order_failure)
        if (!failure) failure = std::current_exception();
        continue;
      }
      if (local_rank < 0 || s > local_score) {
        local_score = s;
        local_rank = rank;
      }
    }
#pragma omp critical(fdwpcn_best_order)
    {
      if (local_rank >= 0 &&
          (best_rank < 0 || local_score > best_score ||
           (local_score == best_score && local_rank < best_rank))) {
        best_score = local_score;
        best_rank = local_rank;
      }
    }
  }

  if (failure) std::rethrow_exception(failure);

  BestOrder<Result> best;
  best.order = permutation_at(n, static_cast<std::uint64_t>(best_rank));
  best.result = evaluate(best.order);
  best.score = best_score;
  return best;
}

template <class Evaluate, class Score>
auto best_order(std::size_t n, Execution exec, Evaluate evaluate, Score score) {
  if (n > kMaxEnumerationUsers)
    throw TooLargeError("exhaustive order search supports at most 8 users");
  if (exec == Execution::parallel) return best_order_parallel(n, evaluate, score);
  return best_order_serial(n, evaluate, score);
}

}  // namespace fdwpcn
