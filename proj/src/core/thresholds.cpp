#include "berge/core/thresholds.hpp"

#include <string>

#include "berge/core/error.hpp"

namespace berge {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

std::int64_t degree_threshold(int n, int r) {
  if (r < 3 || r >= n) {
    throw Error(Errc::BadUniformity, "threshold needs 3 <= r < n, got n=" + std::to_string(n) +
                                         " r=" + std::to_string(r));
  }
  const int half = (n - 1) / 2;
  // Equality r == floor((n-1)/2) takes the binomial clause.
  if (r <= half) return binomial(half, r - 1) + 1;
  return r;
}

}  // namespace berge
