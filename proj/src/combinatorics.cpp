#include "prook/combinatorics.hpp"

#include <algorithm>
#include <numeric>

namespace prook {

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt multinomial(std::span<const int> parts) {
  BigInt result = 1;
  long running = 0;
  for (int p : parts) {
    if (p < 0) return 0;
    running += p;
    result *= binomial(running, p);
  }
  return result;
}

namespace {

void compositions_rec(int remaining, int index, std::vector<int>& current,
                      std::vector<std::vector<int>>& out) {
  if (index + 1 == static_cast<int>(current.size())) {
    current[index] = remaining;
    out.push_back(current);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    current[index] = v;
    compositions_rec(remaining - v, index + 1, current, out);
  }
}

}  // namespace

std::vector<std::vector<int>> compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  if (parts <= 0 || n < 0) {
    if (parts == 0 && n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> current(parts, 0);
  compositions_rec(n, 0, current, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return colex_less(a, b);
  });
  return out;
}

bool colex_less(std::span<const int> lhs, std::span<const int> rhs) {
  return std::lexicographical_compare(lhs.rbegin(), lhs.rend(), rhs.rbegin(),
                                      rhs.rend());
}

std::string join_bar(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace prook
