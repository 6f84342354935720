#include "unicas/exact/symmetric.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace unicas {

int CycleType::squared_length_sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0, [](int acc, int p) { return acc + p * p; });
}

namespace {

void partitions(int remaining, int max_part, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<CycleType> symmetric_class_sizes(int m) {
  if (m < 1 || m > kMaxSymmetricDegree) {
    throw std::out_of_range("symmetric group degree " + std::to_string(m) + " outside [1, " +
                            std::to_string(kMaxSymmetricDegree) + "]");
  }
  std::vector<std::vector<int>> parts;
  std::vector<int> prefix;
  partitions(m, m, prefix, parts);

  const BigInt m_factorial = factorial(static_cast<unsigned>(m));
  std::vector<CycleType> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    std::map<int, unsigned> multiplicity;
    for (int j : p) ++multiplicity[j];
    BigInt centralizer = 1;
    for (auto [j, c] : multiplicity) {
      BigInt jpow;
      mpz_ui_pow_ui(jpow.get_mpz_t(), static_cast<unsigned long>(j), c);
      centralizer *= jpow * factorial(c);
    }
    out.push_back(CycleType{std::move(p), m_factorial / centralizer});
  }
  return out;
}

}  // namespace unicas
