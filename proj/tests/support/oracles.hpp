#ifndef MONOCONV_TESTS_ORACLES_HPP_
#define MONOCONV_TESTS_ORACLES_HPP_

// Deliberately naive reference implementations. None of these call into the
// library routines they are used to check.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

namespace oracle {

using Pairing = std::vector<std::pair<int, int>>;  // 1-based (left, right)

// All perfect matchings of [2n] without crossings, by pairing the smallest
// free point with every admissible partner.
inline void matchings(std::vector<int>& free_points, Pairing& current, std::vector<Pairing>& out) {
  if (free_points.empty()) {
    out.push_back(current);
    return;
  }
  const int first = free_points.front();
  for (std::size_t k = 1; k < free_points.size(); ++k) {
    const int partner = free_points[k];
    bool crosses = false;
    for (const auto& [l, r] : current) {
      const bool inside_l = first < l && l < partner;
      const bool inside_r = first < r && r < partner;
      if (inside_l != inside_r) crosses = true;
    }
    if (crosses) continue;
    std::vector<int> rest;
    for (std::size_t j = 1; j < free_points.size(); ++j) {
      if (j != k) rest.push_back(free_points[j]);
    }
    current.emplace_back(first, partner);
    matchings(rest, current, out);
    current.pop_back();
  }
}

inline std::vector<Pairing> noncrossing_pairings(int n) {
  std::vector<int> points;
  for (int i = 1; i <= 2 * n; ++i) points.push_back(i);
  Pairing current;
  std::vector<Pairing> out;
  matchings(points, current, out);
  return out;
}

// Counts labelings into [m] by trying every label vector and checking every
// nested pair of blocks directly.
inline std::uint64_t labelings(const Pairing& pairing, int m) {
  const std::size_t k = pairing.size();
  std::vector<int> label(k, 1);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) {
      for (std::size_t b = 0; b < k && ok; ++b) {
        const bool nested = pairing[a].first < pairing[b].first &&
                            pairing[b].second < pairing[a].second;
        if (nested && label[b] < label[a]) ok = false;
      }
    }
    if (ok) ++count;
    std::size_t pos = 0;
    while (pos < k && label[pos] == m) label[pos++] = 1;
    if (pos == k) break;
    ++label[pos];
  }
  return count;
}

inline std::uint64_t nc2wmo(int m, int n) {
  std::uint64_t total = 0;
  for (const auto& p : noncrossing_pairings(n)) total += labelings(p, m);
  return total;
}

// C_{n+1} = sum C_i C_{n-i}.
inline std::vector<std::uint64_t> catalan_numbers(int max_n) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(max_n) + 1, 0);
  c[0] = 1;
  for (int n = 0; n < max_n; ++n) {
    for (int i = 0; i <= n; ++i) c[n + 1] += c[i] * c[n - i];
  }
  return c;
}

inline double semicircle_density(double x) {
  return std::abs(x) >= 2.0 ? 0.0 : std::sqrt(4.0 - x * x) / (2.0 * std::numbers::pi);
}

// Composite Simpson rule with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace oracle

#endif  // MONOCONV_TESTS_ORACLES_HPP_
