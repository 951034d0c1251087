#include "monoconv/orthopoly.hpp"

#include <string>
#include <utility>

#include "monoconv/errors.hpp"
#include "monoconv/moments.hpp"

namespace monoconv::orthopoly {

JacobiCoefficients jacobi_from_moments(std::span<const BigRational> moments, std::size_t order) {
  const std::size_t needed = 2 * order + 1;
  if (moments.size() < needed) {
    throw ValidationError("jacobi_from_moments: order " + std::to_string(order) + " needs " +
                          std::to_string(needed) + " moments, got " +
                          std::to_string(moments.size()));
  }
  for (std::size_t l = 1; l < needed; l += 2) {
    if (!moments[l].is_zero()) {
      throw ValidationError("jacobi_from_moments: odd moment m_" + std::to_string(l) +
                            " is nonzero; only symmetric sequences are supported");
    }
  }
  auto not_positive = [](std::size_t k) {
    return ValidationError("not positive definite at order " + std::to_string(k));
  };

  JacobiCoefficients jc;
  jc.alpha.assign(order + 1, BigRational{});
  if (moments[0].sign() <= 0) throw not_positive(0);
  jc.beta.push_back(moments[0]);

  // sigma rows k-2 and k-1 of the Chebyshev table, indexed by l.
  std::vector<BigRational> before(needed);
  std::vector<BigRational> previous(moments.begin(), moments.begin() + needed);
  for (std::size_t k = 1; k <= order; ++k) {
    std::vector<BigRational> current(needed);
    for (std::size_t l = k; l + k < needed; ++l) {
      current[l] = previous[l + 1] - jc.beta[k - 1] * before[l];
    }
    if (current[k].sign() <= 0) throw not_positive(k);
    jc.beta.push_back(current[k] / previous[k - 1]);
    before = std::move(previous);
    previous = std::move(current);
  }
  return jc;
}

std::vector<MonicPolynomial> monic_orthogonal_polys(const JacobiCoefficients& jc,
                                                    std::size_t n_max) {
  if (n_max > 0 && jc.beta.size() < n_max) {
    throw ValidationError("monic_orthogonal_polys: need beta through index " +
                          std::to_string(n_max - 1));
  }
  std::vector<MonicPolynomial> polys;
  polys.push_back(DensePolynomial::constant(1));
  if (n_max == 0) return polys;
  const DensePolynomial x = DensePolynomial::variable();
  polys.push_back(x - DensePolynomial::constant(jc.alpha.at(0)));
  for (std::size_t n = 1; n < n_max; ++n) {
    polys.push_back((x - DensePolynomial::constant(jc.alpha.at(n))) * polys[n] -
                    jc.beta[n] * polys[n - 1]);
  }
  return polys;
}

BigRational moment_functional(const DensePolynomial& p, std::span<const BigRational> moments) {
  if (p.degree() >= static_cast<int>(moments.size())) {
    throw ValidationError("moment_functional: degree " + std::to_string(p.degree()) +
                          " exceeds the available moments");
  }
  BigRational total;
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    total += p.coefficients()[k] * moments[k];
  }
  return total;
}

OrthogonalityReport verify_orthogonality(std::span<const MonicPolynomial> polys,
                                         std::span<const BigRational> moments,
                                         const JacobiCoefficients* jacobi) {
  OrthogonalityReport report;
  BigRational expected = 1;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      ++report.pairs_checked;
      BigRational value = moment_functional(polys[i] * polys[j], moments);
      if (!value.is_zero()) report.nonzero.push_back({i, j, std::move(value)});
    }
    report.norms.push_back(moment_functional(polys[i] * polys[i], moments));
    if (jacobi != nullptr && i < jacobi->beta.size()) {
      expected *= jacobi->beta[i];
      if (report.norms.back() != expected) {
        report.norm_mismatches.push_back({i, report.norms.back(), expected});
      }
    }
  }
  return report;
}

std::vector<BigRational> hankel_leading_minors(std::span<const BigRational> moments,
                                               std::size_t size) {
  if (size == 0) return {};
  if (moments.size() < 2 * size - 1) {
    throw ValidationError("hankel_leading_minors: need " + std::to_string(2 * size - 1) +
                          " moments");
  }
  std::vector<BigRational> minors;
  for (std::size_t k = 1; k <= size; ++k) {
    std::vector<std::vector<BigRational>> a(k, std::vector<BigRational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) a[i][j] = moments[i + j];
    }
    BigRational det = 1;
    for (std::size_t col = 0; col < k && !det.is_zero(); ++col) {
      std::size_t pivot = col;
      while (pivot < k && a[pivot][col].is_zero()) ++pivot;
      if (pivot == k) {
        det = 0;
        break;
      }
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        det = -det;
      }
      det *= a[col][col];
      for (std::size_t r = col + 1; r < k; ++r) {
        if (a[r][col].is_zero()) continue;
        const BigRational factor = a[r][col] / a[col][col];
        for (std::size_t c = col; c < k; ++c) a[r][c] -= factor * a[col][c];
      }
    }
    minors.push_back(std::move(det));
  }
  return minors;
}

std::vector<BigRational> full_moments(std::size_t m, std::size_t max_n) {
  const auto even = moments::moments_general(m, max_n);
  std::vector<BigRational> out(2 * max_n + 1);
  for (std::size_t n = 0; n <= max_n; ++n) out[2 * n] = even[n];
  return out;
}

}  // namespace monoconv::orthopoly
