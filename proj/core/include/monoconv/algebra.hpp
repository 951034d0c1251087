#ifndef MONOCONV_ALGEBRA_HPP_
#define MONOCONV_ALGEBRA_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace monoconv {

using BigInt = mpz_class;

std::string to_string(const BigInt& value);

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
///
/// Serialises as "p/q", or "p" when the denominator is 1.
class BigRational {
 public:
  BigRational() = default;

  template <std::signed_integral T>
  BigRational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  BigRational(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  BigRational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  // Throws std::domain_error when denominator is zero.
  BigRational(const BigInt& numerator, const BigInt& denominator);

  // Accepts "p", "-p", "p/q"; whitespace is not allowed.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator-(const BigRational& x);
  friend BigRational operator+(BigRational lhs, const BigRational& rhs) { return lhs += rhs; }
  friend BigRational operator-(BigRational lhs, const BigRational& rhs) { return lhs -= rhs; }
  friend BigRational operator*(BigRational lhs, const BigRational& rhs) { return lhs *= rhs; }
  friend BigRational operator/(BigRational lhs, const BigRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& lhs, const BigRational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& x);

 private:
  mpq_class value_;
};

BigRational abs(const BigRational& x);
BigRational pow(const BigRational& base, unsigned exponent);

/// Dense univariate polynomial with exact rational coefficients.
///
/// coefficients()[k] is the coefficient of x^k. Trailing zeros are trimmed on
/// every operation, so the zero polynomial has no coefficients and degree -1.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<BigRational> coefficients);

  static DensePolynomial constant(const BigRational& c);
  static DensePolynomial monomial(const BigRational& c, std::size_t degree);
  // The polynomial x.
  static DensePolynomial variable();

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<BigRational>& coefficients() const { return coefficients_; }
  // Zero for k above the degree.
  BigRational coefficient(std::size_t k) const;
  BigRational leading_coefficient() const;

  // Horner evaluation.
  BigRational operator()(const BigRational& x) const;

  DensePolynomial& operator+=(const DensePolynomial& rhs);
  DensePolynomial& operator-=(const DensePolynomial& rhs);
  DensePolynomial& operator*=(const DensePolynomial& rhs);
  DensePolynomial& operator*=(const BigRational& scalar);

  friend DensePolynomial operator-(const DensePolynomial& p);
  friend DensePolynomial operator+(DensePolynomial lhs, const DensePolynomial& rhs) { return lhs += rhs; }
  friend DensePolynomial operator-(DensePolynomial lhs, const DensePolynomial& rhs) { return lhs -= rhs; }
  friend DensePolynomial operator*(DensePolynomial lhs, const DensePolynomial& rhs) { return lhs *= rhs; }
  friend DensePolynomial operator*(DensePolynomial p, const BigRational& c) { return p *= c; }
  friend DensePolynomial operator*(const BigRational& c, DensePolynomial p) { return p *= c; }
  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

  // Human-readable form in descending powers, e.g. "3/2*m^2 + 1/2*m".
  std::string to_string(std::string_view variable = "x") const;

 private:
  void trim();

  std::vector<BigRational> coefficients_;
};

struct InterpolationPoint {
  BigRational x;
  BigRational y;
};

// Newton divided differences; the result has degree <= points.size() - 1 and
// passes through every point exactly. Throws ValidationError on a repeated
// abscissa.
DensePolynomial interpolate(std::span<const InterpolationPoint> points);

}  // namespace monoconv

#endif  // MONOCONV_ALGEBRA_HPP_
