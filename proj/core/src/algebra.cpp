#include "monoconv/algebra.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "monoconv/errors.hpp"

namespace monoconv {

std::string to_string(const BigInt& value) { return value.get_str(10); }

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator)
    : value_(numerator, denominator) {
  if (sgn(denominator) == 0) {
    throw std::domain_error("BigRational: zero denominator");
  }
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view digits) {
    bool ok = !digits.empty();
    std::size_t start = (!digits.empty() && digits.front() == '-') ? 1 : 0;
    if (start == digits.size()) ok = false;
    for (std::size_t i = start; ok && i < digits.size(); ++i) {
      ok = digits[i] >= '0' && digits[i] <= '9';
    }
    if (!ok) {
      throw ValidationError("not a rational literal: '" + std::string(text) + "'");
    }
    return BigInt(std::string(digits), 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_int(text));
  }
  const auto den = text.substr(slash + 1);
  if (!den.empty() && den.front() == '-') {
    throw ValidationError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  return BigRational(parse_int(text.substr(0, slash)), parse_int(den));
}

std::string BigRational::to_string() const { return value_.get_str(10); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("BigRational: division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

BigRational operator-(const BigRational& x) {
  BigRational result;
  result.value_ = -x.value_;
  return result;
}

std::ostream& operator<<(std::ostream& os, const BigRational& x) { return os << x.to_string(); }

BigRational abs(const BigRational& x) { return x.sign() < 0 ? -x : x; }

BigRational pow(const BigRational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return BigRational(num, den);
}

// ---------------------------------------------------------------------------

DensePolynomial::DensePolynomial(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

DensePolynomial DensePolynomial::constant(const BigRational& c) {
  return DensePolynomial(std::vector<BigRational>{c});
}

DensePolynomial DensePolynomial::monomial(const BigRational& c, std::size_t degree) {
  std::vector<BigRational> coefficients(degree + 1);
  coefficients[degree] = c;
  return DensePolynomial(std::move(coefficients));
}

DensePolynomial DensePolynomial::variable() { return monomial(1, 1); }

BigRational DensePolynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : BigRational{};
}

BigRational DensePolynomial::leading_coefficient() const {
  return coefficients_.empty() ? BigRational{} : coefficients_.back();
}

BigRational DensePolynomial::operator()(const BigRational& x) const {
  BigRational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) {
    coefficients_[k] += rhs.coefficients_[k];
  }
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator-=(const DensePolynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) {
    coefficients_[k] -= rhs.coefficients_[k];
  }
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator*=(const DensePolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<BigRational> product(coefficients_.size() + rhs.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j) {
      product[i + j] += coefficients_[i] * rhs.coefficients_[j];
    }
  }
  coefficients_ = std::move(product);
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator*=(const BigRational& scalar) {
  for (auto& c : coefficients_) c *= scalar;
  trim();
  return *this;
}

DensePolynomial operator-(const DensePolynomial& p) {
  DensePolynomial result = p;
  for (auto& c : result.coefficients_) c = -c;
  return result;
}

std::string DensePolynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const BigRational& c = coefficients_[k];
    if (c.is_zero()) continue;
    const BigRational magnitude = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = magnitude == BigRational(1);
    if (k == 0) {
      os << magnitude;
      continue;
    }
    if (!unit) os << magnitude << '*';
    os << variable;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

void DensePolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

DensePolynomial interpolate(std::span<const InterpolationPoint> points) {
  const std::size_t count = points.size();
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (points[i].x == points[j].x) {
        throw ValidationError("interpolate: repeated abscissa " + points[i].x.to_string());
      }
    }
  }

  // In-place divided differences: table[k] ends as f[x_0, ..., x_k].
  std::vector<BigRational> table;
  table.reserve(count);
  for (const auto& p : points) table.push_back(p.y);
  for (std::size_t order = 1; order < count; ++order) {
    for (std::size_t k = count - 1; k >= order; --k) {
      table[k] = (table[k] - table[k - 1]) / (points[k].x - points[k - order].x);
    }
  }

  // Newton form expanded by Horner: p = t0 + (x - x0)(t1 + (x - x1)(t2 + ...)).
  DensePolynomial result;
  for (std::size_t k = count; k-- > 0;) {
    result *= DensePolynomial(std::vector<BigRational>{-points[k].x, 1});
    result += DensePolynomial::constant(table[k]);
  }
  return result;
}

}  // namespace monoconv
